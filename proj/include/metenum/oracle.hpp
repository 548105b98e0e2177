#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "metenum/graph.hpp"
#include "metenum/hypergraph.hpp"
#include "metenum/metric.hpp"

namespace metenum {

// Evaluator over subsets of {0..ground-1}; `monotone` promises upward closure.
struct MonotonePredicate {
  std::size_t ground = 0;
  std::function<bool(const VertexSet&)> holds;
  bool monotone = true;
};

// Direct definitions, computed from distances only.
MonotonePredicate transversal_predicate(const Hypergraph& h);
MonotonePredicate resolving_predicate(const Graph& g);
MonotonePredicate geodetic_predicate(const Graph& g);
MonotonePredicate strong_resolving_predicate(const Graph& g);

// Random subset pairs S <= S' with p(S) must give p(S'); returns false on a violation.
bool spot_check_monotone(const MonotonePredicate& p, std::mt19937_64& rng, int samples = 200);

// Every inclusion-minimal S with p(S), by ascending-size scan; canonical order.
std::vector<VertexSet> brute_minimal_solutions(const MonotonePredicate& p, std::size_t limit = 20);

// Minimal consistent node sets hitting every edge of ph, found by scanning the
// pair families of all vertex subsets; canonical order of node sets.
std::vector<VertexSet> brute_minimal_consistent_transversals(const PairHypergraph& ph,
                                                             std::size_t limit = 10);

// Calls f on every subset of `pool` in ascending size, lexicographic within a size,
// until f returns false.
void for_each_subset_ascending(const std::vector<Vertex>& pool, std::size_t universe,
                               const std::function<bool(const VertexSet&)>& f);

}  // namespace metenum

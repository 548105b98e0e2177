#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "metenum/graph.hpp"
#include "metenum/hypergraph.hpp"
#include "metenum/stream.hpp"
#include "metenum/vertex_set.hpp"

namespace metenum::testing {

inline std::vector<VertexSet> family(std::size_t n, const std::vector<std::vector<Vertex>>& lists) {
  std::vector<VertexSet> out;
  for (const auto& l : lists) out.emplace_back(n, std::span<const Vertex>(l));
  sort_canonical(out);
  return out;
}

inline std::vector<VertexSet> sorted(std::vector<VertexSet> sets) {
  sort_canonical(sets);
  return sets;
}

inline std::vector<VertexSet> sorted(SolutionStream&& stream) { return sorted(collect(stream)); }

inline bool is_antichain(const std::vector<VertexSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[i].is_subset_of(sets[j])) return false;
  return true;
}

// a-b-c path
inline Graph p3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
inline Graph c4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline Graph complete(std::size_t n) {
  GraphBuilder b(n);
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  b.make_clique(all);
  return std::move(b).build();
}
// Triangle a, b, c with d pendant at c.
inline Graph triangle_pendant() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}); }

// Edge lists of the two golden hypergraphs, 0-based.
inline Hypergraph h1() {
  return Hypergraph::from_lists(8, {{0, 1}, {1, 2, 3}, {2, 4}, {3, 4, 5, 6, 7}});
}
inline Hypergraph h2() { return Hypergraph::from_lists(6, {{0, 1}, {1, 2, 3}, {2, 4}, {3, 4, 5}}); }

inline std::vector<VertexSet> tr_h2() {
  return family(6, {{1, 4}, {0, 2, 3}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {1, 2, 3}, {1, 2, 5}});
}

// Random spanning tree plus independent extra edges with probability p.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  GraphBuilder b(n);
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    b.add_edge(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution extra(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (extra(rng)) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  GraphBuilder b(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

// Random split graph: clique on the first k vertices, the rest independent.
inline Graph random_split_graph(std::mt19937_64& rng, std::size_t n, std::size_t k, double p) {
  GraphBuilder b(n);
  std::vector<Vertex> clique;
  for (std::size_t i = 0; i < k; ++i) clique.push_back(static_cast<Vertex>(i));
  b.make_clique(clique);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<std::size_t> any(0, k - 1);
  for (std::size_t v = k; v < n; ++v) {
    bool linked = false;
    for (std::size_t u = 0; u < k; ++u) {
      if (coin(rng)) {
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        linked = true;
      }
    }
    if (!linked) b.add_edge(static_cast<Vertex>(any(rng)), static_cast<Vertex>(v));
  }
  return std::move(b).build();
}

// Non-empty edges, each vertex in an edge with probability p.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m, double p) {
  Hypergraph h(n);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Vertex> any(0, static_cast<Vertex>(n) - 1);
  for (std::size_t j = 0; j < m; ++j) {
    VertexSet e(n);
    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v)
      if (coin(rng)) e.insert(v);
    if (e.empty()) e.insert(any(rng));
    h.add_edge(std::move(e));
  }
  return h;
}

}  // namespace metenum::testing

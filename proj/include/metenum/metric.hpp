#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "metenum/enumerate.hpp"
#include "metenum/graph.hpp"
#include "metenum/hypergraph.hpp"
#include "metenum/stream.hpp"

namespace metenum {

// A vertex pair (x, y) or, for geodetic witnesses, a single vertex (y == -1).
struct Witness {
  Vertex x = -1;
  Vertex y = -1;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SolutionClass {
  enum class Kind { kNotSolution, kNotMinimal, kMinimal };
  Kind kind = Kind::kNotSolution;
  Witness missing;                       // kNotSolution
  Vertex removable = -1;                 // kNotMinimal: highest-index removable member
  std::vector<Witness> member_witnesses; // kMinimal: one per member, ascending
};

// --- resolving sets ---------------------------------------------------------

// One edge {v : dist(a,v) != dist(b,v)} per pair a < b, lexicographic; duplicate
// edges are kept.
Hypergraph distinguishing_hypergraph(const Graph& g);
Hypergraph distinguishing_hypergraph(const DistanceMatrix& d);

SolutionStream enumerate_minimal_resolving_sets(const Graph& g, Engine engine = Engine::kDfsHittingSet);
SolutionClass classify_resolving(const Graph& g, const VertexSet& s);
SolutionClass classify_resolving(const DistanceMatrix& d, const VertexSet& s);

// --- geodetic sets ----------------------------------------------------------

// Nodes are the pairs {i, j}, i < j, indexed canonically; edge E_v holds the pairs
// covering v.
class PairHypergraph {
 public:
  explicit PairHypergraph(const Graph& g);

  std::size_t vertex_count() const { return n_; }
  std::size_t node_count() const { return n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }
  std::size_t node_index(Vertex x, Vertex y) const;
  std::pair<Vertex, Vertex> node(std::size_t index) const { return nodes_[index]; }
  const VertexSet& edge(Vertex v) const { return edges_[static_cast<std::size_t>(v)]; }

  // Node set of all pairs inside s.
  VertexSet pair_family(const VertexSet& s) const;
  bool is_transversal(const VertexSet& node_set) const;
  // Union of the pairs in node_set.
  VertexSet vertex_union(const VertexSet& node_set) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> nodes_;
  std::vector<VertexSet> edges_;
};

PairHypergraph pair_cover_hypergraph(const Graph& g);

// True iff the pairs are exactly all pairs of their union.
bool is_consistent(const std::vector<std::pair<Vertex, Vertex>>& pairs);
bool is_consistent(const PairHypergraph& ph, const VertexSet& node_set);

struct SplitGeodeticReduction {
  VertexSet mandatory;  // the independent side, contained in every geodetic set
  Hypergraph hypergraph;  // over V(G), edges inside the clique side
};

SplitGeodeticReduction split_geodetic_hypergraph(const Graph& g, const SplitPartition& p);

struct GeodeticOptions {
  std::size_t size_limit = 20;  // general (non-split) path only
  Engine engine = Engine::kDfsHittingSet;
};

SolutionStream enumerate_minimal_geodetic_sets(const Graph& g, GeodeticOptions options = {});
SolutionClass classify_geodetic(const Graph& g, const VertexSet& s);

// Vertices whose neighborhood is a clique; they lie inside no shortest path.
VertexSet simplicial_vertices(const Graph& g);

// --- strong resolving sets --------------------------------------------------

// Edge uv iff u and v are mutually maximally distant.
Graph mmd_graph(const Graph& g);
SolutionStream enumerate_minimal_strong_resolving_sets(const Graph& g);
SolutionClass classify_strong_resolving(const Graph& g, const VertexSet& s);

}  // namespace metenum

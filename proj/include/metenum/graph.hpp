#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metenum/vertex_set.hpp"

namespace metenum {

// Simple undirected graph on 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Rejects out-of-range endpoints and self-loops; duplicate pairs collapse.
  static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t n() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  const VertexSet& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  VertexSet closed_neighbors(Vertex v) const { return VertexSet(neighbors(v)).insert(v); }

  // Edges (u, v) with u < v, lexicographic.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_connected() const;
  bool is_clique(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adjacency_;
};

// Mutable construction helper used by the gadget builders.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : graph_(n) {}

  void add_edge(Vertex u, Vertex v);
  void make_clique(const std::vector<Vertex>& vs);
  void make_complete(const std::vector<Vertex>& a, const std::vector<Vertex>& b);
  void make_complete(Vertex a, const std::vector<Vertex>& b);

  Graph build() && { return std::move(graph_); }

 private:
  Graph graph_;
};

using Distance = int;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kUnreachable) {}

  std::size_t n() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
  Distance& at(Vertex u, Vertex v) { return dist_[index(u, v)]; }
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// v lies on some shortest x-y path.
bool on_shortest_path(const DistanceMatrix& d, Vertex x, Vertex v, Vertex y);

enum class TwinKind { kSingleton, kFalseTwins, kTrueTwins };

struct TwinClass {
  TwinKind kind = TwinKind::kSingleton;
  std::vector<Vertex> members;  // ascending
};

// Classes ordered by their lowest member.
std::vector<TwinClass> twin_classes(const Graph& g);

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

// Split partition with |independent| maximum, or nullopt when g is not split.
std::optional<SplitPartition> split_partition_max_independent(const Graph& g);

// Text format: "p edge <n> <m>", "e <u> <v>" (1-based), "c ..." comments.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

}  // namespace metenum

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "metenum/vertex_set.hpp"

namespace metenum {

// Vertex universe 0..n-1 and an ordered list of edges. Edge order is significant:
// the reductions index gadget vertices by edge position.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n) : n_(n) {}
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);
  // Convenience for literals; members are 0-based.
  static Hypergraph from_lists(std::size_t n, const std::vector<std::vector<Vertex>>& edges);

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const VertexSet& edge(std::size_t j) const { return edges_[j]; }
  const std::vector<VertexSet>& edges() const { return edges_; }

  void add_edge(VertexSet e);
  bool has_empty_edge() const;
  bool is_transversal(const VertexSet& t) const;
  // No edge is a proper subset of another; duplicates are tolerated.
  bool is_sperner_up_to_duplicates() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
};

struct TransversalClass {
  enum class Kind { kNotTransversal, kNotMinimal, kMinimal };
  Kind kind = Kind::kNotTransversal;
  std::size_t missed_edge = 0;               // kNotTransversal
  Vertex removable = -1;                     // kNotMinimal
  std::vector<std::size_t> private_edges;    // kMinimal, one per member in ascending order
};

TransversalClass classify_transversal(const Hypergraph& h, const VertexSet& t);

// Keeps the inclusion-minimal edges (first occurrence of duplicates), in order.
Hypergraph sperner_reduce(const Hypergraph& h);

struct PeelResult {
  Hypergraph residual;          // same universe; peeled vertices removed from every edge
  std::vector<Vertex> peeled;   // outermost first
};

// Repeatedly strips a vertex contained in every edge (lowest index first). Edges that
// become empty are kept, so a residual with an empty edge contributes no transversal.
PeelResult peel_universal_vertices(const Hypergraph& h);

// Tr(H) = {{p1}} u {{p2}} u ... u Tr(residual).
std::vector<VertexSet> reconstruct_transversals(const PeelResult& peel,
                                                std::vector<VertexSet> residual_transversals);

// Adds isolated vertices until n is a power of two >= 4 and copies of the first edge
// until m is a power of two >= 4.
Hypergraph pad_for_resolving_reduction(const Hypergraph& h);

struct ExtSource {
  Hypergraph hypergraph;
  VertexSet include;  // A
  VertexSet exclude;  // B
};

// Pads so that n+1 and m+1 are powers of two, n and m are at least 3, and the last edge is {v_n} with v_n a
// fresh dummy vertex outside A and B.
ExtSource pad_for_ext_resolving_reduction(const ExtSource& source);
bool conforms_to_ext_resolving(const ExtSource& source);

// `.hg` text: optional "p hg <n> <m>", one edge per line (1-based), '#' comments.
Hypergraph parse_hypergraph(std::string_view text);
std::string write_hypergraph(const Hypergraph& h);

}  // namespace metenum

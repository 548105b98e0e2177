#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "metenum/graph.hpp"
#include "metenum/hypergraph.hpp"
#include "metenum/stream.hpp"

namespace metenum {

enum class RoleKind {
  kV,          // v_i, hypergraph vertex
  kH,          // e_j, hyperedge
  kHPrime,     // e'_j, twin copy of e_j
  kU,          // u_k
  kUPrime,     // u'_k
  kUStar,      // u*_i
  kW,          // w_k
  kWPrime,     // w'_k
  kA,
  kB,
  kC,
  kEStar,      // e*
  kUUniversal, // u*, the universal vertex of the split construction
};

// Indexed roles carry a 1-based index; singleton roles use 0.
struct Role {
  RoleKind kind = RoleKind::kV;
  int index = 0;
  friend auto operator<=>(const Role&, const Role&) = default;
};

// "v3", "e'2", "u*1", "w'4", "a", "e*", "u*".
std::string role_name(const Role& role);

enum class ReductionKind { kResolving, kGeodeticSplit, kExtGeodetic, kExtResolving };

const char* to_string(ReductionKind kind);

// A gadget graph together with the role of every vertex and the hypergraph it encodes.
class ReductionArtifact {
 public:
  ReductionArtifact(ReductionKind kind, Graph graph, std::vector<Role> roles, Hypergraph source);

  ReductionKind kind() const { return kind_; }
  const Graph& graph() const { return graph_; }
  const Hypergraph& source() const { return source_; }
  const Role& role(Vertex v) const { return roles_[static_cast<std::size_t>(v)]; }
  const std::vector<Role>& roles() const { return roles_; }

  // Throws kInvalidInput when no vertex carries the role.
  Vertex vertex(RoleKind kind, int index = 0) const;
  bool has(RoleKind kind, int index = 0) const;
  // All vertices of one role kind, by ascending index.
  VertexSet vertices_of(RoleKind kind) const;

 private:
  ReductionKind kind_;
  Graph graph_;
  std::vector<Role> roles_;
  Hypergraph source_;
  std::map<Role, Vertex> by_role_;
};

// 1-based positions of the set bits of x: I(5) = {1, 3}.
std::vector<int> binary_code(std::size_t x);

// --- Trans-Enum to MinResolving ---------------------------------------------

// Requires n, m powers of two >= 4, Sperner up to duplicates, no empty edge and no
// edge equal to the universe (see pad_for_resolving_reduction).
ReductionArtifact build_minresolving_instance(const Hypergraph& h);

struct DecodedSolution {
  enum class Kind { kGarbageResolving, kTransversalResolving, kGarbageGeodetic, kTransversalGeodetic };
  Kind kind = Kind::kTransversalResolving;
  VertexSet z;            // resolving kinds: one vertex of every twin pair
  Vertex extra = -1;      // kGarbageResolving: the e_j or e'_j vertex
  VertexSet transversal;  // transversal kinds: over the source universe
  int garbage_index = 0;  // kGarbageGeodetic: j of u_j, 1-based
};

DecodedSolution decode_minresolving_solution(const ReductionArtifact& r, const VertexSet& s);

struct PipelineStats {
  std::size_t inner_solutions = 0;
  std::size_t garbage = 0;
  std::size_t duplicates = 0;
};

// Decodes the resolver's output, keeps the first copy of every transversal, and
// regularizes the output when budget > 0.
SolutionStream transenum_via_minresolving(const ReductionArtifact& r, SolutionStream resolver,
                                          std::uint64_t budget = 0,
                                          std::shared_ptr<PipelineStats> stats = nullptr);
// Pads h, builds the gadget and enumerates it; transversals are over h's universe.
SolutionStream transenum_via_minresolving(const Hypergraph& h, std::uint64_t budget = 0,
                                          std::shared_ptr<PipelineStats> stats = nullptr);

// --- Trans-Enum to MinGeodetic on split graphs ------------------------------

// Requires n, m >= 1, no empty edge and no vertex lying in every edge.
ReductionArtifact build_mingeodetic_instance(const Hypergraph& h);
// The independent side H u {e*}.
VertexSet mingeodetic_mandatory(const ReductionArtifact& r);
DecodedSolution decode_mingeodetic_solution(const ReductionArtifact& r, const VertexSet& s);

SolutionStream transenum_via_mingeodetic(const ReductionArtifact& r, SolutionStream geodetic,
                                         std::shared_ptr<PipelineStats> stats = nullptr);
SolutionStream transenum_via_mingeodetic(const Hypergraph& h,
                                         std::shared_ptr<PipelineStats> stats = nullptr);

// --- extension problems -----------------------------------------------------

struct ExtInstance {
  ReductionArtifact artifact;
  VertexSet include;  // A'
  VertexSet exclude;  // B'
  ExtSource source;
};

// Requires A and B disjoint, n, m >= 1, and V(H) not a minimal transversal.
ExtInstance build_ext_geodetic_instance(const ExtSource& source);
// Requires conforms_to_ext_resolving(source) and A, B disjoint.
ExtInstance build_ext_resolving_instance(const ExtSource& source);

struct ExtAnswer {
  bool yes = false;
  VertexSet witness;
};

enum class ExtKind { kTransversal, kResolving, kGeodetic };

// Brute force over the free vertices (outside A and B): the first minimal solution S
// with A <= S and S disjoint from B, by ascending size.
ExtAnswer ext_check_transversal(const ExtSource& source, std::size_t limit = 24);
ExtAnswer ext_check(const ExtInstance& instance, std::size_t limit = 24);
ExtAnswer ext_check(ExtKind kind, const Graph& g, const VertexSet& include, const VertexSet& exclude,
                    std::size_t limit = 24);

}  // namespace metenum

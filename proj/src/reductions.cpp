#include "metenum/reductions.hpp"

#include <bit>
#include <functional>
#include <unordered_set>

#include "metenum/error.hpp"
#include "metenum/metric.hpp"
#include "metenum/oracle.hpp"

namespace metenum {

namespace {

// Assigns consecutive vertex ids to roles as the gadget is laid out.
class Layout {
 public:
  Vertex add(RoleKind kind, int index = 0) {
    roles_.push_back({kind, index});
    return static_cast<Vertex>(roles_.size() - 1);
  }
  std::vector<Vertex> add_block(RoleKind kind, std::size_t count) {
    std::vector<Vertex> block;
    for (std::size_t i = 1; i <= count; ++i) block.push_back(add(kind, static_cast<int>(i)));
    return block;
  }
  std::size_t size() const { return roles_.size(); }
  std::vector<Role> take() && { return std::move(roles_); }

 private:
  std::vector<Role> roles_;
};

std::size_t log2_exact(std::size_t x) { return static_cast<std::size_t>(std::countr_zero(x)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kPreconditionViolation, what);
}

void require_disjoint(const VertexSet& a, const VertexSet& b) {
  require(!a.intersects(b), "include and exclude sets must be disjoint");
}

const char* role_prefix(RoleKind kind) {
  switch (kind) {
    case RoleKind::kV: return "v";
    case RoleKind::kH: return "e";
    case RoleKind::kHPrime: return "e'";
    case RoleKind::kU: return "u";
    case RoleKind::kUPrime: return "u'";
    case RoleKind::kUStar: return "u*";
    case RoleKind::kW: return "w";
    case RoleKind::kWPrime: return "w'";
    case RoleKind::kA: return "a";
    case RoleKind::kB: return "b";
    case RoleKind::kC: return "c";
    case RoleKind::kEStar: return "e*";
    case RoleKind::kUUniversal: return "u*";
  }
  return "?";
}

}  // namespace

std::string role_name(const Role& role) {
  std::string name = role_prefix(role.kind);
  if (role.index > 0) name += std::to_string(role.index);
  return name;
}

const char* to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kResolving: return "resolving";
    case ReductionKind::kGeodeticSplit: return "geodetic";
    case ReductionKind::kExtGeodetic: return "ext-geodetic";
    case ReductionKind::kExtResolving: return "ext-resolving";
  }
  return "?";
}

ReductionArtifact::ReductionArtifact(ReductionKind kind, Graph graph, std::vector<Role> roles,
                                     Hypergraph source)
    : kind_(kind), graph_(std::move(graph)), roles_(std::move(roles)), source_(std::move(source)) {
  if (roles_.size() != graph_.n()) {
    throw Error(ErrorCode::kInvalidInput, "role map must cover every gadget vertex");
  }
  for (std::size_t v = 0; v < roles_.size(); ++v) {
    if (!by_role_.emplace(roles_[v], static_cast<Vertex>(v)).second) {
      throw Error(ErrorCode::kInvalidInput, "role " + role_name(roles_[v]) + " assigned twice");
    }
  }
}

Vertex ReductionArtifact::vertex(RoleKind kind, int index) const {
  const auto it = by_role_.find({kind, index});
  if (it == by_role_.end()) {
    throw Error(ErrorCode::kInvalidInput, "no vertex with role " + role_name({kind, index}));
  }
  return it->second;
}

bool ReductionArtifact::has(RoleKind kind, int index) const {
  return by_role_.contains({kind, index});
}

VertexSet ReductionArtifact::vertices_of(RoleKind kind) const {
  VertexSet out(graph_.n());
  for (std::size_t v = 0; v < roles_.size(); ++v) {
    if (roles_[v].kind == kind) out.insert(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<int> binary_code(std::size_t x) {
  std::vector<int> bits;
  for (int k = 1; x != 0; ++k, x >>= 1) {
    if (x & 1) bits.push_back(k);
  }
  return bits;
}

// --- Trans-Enum to MinResolving ---------------------------------------------

ReductionArtifact build_minresolving_instance(const Hypergraph& h) {
  const auto n = h.n();
  const auto m = h.m();
  require(n >= 4 && std::has_single_bit(n), "n must be a power of two >= 4, got " + std::to_string(n));
  require(m >= 4 && std::has_single_bit(m), "m must be a power of two >= 4, got " + std::to_string(m));
  require(!h.has_empty_edge(), "hypergraph has an empty edge");
  require(h.is_sperner_up_to_duplicates(), "hypergraph is not Sperner");
  for (std::size_t j = 0; j < m; ++j) {
    require(h.edge(j).size() < n, "edge " + std::to_string(j + 1) + " equals the vertex set");
  }

  const auto lu = log2_exact(n) + 1;
  const auto lw = log2_exact(m) + 1;
  Layout layout;
  const auto vs = layout.add_block(RoleKind::kV, n);
  const auto hs = layout.add_block(RoleKind::kH, m);
  const auto hps = layout.add_block(RoleKind::kHPrime, m);
  std::vector<Vertex> u(lu + 1), up(lu + 1), w(lw + 1), wp(lw + 1);
  for (std::size_t k = 1; k <= lu; ++k) {
    u[k] = layout.add(RoleKind::kU, static_cast<int>(k));
    up[k] = layout.add(RoleKind::kUPrime, static_cast<int>(k));
  }
  for (std::size_t k = 1; k <= lw; ++k) {
    w[k] = layout.add(RoleKind::kW, static_cast<int>(k));
    wp[k] = layout.add(RoleKind::kWPrime, static_cast<int>(k));
  }

  GraphBuilder b(layout.size());
  b.make_clique(vs);
  b.make_clique(hs);
  b.make_clique(hps);
  b.make_complete(hps, vs);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!h.edge(j).contains(static_cast<Vertex>(i))) b.add_edge(vs[i], hs[j]);
    }
  }
  std::vector<Vertex> all_u;
  for (std::size_t k = 1; k <= lu; ++k) {
    all_u.push_back(u[k]);
    all_u.push_back(up[k]);
  }
  for (std::size_t k = 1; k <= lu; ++k) {
    for (std::size_t l = k + 1; l <= lu; ++l) {
      b.add_edge(u[k], u[l]);
      b.add_edge(u[k], up[l]);
      b.add_edge(up[k], u[l]);
      b.add_edge(up[k], up[l]);
    }
  }
  for (std::size_t k = 1; k <= lw; ++k) b.add_edge(w[k], wp[k]);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k : binary_code(i + 1)) {
      b.add_edge(vs[i], u[static_cast<std::size_t>(k)]);
      b.add_edge(vs[i], up[static_cast<std::size_t>(k)]);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (int k : binary_code(j + 1)) {
      for (Vertex e : {hs[j], hps[j]}) {
        b.add_edge(e, w[static_cast<std::size_t>(k)]);
        b.add_edge(e, wp[static_cast<std::size_t>(k)]);
      }
    }
  }
  b.make_complete(all_u, hs);
  b.make_complete(all_u, hps);
  for (std::size_t k = 1; k <= lw; ++k) {
    b.make_complete(w[k], vs);
    b.make_complete(wp[k], vs);
  }
  return ReductionArtifact(ReductionKind::kResolving, std::move(b).build(), std::move(layout).take(), h);
}

DecodedSolution decode_minresolving_solution(const ReductionArtifact& r, const VertexSet& s) {
  if (r.kind() != ReductionKind::kResolving) {
    throw Error(ErrorCode::kInvalidInput, "artifact is not a resolving reduction");
  }
  const auto fail = [](const std::string& what) { return Error(ErrorCode::kDecodeFailure, what); };
  DecodedSolution out;
  out.z = VertexSet(r.graph().n());
  for (auto [first, second] : {std::pair{RoleKind::kU, RoleKind::kUPrime}, std::pair{RoleKind::kW, RoleKind::kWPrime}}) {
    for (int k = 1; r.has(first, k); ++k) {
      const Vertex a = r.vertex(first, k);
      const Vertex b = r.vertex(second, k);
      if (s.contains(a) == s.contains(b)) {
        throw fail("solution must contain exactly one of " + role_name({first, k}) + ", " +
                   role_name({second, k}));
      }
      out.z.insert(s.contains(a) ? a : b);
    }
  }
  const VertexSet edge_side = (r.vertices_of(RoleKind::kH) | r.vertices_of(RoleKind::kHPrime)) & s;
  const VertexSet on_v = r.vertices_of(RoleKind::kV) & s;
  if (!edge_side.empty()) {
    if (edge_side.size() != 1 || !on_v.empty()) {
      throw fail("a solution meeting H or H' must be Z plus a single edge vertex");
    }
    out.kind = DecodedSolution::Kind::kGarbageResolving;
    out.extra = edge_side.first();
    return out;
  }
  if ((out.z | on_v) != s) throw fail("solution has vertices outside V and the twin gadgets");
  out.kind = DecodedSolution::Kind::kTransversalResolving;
  out.transversal = VertexSet(r.source().n());
  on_v.for_each([&](Vertex v) { out.transversal.insert(r.role(v).index - 1); });
  return out;
}

namespace {

Generator<Step> minresolving_pipeline(ReductionArtifact r, SolutionStream resolver,
                                      std::shared_ptr<PipelineStats> stats, std::size_t universe) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  while (auto event = resolver.step()) {
    if (event->ticks) co_yield Step::work(event->ticks);
    if (!event->solution) continue;
    if (stats) ++stats->inner_solutions;
    auto decoded = decode_minresolving_solution(r, *event->solution);
    co_yield Step::work();
    if (decoded.kind == DecodedSolution::Kind::kGarbageResolving) {
      if (stats) ++stats->garbage;
      continue;
    }
    auto t = decoded.transversal.resized(universe);
    if (!seen.insert(t).second) {
      if (stats) ++stats->duplicates;
      continue;
    }
    co_yield Step::emit(std::move(t));
  }
}

}  // namespace

SolutionStream transenum_via_minresolving(const ReductionArtifact& r, SolutionStream resolver,
                                          std::uint64_t budget, std::shared_ptr<PipelineStats> stats) {
  SolutionStream out(minresolving_pipeline(r, std::move(resolver), std::move(stats), r.source().n()));
  if (budget > 0) return regularize_delay(std::move(out), budget);
  return out;
}

SolutionStream transenum_via_minresolving(const Hypergraph& h, std::uint64_t budget,
                                          std::shared_ptr<PipelineStats> stats) {
  ReductionArtifact r = build_minresolving_instance(pad_for_resolving_reduction(h));
  SolutionStream resolver = enumerate_minimal_resolving_sets(r.graph());
  SolutionStream out(minresolving_pipeline(std::move(r), std::move(resolver), std::move(stats), h.n()));
  if (budget > 0) return regularize_delay(std::move(out), budget);
  return out;
}

// --- Trans-Enum to MinGeodetic on split graphs ------------------------------

ReductionArtifact build_mingeodetic_instance(const Hypergraph& h) {
  const auto n = h.n();
  const auto m = h.m();
  require(n >= 1 && m >= 1, "hypergraph needs at least one vertex and one edge");
  require(!h.has_empty_edge(), "hypergraph has an empty edge");
  VertexSet common = VertexSet::full(n);
  for (const auto& e : h.edges()) common &= e;
  require(common.empty(), "vertex " + std::to_string(common.first() + 1) +
                              " lies in every edge; peel universal vertices first");

  Layout layout;
  const auto vs = layout.add_block(RoleKind::kV, n);
  const auto hs = layout.add_block(RoleKind::kH, m);
  const auto us = layout.add_block(RoleKind::kU, m);
  const Vertex e_star = layout.add(RoleKind::kEStar);
  const Vertex u_star = layout.add(RoleKind::kUUniversal);

  GraphBuilder b(layout.size());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!h.edge(j).contains(static_cast<Vertex>(i))) b.add_edge(vs[i], hs[j]);
    }
    b.add_edge(us[j], hs[j]);
  }
  std::vector<Vertex> clique = vs;
  clique.insert(clique.end(), us.begin(), us.end());
  b.make_clique(clique);
  b.make_complete(e_star, vs);
  for (Vertex v = 0; static_cast<std::size_t>(v) < layout.size(); ++v) {
    if (v != u_star) b.add_edge(u_star, v);
  }
  return ReductionArtifact(ReductionKind::kGeodeticSplit, std::move(b).build(), std::move(layout).take(), h);
}

VertexSet mingeodetic_mandatory(const ReductionArtifact& r) {
  VertexSet out = r.vertices_of(RoleKind::kH);
  out.insert(r.vertex(RoleKind::kEStar));
  return out;
}

DecodedSolution decode_mingeodetic_solution(const ReductionArtifact& r, const VertexSet& s) {
  if (r.kind() != ReductionKind::kGeodeticSplit) {
    throw Error(ErrorCode::kInvalidInput, "artifact is not a geodetic reduction");
  }
  const VertexSet mandatory = mingeodetic_mandatory(r);
  if (!mandatory.is_subset_of(s)) {
    throw Error(ErrorCode::kDecodeFailure, "solution misses part of the independent side");
  }
  DecodedSolution out;
  const VertexSet on_u = r.vertices_of(RoleKind::kU) & s;
  if (!on_u.empty()) {
    VertexSet expected = mandatory;
    expected.insert(on_u.first());
    if (expected != s) {
      throw Error(ErrorCode::kDecodeFailure, "a solution meeting U must be I plus a single u_j");
    }
    out.kind = DecodedSolution::Kind::kGarbageGeodetic;
    out.garbage_index = r.role(on_u.first()).index;
    return out;
  }
  if (s.contains(r.vertex(RoleKind::kUUniversal))) {
    throw Error(ErrorCode::kDecodeFailure, "the universal vertex cannot be in a minimal solution");
  }
  out.kind = DecodedSolution::Kind::kTransversalGeodetic;
  out.transversal = VertexSet(r.source().n());
  (r.vertices_of(RoleKind::kV) & s).for_each([&](Vertex v) { out.transversal.insert(r.role(v).index - 1); });
  return out;
}

namespace {

Generator<Step> mingeodetic_pipeline(ReductionArtifact r, SolutionStream geodetic,
                                     std::shared_ptr<PipelineStats> stats) {
  while (auto event = geodetic.step()) {
    if (event->ticks) co_yield Step::work(event->ticks);
    if (!event->solution) continue;
    if (stats) ++stats->inner_solutions;
    auto decoded = decode_mingeodetic_solution(r, *event->solution);
    co_yield Step::work();
    if (decoded.kind == DecodedSolution::Kind::kGarbageGeodetic) {
      if (stats) ++stats->garbage;
      continue;
    }
    co_yield Step::emit(std::move(decoded.transversal));
  }
}

}  // namespace

SolutionStream transenum_via_mingeodetic(const ReductionArtifact& r, SolutionStream geodetic,
                                         std::shared_ptr<PipelineStats> stats) {
  return SolutionStream(mingeodetic_pipeline(r, std::move(geodetic), std::move(stats)));
}

SolutionStream transenum_via_mingeodetic(const Hypergraph& h, std::shared_ptr<PipelineStats> stats) {
  ReductionArtifact r = build_mingeodetic_instance(h);
  SolutionStream geodetic = enumerate_minimal_geodetic_sets(r.graph());
  return SolutionStream(mingeodetic_pipeline(std::move(r), std::move(geodetic), std::move(stats)));
}

// --- extension problems -----------------------------------------------------

namespace {

void require_source_sets(const ExtSource& source) {
  const auto n = source.hypergraph.n();
  require(source.include.universe() == n && source.exclude.universe() == n,
          "include and exclude sets must live in the hypergraph's universe");
  require_disjoint(source.include, source.exclude);
}

VertexSet lift(const VertexSet& s, std::size_t universe) { return s.resized(universe); }

ExtAnswer ext_search(const MonotonePredicate& p, const VertexSet& include, const VertexSet& exclude,
                     std::size_t limit) {
  require_disjoint(include, exclude);
  const auto free = (VertexSet::full(p.ground) - include - exclude).to_vector();
  if (free.size() > limit) {
    throw Error(ErrorCode::kSizeLimit, "ext search limited to " + std::to_string(limit) +
                                           " free vertices, got " + std::to_string(free.size()));
  }
  ExtAnswer answer;
  for_each_subset_ascending(free, p.ground, [&](const VertexSet& x) {
    const VertexSet s = include | x;
    if (!p.holds(s)) return true;
    bool minimal = true;
    s.for_each([&](Vertex v) {
      if (!minimal) return;
      VertexSet smaller = s;
      smaller.erase(v);
      minimal = !p.holds(smaller);
    });
    if (!minimal) return true;
    answer = {true, s};
    return false;
  });
  return answer;
}

}  // namespace

ExtInstance build_ext_geodetic_instance(const ExtSource& source) {
  require_source_sets(source);
  const Hypergraph& h = source.hypergraph;
  const auto n = h.n();
  const auto m = h.m();
  require(n >= 1 && m >= 1, "hypergraph needs at least one vertex and one edge");
  require(classify_transversal(h, VertexSet::full(n)).kind != TransversalClass::Kind::kMinimal,
          "the whole vertex set is a minimal transversal");

  Layout layout;
  const auto vs = layout.add_block(RoleKind::kV, n);
  const auto hs = layout.add_block(RoleKind::kH, m);
  const Vertex a = layout.add(RoleKind::kA);
  const Vertex b_vertex = layout.add(RoleKind::kB);
  const Vertex c = layout.add(RoleKind::kC);

  GraphBuilder b(layout.size());
  b.make_clique(vs);
  b.make_clique(hs);
  for (std::size_t j = 0; j < m; ++j) {
    h.edge(j).for_each([&](Vertex i) { b.add_edge(vs[static_cast<std::size_t>(i)], hs[j]); });
  }
  b.make_complete(a, hs);
  b.make_complete(b_vertex, vs);
  b.add_edge(a, b_vertex);
  b.make_complete(c, hs);
  b.make_complete(c, vs);
  b.add_edge(a, c);

  const auto total = layout.size();
  ReductionArtifact artifact(ReductionKind::kExtGeodetic, std::move(b).build(), std::move(layout).take(), h);
  VertexSet include = lift(source.include, total);
  include.insert(a);
  include.insert(b_vertex);
  include.insert(c);
  VertexSet exclude = lift(source.exclude, total) | artifact.vertices_of(RoleKind::kH);
  return {std::move(artifact), std::move(include), std::move(exclude), source};
}

ExtInstance build_ext_resolving_instance(const ExtSource& source) {
  require_source_sets(source);
  const Hypergraph& h = source.hypergraph;
  const auto n = h.n();
  const auto m = h.m();
  require(n >= 1 && std::has_single_bit(n + 1), "log(n+1) must be an integer, got n = " + std::to_string(n));
  require(m >= 1 && std::has_single_bit(m + 1), "log(m+1) must be an integer, got m = " + std::to_string(m));
  require(conforms_to_ext_resolving(source),
          "the last edge must be {v_n} with v_n outside the exclude set");

  const auto lu = log2_exact(n + 1);
  const auto lw = log2_exact(m + 1);
  Layout layout;
  const auto vs = layout.add_block(RoleKind::kV, n);
  const auto hs = layout.add_block(RoleKind::kH, m);
  const auto hps = layout.add_block(RoleKind::kHPrime, m);
  const auto us = layout.add_block(RoleKind::kU, lu);
  const auto ups = layout.add_block(RoleKind::kUPrime, lu);
  const auto ustars = layout.add_block(RoleKind::kUStar, n);
  const auto ws = layout.add_block(RoleKind::kW, lw);

  GraphBuilder b(layout.size());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!h.edge(j).contains(static_cast<Vertex>(i))) b.add_edge(vs[i], hs[j]);
    }
    for (int k : binary_code(j + 1)) {
      b.add_edge(hs[j], ws[static_cast<std::size_t>(k - 1)]);
      b.add_edge(hps[j], ws[static_cast<std::size_t>(k - 1)]);
    }
  }
  b.make_complete(hps, vs);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k : binary_code(i + 1)) {
      b.add_edge(vs[i], ups[static_cast<std::size_t>(k - 1)]);
      b.add_edge(ustars[i], us[static_cast<std::size_t>(k - 1)]);
    }
  }
  for (std::size_t l = 0; l < lu; ++l) b.add_edge(us[l], ups[l]);
  std::vector<Vertex> clique = ups;
  clique.insert(clique.end(), ustars.begin(), ustars.end());
  clique.insert(clique.end(), hs.begin(), hs.end());
  clique.insert(clique.end(), hps.begin(), hps.end());
  b.make_clique(clique);

  const auto total = layout.size();
  ReductionArtifact artifact(ReductionKind::kExtResolving, std::move(b).build(), std::move(layout).take(), h);
  VertexSet include = lift(source.include, total) | artifact.vertices_of(RoleKind::kU) |
                      artifact.vertices_of(RoleKind::kW);
  VertexSet exclude = lift(source.exclude, total) | artifact.vertices_of(RoleKind::kUPrime) |
                      artifact.vertices_of(RoleKind::kUStar) | artifact.vertices_of(RoleKind::kH) |
                      artifact.vertices_of(RoleKind::kHPrime);
  return {std::move(artifact), std::move(include), std::move(exclude), source};
}

ExtAnswer ext_check_transversal(const ExtSource& source, std::size_t limit) {
  require_source_sets(source);
  return ext_search(transversal_predicate(source.hypergraph), source.include, source.exclude, limit);
}

ExtAnswer ext_check(ExtKind kind, const Graph& g, const VertexSet& include, const VertexSet& exclude,
                    std::size_t limit) {
  switch (kind) {
    case ExtKind::kResolving: return ext_search(resolving_predicate(g), include, exclude, limit);
    case ExtKind::kGeodetic: return ext_search(geodetic_predicate(g), include, exclude, limit);
    case ExtKind::kTransversal: break;
  }
  throw Error(ErrorCode::kInvalidInput, "transversal ext checks take a hypergraph source");
}

ExtAnswer ext_check(const ExtInstance& instance, std::size_t limit) {
  const auto kind = instance.artifact.kind() == ReductionKind::kExtGeodetic ? ExtKind::kGeodetic
                                                                             : ExtKind::kResolving;
  if (instance.artifact.kind() != ReductionKind::kExtGeodetic &&
      instance.artifact.kind() != ReductionKind::kExtResolving) {
    throw Error(ErrorCode::kInvalidInput, "artifact is not an ext reduction");
  }
  return ext_check(kind, instance.artifact.graph(), instance.include, instance.exclude, limit);
}

}  // namespace metenum

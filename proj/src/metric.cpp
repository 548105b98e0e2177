#include "metenum/metric.hpp"

#include <algorithm>
#include <set>

#include "metenum/error.hpp"

namespace metenum {

namespace {

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::kDisconnected, "graph is not connected");
}

// Shared shape of the three classifiers: `helpers(p, s)` lists the members of s
// that serve requirement p; a set is a solution when every requirement has a helper,
// and minimal when every member is the sole helper of some requirement.
template <typename Requirement, typename Helpers>
SolutionClass classify(const std::vector<Requirement>& requirements, const VertexSet& s,
                       Helpers&& helpers, auto&& to_witness) {
  SolutionClass out;
  std::vector<std::optional<Witness>> sole(s.universe());
  for (const auto& req : requirements) {
    const VertexSet h = helpers(req);
    if (h.empty()) {
      out.kind = SolutionClass::Kind::kNotSolution;
      out.missing = to_witness(req);
      return out;
    }
    if (h.size() == 1) {
      auto& slot = sole[static_cast<std::size_t>(h.first())];
      if (!slot) slot = to_witness(req);
    }
  }
  const auto members = s.to_vector();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    if (!sole[static_cast<std::size_t>(*it)]) {
      out.kind = SolutionClass::Kind::kNotMinimal;
      out.removable = *it;
      return out;
    }
  }
  out.kind = SolutionClass::Kind::kMinimal;
  for (Vertex v : members) out.member_witnesses.push_back(*sole[static_cast<std::size_t>(v)]);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 0; static_cast<std::size_t>(a) < n; ++a)
    for (Vertex b = a + 1; static_cast<std::size_t>(b) < n; ++b) out.emplace_back(a, b);
  return out;
}

Witness pair_witness(const std::pair<Vertex, Vertex>& p) { return {p.first, p.second}; }

Generator<Step> prefix_with(SolutionStream inner, VertexSet mandatory) {
  while (auto event = inner.step()) {
    if (event->ticks) co_yield Step::work(event->ticks);
    if (event->solution) co_yield Step::emit(*event->solution | mandatory);
  }
}

// Ascending-size search over supersets of the simplicial vertices; a candidate is
// accepted when its pair family hits every edge of the pair hypergraph. Geodeticity
// is monotone, so skipping supersets of accepted sets leaves exactly the minimal ones.
Generator<Step> geodetic_general(Graph g) {
  const auto n = g.n();
  const PairHypergraph ph(g);
  const VertexSet mandatory = simplicial_vertices(g);
  const auto free = (VertexSet::full(n) - mandatory).to_vector();
  std::vector<VertexSet> found;
  for (std::size_t k = 0; k <= free.size(); ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      VertexSet candidate = mandatory;
      for (auto i : pick) candidate.insert(free[i]);
      bool dominated = false;
      for (const auto& f : found) {
        if (f.is_subset_of(candidate)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        co_yield Step::work(n);
        if (ph.is_transversal(ph.pair_family(candidate))) {
          found.push_back(candidate);
          co_yield Step::emit(std::move(candidate));
        }
      }
      // Next k-combination of free in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == free.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

}  // namespace

Hypergraph distinguishing_hypergraph(const Graph& g) { return distinguishing_hypergraph(all_pairs_distances(g)); }

Hypergraph distinguishing_hypergraph(const DistanceMatrix& d) {
  const auto n = d.n();
  Hypergraph h(n);
  for (auto [a, b] : all_pairs(n)) {
    VertexSet e(n);
    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v)
      if (d(a, v) != d(b, v)) e.insert(v);
    h.add_edge(std::move(e));
  }
  return h;
}

SolutionStream enumerate_minimal_resolving_sets(const Graph& g, Engine engine) {
  return enumerate_minimal_transversals(sperner_reduce(distinguishing_hypergraph(g)), engine);
}

SolutionClass classify_resolving(const Graph& g, const VertexSet& s) {
  return classify_resolving(all_pairs_distances(g), s);
}

SolutionClass classify_resolving(const DistanceMatrix& d, const VertexSet& s) {
  const auto n = d.n();
  return classify(
      all_pairs(n), s,
      [&](const std::pair<Vertex, Vertex>& p) {
        VertexSet h(n);
        s.for_each([&](Vertex x) {
          if (d(p.first, x) != d(p.second, x)) h.insert(x);
        });
        return h;
      },
      pair_witness);
}

PairHypergraph::PairHypergraph(const Graph& g) : n_(g.n()) {
  require_connected(g);
  nodes_ = all_pairs(n_);
  const auto d = all_pairs_distances(g);
  edges_.assign(n_, VertexSet(nodes_.size()));
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    auto [x, y] = nodes_[i];
    for (Vertex v = 0; static_cast<std::size_t>(v) < n_; ++v) {
      if (on_shortest_path(d, x, v, y)) edges_[static_cast<std::size_t>(v)].insert(static_cast<Vertex>(i));
    }
  }
}

std::size_t PairHypergraph::node_index(Vertex x, Vertex y) const {
  if (x == y) throw Error(ErrorCode::kInvalidInput, "pair nodes need two distinct vertices");
  if (x > y) std::swap(x, y);
  const auto i = static_cast<std::size_t>(x);
  const auto j = static_cast<std::size_t>(y);
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

VertexSet PairHypergraph::pair_family(const VertexSet& s) const {
  VertexSet out(nodes_.size());
  const auto members = s.to_vector();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      out.insert(static_cast<Vertex>(node_index(members[a], members[b])));
  return out;
}

bool PairHypergraph::is_transversal(const VertexSet& node_set) const {
  for (const auto& e : edges_)
    if (!e.intersects(node_set)) return false;
  return true;
}

VertexSet PairHypergraph::vertex_union(const VertexSet& node_set) const {
  VertexSet out(n_);
  node_set.for_each([&](Vertex i) {
    auto [x, y] = nodes_[static_cast<std::size_t>(i)];
    out.insert(x).insert(y);
  });
  return out;
}

PairHypergraph pair_cover_hypergraph(const Graph& g) { return PairHypergraph(g); }

bool is_consistent(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::set<std::pair<Vertex, Vertex>> distinct;
  std::set<Vertex> support;
  for (auto [x, y] : pairs) {
    if (x == y) throw Error(ErrorCode::kInvalidInput, "pair nodes need two distinct vertices");
    distinct.emplace(std::min(x, y), std::max(x, y));
    support.insert(x);
    support.insert(y);
  }
  const auto k = support.size();
  return distinct.size() == k * (k - (k > 0 ? 1 : 0)) / 2;
}

bool is_consistent(const PairHypergraph& ph, const VertexSet& node_set) {
  return ph.pair_family(ph.vertex_union(node_set)) == node_set;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out(g.n());
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.n(); ++v)
    if (g.is_clique(g.neighbors(v))) out.insert(v);
  return out;
}

SplitGeodeticReduction split_geodetic_hypergraph(const Graph& g, const SplitPartition& p) {
  const auto n = g.n();
  if (p.independent.size() <= 1) {
    throw Error(ErrorCode::kTrivialInstance, "independent side has fewer than two vertices");
  }
  require_connected(g);
  const auto d = all_pairs_distances(g);
  const auto independent = p.independent.to_vector();
  SplitGeodeticReduction out{p.independent, Hypergraph(n)};
  for (Vertex v = p.clique.first(); v >= 0; v = p.clique.next(v)) {
    bool covered = false;
    for (std::size_t a = 0; a < independent.size() && !covered; ++a)
      for (std::size_t b = a + 1; b < independent.size() && !covered; ++b)
        covered = on_shortest_path(d, independent[a], v, independent[b]);
    if (covered) continue;
    const VertexSet anchors = g.neighbors(v) & p.independent;
    if (anchors.size() != 1) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "uncovered clique vertex " + std::to_string(v + 1) +
                      " does not have exactly one independent neighbor; partition not maximum");
    }
    VertexSet edge = p.clique - g.neighbors(anchors.first());
    edge.insert(v);
    out.hypergraph.add_edge(std::move(edge));
  }
  return out;
}

SolutionStream enumerate_minimal_geodetic_sets(const Graph& g, GeodeticOptions options) {
  require_connected(g);
  const auto n = g.n();
  if (n <= 1) return stream_of({VertexSet::full(n)});
  if (auto p = split_partition_max_independent(g); p && p->independent.size() >= 2) {
    auto reduction = split_geodetic_hypergraph(g, *p);
    return SolutionStream(prefix_with(
        enumerate_minimal_transversals(std::move(reduction.hypergraph), options.engine),
        std::move(reduction.mandatory)));
  }
  if (n > options.size_limit) {
    throw Error(ErrorCode::kSizeLimit, "general geodetic enumeration limited to n <= " +
                                           std::to_string(options.size_limit) + ", got " +
                                           std::to_string(n));
  }
  return SolutionStream(geodetic_general(g));
}

SolutionClass classify_geodetic(const Graph& g, const VertexSet& s) {
  require_connected(g);
  const auto n = g.n();
  const auto d = all_pairs_distances(g);
  const auto members = s.to_vector();
  auto covered = [&](Vertex v, Vertex skip) {
    if (v != skip && s.contains(v)) return true;
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (members[a] == skip) continue;
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (members[b] != skip && on_shortest_path(d, members[a], v, members[b])) return true;
      }
    }
    return false;
  };

  SolutionClass out;
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (!covered(v, -1)) {
      out.kind = SolutionClass::Kind::kNotSolution;
      out.missing = {v, -1};
      return out;
    }
  }
  // Geodeticity is monotone: s is minimal iff no single member can be dropped.
  std::vector<Witness> witnesses(members.size());
  for (std::size_t i = members.size(); i-- > 0;) {
    Vertex lost = -1;
    for (Vertex v = 0; static_cast<std::size_t>(v) < n && lost < 0; ++v)
      if (!covered(v, members[i])) lost = v;
    if (lost < 0) {
      out.kind = SolutionClass::Kind::kNotMinimal;
      out.removable = members[i];
      return out;
    }
    witnesses[i] = {lost, -1};
  }
  out.kind = SolutionClass::Kind::kMinimal;
  out.member_witnesses = std::move(witnesses);
  return out;
}

Graph mmd_graph(const Graph& g) {
  require_connected(g);
  const auto n = g.n();
  const auto d = all_pairs_distances(g);
  GraphBuilder b(n);
  for (auto [u, v] : all_pairs(n)) {
    bool mutual = true;
    g.neighbors(v).for_each([&](Vertex w) { mutual = mutual && d(u, w) <= d(u, v); });
    g.neighbors(u).for_each([&](Vertex w) { mutual = mutual && d(w, v) <= d(u, v); });
    if (mutual) b.add_edge(u, v);
  }
  return std::move(b).build();
}

SolutionStream enumerate_minimal_strong_resolving_sets(const Graph& g) {
  return enumerate_minimal_vertex_covers(mmd_graph(g));
}

SolutionClass classify_strong_resolving(const Graph& g, const VertexSet& s) {
  require_connected(g);
  const auto n = g.n();
  const auto d = all_pairs_distances(g);
  return classify(
      all_pairs(n), s,
      [&](const std::pair<Vertex, Vertex>& p) {
        auto [u, v] = p;
        VertexSet h(n);
        s.for_each([&](Vertex w) {
          if (d(w, u) + d(u, v) == d(w, v) || d(w, v) + d(v, u) == d(w, u)) h.insert(w);
        });
        return h;
      },
      pair_witness);
}

}  // namespace metenum

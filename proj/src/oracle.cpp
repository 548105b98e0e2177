#include "metenum/oracle.hpp"

#include <memory>

#include "metenum/error.hpp"

namespace metenum {

MonotonePredicate transversal_predicate(const Hypergraph& h) {
  auto edges = std::make_shared<const std::vector<VertexSet>>(h.edges());
  return {h.n(), [edges](const VertexSet& s) {
            for (const auto& e : *edges)
              if (!e.intersects(s)) return false;
            return true;
          }};
}

MonotonePredicate resolving_predicate(const Graph& g) {
  auto d = std::make_shared<const DistanceMatrix>(all_pairs_distances(g));
  const auto n = g.n();
  return {n, [d, n](const VertexSet& s) {
            const auto members = s.to_vector();
            for (Vertex a = 0; static_cast<std::size_t>(a) < n; ++a) {
              for (Vertex b = a + 1; static_cast<std::size_t>(b) < n; ++b) {
                bool split = false;
                for (Vertex x : members) {
                  if ((*d)(a, x) != (*d)(b, x)) {
                    split = true;
                    break;
                  }
                }
                if (!split) return false;
              }
            }
            return true;
          }};
}

MonotonePredicate geodetic_predicate(const Graph& g) {
  auto d = std::make_shared<const DistanceMatrix>(all_pairs_distances(g));
  const auto n = g.n();
  return {n, [d, n](const VertexSet& s) {
            const auto members = s.to_vector();
            for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
              if (s.contains(v)) continue;
              bool covered = false;
              for (std::size_t i = 0; i < members.size() && !covered; ++i) {
                for (std::size_t j = i + 1; j < members.size() && !covered; ++j) {
                  const Vertex x = members[i];
                  const Vertex y = members[j];
                  covered = d->reachable(x, y) && d->reachable(x, v) && d->reachable(v, y) &&
                            (*d)(x, v) + (*d)(v, y) == (*d)(x, y);
                }
              }
              if (!covered) return false;
            }
            return true;
          }};
}

MonotonePredicate strong_resolving_predicate(const Graph& g) {
  auto d = std::make_shared<const DistanceMatrix>(all_pairs_distances(g));
  const auto n = g.n();
  return {n, [d, n](const VertexSet& s) {
            const auto members = s.to_vector();
            const auto& dist = *d;
            for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
              for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
                bool resolved = false;
                for (Vertex w : members) {
                  if (dist(w, u) + dist(u, v) == dist(w, v) || dist(w, v) + dist(v, u) == dist(w, u)) {
                    resolved = true;
                    break;
                  }
                }
                if (!resolved) return false;
              }
            }
            return true;
          }};
}

bool spot_check_monotone(const MonotonePredicate& p, std::mt19937_64& rng, int samples) {
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < samples; ++i) {
    VertexSet small(p.ground);
    VertexSet large(p.ground);
    for (Vertex v = 0; static_cast<std::size_t>(v) < p.ground; ++v) {
      if (coin(rng)) {
        large.insert(v);
        if (coin(rng)) small.insert(v);
      }
    }
    if (p.holds(small) && !p.holds(large)) return false;
  }
  return true;
}

void for_each_subset_ascending(const std::vector<Vertex>& pool, std::size_t universe,
                               const std::function<bool(const VertexSet&)>& f) {
  const auto size = pool.size();
  for (std::size_t k = 0; k <= size; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      VertexSet s(universe);
      for (auto i : pick) s.insert(pool[i]);
      if (!f(s)) return;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == size - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

std::vector<VertexSet> brute_minimal_solutions(const MonotonePredicate& p, std::size_t limit) {
  if (p.ground > limit) {
    throw Error(ErrorCode::kSizeLimit, "brute force limited to ground sets of size <= " +
                                           std::to_string(limit) + ", got " + std::to_string(p.ground));
  }
  std::vector<Vertex> pool(p.ground);
  for (std::size_t i = 0; i < p.ground; ++i) pool[i] = static_cast<Vertex>(i);
  std::vector<VertexSet> minimal;
  std::vector<VertexSet> satisfied;  // all hits, needed only without monotonicity
  for_each_subset_ascending(pool, p.ground, [&](const VertexSet& s) {
    const auto& blockers = p.monotone ? minimal : satisfied;
    for (const auto& b : blockers) {
      if (b.is_subset_of(s)) {
        if (!p.monotone && p.holds(s)) satisfied.push_back(s);
        return true;
      }
    }
    if (p.holds(s)) {
      minimal.push_back(s);
      if (!p.monotone) satisfied.push_back(s);
    }
    return true;
  });
  sort_canonical(minimal);
  return minimal;
}

std::vector<VertexSet> brute_minimal_consistent_transversals(const PairHypergraph& ph, std::size_t limit) {
  const auto n = ph.vertex_count();
  if (n > limit) {
    throw Error(ErrorCode::kSizeLimit, "consistent-transversal brute force limited to n <= " +
                                           std::to_string(limit));
  }
  std::vector<VertexSet> hitting;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet family(ph.node_count());
    for (std::size_t a = 0; a < n; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if ((mask >> b) & 1) {
          family.insert(static_cast<Vertex>(ph.node_index(static_cast<Vertex>(a), static_cast<Vertex>(b))));
        }
      }
    }
    if (!ph.is_transversal(family)) continue;
    bool seen = false;
    for (const auto& f : hitting) seen = seen || f == family;
    if (!seen) hitting.push_back(std::move(family));
  }
  std::vector<VertexSet> minimal;
  for (const auto& f : hitting) {
    bool proper_sub = false;
    for (const auto& other : hitting) proper_sub = proper_sub || other.is_proper_subset_of(f);
    if (!proper_sub) minimal.push_back(f);
  }
  sort_canonical(minimal);
  return minimal;
}

}  // namespace metenum

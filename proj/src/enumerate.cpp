#include "metenum/enumerate.hpp"

#include <algorithm>

#include "metenum/error.hpp"

namespace metenum {

const char* to_string(Engine engine) {
  switch (engine) {
    case Engine::kBergeSequential: return "berge";
    case Engine::kDfsHittingSet: return "dfs";
  }
  return "unknown";
}

namespace {

using EdgeSet = boost::dynamic_bitset<std::uint64_t>;

Generator<Step> berge(Hypergraph h) {
  std::vector<VertexSet> family{VertexSet(h.n())};
  for (const auto& edge : h.edges()) {
    std::uint64_t work = 0;
    std::vector<VertexSet> grown;
    for (const auto& t : family) {
      ++work;
      if (t.intersects(edge)) {
        grown.push_back(t);
      } else {
        edge.for_each([&](Vertex v) { grown.push_back(VertexSet(t).insert(v)); });
      }
    }
    std::stable_sort(grown.begin(), grown.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    family.clear();
    for (auto& candidate : grown) {
      bool dominated = false;
      for (const auto& kept : family) {
        ++work;
        if (kept.is_subset_of(candidate)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) family.push_back(std::move(candidate));
    }
    co_yield Step::work(work);
  }
  for (auto& t : family) co_yield Step::emit(std::move(t));
}

struct HittingFrame {
  std::vector<Vertex> branch;
  std::size_t next = 0;
  EdgeSet uncovered;
  std::vector<EdgeSet> critical;  // snapshot aligned with the partial solution
};

Generator<Step> dfs_hitting_set(Hypergraph h) {
  const auto n = h.n();
  const auto m = h.m();
  if (m == 0) {
    co_yield Step::emit(VertexSet(n));
    co_return;
  }
  std::vector<EdgeSet> occurrences(n, EdgeSet(m));
  for (std::size_t j = 0; j < m; ++j) {
    h.edge(j).for_each([&](Vertex v) { occurrences[static_cast<std::size_t>(v)].set(j); });
  }

  std::vector<Vertex> partial;
  std::vector<EdgeSet> critical(n, EdgeSet(m));
  EdgeSet uncovered(m);
  uncovered.set();
  VertexSet candidates = VertexSet::full(n);
  std::vector<HittingFrame> stack;

  auto open_frame = [&] {
    HittingFrame frame;
    const auto pivot = uncovered.find_first();
    VertexSet branch = h.edge(pivot) & candidates;
    candidates -= branch;
    frame.branch = branch.to_vector();
    frame.uncovered = uncovered;
    frame.critical.reserve(partial.size());
    for (Vertex u : partial) frame.critical.push_back(critical[static_cast<std::size_t>(u)]);
    stack.push_back(std::move(frame));
  };
  auto restore = [&](const HittingFrame& frame) {
    uncovered = frame.uncovered;
    for (std::size_t i = 0; i < frame.critical.size(); ++i) {
      critical[static_cast<std::size_t>(partial[i])] = frame.critical[i];
    }
  };

  open_frame();
  co_yield Step::work(1);
  while (!stack.empty()) {
    auto& frame = stack.back();
    if (frame.next > 0) candidates.insert(frame.branch[frame.next - 1]);
    if (frame.next == frame.branch.size()) {
      stack.pop_back();
      if (!stack.empty()) {
        partial.pop_back();
        restore(stack.back());
      }
      continue;
    }
    const Vertex v = frame.branch[frame.next++];
    const auto& occ = occurrences[static_cast<std::size_t>(v)];

    // Adding v must leave every current member with a private edge.
    bool keeps_minimal = true;
    for (Vertex u : partial) {
      auto& crit = critical[static_cast<std::size_t>(u)];
      crit -= occ;
      if (crit.none()) keeps_minimal = false;
    }
    co_yield Step::work(partial.size() + 1);
    if (!keeps_minimal) {
      restore(frame);
      continue;
    }
    critical[static_cast<std::size_t>(v)] = occ & uncovered;
    uncovered -= occ;
    partial.push_back(v);
    if (uncovered.none()) {
      co_yield Step::emit(VertexSet(n, partial));
      partial.pop_back();
      restore(frame);
      continue;
    }
    open_frame();
    co_yield Step::work(1);
  }
}

struct IndependentFrame {
  VertexSet members;
  std::size_t level = 0;
  int stage = 0;
};

Generator<Step> tsukiyama(Graph g) {
  const auto n = g.n();
  std::vector<IndependentFrame> stack;
  stack.push_back({VertexSet(n), 0, 0});
  while (!stack.empty()) {
    auto& frame = stack.back();
    if (frame.level == n) {
      co_yield Step::emit(std::move(frame.members));
      stack.pop_back();
      continue;
    }
    const auto v = static_cast<Vertex>(frame.level);
    const auto& nv = g.neighbors(v);
    if (frame.stage == 0) {
      co_yield Step::work(1);
      if (!nv.intersects(frame.members)) {
        frame.stage = 2;
        VertexSet grown = frame.members;
        grown.insert(v);
        stack.push_back({std::move(grown), frame.level + 1, 0});
      } else {
        frame.stage = 1;
        stack.push_back({frame.members, frame.level + 1, 0});
      }
      continue;
    }
    if (frame.stage == 1) {
      frame.stage = 2;
      VertexSet swapped = frame.members - nv;
      swapped.insert(v);
      std::uint64_t work = 0;
      bool maximal = true;
      for (Vertex u = 0; u <= v && maximal; ++u) {
        if (swapped.contains(u)) continue;
        ++work;
        if (!g.neighbors(u).intersects(swapped)) maximal = false;
      }
      bool canonical_parent = maximal;
      if (maximal) {
        VertexSet parent = VertexSet(swapped).erase(v);
        for (Vertex u = 0; u < v; ++u) {
          if (parent.contains(u)) continue;
          ++work;
          if (!g.neighbors(u).intersects(parent)) parent.insert(u);
        }
        canonical_parent = parent == frame.members;
      }
      co_yield Step::work(work);
      if (canonical_parent) {
        const auto level = frame.level + 1;
        stack.push_back({std::move(swapped), level, 0});
        continue;
      }
    }
    stack.pop_back();
  }
}

Generator<Step> complements(SolutionStream inner, std::size_t n) {
  const VertexSet all = VertexSet::full(n);
  while (auto event = inner.step()) {
    if (event->ticks) co_yield Step::work(event->ticks);
    if (event->solution) co_yield Step::emit(all - *event->solution);
  }
}

}  // namespace

SolutionStream enumerate_minimal_transversals(Hypergraph h, Engine engine) {
  for (std::size_t j = 0; j < h.m(); ++j) {
    if (h.edge(j).empty()) {
      throw Error(ErrorCode::kEmptyEdge, "edge " + std::to_string(j + 1) + " is empty");
    }
  }
  switch (engine) {
    case Engine::kBergeSequential: return SolutionStream(berge(std::move(h)));
    case Engine::kDfsHittingSet: return SolutionStream(dfs_hitting_set(std::move(h)));
  }
  throw Error(ErrorCode::kInvalidInput, "unknown engine");
}

SolutionStream enumerate_maximal_independent_sets(Graph g) { return SolutionStream(tsukiyama(std::move(g))); }

SolutionStream enumerate_minimal_vertex_covers(Graph g) {
  const auto n = g.n();
  return SolutionStream(complements(enumerate_maximal_independent_sets(std::move(g)), n));
}

}  // namespace metenum

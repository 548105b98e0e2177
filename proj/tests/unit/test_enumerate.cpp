#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "metenum/enumerate.hpp"
#include "metenum/error.hpp"
#include "metenum/oracle.hpp"

using namespace metenum;
using namespace metenum::testing;

namespace {

constexpr Engine kEngines[] = {Engine::kBergeSequential, Engine::kDfsHittingSet};

MonotonePredicate vertex_cover_predicate(const Graph& g) {
  const auto edges = g.edges();
  return {g.n(), [edges](const VertexSet& s) {
            for (auto [u, v] : edges)
              if (!s.contains(u) && !s.contains(v)) return false;
            return true;
          }};
}

std::vector<VertexSet> brute_maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& c : brute_minimal_solutions(vertex_cover_predicate(g))) out.push_back(VertexSet::full(g.n()) - c);
  return sorted(std::move(out));
}

// Solutions at the given ticks, separated by plain work.
SolutionStream bursty(std::vector<std::pair<std::uint64_t, int>> schedule) {
  return SolutionStream([](std::vector<std::pair<std::uint64_t, int>> plan) -> Generator<Step> {
    std::uint64_t now = 0;
    int label = 0;
    for (auto [at, count] : plan) {
      if (at > now) co_yield Step::work(at - now);
      now = at;
      for (int i = 0; i < count; ++i) co_yield Step::emit(VertexSet(64, {label++}));
    }
  }(std::move(schedule)));
}

}  // namespace

TEST_CASE("minimal transversal examples") {
  for (Engine e : kEngines) {
    CAPTURE(to_string(e));
    CHECK(sorted(enumerate_minimal_transversals(Hypergraph(3), e)) == family(3, {{}}));
    CHECK(sorted(enumerate_minimal_transversals(Hypergraph::from_lists(3, {{0, 1, 2}}), e)) ==
          family(3, {{0}, {1}, {2}}));
    const auto tr = sorted(enumerate_minimal_transversals(h2(), e));
    CHECK(tr == tr_h2());
    CHECK(std::find(tr.begin(), tr.end(), VertexSet(6, {0, 2, 4})) != tr.end());
    CHECK_THROWS_AS(enumerate_minimal_transversals(Hypergraph::from_lists(2, {{0}, {}}), e), Error);
  }
}

TEST_CASE("engines agree with brute force and emit each solution once") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 150; ++round) {
    const Hypergraph h = random_hypergraph(rng, 1 + round % 8, round % 9, 0.3);
    const auto expected = brute_minimal_solutions(transversal_predicate(h));
    for (Engine e : kEngines) {
      const auto raw = collect(enumerate_minimal_transversals(h, e));
      std::set<std::vector<Vertex>> distinct;
      for (const auto& t : raw) distinct.insert(t.to_vector());
      CHECK(distinct.size() == raw.size());
      CHECK(sorted(raw) == expected);
    }
  }
}

TEST_CASE("engine output order is deterministic") {
  std::mt19937_64 rng(32);
  const Hypergraph h = random_hypergraph(rng, 8, 8, 0.3);
  for (Engine e : kEngines) CHECK(collect(enumerate_minimal_transversals(h, e)) == collect(enumerate_minimal_transversals(h, e)));
}

TEST_CASE("duality involution") {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 40; ++round) {
    const Hypergraph h = sperner_reduce(random_hypergraph(rng, 2 + round % 5, 1 + round % 6, 0.4));
    const Hypergraph dual(h.n(), sorted(enumerate_minimal_transversals(h)));
    CHECK(sorted(enumerate_minimal_transversals(dual)) == sorted(std::vector<VertexSet>(h.edges())));
  }
}

TEST_CASE("maximal independent sets") {
  CHECK(sorted(enumerate_maximal_independent_sets(complete(3))) == family(3, {{0}, {1}, {2}}));
  CHECK(sorted(enumerate_maximal_independent_sets(Graph::from_edges(3, {}))) == family(3, {{0, 1, 2}}));
  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(sorted(enumerate_maximal_independent_sets(p4)) == family(4, {{0, 2}, {0, 3}, {1, 3}}));
  CHECK(sorted(enumerate_maximal_independent_sets(Graph(0))) == family(0, {{}}));

  std::mt19937_64 rng(34);
  for (int round = 0; round < 120; ++round) {
    const Graph g = random_graph(rng, 1 + round % 10, 0.1 + 0.1 * (round % 7));
    const auto raw = collect(enumerate_maximal_independent_sets(g));
    const auto got = sorted(raw);
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    CHECK(got == brute_maximal_independent_sets(g));
  }
}

TEST_CASE("minimal vertex covers") {
  CHECK(sorted(enumerate_minimal_vertex_covers(Graph::from_edges(3, {{0, 1}}))) == family(3, {{0}, {1}}));
  CHECK(sorted(enumerate_minimal_vertex_covers(complete(3))) == family(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(sorted(enumerate_minimal_vertex_covers(Graph::from_edges(4, {{0, 1}, {2, 3}}))) ==
        family(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST_CASE("regularize_delay spaces a burst evenly") {
  SolutionStream out = regularize_delay(bursty({{0, 5}}), 10);
  out.record_emission_ticks(true);
  const auto sets = collect(out);
  CHECK(sets.size() == 5);
  CHECK(out.emission_ticks() == std::vector<std::uint64_t>{10, 20, 30, 40, 50});
  for (int i = 0; i < 5; ++i) CHECK(sets[static_cast<std::size_t>(i)] == VertexSet(64, {i}));
}

TEST_CASE("regularize_delay on sparse and empty streams") {
  SolutionStream out = regularize_delay(bursty({{1, 1}, {100, 1}}), 10);
  out.record_emission_ticks(true);
  CHECK(collect(out).size() == 2);
  CHECK(out.emission_ticks() == std::vector<std::uint64_t>{10, 110});

  CHECK(collect(regularize_delay(stream_of({}), 10)).empty());
  CHECK_THROWS_AS(regularize_delay(stream_of({}), 0), Error);
}

TEST_CASE("regularize_delay keeps order, multiset and gap bound") {
  std::mt19937_64 rng(35);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::pair<std::uint64_t, int>> plan;
    std::uint64_t at = 0;
    int total = 0;
    for (int i = 0; i < 1 + round % 12; ++i) {
      at += rng() % 200;
      const int burst = static_cast<int>(rng() % 8);
      plan.emplace_back(at, burst);
      total += burst;
    }
    const std::uint64_t budget = 1 + rng() % 25;
    SolutionStream inner = bursty(plan);
    SolutionStream out = regularize_delay(std::move(inner), budget);
    out.record_emission_ticks(true);
    const auto sets = collect(out);
    REQUIRE(sets.size() == static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) CHECK(sets[static_cast<std::size_t>(i)] == VertexSet(64, {i}));
    std::uint64_t prev = 0;
    for (auto t : out.emission_ticks()) {
      CHECK(t % budget == 0);
      CHECK(t > prev);
      prev = t;
    }
  }
}

TEST_CASE("stream instrumentation") {
  SolutionStream s = bursty({{3, 1}, {10, 2}});
  CHECK(s.next().has_value());
  CHECK(s.ticks() == 3);
  CHECK(s.next().has_value());
  CHECK(s.next().has_value());
  CHECK_FALSE(s.next().has_value());
  CHECK(s.exhausted());
  CHECK(s.emitted() == 3);
  CHECK(s.max_gap() == 7);
}

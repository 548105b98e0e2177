#include "metenum/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "metenum/error.hpp"

namespace metenum {

Graph::Graph(std::size_t n) : adjacency_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphBuilder builder(n);
  for (auto [u, v] : edges) builder.add_edge(u, v);
  return std::move(builder).build();
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency_) total += row.size();
  return total / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t u = 0; u < n(); ++u) {
    adjacency_[u].for_each([&](Vertex v) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    });
  }
  return out;
}

bool Graph::is_connected() const {
  if (n() <= 1) return true;
  VertexSet seen(n());
  std::vector<Vertex> stack{0};
  seen.insert(0);
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    neighbors(u).for_each([&](Vertex w) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    });
  }
  return seen.size() == n();
}

bool Graph::is_clique(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && !(s - neighbors(v)).is_subset_of(VertexSet(n(), {v}))) ok = false;
  });
  return ok;
}

bool Graph::is_independent(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  const auto n = static_cast<Vertex>(graph_.n());
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw Error(ErrorCode::kInvalidInput, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                              ") has an endpoint outside 0.." +
                                              std::to_string(n - 1));
  }
  if (u == v) {
    throw Error(ErrorCode::kInvalidInput,
                "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  graph_.adjacency_[static_cast<std::size_t>(u)].insert(v);
  graph_.adjacency_[static_cast<std::size_t>(v)].insert(u);
}

void GraphBuilder::make_clique(const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
}

void GraphBuilder::make_complete(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex x : a)
    for (Vertex y : b) add_edge(x, y);
}

void GraphBuilder::make_complete(Vertex a, const std::vector<Vertex>& b) {
  for (Vertex y : b) add_edge(a, y);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const auto n = g.n();
  DistanceMatrix d(n);
  std::vector<Vertex> frontier;
  std::vector<Vertex> next;
  for (std::size_t s = 0; s < n; ++s) {
    const auto src = static_cast<Vertex>(s);
    VertexSet unseen = VertexSet::full(n);
    unseen.erase(src);
    d.at(src, src) = 0;
    frontier.assign(1, src);
    for (Distance level = 1; !frontier.empty() && !unseen.empty(); ++level) {
      next.clear();
      for (Vertex u : frontier) {
        VertexSet fresh = g.neighbors(u) & unseen;
        fresh.for_each([&](Vertex w) {
          d.at(src, w) = level;
          next.push_back(w);
        });
        unseen -= fresh;
      }
      std::swap(frontier, next);
    }
  }
  return d;
}

bool on_shortest_path(const DistanceMatrix& d, Vertex x, Vertex v, Vertex y) {
  if (!d.reachable(x, v) || !d.reachable(v, y) || !d.reachable(x, y)) return false;
  return d(x, v) + d(v, y) == d(x, y);
}

std::vector<TwinClass> twin_classes(const Graph& g) {
  const auto n = g.n();
  std::vector<int> owner(n, -1);
  std::vector<TwinClass> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (owner[i] >= 0) continue;
    const auto u = static_cast<Vertex>(i);
    TwinClass cls;
    cls.members.push_back(u);
    const VertexSet open_u = g.neighbors(u);
    const VertexSet closed_u = g.closed_neighbors(u);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (owner[j] >= 0) continue;
      const auto v = static_cast<Vertex>(j);
      TwinKind kind = TwinKind::kSingleton;
      if (g.neighbors(v) == open_u) {
        kind = TwinKind::kFalseTwins;
      } else if (g.adjacent(u, v) && g.closed_neighbors(v) == closed_u) {
        kind = TwinKind::kTrueTwins;
      }
      if (kind == TwinKind::kSingleton) continue;
      cls.kind = kind;
      cls.members.push_back(v);
      owner[j] = static_cast<int>(classes.size());
    }
    owner[i] = static_cast<int>(classes.size());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::optional<SplitPartition> split_partition_max_independent(const Graph& g) {
  const auto n = g.n();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  // Degree-sequence test: with d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
  // g is split iff sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i.
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(order[i]) >= i) m = i + 1;
  }
  std::size_t head = 0;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != m * (m == 0 ? 0 : m - 1) + tail) return std::nullopt;

  SplitPartition p{VertexSet(n), VertexSet(n)};
  for (std::size_t i = 0; i < n; ++i) (i < m ? p.clique : p.independent).insert(order[i]);
  if (!g.is_clique(p.clique) || !g.is_independent(p.independent)) return std::nullopt;

  // At most one clique vertex can be anti-complete to the independent side.
  for (Vertex v = p.clique.first(); v >= 0; v = p.clique.next(v)) {
    if (!g.neighbors(v).intersects(p.independent)) {
      p.clique.erase(v);
      p.independent.insert(v);
      break;
    }
  }
  return p;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long nn = -1;
      long long mm = -1;
      fields >> kind >> nn >> mm;
      if (kind != "edge" || !fields || nn < 0 || mm < 0) {
        parse_fail(line_no, start + 1, "expected 'p edge <n> <m>'");
      }
      if (n) parse_fail(line_no, start + 1, "duplicate header");
      n = static_cast<std::size_t>(nn);
      declared_m = static_cast<std::size_t>(mm);
      continue;
    }
    if (tag == "e") {
      if (!n) parse_fail(line_no, start + 1, "edge before 'p edge' header");
      long long u = 0;
      long long v = 0;
      fields >> u >> v;
      if (!fields) parse_fail(line_no, start + 1, "expected 'e <u> <v>'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > *n || static_cast<std::size_t>(v) > *n) {
        parse_fail(line_no, start + 3, "vertex index out of range 1.." + std::to_string(*n));
      }
      if (u == v) parse_fail(line_no, start + 3, "self-loop on vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    parse_fail(line_no, start + 1, "unknown line tag '" + tag + "'");
  }
  if (!n) parse_fail(line_no, 1, "missing 'p edge' header");
  Graph g = Graph::from_edges(*n, edges);
  if (g.edge_count() != declared_m) {
    parse_fail(line_no, 1,
               "header declares " + std::to_string(declared_m) + " edges, found " +
                   std::to_string(g.edge_count()));
  }
  return g;
}

std::string write_graph(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

}  // namespace metenum

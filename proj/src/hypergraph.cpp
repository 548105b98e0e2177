#include "metenum/hypergraph.hpp"

#include <bit>
#include <optional>
#include <sstream>

#include "metenum/error.hpp"

namespace metenum {

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges) : n_(n) {
  for (auto& e : edges) add_edge(std::move(e));
}

Hypergraph Hypergraph::from_lists(std::size_t n, const std::vector<std::vector<Vertex>>& edges) {
  Hypergraph h(n);
  for (const auto& e : edges) h.add_edge(VertexSet(n, e));
  return h;
}

void Hypergraph::add_edge(VertexSet e) {
  if (e.universe() != n_) {
    throw Error(ErrorCode::kInvalidInput, "edge universe " + std::to_string(e.universe()) +
                                              " does not match hypergraph universe " +
                                              std::to_string(n_));
  }
  edges_.push_back(std::move(e));
}

bool Hypergraph::has_empty_edge() const {
  for (const auto& e : edges_)
    if (e.empty()) return true;
  return false;
}

bool Hypergraph::is_transversal(const VertexSet& t) const {
  for (const auto& e : edges_)
    if (!e.intersects(t)) return false;
  return true;
}

bool Hypergraph::is_sperner_up_to_duplicates() const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = 0; j < edges_.size(); ++j)
      if (i != j && edges_[i].is_proper_subset_of(edges_[j])) return false;
  return true;
}

TransversalClass classify_transversal(const Hypergraph& h, const VertexSet& t) {
  TransversalClass out;
  for (std::size_t j = 0; j < h.m(); ++j) {
    if (!h.edge(j).intersects(t)) {
      out.kind = TransversalClass::Kind::kNotTransversal;
      out.missed_edge = j;
      return out;
    }
  }
  // A transversal is minimal iff every member owns an edge it alone hits; the
  // reported removable member is the highest-index one without such an edge.
  const auto members = t.to_vector();
  std::vector<std::optional<std::size_t>> witness(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < h.m() && !witness[i]; ++j) {
      const auto hit = h.edge(j) & t;
      if (hit.size() == 1 && hit.contains(members[i])) witness[i] = j;
    }
  }
  for (std::size_t i = members.size(); i-- > 0;) {
    if (!witness[i]) {
      out.kind = TransversalClass::Kind::kNotMinimal;
      out.removable = members[i];
      return out;
    }
  }
  for (const auto& w : witness) out.private_edges.push_back(*w);
  out.kind = TransversalClass::Kind::kMinimal;
  return out;
}

Hypergraph sperner_reduce(const Hypergraph& h) {
  Hypergraph out(h.n());
  for (std::size_t i = 0; i < h.m(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < h.m() && keep; ++j) {
      if (i == j) continue;
      if (h.edge(j).is_proper_subset_of(h.edge(i))) keep = false;
      if (j < i && h.edge(j) == h.edge(i)) keep = false;
    }
    if (keep) out.add_edge(h.edge(i));
  }
  return out;
}

PeelResult peel_universal_vertices(const Hypergraph& h) {
  PeelResult out{h, {}};
  for (;;) {
    const auto& hg = out.residual;
    if (hg.m() == 0 || hg.has_empty_edge()) break;
    VertexSet common = hg.edge(0);
    for (const auto& e : hg.edges()) common &= e;
    const Vertex v = common.first();
    if (v < 0) break;
    out.peeled.push_back(v);
    Hypergraph next(hg.n());
    for (const auto& e : hg.edges()) next.add_edge(VertexSet(e).erase(v));
    out.residual = std::move(next);
  }
  return out;
}

std::vector<VertexSet> reconstruct_transversals(const PeelResult& peel,
                                                std::vector<VertexSet> residual_transversals) {
  std::vector<VertexSet> out;
  const auto n = peel.residual.n();
  for (Vertex v : peel.peeled) out.push_back(VertexSet(n, {v}));
  for (auto& t : residual_transversals) out.push_back(std::move(t));
  return out;
}

namespace {

std::size_t next_power_of_two_at_least(std::size_t x, std::size_t floor) {
  return std::bit_ceil(std::max(x, floor));
}

// Smallest N >= x with N + 1 a power of two.
std::size_t next_mersenne_at_least(std::size_t x) { return std::bit_ceil(x + 1) - 1; }

bool is_mersenne(std::size_t x) { return std::has_single_bit(x + 1); }

}  // namespace

Hypergraph pad_for_resolving_reduction(const Hypergraph& h) {
  if (h.m() == 0) throw Error(ErrorCode::kPreconditionViolation, "hypergraph has no edge");
  if (h.has_empty_edge()) throw Error(ErrorCode::kPreconditionViolation, "hypergraph has an empty edge");
  if (!h.is_sperner_up_to_duplicates()) {
    throw Error(ErrorCode::kPreconditionViolation, "hypergraph is not Sperner");
  }
  for (std::size_t j = 0; j < h.m(); ++j) {
    if (h.edge(j).size() == h.n()) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "edge " + std::to_string(j + 1) + " equals the full vertex set");
    }
  }
  const auto n = next_power_of_two_at_least(h.n(), 4);
  const auto m = next_power_of_two_at_least(h.m(), 4);
  Hypergraph out(n);
  for (const auto& e : h.edges()) out.add_edge(e.resized(n));
  while (out.m() < m) out.add_edge(out.edge(0));
  return out;
}

bool conforms_to_ext_resolving(const ExtSource& s) {
  const auto& h = s.hypergraph;
  // With n or m equal to 1 a single u or w vertex has no pair it alone separates,
  // so the gadget's U or W could never sit inside a minimal resolving set.
  if (h.n() < 3 || h.m() < 3) return false;
  if (!is_mersenne(h.n()) || !is_mersenne(h.m())) return false;
  const auto last = static_cast<Vertex>(h.n() - 1);
  return h.edge(h.m() - 1) == VertexSet(h.n(), {last}) && !s.exclude.contains(last);
}

ExtSource pad_for_ext_resolving_reduction(const ExtSource& source) {
  const auto& h = source.hypergraph;
  if (source.include.intersects(source.exclude)) {
    throw Error(ErrorCode::kInvalidInput, "A and B intersect");
  }
  if (conforms_to_ext_resolving(source)) return source;

  const auto n = next_mersenne_at_least(h.n() + 1);
  const auto m = next_mersenne_at_least(h.m() + 1);
  // Dummy vertices h.n()..n-2 take a private singleton edge while the edge budget
  // lasts; leftover edge slots copy an existing edge. Neither changes the answer.
  const auto spare_vertices = n - h.n() - 1;
  const auto spare_edges = m - h.m() - 1;
  ExtSource out{Hypergraph(n), source.include.resized(n), source.exclude.resized(n)};
  for (const auto& e : h.edges()) out.hypergraph.add_edge(e.resized(n));
  std::size_t added = 0;
  for (std::size_t k = 0; k < spare_vertices && added < spare_edges; ++k, ++added) {
    out.hypergraph.add_edge(VertexSet(n, {static_cast<Vertex>(h.n() + k)}));
  }
  for (; added < spare_edges; ++added) out.hypergraph.add_edge(out.hypergraph.edge(0));
  out.hypergraph.add_edge(VertexSet(n, {static_cast<Vertex>(n - 1)}));
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::vector<std::vector<Vertex>> edges;
  std::size_t max_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == 'p') {
      std::istringstream fields(line.substr(start + 1));
      std::string kind;
      long long nn = -1;
      long long mm = -1;
      fields >> kind >> nn >> mm;
      if (kind != "hg" || !fields || nn < 0 || mm < 0) {
        parse_fail(line_no, start + 1, "expected 'p hg <n> <m>'");
      }
      if (n || !edges.empty()) parse_fail(line_no, start + 1, "header must come first");
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      continue;
    }
    std::vector<Vertex> edge;
    std::size_t pos = start;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) break;
      auto end = line.find_first_of(" \t\r", pos);
      if (end == std::string::npos) end = line.size();
      const std::string token = line.substr(pos, end - pos);
      long long value = 0;
      std::size_t used = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) parse_fail(line_no, pos + 1, "expected vertex index, got '" + token + "'");
      if (value < 1) parse_fail(line_no, pos + 1, "vertex indices are 1-based");
      if (n && static_cast<std::size_t>(value) > *n) {
        parse_fail(line_no, pos + 1, "vertex index " + token + " exceeds n=" + std::to_string(*n));
      }
      max_index = std::max(max_index, static_cast<std::size_t>(value));
      edge.push_back(static_cast<Vertex>(value - 1));
      pos = end;
    }
    edges.push_back(std::move(edge));
  }
  if (m && *m != edges.size()) {
    parse_fail(line_no, 1,
               "header declares " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()));
  }
  return Hypergraph::from_lists(n.value_or(max_index), edges);
}

std::string write_hypergraph(const Hypergraph& h) {
  std::string out = "p hg " + std::to_string(h.n()) + " " + std::to_string(h.m()) + "\n";
  for (const auto& e : h.edges()) {
    if (e.empty()) throw Error(ErrorCode::kInvalidInput, "empty edges cannot be written in .hg format");
    out += format_one_based(e) + "\n";
  }
  return out;
}

}  // namespace metenum

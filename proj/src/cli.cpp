#include "metenum/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "metenum/enumerate.hpp"
#include "metenum/error.hpp"
#include "metenum/metric.hpp"
#include "metenum/oracle.hpp"
#include "metenum/reductions.hpp"

namespace metenum {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::kInvalidInput, "cannot write '" + path + "'");
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Engine engine_from(const std::string& name) {
  return name == "berge" ? Engine::kBergeSequential : Engine::kDfsHittingSet;
}

VertexSet one_based_set(const std::vector<int>& indices, std::size_t n, const char* what) {
  VertexSet s(n);
  for (int i : indices) {
    if (i < 1 || static_cast<std::size_t>(i) > n) {
      throw Error(ErrorCode::kInvalidInput,
                  std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    s.insert(i - 1);
  }
  return s;
}

struct RunReport {
  std::size_t solutions = 0;
  std::uint64_t max_gap_ticks = 0;
  std::uint64_t total_ticks = 0;
  double wall_ms = 0;
  std::string engine;
  std::string input_digest;

  nlohmann::ordered_json to_json() const {
    return {{"solutions", solutions},       {"max_gap_ticks", max_gap_ticks},
            {"total_ticks", total_ticks},   {"wall_ms", wall_ms},
            {"engine", engine},             {"input_digest", input_digest}};
  }
};

// Streams every solution as one line; returns the run's report.
RunReport drain(SolutionStream& stream, std::ostream* out) {
  const auto start = Clock::now();
  RunReport report;
  while (auto s = stream.next()) {
    if (out) *out << format_one_based(*s) << '\n' << std::flush;
  }
  report.solutions = stream.emitted();
  report.max_gap_ticks = stream.max_gap();
  report.total_ticks = stream.ticks();
  report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

struct EnumerateFlags {
  std::string input;
  std::string engine = "dfs";
  std::uint64_t regularize = 0;
  std::string stats;
  std::size_t size_limit = 20;
};

void add_enumerate_flags(CLI::App* cmd, EnumerateFlags& f, bool engine, bool regularize) {
  if (engine) {
    cmd->add_option("--engine", f.engine, "transversal engine")->check(CLI::IsMember({"berge", "dfs"}));
  }
  if (regularize) cmd->add_option("--regularize", f.regularize, "release one solution per BUDGET ticks");
  cmd->add_option("--stats", f.stats, "append a run report")->check(CLI::IsMember({"json"}));
}

int run_enumeration(const EnumerateFlags& f, const std::string& engine_label,
                    const std::function<SolutionStream(const std::string&)>& make, std::ostream& out) {
  const std::string text = read_input(f.input);
  SolutionStream stream = make(text);
  if (f.regularize > 0) stream = regularize_delay(std::move(stream), f.regularize);
  RunReport report = drain(stream, &out);
  report.engine = engine_label;
  report.input_digest = fnv1a_hex(text);
  if (f.stats == "json") out << report.to_json().dump() << '\n';
  return kExitOk;
}

// --- reduce -------------------------------------------------------------------

const char* dot_color(RoleKind kind) {
  switch (kind) {
    case RoleKind::kV: return "lightblue";
    case RoleKind::kH: return "salmon";
    case RoleKind::kHPrime: return "pink";
    case RoleKind::kU:
    case RoleKind::kUPrime:
    case RoleKind::kUStar: return "palegreen";
    case RoleKind::kW:
    case RoleKind::kWPrime: return "khaki";
    default: return "lightgrey";
  }
}

std::string render_dot(const ReductionArtifact& r, const VertexSet* include, const VertexSet* exclude) {
  std::ostringstream dot;
  dot << "graph gadget {\n"
      << "  // legend: V lightblue, H salmon, H' pink, U/U'/U* palegreen, W/W' khaki, others lightgrey;\n"
      << "  // include set drawn bold, exclude set dashed\n"
      << "  node [style=filled];\n";
  for (std::size_t v = 0; v < r.graph().n(); ++v) {
    const Role& role = r.role(static_cast<Vertex>(v));
    dot << "  " << v + 1 << " [label=\"" << role_name(role) << "\", fillcolor=" << dot_color(role.kind);
    if (include && include->contains(static_cast<Vertex>(v))) dot << ", penwidth=3";
    if (exclude && exclude->contains(static_cast<Vertex>(v))) dot << ", style=\"filled,dashed\"";
    dot << "];\n";
  }
  for (auto [u, v] : r.graph().edges()) dot << "  " << u + 1 << " -- " << v + 1 << ";\n";
  dot << "}\n";
  return dot.str();
}

std::string render_roles(const ReductionArtifact& r) {
  std::string out;
  for (std::size_t v = 0; v < r.graph().n(); ++v) {
    out += std::to_string(v + 1) + " " + role_name(r.role(static_cast<Vertex>(v))) + "\n";
  }
  return out;
}

struct ReduceFlags {
  std::string input;
  std::string kind;
  std::vector<int> include;
  std::vector<int> exclude;
  std::string out_prefix;
  bool dot = false;
};

int run_reduce(const ReduceFlags& f, std::ostream& out) {
  const Hypergraph h = parse_hypergraph(read_input(f.input));
  const ExtSource source{h, one_based_set(f.include, h.n(), "include"),
                         one_based_set(f.exclude, h.n(), "exclude")};
  std::optional<ReductionArtifact> artifact;
  std::optional<ExtInstance> ext;
  if (f.kind == "resolving") {
    artifact = build_minresolving_instance(pad_for_resolving_reduction(h));
  } else if (f.kind == "geodetic") {
    artifact = build_mingeodetic_instance(h);
  } else if (f.kind == "ext-geodetic") {
    ext = build_ext_geodetic_instance(source);
  } else {
    ext = build_ext_resolving_instance(pad_for_ext_resolving_reduction(source));
  }
  const ReductionArtifact& r = ext ? ext->artifact : *artifact;

  std::string graph_text = write_graph(r.graph());
  for (std::size_t v = 0; v < r.graph().n(); ++v) {
    graph_text += "c role " + std::to_string(v + 1) + " " + role_name(r.role(static_cast<Vertex>(v))) + "\n";
  }
  if (ext) {
    graph_text += "c include " + format_one_based(ext->include) + "\n";
    graph_text += "c exclude " + format_one_based(ext->exclude) + "\n";
  }
  const std::string dot = render_dot(r, ext ? &ext->include : nullptr, ext ? &ext->exclude : nullptr);

  if (f.out_prefix.empty()) {
    out << (f.dot ? dot : graph_text);
    return kExitOk;
  }
  write_file(f.out_prefix + ".graph", graph_text);
  write_file(f.out_prefix + ".roles", render_roles(r));
  if (f.dot) write_file(f.out_prefix + ".dot", dot);
  out << "wrote " << f.out_prefix << ".graph (" << r.graph().n() << " vertices, " << r.graph().edge_count()
      << " edges)\n";
  return kExitOk;
}

// --- ext ----------------------------------------------------------------------

struct ExtFlags {
  std::string input;
  std::string kind = "transversal";
  bool reduce = false;
  std::vector<int> include;
  std::vector<int> exclude;
  std::size_t limit = 24;
};

int run_ext(const ExtFlags& f, std::ostream& out) {
  const std::string text = read_input(f.input);
  ExtAnswer answer;
  if (f.kind == "transversal" || f.reduce) {
    const Hypergraph h = parse_hypergraph(text);
    const ExtSource source{h, one_based_set(f.include, h.n(), "include"),
                           one_based_set(f.exclude, h.n(), "exclude")};
    if (f.kind == "transversal") {
      answer = ext_check_transversal(source, f.limit);
    } else {
      const ExtInstance inst = f.kind == "geodetic"
                                   ? build_ext_geodetic_instance(source)
                                   : build_ext_resolving_instance(pad_for_ext_resolving_reduction(source));
      answer = ext_check(inst, f.limit);
      // Report the transversal side of the gadget solution, without padding dummies.
      if (answer.yes) {
        VertexSet t(h.n());
        (answer.witness & inst.artifact.vertices_of(RoleKind::kV)).for_each([&](Vertex v) {
          const int i = inst.artifact.role(v).index - 1;
          if (static_cast<std::size_t>(i) < h.n()) t.insert(i);
        });
        answer.witness = std::move(t);
      }
    }
  } else {
    const Graph g = parse_graph(text);
    const auto kind = f.kind == "geodetic" ? ExtKind::kGeodetic : ExtKind::kResolving;
    answer = ext_check(kind, g, one_based_set(f.include, g.n(), "include"),
                       one_based_set(f.exclude, g.n(), "exclude"), f.limit);
  }
  if (answer.yes) {
    const auto members = format_one_based(answer.witness);
    out << "YES" << (members.empty() ? "" : " ") << members << '\n';
  } else {
    out << "NO\n";
  }
  return kExitOk;
}

// --- verify -------------------------------------------------------------------

Graph random_connected(std::mt19937_64& rng, std::size_t n, double p) {
  GraphBuilder b(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t v = 1; v < n; ++v) {
    b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(rng() % v));
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m, double p) {
  Hypergraph h(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t j = 0; j < m; ++j) {
    VertexSet e(n);
    for (std::size_t v = 0; v < n; ++v)
      if (coin(rng)) e.insert(static_cast<Vertex>(v));
    if (e.empty()) e.insert(static_cast<Vertex>(rng() % n));
    h.add_edge(std::move(e));
  }
  return h;
}

std::vector<VertexSet> canonical(std::vector<VertexSet> sets) {
  sort_canonical(sets);
  return sets;
}

struct VerifyFlags {
  std::uint64_t seed = 1;
  int rounds = 20;
};

// Cross-checks every enumerator against the brute-force oracle on a fixed corpus
// plus seeded random instances.
int run_verify(const VerifyFlags& f, std::ostream& out) {
  std::mt19937_64 rng(f.seed);
  const Hypergraph h1 = Hypergraph::from_lists(8, {{0, 1}, {1, 2, 3}, {2, 4}, {3, 4, 5, 6, 7}});
  const Hypergraph h2 = Hypergraph::from_lists(6, {{0, 1}, {1, 2, 3}, {2, 4}, {3, 4, 5}});
  std::vector<Graph> graphs = {
      Graph::from_edges(3, {{0, 1}, {1, 2}}),
      Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
      Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
      Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}),
  };
  for (int i = 0; i < f.rounds; ++i) graphs.push_back(random_connected(rng, 2 + rng() % 7, 0.3));
  std::vector<Hypergraph> hypergraphs = {h1, h2};
  for (int i = 0; i < f.rounds; ++i) hypergraphs.push_back(random_hypergraph(rng, 1 + rng() % 7, rng() % 7, 0.35));

  int failures = 0;
  const auto report = [&](const std::string& name, std::size_t checked, std::size_t bad) {
    if (bad == 0) {
      out << "ok   " << name << " (" << checked << " instances)\n";
    } else {
      out << "FAIL " << name << " (" << bad << " of " << checked << " instances)\n";
      ++failures;
    }
  };

  std::size_t bad = 0;
  for (const auto& h : hypergraphs) {
    const auto expected = brute_minimal_solutions(transversal_predicate(h));
    for (Engine e : {Engine::kBergeSequential, Engine::kDfsHittingSet}) {
      bad += canonical(collect(enumerate_minimal_transversals(h, e))) != expected;
    }
  }
  report("transversals", hypergraphs.size(), bad);

  bad = 0;
  for (const auto& g : graphs) {
    bad += canonical(collect(enumerate_minimal_resolving_sets(g))) != brute_minimal_solutions(resolving_predicate(g));
  }
  report("resolving", graphs.size(), bad);

  bad = 0;
  for (const auto& g : graphs) {
    bad += canonical(collect(enumerate_minimal_geodetic_sets(g))) != brute_minimal_solutions(geodetic_predicate(g));
  }
  report("geodetic", graphs.size(), bad);

  bad = 0;
  for (const auto& g : graphs) {
    bad += canonical(collect(enumerate_minimal_strong_resolving_sets(g))) !=
           brute_minimal_solutions(strong_resolving_predicate(g));
  }
  report("strong-resolving", graphs.size(), bad);

  bad = 0;
  for (const auto& g : graphs) {
    const PairHypergraph ph(g);
    std::vector<VertexSet> unions;
    for (const auto& t : brute_minimal_consistent_transversals(ph)) unions.push_back(ph.vertex_union(t));
    bad += canonical(std::move(unions)) != brute_minimal_solutions(geodetic_predicate(g));
  }
  report("consistent-transversals", graphs.size(), bad);

  bad = 0;
  {
    auto stats = std::make_shared<PipelineStats>();
    const auto tr = canonical(collect(transenum_via_minresolving(h1, 0, stats)));
    bad += tr != brute_minimal_solutions(transversal_predicate(h1));
    bad += stats->inner_solutions != 4 * 8 * 4 * (tr.size() + 2 * 4);
  }
  report("resolving-reduction", 1, bad);

  bad = 0;
  {
    auto stats = std::make_shared<PipelineStats>();
    const auto tr = canonical(collect(transenum_via_mingeodetic(h2, stats)));
    bad += tr != brute_minimal_solutions(transversal_predicate(h2));
    bad += stats->inner_solutions != h2.m() + tr.size();
  }
  report("geodetic-reduction", 1, bad);

  bad = 0;
  std::size_t checked = 0;
  for (int i = 0; i < f.rounds; ++i) {
    const std::size_t n = 2 + rng() % 4;
    const Hypergraph h = random_hypergraph(rng, n, 1 + rng() % 4, 0.4);
    VertexSet a(n);
    VertexSet b(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto roll = rng() % 4;
      if (roll == 0) a.insert(static_cast<Vertex>(v));
      if (roll == 1) b.insert(static_cast<Vertex>(v));
    }
    const ExtSource source{h, a, b};
    const bool expected = ext_check_transversal(source).yes;
    ++checked;
    bad += ext_check(build_ext_resolving_instance(pad_for_ext_resolving_reduction(source))).yes != expected;
    if (classify_transversal(h, VertexSet::full(n)).kind != TransversalClass::Kind::kMinimal) {
      bad += ext_check(build_ext_geodetic_instance(source)).yes != expected;
    }
  }
  report("ext-reductions", checked, bad);

  return failures == 0 ? kExitOk : kExitMismatch;
}

// --- bench --------------------------------------------------------------------

struct BenchFlags {
  std::string problem = "transversals";
  std::string input;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::string engine = "dfs";
  int repeat = 1;
};

int run_bench(const BenchFlags& f, std::ostream& out) {
  std::string text;
  if (f.random > 0) {
    std::mt19937_64 rng(f.seed);
    text = f.problem == "transversals" ? write_hypergraph(random_hypergraph(rng, f.random, f.random, 0.3))
                                       : write_graph(random_connected(rng, f.random, 0.2));
  } else if (!f.input.empty()) {
    text = read_input(f.input);
  } else {
    throw Error(ErrorCode::kInvalidInput, "bench needs an input file or --random N");
  }
  const Engine engine = engine_from(f.engine);
  const auto make = [&]() -> SolutionStream {
    if (f.problem == "transversals") return enumerate_minimal_transversals(parse_hypergraph(text), engine);
    const Graph g = parse_graph(text);
    if (f.problem == "resolve") return enumerate_minimal_resolving_sets(g, engine);
    if (f.problem == "geodetic") return enumerate_minimal_geodetic_sets(g, {20, engine});
    if (f.problem == "strong-resolve") return enumerate_minimal_strong_resolving_sets(g);
    return enumerate_maximal_independent_sets(g);
  };
  RunReport best;
  for (int i = 0; i < std::max(1, f.repeat); ++i) {
    SolutionStream stream = make();
    RunReport r = drain(stream, nullptr);
    if (i == 0 || r.wall_ms < best.wall_ms) best = r;
  }
  best.engine = f.problem == "strong-resolve" || f.problem == "mis" ? "tsukiyama" : to_string(engine);
  best.input_digest = fnv1a_hex(text);
  out << best.to_json().dump() << '\n';
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return kExitParse;
    case ErrorCode::kInvalidInput: return kExitUsage;
    case ErrorCode::kDecodeFailure: return kExitMismatch;
    default: return kExitPrecondition;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate minimal resolving, geodetic and strong resolving sets and minimal transversals."};
  app.name(args.empty() ? "metenum" : args.front());
  app.require_subcommand(1);

  EnumerateFlags tr_flags;
  auto* transversals = app.add_subcommand("transversals", "minimal transversals of a .hg hypergraph");
  transversals->add_option("input", tr_flags.input, "hypergraph file, '-' for stdin")->required();
  add_enumerate_flags(transversals, tr_flags, true, true);

  EnumerateFlags res_flags;
  auto* resolve = app.add_subcommand("resolve", "minimal resolving sets of a graph");
  resolve->add_option("input", res_flags.input, "graph file, '-' for stdin")->required();
  add_enumerate_flags(resolve, res_flags, true, true);

  EnumerateFlags geo_flags;
  auto* geodetic = app.add_subcommand("geodetic", "minimal geodetic sets of a connected graph");
  geodetic->add_option("input,--input", geo_flags.input, "graph file, '-' for stdin")->required();
  geodetic->add_option("--size-limit", geo_flags.size_limit, "largest n for non-split graphs");
  add_enumerate_flags(geodetic, geo_flags, true, true);

  EnumerateFlags strong_flags;
  auto* strong = app.add_subcommand("strong-resolve", "minimal strong resolving sets of a connected graph");
  strong->add_option("input", strong_flags.input, "graph file, '-' for stdin")->required();
  add_enumerate_flags(strong, strong_flags, false, true);

  ReduceFlags reduce_flags;
  auto* reduce = app.add_subcommand("reduce", "build a reduction gadget from a .hg hypergraph");
  reduce->add_option("input", reduce_flags.input, "hypergraph file")->required();
  reduce->add_option("--kind", reduce_flags.kind, "gadget kind")
      ->required()
      ->check(CLI::IsMember({"resolving", "geodetic", "ext-geodetic", "ext-resolving"}));
  reduce->add_option("--include", reduce_flags.include, "A, 1-based, comma separated")->delimiter(',');
  reduce->add_option("--exclude", reduce_flags.exclude, "B, 1-based, comma separated")->delimiter(',');
  reduce->add_option("--out", reduce_flags.out_prefix, "write PREFIX.graph, PREFIX.roles (and PREFIX.dot)");
  reduce->add_flag("--dot", reduce_flags.dot, "emit Graphviz DOT with role colors");

  ExtFlags ext_flags;
  auto* ext = app.add_subcommand("ext", "is there a minimal solution containing A and avoiding B?");
  ext->add_option("input", ext_flags.input, "hypergraph or graph file")->required();
  ext->add_option("--kind", ext_flags.kind, "solution kind")
      ->check(CLI::IsMember({"transversal", "geodetic", "resolving"}));
  ext->add_flag("--reduce", ext_flags.reduce, "read a hypergraph and answer through the kind's gadget");
  ext->add_option("--include", ext_flags.include, "A, 1-based, comma separated")->delimiter(',');
  ext->add_option("--exclude", ext_flags.exclude, "B, 1-based, comma separated")->delimiter(',');
  ext->add_option("--limit", ext_flags.limit, "largest number of free vertices searched");

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "cross-check every enumerator against brute force");
  verify->add_option("--seed", verify_flags.seed, "random corpus seed");
  verify->add_option("--rounds", verify_flags.rounds, "random instances per check");

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "time an enumeration and print a run report");
  bench->add_option("--problem", bench_flags.problem, "what to enumerate")
      ->check(CLI::IsMember({"transversals", "resolve", "geodetic", "strong-resolve", "mis"}));
  bench->add_option("input", bench_flags.input, "instance file");
  bench->add_option("--random", bench_flags.random, "generate a random instance of this size");
  bench->add_option("--seed", bench_flags.seed, "seed for --random");
  bench->add_option("--engine", bench_flags.engine, "transversal engine")->check(CLI::IsMember({"berge", "dfs"}));
  bench->add_option("--repeat", bench_flags.repeat, "runs; the fastest is reported");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*transversals) {
      return run_enumeration(tr_flags, tr_flags.engine, [&](const std::string& text) {
        return enumerate_minimal_transversals(parse_hypergraph(text), engine_from(tr_flags.engine));
      }, out);
    }
    if (*resolve) {
      return run_enumeration(res_flags, res_flags.engine, [&](const std::string& text) {
        return enumerate_minimal_resolving_sets(parse_graph(text), engine_from(res_flags.engine));
      }, out);
    }
    if (*geodetic) {
      return run_enumeration(geo_flags, geo_flags.engine, [&](const std::string& text) {
        return enumerate_minimal_geodetic_sets(parse_graph(text),
                                               {geo_flags.size_limit, engine_from(geo_flags.engine)});
      }, out);
    }
    if (*strong) {
      return run_enumeration(strong_flags, "tsukiyama", [](const std::string& text) {
        return enumerate_minimal_strong_resolving_sets(parse_graph(text));
      }, out);
    }
    if (*reduce) return run_reduce(reduce_flags, out);
    if (*ext) return run_ext(ext_flags, out);
    if (*verify) return run_verify(verify_flags, out);
    if (*bench) return run_bench(bench_flags, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace metenum

#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "metenum/cli.hpp"
#include "metenum/reductions.hpp"

using namespace metenum;
using namespace metenum::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  std::vector<std::string> lines() const {
    std::vector<std::string> result;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
  }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "metenum");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("metenum-cli-" + std::to_string(std::random_device{}()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = (path_ / name).string();
    std::ofstream(p) << content;
    return p;
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("cli transversals") {
  TempDir dir;
  const auto h2 = dir.file("h2.hg", "1 2\n2 3 4\n3 5\n4 5 6\n");
  const Run r = run({"transversals", h2});
  CHECK(r.code == kExitOk);
  auto lines = r.lines();
  CHECK(lines.size() == 7);
  CHECK(std::find(lines.begin(), lines.end(), "1 3 5") != lines.end());

  auto berge = run({"transversals", h2, "--engine", "berge"}).lines();
  std::sort(lines.begin(), lines.end());
  std::sort(berge.begin(), berge.end());
  CHECK(berge == lines);

  CHECK(run({"transversals", h2}).out == r.out);

  const Run stats = run({"transversals", h2, "--stats", "json"});
  const auto report = nlohmann::json::parse(stats.lines().back());
  CHECK(report["solutions"] == 7);
  CHECK(report["engine"] == "dfs");
  CHECK(report["input_digest"].get<std::string>().size() == 16);
  CHECK(report["total_ticks"].get<std::uint64_t>() >= report["max_gap_ticks"].get<std::uint64_t>());

  auto regular = run({"transversals", h2, "--regularize", "7"}).lines();
  std::sort(regular.begin(), regular.end());
  CHECK(regular == lines);
}

TEST_CASE("cli metric problems") {
  TempDir dir;
  const auto p3 = dir.file("p3.graph", "p edge 3 2\ne 1 2\ne 2 3\n");
  auto strong = run({"strong-resolve", p3}).lines();
  std::sort(strong.begin(), strong.end());
  CHECK(strong == std::vector<std::string>{"1", "3"});
  auto resolve = run({"resolve", p3}).lines();
  std::sort(resolve.begin(), resolve.end());
  CHECK(resolve == std::vector<std::string>{"1", "3"});
  CHECK(run({"geodetic", p3}).out == "1 3\n");

  const auto h2 = dir.file("h2.hg", "1 2\n2 3 4\n3 5\n4 5 6\n");
  const auto prefix = dir.path("fig2");
  REQUIRE(run({"reduce", "--kind", "geodetic", h2, "--out", prefix}).code == kExitOk);
  CHECK(run({"geodetic", "--input", prefix + ".graph"}).lines().size() == 11);
}

TEST_CASE("cli reduce") {
  TempDir dir;
  const auto h1_file = dir.file("h1.hg", "1 2\n2 3 4\n3 5\n4 5 6 7 8\n");
  const auto prefix = dir.path("fig1");
  const Run r = run({"reduce", "--kind", "resolving", h1_file, "--out", prefix, "--dot"});
  CHECK(r.code == kExitOk);
  const auto built = build_minresolving_instance(h1());
  CHECK(parse_graph(slurp(prefix + ".graph")) == built.graph());
  const auto roles = slurp(prefix + ".roles");
  CHECK(roles.starts_with("1 v1\n2 v2\n"));
  CHECK(roles.find("\n13 e'1\n") != std::string::npos);
  CHECK(roles.find("\n17 u1\n18 u'1\n") != std::string::npos);
  const auto dot = slurp(prefix + ".dot");
  CHECK(dot.starts_with("graph gadget {"));
  CHECK(dot.find("label=\"w'3\"") != std::string::npos);

  const Run inline_graph = run({"reduce", "--kind", "ext-geodetic", h1_file, "--include", "1", "--exclude", "2"});
  CHECK(inline_graph.code == kExitOk);
  CHECK(inline_graph.out.find("c role 13 a\n") != std::string::npos);
  CHECK(inline_graph.out.find("c include 1 13 14 15\n") != std::string::npos);
  CHECK(inline_graph.out.find("c exclude 2 9 10 11 12\n") != std::string::npos);

  CHECK(run({"reduce", "--kind", "ext-resolving", h1_file, "--dot"}).out.starts_with("graph gadget {"));
}

TEST_CASE("cli ext") {
  TempDir dir;
  const auto h2 = dir.file("h2.hg", "1 2\n2 3 4\n3 5\n4 5 6\n");
  CHECK(run({"ext", h2, "--include", "1", "--exclude", "2"}).out == "YES 1 3 4\n");
  CHECK(run({"ext", h2, "--include", "1,2"}).out == "NO\n");
  CHECK(run({"ext", h2}).out == "YES 2 5\n");
  CHECK(run({"ext", "--kind", "geodetic", "--reduce", h2, "--include", "1", "--exclude", "2"}).out == "YES 1 3 4\n");
  CHECK(run({"ext", "--kind", "resolving", "--reduce", h2, "--include", "1", "--exclude", "2"}).out == "YES 1 3 4\n");
  CHECK(run({"ext", "--kind", "resolving", "--reduce", h2, "--include", "1,2"}).out == "NO\n");

  const auto p3 = dir.file("p3.graph", "p edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(run({"ext", "--kind", "resolving", p3, "--exclude", "1"}).out == "YES 3\n");
  CHECK(run({"ext", "--kind", "resolving", p3, "--include", "2"}).out == "NO\n");
  CHECK(run({"ext", h2, "--include", "1", "--exclude", "1"}).code == kExitPrecondition);
  CHECK(run({"ext", h2, "--include", "9"}).code == kExitUsage);
}

TEST_CASE("cli verify and bench") {
  const Run v = run({"verify", "--rounds", "5"});
  CHECK(v.code == kExitOk);
  for (const auto& line : v.lines()) CHECK(line.starts_with("ok"));
  CHECK(v.lines().size() == 8);

  const Run b = run({"bench", "--problem", "mis", "--random", "12", "--seed", "3"});
  CHECK(b.code == kExitOk);
  const auto report = nlohmann::json::parse(b.out);
  CHECK(report["engine"] == "tsukiyama");
  CHECK(report["solutions"].get<int>() > 0);
  CHECK(run({"bench"}).code == kExitUsage);
}

TEST_CASE("cli exit codes") {
  TempDir dir;
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"transversals"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  const auto loop = dir.file("loop.graph", "p edge 3 1\ne 1 1\n");
  const Run parse = run({"resolve", loop});
  CHECK(parse.code == kExitParse);
  CHECK(parse.err.find("line 2") != std::string::npos);
  CHECK(run({"resolve", dir.path("missing.graph")}).code == kExitParse);

  const auto split = dir.file("split.graph", "p edge 3 1\ne 1 2\n");
  CHECK(run({"geodetic", split}).code == kExitPrecondition);
  CHECK(run({"strong-resolve", split}).code == kExitPrecondition);

  const auto full = dir.file("full.hg", "1 2\n");
  CHECK(run({"reduce", "--kind", "resolving", full}).code == kExitPrecondition);
  const auto universal = dir.file("universal.hg", "1 2\n1 3\n");
  CHECK(run({"reduce", "--kind", "geodetic", universal}).code == kExitPrecondition);
  const auto empty_edge = dir.file("empty.hg", "p hg 2 0\n");
  CHECK(run({"transversals", empty_edge}).out == "\n");
}

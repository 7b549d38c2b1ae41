#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rgl/families.hpp"
#include "rgl/graph_io.hpp"
#include "rgl_tools/cli.hpp"

using rgl::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream ss(out);
    for (std::string line; std::getline(ss, line);) v.push_back(line);
    return v;
  }
  Json json(std::size_t i) const { return Json::parse(lines().at(i)); }
};

Result cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "rgl");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Result r;
  r.code = run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "rgl_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("threshold") {
  const Result a = cli({"threshold", "-r", "3", "-t", "3", "-n", "8"});
  CHECK(a.code == 0);
  CHECK(a.out.find("k=1 x=4 M=2 threshold=6") != std::string::npos);
  const Result b = cli({"threshold", "-r", "2", "-t", "5", "-n", "9", "--format", "json"});
  CHECK(b.code == 0);
  CHECK(b.json(1)["k"] == 2);
  CHECK(b.json(1)["threshold"] == 3);
  const Result c = cli({"threshold", "-r", "3", "-t", "3", "-n", "4"});
  CHECK(c.code == 65);
  CHECK(c.err.find("below classical Ramsey window") != std::string::npos);
}

TEST_CASE("arrows") {
  const std::string k5 = rgl::to_graph6(rgl::families::complete(5));
  const Result a = cli({"arrows", "--graph6", k5, "-r", "3", "-t", "3"});
  CHECK(a.code == 0);
  const Json h = a.json(0);
  CHECK(h["command"] == "arrows");
  CHECK(h.contains("seed"));
  CHECK(h.contains("budget"));
  CHECK(a.json(1)["verdict"] == "arrows");

  const Result b = cli({"arrows", "-r", "3", "-t", "3"}, "C~\n");
  CHECK(b.code == 1);
  CHECK(b.json(1)["verdict"] == "not_arrows");
  CHECK(b.json(1)["blue_edges"].size() == 2);

  CHECK(cli({"arrows", "-r", "3", "-t", "3"}, "").code == 64);
  CHECK(cli({"arrows", "-r", "3", "-t", "3", "--graph6", "D~"}).code == 64);
  CHECK(cli({"arrows", "-r", "3"}).code == 64);

  const Result u = cli({"arrows", "--graph6", "F~~~w", "-r", "3", "-t", "4", "--budget", "2"});
  CHECK(u.code == 2);
  CHECK(u.json(1)["verdict"] == "undecided");
  CHECK(u.json(0)["budget"] == 2);

  const Result edges = cli({"arrows", "-r", "3", "-t", "3"}, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(edges.code == 1);
}

TEST_CASE("arrows output is thread independent and honours RGL_BUDGET") {
  const std::string k7 = rgl::to_graph6(rgl::families::complete(7));
  const Result one = cli({"arrows", "--graph6", k7, "-r", "3", "-t", "4"});
  const Result four = cli({"arrows", "--graph6", k7, "-r", "3", "-t", "4", "--threads", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  setenv("RGL_BUDGET", "5", 1);
  const Result env = cli({"arrows", "--graph6", k7, "-r", "3", "-t", "4"});
  CHECK(env.code == 2);
  CHECK(env.json(0)["budget"] == 5);
  const Result flag = cli({"arrows", "--graph6", k7, "-r", "3", "-t", "4", "--budget", "100000"});
  CHECK(flag.code == 0);
  unsetenv("RGL_BUDGET");
}

TEST_CASE("verify") {
  const Result b = cli({"arrows", "--graph6", "C~", "-r", "3", "-t", "3"});
  const std::string cert = b.lines().at(1);
  const Result ok = cli({"verify"}, cert);
  CHECK(ok.code == 0);
  CHECK(ok.json(1)["verified"] == true);
  Json tampered = Json::parse(cert);
  tampered["blue_edges"].erase(tampered["blue_edges"].size() - 1);
  CHECK(cli({"verify"}, tampered.dump()).code == 1);
  CHECK(cli({"verify"}, "{}").code == 64);
}

TEST_CASE("construct") {
  const auto prefix = scratch("ex331").string();
  const Result a = cli({"construct", "-r", "3", "-t", "3", "-k", "1", "--verify", "-o", prefix});
  CHECK(a.code == 0);
  CHECK(a.json(1)["pass"] == true);
  std::ifstream g6(prefix + ".g6");
  std::string line;
  std::getline(g6, line);
  CHECK(rgl::from_graph6(line).order() == 8);
  std::ifstream side(prefix + ".json");
  const Json sj = Json::parse(side);
  CHECK(sj["parts"].size() == 2);

  const Result b = cli({"construct", "-r", "2", "-t", "3", "-k", "1"});
  CHECK(b.code == 0);
  CHECK(b.json(1)["blue_edges"] == Json::parse("[[0,1],[2,3]]"));
  CHECK(b.json(1)["n"] == 4);
  CHECK(rgl::from_graph6(b.json(1)["graph6"].get<std::string>()).size() == 2);

  const Result c = cli({"construct", "-r", "3", "-t", "4", "-k", "1", "--verify"});
  CHECK(c.code == 0);
  CHECK(c.json(1)["min_degree"] == 8);
  CHECK(c.json(1)["pass"] == true);
  CHECK(cli({"construct", "-r", "3", "-t", "3", "-k", "0"}).code == 65);
}

TEST_CASE("witness") {
  const Result a = cli({"witness", "--graph6", "Bw", "-r", "2", "-t", "3", "--all-blue"});
  CHECK(a.code == 0);
  CHECK(a.json(1)["kind"] == "blue_path");
  CHECK(a.json(1)["vertices"] == Json::parse("[0,1,2]"));
  CHECK(a.json(1)["verified"] == true);
  const Result b = cli({"witness", "--graph6", "Bw", "-r", "3", "-t", "3", "--all-red"});
  CHECK(b.code == 65);
  CHECK(b.err.find("window") != std::string::npos);
  const Result c = cli({"witness", "--graph6", "E~~w", "-r", "3", "-t", "3", "--blue", "0 1,1 2,0 2,3 4,4 5,3 5",
                        "--trace"});
  CHECK(c.code == 0);
  CHECK(c.json(1)["verified"] == true);
  CHECK(c.json(1)["frames"].size() >= 1);
  const Result d = cli({"witness", "--graph6", "Gs@ipo", "-r", "3", "-t", "3", "--all-red"});
  CHECK(d.code == 65);
  CHECK(d.err.find("below threshold") != std::string::npos);
  CHECK(cli({"witness", "--graph6", "Bw", "-r", "2", "-t", "3"}).code == 65);
  CHECK(cli({"witness", "--graph6", "Bw", "-r", "2", "-t", "3", "--blue", "0 1 2"}).code == 64);
}

TEST_CASE("sweep") {
  const Result a = cli({"sweep", "-r", "2", "-t", "4", "-k", "1", "--n", "4..6", "--mode", "exhaustive"});
  CHECK(a.code == 0);
  REQUIRE(a.lines().size() == 4);
  CHECK(a.json(3)["pass"] == true);
  const Result b = cli({"sweep", "-r", "3", "-t", "3", "-k", "1", "--n", "5", "--mode", "exhaustive"});
  CHECK(b.code == 0);
  const std::vector<std::string> s{"sweep", "-r", "3", "-t", "3", "-k", "1", "--n", "8", "--mode", "sample",
                                   "--count", "3000", "--seed", "42"};
  const Result c = cli(s);
  CHECK(c.code == 0);
  CHECK(cli(s).out == c.out);
  auto threaded = s;
  threaded.insert(threaded.end(), {"--threads", "3"});
  CHECK(cli(threaded).out == c.out);
  CHECK(cli({"sweep", "-r", "3", "-t", "3", "-k", "1", "--n", "8", "--mode", "sample", "--count", "5"}).code == 65);
  CHECK(cli({"sweep", "-r", "3", "-t", "3", "-k", "1", "--n", "8"}).code == 65);
  CHECK(cli({"sweep", "-r", "3", "-t", "3", "-k", "1", "--n", "x..y"}).code == 64);
}

TEST_CASE("lemma") {
  const Result a = cli({"lemma", "partition", "--exhaustive-n", "8", "--d", "5"});
  CHECK(a.code == 0);
  CHECK(a.json(1)["pass"] == true);
  const Result b = cli({"lemma", "brooks", "--trials", "1000", "--seed", "7"});
  CHECK(b.code == 0);
  CHECK(b.json(0)["seed"] == 7);
  const Result c = cli({"lemma", "path-length", "--exhaustive-n", "8", "--k", "2"});
  CHECK(c.code == 0);
  CHECK(cli({"lemma", "nonsense"}).code == 64);
}

TEST_CASE("output to a file") {
  const auto path = scratch("thr.txt").string();
  const Result a = cli({"threshold", "-r", "3", "-t", "3", "-n", "8", "-o", path});
  CHECK(a.code == 0);
  CHECK(a.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("threshold=6") != std::string::npos);
}

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "linkpoly/cli.hpp"

using namespace linkpoly;

namespace {

struct TempFile {
  std::filesystem::path path;

  TempFile(const std::string& name, const std::string& contents) {
    path = std::filesystem::temp_directory_path() /
           ("linkpoly_test_" + name);
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kE3 = R"({"vertices": 3, "edges": []})";
const char* kHopf = R"({
  "vertices": 2,
  "edges": [
    {"id": "e1", "u": 0, "v": 1, "sign": "+"},
    {"id": "e2", "u": 0, "v": 1, "sign": "+"}
  ]
})";
const char* kLabeled2Cycle = R"({
  "vertices": 2,
  "edges": [
    {"id": "e1", "u": 0, "v": 1, "label": "a"},
    {"id": "e2", "u": 0, "v": 1, "label": "b"}
  ]
})";

}  // namespace

TEST_CASE("rational brackets from the command line") {
  auto r = run({"rational", "1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "-A^4 - A^-4\n");

  r = run({"rational", "0,1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("zero") != std::string::npos);

  r = run({"rational", "1,x"});
  CHECK(r.code == 1);
}

TEST_CASE("q and bracket verbs") {
  TempFile e3("e3.json", kE3);
  auto r = run({"q", e3.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "d^2\n");

  TempFile hopf("hopf.json", kHopf);
  r = run({"bracket", hopf.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "-A^4 - A^-4\n");

  r = run({"q", hopf.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "A^2d + 2AB + B^2d\n");

  r = run({"q", "/nonexistent/graph.json"});
  CHECK(r.code == 1);
}

TEST_CASE("bracket with a replacement spec") {
  TempFile edge("edge.json", R"({
    "vertices": 2,
    "edges": [{"id": "e1", "u": 0, "v": 1, "sign": "+"}]
  })");
  TempFile spec("spec.json", R"({"e1": {"kind": "sheaf", "n": 3}})");
  auto r = run({"bracket", edge.path.string(), "--spec", spec.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "A^7 - A^3 - A^-5\n");

  TempFile bad("bad_spec.json", R"({"e1": {"kind": "sheaf", "n": 0}})");
  r = run({"bracket", edge.path.string(), "--spec", bad.path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("nonzero") != std::string::npos);
}

TEST_CASE("jones verb") {
  TempFile hopf("hopf_j.json", kHopf);
  auto r = run({"jones", hopf.path.string(), "--writhe", "-2"});
  CHECK(r.code == 0);
  CHECK(r.out == "-t^-1/2 - t^-5/2\n");
}

TEST_CASE("labeled verbs") {
  TempFile cyc("cycle.json", kLabeled2Cycle);
  // reserved w precedes the labels in the canonical variable order
  auto r = run({"chain", cyc.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "-w + ab\n");

  r = run({"sheaf", cyc.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "-w + ab\n");

  r = run({"flow", cyc.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "q - 1\n");

  r = run({"tension", cyc.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "q - 1\n");
}

TEST_CASE("w verb with weights") {
  TempFile graph("colored.json", R"({
    "vertices": 2,
    "edges": [{"id": "e1", "u": 0, "v": 1, "color": "c1"}]
  })");
  TempFile colors("colors.json", R"({"c1": {"x": "A", "y": "B"}})");
  auto r = run({"w", graph.path.string(), "--colors", colors.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "A + Bz1\n");

  r = run({"w", graph.path.string(), "--colors", colors.path.string(),
           "--eval", "t=d,z1=d,z2=d"});
  CHECK(r.code == 0);
  CHECK(r.out == "A + Bd\n");

  TempFile missing("missing.json", R"({"c9": {"x": "A", "y": "B"}})");
  r = run({"w", graph.path.string(), "--colors", missing.path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("c1") != std::string::npos);
}

TEST_CASE("replace verb emits graph JSON") {
  TempFile edge("edge_r.json", R"({
    "vertices": 2,
    "edges": [{"id": "e1", "u": 0, "v": 1, "sign": "+"}]
  })");
  TempFile spec("spec_r.json", R"({"e1": {"kind": "chain", "n": -2}})");
  auto r = run({"replace", edge.path.string(), "--spec", spec.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"vertices\": 3") != std::string::npos);
  CHECK(r.out.find("\"-\"") != std::string::npos);
}

TEST_CASE("json output mode") {
  auto r = run({"rational", "1,1", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"vars\":[\"A\"]") != std::string::npos);
  CHECK(r.out.find("\"(4)\":\"-1\"") != std::string::npos);
  CHECK(r.out.find("\"(-4)\":\"-1\"") != std::string::npos);
}

TEST_CASE("malformed inputs name the problem") {
  TempFile bad("bad.json", "{not json");
  auto r = run({"q", bad.path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("malformed JSON") != std::string::npos);

  TempFile mixed("mixed.json", R"({
    "vertices": 2,
    "edges": [
      {"id": "e1", "u": 0, "v": 1, "sign": "+"},
      {"id": "e2", "u": 0, "v": 1, "label": "a"}
    ]
  })");
  r = run({"q", mixed.path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("attribute kind") != std::string::npos);

  r = run({"frobnicate"});
  CHECK(r.code == 1);
}

TEST_CASE("determinism across runs") {
  TempFile hopf("hopf_d.json", kHopf);
  const auto first = run({"bracket", hopf.path.string()});
  const auto second = run({"bracket", hopf.path.string()});
  CHECK(first.out == second.out);
  CHECK(first.code == 0);
}

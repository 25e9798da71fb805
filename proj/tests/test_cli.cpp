#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include <fmt/ranges.h>

#include "idemgen/cli.hpp"
#include "idemgen/constructors.hpp"
#include "idemgen/semiring_file.hpp"

using namespace idemgen;

namespace {

  RunResult call(std::vector<std::string> args) {
    return run(args);
  }

  json parsed(std::vector<std::string> args) {
    args.push_back("--json");
    return json::parse(call(args).output);
  }

  std::filesystem::path temp_file(std::string const& name, std::string const& text) {
    auto const path = std::filesystem::temp_directory_path() / ("idemgen-test-" + name);
    std::ofstream(path) << text;
    return path;
  }

}  // namespace

TEST_CASE("every subcommand follows the exit-code contract", "[cli]") {
  struct Case {
    std::vector<std::string> args;
    int                      exit;
    std::string              verdict;
  };
  std::vector<Case> const cases{
      {{"validate", "--preset", "t2b"}, 0, "ok"},
      {{"classify", "--preset", "t2b"}, 0, "ok"},
      {{"classify", "--preset", "nn-triple"}, 0, "ok"},
      {{"closure", "--preset", "t2b", "--mode", "add"}, 0, "ok"},
      {{"complement", "--preset", "t2b", "--element", "[1 1;0 0]"}, 0, "absent"},
      {{"complement", "--preset", "t2b", "--element", "[1 1;0 0]", "--kind", "nilorthogonal"}, 0, "ok"},
      {{"complement", "--preset", "t2b", "--element", "[0 1;0 0]"}, 1, "error"},
      {{"decompose", "--preset", "z3x-sqm1"}, 0, "ok"},
      {{"lift", "--preset", "z2x-sq", "--element", "1+x"}, 0, "ok"},
      {{"lift", "--preset", "zmod:3", "--element", "2"}, 1, "error"},
      {{"invert", "--preset", "zmod:4", "--element", "2"}, 0, "ok"},
      {{"peirce", "--preset", "z3x-sqm1"}, 0, "ok"},
      {{"peirce", "--preset", "m2z2"}, 1, "error"},
      {{"iso", "--preset", "z3x-sqm1", "--other-preset", "product:zmod:3,zmod:3"}, 0, "ok"},
      {{"iso", "--preset", "bool", "--other-preset", "zmod:2"}, 0, "absent"},
      {{"check", "--preset", "bool", "--theorem", "main"}, 0, "confirmed"},
      {{"check", "--preset", "t2b", "--theorem", "main"}, 0, "vacuous"},
      {{"check", "--preset", "nn-triple", "--theorem", "additivecom"}, 0, "vacuous"},
      {{"check", "--preset", "nat", "--theorem", "additivecom"}, 0, "confirmed"},
      {{"census", "--max-order", "2"}, 0, "ok"},
      {{"census", "--max-order", "9"}, 1, "error"},
      {{"build", "--preset", "bool"}, 0, "ok"},
      {{"classify"}, 1, "error"},
      {{"classify", "--preset", "nope"}, 1, "error"},
      {{"classify", "--file", "/nonexistent/file"}, 1, "error"},
      {{"lift", "--preset", "nat", "--element", "1"}, 1, "error"},
      {{"frobnicate"}, 1, "error"},
      {{"check", "--preset", "bool", "--theorem", "main3"}, 1, "error"},
  };
  for (auto const& c : cases) {
    INFO(fmt::format("{}", fmt::join(c.args, " ")));
    auto const r = call(c.args);
    CHECK(r.exit_code == c.exit);
    CHECK(to_string(r.report.verdict) == c.verdict);
    auto j = c.args;
    j.push_back("--json");
    auto const doc = json::parse(call(j).output);
    CHECK(doc["verdict"] == c.verdict);
  }
}

TEST_CASE("json documents carry the fixed keys", "[cli]") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"classify", "--preset", "bool"}, {"census", "--max-order", "2"}, {"classify"}}) {
    auto const doc = parsed(args);
    std::vector<std::string> keys;
    for (auto const& [k, v] : doc.items()) {
      keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"schema", "tool_version", "command", "input", "verdict", "result", "error"});
    CHECK(doc["schema"] == 1);
  }
}

TEST_CASE("identical invocations produce identical documents", "[cli]") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"classify", "--preset", "t2b", "--json"},
           {"check", "--preset", "m2z2", "--json"},
           {"census", "--max-order", "4", "--json", "--list"},
           {"census", "--max-order", "4", "--list"}}) {
    CHECK(call(args).output == call(args).output);
  }
  auto one  = call({"census", "--max-order", "4", "--json", "--list", "--workers", "1"}).output;
  auto many = call({"census", "--max-order", "4", "--json", "--list", "--workers", "4"}).output;
  CHECK(one == many);
}

TEST_CASE("check reports the T2(B) idempotent without a complement", "[cli]") {
  auto const doc = parsed({"check", "--preset", "t2b", "--theorem", "main"});
  CHECK(doc["verdict"] == "vacuous");
  auto const& hyps = doc["result"]["reports"][0]["hypotheses"];
  CHECK(hyps[1]["name"] == "orthogonal complements");
  CHECK(hyps[1]["holds"] == false);
  CHECK(hyps[1]["witness"] == json::array({"[1 1;0 0]"}));
  auto const text = call({"check", "--preset", "t2b", "--theorem", "main"}).output;
  CHECK(text.find("[1 1;0 0]") != std::string::npos);
}

TEST_CASE("census of order 2", "[cli]") {
  auto const doc = parsed({"census", "--max-order", "2", "--theorem", "all"});
  CHECK(doc["result"]["count_per_order"]["2"] == 2);
  CHECK(doc["result"]["violations"] == json::array());
  CHECK(doc["result"]["tallies"].size() == 4);
  auto const trivial = parsed({"census", "--max-order", "1", "--include-trivial"});
  CHECK(trivial["result"]["count_per_order"]["1"] == 1);
}

TEST_CASE("classify text lists the seven idempotents of T2(B)", "[cli]") {
  auto const doc = parsed({"classify", "--preset", "t2b"});
  CHECK(doc["result"]["idempotents"].size() == 7);
  auto const text = call({"classify", "--preset", "t2b"}).output;
  auto const line = text.substr(text.find("idempotents: "));
  CHECK(std::ranges::count(line.substr(0, line.find('\n')), ';') == 7);
}

TEST_CASE("lift trace of 1+x has one step", "[cli]") {
  auto const doc = parsed({"lift", "--preset", "z2x-sq", "--element", "1+x"});
  CHECK(doc["result"]["steps"].size() == 1);
  CHECK(doc["result"]["f"] == "1");
  CHECK(doc["result"]["correction"] == "x");
}

TEST_CASE("build writes a file that reads back", "[cli]") {
  auto const path = std::filesystem::temp_directory_path() / "idemgen-test-build.sr";
  auto const r    = call({"build", "--preset", "t2b", "--output", path.string()});
  REQUIRE(r.exit_code == 0);
  auto const doc = parsed({"classify", "--file", path.string()});
  CHECK(doc["verdict"] == "ok");
  CHECK(doc["result"]["idempotents"].size() == 7);
  CHECK(call({"build", "--preset", "t2b"}).output == serialize_semiring(preset("t2b")));
  auto const same = parsed({"iso", "--file", path.string(), "--other-preset", "t2b"});
  CHECK(same["result"]["isomorphic"] == true);
}

TEST_CASE("parse errors exit 1 with the position", "[cli]") {
  auto const path = temp_file("bad.sr", "order 2\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1 1\nmul\n0 0\n");
  auto const r    = call({"validate", "--file", path.string()});
  CHECK(r.exit_code == 1);
  CHECK(r.report.error.find("line 10") != std::string::npos);
}

TEST_CASE("symbolic check verdicts", "[cli]") {
  auto const doc = parsed({"check", "--preset", "nn-triple", "--theorem", "all"});
  for (auto const& r : doc["result"]["reports"]) {
    CHECK(r["verdict"] == "vacuous");
  }
  auto const& add = doc["result"]["reports"][3];
  CHECK(add["hypotheses"][0]["holds"] == true);
  CHECK(add["hypotheses"][1]["holds"] == false);
  CHECK(add["hypotheses"][1]["witness"] == json::array({"x"}));
  CHECK(add["conclusions"][0]["holds"] == false);
}

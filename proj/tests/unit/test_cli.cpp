#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "ikalg/cli.hpp"

using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ikalg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::size_t count_kind(const Json& doc, const char* kind) {
  std::size_t n = 0;
  for (const auto& row : doc["rows"]) n += row["kind"] == kind;
  return n;
}

}  // namespace

TEST_CASE("classes") {
  auto doc = run_json({"classes", "--family", "sym", "--level", "3"});
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "classes");
  CHECK(count_kind(doc, "omega") == 7);
  CHECK(doc["omega_labels"] == 7);
  CHECK(doc["rows"][0]["label"] == "0:[]");
  CHECK(doc["rows"][0]["size"] == 1);

  doc = run_json({"classes", "--family", "sym", "--level", "0"});
  CHECK(count_kind(doc, "omega") == 1);
  CHECK(doc["rows"][0]["label"] == "0:[]");

  doc = run_json({"classes", "--family", "wreath:cyclic2", "--level", "2"});
  CHECK(count_kind(doc, "center") == 5);
  std::uint64_t total = 0;
  for (const auto& row : doc["rows"])
    if (row["kind"] == "center") total += row["size"].get<std::uint64_t>();
  CHECK(total == 8);
}

TEST_CASE("omega class sizes add up to all partial elements") {
  // Σ_l C(N,l) |G_l| partial elements at level N = 3 for F = Z/2.
  const auto doc = run_json({"classes", "--family", "wreath:cyclic2", "--level", "3"});
  std::uint64_t total = 0;
  for (const auto& row : doc["rows"])
    if (row["kind"] == "omega") total += row["size"].get<std::uint64_t>();
  CHECK(total == 1 + 3 * 2 + 3 * 8 + 48);
}

TEST_CASE("pconst") {
  auto doc = run_json({"pconst", "--family", "sym", "--level", "4", "--omega1", "2:[2]", "--omega2", "2:[2]"});
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["omega"] == "2:[]");
  CHECK(doc["rows"][0]["P"] == 1);
  CHECK(doc["rows"][1]["omega"] == "3:[3]");
  CHECK(doc["rows"][1]["P"] == 3);
  CHECK(doc["rows"][2]["omega"] == "4:[2,2]");
  CHECK(doc["rows"][2]["P"] == 2);

  doc = run_json({"pconst", "--level", "4", "--omega1", "2:[2]", "--omega2", "2:[2]", "--omega", "3:[3]"});
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["P"] == 3);

  doc = run_json({"pconst", "--level", "2"});
  CHECK(doc["rows"].size() > 0);
  for (const auto& row : doc["rows"]) CHECK(row["P"].get<std::uint64_t>() > 0);

  const auto csv = run({"pconst", "--level", "4", "--omega1", "2:[2]", "--omega2", "2:[2]", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "omega1,omega2,omega,P\n2:[2],2:[2],2:[],1\n2:[2],2:[2],3:[3],3\n2:[2],2:[2],\"4:[2,2]\",2\n");
}

TEST_CASE("pconst with general labels") {
  const auto doc = run_json({"pconst", "--family", "wreath:cyclic2", "--level", "2", "--omega1", "1:[(1,1)]",
                             "--omega2", "1:[(1,1)]"});
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["omega"] == "1:[]");
  CHECK(doc["rows"][0]["P"] == 1);
  CHECK(doc["rows"][1]["omega"] == "2:[(1,1),(1,1)]");
  CHECK(doc["rows"][1]["P"] == 2);
}

TEST_CASE("sconst") {
  auto doc = run_json({"sconst", "--family", "sym", "--l", "3", "--c1", "[2]", "--c2", "[2]"});
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["c"] == "[]");
  CHECK(doc["rows"][0]["S"] == 3);
  CHECK(doc["rows"][1]["c"] == "[3]");
  CHECK(doc["rows"][1]["S"] == 3);

  doc = run_json({"sconst", "--l", "3", "--c1", "[2]", "--c2", "[2]", "--c", "[2]"});
  CHECK(doc["rows"][0]["S"] == 0);

  const auto csv = run({"sconst", "--l", "3", "--c1", "[2]", "--c2", "[2]", "--format", "csv"});
  CHECK(csv.out == "c1,c2,c,l,S\n[2],[2],[],3,3\n[2],[2],[3],3,3\n");
}

TEST_CASE("xi") {
  auto doc = run_json({"xi", "--lprime", "1", "--class", "[]", "--l", "3"});
  CHECK(doc["rows"][0]["xi"] == 3);
  doc = run_json({"xi", "--lprime", "3", "--class", "[2]", "--l", "4", "--oracle"});
  CHECK(doc["rows"][0]["xi"] == 2);
  CHECK(doc["rows"][0]["oracle"] == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "main-lemma", "--family", "sym", "--level", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);

  r = run({"verify", "audit", "--family", "dtype", "--level", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("EXPECTED-FAIL") != std::string::npos);
  CHECK(r.out.find("lambda={1,2}") != std::string::npos);

  r = run({"verify", "all", "--family", "wreath:cyclic2", "--level", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: OK") != std::string::npos);

  r = run({"verify", "all", "--family", "dtype", "--level", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("SKIPPED") != std::string::npos);
}

TEST_CASE("verify output does not depend on --jobs") {
  const std::vector<std::string> base{"verify", "all", "--family", "sym", "--level", "4", "--format", "json"};
  auto with = [&](const char* jobs) {
    auto args = base;
    args.push_back("--jobs");
    args.push_back(jobs);
    return run(args);
  };
  const auto one = with("1");
  CHECK(one.code == 0);
  CHECK(one.out == with("2").out);
  CHECK(one.out == with("8").out);
}

TEST_CASE("group files") {
  const std::string dir = IKALG_TEST_DATA_DIR;
  auto doc = run_json({"classes", "--group-file", dir + "/sym3.json", "--level", "1"});
  CHECK(count_kind(doc, "center") == 3);
  doc = run_json({"classes", "--group-file", dir + "/z2_shifted.json", "--level", "2"});
  CHECK(count_kind(doc, "center") == 5);
  CHECK(run({"classes", "--group-file", dir + "/missing.json"}).code == 2);
}

TEST_CASE("--out writes the file") {
  const std::string path = "test_cli_out.csv";
  const auto r = run({"xi", "--lprime", "1", "--class", "[]", "--l", "3", "--format", "csv", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "lprime,class,l,xi\n1,[],3,3\n");
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classes", "--level", "-1"}).code == 2);
  CHECK(run({"classes", "--format", "xml"}).code == 2);
  CHECK(run({"classes", "--family", "btype"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "phi", "--family", "dtype"}).code == 2);
  CHECK(run({"pconst", "--omega1", "2:[2"}).code == 2);
  CHECK(run({"pconst", "--omega1", "1:[2]", "--omega2", "1:[]"}).code == 2);
  CHECK(run({"pconst", "--omega1", "1:[]"}).code == 2);
  CHECK(run({"xi", "--lprime", "1"}).code == 2);
  CHECK(run({"classes", "--family", "wreath:sym3", "--level", "9"}).code == 3);
  CHECK(run({"classes", "--level", "4", "--budget-elements", "23"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wildcert/cli.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

using namespace wildcert;
using nlohmann::json;

namespace {

CliResult run(std::initializer_list<std::string> args) {
  return run_cli(std::vector<std::string>(args));
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/wildcert_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("algebra-check reports corpus dimensions") {
  auto r = run({"algebra-check", "corpus:dihedral8", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension 8") != std::string::npos);

  r = run({"algebra-check", "corpus:c5_3", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension 27") != std::string::npos);
}

TEST_CASE("malformed input exits 1 with a cited line") {
  auto path = temp_file("bad.json", "{\n  \"field\": {\n");
  auto r = run({"algebra-check", path, "--seed", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("line") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("missing required flags exit 1") {
  auto r = run({"algebra-check", "corpus:kleinfour"});
  CHECK(r.code == 1);  // --seed is required
  r = run({"resolve"});
  CHECK(r.code == 1);
}

TEST_CASE("a presentation file closes like its corpus twin") {
  auto path = temp_file("kf.json", R"({
    "name": "kf_file",
    "field": {"p": 2},
    "generators": ["x", "y"],
    "relations": [
      [{"coeff": 1, "word": [0, 0]}],
      [{"coeff": 1, "word": ["y", "y"]}],
      "xy-yx"
    ],
    "degree_bound": 8
  })");
  auto r = run({"algebra-check", path, "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension 4") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("non-termination exits 2") {
  auto path = temp_file("free.json", R"({
    "field": {"p": 2},
    "generators": ["x", "y"],
    "relations": [],
    "degree_bound": 6
  })");
  auto r = run({"algebra-check", path, "--seed", "1"});
  CHECK(r.code == 2);
  std::remove(path.c_str());
}

TEST_CASE("unsupported class exits 3") {
  // k[x]/(x^2 - x) = k x k has no supported radical class
  auto path = temp_file("split.json", R"({
    "field": {"p": 3},
    "generators": ["x"],
    "relations": ["x^2-x"],
    "degree_bound": 4
  })");
  auto r = run({"resolve", path, "--seed", "1"});
  CHECK(r.code == 3);
  std::remove(path.c_str());
}

TEST_CASE("field override re-closes the presentation") {
  auto r = run({"algebra-check", "corpus:kleinfour", "--field", "2,2", "--seed",
                "1", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["field"]["q"] == 4);
  CHECK(j["dimension"] == 4);
}

TEST_CASE("resolve emits the Klein-four table as CSV") {
  auto r = run({"resolve", "corpus:kleinfour", "--cutoff", "10", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n,b_n,len_Pn,dim_syzygy\n") == 0);
  CHECK(r.out.find("10,11,44,21") != std::string::npos);
  CHECK(r.out.find("# c_hat=2") != std::string::npos);
}

TEST_CASE("resolve reports periodicity of the truncated polynomial ring") {
  auto r = run({"resolve", "corpus:poly_trunc_2", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("periodic_d=1") != std::string::npos);
}

TEST_CASE("resolving a projective terminates the table at once") {
  auto r = run({"resolve", "corpus:kleinfour", "--module", "regular", "--seed",
                "1", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["table"]["rows"][0]["b_n"] == 1);
  CHECK(j["table"]["rows"][1]["b_n"] == 0);
  CHECK(j["complexity"]["c_hat"] == 0);
}

TEST_CASE("module files load and resolve") {
  auto path = temp_file("m1.json", R"({
    "dim": 2,
    "actions": {
      "x": [[0, 1], [0, 0]],
      "y": [[0, 1], [0, 0]]
    }
  })");
  auto r = run({"resolve", "corpus:kleinfour", "--module-file", path, "--seed",
                "1", "--format", "json"});
  CHECK(r.code == 0);
  std::remove(path.c_str());
  // an action violating the relations is refused
  auto bad = temp_file("m2.json", R"({
    "dim": 1,
    "actions": {"x": [[1]], "y": [[0]]}
  })");
  r = run({"resolve", "corpus:kleinfour", "--module-file", bad, "--seed", "1"});
  CHECK(r.code == 1);
  std::remove(bad.c_str());
}

TEST_CASE("certify verdicts are data, not errors") {
  auto r = run({"certify", "corpus:elab_3_2", "--strategy", "lemma-family",
                "--family", "M", "--fields", "3,9", "--seed", "1"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["verdict"] == "wild_evidence");
  CHECK(j["report"]["members"].size() == 12);

  r = run({"certify", "corpus:dihedral8", "--strategy", "lemma-family",
           "--family", "M", "--fields", "2,4", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["verdict"] == "tame_consistent");

  r = run({"certify", "corpus:elab_2_3", "--strategy", "theorem-growth",
           "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["verdict"] == "wild_assuming_fg");
}

TEST_CASE("factor strategy routes through the quotient certificate") {
  auto r = run({"certify", "corpus:c5_3", "--strategy", "factor", "--ideal",
                "xy-yx", "--fields", "3,9", "--seed", "1"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["verdict"] == "wild_evidence");
  CHECK(j["ideal"] == "xy-yx");
  CHECK(j["quotient_certificate"]["verdict"] == "wild_evidence");

  // the dihedral quotient is tame-consistent, so the rule refuses: exit 3
  r = run({"certify", "corpus:dihedral8", "--strategy", "factor", "--ideal",
           "xy-yx", "--fields", "2,4", "--seed", "1"});
  CHECK(r.code == 3);
}

TEST_CASE("unknown strategy exits 3") {
  auto r = run({"certify", "corpus:kleinfour", "--strategy", "guess", "--seed",
                "1"});
  CHECK(r.code == 3);
}

TEST_CASE("identical seeded runs are byte-identical") {
  std::vector<std::string> args{"certify", "corpus:elab_3_2", "--strategy",
                                "lemma-family", "--family",  "M",
                                "--fields",     "3,9",       "--seed", "42"};
  auto r1 = run_cli(args);
  auto r2 = run_cli(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);

  std::vector<std::string> scan_args{"scan", "corpus:nfam_host", "--family",
                                     "N",    "--fields",         "2,4",
                                     "--seed", "9"};
  auto s1 = run_cli(scan_args);
  auto s2 = run_cli(scan_args);
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("verify-trail recomputes and confirms") {
  auto r = run({"certify", "corpus:kleinfour", "--strategy", "theorem-growth",
                "--seed", "1", "--verify-trail"});
  CHECK(r.code == 0);
  CHECK(r.err.find("trail verified") != std::string::npos);
}

TEST_CASE("--out writes the payload to a file") {
  std::string path = "/tmp/wildcert_test_out.json";
  auto r = run({"certify", "corpus:kleinfour", "--strategy", "theorem-growth",
                "--seed", "1", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  json j = json::parse(f);
  CHECK(j["verdict"] == "inconclusive");
  std::remove(path.c_str());
}

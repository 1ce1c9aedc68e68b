#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the installed binary (path in QV_BIN) with stderr folded into stdout
// when asked, so error messages can be matched too.
RunResult run(const std::string& args, bool merge_stderr = false) {
  const char* bin = std::getenv("QV_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  int status = pclose(pipe);
  r.code = WEXITSTATUS(status);
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& name, const std::string& content) {
    path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("catalog lists every built-in example") {
  RunResult text = run("catalog");
  CHECK(text.code == 0);
  CHECK(contains(text.out, "star4: four-pointed star"));
  CHECK(contains(text.out, "star5: five-pointed star"));
  CHECK(contains(text.out, "legs3:"));
  CHECK(contains(text.out, "star4x2:"));

  RunResult js = run("catalog --format json");
  CHECK(js.code == 0);
  json doc = json::parse(js.out);
  CHECK(doc.at("examples").size() == 10);
  CHECK(doc.at("examples")[0].at("name") == "star4");
  CHECK(doc.at("examples")[0].at("vertices") == 6);
  CHECK(doc.at("examples")[0].at("arrows") == 8);
}

TEST_CASE("census reports the four-pointed star counts") {
  RunResult text = run("census --example star4");
  CHECK(text.code == 0);
  CHECK(contains(text.out, "classes: 6"));
  CHECK(contains(text.out, "sign functions: 64"));
  CHECK(contains(text.out, "projective: 46"));
  CHECK(contains(text.out, "nonprojective: 18"));
  CHECK(contains(text.out, "+-++-+"));

  RunResult js = run("census --example star4 --format json");
  json doc = json::parse(js.out);
  CHECK(doc.at("total") == "64");
  CHECK(doc.at("projective") == 46);
  CHECK(doc.at("nonprojective") == 18);
  CHECK(doc.at("nonprojective_signs").size() == 18);
  CHECK(doc.at("nonprojective_signs")[0] == "++--++");
}

TEST_CASE("json output is byte-stable across runs") {
  RunResult a = run("census --example star4 --format json");
  RunResult b = run("census --example star4 --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  RunResult c = run("properness --example star5 --format json");
  RunResult d = run("properness --example star5 --format json");
  CHECK(c.out == d.out);
}

TEST_CASE("check-s prints a verified verdict either way") {
  RunResult good = run("check-s --example star4 --s \"++++++\" --format json");
  CHECK(good.code == 0);
  json doc = json::parse(good.out);
  CHECK(doc.at("feasible") == true);
  CHECK(doc.at("witness_theta").at("x") == "1");
  CHECK(doc.at("witness_theta").at("y") == "-1");
  CHECK(doc.at("witness_theta").at("1") == "0");

  RunResult bad = run("check-s --example star4 --s \"+-++-+\"");
  CHECK(bad.code == 0);
  CHECK(contains(bad.out, "verdict: not realizable"));
  CHECK(contains(bad.out, "certificate: lambda=(0,1,1,1,1,0) mu=0"));
}

TEST_CASE("certificate finds the smallest equal-sum pair") {
  RunResult found = run("certificate --example star4 --s \"+-++-+\" --k-max 2");
  CHECK(found.code == 0);
  CHECK(contains(found.out, "certificate: k=2"));
  CHECK(contains(found.out, "plus classes: [0] [5]"));
  CHECK(contains(found.out, "minus classes: [1] [4]"));
  CHECK(contains(found.out, "common sum: (2,1,1,1,1,0)"));

  RunResult none = run("certificate --example star4 --s \"++++++\"");
  CHECK(none.code == 0);
  CHECK(contains(none.out, "certificate: none found"));
}

TEST_CASE("extend transports signs and re-checks feasibility") {
  RunResult r = run(
      "extend --example star4 --s \"++--++\" --to-example star4x2 --default-sign \"-\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "extended signs: -+-+---++-"));
  CHECK(contains(r.out, "verdict: not realizable"));
  CHECK(contains(r.out, "certificate: lambda=(1,2,1,0,0,0,0,0,0,0) mu=0"));
}

TEST_CASE("monte carlo runs are reproducible from the seed") {
  RunResult a = run("mc --n 5 --m 2 --trials 500 --seed 3 --format json");
  CHECK(a.code == 0);
  json doc = json::parse(a.out);
  CHECK(doc.at("hits") == 331);
  CHECK(doc.at("estimate") == "331/500");
  CHECK(doc.at("stderr_sq") == "55939/125000000");

  RunResult b = run("mc --n 5 --m 2 --trials 500 --seed 3 --format json");
  CHECK(a.out == b.out);
  RunResult threaded = run("mc --n 5 --m 2 --trials 500 --seed 3 --jobs 4 --format json");
  CHECK(json::parse(threaded.out).at("hits") == 331);
}

TEST_CASE("usets prints the family, its closure size, and its dual") {
  RunResult r = run("usets --example star5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "family minimal sets: {1,2} {3,4,5}"));
  CHECK(contains(r.out, "closure size: 11"));
  CHECK(contains(r.out, "dual minimal sets: {1,3} {2,3} {1,4} {2,4} {1,5} {2,5}"));
  CHECK(contains(r.out, "dual of dual equals family: yes"));
}

TEST_CASE("pattern reports stability and the hub-spoke breakdown") {
  RunResult r = run(
      "pattern --example star4 --arrows \"x>1\" \"x>2\" \"x>3\" \"y>3\" \"y>4\" --format json");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("semistable") == true);
  CHECK(doc.at("stable") == false);
  CHECK(doc.at("dead_spokes").empty());
  CHECK(doc.at("starved_x") == false);
  CHECK(doc.at("starved_y") == false);

  RunResult starving = run("pattern --example star5 --arrows \"x>1\" \"y>1\"");
  CHECK(starving.code == 0);
  CHECK(contains(starving.out, "semistable: no"));
}

TEST_CASE("theta-zero decides the common stability cone") {
  RunResult r = run("theta-zero --example star5 --format json");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("patterns") == 8);
  CHECK(doc.at("inequalities") == 63);
  CHECK(doc.at("zero_only") == true);
}

TEST_CASE("properness runs the audited search") {
  RunResult ok = run("properness --example star5");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "success: yes"));
  CHECK(contains(ok.out, "x side spokes: {1,2,5}"));
  CHECK(contains(ok.out, "y side spokes: {2,3,4}"));
  CHECK(contains(ok.out, "steps: 12"));

  // zeroing out three x arrows strands the audit, which is a reported failure
  RunResult stuck = run(
      "properness --example star5 --vals \"x>1=-1\" \"x>2=-1\" \"y>1=1\" \"y>2=1\" "
      "\"y>3=1\" \"y>4=1\" \"y>5=1\" \"1>x*=1\" \"2>x*=1\" \"3>x*=0\" \"4>x*=0\" \"5>x*=0\"");
  CHECK(stuck.code == 1);
  CHECK(contains(stuck.out, "success: no"));

  RunResult cyclic = run(
      "properness --example star5 --vals \"x>1=-1\" \"1>x*=0\"", true);
  CHECK(cyclic.code == 1);
  CHECK(contains(cyclic.out, "error:"));
}

TEST_CASE("problem files feed every subcommand") {
  TempFile star(
      "qv-cli-star.json",
      R"({"vertices": ["x", "1", "2", "3", "4", "y"],
          "arrows": [{"src": "x", "tgt": "1"}, {"src": "x", "tgt": "2"},
                     {"src": "x", "tgt": "3"}, {"src": "x", "tgt": "4"},
                     {"src": "y", "tgt": "1"}, {"src": "y", "tgt": "2"},
                     {"src": "y", "tgt": "3"}, {"src": "y", "tgt": "4"}],
          "dim": {"x": 1, "1": 1, "2": 1, "3": 1, "4": 1, "y": 1},
          "theta": {"x": 2, "1": -1, "2": -1, "3": -1, "4": -1, "y": 2},
          "x": "x", "y": "y"})");
  RunResult census = run("census --input " + star.path.string() + " --format json");
  CHECK(census.code == 0);
  json doc = json::parse(census.out);
  CHECK(doc.at("total") == "64");
  CHECK(doc.at("nonprojective") == 18);

  TempFile framed("qv-cli-framed.json",
                  R"({"vertices": ["a", "b"],
                      "arrows": [{"src": "a", "tgt": "b"}],
                      "dim": {"a": 2, "b": 3},
                      "theta": {"a": -3, "b": 2},
                      "framing": {"a": 0, "b": 1}})");
  RunResult leaves = run("leaves --input " + framed.path.string() + " --format json");
  CHECK(leaves.code == 0);
  json unframed = json::parse(leaves.out);
  CHECK(unframed.at("vertices") == json::array({"a", "b", "inf"}));
  CHECK(unframed.at("alpha") == json::array({2, 3, 1}));
}

TEST_CASE("usage problems exit with code two, domain errors with one") {
  CHECK(run("bogus", true).code == 2);
  CHECK(run("check-s --example star4", true).code == 2);
  CHECK(run("census --example star4 --star 4 2", true).code == 2);
  CHECK(run("census", true).code == 2);

  RunResult short_signs = run("check-s --example star4 --s \"+++\"", true);
  CHECK(short_signs.code == 1);
  CHECK(contains(short_signs.out, "error:"));
}

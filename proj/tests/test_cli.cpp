#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = asrlogic::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const std::string& name) { return oracle::fixture(name); }

std::string scratch(const std::string& name) {
  std::filesystem::create_directories(ASRLOGIC_SCRATCH);
  return std::string(ASRLOGIC_SCRATCH) + "/" + name;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("eval prints the truth value") {
  CHECK(run({"eval", "--structure", "nat:16", "--doc", fx("nat_pow2.sexp"), "--param", "8"}).out ==
        "true\n");
  CHECK(run({"eval", "--structure", "nat:16", "--doc", fx("nat_pow2.sexp"), "--param", "6"}).out ==
        "false\n");
  CHECK(run({"eval", "--structure", "nat:16", "--doc", fx("nat_pow2.sexp"), "--param", "one"})
            .out == "true\n");
}

TEST_CASE("eval writes a report") {
  const std::string path = scratch("eval.json");
  std::filesystem::remove(path);
  const Run r = run({"eval", "--structure", "v3", "--doc", fx("v_ordinal.sexp"), "--param", "3",
                     "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["value"] == true);
  CHECK(j["params"] == nlohmann::json::array({3}));
}

TEST_CASE("eval-multi") {
  const Run r = run({"eval-multi", "--structure", "nat:8", "--doc", fx("multi_countdown.sexp"),
                     "--params", "0,5"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run({"eval-multi", "--structure", "nat:8", "--doc", fx("multi_countdown.sexp"),
             "--params", "3,5"})
            .out == "false\n");
  CHECK(run({"eval-multi", "--structure", "nat:8", "--doc", fx("multi_countdown.sexp"),
             "--params", "3"})
            .code == 1);
}

TEST_CASE("unfold") {
  const Run r =
      run({"unfold", "--structure", "nat:2", "--doc", fx("nat_pow2.sexp"), "--param", "2"});
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["value"] == true);
  CHECK(j["dag_size"].get<int>() > 0);
  CHECK(j["formula"].get<std::string>().find("@0") != std::string::npos);
  const Run pretty = run({"unfold", "--structure", "nat:2", "--doc", fx("nat_pow2.sexp"),
                          "--param", "2", "--pretty"});
  CHECK(pretty.out.rfind("@0 :=", 0) == 0);
}

TEST_CASE("wfpart") {
  const Run doc =
      run({"wfpart", "--structure", "nat:4", "--doc", fx("nat_pow2.sexp")});
  CHECK(doc.code == 0);
  CHECK(json_of(doc).dump().find("\"height\":5") != std::string::npos);
  const Run rel = run({"wfpart", "--structure", fx("cycle3.json"), "--relation", "edge"});
  CHECK(rel.code == 0);
  CHECK(json_of(rel).dump().find("\"height\":0") != std::string::npos);
  CHECK(run({"wfpart", "--structure", "nat:4"}).code == 2);
  CHECK(run({"wfpart", "--structure", "nat:4", "--relation", "nope"}).code == 1);
}

TEST_CASE("census") {
  const Run r = run({"census", "--structure", fx("cycle3.json"), "--budget", "9"});
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["certified"] == true);
  CHECK(j["definable"].size() == 2);
  CHECK(j["structure"] == "cycle3");
  const Run p = run({"census", "--structure", "v2", "--budget", "6", "--params", "0,1"});
  CHECK(json_of(p)["definable"].size() == 4);
}

TEST_CASE("llevel") {
  const Run r = run({"llevel", "--base", "v2", "--alpha", "2"});
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["certified"] == true);
  CHECK(j["domain"].size() == 16);
  CHECK(run({"llevel", "--base", "v2", "--alpha", "9"}).code == 1);
}

TEST_CASE("good and reflect") {
  const Run g = run({"good", "--formula", fx("good_empty.sexp"), "--top", "3"});
  CHECK(g.code == 0);
  CHECK(json_of(g).dump().find("\"good\":true") != std::string::npos);
  const Run s = run({"good", "--formula", fx("good_singleton.sexp"), "--levels", "2,3"});
  CHECK(json_of(s).dump().find("\"good\":false") != std::string::npos);
  const std::string code = json_of(g)["code"].get<std::string>();
  const Run table = run({"good", "--code", code, "--code", code, "--levels", "2,3", "--pretty"});
  CHECK(table.out == code + "  good  0x0  0x0\n" + code + "  good  0x0  0x0\n");
  CHECK(run({"good", "--code", "17", "--top", "2"}).code == 1);
  CHECK(run({"good", "--top", "2"}).code == 2);

  const Run r = run({"reflect", "--formula", fx("reflect_eq.sexp"), "--top", "4"});
  CHECK(r.code == 0);
  CHECK(json_of(r)["reflecting"] == nlohmann::json::array({0, 1, 2, 3}));
  const Run pretty =
      run({"reflect", "--formula", fx("reflect_container.sexp"), "--top", "4", "--pretty"});
  CHECK(pretty.out == "reflecting levels below 4: 0\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"eval", "--structure", "nat:4"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Run help = run({"census", "--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("--budget") != std::string::npos);

  const Run v9 = run({"eval", "--structure", "v9", "--doc", fx("v_ordinal.sexp"), "--param", "0"});
  CHECK(v9.code == 1);
  CHECK(v9.err.rfind("error: ", 0) == 0);
  CHECK(run({"eval", "--structure", "nat:4", "--doc", fx("missing.sexp"), "--param", "0"}).code ==
        1);
  CHECK(run({"eval", "--structure", "nat:4", "--doc", fx("nat_pow2.sexp"), "--param", "9"})
            .code == 1);
  CHECK(run({"eval", "--structure", "nat:4", "--doc", fx("nat_pow2.sexp"), "--param", "2",
             "--out", "/nonexistent-dir/out.json"})
            .code == 1);
}

TEST_CASE("caps come from the environment") {
  const std::vector<std::string> args = {"eval", "--structure", "v3", "--doc",
                                         fx("v_ordinal.sexp"), "--param", "1"};
  CHECK(run(args).code == 0);
  setenv("ASRLOGIC_CAPS", "vmax=2", 1);
  CHECK(run(args).code == 1);
  setenv("ASRLOGIC_CAPS", "vmax=x", 1);
  CHECK(run(args).code == 1);
  unsetenv("ASRLOGIC_CAPS");
  CHECK(run(args).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"census", "--structure", "v3", "--budget", "8"},
      {"unfold", "--structure", "nat:16", "--doc", fx("nat_pow4.sexp"), "--param", "16"},
      {"good", "--formula", fx("good_ordinals.sexp"), "--top", "3"},
      {"wfpart", "--structure", "v3", "--doc", fx("v_cyclic.sexp")},
  };
  for (const auto& c : commands) {
    const Run a = run(c);
    const Run b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

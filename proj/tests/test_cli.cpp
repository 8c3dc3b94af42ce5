#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ptrace/catalog.hpp"
#include "ptrace/cli.hpp"

using namespace ptrace;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the installed binary through the shell; stderr is merged unless dropped.
Result shell(const std::string& args, bool keep_stderr = true) {
  const std::string cmd = std::string(PTRACE_CLI_PATH) + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Result r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Result in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str() + err.str();
  return r;
}

Json json_of(const Result& r) {
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ptrace_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("hp0 on the elliptic cone") {
  Json j = json_of(shell("hp0 --example elliptic-cone --max-degree 6"));
  CHECK(j["total"] == 8);
  CHECK(j["per_degree"] == Json::array({1, 3, 3, 1, 0, 0, 0}));
  CHECK(j["max_degree"] == 6);
  CHECK(j["status"] == "NO-BOUND");
  CHECK(j["bound"].is_null());
  CHECK(j["seed"] == 1);
}

TEST_CASE("milnor and holonomy") {
  CHECK(json_of(shell("milnor --F \"x*y - z^3\" --weights 3,3,2"))["milnor"] == 2);
  CHECK(json_of(shell("milnor --F \"x^3 + y^3 + z^3\""))["milnor"] == 8);
  Json h = json_of(shell("holonomy --example symplectic-2"));
  CHECK(h["verdict"] == "pass");
  CHECK(h["dim_Z"] == 2);
  CHECK(h["label"] == "holonomicity bound satisfied");
  Json z = json_of(shell("holonomy --example zero-plane"));
  CHECK(z["verdict"] == "fail");
  CHECK(z["dim_Z"] == 4);
}

TEST_CASE("certify, bound and quotient") {
  Json c = json_of(shell("certify --example symplectic:1 --max-degree 6"));
  CHECK(c["status"] == "CERTIFIED-COMPLETE");
  CHECK(c["bound"] == 0);
  CHECK(c["rep_bound"] == 0);
  CHECK(c["seeds"] == Json::array({1, 2, 3, 4, 5}));

  Json b = json_of(shell("bound --example zero-plane --samples 2 --seed 7"));
  CHECK(b["seeds"] == Json::array({7, 8}));
  Json q = json_of(shell("quotient --example cyclic-quotient:3 --max-degree 10"));
  CHECK(q["invariant_total"] == 2);
  CHECK(q["parabolic"].size() == 2);

  Json e = json_of(shell("certify --example elliptic-cone --samples 3"));
  CHECK(e["total"] == 8);
  CHECK(e["bound"].get<int>() >= 8);
}

TEST_CASE("leaves and groebner") {
  Json l = json_of(shell("leaves --example elliptic-cone"));
  CHECK(l["verdict"] == "pass");
  CHECK(l["levels"][0]["dimension"] == 0);
  Json g = json_of(shell("groebner --ideal \"x^2 - 1, x*y - 1\" --vars x,y --order lex"));
  CHECK(g["basis"] == Json::array({"y^2 - 1", "x - y"}));
  CHECK(json_of(shell("codim --ideal \"x^2, y^2, z^2\""))["codimension"] == 8);
  CHECK(json_of(shell("dim --ideal \"x*y\""))["krull_dimension"] == 2);
}

TEST_CASE("example presentations") {
  Json a = json_of(shell("examples kleinian-a:2"));
  CHECK(a["weights"] == Json::array({3, 3, 2}));
  CHECK(a["bracket"]["jacobian_of"] == "x*y - z^3");
  CHECK(a["degree_shift"] == 2);
  Json e = json_of(shell("examples elliptic-cone"));
  CHECK(e["weights"] == Json::array({1, 1, 1}));
  CHECK(e["degree_shift"] == 0);
  Json s = json_of(shell("examples symplectic:1"));
  CHECK(s["variables"].size() == 2);
  Json all = json_of(shell("examples"));
  CHECK(all["examples"].size() == example_names().size());
}

TEST_CASE("every example round-trips through JSON") {
  std::vector<std::string> names = {"elliptic-cone", "elliptic-times-plane", "zero-plane", "symplectic-4", "klein-e:6",
                                    "klein-e:7", "klein-e:8"};
  for (int n = 1; n <= 6; ++n) names.push_back("kleinian-a:" + std::to_string(n));
  for (int n = 4; n <= 7; ++n) names.push_back("klein-d:" + std::to_string(n));
  for (int n = 1; n <= 3; ++n) names.push_back("symplectic:" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) names.push_back("cyclic-quotient:" + std::to_string(n));
  for (const auto& name : names) {
    CAPTURE(name);
    Document d = example(name);
    const Json first = to_json(d);
    Document back = parse_document(first);
    CHECK(*back.presentation == *d.presentation);
    CHECK(to_json(back) == first);
    CHECK(back.morphism == d.morphism);
    CHECK(back.group.has_value() == d.group.has_value());
    if (d.group) CHECK(back.group->order() == d.group->order());
  }
}

TEST_CASE("input files give the same report as built-in examples") {
  const auto path = temp_file("cone.json");
  REQUIRE(shell("examples elliptic-cone --out " + path.string()).code == 0);
  Result a = shell("hp0 --input " + path.string() + " --max-degree 5");
  Result b = shell("hp0 --example elliptic-cone --max-degree 5");
  CHECK(a.out == b.out);
  std::filesystem::remove(path);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* args : {"certify --example kleinian-a:3 --samples 4 --seed 3", "bound --example elliptic-cone --samples 3",
                           "quotient --example cyclic-quotient:2"}) {
    CAPTURE(args);
    Result a = shell(args, false), b = shell(args, false);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(shell("hp0 --example klein-e:6 --execution serial").out == shell("hp0 --example klein-e:6 --execution parallel").out);
}

TEST_CASE("exit codes and messages") {
  Result bad = shell("milnor --F \"x*w\"");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("'w'") != std::string::npos);

  Result unknown = shell("hp0 --example nope");
  CHECK(unknown.code == 2);
  CHECK(unknown.out.find("elliptic-cone") != std::string::npos);

  CHECK(shell("hp0 --example elliptic-times-plane").code == 2);
  CHECK(shell("hp0 --example elliptic-cone --budget 5").code == 3);
  CHECK(shell("hp0").code == 2);
  CHECK(shell("frobnicate").code == 2);
  CHECK(shell("hp0 --example elliptic-cone --output yaml").code == 2);
  CHECK(shell("hp0 --input /nonexistent/file.json").code == 2);

  const auto path = temp_file("broken.json");
  {
    std::ofstream f(path);
    f << "{\"variables\": [\"x\", \"y\"], \"bracket\": {\"matrix\": [[\"x +* y\"], []]}}";
  }
  Result parse = shell("hp0 --input " + path.string());
  CHECK(parse.code == 2);
  CHECK(parse.out.find("*") != std::string::npos);
  {
    std::ofstream f(path);
    f << "{\"variables\": [\"x\", ";
  }
  CHECK(shell("hp0 --input " + path.string()).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("text output and report files") {
  Result t = in_process({"hp0", "--example", "elliptic-cone", "--max-degree", "6", "--output", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("total: 8") != std::string::npos);
  CHECK(t.out.find("per_degree: 1, 3, 3, 1, 0, 0, 0") != std::string::npos);

  const auto path = temp_file("report.json");
  Result f = in_process({"hp0", "--example", "kleinian-a:2", "--out", path.string()});
  CHECK(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["total"] == 2);
  std::filesystem::remove(path);
}

TEST_CASE("global flags are accepted after the subcommand") {
  Result a = in_process({"--seed", "4", "bound", "--example", "kleinian-a:1", "--samples", "2"});
  Result b = in_process({"bound", "--example", "kleinian-a:1", "--samples", "2", "--seed", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["seeds"] == Json::array({4, 5}));
}

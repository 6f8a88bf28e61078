#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = carrymix::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("matrix as csv and json") {
  const Result csv = run({"matrix", "--n", "3", "--b", "10", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "11/50,33/50,3/25\n33/200,67/100,33/200\n3/25,33/50,11/50\n");
  const Result js = run({"matrix", "--n", "2", "--b", "2", "--format", "json"});
  REQUIRE(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["command"] == "matrix");
  CHECK(doc["parameters"]["n"] == 2);
  CHECK(doc.contains("version"));
  CHECK(doc["matrix"][0][0] == "3/4");
  CHECK(run({"matrix", "--n", "2", "--b", "3", "--decimal", "3"}).out == "0.667,0.333\n0.333,0.667\n");
}

TEST_CASE("separation table") {
  const Result r = run({"sep", "--n", "3", "--b", "2", "--r-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("r,sep_exact,sep_closed\n") == 0);
  CHECK(r.out.find("\n2,5/8,5/8\n") != std::string::npos);
}

TEST_CASE("other tables") {
  CHECK(run({"stationary", "--n", "3"}).out == "j,pi\n0,1/6\n1,2/3\n2,1/6\n");
  CHECK(run({"tv", "--n", "2", "--b", "2", "--r-max", "1"}).out == "r,tv,sep_exact\n0,1/2,1\n1,1/4,1/2\n");
  CHECK(run({"moments", "--n", "2", "--b", "2", "--j-max", "2"}).out ==
        "j,mean,variance,total_mean\n1,1/4,3/16,1/4\n2,3/8,15/64,5/8\n");
  CHECK(run({"card-matrix", "--n", "2", "--b", "3"}).out == "2/3,1/3\n1/3,2/3\n");
  CHECK(run({"mult", "trace", "--k", "26", "--b", "10", "--digits", "3,2,4,1"}).out ==
        "i,digit,kappa\n1,3,7\n2,2,5\n3,4,10\n4,1,3\n");
  CHECK(run({"mult", "tv", "--k", "7", "--b", "10", "--r-max", "1"}).out == "r,tv,bound\n1,6/35,7/20\n");
  CHECK(run({"mult", "matrix", "--k", "2", "--b", "2"}).out == "1/2,1/2\n1/2,1/2\n");
  CHECK(run({"sections", "matrix", "--n", "1", "--r", "2"}).out == "1,0,0\n1,2,1\n0,0,1\n");
  CHECK(run({"sections", "apply", "--n", "1", "--r", "2", "--h", "0,1,0"}).out == "i,h_r\n0,0\n1,2\n2,0\n");
}

TEST_CASE("shuffle commands") {
  const Result dist = run({"shuffle", "dist", "--n", "2", "--b", "2", "--format", "json"});
  REQUIRE(dist.code == 0);
  const auto doc = nlohmann::json::parse(dist.out);
  CHECK(doc["distribution"]["1 2"] == "3/4");
  CHECK(doc["distribution"]["2 1"] == "1/4");

  const Result a = run({"shuffle", "sample", "--n", "5", "--b", "3", "--count", "20", "--seed", "9"});
  const Result b = run({"shuffle", "sample", "--n", "5", "--b", "3", "--count", "20", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("# seed=9 generator=mt19937_64") == 0);
  const Result js = run({"shuffle", "sample", "--n", "4", "--b", "2", "--seed", "3", "--format", "json", "--sampler", "cut-drop"});
  CHECK(nlohmann::json::parse(js.out)["seed"] == 3);
  CHECK(run({"shuffle", "sample", "--n", "4", "--b", "3", "--seed", "3", "--sampler", "cut-drop"}).code == 2);
}

TEST_CASE("randomized commands need a seed") {
  unsetenv("CARRYMIX_SEED");
  CHECK(run({"shuffle", "sample", "--n", "5", "--b", "2"}).code == 2);
  setenv("CARRYMIX_SEED", "77", 1);
  const Result r = run({"shuffle", "sample", "--n", "5", "--b", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# seed=77") == 0);
  setenv("CARRYMIX_SEED", "bogus", 1);
  CHECK(run({"shuffle", "sample", "--n", "5", "--b", "2"}).code == 2);
  unsetenv("CARRYMIX_SEED");
}

TEST_CASE("column array files") {
  const std::string path = temp_file("carrymix_cli_example.txt", "6 3 3\n012\n012\n112\n111\n212\n121\n");
  const Result carries = run({"carries", "--file", path});
  CHECK(carries.code == 0);
  CHECK(carries.out == "j,kappa\n1,3\n2,3\n3,2\n");
  const Result tau = run({"tau", "--file", path});
  CHECK(tau.out == "j,tau,descents,kappa\n1,6 3 1 4 2 5,3,3\n2,4 1 5 2 6 3,3,3\n3,1 3 6 4 2 5,2,2\n");
  CHECK(run({"carries", "--file", "/nonexistent/array.txt"}).code == 2);
  CHECK(run({"carries", "--file", temp_file("carrymix_cli_bad.txt", "2 2 3\n09\n00\n")}).code == 2);
}

TEST_CASE("verify subcommands") {
  for (const char* what : {"stationary", "eigen", "semigroup", "tp2", "sections", "mult", "card", "golden", "separation", "moments"}) {
    CAPTURE(what);
    const Result r = run({"verify", what, "--quick"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  const Result ex = run({"verify", "theorem-main", "--n", "3", "--m", "2", "--b", "2", "--mode", "exhaustive", "--format", "json"});
  REQUIRE(ex.code == 0);
  const auto doc = nlohmann::json::parse(ex.out);
  CHECK(doc["equal"] == true);
  CHECK(doc["carries_law"] == doc["descents_law"]);

  const Result mc = run({"verify", "theorem-main", "--n", "5", "--m", "3", "--b", "2", "--mode", "montecarlo", "--samples",
                         "20000", "--seed", "5", "--format", "json"});
  CHECK(mc.code == 0);
  const auto mdoc = nlohmann::json::parse(mc.out);
  CHECK(mdoc["seed"] == 5);
  CHECK(mdoc["chi_square"].contains("groups"));

  CHECK(run({"verify", "bijections", "--n", "2", "--m", "2", "--b", "2", "--exhaustive"}).code == 0);
  CHECK(run({"verify", "bijections", "--n", "4", "--m", "3", "--b", "3", "--samples", "50", "--seed", "1"}).code == 0);
  CHECK(run({"verify", "bijections", "--n", "4"}).code == 2);
  CHECK(run({"verify", "theorem-main", "--n", "3", "--m", "2"}).code == 2);
}

TEST_CASE("usage and resource errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"matrix", "--n", "3"}).code == 2);
  CHECK(run({"matrix", "--n", "3", "--b", "1"}).code == 2);
  CHECK(run({"matrix", "--n", "3", "--b", "10", "--format", "xml"}).code == 2);
  CHECK(run({"mult", "trace", "--k", "3", "--b", "10", "--digits", "1,12"}).code == 2);
  CHECK(run({"sections", "apply", "--n", "2", "--r", "2", "--h", "1,2"}).code == 2);
  CHECK(run({"shuffle", "dist", "--n", "9", "--b", "10"}).code == 3);
  CHECK(run({"verify", "theorem-main", "--n", "6", "--m", "5", "--b", "3"}).code == 3);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("matrix") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args{"verify", "theorem-main", "--n", "4", "--m", "3", "--b", "2", "--mode", "montecarlo",
                                      "--samples", "3000", "--seed", "11", "--jobs", "3", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicw1/cli.hpp"

using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "padicw1");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = padicw1::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return std::string(P_tmpdir) + "/padicw1_test_" + name;
}

}  // namespace

TEST_CASE("regular points are rejected with exit code 2") {
  Run r = run({"verify", "gross", "--char", "kronecker:-4", "--p", "7"});
  CHECK(r.code == 2);
  CHECK(r.err.find("phi(7) != 1") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"lp", "--p", "4"}).code == 2);
  CHECK(run({"lp", "--char", "kronecker:-5", "--p", "7"}).code == 2);
  CHECK(run({"lp", "--p", "5", "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("qexp eisenstein gives n_max + 1 coefficients") {
  Run r = run({"qexp", "eisenstein", "--k", "1", "--kind", "1,phi", "--nmax", "10"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["schema"] == "padicw1.report/1");
  CHECK(j["exact"].size() == 11);
  CHECK(j["exact"][0] == "1/4");
  CHECK(j["exact"][5] == "2");
  CHECK(j["preview"].get<std::string>().rfind("1/4 + q", 0) == 0);
}

TEST_CASE("PadicNumber serialisation") {
  Run r = run({"lp", "--char", "kronecker:-4", "--p", "5", "--jet", "2", "--prec", "20"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  const Json& c = j["jet"]["coefficients"];
  REQUIRE(c.size() == 2);
  CHECK(c[0]["valuation"].is_null());
  CHECK(c[0]["absolute_precision"].get<int>() >= 15);
  CHECK(c[1]["valuation"] == 1);
  CHECK(c[1]["p"] == 5);
  CHECK(c[1]["unit_digits"].size() == c[1]["precision"].get<size_t>());
  for (const auto& d : c[1]["unit_digits"]) CHECK(d.get<int>() < 5);
  CHECK(c[1]["unit_digits"][0].get<int>() != 0);
}

TEST_CASE("reports are byte-deterministic") {
  std::vector<std::string> args{"verify", "all", "--char", "kronecker:-3", "--p", "7"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  CHECK(j["pass"] == true);
  for (const auto& [name, suite] : j["suites"].items()) {
    for (const auto& c : suite["claims"]) {
      INFO(name, c.dump());
      CHECK(c["pass"] == true);
      if (c.contains("digits")) CHECK(c.contains("threshold"));
    }
  }
}

TEST_CASE("config file with flag precedence") {
  const std::string cfg = temp_path("config.txt");
  {
    std::ofstream f(cfg);
    f << "char=mod:21:8=3,10=2,order=6\np=13\nprec=25\nunit-poly=13,-3,1\nunit-val=1\n";
  }
  Run r = run({"linv", "--config", cfg});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["character"] == "mod:21:8=3,10=2,order=6");
  CHECK(j["p"] == 13);
  Run over = run({"linv", "--config", cfg, "--prec", "12"});
  REQUIRE(over.code == 0);
  CHECK(Json::parse(over.out)["value"]["precision"].get<int>() <
        j["value"]["precision"].get<int>());
  std::remove(cfg.c_str());
}

TEST_CASE("unit data from a JSON file and the embedding ambiguity") {
  const std::string path = temp_path("unit.json");
  {
    std::ofstream f(path);
    f << R"({"coefficients": [13, -3, 1], "valuation": 1})";
  }
  Run r = run({"linv", "--char", "mod:21:8=3,10=2,order=6", "--p", "13", "--unit-file", path});
  CHECK(r.code == 0);
  {
    std::ofstream f(path);
    f << R"({"coefficients": [338, -39, 1], "valuation": 1})";  // (T - 13)(T - 26)
  }
  Run amb = run({"linv", "--char", "mod:21:8=3,10=2,order=6", "--p", "13", "--unit-file", path});
  CHECK(amb.code == 2);
  CHECK(amb.err.find("precondition") != std::string::npos);
  std::remove(path.c_str());
  CHECK(run({"linv", "--char", "mod:21:8=3,10=2,order=6", "--p", "13"}).code == 2);
}

TEST_CASE("identity failures give exit code 1") {
  // synthetic units break Gross' formula
  Run r = run({"verify", "gross", "--char", "mod:21:8=3,10=2,order=6", "--p", "13",
               "--unit-poly", "13,-3,1", "--unit-val", "1"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["pass"] == false);
}

TEST_CASE("output file") {
  const std::string path = temp_path("out.json");
  Run r = run({"zeta-series", "--char", "kronecker:-4", "--p", "5", "--mx", "4", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  Json j = Json::parse(in);
  CHECK(j["series"]["coefficients"].size() == 4);
  std::remove(path.c_str());
}

TEST_CASE("other subcommands run") {
  CHECK(run({"family", "cuspidal", "--char", "kronecker:-4", "--p", "5", "--nmax", "50"}).code == 0);
  CHECK(run({"family", "eisenstein", "--kind", "phi,1", "--char", "kronecker:-3", "--p", "7",
             "--nmax", "50", "--mx", "3"}).code == 0);
  CHECK(run({"overconvergent", "--char", "kronecker:-4", "--p", "5", "--nmax", "300",
             "--up-range", "10"}).code == 0);
  CHECK(run({"overconvergent", "--char", "kronecker:-4", "--p", "5", "--nmax", "30",
             "--check", "none"}).code == 0);
  Run h = run({"hecke-structure", "--char", "kronecker:-4", "--p", "5", "--mx", "5"});
  CHECK(h.code == 0);
  Json j = Json::parse(h.out);
  CHECK(j["models"].size() == 3);
  CHECK(run({"verify", "ferrero-greenberg", "--char", "kronecker:-3", "--p", "13"}).code == 0);
  CHECK(run({"verify", "relation", "--char", "kronecker:-3", "--p", "13", "--lmax", "60"}).code == 0);
  CHECK(run({"verify", "interpolation", "--char", "kronecker:-4", "--p", "5"}).code == 0);
  CHECK(run({"qexp", "eisenstein", "--char", "mod:21:8=3,10=2,order=6", "--p", "13",
             "--nmax", "5"}).code == 0);
  CHECK(run({"qexp", "eisenstein", "--char", "mod:21:8=3,10=2,order=6", "--nmax", "5"}).code == 2);
}

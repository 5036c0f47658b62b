#include <doctest.h>

#include "test_support.hpp"
#include "toupie/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>

using namespace toupie;
using namespace toupie::test;
using nlohmann::json;

namespace {

JobSpec job(const std::string& command, const std::string& input, const std::string& format = "json") {
  JobSpec j;
  j.command = command;
  j.input = input.empty() ? "" : data_path(input);
  j.format = format;
  return j;
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("toupie_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("ext-products on E1") {
  const RunResult r = run(job("ext-products", "e1.json"));
  REQUIRE(r.exit_code == kExitOk);
  const json out = json::parse(r.out);
  CHECK(out["version"] == kVersion);
  CHECK(out["input_sha256"] == sha256_hex(read_data("e1.json")));
  const json& products = out["result"]["products"];
  REQUIRE(products.size() == 3);
  CHECK(products[0]["inputs"] == json::parse(R"([[["beta1"]],[["beta2"]]])"));
  CHECK(products[0]["value"] == json::parse(R"([{"chain":[["beta1"],["beta2"]],"coeff":"-1"}])"));
  CHECK(products[1]["inputs"] == json::parse(R"([[["gamma1"]],[["gamma2"]]])"));
  CHECK(products[1]["value"] ==
        json::parse(R"([{"chain":[["alpha1"],["alpha2","alpha3"]],"coeff":"1"},
                        {"chain":[["beta1"],["beta2"]],"coeff":"1"}])"));
  CHECK(products[2]["arity"] == 3);
  CHECK(products[2]["value"] == json::parse(R"([{"chain":[["alpha1"],["alpha2","alpha3"]],"coeff":"1"}])"));
}

TEST_CASE("betti on E1") {
  const RunResult r = run(job("betti", "e1.json"));
  CHECK(r.exit_code == kExitOk);
  CHECK(json::parse(r.out)["result"]["betti"] == json::parse("[6,7,2,0]"));
  CHECK(run(job("betti", "e1.json", "text")).out.find("betti: 6 7 2 0") != std::string::npos);
}

TEST_CASE("validate on a non-toupie quiver") {
  const RunResult r = run(job("validate", "not_toupie.json", "text"));
  CHECK(r.exit_code == kExitInput);
  CHECK(r.err.find("degree") != std::string::npos);
  const RunResult j = run(job("validate", "not_toupie.json"));
  CHECK(json::parse(j.out)["error"]["code"] == "not_toupie");
}

TEST_CASE("every command passes on E1 and the monomial algebra") {
  for (const char* input : {"e1.json", "monomial.json"})
    for (const std::string& command : command_names()) {
      const RunResult r = run(job(command, input));
      const std::string what = command + " on " + input + ": " + r.out + r.err;
      CHECK_MESSAGE(r.exit_code == kExitOk, what);
    }
}

TEST_CASE("reports are byte-stable") {
  for (const std::string& command : command_names())
    CHECK(run(job(command, "e1.json")).out == run(job(command, "e1.json")).out);
}

TEST_CASE("hypothesis failures are structured refusals") {
  for (const char* bad : {"cubic_monomial.json", "two_cubic_tips.json", "quartic_mixed.json"})
    for (const char* command : {"yoneda", "double-dual"}) {
      const RunResult r = run(job(command, bad));
      CHECK(r.exit_code == kExitRefused);
      const json out = json::parse(r.out);
      CHECK(out["status"] == "refused");
      CHECK(out["error"]["code"] == "hypotheses");
      CHECK_FALSE(out["error"]["message"].get<std::string>().empty());
    }
}

TEST_CASE("double-dual reports the cubic binomial as a violation") {
  const RunResult r = run(job("double-dual", "cubic_binomial.json"));
  CHECK(r.exit_code == kExitViolation);
  CHECK_FALSE(json::parse(r.out)["diff"].empty());
}

TEST_CASE("yoneda output re-ingested as input") {
  JobSpec j = job("yoneda", "e1.json");
  j.output = temp_file("yoneda.json");
  REQUIRE(run(j).exit_code == kExitOk);
  JobSpec v = job("validate", "");
  v.input = *j.output;
  CHECK(run(v).exit_code == kExitOk);
  std::remove(j.output->c_str());
}

TEST_CASE("golden files") {
  const std::string golden = temp_file("golden.txt");
  JobSpec j = job("ext-products", "e1.json", "text");
  {
    std::ofstream f(golden);
    f << run(j).out;
  }
  j.golden = golden;
  CHECK(run(j).exit_code == kExitOk);
  {
    std::ofstream f(golden);
    f << "something else\n";
  }
  const RunResult bad = run(j);
  CHECK(bad.exit_code == kExitViolation);
  CHECK(bad.err.find("golden mismatch: line 1") != std::string::npos);
  std::remove(golden.c_str());
}

TEST_CASE("input errors") {
  CHECK(run(job("validate", "does_not_exist.json")).exit_code == kExitInput);
  CHECK(run(job("validate", "")).exit_code == kExitInput);
}

TEST_CASE("a seed draws a random presentation") {
  JobSpec j = job("oracle-diff", "");
  j.seed = 7;
  const RunResult r = run(j);
  CHECK(r.exit_code == kExitOk);
  CHECK(json::parse(r.out)["seed"] == 7);
  CHECK(run(j).out == r.out);
}

TEST_CASE("flags and environment overrides") {
  const std::string input = data_path("e1.json");
  std::vector<std::string> args{"toupie", "betti", "--input", input, "--format", "json"};
  auto call = [](std::vector<std::string> a) {
    std::vector<char*> argv;
    for (auto& s : a) argv.push_back(s.data());
    return cli_main(static_cast<int>(argv.size()), argv.data());
  };
  CHECK(call(args) == kExitOk);
  CHECK(call({"toupie", "no-such-command", "--input", input}) == kExitInput);
  CHECK(call({"toupie", "betti", "--input", input, "--format", "xml"}) == kExitInput);
  setenv("TOUPIE_INPUT", data_path("not_toupie.json").c_str(), 1);
  CHECK(call({"toupie", "validate"}) == kExitInput);
  CHECK(call({"toupie", "validate", "--input", input}) == kExitOk);
  unsetenv("TOUPIE_INPUT");
}

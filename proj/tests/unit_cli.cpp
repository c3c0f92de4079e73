// Exercises the installed command surface end to end: exit codes, file
// outputs and byte determinism. The binary path and fixture directory come
// in through compile definitions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kCli = KBEMBED_CLI_PATH;
const std::string kFixtures = KBEMBED_FIXTURE_DIR;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/kbembed_cli_out.txt";
  std::string cmd = kCli + " " + args + " >" + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream buf;
  buf << in.rdbuf();
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, buf.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("clark command") {
  RunResult r = run("clark " + fixture("b_z.json") + " --alpha 1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.at("atoms").size() == 1);
  CHECK(j["atoms"][0]["s"].get<double>() == doctest::Approx(1.0));
  CHECK(j["atoms"][0]["t"][0].get<double>() == doctest::Approx(1.0));

  std::string csv = "/tmp/kbembed_test_atoms.csv";
  RunResult r3 = run("clark " + fixture("b_z3.json") + " --alpha 1 --csv " + csv +
                     " -o /tmp/kbembed_test_m3.json");
  CHECK(r3.exit_code == 0);
  std::string table = slurp(csv);
  CHECK(count_lines(table) == 4);  // header + 3 atoms
  CHECK(table.find("0.3333333333333333") != std::string::npos);

  RunResult rcsv = run("--format csv clark " + fixture("b_z.json") + " --alpha 1");
  CHECK(rcsv.exit_code == 0);
  CHECK(rcsv.output.rfind("arg_t,re_t,im_t,weight", 0) == 0);

  CHECK(run("clark " + fixture("malformed.json") + " --alpha 1").exit_code == 2);
  CHECK(run("clark " + fixture("b_z.json") + " --alpha 0.5").exit_code == 2);
}

TEST_CASE("clark output is byte deterministic") {
  RunResult a = run("clark " + fixture("b_z3.json") + " --alpha 0.6,0.8");
  RunResult b = run("clark " + fixture("b_z3.json") + " --alpha 0.6,0.8");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("verify command exit codes") {
  CHECK(run("verify " + fixture("b_z2.json") + " " + fixture("measure_halves.json"))
            .exit_code == 0);
  CHECK(run("verify " + fixture("b_z.json") + " " + fixture("measure_delta1.json"))
            .exit_code == 0);
  RunResult bad =
      run("verify " + fixture("b_z.json") + " " + fixture("measure_delta_minus1_w2.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("verdict false") != std::string::npos);
}

TEST_CASE("extreme command and the disagreement detector") {
  RunResult split = run("extreme " + fixture("b_z.json") + " " +
                        fixture("measure_halves.json") + " --oracle");
  CHECK(split.exit_code == 0);
  auto j = nlohmann::json::parse(split.output);
  CHECK(j["verdict"] == "not_extreme");
  REQUIRE(j.contains("decomposition"));
  CHECK(j["decomposition"]["plus"]["atoms"].size() == 1);

  RunResult clark2 = run("extreme " + fixture("b_z2.json") + " " +
                         fixture("measure_halves.json"));
  CHECK(clark2.exit_code == 0);
  CHECK(nlohmann::json::parse(clark2.output)["verdict"] == "extreme");

  RunResult corrupted = run("extreme " + fixture("b_z.json") + " " +
                            fixture("measure_halves_corrupted.json") + " --oracle");
  CHECK(corrupted.exit_code == 4);
}

TEST_CASE("decompose command") {
  RunResult r = run("decompose " + fixture("b_z.json") + " " + fixture("measure_halves.json"));
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.contains("phi0"));
}

TEST_CASE("sweep command") {
  RunResult r = run("sweep " + fixture("b_z.json") + " --alphas 4");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 5);  // header + 4 rows
  CHECK(r.output.rfind("alpha_arg,atom_arg,weight,max_mass", 0) == 0);

  RunResult r2 = run("sweep " + fixture("b_z2.json") + " --alphas 2");
  CHECK(r2.exit_code == 0);
  CHECK(count_lines(r2.output) == 5);  // header + 2*2 rows
  CHECK(r2.output.find(",0.5,0.5") != std::string::npos);

  CHECK(run("sweep " + fixture("b_z.json") + " --alphas 0").exit_code == 2);
}

TEST_CASE("pick solve command") {
  RunResult r = run("pick solve " + fixture("pick_interior.json"));
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["diagnostics"]["rank"] == 1);
  CHECK(j["diagnostics"]["unique"] == true);
  for (const auto& res : j["diagnostics"]["residuals"])
    CHECK(res.get<double>() < 1e-8);

  RunResult rb = run("pick solve " + fixture("pick_boundary.json"));
  CHECK(rb.exit_code == 0);
  auto jb = nlohmann::json::parse(rb.output);
  CHECK(jb["diagnostics"]["degree"].get<int>() <= 1);
}

TEST_CASE("theta-product command") {
  RunResult r = run("theta-product " + fixture("theta_product_input.json"));
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  // (1/2 o -1/2)_z = z/4
  REQUIRE(j["num"].size() == 2);
  {
    double num1 = j["num"][1][0].get<double>();
    double den0 = j["den"][0][0].get<double>();
    CHECK(num1 / den0 == doctest::Approx(0.25).epsilon(1e-12));  // the function is z/4
  }
  CHECK(j["inner"] == false);
}

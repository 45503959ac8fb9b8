#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "momentkit/cli.hpp"
#include "momentkit/json_io.hpp"
#include "support/oracles.hpp"

using namespace momentkit;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / "momentkit_cli_test";
    std::filesystem::create_directories(path);
  }
  std::string write(const std::string& name, const std::string& content) const {
    const std::filesystem::path file = path / name;
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file.string();
  }
};

const std::string kTwoAtomMeasure = R"({
  "num_vars": 1,
  "atoms": [
    {"point": [-0.5], "weight": 0.3},
    {"point": [0.5], "weight": 0.7}
  ]
})";

}  // namespace

TEST_CASE("gen-moments matches the forward oracle") {
  TempDir tmp;
  const std::string measure = tmp.write("two_atoms.json", kTwoAtomMeasure);
  const RunResult result = run_cli({"gen-moments", "--measure", measure, "--max-degree", "6"});
  REQUIRE(result.exit_code == 0);
  const json out = json::parse(result.output);
  CHECK(out.at("num_vars") == 1);
  CHECK(out.at("max_degree") == 6);
  const std::vector<double> expected =
      oracles::forward_moments_1d({{-0.5, 0.3}, {0.5, 0.7}}, 6);
  REQUIRE(out.at("moments").size() == 7);
  for (const json& entry : out.at("moments")) {
    const int k = entry.at("exponent")[0].get<int>();
    CHECK(entry.at("value").get<double>() == doctest::Approx(expected[k]).epsilon(1e-15));
  }
}

TEST_CASE("moment files round trip bit-exactly") {
  TempDir tmp;
  const std::string measure = tmp.write("two_atoms.json", kTwoAtomMeasure);
  const RunResult first = run_cli({"gen-moments", "--measure", measure, "--max-degree", "8"});
  REQUIRE(first.exit_code == 0);
  const MomentSequence parsed = moments_from_json(json::parse(first.output));
  CHECK(dump_json(moments_to_json(parsed)) == first.output);

  // measure files too
  const AtomicMeasure mu = measure_from_json(parse_json(kTwoAtomMeasure));
  const std::string dumped = dump_json(measure_to_json(mu));
  const AtomicMeasure again = measure_from_json(parse_json(dumped));
  CHECK(dump_json(measure_to_json(again)) == dumped);

  // and measures emitted by the CLI itself
  const RunResult fixture = run_cli({"gen-fixture", "--kind", "random-ball-atoms", "--seed", "9"});
  REQUIRE(fixture.exit_code == 0);
  const json emitted = json::parse(fixture.output).at("fixtures")[0].at("measure");
  const AtomicMeasure reparsed = measure_from_json(emitted);
  CHECK(measure_to_json(reparsed) == emitted);
}

TEST_CASE("check-psd verdicts") {
  TempDir tmp;
  const std::string measure =
      tmp.write("dirac.json", R"({"num_vars": 1, "atoms": [{"point": [0.5], "weight": 1.0}]})");
  const RunResult moments = run_cli({"gen-moments", "--measure", measure, "--max-degree", "4"});
  const std::string moments_path = tmp.write("dirac_moments.json", moments.output);

  const RunResult good = run_cli({"check-psd", "--moments", moments_path});
  CHECK(good.exit_code == 0);
  CHECK(json::parse(good.output).at("psd") == true);

  // constructed non-moment data fails with a witness
  json bad_data = {{"num_vars", 1},
                   {"max_degree", 2},
                   {"moments",
                    json::array({{{"exponent", {0}}, {"value", 1.0}},
                                 {{"exponent", {1}}, {"value", 0.0}},
                                 {{"exponent", {2}}, {"value", -1.0}}})}};
  const std::string bad_path = tmp.write("bad_moments.json", bad_data.dump());
  const RunResult bad = run_cli({"check-psd", "--moments", bad_path});
  CHECK(bad.exit_code == 1);
  const json report = json::parse(bad.output);
  CHECK(report.at("psd") == false);
  CHECK(report.at("witness") == "x1");
}

TEST_CASE("check-psd localizing options") {
  TempDir tmp;
  // atoms straddling the unit interval: the plain matrix is PSD, the
  // interval-localized matrix at level 1 is not
  const std::string measure = tmp.write(
      "straddle.json",
      R"({"num_vars": 1, "atoms": [{"point": [0.5], "weight": 0.9}, {"point": [1.5], "weight": 0.1}]})");
  const RunResult moments = run_cli({"gen-moments", "--measure", measure, "--max-degree", "10"});
  const std::string path = tmp.write("m.json", moments.output);

  CHECK(run_cli({"check-psd", "--moments", path}).exit_code == 0);
  const RunResult level0 =
      run_cli({"check-psd", "--moments", path, "--shift", "1 - x1^2", "--level", "0"});
  CHECK(level0.exit_code == 0);
  CHECK(json::parse(level0.output).at("level") == 0);
  const RunResult level1 =
      run_cli({"check-psd", "--moments", path, "--shift", "1 - x1^2", "--level", "1"});
  CHECK(level1.exit_code == 1);
  CHECK(json::parse(level1.output).at("shift") == "1 - x1^2");
  // default level fills the available degrees: (10 - 2) / 2 = 4
  const RunResult deep = run_cli({"check-psd", "--moments", path, "--shift", "1 - x1^2"});
  CHECK(json::parse(deep.output).at("level") == 4);
}

TEST_CASE("uniform interval fixture carries the closed-form moments") {
  const RunResult result =
      run_cli({"gen-fixture", "--kind", "uniform-interval", "--max-degree", "8", "--vars", "1"});
  REQUIRE(result.exit_code == 0);
  const json bundle = json::parse(result.output);
  const json& moments = bundle.at("fixtures")[0].at("moments").at("moments");
  for (const json& entry : moments) {
    const int k = entry.at("exponent")[0].get<int>();
    const double expected = k % 2 == 0 ? 1.0 / (k + 1) : 0.0;
    CHECK(entry.at("value").get<double>() == expected);
  }
}

TEST_CASE("check-ball flags an outside atom") {
  TempDir tmp;
  const std::string measure = tmp.write(
      "outside.json", R"({"num_vars": 2, "atoms": [{"point": [2.0, 0.0], "weight": 1.0}]})");
  const RunResult moments = run_cli({"gen-moments", "--measure", measure, "--max-degree", "6"});
  const std::string moments_path = tmp.write("outside_moments.json", moments.output);

  const RunResult result = run_cli({"check-ball", "--moments", moments_path, "--budget", "6"});
  CHECK(result.exit_code == 1);
  const json report = json::parse(result.output);
  CHECK(report.at("ok") == false);
  REQUIRE(!report.at("violations").empty());
  bool found = false;
  for (const json& v : report.at("violations")) {
    if (v.at("label") == "(1 - x1^2 - x2^2)") {
      found = true;
      CHECK(v.at("value").get<double>() == doctest::Approx(-3.0));
    }
  }
  CHECK(found);
}

TEST_CASE("check-cone verdicts") {
  TempDir tmp;
  const std::string measure =
      tmp.write("dirac.json", R"({"num_vars": 1, "atoms": [{"point": [0.5], "weight": 1.0}]})");
  const RunResult moments = run_cli({"gen-moments", "--measure", measure, "--max-degree", "6"});
  const std::string path = tmp.write("m.json", moments.output);

  CHECK(run_cli({"check-cone", "--moments", path, "--poly", "x1", "--bound", "1.0",
                 "--budget", "6"})
            .exit_code == 0);
  const RunResult fail = run_cli(
      {"check-cone", "--moments", path, "--poly", "x1", "--bound", "0.4", "--budget", "6"});
  CHECK(fail.exit_code == 1);
  CHECK(json::parse(fail.output).at("violations").size() > 0);
}

TEST_CASE("vnorm output schema") {
  TempDir tmp;
  const std::string measure =
      tmp.write("dirac.json", R"({"num_vars": 1, "atoms": [{"point": [0.5], "weight": 1.0}]})");
  const RunResult moments = run_cli({"gen-moments", "--measure", measure, "--max-degree", "10"});
  const std::string path = tmp.write("m.json", moments.output);

  const RunResult ratio =
      run_cli({"vnorm", "--moments", path, "--poly", "x1", "--budget", "4"});
  REQUIRE(ratio.exit_code == 0);
  const json out = json::parse(ratio.output);
  CHECK(out.at("kind") == "ratio");
  CHECK(out.at("value").get<double>() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(out.at("budget") == 4);
  CHECK(out.at("sequence").size() == 5);

  const RunResult root =
      run_cli({"vnorm", "--moments", path, "--poly", "x1", "--budget", "4", "--kind", "root"});
  CHECK(json::parse(root.output).at("kind") == "root");
  CHECK(json::parse(root.output).at("value").get<double>() == doctest::Approx(0.5));
}

TEST_CASE("solve-1d recovers atoms") {
  TempDir tmp;
  const std::vector<double> f = oracles::forward_moments_1d({{-0.5, 0.3}, {0.5, 0.7}}, 6);
  const std::string path = tmp.write("sequence.json", json{{"values", f}}.dump());
  const RunResult result = run_cli({"solve-1d", "--sequence", path});
  REQUIRE(result.exit_code == 0);
  const json out = json::parse(result.output);
  CHECK(out.at("rank") == 2);
  CHECK(out.at("residual").get<double>() <= 1e-8);
  REQUIRE(out.at("atoms").size() == 2);
  CHECK(out.at("atoms")[0].at("location").get<double>() == doctest::Approx(-0.5));
  CHECK(out.at("atoms")[0].at("weight").get<double>() == doctest::Approx(0.3));
  CHECK(out.at("atoms")[1].at("location").get<double>() == doctest::Approx(0.5));
}

TEST_CASE("certify subcommand") {
  const RunResult ok =
      run_cli({"certify", "--target", "1 + x1^2", "--region", "ball", "--vars", "1",
               "--max-degree", "2"});
  REQUIRE(ok.exit_code == 0);
  const json cert = json::parse(ok.output);
  CHECK(cert.at("status") == "verified");
  CHECK(cert.at("degree") == 2);
  CHECK(cert.at("residual").get<double>() <= 1e-9);
  CHECK(cert.at("coefficients").size() > 0);
  // the emitted certificate is self-contained: re-verify from JSON alone
  const VerifyResult reverify = verify_certificate(certificate_from_json(cert));
  CHECK(reverify.verified);

  const RunResult infeasible =
      run_cli({"certify", "--target", "x1^2", "--region", "ball", "--vars", "1",
               "--max-degree", "2", "--cert-degree-max", "2"});
  CHECK(infeasible.exit_code == 1);
  const json report = json::parse(infeasible.output);
  CHECK(report.at("status") == "infeasible");
  CHECK(report.at("degree") == 2);
}

TEST_CASE("support-bound subcommand") {
  TempDir tmp;
  const std::string measure = tmp.write(
      "pair2d.json", R"({"num_vars": 2, "atoms": [{"point": [0.6, 0.8], "weight": 1.0}]})");
  const RunResult moments = run_cli({"gen-moments", "--measure", measure, "--max-degree", "12"});
  const std::string path = tmp.write("m.json", moments.output);
  const RunResult result = run_cli({"support-bound", "--moments", path, "--budget", "4"});
  REQUIRE(result.exit_code == 0);
  const json out = json::parse(result.output);
  CHECK(out.at("value").get<double>() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(out.at("radius").get<double>() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(out.at("generators").size() == 2);  // defaults to the variables
}

TEST_CASE("gen-fixture is deterministic per seed") {
  const std::vector<std::string> args{"gen-fixture", "--kind", "random-ball-atoms", "--seed",
                                      "42", "--vars", "2", "--max-degree", "6"};
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);

  std::vector<std::string> other = args;
  other[4] = "43";
  CHECK(run_cli(other).output != first.output);

  const RunResult worked = run_cli({"gen-fixture", "--kind", "worked-examples", "--seed", "1"});
  REQUIRE(worked.exit_code == 0);
  CHECK(json::parse(worked.output).at("fixtures").size() == 5);
}

TEST_CASE("seed environment override") {
  const std::vector<std::string> args{"gen-fixture", "--kind", "random-ball-atoms"};
  setenv("MOMENTKIT_SEED", "7", 1);
  const RunResult env7 = run_cli(args);
  unsetenv("MOMENTKIT_SEED");
  const RunResult seed7 = run_cli({"gen-fixture", "--kind", "random-ball-atoms", "--seed", "7"});
  const RunResult seed0 = run_cli(args);
  CHECK(env7.output == seed7.output);
  CHECK(env7.output != seed0.output);
}

TEST_CASE("malformed JSON reports line and column with exit 2") {
  TempDir tmp;
  const std::string path = tmp.write("broken.json", "{\n  \"num_vars\": 1,\n  broken\n}");
  const RunResult result = run_cli({"check-psd", "--moments", path});
  CHECK(result.exit_code == 2);
  const json err = json::parse(result.output);
  CHECK(err.at("error").at("kind") == "invalid-input");
  const std::string message = err.at("error").at("message");
  CHECK(message.find("line 3") != std::string::npos);
  CHECK(message.find("column") != std::string::npos);
}

TEST_CASE("degree overflow reports required versus available with exit 2") {
  TempDir tmp;
  const std::string measure =
      tmp.write("dirac.json", R"({"num_vars": 1, "atoms": [{"point": [0.5], "weight": 1.0}]})");
  const RunResult moments = run_cli({"gen-moments", "--measure", measure, "--max-degree", "4"});
  const std::string path = tmp.write("m.json", moments.output);
  const RunResult result =
      run_cli({"vnorm", "--moments", path, "--poly", "x1", "--budget", "8"});
  CHECK(result.exit_code == 2);
  const json err = json::parse(result.output);
  CHECK(err.at("error").at("kind") == "degree-overflow");
  const std::string message = err.at("error").at("message");
  CHECK(message.find("needs degree 18") != std::string::npos);
  CHECK(message.find("available 4") != std::string::npos);
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli({"no-such-command"}).exit_code == 2);
  CHECK(run_cli({"vnorm", "--moments"}).exit_code == 2);
  CHECK(run_cli({}).exit_code == 2);
  const RunResult help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("gen-moments") != std::string::npos);
  CHECK(help.output.find("certify") != std::string::npos);
}

TEST_CASE("unnormalized measure without the flag is exit 2, with the flag works") {
  TempDir tmp;
  const std::string measure =
      tmp.write("heavy.json", R"({"num_vars": 1, "atoms": [{"point": [0.5], "weight": 2.0}]})");
  CHECK(run_cli({"gen-moments", "--measure", measure, "--max-degree", "2"}).exit_code == 2);
  const RunResult ok =
      run_cli({"gen-moments", "--measure", measure, "--max-degree", "2", "--normalize"});
  CHECK(ok.exit_code == 0);
}

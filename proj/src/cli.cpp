#include "momentkit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "momentkit/certify.hpp"
#include "momentkit/fixtures.hpp"
#include "momentkit/hausdorff1d.hpp"
#include "momentkit/json_io.hpp"
#include "momentkit/moments.hpp"
#include "momentkit/vnorm.hpp"

namespace momentkit {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MomentSequence load_moments(const std::string& path) {
  return moments_from_json(parse_json(read_file(path)));
}

std::uint64_t env_seed(std::uint64_t fallback) {
  const char* text = std::getenv("MOMENTKIT_SEED");
  if (text == nullptr || *text == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text, &end, 10);
  if (end == text || *end != '\0') {
    throw Error(ErrorKind::invalid_input, "MOMENTKIT_SEED must be an unsigned integer");
  }
  return v;
}

std::vector<Polynomial> parse_generator_list(const std::string& text, int num_vars) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(';', start);
    const std::string piece =
        text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) {
      out.push_back(Polynomial::parse(piece, num_vars));
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (out.empty()) throw Error(ErrorKind::invalid_input, "empty generator list");
  return out;
}

struct CommandConfig {
  std::string measure_path;
  std::string moments_path;
  std::string sequence_path;
  std::string poly_text;
  std::string target_text;
  std::string shift_text = "1";
  std::string region = "ball";
  std::string kind;
  std::string generators_text;
  int max_degree = -1;
  int level = -1;
  int budget = -1;
  int num_vars = 0;
  int cert_degree_max = 8;
  double bound = 0.0;
  double psd_tol = 1e-9;
  double cert_tol = 1e-9;
  double rank_tol = 1e-8;
  double tol = 1e-9;
  bool normalize = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

RunResult dispatch(const std::string& command, CommandConfig& config) {
  if (!config.seed_given) config.seed = env_seed(config.seed);

  if (command == "gen-moments") {
    const AtomicMeasure mu = measure_from_json(parse_json(read_file(config.measure_path)));
    const MomentSequence L = moments_from_measure(mu, config.max_degree, config.normalize);
    return {0, dump_json(moments_to_json(L))};
  }

  if (command == "check-psd") {
    const MomentSequence L = load_moments(config.moments_path);
    const Polynomial shift = Polynomial::parse(config.shift_text, L.num_vars());
    int level = config.level;
    if (level < 0) level = (L.max_degree() - shift.degree()) / 2;
    const PsdReport report = is_psd(moment_matrix(L, level, shift), config.psd_tol);
    json out = psd_report_to_json(report);
    out["level"] = level;
    out["shift"] = shift.str();
    return {report.psd ? 0 : 1, dump_json(out)};
  }

  if (command == "check-ball") {
    const MomentSequence L = load_moments(config.moments_path);
    const int budget = config.budget < 0 ? L.max_degree() : config.budget;
    const BallCheckReport report = check_ball_criterion(L, budget, config.tol);
    return {report.ok ? 0 : 1, dump_json(ball_report_to_json(report))};
  }

  if (command == "check-cone") {
    const MomentSequence L = load_moments(config.moments_path);
    const Polynomial a = Polynomial::parse(config.poly_text, L.num_vars());
    const int budget = config.budget < 0 ? L.max_degree() : config.budget;
    const ConeCheckReport report = check_binomial_cone(L, a, config.bound, budget, config.tol);
    json out = cone_report_to_json(report);
    out["poly"] = a.str();
    return {report.ok ? 0 : 1, dump_json(out)};
  }

  if (command == "vnorm") {
    const MomentSequence L = load_moments(config.moments_path);
    const Polynomial a = Polynomial::parse(config.poly_text, L.num_vars());
    VnormEstimate estimate;
    if (config.kind == "root") {
      estimate = vnorm_root(L, a, config.budget);
    } else if (config.kind.empty() || config.kind == "ratio") {
      estimate = vnorm_ratio(L, a, config.budget);
    } else {
      throw Error(ErrorKind::invalid_input, "vnorm kind must be ratio or root");
    }
    return {0, dump_json(vnorm_to_json(estimate))};
  }

  if (command == "solve-1d") {
    const Sequence1D f = sequence_from_json(parse_json(read_file(config.sequence_path)));
    const Recovered1D recovered = recover_atoms(f, config.rank_tol);
    return {0, dump_json(recovered_to_json(recovered))};
  }

  if (command == "support-bound") {
    const MomentSequence L = load_moments(config.moments_path);
    std::string generators_text = config.generators_text;
    if (generators_text.empty()) {
      for (int i = 0; i < L.num_vars(); ++i) {
        if (i > 0) generators_text += ';';
        generators_text += "x" + std::to_string(i + 1);
      }
    }
    const std::vector<Polynomial> generators =
        parse_generator_list(generators_text, L.num_vars());
    const double value = support_radius(L, generators, config.budget);
    json gen_list = json::array();
    for (const Polynomial& g : generators) gen_list.push_back(g.str());
    const json out = {{"value", value},
                      {"radius", std::sqrt(std::max(value, 0.0))},
                      {"budget", config.budget},
                      {"generators", gen_list}};
    return {0, dump_json(out)};
  }

  if (command == "certify") {
    const Polynomial target = Polynomial::parse(config.target_text, config.num_vars);
    const int s = target.num_vars();
    const BasisKind kind = basis_kind_from_string(config.region);
    int start = config.max_degree >= 0 ? config.max_degree : std::max(target.degree(), 0);
    const int cap = std::max(start, config.cert_degree_max);
    CertificateSearch last;
    for (int degree = start; degree <= cap; ++degree) {
      const GeneratorBasis basis = enumerate_basis(kind, s, degree);
      last = find_certificate(target, basis, config.cert_tol);
      if (last.certificate.has_value()) {
        return {0, dump_json(certificate_to_json(*last.certificate))};
      }
    }
    const json out = {{"status", "infeasible"},
                      {"degree", last.degree},
                      {"coefficients", json::array()},
                      {"residual", nullptr},
                      {"message", last.message},
                      {"target", target.str()}};
    return {1, dump_json(out)};
  }

  if (command == "gen-fixture") {
    const FixtureKind kind = fixture_kind_from_string(config.kind);
    const int vars = config.num_vars > 0 ? config.num_vars : 2;
    const int degree = config.max_degree >= 0 ? config.max_degree : 10;
    const FixtureBundle bundle = generate_fixture(kind, config.seed, vars, degree);
    return {0, dump_json(fixture_bundle_to_json(bundle))};
  }

  throw Error(ErrorKind::invalid_input, "unknown command \"" + command + "\"");
}

std::string error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::degree_overflow: return "degree-overflow";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::non_psd: return "not-positive-semidefinite";
    case ErrorKind::numeric: return "numeric";
    case ErrorKind::overflow_guard: return "overflow-guard";
  }
  return "unknown";
}

}  // namespace

RunResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"momentkit: truncated moment problems, growth seminorm estimates, "
               "1D atomic recovery, and cone positivity certificates"};
  app.require_subcommand(1);

  CommandConfig config;
  std::string command;
  const auto remember = [&command](const std::string& name) {
    return [&command, name]() { command = name; };
  };

  CLI::App* gen = app.add_subcommand("gen-moments", "Moments of an atomic measure file");
  gen->add_option("--measure", config.measure_path, "measure JSON file")->required();
  gen->add_option("--max-degree", config.max_degree, "truncation degree")->required();
  gen->add_flag("--normalize", config.normalize, "rescale the measure to total mass one");
  gen->callback(remember("gen-moments"));

  CLI::App* psd = app.add_subcommand("check-psd", "Moment / localizing matrix PSD check");
  psd->add_option("--moments", config.moments_path, "moment JSON file")->required();
  psd->add_option("--level", config.level, "matrix level d (default: largest feasible)");
  psd->add_option("--shift", config.shift_text, "localizing shift polynomial (default 1)");
  psd->add_option("--psd-tol", config.psd_tol, "relative eigenvalue tolerance");
  psd->callback(remember("check-psd"));

  CLI::App* ball = app.add_subcommand("check-ball", "Unit-ball cone generator check");
  ball->add_option("--moments", config.moments_path, "moment JSON file")->required();
  ball->add_option("--budget", config.budget, "generator degree budget (default: max degree)");
  ball->add_option("--tol", config.tol, "violation tolerance");
  ball->callback(remember("check-ball"));

  CLI::App* cone = app.add_subcommand("check-cone", "Binomial cone check for one element");
  cone->add_option("--moments", config.moments_path, "moment JSON file")->required();
  cone->add_option("--poly", config.poly_text, "element a")->required();
  cone->add_option("--bound", config.bound, "bound T > 0")->required();
  cone->add_option("--budget", config.budget, "degree budget (default: max degree)");
  cone->add_option("--tol", config.tol, "violation tolerance");
  cone->callback(remember("check-cone"));

  CLI::App* vn = app.add_subcommand("vnorm", "Growth seminorm estimate for one element");
  vn->add_option("--moments", config.moments_path, "moment JSON file")->required();
  vn->add_option("--poly", config.poly_text, "element a")->required();
  vn->add_option("--budget", config.budget, "level budget")->required();
  vn->add_option("--kind", config.kind, "ratio (default) or root");
  vn->callback(remember("vnorm"));

  CLI::App* solve = app.add_subcommand("solve-1d", "Atomic recovery from a 1D sequence");
  solve->add_option("--sequence", config.sequence_path, "sequence JSON file")->required();
  solve->add_option("--rank-tol", config.rank_tol, "singular value rank cutoff");
  solve->callback(remember("solve-1d"));

  CLI::App* cert = app.add_subcommand("certify", "Cone membership certificate search");
  cert->add_option("--target", config.target_text, "target polynomial")->required();
  cert->add_option("--region", config.region, "ball (default) or box");
  cert->add_option("--vars", config.num_vars, "variable count (default: inferred)");
  cert->add_option("--max-degree", config.max_degree,
                   "starting degree cap (default: target degree)");
  cert->add_option("--cert-degree-max", config.cert_degree_max,
                   "escalation limit for the degree cap");
  cert->add_option("--cert-tol", config.cert_tol, "verification tolerance");
  cert->callback(remember("certify"));

  CLI::App* support = app.add_subcommand("support-bound", "Support localization bound");
  support->add_option("--moments", config.moments_path, "moment JSON file")->required();
  support->add_option("--generators", config.generators_text,
                      "semicolon-separated generator polynomials (default: the variables)");
  support->add_option("--budget", config.budget, "power budget")->required();
  support->callback(remember("support-bound"));

  CLI::App* fixture = app.add_subcommand("gen-fixture", "Reproducible test fixture bundle");
  fixture->add_option("--kind", config.kind,
                      "random-ball-atoms | uniform-interval | worked-examples")
      ->required();
  fixture->add_option("--seed", config.seed, "random seed")
      ->each([&config](const std::string&) { config.seed_given = true; });
  fixture->add_option("--vars", config.num_vars, "variable count (default 2)");
  fixture->add_option("--max-degree", config.max_degree, "truncation degree (default 10)");
  fixture->callback(remember("gen-fixture"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    const auto parsed = app.get_subcommands();
    return {0, parsed.empty() ? app.help() : parsed.front()->help()};
  } catch (const CLI::ParseError& e) {
    return {2, dump_json(json{{"error", {{"kind", "usage"}, {"message", e.what()}}}})};
  }

  try {
    return dispatch(command, config);
  } catch (const Error& e) {
    const json out = {{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
    return {2, dump_json(out)};
  }
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const RunResult result = run_cli(args);
  std::cout << result.output;
  return result.exit_code;
}

}  // namespace momentkit

#include "momentkit/fixtures.hpp"

#include <cmath>

#include "momentkit/json_io.hpp"
#include "momentkit/rng.hpp"
#include "momentkit/vnorm.hpp"

namespace momentkit {

using nlohmann::json;

std::string to_string(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::random_ball_atoms: return "random-ball-atoms";
    case FixtureKind::uniform_interval: return "uniform-interval";
    case FixtureKind::worked_examples: return "worked-examples";
  }
  return "?";
}

FixtureKind fixture_kind_from_string(const std::string& name) {
  if (name == "random-ball-atoms") return FixtureKind::random_ball_atoms;
  if (name == "uniform-interval") return FixtureKind::uniform_interval;
  if (name == "worked-examples") return FixtureKind::worked_examples;
  throw Error(ErrorKind::invalid_input, "unknown fixture kind \"" + name + "\"");
}

MomentSequence uniform_interval_moments(int max_degree) {
  MomentSequence::ValueMap values;
  for (int k = 0; k <= max_degree; ++k) {
    values.emplace(Exponent{k}, k % 2 == 0 ? 1.0 / (k + 1) : 0.0);
  }
  return MomentSequence(1, max_degree, std::move(values));
}

AtomicMeasure random_ball_measure(Rng& rng, int num_vars, int max_atoms) {
  const int count = rng.uniform_int(1, max_atoms);
  std::vector<Atom> atoms(count);
  // weights >= 0.05 summing to one
  std::vector<double> raw(count);
  double raw_sum = 0.0;
  for (double& w : raw) {
    w = rng.uniform(0.1, 1.0);
    raw_sum += w;
  }
  const double free_mass = 1.0 - 0.05 * count;
  for (int i = 0; i < count; ++i) {
    atoms[i].point = rng.in_unit_ball(num_vars);
    atoms[i].weight = 0.05 + free_mass * raw[i] / raw_sum;
  }
  return AtomicMeasure(num_vars, std::move(atoms));
}

namespace {

Fixture dirac_fixture(const std::string& name, const std::vector<double>& point, int max_degree) {
  const int s = static_cast<int>(point.size());
  AtomicMeasure mu(s, {Atom{point, 1.0}});
  Fixture fx{name, mu, moments_from_measure(mu, max_degree), json::object()};
  fx.expected["point"] = point;
  return fx;
}

}  // namespace

FixtureBundle generate_fixture(FixtureKind kind, std::uint64_t seed, int num_vars,
                               int max_degree) {
  if (num_vars < 1) throw Error(ErrorKind::invalid_input, "fixtures need at least one variable");
  if (max_degree < 2) throw Error(ErrorKind::invalid_input, "fixtures need max_degree >= 2");
  FixtureBundle bundle{kind, seed, {}};
  switch (kind) {
    case FixtureKind::random_ball_atoms: {
      Rng rng(seed);
      AtomicMeasure mu = random_ball_measure(rng, num_vars);
      Fixture fx{"random-ball-atoms", mu, moments_from_measure(mu, max_degree), json::object()};
      double max_norm_sq = 0.0;
      for (const Atom& a : mu.atoms()) {
        double n2 = 0.0;
        for (double x : a.point) n2 += x * x;
        max_norm_sq = std::max(max_norm_sq, n2);
      }
      fx.expected["max_squared_norm"] = max_norm_sq;
      json sup_norms = json::array();
      for (int i = 0; i < num_vars; ++i) {
        sup_norms.push_back(atom_max(mu, Polynomial::variable(num_vars, i)));
      }
      fx.expected["variable_sup_norms"] = sup_norms;
      bundle.fixtures.push_back(std::move(fx));
      break;
    }
    case FixtureKind::uniform_interval: {
      Fixture fx{"uniform-interval", std::nullopt, uniform_interval_moments(max_degree),
                 json::object()};
      // closed form: moment of x^k is 1/(k+1) at even k, 0 at odd k
      fx.expected["moment_x2"] = 1.0 / 3.0;
      fx.expected["interval_half_width"] = 1.0;
      bundle.fixtures.push_back(std::move(fx));
      break;
    }
    case FixtureKind::worked_examples: {
      {
        Fixture fx = dirac_fixture("point-mass-at-0.5", {0.5}, max_degree);
        fx.expected["vnorm_of_x"] = 0.5;
        fx.expected["eval_1_minus_x2"] = 0.75;
        bundle.fixtures.push_back(std::move(fx));
      }
      {
        AtomicMeasure mu(1, {Atom{{-1.0}, 0.5}, Atom{{1.0}, 0.5}});
        Fixture fx{"symmetric-pair", mu, moments_from_measure(mu, max_degree), json::object()};
        fx.expected["vnorm_of_x"] = 1.0;
        fx.expected["even_moments"] = 1.0;
        bundle.fixtures.push_back(std::move(fx));
      }
      {
        Fixture fx = dirac_fixture("point-mass-2d", {0.6, 0.8}, max_degree);
        fx.expected["squared_norm"] = 1.0;
        bundle.fixtures.push_back(std::move(fx));
      }
      {
        Fixture fx = dirac_fixture("outside-ball-2d", {2.0, 0.0}, max_degree);
        fx.expected["ball_generator_value"] = -3.0;  // 1 - 4 - 0 at the point
        bundle.fixtures.push_back(std::move(fx));
      }
      {
        // certificate target 1 + x^2 on the unit interval cone at degree 2:
        // (1-x)^2 / 2 + (1+x)^2 / 2 reproduces it exactly
        Fixture fx = dirac_fixture("certificate-target", {0.0}, max_degree);
        fx.expected["target"] = "1 + x1^2";
        fx.expected["region"] = "ball";
        fx.expected["degree"] = 2;
        bundle.fixtures.push_back(std::move(fx));
      }
      break;
    }
  }
  return bundle;
}

json fixture_bundle_to_json(const FixtureBundle& bundle) {
  json fixtures = json::array();
  for (const Fixture& fx : bundle.fixtures) {
    json item = {{"name", fx.name}, {"moments", moments_to_json(fx.moments)},
                 {"expected", fx.expected}};
    if (fx.measure.has_value()) item["measure"] = measure_to_json(*fx.measure);
    fixtures.push_back(std::move(item));
  }
  return {{"kind", to_string(bundle.kind)},
          {"seed", bundle.seed},
          {"fixtures", fixtures}};
}

}  // namespace momentkit

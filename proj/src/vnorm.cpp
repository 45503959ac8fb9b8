#include "momentkit/vnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace momentkit {

std::string to_string(VnormKind kind) {
  return kind == VnormKind::ratio ? "ratio" : "root";
}

namespace {

constexpr double kFloorScale = 1e-13;

// m[k] = L(a^(2k)) for k = 0..count, built by stepwise multiplication so the
// values match the 1D marginal path double-for-double.
std::vector<double> even_power_moments(const MomentSequence& L, const Polynomial& a, int count) {
  std::vector<double> m;
  m.reserve(count + 1);
  Polynomial power = Polynomial::constant(a.num_vars(), 1.0);
  m.push_back(eval_functional(L, power));
  for (int k = 1; k <= count; ++k) {
    power = power * a;
    power = power * a;
    m.push_back(eval_functional(L, power));
  }
  return m;
}

void require_even_moment_nonnegative(double value, int level, double floor) {
  if (value < -floor) {
    throw Error(ErrorKind::non_psd,
                "even power moment L(a^" + std::to_string(2 * level) + ") = " +
                    format_double(value) + " is negative; the data is not a moment sequence");
  }
}

// Strictly increasing consecutive ratios over the last five admissible levels
// and beyond 1e6: heuristic surfacing of unbounded growth.
bool unbounded_suspect_flag(const std::vector<double>& admissible_ratios) {
  const std::size_t n = admissible_ratios.size();
  if (n < 5) return false;
  for (std::size_t i = n - 4; i < n; ++i) {
    if (!(admissible_ratios[i] > admissible_ratios[i - 1])) return false;
  }
  return admissible_ratios.back() > 1e6;
}

}  // namespace

VnormEstimate vnorm_ratio(const MomentSequence& L, const Polynomial& a, int budget) {
  if (budget < 0) throw Error(ErrorKind::invalid_input, "negative budget");
  const int required = (2 * budget + 2) * a.degree();
  if (required > L.max_degree()) throw_degree_overflow(required, L.max_degree());

  const double floor = kFloorScale * L.max_abs_value();
  const std::vector<double> m = even_power_moments(L, a, budget + 1);

  VnormEstimate estimate;
  estimate.kind = VnormKind::ratio;
  estimate.budget = budget;
  estimate.denominator_floor = floor;
  estimate.level = 0;
  double best = 0.0;
  bool have_ratio = false;
  std::vector<double> admissible_ratios;
  for (int n = 0; n <= budget; ++n) {
    require_even_moment_nonnegative(m[n], n, floor);
    if (std::abs(m[n]) <= floor) {
      estimate.sequence.push_back(std::nullopt);
      continue;
    }
    double ratio = m[n + 1] / m[n];
    if (ratio < 0.0) {
      if (std::abs(m[n + 1]) <= floor) {
        ratio = 0.0;  // numerator is numerically zero
      } else {
        throw Error(ErrorKind::non_psd,
                    "negative ratio L(a^" + std::to_string(2 * n + 2) + ")/L(a^" +
                        std::to_string(2 * n) + ") = " + format_double(ratio) +
                        "; the data is not positive semidefinite along powers of a");
      }
    }
    admissible_ratios.push_back(ratio);
    estimate.sequence.push_back(std::sqrt(ratio));
    if (!have_ratio || ratio > best) {
      best = ratio;
      estimate.level = n;
      have_ratio = true;
    }
  }
  estimate.value = std::sqrt(std::max(best, 0.0));
  estimate.unbounded_suspect = unbounded_suspect_flag(admissible_ratios);
  return estimate;
}

VnormEstimate vnorm_root(const MomentSequence& L, const Polynomial& a, int budget) {
  if (budget < 1) throw Error(ErrorKind::invalid_input, "root estimate needs budget >= 1");
  const int required = 2 * budget * a.degree();
  if (required > L.max_degree()) throw_degree_overflow(required, L.max_degree());

  const double floor = kFloorScale * L.max_abs_value();
  const std::vector<double> m = even_power_moments(L, a, budget);

  VnormEstimate estimate;
  estimate.kind = VnormKind::root;
  estimate.budget = budget;
  estimate.denominator_floor = floor;
  estimate.level = 1;
  estimate.value = 0.0;
  std::vector<double> admissible_ratios;
  for (int n = 1; n <= budget; ++n) {
    require_even_moment_nonnegative(m[n], n, floor);
    const double v = m[n] <= 0.0 ? 0.0 : std::pow(m[n], 1.0 / (2.0 * n));
    estimate.sequence.push_back(v);
    if (v > estimate.value) {
      estimate.value = v;
      estimate.level = n;
    }
  }
  for (int n = 0; n < budget; ++n) {
    if (std::abs(m[n]) > floor) {
      const double ratio = m[n + 1] / m[n];
      if (ratio >= 0.0) admissible_ratios.push_back(ratio);
    }
  }
  estimate.unbounded_suspect = unbounded_suspect_flag(admissible_ratios);
  return estimate;
}

double atom_max(const AtomicMeasure& mu, const Polynomial& a) {
  if (mu.num_vars() != a.num_vars()) {
    throw Error(ErrorKind::dimension_mismatch, "measure and polynomial variable counts differ");
  }
  double best = 0.0;
  for (const Atom& atom : mu.atoms()) {
    best = std::max(best, std::abs(a.evaluate(atom.point)));
  }
  return best;
}

SeminormLawReport check_seminorm_laws(const MomentSequence& L,
                                      const std::vector<std::pair<Polynomial, Polynomial>>& pairs,
                                      int budget, double tol, const AtomicMeasure* ground_truth) {
  SeminormLawReport report;
  report.oracle_used = ground_truth != nullptr;
  if (!report.oracle_used) {
    report.caveat =
        "estimates are truncated lower bounds; an apparent law violation may "
        "reflect truncation of the right-hand side rather than a genuine failure";
  }
  const auto estimate = [&](const Polynomial& p) {
    return ground_truth ? atom_max(*ground_truth, p) : vnorm_ratio(L, p, budget).value;
  };
  report.all_ok = true;
  for (const auto& [a, b] : pairs) {
    SeminormLawEntry entry{a, b, 0, 0, 0, 0, 0, 0, false, false};
    entry.v_a = estimate(a);
    entry.v_b = estimate(b);
    entry.v_sum = estimate(a + b);
    entry.v_product = estimate(a * b);
    entry.additive_slack = entry.v_a + entry.v_b + tol - entry.v_sum;
    entry.multiplicative_slack = entry.v_a * entry.v_b + tol - entry.v_product;
    entry.additive_ok = entry.additive_slack >= 0.0;
    entry.multiplicative_ok = entry.multiplicative_slack >= 0.0;
    report.all_ok = report.all_ok && entry.additive_ok && entry.multiplicative_ok;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

double support_radius(const MomentSequence& L, const std::vector<Polynomial>& generators,
                      int budget) {
  if (generators.empty()) {
    throw Error(ErrorKind::invalid_input, "support bound needs at least one generator");
  }
  if (budget < 0) throw Error(ErrorKind::invalid_input, "negative budget");
  Polynomial h(generators.front().num_vars());
  for (const Polynomial& g : generators) h = h + g * g;
  const int required = (budget + 1) * h.degree();
  if (required > L.max_degree()) throw_degree_overflow(required, L.max_degree());

  const double floor = kFloorScale * L.max_abs_value();
  // consecutive ratios of L(h^n); h is a sum of squares, so every power is an
  // even moment of the generator tuple
  std::vector<double> f;
  f.reserve(budget + 2);
  Polynomial power = Polynomial::constant(h.num_vars(), 1.0);
  f.push_back(eval_functional(L, power));
  for (int n = 1; n <= budget + 1; ++n) {
    power = power * h;
    f.push_back(eval_functional(L, power));
  }
  double best = 0.0;
  for (int n = 0; n <= budget; ++n) {
    if (f[n] < -floor) {
      throw Error(ErrorKind::non_psd, "L(h^" + std::to_string(n) +
                                          ") is negative; the data is not a moment sequence");
    }
    if (std::abs(f[n]) <= floor) continue;
    const double ratio = f[n + 1] / f[n];
    if (ratio < 0.0) {
      if (std::abs(f[n + 1]) <= floor) continue;
      throw Error(ErrorKind::non_psd, "negative power ratio of the generator square sum");
    }
    best = std::max(best, ratio);
  }
  return best;
}

RatioRootAgreement check_ratio_root_agreement(const MomentSequence& L, const Polynomial& a,
                                              int budget, double tol) {
  if (budget < 1) throw Error(ErrorKind::invalid_input, "agreement check needs budget >= 1");
  const int required = 2 * budget * a.degree();
  if (required > L.max_degree()) throw_degree_overflow(required, L.max_degree());

  const double floor = kFloorScale * L.max_abs_value();
  const std::vector<double> m = even_power_moments(L, a, budget);

  RatioRootAgreement report;
  report.max_gap = -std::numeric_limits<double>::infinity();
  double ratio_sup = 0.0;
  bool have_ratio = false;
  for (int n = 1; n <= budget; ++n) {
    require_even_moment_nonnegative(m[n], n, floor);
    // ratios over levels < n use exactly the moments the level-n root uses
    const int prev = n - 1;
    if (std::abs(m[prev]) > floor) {
      const double ratio = m[n] / m[prev];
      if (ratio > ratio_sup || !have_ratio) ratio_sup = std::max(ratio, 0.0);
      have_ratio = true;
    }
    const double root = m[n] <= 0.0 ? 0.0 : std::pow(m[n], 1.0 / (2.0 * n));
    const double ratio_estimate = std::sqrt(std::max(ratio_sup, 0.0));
    report.root_by_level.push_back(root);
    report.ratio_sup_by_level.push_back(ratio_estimate);
    report.max_gap = std::max(report.max_gap, root - ratio_estimate);
  }
  report.ok = report.max_gap <= tol;
  return report;
}

}  // namespace momentkit

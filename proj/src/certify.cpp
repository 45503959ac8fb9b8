#include "momentkit/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "momentkit/moments.hpp"
#include "momentkit/rng.hpp"
#include "momentkit/simplex.hpp"

namespace momentkit {

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::ball: return "ball";
    case BasisKind::box: return "box";
    case BasisKind::binomial: return "binomial";
  }
  return "?";
}

BasisKind basis_kind_from_string(const std::string& name) {
  if (name == "ball") return BasisKind::ball;
  if (name == "box") return BasisKind::box;
  if (name == "binomial") return BasisKind::binomial;
  throw Error(ErrorKind::invalid_input, "unknown basis kind \"" + name + "\"");
}

namespace {

// Visits all power tuples (t_0, ..., t_{k-1}) with sum_i t_i * unit_degree_i
// equal to exactly `remaining`, larger leading entries first (the same block
// order as graded-lex monomials).
template <typename Visit>
void visit_fixed_weight_tuples(const std::vector<int>& unit_degrees, int index, int remaining,
                               std::vector<int>& scratch, const Visit& visit) {
  const int k = static_cast<int>(unit_degrees.size());
  if (index == k - 1) {
    if (remaining % unit_degrees[index] == 0) {
      scratch[index] = remaining / unit_degrees[index];
      visit(scratch);
      scratch[index] = 0;
    }
    return;
  }
  for (int t = remaining / unit_degrees[index]; t >= 0; --t) {
    scratch[index] = t;
    visit_fixed_weight_tuples(unit_degrees, index + 1, remaining - t * unit_degrees[index],
                              scratch, visit);
  }
  scratch[index] = 0;
}

[[noreturn]] void throw_term_guard() {
  throw Error(ErrorKind::overflow_guard,
              "generator enumeration exceeds " + std::to_string(kMaxBasisTerms) + " terms");
}

// Number of tuples with sum_j t_j * unit_degrees[j] <= cap, saturated just
// beyond the guard so enumeration can refuse before expanding anything.
std::size_t count_weighted_tuples(const std::vector<int>& unit_degrees, int cap) {
  if (cap < 0) return 0;
  std::vector<std::size_t> ways(cap + 1, 0);
  ways[0] = 1;
  for (int unit : unit_degrees) {
    for (int d = unit; d <= cap; ++d) {
      ways[d] = std::min(ways[d] + ways[d - unit], kMaxBasisTerms + 1);
    }
  }
  std::size_t total = 0;
  for (std::size_t w : ways) total = std::min(total + w, kMaxBasisTerms + 1);
  return total;
}

std::string power_suffix(int e) { return e == 1 ? "" : "^" + std::to_string(e); }

}  // namespace

GeneratorBasis enumerate_basis(BasisKind kind, int num_vars, int max_degree) {
  if (kind == BasisKind::binomial) {
    throw Error(ErrorKind::invalid_input,
                "binomial bases need a generator list; use enumerate_binomial_basis");
  }
  if (num_vars < 1) throw Error(ErrorKind::invalid_input, "basis needs at least one variable");
  if (max_degree < 0) throw Error(ErrorKind::invalid_input, "negative degree cap");

  GeneratorBasis basis;
  basis.kind = kind;
  basis.num_vars = num_vars;
  basis.max_degree = max_degree;

  const bool with_ball_factor = kind == BasisKind::ball;
  {
    const std::vector<int> units(2 * num_vars, 1);
    std::size_t expected = count_weighted_tuples(units, max_degree);
    if (with_ball_factor) expected += count_weighted_tuples(units, max_degree - 2);
    if (expected > kMaxBasisTerms) throw_term_guard();
  }
  Polynomial ball_poly = Polynomial::constant(num_vars, 1.0);
  for (int i = 0; i < num_vars; ++i) {
    ball_poly = ball_poly - Polynomial::variable(num_vars, i) * Polynomial::variable(num_vars, i);
  }
  const std::string ball_label = "(" + ball_poly.str() + ")";

  // tuple layout per degree block: (epsilon, m1, n1, ..., ms, ns) with
  // expanded degree 2 * epsilon + sum(mi + ni); the epsilon = 1 branch leads
  // within a block (larger leading entry first)
  const std::vector<int> box_units(2 * num_vars, 1);
  std::vector<int> scratch(2 * num_vars, 0);
  const auto emit = [&](int eps, const std::vector<int>& mn) {
    if (basis.terms.size() >= kMaxBasisTerms) throw_term_guard();
    Polynomial term = eps == 1 ? ball_poly : Polynomial::constant(num_vars, 1.0);
    std::string label = eps == 1 ? ball_label : "";
    for (int i = 0; i < num_vars; ++i) {
      const int m = mn[2 * i];
      const int n = mn[2 * i + 1];
      const std::string var = "x" + std::to_string(i + 1);
      if (m > 0) {
        term = term * (Polynomial::constant(num_vars, 1.0) - Polynomial::variable(num_vars, i)).pow(m);
        label += "(1-" + var + ")" + power_suffix(m);
      }
      if (n > 0) {
        term = term * (Polynomial::constant(num_vars, 1.0) + Polynomial::variable(num_vars, i)).pow(n);
        label += "(1+" + var + ")" + power_suffix(n);
      }
    }
    if (label.empty()) label = "1";
    basis.terms.push_back({std::move(label), std::move(term)});
  };

  for (int degree = 0; degree <= max_degree; ++degree) {
    const int eps_hi = with_ball_factor ? std::min(1, degree / 2) : 0;
    for (int eps = eps_hi; eps >= 0; --eps) {
      visit_fixed_weight_tuples(box_units, 0, degree - 2 * eps, scratch,
                                [&](const std::vector<int>& mn) { emit(eps, mn); });
    }
  }
  return basis;
}

GeneratorBasis enumerate_binomial_basis(const std::vector<BinomialGenerator>& generators,
                                        int num_vars, int max_degree) {
  if (generators.empty()) {
    throw Error(ErrorKind::invalid_input, "binomial basis needs at least one generator");
  }
  if (max_degree < 0) throw Error(ErrorKind::invalid_input, "negative degree cap");
  std::vector<int> unit_degrees;
  for (const BinomialGenerator& g : generators) {
    if (g.poly.num_vars() != num_vars) {
      throw Error(ErrorKind::dimension_mismatch, "generator variable count differs");
    }
    if (!(g.bound > 0.0)) throw Error(ErrorKind::invalid_input, "generator bound must be positive");
    const int d = std::max(g.poly.degree(), 1);
    unit_degrees.push_back(d);  // power of (T - a)
    unit_degrees.push_back(d);  // power of (T + a)
  }

  if (count_weighted_tuples(unit_degrees, max_degree) > kMaxBasisTerms) throw_term_guard();

  GeneratorBasis basis;
  basis.kind = BasisKind::binomial;
  basis.num_vars = num_vars;
  basis.max_degree = max_degree;

  std::vector<int> scratch(unit_degrees.size(), 0);
  const auto emit = [&](const std::vector<int>& tuple) {
    if (basis.terms.size() >= kMaxBasisTerms) throw_term_guard();
    Polynomial term = Polynomial::constant(num_vars, 1.0);
    std::string label;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const int p = tuple[2 * j];
      const int q = tuple[2 * j + 1];
      if (p == 0 && q == 0) continue;
      const BinomialGenerator& g = generators[j];
      term = term * binomial_product(g.bound, g.poly, p, q);
      const std::string bound_text = format_double(g.bound);
      const std::string poly_text = g.poly.str();
      if (p > 0) label += "(" + bound_text + "-(" + poly_text + "))" + power_suffix(p);
      if (q > 0) label += "(" + bound_text + "+(" + poly_text + "))" + power_suffix(q);
    }
    if (label.empty()) label = "1";
    basis.terms.push_back({std::move(label), std::move(term)});
  };
  for (int degree = 0; degree <= max_degree; ++degree) {
    visit_fixed_weight_tuples(unit_degrees, 0, degree, scratch, emit);
  }
  return basis;
}

CertificateSearch find_certificate(const Polynomial& target, const GeneratorBasis& basis,
                                   double tol) {
  if (target.num_vars() != basis.num_vars) {
    throw Error(ErrorKind::dimension_mismatch, "target variable count differs from basis");
  }
  if (target.degree() > basis.max_degree) {
    throw_degree_overflow(target.degree(), basis.max_degree);
  }

  const std::vector<Exponent> rows = monomial_basis(basis.num_vars, basis.max_degree);
  std::map<Exponent, int, GradedLexLess> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<int>(i));

  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(basis.terms.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, n);
  for (int j = 0; j < n; ++j) {
    for (const auto& [e, c] : basis.terms[j].poly.terms()) A(row_index.at(e), j) = c;
  }
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
  for (const auto& [e, c] : target.terms()) b(row_index.at(e)) = c;

  const double feas_tol = 1e-9 * std::max(1.0, b.cwiseAbs().maxCoeff());
  const FeasibilityResult lp = solve_equality_feasibility(A, b, feas_tol);

  CertificateSearch search;
  search.degree = basis.max_degree;
  search.iterations = lp.iterations;
  if (!lp.feasible) {
    search.message =
        "no certificate at degree <= " + std::to_string(basis.max_degree) +
        " (a larger degree cap may still succeed; this does not disprove positivity)";
    return search;
  }

  Certificate cert{basis.kind, basis.num_vars, basis.max_degree, {}, target, 0.0, false};
  for (int j = 0; j < n; ++j) {
    if (lp.solution[j] > 0.0) {
      cert.entries.push_back({basis.terms[j].label, lp.solution[j], basis.terms[j].poly});
    }
  }
  const VerifyResult check = verify_certificate(cert, tol);
  cert.residual = check.residual;
  cert.verified = check.verified;
  if (!cert.verified) {
    // soundness gate: a certificate that fails re-expansion is never returned
    throw Error(ErrorKind::numeric,
                "certificate re-expansion residual " + format_double(check.residual) +
                    " exceeds tolerance " + format_double(tol));
  }
  search.certificate = std::move(cert);
  return search;
}

VerifyResult verify_certificate(const Certificate& certificate, double tol) {
  Polynomial combination(certificate.num_vars);
  for (const CertificateEntry& entry : certificate.entries) {
    if (entry.value < 0.0) {
      return {std::numeric_limits<double>::infinity(), false};
    }
    combination = combination + entry.term * entry.value;
  }
  const Polynomial diff = combination - certificate.target;
  double residual = 0.0;
  for (const auto& [e, c] : diff.terms()) residual = std::max(residual, std::abs(c));
  return {residual, residual <= tol};
}

CounterexampleResult counterexample_search(const Polynomial& p, Region region, int samples,
                                           std::uint64_t seed) {
  const int s = p.num_vars();
  CounterexampleResult result;
  result.value = std::numeric_limits<double>::infinity();
  result.samples_used = 0;

  const auto consider = [&](const std::vector<double>& point) {
    const double v = p.evaluate(point);
    ++result.samples_used;
    if (v < result.value) {
      result.value = v;
      result.point = point;
    }
  };

  // deterministic anchors: origin and axis extremes (region boundary points)
  consider(std::vector<double>(s, 0.0));
  for (int i = 0; i < s; ++i) {
    std::vector<double> e(s, 0.0);
    e[i] = 1.0;
    consider(e);
    e[i] = -1.0;
    consider(e);
  }
  if (region == Region::box && s <= 16) {
    // all corners of the box
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
      std::vector<double> corner(s);
      for (int i = 0; i < s; ++i) corner[i] = (mask >> i) & 1 ? 1.0 : -1.0;
      consider(corner);
    }
  }

  Rng rng(seed);
  while (result.samples_used < samples) {
    // alternate interior and boundary draws
    if (result.samples_used % 2 == 0) {
      if (region == Region::ball) {
        consider(rng.in_unit_ball(s));
      } else {
        std::vector<double> pt(s);
        for (double& x : pt) x = rng.uniform(-1.0, 1.0);
        consider(pt);
      }
    } else {
      if (region == Region::ball) {
        consider(rng.on_unit_sphere(s));
      } else {
        std::vector<double> pt(s);
        for (double& x : pt) x = rng.uniform(-1.0, 1.0);
        pt[rng.uniform_int(0, s - 1)] = rng.uniform() < 0.5 ? -1.0 : 1.0;
        consider(pt);
      }
    }
  }
  result.found = result.value <= 0.0;
  return result;
}

}  // namespace momentkit

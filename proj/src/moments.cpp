#include "momentkit/moments.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "momentkit/certify.hpp"

namespace momentkit {

AtomicMeasure::AtomicMeasure(int num_vars, std::vector<Atom> atoms)
    : num_vars_(num_vars), atoms_(std::move(atoms)) {
  if (num_vars < 1) throw Error(ErrorKind::invalid_input, "measure needs at least one variable");
  double mass = 0.0;
  for (const Atom& a : atoms_) {
    if (static_cast<int>(a.point.size()) != num_vars) {
      throw Error(ErrorKind::dimension_mismatch, "atom point length does not match variable count");
    }
    if (!(a.weight > 0.0)) {
      throw Error(ErrorKind::invalid_input, "atom weights must be strictly positive");
    }
    mass += a.weight;
  }
  if (!atoms_.empty() && !(mass > 0.0)) {
    throw Error(ErrorKind::invalid_input, "measure must have positive total mass");
  }
}

double AtomicMeasure::total_mass() const {
  double mass = 0.0;
  for (const Atom& a : atoms_) mass += a.weight;
  return mass;
}

bool AtomicMeasure::is_normalized(double tol) const {
  return std::abs(total_mass() - 1.0) <= tol;
}

AtomicMeasure AtomicMeasure::normalized() const {
  const double mass = total_mass();
  if (!(mass > 0.0)) throw Error(ErrorKind::invalid_input, "cannot normalize a massless measure");
  std::vector<Atom> scaled = atoms_;
  for (Atom& a : scaled) a.weight /= mass;
  return AtomicMeasure(num_vars_, std::move(scaled));
}

MomentSequence::MomentSequence(int num_vars, int max_degree, ValueMap values)
    : num_vars_(num_vars), max_degree_(max_degree), values_(std::move(values)), max_abs_value_(0.0) {
  if (num_vars < 1) throw Error(ErrorKind::invalid_input, "moment data needs at least one variable");
  if (max_degree < 0) throw Error(ErrorKind::invalid_input, "negative truncation degree");
  for (const auto& [e, v] : values_) {
    if (static_cast<int>(e.size()) != num_vars) {
      throw Error(ErrorKind::dimension_mismatch, "moment exponent length does not match variable count");
    }
    if (total_degree(e) > max_degree) {
      throw Error(ErrorKind::invalid_input, "moment exponent exceeds the declared truncation degree");
    }
    max_abs_value_ = std::max(max_abs_value_, std::abs(v));
  }
  const std::size_t expected = monomial_basis(num_vars, max_degree).size();
  if (values_.size() != expected) {
    throw Error(ErrorKind::invalid_input,
                "incomplete truncation: expected " + std::to_string(expected) + " moments, got " +
                    std::to_string(values_.size()));
  }
  const double unit = values_.at(Exponent(num_vars, 0));
  if (std::abs(unit - 1.0) > 1e-12) {
    throw Error(ErrorKind::invalid_input,
                "moment data is not normalized: value at the zero exponent is " +
                    format_double(unit) + " (pass the normalize option to rescale)");
  }
}

double MomentSequence::value(const Exponent& e) const {
  if (static_cast<int>(e.size()) != num_vars_) {
    throw Error(ErrorKind::dimension_mismatch, "exponent length does not match variable count");
  }
  const int d = total_degree(e);
  if (d > max_degree_) throw_degree_overflow(d, max_degree_);
  return values_.at(e);
}

namespace {

// Emits all exponents of exact total degree `remaining` over the variables
// from `index` on, larger leading entries first (the graded-lex block order).
void enumerate_fixed_degree(int num_vars, int index, int remaining, Exponent& scratch,
                            std::vector<Exponent>& out) {
  if (index == num_vars - 1) {
    scratch[index] = remaining;
    out.push_back(scratch);
    scratch[index] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    scratch[index] = k;
    enumerate_fixed_degree(num_vars, index + 1, remaining - k, scratch, out);
  }
  scratch[index] = 0;
}

}  // namespace

std::vector<Exponent> monomial_basis(int num_vars, int max_degree) {
  std::vector<Exponent> out;
  Exponent scratch(num_vars, 0);
  for (int d = 0; d <= max_degree; ++d) {
    enumerate_fixed_degree(num_vars, 0, d, scratch, out);
  }
  return out;
}

MomentSequence moments_from_measure(const AtomicMeasure& mu, int max_degree, bool normalize) {
  AtomicMeasure measure = mu;
  if (!mu.is_normalized()) {
    if (!normalize) {
      throw Error(ErrorKind::invalid_input,
                  "measure has total mass " + format_double(mu.total_mass()) +
                      "; pass normalize to rescale to mass one");
    }
    measure = mu.normalized();
  }
  const int s = measure.num_vars();
  // per-atom tables point[i]^k for k <= max_degree
  std::vector<std::vector<std::vector<double>>> powers(measure.atoms().size());
  for (std::size_t a = 0; a < measure.atoms().size(); ++a) {
    powers[a].assign(s, std::vector<double>(max_degree + 1, 1.0));
    for (int i = 0; i < s; ++i) {
      for (int k = 1; k <= max_degree; ++k) {
        powers[a][i][k] = powers[a][i][k - 1] * measure.atoms()[a].point[i];
      }
    }
  }
  MomentSequence::ValueMap values;
  for (const Exponent& e : monomial_basis(s, max_degree)) {
    double v = 0.0;
    for (std::size_t a = 0; a < measure.atoms().size(); ++a) {
      double term = measure.atoms()[a].weight;
      for (int i = 0; i < s; ++i) term *= powers[a][i][e[i]];
      v += term;
    }
    values.emplace(e, v);
  }
  return MomentSequence(s, max_degree, std::move(values));
}

double eval_functional(const MomentSequence& L, const Polynomial& p) {
  if (p.num_vars() != L.num_vars()) {
    throw Error(ErrorKind::dimension_mismatch, "polynomial and moment data variable counts differ");
  }
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) sum += c * L.value(e);
  return sum;
}

MomentMatrix moment_matrix(const MomentSequence& L, int level, const Polynomial& shift) {
  if (level < 0) throw Error(ErrorKind::invalid_input, "negative matrix level");
  if (shift.num_vars() != L.num_vars()) {
    throw Error(ErrorKind::dimension_mismatch, "shift polynomial variable count differs");
  }
  const int required = 2 * level + shift.degree();
  if (required > L.max_degree()) throw_degree_overflow(required, L.max_degree());

  MomentMatrix M{monomial_basis(L.num_vars(), level), Eigen::MatrixXd(), shift};
  const int n = static_cast<int>(M.basis.size());
  M.entries.resize(n, n);
  Exponent e(L.num_vars());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = 0.0;
      for (const auto& [q_exp, q_coeff] : shift.terms()) {
        for (int k = 0; k < L.num_vars(); ++k) e[k] = M.basis[i][k] + M.basis[j][k] + q_exp[k];
        v += q_coeff * L.value(e);
      }
      M.entries(i, j) = v;
      M.entries(j, i) = v;
    }
  }
  return M;
}

MomentMatrix moment_matrix(const MomentSequence& L, int level) {
  return moment_matrix(L, level, Polynomial::constant(L.num_vars(), 1.0));
}

PsdReport is_psd(const MomentMatrix& M, double tol) {
  if (tol < 0) throw Error(ErrorKind::invalid_input, "negative tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M.entries);
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();
  PsdReport report;
  report.min_eigenvalue = eigenvalues(0);
  report.max_abs_eigenvalue =
      std::max(std::abs(eigenvalues(0)), std::abs(eigenvalues(eigenvalues.size() - 1)));
  report.psd = report.min_eigenvalue >= -tol * std::max(1.0, report.max_abs_eigenvalue);
  report.witness_value = 0.0;
  if (!report.psd) {
    Eigen::VectorXd v = solver.eigenvectors().col(0);
    // deterministic sign: first coordinate above noise made positive
    for (int i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > 1e-14) {
        if (v(i) < 0) v = -v;
        break;
      }
    }
    const int num_vars = M.basis.empty() ? 1 : static_cast<int>(M.basis.front().size());
    Polynomial witness(num_vars);
    for (int i = 0; i < v.size(); ++i) {
      if (v(i) != 0.0) witness.add_term(M.basis[i], v(i));
    }
    report.witness = std::move(witness);
    report.witness_value = v.dot(M.entries * v);
  }
  return report;
}

ConeCheckReport check_binomial_cone(const MomentSequence& L, const Polynomial& a, double bound,
                                    int budget, double tol) {
  if (!(bound > 0.0)) throw Error(ErrorKind::invalid_input, "cone bound must be positive");
  if (budget < 0) throw Error(ErrorKind::invalid_input, "negative budget");
  if (budget > L.max_degree()) throw_degree_overflow(budget, L.max_degree());
  // constants get degree 1 so the (p, q) grid stays finite
  const int step = std::max(a.degree(), 1);

  ConeCheckReport report;
  report.bound = bound;
  report.budget = budget;
  report.terms_checked = 0;
  const Polynomial minus = Polynomial::constant(a.num_vars(), bound) - a;
  const Polynomial plus = Polynomial::constant(a.num_vars(), bound) + a;
  const int max_total = budget / step;
  std::vector<Polynomial> minus_pow;
  std::vector<Polynomial> plus_pow;
  minus_pow.reserve(max_total + 1);
  plus_pow.reserve(max_total + 1);
  minus_pow.push_back(Polynomial::constant(a.num_vars(), 1.0));
  plus_pow.push_back(Polynomial::constant(a.num_vars(), 1.0));
  for (int k = 1; k <= max_total; ++k) {
    minus_pow.push_back(minus_pow.back() * minus);
    plus_pow.push_back(plus_pow.back() * plus);
  }
  for (int total = 0; total <= max_total; ++total) {
    for (int p = total; p >= 0; --p) {
      const int q = total - p;
      const double v = eval_functional(L, minus_pow[p] * plus_pow[q]);
      ++report.terms_checked;
      if (v < -tol) report.violations.push_back({p, q, v});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

BallCheckReport check_ball_criterion(const MomentSequence& L, int budget, double tol) {
  if (budget < 0) throw Error(ErrorKind::invalid_input, "negative budget");
  if (budget > L.max_degree()) throw_degree_overflow(budget, L.max_degree());
  const GeneratorBasis basis = enumerate_basis(BasisKind::ball, L.num_vars(), budget);
  BallCheckReport report;
  report.budget = budget;
  report.terms_checked = static_cast<int>(basis.terms.size());
  for (const GeneratorTerm& term : basis.terms) {
    const double v = eval_functional(L, term.poly);
    if (v < -tol) report.violations.push_back({term.label, v});
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace momentkit

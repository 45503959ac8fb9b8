#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "momentkit/polynomial.hpp"

namespace momentkit {

struct Atom {
  std::vector<double> point;
  double weight;
};

/// Finite weighted point set in s variables; the ground-truth measures used
/// for generating and checking truncated moment data.
class AtomicMeasure {
 public:
  AtomicMeasure(int num_vars, std::vector<Atom> atoms);

  int num_vars() const { return num_vars_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  double total_mass() const;
  bool is_normalized(double tol = 1e-12) const;
  /// Copy with weights rescaled to total mass one.
  AtomicMeasure normalized() const;

 private:
  int num_vars_;
  std::vector<Atom> atoms_;
};

/// Truncated moment data: one value per exponent of total degree <= max_degree
/// (complete truncation), normalized so the value at the zero exponent is 1.
class MomentSequence {
 public:
  using ValueMap = std::map<Exponent, double, GradedLexLess>;

  MomentSequence(int num_vars, int max_degree, ValueMap values);

  int num_vars() const { return num_vars_; }
  int max_degree() const { return max_degree_; }
  const ValueMap& values() const { return values_; }
  /// Largest absolute stored value; used for denominator floors.
  double max_abs_value() const { return max_abs_value_; }

  /// Throws degree_overflow when the exponent exceeds the truncation.
  double value(const Exponent& e) const;

 private:
  int num_vars_;
  int max_degree_;
  ValueMap values_;
  double max_abs_value_;
};

/// All exponents of total degree <= max_degree in graded-lex order.
std::vector<Exponent> monomial_basis(int num_vars, int max_degree);

/// Moments value(e) = sum over atoms of weight * point^e for |e| <= max_degree.
/// The measure must have total mass 1 within 1e-12 unless normalize is set.
MomentSequence moments_from_measure(const AtomicMeasure& mu, int max_degree,
                                    bool normalize = false);

/// Linear evaluation sum_e coeff(e) * value(e); requires deg(p) <= max_degree.
double eval_functional(const MomentSequence& L, const Polynomial& p);

/// Symmetric matrix entry(a, b) = L(shift * x^(a+b)) over the graded-lex
/// monomial basis of degree <= level. shift = 1 gives the plain moment
/// matrix, other shifts the localizing matrices.
struct MomentMatrix {
  std::vector<Exponent> basis;
  Eigen::MatrixXd entries;
  Polynomial shift;
};

MomentMatrix moment_matrix(const MomentSequence& L, int level, const Polynomial& shift);
MomentMatrix moment_matrix(const MomentSequence& L, int level);

/// Eigenvalue-based semidefiniteness verdict. psd is true when the smallest
/// eigenvalue is >= -tol * max(1, largest absolute eigenvalue); otherwise the
/// negativity witness v (as the polynomial sum_a v_a x^a, first nonzero
/// coordinate made positive) and its quadratic form value are reported.
struct PsdReport {
  bool psd;
  double min_eigenvalue;
  double max_abs_eigenvalue;
  std::optional<Polynomial> witness;
  double witness_value;
};

PsdReport is_psd(const MomentMatrix& M, double tol = 1e-9);

struct ConeViolation {
  int p;
  int q;
  double value;
};

struct ConeCheckReport {
  bool ok;
  double bound;
  int budget;
  int terms_checked;
  std::vector<ConeViolation> violations;
};

/// Checks L((bound - a)^p (bound + a)^q) >= -tol for all p, q with
/// (p + q) * deg(a) <= budget. Requires budget <= L.max_degree().
ConeCheckReport check_binomial_cone(const MomentSequence& L, const Polynomial& a,
                                    double bound, int budget, double tol = 1e-9);

struct BallViolation {
  std::string label;
  double value;
};

struct BallCheckReport {
  bool ok;
  int budget;
  int terms_checked;
  std::vector<BallViolation> violations;
};

/// Checks L(g) >= -tol for every unit-ball cone generator g of expanded
/// degree <= budget (enumerated by the certificate module's basis
/// enumerator). Requires budget <= L.max_degree().
BallCheckReport check_ball_criterion(const MomentSequence& L, int budget, double tol = 1e-9);

}  // namespace momentkit

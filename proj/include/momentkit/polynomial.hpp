#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "momentkit/errors.hpp"

namespace momentkit {

/// Multi-exponent of a monomial x1^e1 ... xs^es; one entry per variable.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Graded lexicographic order: lower total degree first; within equal degree
/// the exponent with the larger entry at the first differing variable comes
/// first, so for s = 2 the order starts 1, x1, x2, x1^2, x1 x2, x2^2, ...
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Shortest representation that parses back to the identical double.
std::string format_double(double value);

/// Sparse multivariate polynomial over the reals with double coefficients.
/// Canonical form: no stored coefficient is exactly zero, every exponent has
/// length num_vars, and the zero polynomial has an empty term map. Values are
/// immutable in spirit: all arithmetic returns new polynomials.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, double, GradedLexLess>;

  explicit Polynomial(int num_vars);
  static Polynomial constant(int num_vars, double value);
  static Polynomial variable(int num_vars, int index);  // index 0 is x1

  int num_vars() const { return num_vars_; }
  int degree() const;  // total degree; 0 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  double coefficient(const Exponent& e) const;
  /// Accumulates coeff onto the term at e, dropping the term if the sum is
  /// exactly zero.
  void add_term(const Exponent& e, double coeff);

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(double scalar) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& rhs) const;

  /// k-th power by repeated squaring; pow(0) is the constant 1.
  Polynomial pow(int k) const;

  double evaluate(std::span<const double> point) const;

  /// Text form "c * x1^a1 x2^a2 + ..." with unit coefficients and unit powers
  /// omitted, e.g. "1 - x1^2 - x2^2". parse(str()) reproduces the exact term
  /// map.
  std::string str() const;

  /// Parses the text form. num_vars == 0 infers the variable count from the
  /// largest index that occurs (at least 1).
  static Polynomial parse(const std::string& text, int num_vars = 0);

 private:
  int num_vars_;
  TermMap terms_;
};

inline Polynomial operator*(double scalar, const Polynomial& p) { return p * scalar; }

/// Expanded form of (bound - a)^p (bound + a)^q.
Polynomial binomial_product(double bound, const Polynomial& a, int p, int q);

}  // namespace momentkit

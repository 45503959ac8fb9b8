#pragma once

#include <optional>
#include <vector>

#include "momentkit/moments.hpp"
#include "momentkit/polynomial.hpp"

namespace momentkit {

/// Finite real sequence f(0..N) with f(0) = 1, the marginal moment data of a
/// single algebra element.
class Sequence1D {
 public:
  explicit Sequence1D(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  double operator[](int n) const { return values_[n]; }

 private:
  std::vector<double> values_;
};

/// f(n) = L(a^n) for n = 0..count. Requires count * deg(a) <= L.max_degree().
Sequence1D marginal(const MomentSequence& L, const Polynomial& a, int count);

struct HankelPsdReport {
  bool psd;
  int failing_order;       // smallest d with a non-PSD Hankel slice; -1 when psd
  double min_eigenvalue;   // over all examined slices
  std::optional<Polynomial> witness;  // 1-variable polynomial sum_j v_j x^j
};

/// Positive semidefiniteness of f on the naturals: every Hankel matrix
/// H_d = [f(j + k)], 0 <= j, k <= d with 2d <= N must be PSD under the same
/// relative eigenvalue rule as the multivariate check.
HankelPsdReport is_psd_on_n0(const Sequence1D& f, double tol = 1e-9);

/// Least interval half-width certified by the truncated data: the square root
/// of the largest even-index ratio f(2n+2)/f(2n) (a lower estimate of the
/// smallest b such that f is a moment sequence on [-b, b]). Requires
/// is_psd_on_n0 to pass.
double interval_bound(const Sequence1D& f);

struct RecoveredAtom {
  double location;
  double weight;
};

struct Recovered1D {
  std::vector<RecoveredAtom> atoms;  // sorted by location
  double residual;                   // max absolute moment mismatch
  int rank;                          // detected Hankel rank = atom count
  double vandermonde_condition;      // spectral condition of the weight system
  bool ill_conditioned;              // condition beyond 1e12
};

/// Classical finite atomic reconstruction: detect the numeric Hankel rank r
/// by the singular-value cutoff rank_tol * sigma_max, extract the degree-r
/// kernel polynomial of the shifted Hankel system, take its companion-matrix
/// eigenvalues as atom locations, and solve for weights in the least-squares
/// sense over all N + 1 moments. A Gauss-Newton polish on locations and
/// weights then reduces the moment residual (kept only when it improves).
/// Errors: ambiguous rank (no clear singular-value gap at the cutoff),
/// detected rank needing more moments than provided (N < 2r), and kernel
/// roots with imaginary parts above 1e-8.
Recovered1D recover_atoms(const Sequence1D& f, double rank_tol = 1e-8, bool refine = true);

struct RecoveryReport {
  double max_error;
  std::vector<double> per_index_error;
};

/// Recomputes every moment from the recovered atoms and reports the absolute
/// mismatch per index.
RecoveryReport verify_recovery(const Sequence1D& f, const Recovered1D& recovered);

}  // namespace momentkit

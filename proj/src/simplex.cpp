#include "momentkit/simplex.hpp"

#include <cmath>

#include "momentkit/errors.hpp"

namespace momentkit {

FeasibilityResult solve_equality_feasibility(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                             double feas_tol, int max_iterations) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (b.size() != m) throw Error(ErrorKind::invalid_input, "right-hand side length mismatch");
  // Bland's rule terminates but can wander degenerate bases for a long time
  // on large caps; the default keeps honest failure under seconds at desk
  // scale (callers can raise it)
  if (max_iterations <= 0) max_iterations = 20000 + 40 * (m + n);

  // Tableau [A | I | b] with rows flipped so b >= 0; artificial j starts
  // basic in row j. Row equilibration keeps pivot tolerances meaningful
  // without changing the solution set.
  Eigen::MatrixXd T(m, n + m + 1);
  T.setZero();
  for (int i = 0; i < m; ++i) {
    const double flip = b(i) < 0.0 ? -1.0 : 1.0;
    T.block(i, 0, 1, n) = flip * A.row(i);
    T(i, n + m) = flip * b(i);
    double scale = T.row(i).head(n).cwiseAbs().maxCoeff();
    scale = std::max(scale, std::abs(T(i, n + m)));
    if (scale > 0.0) {
      T.row(i).head(n) /= scale;
      T(i, n + m) /= scale;
    }
    T(i, n + i) = 1.0;
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs for the artificial-mass objective are recomputed from the
  // tableau every iteration: d_j = c_j - sum over artificial-basic rows of
  // T(i, j). Incremental updates drift after long degenerate runs and can
  // stall the solver; exact recomputation keeps Bland's rule sound.
  const double cost_tol = 1e-9;
  const double pivot_tol = 1e-11;
  Eigen::VectorXd reduced(n + m);
  int iterations = 0;
  while (iterations < max_iterations) {
    reduced.setZero();
    for (int j = 0; j < n + m; ++j) reduced(j) = j < n ? 0.0 : 1.0;
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= n) reduced -= T.row(i).head(n + m);
    }

    // Bland: smallest-index improving column
    int entering = -1;
    for (int j = 0; j < n + m; ++j) {
      if (reduced(j) < -cost_tol) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;  // optimal

    // ratio test; exact double comparisons so that degenerate ties (exact
    // zeros) fall through to the smallest basis index, Bland's anti-cycling
    // tie-break. Pivots far below the column scale are refused when a
    // usable alternative exists: a 1e-11 pivot inflates the tableau by ten
    // orders of magnitude in one elimination.
    const double column_scale = T.col(entering).head(m).cwiseAbs().maxCoeff();
    const double preferred_pivot = 1e-7 * column_scale;
    int leaving = -1;
    for (int pass = 0; pass < 2 && leaving < 0; ++pass) {
      const double acceptable = pass == 0 ? std::max(preferred_pivot, pivot_tol) : pivot_tol;
      double best_ratio = 0.0;
      for (int i = 0; i < m; ++i) {
        const double a = T(i, entering);
        if (a > acceptable) {
          const double ratio = T(i, n + m) / a;
          if (leaving < 0 || ratio < best_ratio ||
              (ratio == best_ratio && basis[i] < basis[leaving])) {
            leaving = i;
            best_ratio = ratio;
          }
        }
      }
    }
    if (leaving < 0) {
      // the phase-1 objective is bounded below by zero, so an unbounded ray
      // can only appear through numerical breakdown
      throw Error(ErrorKind::numeric, "phase-1 simplex lost boundedness");
    }

    const double pivot = T(leaving, entering);
    T.row(leaving) /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leaving) continue;
      const double factor = T(i, entering);
      if (factor != 0.0) {
        T.row(i) -= factor * T.row(leaving);
        T(i, entering) = 0.0;
      }
    }
    T(leaving, entering) = 1.0;
    basis[leaving] = entering;
    ++iterations;
  }
  if (iterations >= max_iterations) {
    throw Error(ErrorKind::numeric, "phase-1 simplex hit the iteration cap");
  }

  double artificial_mass = 0.0;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n) artificial_mass += std::abs(T(i, n + m));
  }

  FeasibilityResult result;
  result.iterations = iterations;
  result.objective = artificial_mass;
  result.feasible = artificial_mass <= feas_tol;
  if (!result.feasible) return result;

  // The tableau accumulates rounding over long degenerate runs, so the
  // support the simplex found is re-solved against the original system.
  // Columns whose refit value comes out negative are dropped and the rest
  // refit, until the support is clean.
  std::vector<int> support;
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) support.push_back(basis[i]);
  }
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  Eigen::VectorXd values;
  for (int pass = 0; pass <= m && !support.empty(); ++pass) {
    Eigen::MatrixXd columns(m, support.size());
    for (std::size_t k = 0; k < support.size(); ++k) columns.col(k) = A.col(support[k]);
    values = columns.colPivHouseholderQr().solve(b);
    int most_negative = -1;
    for (int k = 0; k < values.size(); ++k) {
      if (values(k) < -1e-11 * scale &&
          (most_negative < 0 || values(k) < values(most_negative))) {
        most_negative = k;
      }
    }
    if (most_negative < 0) break;
    support.erase(support.begin() + most_negative);
  }
  result.solution.assign(n, 0.0);
  Eigen::VectorXd residual_check = -b;
  for (std::size_t k = 0; k < support.size(); ++k) {
    const double v = std::max(0.0, values(k));
    result.solution[support[k]] = v;
    residual_check += v * A.col(support[k]);
  }
  if (residual_check.cwiseAbs().maxCoeff() > std::max(feas_tol, 1e-9 * scale)) {
    throw Error(ErrorKind::numeric,
                "simplex support refit left residual " +
                    std::to_string(residual_check.cwiseAbs().maxCoeff()));
  }
  return result;
}

}  // namespace momentkit

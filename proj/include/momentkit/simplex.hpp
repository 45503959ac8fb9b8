#pragma once

#include <Eigen/Dense>
#include <vector>

namespace momentkit {

struct FeasibilityResult {
  bool feasible;
  std::vector<double> solution;  // x >= 0 with A x = b (empty when infeasible)
  double objective;              // phase-1 artificial mass at termination
  int iterations;
};

/// Phase-1 simplex for the system A x = b, x >= 0: minimizes the sum of
/// artificial variables with Bland's rule (lowest-index entering column,
/// lowest-index leaving row on ratio ties), which precludes cycling. The
/// tableau is dense and single-threaded. feas_tol is the absolute threshold
/// on the optimal artificial mass below which the system counts as feasible.
/// max_iterations == 0 picks a generous cap from the problem size.
FeasibilityResult solve_equality_feasibility(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                             double feas_tol = 1e-9, int max_iterations = 0);

}  // namespace momentkit

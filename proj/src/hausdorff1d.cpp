#include "momentkit/hausdorff1d.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace momentkit {

Sequence1D::Sequence1D(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 3) {
    throw Error(ErrorKind::invalid_input, "sequence needs at least three entries f(0..2)");
  }
  if (std::abs(values_[0] - 1.0) > 1e-12) {
    throw Error(ErrorKind::invalid_input,
                "sequence is not normalized: f(0) = " + format_double(values_[0]));
  }
}

Sequence1D marginal(const MomentSequence& L, const Polynomial& a, int count) {
  if (count < 2) throw Error(ErrorKind::invalid_input, "marginal needs at least index 2");
  const int required = count * a.degree();
  if (required > L.max_degree()) throw_degree_overflow(required, L.max_degree());
  std::vector<double> f;
  f.reserve(count + 1);
  Polynomial power = Polynomial::constant(a.num_vars(), 1.0);
  f.push_back(eval_functional(L, power));
  for (int n = 1; n <= count; ++n) {
    power = power * a;
    f.push_back(eval_functional(L, power));
  }
  return Sequence1D(std::move(f));
}

HankelPsdReport is_psd_on_n0(const Sequence1D& f, double tol) {
  const int n_max = f.max_index();
  HankelPsdReport report;
  report.psd = true;
  report.failing_order = -1;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (int d = 0; 2 * d <= n_max; ++d) {
    Eigen::MatrixXd H(d + 1, d + 1);
    for (int j = 0; j <= d; ++j) {
      for (int k = 0; k <= d; ++k) H(j, k) = f[j + k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
    const double min_eig = solver.eigenvalues()(0);
    const double max_abs = std::max(std::abs(solver.eigenvalues()(0)),
                                    std::abs(solver.eigenvalues()(d)));
    report.min_eigenvalue = std::min(report.min_eigenvalue, min_eig);
    if (min_eig < -tol * std::max(1.0, max_abs)) {
      report.psd = false;
      report.failing_order = d;
      Eigen::VectorXd v = solver.eigenvectors().col(0);
      for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-14) {
          if (v(i) < 0) v = -v;
          break;
        }
      }
      Polynomial witness(1);
      for (int i = 0; i < v.size(); ++i) {
        if (v(i) != 0.0) witness.add_term(Exponent{i}, v(i));
      }
      report.witness = std::move(witness);
      return report;
    }
  }
  return report;
}

double interval_bound(const Sequence1D& f) {
  const HankelPsdReport psd = is_psd_on_n0(f);
  if (!psd.psd) {
    throw Error(ErrorKind::non_psd,
                "sequence fails the Hankel positivity test at order " +
                    std::to_string(psd.failing_order));
  }
  double max_abs = 0.0;
  for (double v : f.values()) max_abs = std::max(max_abs, std::abs(v));
  const double floor = 1e-13 * max_abs;
  double best = 0.0;
  for (int n = 0; 2 * n + 2 <= f.max_index(); ++n) {
    if (std::abs(f[2 * n]) <= floor) continue;
    const double ratio = f[2 * n + 2] / f[2 * n];
    best = std::max(best, ratio);
  }
  return std::sqrt(std::max(best, 0.0));
}

namespace {

Eigen::VectorXd moments_of_atoms(const std::vector<RecoveredAtom>& atoms, int count) {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(count + 1);
  for (const RecoveredAtom& atom : atoms) {
    double power = atom.weight;
    for (int n = 0; n <= count; ++n) {
      m(n) += power;
      power *= atom.location;
    }
  }
  return m;
}

// One Gauss-Newton pass on (locations, weights) minimizing the 2-norm moment
// residual; returns whether the max-norm residual improved.
bool refine_atoms(std::vector<RecoveredAtom>& atoms, const Eigen::VectorXd& f) {
  const int n_max = static_cast<int>(f.size()) - 1;
  const int r = static_cast<int>(atoms.size());
  auto max_residual = [&](const std::vector<RecoveredAtom>& a) {
    return (moments_of_atoms(a, n_max) - f).cwiseAbs().maxCoeff();
  };
  double best = max_residual(atoms);
  std::vector<RecoveredAtom> current = atoms;
  for (int iteration = 0; iteration < 12; ++iteration) {
    Eigen::VectorXd g = moments_of_atoms(current, n_max) - f;
    Eigen::MatrixXd J(n_max + 1, 2 * r);
    for (int i = 0; i < r; ++i) {
      double power = 1.0;        // t^n
      double derivative = 0.0;   // n * t^(n-1)
      for (int n = 0; n <= n_max; ++n) {
        J(n, i) = current[i].weight * derivative;  // d/dt
        J(n, r + i) = power;                       // d/dw
        derivative = derivative * current[i].location + power;
        power *= current[i].location;
      }
    }
    const Eigen::VectorXd step = J.colPivHouseholderQr().solve(-g);
    if (!step.allFinite()) break;
    std::vector<RecoveredAtom> candidate = current;
    double scale = 1.0;
    bool improved = false;
    for (int backtrack = 0; backtrack < 4 && !improved; ++backtrack) {
      for (int i = 0; i < r; ++i) {
        candidate[i].location = current[i].location + scale * step(i);
        candidate[i].weight = current[i].weight + scale * step(r + i);
      }
      const double residual = max_residual(candidate);
      if (residual < best) {
        best = residual;
        current = candidate;
        improved = true;
      }
      scale *= 0.5;
    }
    if (!improved) break;
  }
  bool any_change = best < max_residual(atoms);
  if (any_change) atoms = current;
  return any_change;
}

}  // namespace

Recovered1D recover_atoms(const Sequence1D& f, double rank_tol, bool refine) {
  if (!(rank_tol > 0.0)) throw Error(ErrorKind::invalid_input, "rank tolerance must be positive");
  const int n_max = f.max_index();
  const int d = n_max / 2;

  // numeric rank of the square Hankel slice
  Eigen::MatrixXd H(d + 1, d + 1);
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k <= d; ++k) H(j, k) = f[j + k];
  }
  Eigen::BDCSVD<Eigen::MatrixXd> hankel_svd(H);
  const Eigen::VectorXd& sigma = hankel_svd.singularValues();
  const double cutoff = rank_tol * sigma(0);
  int rank = 0;
  while (rank <= d && sigma(rank) >= cutoff) ++rank;
  if (rank == 0) throw Error(ErrorKind::numeric, "degenerate Hankel matrix");
  if (rank <= d) {
    const double kept = sigma(rank - 1);
    const double dropped = sigma(rank);
    if (dropped > 0.0 && kept / dropped < 10.0) {
      throw Error(ErrorKind::numeric,
                  "rank detection ambiguous: singular values " + format_double(kept) + " and " +
                      format_double(dropped) + " straddle the cutoff " + format_double(cutoff) +
                      " without a clear gap");
    }
  }
  if (n_max < 2 * rank) {
    throw_degree_overflow(2 * rank, n_max);
  }

  // kernel polynomial of the shifted Hankel system: sum_k c_k f(m + k) = 0
  const int rows = n_max - rank + 1;
  Eigen::MatrixXd A(rows, rank + 1);
  for (int m = 0; m < rows; ++m) {
    for (int k = 0; k <= rank; ++k) A(m, k) = f[m + k];
  }
  Eigen::BDCSVD<Eigen::MatrixXd> kernel_svd(A, Eigen::ComputeFullV);
  Eigen::VectorXd c = kernel_svd.matrixV().col(rank);
  if (std::abs(c(rank)) < 1e-8 * c.norm()) {
    throw Error(ErrorKind::numeric, "kernel polynomial is not monic-normalizable");
  }
  c /= c(rank);

  // companion matrix roots
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) companion(i, rank - 1) = -c(i);
  for (int i = 1; i < rank; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> roots(companion);
  std::vector<double> locations;
  locations.reserve(rank);
  for (int i = 0; i < rank; ++i) {
    const std::complex<double> z = roots.eigenvalues()(i);
    if (std::abs(z.imag()) > 1e-8) {
      throw Error(ErrorKind::numeric,
                  "kernel polynomial has a genuinely complex root " + format_double(z.real()) +
                      " + " + format_double(z.imag()) + "i");
    }
    locations.push_back(z.real());
  }
  std::sort(locations.begin(), locations.end());

  // weights: least squares over all moments
  Eigen::MatrixXd V(n_max + 1, rank);
  for (int i = 0; i < rank; ++i) {
    double power = 1.0;
    for (int n = 0; n <= n_max; ++n) {
      V(n, i) = power;
      power *= locations[i];
    }
  }
  Eigen::VectorXd fvec(n_max + 1);
  for (int n = 0; n <= n_max; ++n) fvec(n) = f[n];
  Eigen::BDCSVD<Eigen::MatrixXd> weight_svd(V, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd weights = weight_svd.solve(fvec);
  const double sigma_min = weight_svd.singularValues()(rank - 1);
  const double condition =
      sigma_min > 0.0 ? weight_svd.singularValues()(0) / sigma_min
                      : std::numeric_limits<double>::infinity();

  Recovered1D result;
  result.rank = rank;
  result.vandermonde_condition = condition;
  result.ill_conditioned = !(condition < 1e12);
  for (int i = 0; i < rank; ++i) result.atoms.push_back({locations[i], weights(i)});

  if (refine) refine_atoms(result.atoms, fvec);
  std::sort(result.atoms.begin(), result.atoms.end(),
            [](const RecoveredAtom& a, const RecoveredAtom& b) { return a.location < b.location; });

  for (const RecoveredAtom& atom : result.atoms) {
    if (!(atom.weight > 0.0)) {
      throw Error(ErrorKind::numeric,
                  "recovered weight " + format_double(atom.weight) + " at location " +
                      format_double(atom.location) + " is not positive");
    }
  }
  result.residual = (moments_of_atoms(result.atoms, n_max) - fvec).cwiseAbs().maxCoeff();
  return result;
}

RecoveryReport verify_recovery(const Sequence1D& f, const Recovered1D& recovered) {
  const int n_max = f.max_index();
  const Eigen::VectorXd m = moments_of_atoms(recovered.atoms, n_max);
  RecoveryReport report;
  report.max_error = 0.0;
  report.per_index_error.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double err = std::abs(m(n) - f[n]);
    report.per_index_error.push_back(err);
    report.max_error = std::max(report.max_error, err);
  }
  return report;
}

}  // namespace momentkit

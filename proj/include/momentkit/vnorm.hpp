#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentkit/moments.hpp"
#include "momentkit/polynomial.hpp"

namespace momentkit {

enum class VnormKind { ratio, root };

std::string to_string(VnormKind kind);

/// Truncated lower-bound estimate of the growth seminorm of a polynomial
/// under a moment functional. The ratio form takes the square root of the
/// largest consecutive even-power ratio L(a^(2n+2)) / L(a^(2n)); the root form
/// takes the largest L(a^(2n))^(1/(2n)). Both are lower bounds of the true
/// value at every budget; the report never claims more than "bounded up to
/// the examined budget".
struct VnormEstimate {
  double value;
  VnormKind kind;
  int level;   // level at which the reported maximum was attained
  int budget;  // largest level examined
  double denominator_floor;
  /// Heuristic flag: consecutive ratios strictly increasing over the last
  /// five admissible levels and beyond 1e6, suggesting unbounded growth.
  bool unbounded_suspect;
  /// Per-level estimates; ratio levels are 0..budget, root levels 1..budget.
  /// nullopt marks levels skipped because the denominator fell below the
  /// floor.
  std::vector<std::optional<double>> sequence;
};

/// Ratio-form estimate. Levels n with |L(a^(2n))| below the denominator floor
/// (1e-13 times the largest stored moment) are skipped. Requires
/// (2*budget + 2) * deg(a) <= L.max_degree(). Throws non_psd when an even
/// power moment or a ratio is negative beyond the floor.
VnormEstimate vnorm_ratio(const MomentSequence& L, const Polynomial& a, int budget);

/// Root-form estimate over levels 1..budget. Requires
/// 2 * budget * deg(a) <= L.max_degree().
VnormEstimate vnorm_root(const MomentSequence& L, const Polynomial& a, int budget);

/// Independent ground-truth oracle on atomic measures: the maximum of
/// |a(point)| over the atoms. Computed by direct evaluation, never through
/// moments.
double atom_max(const AtomicMeasure& mu, const Polynomial& a);

struct SeminormLawEntry {
  Polynomial a;
  Polynomial b;
  double v_a;
  double v_b;
  double v_sum;      // estimate for a + b
  double v_product;  // estimate for a * b
  double additive_slack;        // v_a + v_b + tol - v_sum
  double multiplicative_slack;  // v_a * v_b + tol - v_product
  bool additive_ok;
  bool multiplicative_ok;
};

struct SeminormLawReport {
  std::vector<SeminormLawEntry> entries;
  bool all_ok;
  bool oracle_used;
  std::string caveat;  // set when truncated estimates are used instead of the oracle
};

/// Checks v(a + b) <= v(a) + v(b) + tol and v(a b) <= v(a) v(b) + tol for
/// each pair. When ground_truth is given, v is the atom-max oracle (the laws
/// must hold); otherwise v is the truncated ratio estimate and the report
/// carries a one-sided caveat, since lower bounds on both sides cannot
/// certify the inequality.
SeminormLawReport check_seminorm_laws(const MomentSequence& L,
                                      const std::vector<std::pair<Polynomial, Polynomial>>& pairs,
                                      int budget, double tol,
                                      const AtomicMeasure* ground_truth = nullptr);

/// Truncated support-localization bound from the generators g_1, ..., g_k:
/// the largest consecutive ratio L(h^(n+1)) / L(h^n) over n <= budget for
/// h = g_1^2 + ... + g_k^2. The returned value bounds the squared radius:
/// the support region is { sum_i g_i(x)^2 <= value }, and the value is a
/// lower estimate that grows toward the true squared radius with the budget.
/// Requires (budget + 1) * deg(h) <= L.max_degree().
double support_radius(const MomentSequence& L, const std::vector<Polynomial>& generators,
                      int budget);

struct RatioRootAgreement {
  /// root_by_level[n-1] = L(a^(2n))^(1/(2n)) for n = 1..budget.
  std::vector<double> root_by_level;
  /// ratio_sup_by_level[n-1] = sqrt(max ratio over admissible levels < n),
  /// the ratio-form estimate at matched truncation (both use moments of
  /// degree 2n*deg(a)).
  std::vector<double> ratio_sup_by_level;
  double max_gap;  // max over levels of root - ratio_sup; <= 0 for moment data
  bool ok;
};

/// For genuine moment data the root form never exceeds the ratio form at
/// matched truncation (the even moments telescope into products of
/// consecutive ratios); this checks that with slack tol and records both
/// level sequences. Requires 2 * budget * deg(a) <= L.max_degree().
RatioRootAgreement check_ratio_root_agreement(const MomentSequence& L, const Polynomial& a,
                                              int budget, double tol = 1e-9);

}  // namespace momentkit

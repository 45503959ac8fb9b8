#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "momentkit/polynomial.hpp"

namespace momentkit {

enum class BasisKind { ball, box, binomial };

std::string to_string(BasisKind kind);
BasisKind basis_kind_from_string(const std::string& name);

struct GeneratorTerm {
  std::string label;
  Polynomial poly;  // expanded form
};

/// One factor family for the binomial cone: powers of (bound - poly) and
/// (bound + poly).
struct BinomialGenerator {
  Polynomial poly;
  double bound;
};

/// Enumerated cone generator basis up to an expanded-degree cap.
///   ball:     (1 - x1^2 - ... - xs^2)^e * prod_i (1 - xi)^mi (1 + xi)^ni, e in {0, 1}
///   box:      prod_i (1 - xi)^mi (1 + xi)^ni
///   binomial: prod_j (Tj - aj)^pj (Tj + aj)^qj over a given generator list
/// Terms are ordered by expanded degree, then lexicographically on the power
/// tuple with larger leading entries first; labels are unique. Algebraically
/// equal terms with distinct power tuples (such as (1-x1)(1+x1) and the
/// ball factor at s = 1) are both kept.
struct GeneratorBasis {
  BasisKind kind;
  int num_vars;
  int max_degree;
  std::vector<GeneratorTerm> terms;
};

/// Enumeration aborts with an overflow_guard error beyond this many terms.
inline constexpr std::size_t kMaxBasisTerms = 1000000;

GeneratorBasis enumerate_basis(BasisKind kind, int num_vars, int max_degree);
GeneratorBasis enumerate_binomial_basis(const std::vector<BinomialGenerator>& generators,
                                        int num_vars, int max_degree);

struct CertificateEntry {
  std::string label;
  double value;     // nonnegative coefficient
  Polynomial term;  // expanded generator, embedded so the certificate is self-contained
};

/// Nonnegative combination of cone generators equal to the target polynomial.
struct Certificate {
  BasisKind kind;
  int num_vars;
  int degree;  // basis degree cap the certificate was found at
  std::vector<CertificateEntry> entries;
  Polynomial target;
  double residual;  // max absolute coefficient mismatch of the re-expansion
  bool verified;
};

struct CertificateSearch {
  std::optional<Certificate> certificate;
  int degree;           // degree cap of the (last) search
  std::string message;  // explanation for the infeasible case
  int iterations;
};

/// Searches for coefficients c_t >= 0 with sum_t c_t * term_t = target,
/// coefficient-wise, via phase-1 simplex. A returned certificate has been
/// re-expanded and verified to residual <= tol. Infeasibility at this degree
/// cap does not disprove positivity of the target; the message says so.
CertificateSearch find_certificate(const Polynomial& target, const GeneratorBasis& basis,
                                   double tol = 1e-9);

struct VerifyResult {
  double residual;
  bool verified;
};

/// Re-expands the combination with exact polynomial arithmetic and compares
/// against the target coefficient-wise (absolute tolerance per coefficient).
VerifyResult verify_certificate(const Certificate& certificate, double tol = 1e-9);

enum class Region { ball, box };

/// Result of sampling for points where the target is not strictly positive.
/// point/value always hold the best (minimizing) sample; found is true when
/// that value is <= 0.
struct CounterexampleResult {
  bool found;
  std::vector<double> point;
  double value;
  int samples_used;
};

/// Scans deterministic anchor points (origin, axis extremes) plus seeded
/// random interior and boundary samples of the region.
CounterexampleResult counterexample_search(const Polynomial& p, Region region, int samples,
                                           std::uint64_t seed = 0);

}  // namespace momentkit

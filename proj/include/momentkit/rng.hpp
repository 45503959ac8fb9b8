#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace momentkit {

/// Seeded random stream with explicit, platform-independent mappings to
/// doubles (std::uniform_real_distribution is implementation-defined, which
/// would break byte-identical fixtures across toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(gen_() % span);
  }

  /// Standard normal via Box-Muller (uses two uniforms per call).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  std::vector<double> on_unit_sphere(int dim) {
    std::vector<double> v(dim);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int i = 0; i < dim; ++i) {
        v[i] = normal();
        norm2 += v[i] * v[i];
      }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;
    return v;
  }

  std::vector<double> in_unit_ball(int dim) {
    std::vector<double> v = on_unit_sphere(dim);
    const double r = std::pow(uniform(), 1.0 / dim);
    for (double& x : v) x *= r;
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace momentkit

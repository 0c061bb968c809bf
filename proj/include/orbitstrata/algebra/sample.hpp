#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <variant>

#include "orbitstrata/algebra/lie.hpp"

namespace orbitstrata {

using Rng = std::mt19937_64;

enum class SampleKind { su2, su2_algebra, sl2c };

/// Haar-uniform SU(2) via a uniformly distributed unit quaternion.
inline SU2Element sample_su2(Rng& rng) {
  std::normal_distribution<double> normal;
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& v : q) {
      v = normal(rng);
      n2 += v * v;
    }
  } while (n2 < 1e-24);
  const double n = std::sqrt(n2);
  for (double& v : q) v /= n;
  return SU2Element::unchecked(MatrixC2(Complex(q[0], q[3]), Complex(q[2], q[1]), Complex(-q[2], q[1]),
                                        Complex(q[0], -q[3])));
}

/// Uniform in the ball |A| <= bound.
inline Su2AlgebraElement sample_su2_algebra(Rng& rng, double bound) {
  if (!(bound > 0)) throw InvalidParams("bound must be positive");
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Vector3 dir;
  do {
    dir = Vector3(normal(rng), normal(rng), normal(rng));
  } while (dir.norm() < 1e-12);
  const double radius = bound * std::cbrt(uniform(rng));
  return Su2AlgebraElement::from_coords(dir.normalized() * radius);
}

/// a exp(iA) with a Haar-random and |A| chosen so every entry has modulus
/// at most `bound` (|entries| <= exp(|A|/2)).
inline SL2CElement<Complex> sample_sl2c(Rng& rng, double bound) {
  if (!(bound > 0)) throw InvalidParams("bound must be positive");
  const SU2Element a = sample_su2(rng);
  const double norm_cap = 2.0 * std::log(bound);
  if (norm_cap <= 0.0) return SL2CElement<Complex>::unchecked(a.matrix());
  return polar_compose(a, sample_su2_algebra(rng, norm_cap));
}

/// Small random element of Q(i): numerators in [-range, range], denominators in [1, den_max].
inline GaussianRational sample_gaussian_rational(Rng& rng, int range = 5, int den_max = 4) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, den_max);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

inline GaussianRational sample_nonzero_gaussian_rational(Rng& rng, int range = 5, int den_max = 4) {
  for (;;) {
    auto z = sample_gaussian_rational(rng, range, den_max);
    if (!z.is_zero()) return z;
  }
}

/// Exact unimodular matrix as a product upper(x) * lower(y) * diag(d, 1/d).
inline SL2CElement<GaussianRational> sample_exact_sl2c(Rng& rng) {
  using Q = GaussianRational;
  const Q x = sample_gaussian_rational(rng, 3, 3);
  const Q y = sample_gaussian_rational(rng, 3, 3);
  const Q d = sample_nonzero_gaussian_rational(rng, 3, 2);
  const MatrixQ2 up(1, x, 0, 1);
  const MatrixQ2 lo(1, 0, y, 1);
  return SL2CElement<Q>::unchecked(up * lo * MatrixQ2::diag(d, Q(1) / d));
}

}  // namespace orbitstrata

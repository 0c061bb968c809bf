#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include "orbitstrata/algebra/scalar.hpp"

namespace orbitstrata {

/// 2x2 matrix over either scalar backend. Value type; all operations pure.
template <Scalar S>
class Matrix2 {
 public:
  using scalar_type = S;

  Matrix2() : e_{{{S(0), S(0)}, {S(0), S(0)}}} {}
  Matrix2(S a, S b, S c, S d) : e_{{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}} {}

  static Matrix2 identity() { return {S(1), S(0), S(0), S(1)}; }
  static Matrix2 zero() { return {}; }
  static Matrix2 diag(S a, S d) { return {std::move(a), S(0), S(0), std::move(d)}; }
  static Matrix2 scalar(const S& s) { return diag(s, s); }

  const S& operator()(int r, int c) const { return e_[r][c]; }
  S& operator()(int r, int c) { return e_[r][c]; }

  S trace() const { return e_[0][0] + e_[1][1]; }
  S det() const { return e_[0][0] * e_[1][1] - e_[0][1] * e_[1][0]; }

  Matrix2 adjugate() const { return {e_[1][1], -e_[0][1], -e_[1][0], e_[0][0]}; }

  /// Inverse by adjugate; throws SingularMatrix when det = 0 (exact) or
  /// |det| is below the denormal-safe floor (float).
  Matrix2 inverse() const {
    const S d = det();
    if constexpr (is_exact_v<S>) {
      if (d == S(0)) throw SingularMatrix("inverse of a matrix with det = 0");
    } else {
      if (std::abs(d) == 0.0 || !std::isfinite(std::abs(d)))
        throw SingularMatrix("inverse of a matrix with det = 0");
    }
    return adjugate() * (S(1) / d);
  }

  /// Conjugate transpose.
  Matrix2 dagger() const {
    using T = ScalarTraits<S>;
    return {T::conj(e_[0][0]), T::conj(e_[1][0]), T::conj(e_[0][1]), T::conj(e_[1][1])};
  }

  bool is_upper_triangular(double tol = 0.0) const { return is_zero(e_[1][0], tol); }
  bool is_lower_triangular(double tol = 0.0) const { return is_zero(e_[0][1], tol); }

  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
    return {x.e_[0][0] + y.e_[0][0], x.e_[0][1] + y.e_[0][1], x.e_[1][0] + y.e_[1][0], x.e_[1][1] + y.e_[1][1]};
  }
  friend Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
    return {x.e_[0][0] - y.e_[0][0], x.e_[0][1] - y.e_[0][1], x.e_[1][0] - y.e_[1][0], x.e_[1][1] - y.e_[1][1]};
  }
  friend Matrix2 operator-(const Matrix2& x) { return {-x.e_[0][0], -x.e_[0][1], -x.e_[1][0], -x.e_[1][1]}; }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.e_[0][0] * y.e_[0][0] + x.e_[0][1] * y.e_[1][0], x.e_[0][0] * y.e_[0][1] + x.e_[0][1] * y.e_[1][1],
            x.e_[1][0] * y.e_[0][0] + x.e_[1][1] * y.e_[1][0], x.e_[1][0] * y.e_[0][1] + x.e_[1][1] * y.e_[1][1]};
  }
  friend Matrix2 operator*(const Matrix2& x, const S& s) {
    return {x.e_[0][0] * s, x.e_[0][1] * s, x.e_[1][0] * s, x.e_[1][1] * s};
  }
  friend Matrix2 operator*(const S& s, const Matrix2& x) { return x * s; }
  Matrix2& operator+=(const Matrix2& o) { return *this = *this + o; }
  Matrix2& operator-=(const Matrix2& o) { return *this = *this - o; }
  Matrix2& operator*=(const Matrix2& o) { return *this = *this * o; }

  friend bool operator==(const Matrix2& x, const Matrix2& y) {
    return x.e_[0][0] == y.e_[0][0] && x.e_[0][1] == y.e_[0][1] && x.e_[1][0] == y.e_[1][0] &&
           x.e_[1][1] == y.e_[1][1];
  }

  /// Frobenius norm, evaluated in double precision for either backend.
  double norm() const {
    double s = 0.0;
    for (const auto& row : e_)
      for (const auto& v : row) {
        const double m = ScalarTraits<S>::magnitude(v);
        s += m * m;
      }
    return std::sqrt(s);
  }

  Matrix2<Complex> to_complex() const {
    using T = ScalarTraits<S>;
    return {T::to_complex(e_[0][0]), T::to_complex(e_[0][1]), T::to_complex(e_[1][0]), T::to_complex(e_[1][1])};
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix2& m) {
    return os << "[[" << m.e_[0][0] << ", " << m.e_[0][1] << "], [" << m.e_[1][0] << ", " << m.e_[1][1] << "]]";
  }

 private:
  std::array<std::array<S, 2>, 2> e_;
};

using MatrixC2 = Matrix2<Complex>;
using MatrixQ2 = Matrix2<GaussianRational>;

/// Commutator [a, b] = ab - ba.
template <Scalar S>
Matrix2<S> commutator(const Matrix2<S>& a, const Matrix2<S>& b) {
  return a * b - b * a;
}

/// g a g^{-1}.
template <Scalar S>
Matrix2<S> conjugate(const Matrix2<S>& g, const Matrix2<S>& a) {
  return g * a * g.inverse();
}

/// Residual of two matrices under the backend policy.
template <Scalar S>
bool matrix_equal(const Matrix2<S>& a, const Matrix2<S>& b, double abs_tol) {
  if constexpr (is_exact_v<S>) {
    (void)abs_tol;
    return a == b;
  } else {
    return (a - b).norm() <= abs_tol;
  }
}

}  // namespace orbitstrata

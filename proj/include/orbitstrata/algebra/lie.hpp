#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <utility>

#include "orbitstrata/algebra/matrix2.hpp"

namespace orbitstrata {

// Invariant scalar product on su(2): <X, Y> = -kInnerProductScale * tr(XY).
// With scale 2 the basis e_k = i*sigma_k/2 is orthonormal, the Ad-image of
// exp(X) is a rotation by the angle |X|, and ad(X) has eigenvalues 0, +-i|X|.
// Everything that uses a norm on su(2) (energy, Kaehler potential, eta)
// goes through su2_inner / su2_norm.
inline constexpr double kInnerProductScale = 2.0;

using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

namespace detail {

inline const std::array<MatrixC2, 3>& su2_basis_matrices() {
  static const std::array<MatrixC2, 3> basis = [] {
    const Complex i(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0 * kInnerProductScale);
    // i*sigma_k scaled to unit norm.
    return std::array<MatrixC2, 3>{
        MatrixC2(0.0, i * s, i * s, 0.0),
        MatrixC2(0.0, Complex(s, 0.0), Complex(-s, 0.0), 0.0),
        MatrixC2(i * s, 0.0, 0.0, -i * s),
    };
  }();
  return basis;
}

/// sinh(z)/z for complex z, stable near zero. Even in z.
inline Complex sinhc(Complex z) {
  if (std::abs(z) < 1e-4) {
    const Complex z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sinh(z) / z;
}

}  // namespace detail

/// Element of SU(2): unitary with det 1.
class SU2Element {
 public:
  SU2Element() : m_(MatrixC2::identity()) {}

  /// Validates m^dagger m = 1 and det m = 1 within tol.
  static SU2Element from_matrix(const MatrixC2& m, const Tolerance& tol = {}) {
    if ((m.dagger() * m - MatrixC2::identity()).norm() > tol.matrix_abs ||
        std::abs(m.det() - 1.0) > tol.matrix_abs)
      throw InvalidElement("matrix is not in SU(2)");
    return SU2Element(m);
  }
  static SU2Element unchecked(const MatrixC2& m) { return SU2Element(m); }
  static SU2Element identity() { return {}; }

  const MatrixC2& matrix() const { return m_; }
  SU2Element inverse() const { return SU2Element(m_.dagger()); }

  friend SU2Element operator*(const SU2Element& a, const SU2Element& b) { return SU2Element(a.m_ * b.m_); }

 private:
  explicit SU2Element(const MatrixC2& m) : m_(m) {}
  MatrixC2 m_;
};

/// Element of su(2): anti-Hermitian and traceless.
class Su2AlgebraElement {
 public:
  Su2AlgebraElement() = default;

  static Su2AlgebraElement from_matrix(const MatrixC2& m, const Tolerance& tol = {}) {
    if ((m.dagger() + m).norm() > tol.matrix_abs || std::abs(m.trace()) > tol.matrix_abs)
      throw InvalidElement("matrix is not in su(2)");
    return Su2AlgebraElement(m);
  }
  static Su2AlgebraElement unchecked(const MatrixC2& m) { return Su2AlgebraElement(m); }

  /// Element with the given coordinates in the orthonormal basis.
  static Su2AlgebraElement from_coords(const Vector3& x) {
    const auto& e = detail::su2_basis_matrices();
    return Su2AlgebraElement(e[0] * Complex(x[0]) + e[1] * Complex(x[1]) + e[2] * Complex(x[2]));
  }

  const MatrixC2& matrix() const { return m_; }
  Vector3 coords() const;

  friend Su2AlgebraElement operator+(const Su2AlgebraElement& a, const Su2AlgebraElement& b) {
    return Su2AlgebraElement(a.m_ + b.m_);
  }
  friend Su2AlgebraElement operator-(const Su2AlgebraElement& a, const Su2AlgebraElement& b) {
    return Su2AlgebraElement(a.m_ - b.m_);
  }
  friend Su2AlgebraElement operator*(double s, const Su2AlgebraElement& a) {
    return Su2AlgebraElement(a.m_ * Complex(s));
  }

 private:
  explicit Su2AlgebraElement(const MatrixC2& m) : m_(m) {}
  MatrixC2 m_;
};

/// Element of SL(2,C) over either backend: det = 1.
template <Scalar S>
class SL2CElement {
 public:
  SL2CElement() : m_(Matrix2<S>::identity()) {}

  static SL2CElement from_matrix(const Matrix2<S>& m, const Tolerance& tol = {}) {
    if constexpr (is_exact_v<S>) {
      if (!(m.det() == S(1))) throw NotUnimodular("det != 1");
    } else {
      if (std::abs(m.det() - 1.0) > tol.scalar_rel * std::max(1.0, m.norm() * m.norm()))
        throw NotUnimodular("det != 1");
    }
    return SL2CElement(m);
  }
  static SL2CElement unchecked(const Matrix2<S>& m) { return SL2CElement(m); }

  const Matrix2<S>& matrix() const { return m_; }

 private:
  explicit SL2CElement(const Matrix2<S>& m) : m_(m) {}
  Matrix2<S> m_;
};

/// <X, Y> = -2 tr(XY) (real for su(2) arguments).
inline double su2_inner(const Su2AlgebraElement& x, const Su2AlgebraElement& y) {
  return -kInnerProductScale * (x.matrix() * y.matrix()).trace().real();
}

inline double su2_norm(const Su2AlgebraElement& x) { return std::sqrt(std::max(0.0, su2_inner(x, x))); }

inline Vector3 Su2AlgebraElement::coords() const {
  const auto& e = detail::su2_basis_matrices();
  Vector3 v;
  for (int k = 0; k < 3; ++k) v[k] = -kInnerProductScale * (e[k] * m_).trace().real();
  return v;
}

/// exp(X) for traceless X via X^2 = -det(X) 1:
/// exp(X) = cosh(s) 1 + sinh(s)/s X with s^2 = -det X.
inline MatrixC2 exp_traceless(const MatrixC2& x) {
  const Complex s = std::sqrt(-x.det());
  return MatrixC2::scalar(std::cosh(s)) + x * detail::sinhc(s);
}

/// exp on su(2): cos(th) 1 + sin(th)/th A with th^2 = det A.
inline SU2Element su2_exp(const Su2AlgebraElement& a) { return SU2Element::unchecked(exp_traceless(a.matrix())); }

/// (a, A) -> a exp(iA).
inline SL2CElement<Complex> polar_compose(const SU2Element& a, const Su2AlgebraElement& x) {
  const Complex i(0.0, 1.0);
  return SL2CElement<Complex>::unchecked(a.matrix() * exp_traceless(x.matrix() * i));
}

/// Inverse of polar_compose: g = a exp(iA) with exp(iA) = sqrt(g^dagger g).
inline std::pair<SU2Element, Su2AlgebraElement> polar_decompose(const SL2CElement<Complex>& g_el,
                                                                const Tolerance& tol = {}) {
  const MatrixC2& g = g_el.matrix();
  if (std::abs(g.det() - 1.0) > tol.scalar_rel * std::max(1.0, g.norm() * g.norm()))
    throw NotUnimodular("polar_decompose requires det g = 1");
  const MatrixC2 m = g.dagger() * g;
  const double c = std::max(1.0, 0.5 * m.trace().real());
  const MatrixC2 n = m - MatrixC2::scalar(c);
  const double r = std::sqrt(std::max(0.0, c * c - 1.0));
  // Eigenvalues of m are c +- r = exp(+-x) with sinh x = r.
  const double ratio = r < 1e-6 ? 1.0 - r * r / 6.0 : std::asinh(r) / r;
  MatrixC2 h = n * Complex(0.5 * ratio);
  // Hermitian, traceless by construction; clean rounding.
  h = (h + h.dagger()) * Complex(0.5);
  const Complex i(0.0, 1.0);
  const MatrixC2 a = g * exp_traceless(-h);
  return {SU2Element::unchecked(a), Su2AlgebraElement::unchecked(h * (-i))};
}

/// Matrix of Ad(g) in the orthonormal basis: column l holds the coordinates
/// of g e_l g^{-1}.
inline Matrix3 adjoint_rep(const SU2Element& g) {
  const auto& e = detail::su2_basis_matrices();
  Matrix3 r;
  for (int l = 0; l < 3; ++l) {
    const auto image = Su2AlgebraElement::unchecked(g.matrix() * e[l] * g.inverse().matrix());
    r.col(l) = image.coords();
  }
  return r;
}

/// Matrix of ad(A) = [A, .] in the orthonormal basis.
inline Matrix3 ad_matrix(const Su2AlgebraElement& a) {
  const auto& e = detail::su2_basis_matrices();
  Matrix3 r;
  for (int l = 0; l < 3; ++l) r.col(l) = Su2AlgebraElement::unchecked(commutator(a.matrix(), e[l])).coords();
  return r;
}

/// Ad(g) A = g A g^{-1}.
inline Su2AlgebraElement adjoint_action(const SU2Element& g, const Su2AlgebraElement& a) {
  return Su2AlgebraElement::unchecked(g.matrix() * a.matrix() * g.inverse().matrix());
}

}  // namespace orbitstrata

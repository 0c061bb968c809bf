#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "orbitstrata/errors.hpp"

namespace orbitstrata {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using Complex = std::complex<double>;

/// Comparison policy for the floating backend. Matrix residuals are compared
/// in absolute Frobenius norm, scalars relative to max(1, |a|, |b|).
struct Tolerance {
  double matrix_abs = 1e-10;
  double scalar_rel = 1e-9;
};

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw InvalidParams("zero denominator");
  return Rational(num) / Rational(den);
}

/// Formats as "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
  return r.str();
}

/// Parses "p", "-p", "p/q" (and surrounding whitespace). Returns nullopt on
/// malformed input or zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) return std::nullopt;
  if (den[0] == '-' || den[0] == '+') return std::nullopt;
  std::string n(num[0] == '+' ? num.substr(1) : num);
  const BigInt d{std::string(den)};
  if (d == 0) return std::nullopt;
  return Rational(BigInt(n)) / Rational(d);
}

/// Exact rational square root, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const BigInt sn = boost::multiprecision::sqrt(num);
  const BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn) / Rational(sd);
}

/// Element of Q(i): re + i*im with arbitrary-precision rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(int re) : re_(re), im_(0) {}  // NOLINT(implicit)

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational n = b.norm2();
    if (n == 0) throw SingularMatrix("division by zero in Q(i)");
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  Complex to_complex() const { return {re_.convert_to<double>(), im_.convert_to<double>()}; }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.re_ << (z.im_ < 0 ? " - " : " + ") << abs(z.im_) << "i";
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Square root in Q(i) when the input is a perfect square there.
inline std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
  const auto modulus = rational_sqrt(z.norm2());
  if (!modulus) return std::nullopt;
  const Rational half_re = (z.real() + *modulus) / 2;
  if (half_re == 0) {
    // z is a nonpositive real.
    const auto b = rational_sqrt(-z.real());
    if (!b) return std::nullopt;
    return GaussianRational(0, *b);
  }
  const auto a = rational_sqrt(half_re);
  if (!a) return std::nullopt;
  GaussianRational root(*a, z.imag() / (2 * *a));
  if (!(root * root == z)) return std::nullopt;
  return root;
}

/// Backend traits: the two scalar types share one generic algebra.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex from_rational(const Rational& r) { return {r.convert_to<double>(), 0.0}; }
  static Complex from_int(long long v) { return {static_cast<double>(v), 0.0}; }
  static Complex conj(const Complex& z) { return std::conj(z); }
  static double magnitude(const Complex& z) { return std::abs(z); }
  static Complex to_complex(const Complex& z) { return z; }
};

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool exact = true;
  static GaussianRational from_rational(const Rational& r) { return {r, 0}; }
  static GaussianRational from_int(long long v) { return {Rational(v), 0}; }
  static GaussianRational conj(const GaussianRational& z) { return z.conj(); }
  static double magnitude(const GaussianRational& z) { return std::abs(z.to_complex()); }
  static Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

/// Zero test under the backend's policy: exact equality, or |s| <= tol.
template <Scalar S>
bool is_zero(const S& s, double tol) {
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return s == S(0);
  } else {
    return std::abs(s) <= tol;
  }
}

/// Scalar equality: exact, or relative to max(1, |a|, |b|).
template <Scalar S>
bool scalar_equal(const S& a, const S& b, double rel_tol) {
  if constexpr (is_exact_v<S>) {
    (void)rel_tol;
    return a == b;
  } else {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= rel_tol * scale;
  }
}

}  // namespace orbitstrata

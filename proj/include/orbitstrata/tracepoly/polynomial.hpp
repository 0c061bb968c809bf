#pragma once

#include <map>
#include <optional>
#include <utility>

#include "orbitstrata/algebra/scalar.hpp"
#include "orbitstrata/tracepoly/monomial.hpp"

namespace orbitstrata::tracepoly {

/// Exact linear combination of B_0 monomials. The monomials form a free
/// commutative monoid: products concatenate factors and never apply
/// relations. Zero coefficients are never stored.
class TracePolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  TracePolynomial() = default;
  TracePolynomial(const Rational& c) {  // NOLINT(implicit): constants
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  TracePolynomial(int c) : TracePolynomial(Rational(c)) {}  // NOLINT(implicit)
  TracePolynomial(const Monomial& m, const Rational& c = 1) {
    if (c != 0) terms_.emplace(m, c);
  }

  static TracePolynomial t(int i) { return Monomial({i}); }
  static TracePolynomial t(int i, int j) { return Monomial({}, {Pair{i, j}}); }
  static TracePolynomial t(int i, int j, int k) { return Monomial({}, {}, {Triple{i, j, k}}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Largest index used by any term.
  int max_index() const {
    int n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.max_index());
    return n;
  }

  TracePolynomial& operator+=(const TracePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  TracePolynomial& operator-=(const TracePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  TracePolynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
  friend TracePolynomial operator-(TracePolynomial a) { return a *= Rational(-1); }
  friend TracePolynomial operator*(TracePolynomial a, const Rational& s) { return a *= s; }
  friend TracePolynomial operator*(const Rational& s, TracePolynomial a) { return a *= s; }
  friend TracePolynomial operator*(TracePolynomial a, int s) { return a *= Rational(s); }
  friend TracePolynomial operator*(int s, TracePolynomial a) { return a *= Rational(s); }

  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
    TracePolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  TracePolynomial& operator*=(const TracePolynomial& o) { return *this = *this * o; }

  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;

 private:
  Terms terms_;
};

inline TracePolynomial pow(const TracePolynomial& p, int e) {
  TracePolynomial out(1);
  for (int k = 0; k < e; ++k) out *= p;
  return out;
}

/// p^T_ij = 2(t_ij^2 - t_i t_j t_ij + t_i^2 + t_j^2 - 4).
inline TracePolynomial expand_pT2(int i, int j, int n = 0) {
  if (!(1 <= i && i < j) || (n > 0 && j > n)) throw IndexError("p^T_ij needs 1 <= i < j <= N");
  using P = TracePolynomial;
  return Rational(2) * (P::t(i, j) * P::t(i, j) - P::t(i) * P::t(j) * P::t(i, j) + P::t(i) * P::t(i) +
                        P::t(j) * P::t(j) - P(4));
}

/// p^T_ijk = 2 t_ijk - t_ij t_k - t_ik t_j - t_jk t_i + t_i t_j t_k.
inline TracePolynomial expand_pT3(int i, int j, int k, int n = 0) {
  if (!(1 <= i && i < j && j < k) || (n > 0 && k > n)) throw IndexError("p^T_ijk needs 1 <= i < j < k <= N");
  using P = TracePolynomial;
  return Rational(2) * P::t(i, j, k) - P::t(i, j) * P::t(k) - P::t(i, k) * P::t(j) - P::t(j, k) * P::t(i) +
         P::t(i) * P::t(j) * P::t(k);
}

/// Lexicographic maximum of deg(I, K) over the terms (L is ignored).
/// Empty for the zero polynomial.
inline std::optional<DegreeVector> degree_of(const TracePolynomial& p, int n) {
  std::optional<DegreeVector> best;
  for (const auto& [m, c] : p.terms()) {
    DegreeVector d = degree_of(m.I, m.K, n);
    if (!best || d > *best) best = std::move(d);
  }
  return best;
}

}  // namespace orbitstrata::tracepoly

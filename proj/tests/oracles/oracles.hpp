#pragma once

// Reference implementations used only by the tests. Each one takes a route
// independent of the library code it checks.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <map>
#include <vector>

#include "orbitstrata/orbitstrata.hpp"

namespace oracle {

using namespace orbitstrata;
namespace tp = orbitstrata::tracepoly;

/// exp(X) by its truncated power series.
inline MatrixC2 exp_series(const MatrixC2& x, int terms = 20) {
  MatrixC2 sum = MatrixC2::identity();
  MatrixC2 term = MatrixC2::identity();
  for (int k = 1; k < terms; ++k) {
    term = term * x * Complex(1.0 / k);
    sum += term;
  }
  return sum;
}

inline Matrix3 exp_series(const Matrix3& x, int terms = 30) {
  Matrix3 sum = Matrix3::Identity();
  Matrix3 term = Matrix3::Identity();
  for (int k = 1; k < terms; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

/// sqrt(det(sin(X)/X)) with sin(X)/X = sum_k (-1)^k X^{2k} / (2k+1)!.
inline double eta_series(const Matrix3& ad, int terms = 12) {
  Matrix3 sum = Matrix3::Zero();
  Matrix3 power = Matrix3::Identity();
  const Matrix3 sq = ad * ad;
  double fact = 1.0;  // (2k+1)!
  for (int k = 0; k < terms; ++k) {
    if (k > 0) fact *= static_cast<double>((2 * k) * (2 * k + 1));
    sum += ((k % 2 == 0) ? 1.0 : -1.0) / fact * power;
    power = power * sq;
  }
  return std::sqrt(sum.determinant());
}

/// Coordinates of an su(2) element in the basis i sigma_k / 2, read off the
/// matrix entries directly.
inline Vector3 pauli_coords(const MatrixC2& x) {
  // x = (i/2) (c1 sigma_1 + c2 sigma_2 + c3 sigma_3)
  const Complex i(0.0, 1.0);
  const Complex a = x(0, 0), b = x(0, 1), c = x(1, 0);
  const double c3 = (a / (0.5 * i)).real();
  const double c1 = ((b + c) / (2.0 * 0.5 * i)).real();
  const double c2 = ((b - c) / (2.0 * 0.5)).real();
  return {c1, c2, c3};
}

/// Sigma_mu by brute force: every weakly increasing I with at most |mu|
/// copies of each index times every strict K, filtered by degree.
inline std::vector<tp::IndexPair> brute_sigma_mu(const tp::DegreeVector& mu) {
  const int n = static_cast<int>(mu.size());
  int total = 0;
  for (int v : mu) total += v;
  tp::PairSeq pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  std::vector<tp::IndexPair> out;
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (;;) {
    for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
      tp::IndexPair ik;
      for (int v = 1; v <= n; ++v) ik.I.insert(ik.I.end(), static_cast<std::size_t>(counts[v - 1]), v);
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1ul) ik.K.push_back(pairs[b]);
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      for (int v : ik.I) ++deg[v - 1];
      for (const auto& p : ik.K) {
        ++deg[p[0] - 1];
        ++deg[p[1] - 1];
      }
      if (deg == mu) out.push_back(ik);
    }
    int pos = 0;
    while (pos < n && counts[pos] == total) counts[pos++] = 0;
    if (pos == n) break;
    ++counts[pos];
  }
  return out;
}

/// The defining polynomials typed in term by term.
inline tp::TracePolynomial p2(int i, int j) {
  tp::TracePolynomial p;
  p.add_term(tp::Monomial(tp::Index1{}, {{i, j}, {i, j}}), 2);
  p.add_term(tp::Monomial({i, j}, {{i, j}}), -2);
  p.add_term(tp::Monomial({i, i}), 2);
  p.add_term(tp::Monomial({j, j}), 2);
  p.add_term(tp::Monomial(), -8);
  return p;
}

inline tp::TracePolynomial p3(int i, int j, int k) {
  tp::TracePolynomial p;
  p.add_term(tp::Monomial(tp::Index1{}, tp::PairSeq{}, {{i, j, k}}), 2);
  p.add_term(tp::Monomial({k}, {{i, j}}), -1);
  p.add_term(tp::Monomial({j}, {{i, k}}), -1);
  p.add_term(tp::Monomial({i}, {{j, k}}), -1);
  p.add_term(tp::Monomial({i, j, k}), 1);
  return p;
}

/// Adapted coefficients by peeling: the B_0 term of largest (|L|, |K|) is the
/// leading term of exactly one adapted basis element, with coefficient
/// 2^(|checkK|+|L|); subtract that element and repeat.
inline tp::AdaptedPolynomial peel_adapted(tp::TracePolynomial p) {
  tp::AdaptedPolynomial out;
  while (!p.is_zero()) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
      const auto& m = it->first;
      const auto& b = best->first;
      if (std::make_pair(m.L.size(), m.K.size()) > std::make_pair(b.L.size(), b.K.size())) best = it;
    }
    const tp::Monomial m = best->first;
    const Rational c = best->second;
    auto [hat, check] = tp::split_K(m.K);
    tp::TracePolynomial element(tp::Monomial(m.I, hat, {}));
    for (const auto& q : check) element = element * p2(q[0], q[1]);
    for (const auto& t : m.L) element = element * p3(t[0], t[1], t[2]);
    Rational lead = 1;
    for (std::size_t k = 0; k < check.size() + m.L.size(); ++k) lead *= 2;
    const Rational coeff = c / lead;
    out[tp::AdaptedIndex{m.I, hat, check, m.L}] += coeff;
    p -= element * coeff;
  }
  return out;
}

/// Invariant values by direct matrix traces, no table lookups.
template <Scalar S>
S monomial_value(const tp::Monomial& m, const invariants::Tuple<S>& x) {
  S v(1);
  for (int i : m.I) v = v * x[i - 1].trace();
  for (const auto& q : m.K) v = v * (x[q[0] - 1] * x[q[1] - 1]).trace();
  for (const auto& t : m.L) v = v * (x[t[0] - 1] * x[t[1] - 1] * x[t[2] - 1]).trace();
  return v;
}

template <Scalar S>
S poly_value(const tp::TracePolynomial& p, const invariants::Tuple<S>& x) {
  S v(0);
  for (const auto& [m, c] : p.terms()) v = v + ScalarTraits<S>::from_rational(c) * monomial_value(m, x);
  return v;
}

/// Random polynomial with up to max_terms terms and at most max_factors
/// factors per monomial, indices in 1..n.
inline tp::TracePolynomial random_poly(Rng& rng, int n, int max_terms, int max_factors) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> factors(0, max_factors);
  std::uniform_int_distribution<int> kind(0, n >= 3 ? 2 : 1);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  tp::TracePolynomial p;
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    tp::Index1 I;
    tp::PairSeq K;
    tp::TripleSeq L;
    const int f = factors(rng);
    for (int j = 0; j < f; ++j) {
      std::vector<int> idx(static_cast<std::size_t>(n));
      std::iota(idx.begin(), idx.end(), 1);
      std::shuffle(idx.begin(), idx.end(), rng);
      switch (kind(rng)) {
        case 0: I.push_back(idx[0]); break;
        case 1: {
          tp::Pair q{idx[0], idx[1]};
          std::sort(q.begin(), q.end());
          K.push_back(q);
          break;
        }
        default: {
          tp::Triple tr{idx[0], idx[1], idx[2]};
          std::sort(tr.begin(), tr.end());
          L.push_back(tr);
        }
      }
    }
    p.add_term(tp::Monomial(I, K, L), make_rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace oracle

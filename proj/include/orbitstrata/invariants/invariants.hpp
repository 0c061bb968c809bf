#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitstrata/algebra/lie.hpp"

namespace orbitstrata::invariants {

template <Scalar S>
using Tuple = std::vector<Matrix2<S>>;

using Pair = std::array<int, 2>;
using Triple = std::array<int, 3>;

/// Trace invariants and defining functions of an N-tuple, 1-based and keyed
/// by strictly increasing index sets.
template <Scalar S>
struct InvariantTable {
  int n = 0;
  std::map<int, S> t1;
  std::map<Pair, S> t2;
  std::map<Triple, S> t3;
  std::map<Pair, S> pT2;
  std::map<Triple, S> pT3;

  /// tr(a_i a_j) for any i, j; tr(a_i^2) = t_i^2 - 2 by Cayley-Hamilton.
  S trace2(int i, int j) const {
    if (i == j) return t1.at(i) * t1.at(i) - S(2);
    if (i > j) std::swap(i, j);
    return t2.at({i, j});
  }

  /// tr(a_i a_j a_k) for any index word of length 3. Cyclic rotations of a
  /// sorted triple share t_ijk; the opposite orientation follows from the
  /// fundamental trace identity; repeated letters reduce via a^2 = tr(a) a - 1.
  S trace3(int i, int j, int k) const {
    // Rotate so that the smallest index comes first.
    if (j <= i && j <= k) {
      std::tie(i, j, k) = std::make_tuple(j, k, i);
    } else if (k <= i && k <= j) {
      std::tie(i, j, k) = std::make_tuple(k, i, j);
    }
    if (i == j) return t1.at(i) * trace2(i, k) - t1.at(k);  // tr(a^2 c)
    if (i == k) return t1.at(i) * trace2(i, j) - t1.at(j);  // tr(a b a) = tr(a^2 b)
    if (j == k) return t1.at(j) * trace2(i, j) - t1.at(i);
    if (j < k) return t3.at({i, j, k});
    // tr(a_i a_k a_j) with i < k < j is the reversed orientation of t_{ikj}.
    const S& ti = t1.at(i);
    const S& tj = t1.at(j);
    const S& tk = t1.at(k);
    return trace2(i, k) * tj + trace2(i, j) * tk + trace2(k, j) * ti - ti * tj * tk - t3.at({i, k, j});
  }
};

/// t_i, t_ij, t_ijk plus p^T_ij = tr([a_i, a_j]^2) and p^T_ijk = tr([a_i, a_j] a_k).
template <Scalar S>
InvariantTable<S> trace_invariants(const Tuple<S>& x) {
  if (x.empty()) throw InvalidParams("trace_invariants requires N >= 1");
  InvariantTable<S> tab;
  const int n = static_cast<int>(x.size());
  tab.n = n;
  for (int i = 1; i <= n; ++i) tab.t1[i] = x[i - 1].trace();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto& a = x[i - 1];
      const auto& b = x[j - 1];
      const Matrix2<S> ab = a * b;
      tab.t2[{i, j}] = ab.trace();
      const Matrix2<S> c = commutator(a, b);
      tab.pT2[{i, j}] = (c * c).trace();
      for (int k = j + 1; k <= n; ++k) {
        tab.t3[{i, j, k}] = (ab * x[k - 1]).trace();
        tab.pT3[{i, j, k}] = (c * x[k - 1]).trace();
      }
    }
  return tab;
}

namespace detail {
inline void check_indices(int n, std::initializer_list<int> idx) {
  int prev = 0;
  for (int v : idx) {
    if (v <= prev || v > n) throw IndexError("indices must be strictly increasing within 1..N");
    prev = v;
  }
}
}  // namespace detail

/// 2(t_ij^2 - t_i t_j t_ij + t_i^2 + t_j^2 - 4).
template <Scalar S>
S pT2_expanded(const Tuple<S>& x, int i, int j) {
  detail::check_indices(static_cast<int>(x.size()), {i, j});
  const S ti = x[i - 1].trace();
  const S tj = x[j - 1].trace();
  const S tij = (x[i - 1] * x[j - 1]).trace();
  return S(2) * (tij * tij - ti * tj * tij + ti * ti + tj * tj - S(4));
}

/// 2 t_ijk - t_ij t_k - t_ik t_j - t_jk t_i + t_i t_j t_k.
template <Scalar S>
S pT3_expanded(const Tuple<S>& x, int i, int j, int k) {
  detail::check_indices(static_cast<int>(x.size()), {i, j, k});
  const auto& a = x[i - 1];
  const auto& b = x[j - 1];
  const auto& c = x[k - 1];
  const S ti = a.trace(), tj = b.trace(), tk = c.trace();
  return S(2) * (a * b * c).trace() - (a * b).trace() * tk - (a * c).trace() * tj - (b * c).trace() * ti +
         ti * tj * tk;
}

/// tr(abc) + tr(acb) - tr(ab)tr(c) - tr(ac)tr(b) - tr(bc)tr(a) + tr(a)tr(b)tr(c).
template <Scalar S>
S fundamental_identity_residual(const Matrix2<S>& a, const Matrix2<S>& b, const Matrix2<S>& c) {
  const S ta = a.trace(), tb = b.trace(), tc = c.trace();
  return (a * b * c).trace() + (a * c * b).trace() - (a * b).trace() * tc - (a * c).trace() * tb -
         (b * c).trace() * ta + ta * tb * tc;
}

/// a^2 - tr(a) a + 1 (vanishes for det a = 1).
template <Scalar S>
Matrix2<S> cayley_hamilton_residual(const Matrix2<S>& a) {
  return a * a - a * a.trace() + Matrix2<S>::identity();
}

/// (diag(al, 1/al), upper(be, ga), lower(de, ep)) with
/// ep = -(1/ga)(be - 1/be)(de - 1/de): every p^T_jk vanishes while
/// p^T_123 = (al - 1/al) ga ep.
template <Scalar S>
Tuple<S> mixed_triangular_counterexample(const S& alpha, const S& beta, const S& gamma, const S& delta) {
  auto zero = [](const S& v) { return is_zero(v, 0.0); };
  if (zero(alpha) || zero(alpha - S(1)) || zero(alpha + S(1)))
    throw InvalidParams("alpha must avoid 0 and +-1");
  if (zero(gamma)) throw InvalidParams("gamma must be nonzero");
  if (zero(beta) || zero(delta)) throw InvalidParams("beta and delta must be nonzero");
  const S one(1);
  const S eps = -(one / gamma) * (beta - one / beta) * (delta - one / delta);
  return {Matrix2<S>::diag(alpha, one / alpha), Matrix2<S>(beta, gamma, S(0), one / beta),
          Matrix2<S>(delta, S(0), eps, one / delta)};
}

template <Scalar S>
Tuple<S> conjugate_tuple(const Matrix2<S>& g, const Tuple<S>& x) {
  const Matrix2<S> gi = g.inverse();
  Tuple<S> out;
  out.reserve(x.size());
  for (const auto& a : x) out.push_back(g * a * gi);
  return out;
}

}  // namespace orbitstrata::invariants

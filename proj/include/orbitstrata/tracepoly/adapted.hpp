#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "orbitstrata/tracepoly/polynomial.hpp"

namespace orbitstrata::tracepoly {

/// Index of the adapted basis element e_(I,hatK,0) * prod_{checkK} p^T_kl *
/// prod_{L} p^T_lmn. hatK is strict; checkK and L may repeat.
struct AdaptedIndex {
  Index1 I;
  PairSeq hatK;
  PairSeq checkK;
  TripleSeq L;

  /// The B_0 monomial e_(I,K,L) with K = hatK u checkK u checkK that leads
  /// this basis element with coefficient 2^(|checkK|+|L|).
  Monomial leading() const { return Monomial(I, merge(merge(hatK, checkK), checkK), L); }
  bool in_x() const { return checkK.empty() && L.empty(); }

  friend auto operator<=>(const AdaptedIndex&, const AdaptedIndex&) = default;
  friend bool operator==(const AdaptedIndex&, const AdaptedIndex&) = default;
};

using AdaptedPolynomial = std::map<AdaptedIndex, Rational>;

namespace detail {

inline void add_to(AdaptedPolynomial& acc, const AdaptedIndex& idx, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

/// acc += c * (prod t_extraI) * (prod P_extraK) * (prod P_extraL) * src.
inline void add_scaled(AdaptedPolynomial& acc, const AdaptedPolynomial& src, const Rational& c,
                       const Index1& extra_i = {}, const PairSeq& extra_k = {}, const TripleSeq& extra_l = {}) {
  for (const auto& [idx, v] : src) {
    AdaptedIndex out{merge(idx.I, extra_i), idx.hatK, merge(idx.checkK, extra_k), merge(idx.L, extra_l)};
    add_to(acc, out, c * v);
  }
}

template <class T>
std::vector<T> erase_one(std::vector<T> v, const T& x) {
  v.erase(std::find(v.begin(), v.end(), x));
  return v;
}

template <class T>
std::vector<T> insert_sorted(std::vector<T> v, const T& x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  return v;
}

}  // namespace detail

/// Rewrites B_0 monomials into the adapted basis. Triples go first (smallest
/// first) via t_ijk = 1/2 p^T_ijk + 1/2 (t_ij t_k + t_ik t_j + t_jk t_i - t_i t_j t_k),
/// then squared pairs (smallest first) via
/// t_ij^2 = 1/2 p^T_ij + t_i t_j t_ij - t_i^2 - t_j^2 + 4.
/// Each step lowers (|L|, |K|) lexicographically, so the recursion ends.
/// Results for the (K, L) part are cached; the t_i factors just ride along.
class Reducer {
 public:
  AdaptedPolynomial reduce(const Monomial& m) {
    AdaptedPolynomial out;
    detail::add_scaled(out, reduce_kl(m.K, m.L), 1, m.I);
    return out;
  }

  AdaptedPolynomial reduce(const TracePolynomial& p) {
    AdaptedPolynomial out;
    for (const auto& [m, c] : p.terms()) detail::add_scaled(out, reduce_kl(m.K, m.L), c, m.I);
    return out;
  }

  std::size_t cache_size() const { return cache_.size(); }

 private:
  // std::map keeps references stable across the recursive inserts.
  const AdaptedPolynomial& reduce_kl(const PairSeq& k, const TripleSeq& l) {
    auto key = std::make_pair(k, l);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    AdaptedPolynomial out = compute(k, l);
    return cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  AdaptedPolynomial compute(const PairSeq& k, const TripleSeq& l) {
    AdaptedPolynomial out;
    const Rational half(1, 2);
    if (!l.empty()) {
      const Triple t = l.front();
      const TripleSeq rest(l.begin() + 1, l.end());
      const int i = t[0], j = t[1], kk = t[2];
      const AdaptedPolynomial& base = reduce_kl(k, rest);
      detail::add_scaled(out, base, half, {}, {}, {t});
      detail::add_scaled(out, base, -half, {i, j, kk});
      const AdaptedPolynomial& rij = reduce_kl(detail::insert_sorted(k, Pair{i, j}), rest);
      detail::add_scaled(out, rij, half, {kk});
      const AdaptedPolynomial& rik = reduce_kl(detail::insert_sorted(k, Pair{i, kk}), rest);
      detail::add_scaled(out, rik, half, {j});
      const AdaptedPolynomial& rjk = reduce_kl(detail::insert_sorted(k, Pair{j, kk}), rest);
      detail::add_scaled(out, rjk, half, {i});
      return out;
    }
    auto dup = std::adjacent_find(k.begin(), k.end());
    if (dup == k.end()) {
      out.emplace(AdaptedIndex{{}, k, {}, {}}, Rational(1));
      return out;
    }
    const Pair q = *dup;
    const PairSeq rest = detail::erase_one(detail::erase_one(k, q), q);
    const int i = q[0], j = q[1];
    const AdaptedPolynomial& base = reduce_kl(rest, {});
    detail::add_scaled(out, base, half, {}, {q});
    detail::add_scaled(out, base, -1, {i, i});
    detail::add_scaled(out, base, -1, {j, j});
    detail::add_scaled(out, base, 4);
    const AdaptedPolynomial& once = reduce_kl(detail::insert_sorted(rest, q), {});
    detail::add_scaled(out, once, 1, {i, j});
    return out;
  }

  std::map<std::pair<PairSeq, TripleSeq>, AdaptedPolynomial> cache_;
};

/// Coefficients of p in the adapted basis B.
inline AdaptedPolynomial to_adapted(const TracePolynomial& p) {
  Reducer r;
  return r.reduce(p);
}

/// The basis element itself, expanded in B_0.
inline TracePolynomial basis_element(const AdaptedIndex& idx) {
  TracePolynomial out(Monomial(idx.I, idx.hatK, {}));
  for (const auto& q : idx.checkK) out *= expand_pT2(q[0], q[1]);
  for (const auto& t : idx.L) out *= expand_pT3(t[0], t[1], t[2]);
  return out;
}

/// Inverse of to_adapted: substitutes the defining polynomials back.
inline TracePolynomial expand_adapted(const AdaptedPolynomial& a) {
  TracePolynomial out;
  for (const auto& [idx, c] : a) out += basis_element(idx) * c;
  return out;
}

/// B_X component of an adapted expansion, as a B_0 polynomial.
inline TracePolynomial x_part(const AdaptedPolynomial& a) {
  TracePolynomial out;
  for (const auto& [idx, c] : a)
    if (idx.in_x()) out.add_term(Monomial(idx.I, idx.hatK, {}), c);
  return out;
}

inline TracePolynomial x_part(const TracePolynomial& p) { return x_part(to_adapted(p)); }

inline bool ideal_member(const TracePolynomial& p) { return x_part(p).is_zero(); }

/// b_(I,K) = e_(I,K,0) for (I, K) in Sigma_1 x hat Sigma_2.
inline Monomial bx_monomial(const IndexPair& ik) { return Monomial(ik.I, ik.K, {}); }

struct BxDecomposition {
  Monomial leading;
  TracePolynomial Q;
  TracePolynomial R;
};

/// b b' = b_((I,K).(I',K')) + Q + R with Q in the ideal and R in X.
inline BxDecomposition bx_multiply_decompose(const Monomial& b, const Monomial& b2) {
  if (!b.L.empty() || !b2.L.empty() || !is_strict(b.K) || !is_strict(b2.K))
    throw InvalidParams("bx_multiply_decompose expects B_X monomials (L empty, K strict)");
  const IndexPair lead = index_product({b.I, b.K}, {b2.I, b2.K});
  const TracePolynomial prod(b * b2);
  const TracePolynomial x = x_part(prod);
  BxDecomposition out;
  out.leading = bx_monomial(lead);
  out.Q = prod - x;
  out.R = x - TracePolynomial(out.leading);
  return out;
}

}  // namespace orbitstrata::tracepoly

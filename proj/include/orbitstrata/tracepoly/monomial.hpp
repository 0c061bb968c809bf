#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbitstrata/errors.hpp"

namespace orbitstrata::tracepoly {

using Pair = std::array<int, 2>;
using Triple = std::array<int, 3>;

/// Weakly increasing sequence of indices (Sigma_1).
using Index1 = std::vector<int>;
/// Weakly increasing sequence of strictly increasing pairs (Sigma_2). A
/// StrictPairSeq (hat Sigma_2) is the same container without repeats.
using PairSeq = std::vector<Pair>;
/// Weakly increasing sequence of strictly increasing triples (Sigma_3).
using TripleSeq = std::vector<Triple>;
/// deg_i counts occurrences of index i (length N).
using DegreeVector = std::vector<int>;

/// Sorted concatenation K1 u K2.
template <class T>
std::vector<T> merge(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <class T>
bool is_sorted_seq(const std::vector<T>& v) {
  return std::is_sorted(v.begin(), v.end());
}

inline bool is_strict(const PairSeq& k) {
  return std::adjacent_find(k.begin(), k.end()) == k.end();
}

/// Basis monomial e_(I,K,L) = prod t_i prod t_kl prod t_lmn of B_0. Factors are
/// kept sorted so equality is structural.
struct Monomial {
  Index1 I;
  PairSeq K;
  TripleSeq L;

  Monomial() = default;
  Monomial(Index1 i, PairSeq k = {}, TripleSeq l = {}) : I(std::move(i)), K(std::move(k)), L(std::move(l)) {
    std::sort(I.begin(), I.end());
    std::sort(K.begin(), K.end());
    std::sort(L.begin(), L.end());
  }

  bool is_one() const { return I.empty() && K.empty() && L.empty(); }
  std::size_t factor_count() const { return I.size() + K.size() + L.size(); }

  /// Largest index appearing in any factor (0 for the unit monomial).
  int max_index() const {
    int m = 0;
    for (int i : I) m = std::max(m, i);
    for (const auto& p : K) m = std::max(m, p[1]);
    for (const auto& t : L) m = std::max(m, t[2]);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.I = merge(a.I, b.I);
    m.K = merge(a.K, b.K);
    m.L = merge(a.L, b.L);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Orders by length (|L|, |K|, |I|), then lexicographically (L, K, I).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.L.size() <=> b.L.size(); c != 0) return c;
    if (auto c = a.K.size() <=> b.K.size(); c != 0) return c;
    if (auto c = a.I.size() <=> b.I.size(); c != 0) return c;
    if (auto c = a.L <=> b.L; c != 0) return c;
    if (auto c = a.K <=> b.K; c != 0) return c;
    return a.I <=> b.I;
  }
};

/// Validates index ranges and internal strict ordering of pairs/triples.
inline void check_monomial(const Monomial& m, int n = 0) {
  auto in_range = [n](int v) { return v >= 1 && (n <= 0 || v <= n); };
  for (int i : m.I)
    if (!in_range(i)) throw IndexError("index out of range");
  for (const auto& p : m.K)
    if (!(p[0] < p[1]) || !in_range(p[0]) || !in_range(p[1])) throw IndexError("pair indices must be increasing");
  for (const auto& t : m.L)
    if (!(t[0] < t[1] && t[1] < t[2]) || !in_range(t[0]) || !in_range(t[2]))
      throw IndexError("triple indices must be increasing");
}

/// K = hat K u check K u check K with hat K strict: odd multiplicities leave
/// one copy in hat K, the rest is halved into check K.
inline std::pair<PairSeq, PairSeq> split_K(const PairSeq& k) {
  PairSeq hat, check;
  PairSeq sorted = k;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const std::size_t mult = j - i;
    if (mult % 2 == 1) hat.push_back(sorted[i]);
    for (std::size_t c = 0; c < mult / 2; ++c) check.push_back(sorted[i]);
    i = j;
  }
  return {hat, check};
}

/// Degree of (I, K): deg_i counts i in I and in the pairs of K.
inline DegreeVector degree_of(const Index1& i_seq, const PairSeq& k, int n) {
  DegreeVector d(static_cast<std::size_t>(n), 0);
  auto bump = [&](int v) {
    if (v < 1 || v > n) throw IndexError("index exceeds N in degree computation");
    ++d[static_cast<std::size_t>(v - 1)];
  };
  for (int v : i_seq) bump(v);
  for (const auto& p : k) {
    bump(p[0]);
    bump(p[1]);
  }
  return d;
}

inline DegreeVector operator+(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// Componentwise a <= b.
inline bool dominated_by(const DegreeVector& a, const DegreeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Sorted intersection of strict pair sequences.
inline PairSeq intersect(const PairSeq& a, const PairSeq& b) {
  PairSeq out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Sorted union (common pairs once).
inline PairSeq unite(const PairSeq& a, const PairSeq& b) {
  PairSeq out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Exclusive union (XOR).
inline PairSeq exclusive_union(const PairSeq& a, const PairSeq& b) {
  PairSeq out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// bar K: the entries of all pairs of K, sorted.
inline Index1 flatten(const PairSeq& k) {
  Index1 out;
  for (const auto& p : k) {
    out.push_back(p[0]);
    out.push_back(p[1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Element (I, K) of Sigma_1 x hat Sigma_2.
struct IndexPair {
  Index1 I;
  PairSeq K;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// (I, K) . (I', K') = (I u I' u bar(K n K'), K cup K').
inline IndexPair index_product(const IndexPair& a, const IndexPair& b) {
  if (!is_strict(a.K) || !is_strict(b.K)) throw InvalidParams("index_product requires strict pair sequences");
  IndexPair out;
  out.I = merge(merge(a.I, b.I), flatten(intersect(a.K, b.K)));
  out.K = unite(a.K, b.K);
  return out;
}

}  // namespace orbitstrata::tracepoly

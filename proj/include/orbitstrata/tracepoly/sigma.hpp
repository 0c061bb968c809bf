#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "orbitstrata/algebra/scalar.hpp"
#include "orbitstrata/tracepoly/monomial.hpp"

namespace orbitstrata::tracepoly {

/// All strictly increasing pairs of 1..n, lexicographically.
inline PairSeq all_pairs(int n) {
  PairSeq out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

/// Sigma_mu = {(I, K) in Sigma_1 x hat Sigma_2 : deg(I, K) = mu}. K ranges
/// over the subsets of pairs whose degree fits under mu; I takes the rest.
/// Ordered by |K|, then K lexicographically.
inline std::vector<IndexPair> sigma_mu(const DegreeVector& mu) {
  const int n = static_cast<int>(mu.size());
  for (int v : mu)
    if (v < 0) throw DegreeInfeasible("degree vector has a negative entry");
  const PairSeq pairs = all_pairs(n);
  if (pairs.size() > 24) throw InvalidParams("sigma_mu supports at most 7 indices");
  std::vector<IndexPair> out;
  const unsigned long total = 1ul << pairs.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    DegreeVector budget = mu;
    PairSeq k;
    bool ok = true;
    for (std::size_t b = 0; b < pairs.size() && ok; ++b) {
      if (!(mask >> b & 1ul)) continue;
      k.push_back(pairs[b]);
      if (--budget[pairs[b][0] - 1] < 0 || --budget[pairs[b][1] - 1] < 0) ok = false;
    }
    if (!ok) continue;
    Index1 i;
    for (int v = 1; v <= n; ++v) i.insert(i.end(), static_cast<std::size_t>(budget[v - 1]), v);
    out.push_back({std::move(i), std::move(k)});
  }
  std::sort(out.begin(), out.end(), [](const IndexPair& a, const IndexPair& b) {
    if (a.K.size() != b.K.size()) return a.K.size() < b.K.size();
    return a.K < b.K;
  });
  return out;
}

using SigmaCoefficients = std::map<IndexPair, Rational>;

/// F_(I,K) = sum over (I',K').(I'',K'') = (I,K) of f_(I',K') f_(I'',K''),
/// for f given on Sigma_mu. Keys lie in Sigma_{2 mu}; zero entries are kept
/// out.
inline SigmaCoefficients f_coefficients(const SigmaCoefficients& f) {
  SigmaCoefficients out;
  for (const auto& [a, fa] : f)
    for (const auto& [b, fb] : f) {
      if (fa == 0 || fb == 0) continue;
      auto& slot = out[index_product(a, b)];
      slot += fa * fb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// S(K) for a subset of Sigma_mu.
inline Rational subset_sum(const SigmaCoefficients& f, const std::vector<IndexPair>& subset) {
  Rational s = 0;
  for (const auto& ik : subset)
    if (auto it = f.find(ik); it != f.end()) s += it->second;
  return s;
}

/// K^i_J = {(I, K) in sigma : |K n J| = i} for i = 0..|J|.
inline std::vector<std::vector<IndexPair>> partition_by_overlap(const std::vector<IndexPair>& sigma,
                                                                const PairSeq& j) {
  if (!is_strict(j) || !is_sorted_seq(j)) throw InvalidParams("J must be a strict pair sequence");
  std::vector<std::vector<IndexPair>> parts(j.size() + 1);
  for (const auto& ik : sigma) parts[intersect(ik.K, j).size()].push_back(ik);
  std::size_t count = 0;
  for (const auto& p : parts) count += p.size();
  if (count != sigma.size()) throw InvalidParams("overlap classes do not partition Sigma_mu");
  return parts;
}

/// S(K^0_J), ..., S(K^|J|_J).
inline std::vector<Rational> subset_sums(const SigmaCoefficients& f, const std::vector<IndexPair>& sigma,
                                         const PairSeq& j) {
  std::vector<Rational> out;
  for (const auto& part : partition_by_overlap(sigma, j)) out.push_back(subset_sum(f, part));
  return out;
}

}  // namespace orbitstrata::tracepoly

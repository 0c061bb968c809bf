#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orbitstrata/algebra/sample.hpp"
#include "orbitstrata/tracepoly/adapted.hpp"
#include "orbitstrata/tracepoly/sigma.hpp"
#include "orbitstrata/tracepoly/text.hpp"

namespace orbitstrata::tracepoly {

struct RadicalReport {
  int n = 0;
  DegreeVector mu;
  int trials = 0;
  std::uint64_t seed = 0;
  /// x_part(f^2) != 0 confirmed for nonzero f in X.
  int contrapositive_checks = 0;
  /// F_(I,K) matched the degree-2 mu X-coefficients of f^2.
  int proof_path_checks = 0;
  std::size_t proof_path_coefficients = 0;
  /// Unconditional bookkeeping identities behind the overlap-class induction.
  int partition_identity_checks = 0;
  int violations = 0;
};

namespace detail {

/// All degree vectors nu with 0 <= nu <= mu componentwise.
inline std::vector<DegreeVector> dominated_degrees(const DegreeVector& mu) {
  std::vector<DegreeVector> out{DegreeVector(mu.size(), 0)};
  for (std::size_t i = 0; i < mu.size(); ++i) {
    std::vector<DegreeVector> next;
    for (const auto& d : out)
      for (int v = 0; v <= mu[i]; ++v) {
        DegreeVector e = d;
        e[i] = v;
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

inline Rational random_coefficient(Rng& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return make_rational(num(rng), den(rng));
}

inline std::vector<IndexPair> without(const std::vector<IndexPair>& a, const std::vector<IndexPair>& b) {
  std::vector<IndexPair> out;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

inline std::vector<IndexPair> meet(const std::vector<IndexPair>& a, const std::vector<IndexPair>& b) {
  std::vector<IndexPair> out;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
  return out;
}

inline bool same_set(std::vector<IndexPair> a, std::vector<IndexPair> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// For every strict J over the pairs, checks on the given coefficients:
///   sum_j S(K^i_{J_j} \ K^1_{(P_j)}) = (r - i) S(K^i_J),
///   K^i_{J_j} n K^1_{(P_j)} = K^{i+1}_J \ K^{i+1}_{J_j},
/// where J_j omits the j-th pair P_j. Returns the number of identities checked.
inline int check_partition_identities(const SigmaCoefficients& f, const std::vector<IndexPair>& sigma, int n) {
  const PairSeq pairs = all_pairs(n);
  int checked = 0;
  for (unsigned long mask = 1; mask < (1ul << pairs.size()); ++mask) {
    PairSeq j;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1ul) j.push_back(pairs[b]);
    const int r = static_cast<int>(j.size());
    const auto parts_j = partition_by_overlap(sigma, j);
    for (int i = 0; i <= r; ++i) {
      Rational lhs = 0;
      for (int p = 0; p < r; ++p) {
        PairSeq jj = j;
        jj.erase(jj.begin() + p);
        const auto parts_jj = partition_by_overlap(sigma, jj);
        const auto parts_p = partition_by_overlap(sigma, {j[static_cast<std::size_t>(p)]});
        const auto& kij = static_cast<std::size_t>(i) < parts_jj.size() ? parts_jj[static_cast<std::size_t>(i)]
                                                                      : std::vector<IndexPair>{};
        lhs += subset_sum(f, without(kij, parts_p[1]));
        if (i < r) {
          const auto& next_jj = static_cast<std::size_t>(i + 1) < parts_jj.size()
                                    ? parts_jj[static_cast<std::size_t>(i + 1)]
                                    : std::vector<IndexPair>{};
          if (!same_set(meet(kij, parts_p[1]), without(parts_j[static_cast<std::size_t>(i + 1)], next_jj)))
            throw RadicalViolation("overlap-class set identity failed");
          ++checked;
        }
      }
      if (lhs != Rational(r - i) * subset_sum(f, parts_j[static_cast<std::size_t>(i)]))
        throw RadicalViolation("overlap-class sum identity failed");
      ++checked;
    }
  }
  return checked;
}

}  // namespace detail

/// Falsification harness for the radical property of the ideal generated by
/// the p^T. Per trial a random nonzero f in X supported on degrees <= mu is
/// drawn and
///  (1) x_part(f^2) must be nonzero;
///  (2) the F_(I,K) computed from the degree-mu coefficients must equal the
///      degree-2 mu X-coefficients of f^2 from the full rewrite, and must not
///      all vanish unless f vanishes on Sigma_mu;
///  (3) the bookkeeping identities of the overlap classes hold.
/// Any failure raises RadicalViolation carrying the offending f.
inline RadicalReport radical_spot_check(int n, const DegreeVector& mu, int trials, std::uint64_t seed) {
  if (n < 2) throw InvalidParams("radical_spot_check requires N >= 2");
  if (static_cast<int>(mu.size()) != n) throw DegreeInfeasible("degree vector length must equal N");
  if (trials < 0) throw InvalidParams("trials must be nonnegative");
  for (int v : mu)
    if (v < 0) throw DegreeInfeasible("degree vector has a negative entry");

  RadicalReport rep;
  rep.n = n;
  rep.mu = mu;
  rep.trials = trials;
  rep.seed = seed;

  const std::vector<IndexPair> top = sigma_mu(mu);
  std::vector<IndexPair> support;
  for (const auto& nu : detail::dominated_degrees(mu))
    for (auto& ik : sigma_mu(nu)) support.push_back(std::move(ik));
  DegreeVector two_mu = mu + mu;
  const std::vector<IndexPair> top2 = sigma_mu(two_mu);

  Rng rng(seed);
  std::bernoulli_distribution keep(0.6);
  Reducer reducer;
  for (int trial = 0; trial < trials; ++trial) {
    TracePolynomial f;
    SigmaCoefficients f_top;
    // Alternate between f with a nonzero top layer and f living strictly below.
    const bool force_top = trial % 4 != 3;
    while (f.is_zero() || (force_top && f_top.empty())) {
      f = TracePolynomial();
      f_top.clear();
      for (const auto& ik : support) {
        if (!keep(rng)) continue;
        const Rational c = detail::random_coefficient(rng);
        if (c == 0) continue;
        f.add_term(bx_monomial(ik), c);
        if (degree_of(ik.I, ik.K, n) == mu) f_top[ik] = c;
      }
    }
    auto fail = [&](const std::string& what) {
      throw RadicalViolation(what + " for f = " + format_poly(f));
    };

    const AdaptedPolynomial sq = reducer.reduce(f * f);
    const TracePolynomial xsq = x_part(sq);
    if (xsq.is_zero()) fail("x_part(f^2) vanished");
    ++rep.contrapositive_checks;

    const SigmaCoefficients big_f = f_coefficients(f_top);
    for (const auto& [m, c] : xsq.terms()) {
      const DegreeVector d = degree_of(m.I, m.K, n);
      if (!dominated_by(d, two_mu)) fail("x_part(f^2) exceeds degree 2 mu");
    }
    bool any_nonzero = false;
    for (const auto& ik : top2) {
      const Rational direct = xsq.coefficient(bx_monomial(ik));
      auto it = big_f.find(ik);
      const Rational via_f = it == big_f.end() ? Rational(0) : it->second;
      if (direct != via_f) fail("F coefficient mismatch at a degree 2 mu index");
      if (via_f != 0) any_nonzero = true;
      ++rep.proof_path_coefficients;
    }
    for (const auto& [ik, c] : big_f)
      if (degree_of(ik.I, ik.K, n) != two_mu) fail("F produced an index outside Sigma_2mu");
    if (!f_top.empty() && !any_nonzero) fail("all F vanish although f is nonzero on Sigma_mu");
    Rational s = subset_sum(f_top, top);
    Rational sum_f = 0;
    for (const auto& [ik, c] : big_f) sum_f += c;
    if (s * s != sum_f) fail("S(Sigma_mu)^2 differs from the sum of F");
    ++rep.proof_path_checks;

    rep.partition_identity_checks += detail::check_partition_identities(f_top, top, n);
  }
  return rep;
}

}  // namespace orbitstrata::tracepoly

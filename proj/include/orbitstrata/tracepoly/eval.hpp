#pragma once

#include "orbitstrata/invariants/invariants.hpp"
#include "orbitstrata/tracepoly/polynomial.hpp"

namespace orbitstrata::tracepoly {

/// Substitutes the trace values of x into p. Exact for exact tuples.
template <Scalar S>
S eval_poly(const TracePolynomial& p, const invariants::Tuple<S>& x) {
  const int n = static_cast<int>(x.size());
  for (const auto& [m, c] : p.terms()) {
    if (n == 0 && !m.is_one()) throw IndexError("polynomial uses indices beyond the empty tuple");
    check_monomial(m, n);
  }
  if (p.is_zero()) return S(0);
  if (x.empty()) return ScalarTraits<S>::from_rational(p.coefficient(Monomial{}));
  const auto tab = invariants::trace_invariants(x);
  S total(0);
  for (const auto& [m, c] : p.terms()) {
    S v = ScalarTraits<S>::from_rational(c);
    for (int i : m.I) v = v * tab.t1.at(i);
    for (const auto& q : m.K) v = v * tab.t2.at(q);
    for (const auto& t : m.L) v = v * tab.t3.at(t);
    total = total + v;
  }
  return total;
}

}  // namespace orbitstrata::tracepoly

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "orbitstrata/invariants/invariants.hpp"
#include "orbitstrata/lattice/phase.hpp"

namespace orbitstrata::strata {

using invariants::Tuple;

/// Orbit-type stratum: a point stratum labelled by signs nu, the torus
/// stratum T, or the principal stratum Z.
class StratumLabel {
 public:
  enum class Kind { point, torus, principal };

  static StratumLabel point(std::vector<int> nu) {
    for (int v : nu)
      if (v != 1 && v != -1) throw InvalidParams("nu entries must be +1 or -1");
    return StratumLabel(Kind::point, std::move(nu));
  }
  static StratumLabel torus() { return StratumLabel(Kind::torus, {}); }
  static StratumLabel principal() { return StratumLabel(Kind::principal, {}); }

  Kind kind() const { return kind_; }
  const std::vector<int>& nu() const { return nu_; }

  std::string name() const {
    switch (kind_) {
      case Kind::point: return "point";
      case Kind::torus: return "torus";
      case Kind::principal: return "principal";
    }
    return {};
  }

  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;

 private:
  StratumLabel(Kind k, std::vector<int> nu) : kind_(k), nu_(std::move(nu)) {}
  Kind kind_;
  std::vector<int> nu_;
};

enum class Order { less, greater, equal, incomparable };

inline std::string to_string(Order o) {
  switch (o) {
    case Order::less: return "less";
    case Order::greater: return "greater";
    case Order::equal: return "equal";
    case Order::incomparable: return "incomparable";
  }
  return {};
}

/// Frontier order: every point stratum < T < Z; distinct point strata are
/// incomparable.
inline Order hasse_order(const StratumLabel& s1, const StratumLabel& s2) {
  using K = StratumLabel::Kind;
  if (s1.kind() == K::point && s2.kind() == K::point) {
    if (s1.nu().size() != s2.nu().size()) throw InvalidParams("strata of different N");
    return s1.nu() == s2.nu() ? Order::equal : Order::incomparable;
  }
  auto rank = [](K k) { return k == K::point ? 0 : k == K::torus ? 1 : 2; };
  const int r1 = rank(s1.kind()), r2 = rank(s2.kind());
  if (r1 == r2) return Order::equal;
  return r1 < r2 ? Order::less : Order::greater;
}

/// Orbit type of a phase point under diagonal conjugation.
/// G: all a_i = +-1 and A_i = 0. T: otherwise, if a_i and A_j all commute
/// pairwise (jointly conjugate into T^N x t^N). Z: otherwise.
inline StratumLabel orbit_type(const lattice::PhasePoint& p, double tol = 1e-10) {
  lattice::check_phase_point(p);
  std::vector<int> nu;
  bool central = true;
  for (std::size_t i = 0; i < p.size() && central; ++i) {
    const MatrixC2& a = p.a[i].matrix();
    const double dp = (a - MatrixC2::identity()).norm();
    const double dm = (a + MatrixC2::identity()).norm();
    if (std::min(dp, dm) > tol || p.A[i].matrix().norm() > tol) central = false;
    nu.push_back(dp <= dm ? 1 : -1);
  }
  if (central) return StratumLabel::point(std::move(nu));

  std::vector<MatrixC2> elems;
  for (const auto& a : p.a) elems.push_back(a.matrix());
  for (const auto& a : p.A) elems.push_back(a.matrix());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (commutator(elems[i], elems[j]).norm() > tol) return StratumLabel::principal();
  return StratumLabel::torus();
}

/// Whether x lies in the closure of the torus stratum: all p^T_ij and p^T_ijk
/// vanish (exactly, or with magnitude <= tol).
template <Scalar S>
bool in_T_closure(const Tuple<S>& x, double tol = 1e-9) {
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Matrix2<S> c = commutator(x[i], x[j]);
      if (!is_zero((c * c).trace(), tol)) return false;
      for (int k = j + 1; k < n; ++k)
        if (!is_zero((c * x[k]).trace(), tol)) return false;
    }
  return true;
}

/// Membership in the nu-stratum: torus closure plus tr(a_i) = 2 nu_i.
template <Scalar S>
bool in_nu_stratum(const Tuple<S>& x, const std::vector<int>& nu, double tol = 1e-9) {
  if (nu.size() != x.size()) throw InvalidParams("|nu| must equal N");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i].trace() - S(2 * nu[i]), tol)) return false;
  return in_T_closure(x, tol);
}

/// Classification of an SL(2,C)^N tuple by the stratum its orbit-closure
/// class belongs to.
struct TupleClassification {
  StratumLabel stratum = StratumLabel::principal();
  bool in_torus_closure = false;
};

template <Scalar S>
TupleClassification classify_tuple(const Tuple<S>& x, double tol = 1e-9) {
  TupleClassification out;
  out.in_torus_closure = in_T_closure(x, tol);
  if (!out.in_torus_closure) return out;
  std::vector<int> nu;
  for (const auto& a : x) {
    const S t = a.trace();
    if (is_zero(t - S(2), tol)) {
      nu.push_back(1);
    } else if (is_zero(t + S(2), tol)) {
      nu.push_back(-1);
    } else {
      out.stratum = StratumLabel::torus();
      return out;
    }
  }
  out.stratum = StratumLabel::point(std::move(nu));
  return out;
}

/// Constructive orbit-closure witness for a tuple in the torus closure.
/// conjugated = conjugator . x . conjugator^{-1} is upper triangular;
/// diag(1/n, n) . conjugated scales every upper-right entry by 1/n^2, so the
/// sequence converges to diagonal_limit as n -> infinity.
template <Scalar S>
struct ClosureWitness {
  Matrix2<S> conjugator = Matrix2<S>::identity();
  Tuple<S> conjugated;
  Tuple<S> diagonal_limit;
  std::optional<int> first_noncentral;  ///< 1-based; empty when x is in Z^N
  bool defective = false;               ///< first noncentral entry is a Jordan block
  std::string scaling = "diag(1/n, n)";
};

/// diag(1/n, n) . x . diag(n, 1/n).
template <Scalar S>
Tuple<S> scale_tuple(const Tuple<S>& x, long long n) {
  const S nn = ScalarTraits<S>::from_int(n);
  const S one(1);
  return invariants::conjugate_tuple(Matrix2<S>::diag(one / nn, nn), x);
}

namespace detail {

template <Scalar S>
bool is_central(const Matrix2<S>& a, double tol) {
  const auto id = Matrix2<S>::identity();
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return a == id || a == -id;
  } else {
    return std::min((a - id).norm(), (a + id).norm()) <= tol;
  }
}

template <Scalar S>
S square_root(const S& z) {
  if constexpr (is_exact_v<S>) {
    auto r = gaussian_sqrt(z);
    if (!r) throw NotRepresentable("eigenvalues are not in Q(i); use the float backend");
    return *r;
  } else {
    return std::sqrt(z);
  }
}

/// Eigenvector of a for eigenvalue lambda, from whichever row is nonzero.
template <Scalar S>
std::array<S, 2> eigenvector(const Matrix2<S>& a, const S& lambda, double tol) {
  const S p = a(0, 0) - lambda;
  const S q = a(0, 1);
  const S r = a(1, 0);
  const S s = a(1, 1) - lambda;
  const double mag_row0 = ScalarTraits<S>::magnitude(p) + ScalarTraits<S>::magnitude(q);
  const double mag_row1 = ScalarTraits<S>::magnitude(r) + ScalarTraits<S>::magnitude(s);
  if constexpr (is_exact_v<S>) {
    (void)tol;
    if (!(q == S(0)) || !(p == S(0))) return {q, -p};
    return {s, -r};
  } else {
    (void)tol;
    if (mag_row0 >= mag_row1) return {q, -p};
    return {s, -r};
  }
}

}  // namespace detail

template <Scalar S>
ClosureWitness<S> closure_witness(const Tuple<S>& x, double tol = 1e-9) {
  if (!in_T_closure(x, tol)) throw NotInClosure("tuple is not in the closure of the torus stratum");
  ClosureWitness<S> w;
  const int n = static_cast<int>(x.size());
  int first = -1;
  for (int i = 0; i < n; ++i)
    if (!detail::is_central(x[i], tol)) {
      first = i;
      break;
    }
  if (first < 0) {
    w.conjugated = x;
    w.diagonal_limit = x;
    return w;
  }
  w.first_noncentral = first + 1;

  const Matrix2<S>& a = x[first];
  const S t = a.trace();
  const S disc = t * t - S(4);
  const S one(1);
  Matrix2<S> p;  // columns: change of basis, det p = 1
  if (!is_zero(disc, tol)) {
    // Case (a): distinct eigenvalues lambda, 1/lambda; larger modulus first,
    // modulus ties broken by argument.
    const S root = detail::square_root(disc);
    S l1 = (t + root) / S(2);
    S l2 = (t - root) / S(2);
    const Complex c1 = ScalarTraits<S>::to_complex(l1);
    const Complex c2 = ScalarTraits<S>::to_complex(l2);
    if (std::abs(c2) > std::abs(c1) || (std::abs(c2) == std::abs(c1) && std::arg(c2) > std::arg(c1)))
      std::swap(l1, l2);
    const auto v1 = detail::eigenvector(a, l1, tol);
    const auto v2 = detail::eigenvector(a, l2, tol);
    p = Matrix2<S>(v1[0], v2[0], v1[1], v2[1]);
  } else {
    // Case (b): a = +-1 + nilpotent. Pick w with (a - l) w != 0 and v = (a - l) w.
    w.defective = true;
    const S l = t / S(2);
    const Matrix2<S> nil = a - Matrix2<S>::scalar(l);
    const bool use_e1 = ScalarTraits<S>::magnitude(nil(0, 0)) + ScalarTraits<S>::magnitude(nil(1, 0)) >=
                        ScalarTraits<S>::magnitude(nil(0, 1)) + ScalarTraits<S>::magnitude(nil(1, 1));
    if (use_e1) {
      p = Matrix2<S>(nil(0, 0), one, nil(1, 0), S(0));
    } else {
      p = Matrix2<S>(nil(0, 1), S(0), nil(1, 1), one);
    }
  }
  // Rescale the second column so that det p = 1; conjugation by p^{-1}
  // keeps a upper triangular with the eigenvalues on the diagonal.
  const S d = p.det();
  if (is_zero(d, 0.0)) throw NotInClosure("degenerate eigenbasis");
  p = Matrix2<S>(p(0, 0), p(0, 1) / d, p(1, 0), p(1, 1) / d);
  Matrix2<S> g = p.inverse();
  Tuple<S> y = invariants::conjugate_tuple(g, x);

  auto scale = [](const Matrix2<S>& m) { return std::max(1.0, m.norm()); };
  bool any_lower = false;
  for (const auto& m : y)
    if (!is_zero(m(1, 0), tol * scale(m))) any_lower = true;
  if (any_lower) {
    // Swap conjugation [[0,1],[-1,0]] maps lower triangular to upper triangular.
    const Matrix2<S> swap(S(0), one, -one, S(0));
    g = swap * g;
    y = invariants::conjugate_tuple(swap, y);
  }
  for (auto& m : y) {
    if (!is_zero(m(1, 0), std::sqrt(tol) * scale(m)))
      throw NotInClosure("tuple entries are not simultaneously triangularizable");
    if constexpr (!is_exact_v<S>) m(1, 0) = S(0);
  }
  w.conjugator = g;
  w.conjugated = y;
  for (const auto& m : y) w.diagonal_limit.push_back(Matrix2<S>::diag(m(0, 0), m(1, 1)));
  return w;
}

/// Complexified tuple a_i exp(i A_i) of a phase point.
inline Tuple<Complex> complexify(const lattice::PhasePoint& p) {
  lattice::check_phase_point(p);
  Tuple<Complex> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(polar_compose(p.a[i], p.A[i]).matrix());
  return out;
}

}  // namespace orbitstrata::strata

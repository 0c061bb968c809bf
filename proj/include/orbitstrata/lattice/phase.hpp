#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <vector>

#include "orbitstrata/algebra/lie.hpp"
#include "orbitstrata/algebra/sample.hpp"

namespace orbitstrata::lattice {

/// (a_1..a_N, A_1..A_N) in SU(2)^N x su(2)^N.
struct PhasePoint {
  std::vector<SU2Element> a;
  std::vector<Su2AlgebraElement> A;

  std::size_t size() const { return a.size(); }
};

inline void check_phase_point(const PhasePoint& p) {
  if (p.a.size() != p.A.size()) throw InvalidParams("phase point needs as many algebra elements as group elements");
}

/// Diagonal conjugation g.(a, A) = (g a g^{-1}, Ad(g) A).
inline PhasePoint act(const SU2Element& g, const PhasePoint& p) {
  PhasePoint out;
  for (const auto& x : p.a) out.a.push_back(g * x * g.inverse());
  for (const auto& x : p.A) out.A.push_back(adjoint_action(g, x));
  return out;
}

/// mu(a, A) = sum_i Ad(a_i) A_i - A_i, with su(2)* identified with su(2).
inline Su2AlgebraElement momentum_map(const PhasePoint& p) {
  check_phase_point(p);
  MatrixC2 sum;
  for (std::size_t i = 0; i < p.size(); ++i) sum += adjoint_action(p.a[i], p.A[i]).matrix() - p.A[i].matrix();
  return Su2AlgebraElement::unchecked(sum);
}

struct Mu0SamplerOptions {
  double algebra_bound = 1.0;
  double tolerance = 1e-10;
  int max_attempts = 64;
};

/// Samples a point of mu^{-1}(0). All a_i, A_i are drawn freely, then
/// (A_{N-1}, A_N) is corrected by the least-squares solution of
/// (Ad(a_{N-1}) - 1 | Ad(a_N) - 1) D = -mu. For N = 1 the algebra element is
/// projected onto the centralizer of a_1.
inline PhasePoint sample_mu0(int n, std::uint64_t seed, const Mu0SamplerOptions& opt = {}) {
  if (n < 1) throw InvalidParams("sample_mu0 requires N >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    PhasePoint p;
    for (int i = 0; i < n; ++i) {
      p.a.push_back(sample_su2(rng));
      p.A.push_back(sample_su2_algebra(rng, opt.algebra_bound));
    }
    if (n == 1) {
      // a = cos t 1 + sin t u with u in su(2); A must be a multiple of u.
      const MatrixC2& m = p.a[0].matrix();
      const auto axis = Su2AlgebraElement::unchecked((m - m.dagger()) * Complex(0.5));
      const double len = su2_norm(axis);
      if (len < 1e-8) return p;  // a = +-1 commutes with everything
      const double along = su2_inner(axis, p.A[0]) / len;
      p.A[0] = (along / len) * axis;
    } else {
      const Matrix3 id = Matrix3::Identity();
      Eigen::Matrix<double, 3, 6> sys;
      sys.leftCols<3>() = adjoint_rep(p.a[n - 2]) - id;
      sys.rightCols<3>() = adjoint_rep(p.a[n - 1]) - id;
      Eigen::JacobiSVD<Eigen::Matrix<double, 3, 6>> svd(sys, Eigen::ComputeFullU | Eigen::ComputeFullV);
      svd.setThreshold(1e-8);
      if (svd.rank() < 3) continue;
      const Vector3 rhs = -momentum_map(p).coords();
      const Eigen::Matrix<double, 6, 1> delta = svd.solve(rhs);
      p.A[n - 2] = p.A[n - 2] + Su2AlgebraElement::from_coords(delta.head<3>());
      p.A[n - 1] = p.A[n - 1] + Su2AlgebraElement::from_coords(delta.tail<3>());
    }
    if (su2_norm(momentum_map(p)) <= opt.tolerance) return p;
  }
  throw SolveFailed("could not satisfy mu = 0 within the retry cap");
}

/// Random point of T^N x t^N (diagonal a_i and A_i), never in Z^N x {0}^N.
inline PhasePoint sample_diagonal_sector(int n, std::uint64_t seed, double algebra_bound = 1.0) {
  if (n < 1) throw InvalidParams("sample_diagonal_sector requires N >= 1");
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::uniform_real_distribution<double> coord(-algebra_bound, algebra_bound);
  PhasePoint p;
  for (int i = 0; i < n; ++i) {
    double th = angle(rng);
    if (i == 0) th = 0.25 + 2.5 * (th + M_PI) / (2 * M_PI);  // keeps a_1 away from +-1
    const Complex z = std::polar(1.0, th);
    p.a.push_back(SU2Element::unchecked(MatrixC2::diag(z, std::conj(z))));
    p.A.push_back(Su2AlgebraElement::from_coords(Vector3(0.0, 0.0, coord(rng))));
  }
  return p;
}

/// Kaehler potential sum_i |A_i|^2.
inline double kaehler_potential(const std::vector<Su2AlgebraElement>& as) {
  double k = 0.0;
  for (const auto& a : as) k += su2_inner(a, a);
  return k;
}

/// sqrt(det(sin(ad A) / ad A)) from the spectrum of the 3x3 ad matrix.
/// ad(A) is skew-symmetric with eigenvalues 0, +-i w, w^2 = |ad A|_F^2 / 2,
/// and sin(x)/x at x = +-i w equals sinh(w)/w, so the root is sinh(w)/w.
inline double half_form_factor(const Su2AlgebraElement& a) {
  const Matrix3 ad = ad_matrix(a);
  const double w = std::sqrt(0.5 * ad.squaredNorm());
  if (w < 1e-4) return 1.0 + w * w / 6.0 + w * w * w * w / 120.0;
  return std::sinh(w) / w;
}

struct DensityTerms {
  double kappa = 0.0;
  double eta = 1.0;
  double density = 1.0;
};

/// Density e^{-kappa/hbar} eta of the half-form measure at g_i = a_i exp(i A_i).
/// The flat Liouville factor is not included.
inline DensityTerms measure_density(const std::vector<SL2CElement<Complex>>& gs, double hbar,
                                    const Tolerance& tol = {}) {
  if (!(hbar > 0)) throw InvalidParams("hbar must be positive");
  std::vector<Su2AlgebraElement> as;
  DensityTerms out;
  for (const auto& g : gs) {
    auto [u, a] = polar_decompose(g, tol);
    out.eta *= half_form_factor(a);
    as.push_back(a);
  }
  out.kappa = kaehler_potential(as);
  out.density = std::exp(-out.kappa / hbar) * out.eta;
  return out;
}

}  // namespace orbitstrata::lattice

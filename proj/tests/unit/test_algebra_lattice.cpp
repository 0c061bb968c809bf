#include <gtest/gtest.h>

#include <sstream>

#include "../oracles/oracles.hpp"

using namespace orbitstrata;
using namespace orbitstrata::lattice;

namespace {

const Complex I1(0.0, 1.0);

double dist(const MatrixC2& a, const MatrixC2& b) { return (a - b).norm(); }

}  // namespace

// ---- matrices -------------------------------------------------------------

TEST(Matrix2, TraceDetCommutatorBasics) {
  EXPECT_EQ(MatrixQ2::identity().trace(), GaussianRational(2));
  Rng rng(1);
  const auto a = sample_exact_sl2c(rng).matrix();
  EXPECT_EQ(commutator(a, a), MatrixQ2::zero());
  const auto b = sample_exact_sl2c(rng).matrix();
  EXPECT_EQ(commutator(a, b), -commutator(b, a));
  const GaussianRational alpha(make_rational(3, 2));
  EXPECT_EQ(MatrixQ2::diag(alpha, GaussianRational(1) / alpha).det(), GaussianRational(1));
}

TEST(Matrix2, SingularInverseThrows) {
  const MatrixQ2 s(1, 2, 2, 4);
  EXPECT_THROW(s.inverse(), SingularMatrix);
  const MatrixC2 f(1.0, 2.0, 2.0, 4.0);
  EXPECT_THROW(f.inverse(), SingularMatrix);
}

TEST(Matrix2, ExactAssociativityAndTraceCyclicity) {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto a = sample_exact_sl2c(rng).matrix();
    const auto b = sample_exact_sl2c(rng).matrix();
    const auto c = sample_exact_sl2c(rng).matrix();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).trace(), (b * a).trace());
    EXPECT_EQ(a * a.inverse(), MatrixQ2::identity());
  }
}

TEST(Scalar, RationalParsing) {
  EXPECT_EQ(*parse_rational("-3/4"), make_rational(-3, 4));
  EXPECT_EQ(*parse_rational(" 7 "), Rational(7));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("1.5"));
  EXPECT_FALSE(parse_rational(""));
  EXPECT_EQ(*rational_sqrt(make_rational(9, 4)), make_rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2)));
}

TEST(Scalar, GaussianSqrt) {
  const GaussianRational z(Rational(3), Rational(4));  // (2 + i)^2
  const auto r = gaussian_sqrt(z);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, z);
  EXPECT_FALSE(gaussian_sqrt(GaussianRational(2)));
  const auto m = gaussian_sqrt(GaussianRational(-4));
  ASSERT_TRUE(m);
  EXPECT_EQ(*m * *m, GaussianRational(-4));
}

// ---- Lie primitives -------------------------------------------------------

TEST(Lie, ExpZeroAndDiagonal) {
  EXPECT_LT(dist(su2_exp(Su2AlgebraElement::unchecked(MatrixC2::zero())).matrix(), MatrixC2::identity()), 1e-15);
  const auto a = Su2AlgebraElement::from_matrix(MatrixC2::diag(I1 * M_PI / 2.0, -I1 * M_PI / 2.0));
  EXPECT_LT(dist(su2_exp(a).matrix(), MatrixC2::diag(I1, -I1)), 1e-12);
}

TEST(Lie, ExpMatchesPowerSeries) {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const auto a = sample_su2_algebra(rng, 2.0);
    EXPECT_LT(dist(su2_exp(a).matrix(), oracle::exp_series(a.matrix(), 30)), 1e-12);
  }
}

TEST(Lie, BasisCoordinatesMatchPauliReadout) {
  Rng rng(12);
  for (int k = 0; k < 50; ++k) {
    const auto a = sample_su2_algebra(rng, 3.0);
    EXPECT_LT((a.coords() - oracle::pauli_coords(a.matrix())).norm(), 1e-12);
    EXPECT_NEAR(su2_inner(a, a), oracle::pauli_coords(a.matrix()).squaredNorm(), 1e-12);
  }
}

TEST(Lie, PolarComposeDecompose) {
  const auto id = polar_compose(SU2Element::identity(), Su2AlgebraElement::unchecked(MatrixC2::zero()));
  EXPECT_LT(dist(id.matrix(), MatrixC2::identity()), 1e-15);

  const auto g = SL2CElement<Complex>::from_matrix(MatrixC2::diag(2.0, 0.5));
  const auto [u, a] = polar_decompose(g);
  EXPECT_LT(dist(u.matrix(), MatrixC2::identity()), 1e-12);
  // i A = diag(ln 2, -ln 2)
  EXPECT_LT(dist(a.matrix() * I1, MatrixC2::diag(std::log(2.0), -std::log(2.0))), 1e-12);

  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const auto h = sample_sl2c(rng, 10.0);
    const auto [v, b] = polar_decompose(h);
    EXPECT_LT(dist(polar_compose(v, b).matrix(), h.matrix()), 1e-10);
  }
  EXPECT_THROW(polar_decompose(SL2CElement<Complex>::unchecked(MatrixC2::diag(2.0, 2.0))), NotUnimodular);
}

TEST(Lie, AdjointAndAd) {
  EXPECT_LT((adjoint_rep(SU2Element::identity()) - Matrix3::Identity()).norm(), 1e-15);
  EXPECT_LT(ad_matrix(Su2AlgebraElement::unchecked(MatrixC2::zero())).norm(), 1e-15);
  Rng rng(14);
  for (int k = 0; k < 100; ++k) {
    const auto a = sample_su2_algebra(rng, 3.0);
    const Matrix3 ad = ad_matrix(a);
    EXPECT_LT((ad + ad.transpose()).norm(), 1e-12);
    const Matrix3 big = adjoint_rep(su2_exp(a));
    EXPECT_LT((big - oracle::exp_series(ad, 40)).norm(), 1e-10);
    EXPECT_NEAR(big.determinant(), 1.0, 1e-12);
    EXPECT_LT((big.transpose() * big - Matrix3::Identity()).norm(), 1e-12);
  }
}

TEST(Sample, DeterministicAndValid) {
  Rng r1(99), r2(99);
  for (int k = 0; k < 20; ++k) {
    const auto g1 = sample_su2(r1);
    const auto g2 = sample_su2(r2);
    EXPECT_EQ(g1.matrix(), g2.matrix());
    EXPECT_LT(dist(g1.matrix().dagger() * g1.matrix(), MatrixC2::identity()), 1e-12);
    const auto s = sample_sl2c(r1, 5.0);
    sample_sl2c(r2, 5.0);
    EXPECT_LT(std::abs(s.matrix().det() - 1.0), 1e-12);
    EXPECT_EQ(sample_exact_sl2c(r1).matrix().det(), GaussianRational(1));
    sample_exact_sl2c(r2);
  }
}

TEST(JsonIo, MatrixRoundTrip) {
  Rng rng(5);
  const auto m = sample_exact_sl2c(rng).matrix();
  EXPECT_EQ(json_io::decode_matrix<GaussianRational>(json_io::encode(m)), m);
  const auto f = sample_sl2c(rng, 3.0).matrix();
  EXPECT_EQ(json_io::decode_matrix<Complex>(json_io::encode(f)), f);
  EXPECT_THROW(json_io::decode_matrix<Complex>(nlohmann::json::array()), ParseError);
}

// ---- lattice --------------------------------------------------------------

TEST(Lattice, RectangularCounts) {
  const auto l22 = build_rect_lattice({2, 2}, false);
  EXPECT_EQ(l22.num_sites(), 4);
  EXPECT_EQ(l22.num_links(), 4);
  EXPECT_EQ(l22.num_plaquettes(), 1);
  EXPECT_EQ(l22.tree().size(), 3u);
  EXPECT_EQ(l22.num_off_tree(), 1);

  const auto l33 = build_rect_lattice({3, 3}, false);
  EXPECT_EQ(l33.num_sites(), 9);
  EXPECT_EQ(l33.num_links(), 12);
  EXPECT_EQ(l33.num_plaquettes(), 4);
  EXPECT_EQ(l33.num_off_tree(), 4);

  const auto l11 = build_rect_lattice({1, 1}, false);
  EXPECT_EQ(l11.num_sites(), 1);
  EXPECT_EQ(l11.num_links(), 0);
  EXPECT_EQ(l11.num_off_tree(), 0);

  const auto torus = build_rect_lattice({3, 3}, true);
  EXPECT_EQ(torus.num_off_tree(), torus.num_links() - torus.num_sites() + 1);
  EXPECT_THROW(build_rect_lattice({0, 2}, false), InvalidDims);
  EXPECT_THROW(build_rect_lattice({1, 3}, true), InvalidDims);
}

TEST(Lattice, JsonRoundTripAndValidation) {
  const auto lat = build_rect_lattice({3, 2}, false);
  EXPECT_EQ(lattice_from_json(to_json(lat)), lat);
  auto bad = to_json(lat);
  bad["tree"].erase(bad["tree"].begin());
  EXPECT_THROW(lattice_from_json(bad), InvalidLattice);
  EXPECT_EQ(parse_lattice_spec("3x3"), build_rect_lattice({3, 3}, false));
  EXPECT_THROW(parse_lattice_spec("3xq"), InvalidDims);
}

TEST(Gauge, ActionAxioms) {
  const auto lat = build_rect_lattice({3, 3}, false);
  Rng rng(21);
  const auto a = random_config(lat, rng);
  const auto id = constant_transform(lat, SU2Element::identity());
  const auto same = apply_gauge(lat, a, id);
  for (int l = 0; l < lat.num_links(); ++l) EXPECT_LT(dist(same.values[l].matrix(), a.values[l].matrix()), 1e-15);

  // Right action: (a.g).h = a.(hg).
  const auto g = random_transform(lat, rng);
  const auto h = random_transform(lat, rng);
  const auto lhs = apply_gauge(lat, apply_gauge(lat, a, g), h);
  const auto rhs = apply_gauge(lat, a, compose(h, g));
  for (int l = 0; l < lat.num_links(); ++l) EXPECT_LT(dist(lhs.values[l].matrix(), rhs.values[l].matrix()), 1e-12);

  // Constant g conjugates plaquette holonomies.
  const SU2Element c = sample_su2(rng);
  const auto ac = apply_gauge(lat, a, constant_transform(lat, c));
  for (int p = 0; p < lat.num_plaquettes(); ++p) {
    const auto want = c * plaquette_holonomy(lat, a, p) * c.inverse();
    EXPECT_LT(dist(plaquette_holonomy(lat, ac, p).matrix(), want.matrix()), 1e-12);
  }
  GaugeConfig short_cfg{{SU2Element::identity()}};
  EXPECT_THROW(apply_gauge(lat, short_cfg, g), LatticeMismatch);
}

TEST(Gauge, TreeGaugeFix) {
  const auto lat = build_rect_lattice({3, 3}, false);
  Rng rng(22);
  const auto a = random_config(lat, rng);
  const auto res = tree_gauge_fix(lat, a);
  EXPECT_LT(dist(res.gauge.values[lat.basepoint()].matrix(), MatrixC2::identity()), 1e-15);
  const auto fixed = apply_gauge(lat, a, res.gauge);
  for (int l : lat.tree()) EXPECT_LT(dist(fixed.values[l].matrix(), MatrixC2::identity()), 1e-12);
  ASSERT_EQ(res.tuple.size(), 4u);

  // Retraction: fixing an already fixed configuration changes nothing.
  const auto again = tree_gauge_fix(lat, fixed);
  for (const auto& g : again.gauge.values) EXPECT_LT(dist(g.matrix(), MatrixC2::identity()), 1e-12);
  for (std::size_t k = 0; k < res.tuple.size(); ++k)
    EXPECT_LT(dist(again.tuple[k].matrix(), res.tuple[k].matrix()), 1e-12);

  // Pointed gauge transformations leave the tuple unchanged.
  auto h = random_transform(lat, rng);
  h.values[lat.basepoint()] = SU2Element::identity();
  const auto moved = tree_gauge_fix(lat, apply_gauge(lat, a, h));
  for (std::size_t k = 0; k < res.tuple.size(); ++k)
    EXPECT_LT(dist(moved.tuple[k].matrix(), res.tuple[k].matrix()), 1e-12);
}

TEST(Gauge, HolonomyAndEnergy) {
  const auto lat = build_rect_lattice({3, 3}, false);
  GaugeConfig one{std::vector<SU2Element>(12)};
  EXPECT_LT(dist(plaquette_holonomy(lat, one, 0).matrix(), MatrixC2::identity()), 1e-15);
  ElectricField zero{std::vector<Su2AlgebraElement>(12, Su2AlgebraElement::unchecked(MatrixC2::zero()))};
  const double g = 1.3, d = 0.7;
  // tr + conj tr = 4 per plaquette at the identity.
  EXPECT_NEAR(kogut_susskind_energy(lat, one, zero, g, d), -4.0 * 4 / (g * g * d), 1e-12);
  EXPECT_THROW(kogut_susskind_energy(lat, one, zero, 0.0, d), InvalidParams);

  Rng rng(23);
  const auto a = random_config(lat, rng);
  const auto e = random_electric(lat, rng, 1.5);
  const auto h = random_transform(lat, rng);
  const double e0 = kogut_susskind_energy(lat, a, e, g, d);
  EXPECT_NEAR(kogut_susskind_energy(lat, apply_gauge(lat, a, h), apply_gauge(lat, e, h), g, d), e0, 1e-9);
  for (int p = 0; p < lat.num_plaquettes(); ++p) {
    const auto fwd = holonomy(a, lat.plaquettes()[p]);
    const auto back = holonomy(a, reversed(lat.plaquettes()[p]));
    EXPECT_LT(dist(back.matrix(), fwd.inverse().matrix()), 1e-12);
  }
}

TEST(Phase, MomentumMap) {
  PhasePoint zero_section;
  Rng rng(31);
  for (int i = 0; i < 3; ++i) {
    zero_section.a.push_back(sample_su2(rng));
    zero_section.A.push_back(Su2AlgebraElement::unchecked(MatrixC2::zero()));
  }
  EXPECT_LT(su2_norm(momentum_map(zero_section)), 1e-15);
  EXPECT_LT(su2_norm(momentum_map(sample_diagonal_sector(4, 3))), 1e-14);

  PhasePoint p;
  for (int i = 0; i < 3; ++i) {
    p.a.push_back(sample_su2(rng));
    p.A.push_back(sample_su2_algebra(rng, 1.0));
  }
  const auto g = sample_su2(rng);
  const auto lhs = momentum_map(act(g, p));
  const auto rhs = adjoint_action(g, momentum_map(p));
  EXPECT_LT(dist(lhs.matrix(), rhs.matrix()), 1e-12);
}

TEST(Phase, SampleMu0) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = sample_mu0(4, seed);
    EXPECT_LE(su2_norm(momentum_map(p)), 1e-10);
    const auto single = sample_mu0(1, seed);
    EXPECT_LT(commutator(single.a[0].matrix(), single.A[0].matrix()).norm(), 1e-10);
  }
  EXPECT_THROW(sample_mu0(0, 1), InvalidParams);
}

TEST(Phase, HalfFormFactor) {
  EXPECT_EQ(half_form_factor(Su2AlgebraElement::unchecked(MatrixC2::zero())), 1.0);
  Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    const auto a = sample_su2_algebra(rng, 1.0);
    EXPECT_NEAR(half_form_factor(a), oracle::eta_series(ad_matrix(a)), 1e-8);
    // Depends on |A| only.
    const auto b = adjoint_action(sample_su2(rng), a);
    EXPECT_NEAR(half_form_factor(a), half_form_factor(b), 1e-12);
  }
  const auto d = measure_density({SL2CElement<Complex>::from_matrix(MatrixC2::identity())}, 1.0);
  EXPECT_EQ(d.eta, 1.0);
  EXPECT_EQ(d.density, 1.0);
  EXPECT_THROW(measure_density({}, 0.0), InvalidParams);
}

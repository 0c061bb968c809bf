#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "orbitstrata/algebra/lie.hpp"
#include "orbitstrata/algebra/sample.hpp"
#include "orbitstrata/lattice/graph.hpp"

namespace orbitstrata::lattice {

/// One SU(2) element per link, indexed by link id.
struct GaugeConfig {
  std::vector<SU2Element> values;
};

/// One SU(2) element per site, indexed by site id.
struct GaugeTransform {
  std::vector<SU2Element> values;
};

/// Electric field: one su(2) element per link.
struct ElectricField {
  std::vector<Su2AlgebraElement> values;
};

inline void check_config(const LatticeGraph& lat, const GaugeConfig& a) {
  if (static_cast<int>(a.values.size()) != lat.num_links())
    throw LatticeMismatch("gauge configuration size does not match the number of links");
}

inline void check_transform(const LatticeGraph& lat, const GaugeTransform& g) {
  if (static_cast<int>(g.values.size()) != lat.num_sites())
    throw LatticeMismatch("gauge transformation size does not match the number of sites");
}

inline GaugeTransform constant_transform(const LatticeGraph& lat, const SU2Element& g) {
  return {std::vector<SU2Element>(static_cast<std::size_t>(lat.num_sites()), g)};
}

/// (a.g)(l) = g(x) a(l) g(y)^{-1} for l : x -> y.
/// Composition: (a.g).h = a.(hg) with (hg)(x) = h(x) g(x).
inline GaugeConfig apply_gauge(const LatticeGraph& lat, const GaugeConfig& a, const GaugeTransform& g) {
  check_config(lat, a);
  check_transform(lat, g);
  GaugeConfig out;
  out.values.reserve(a.values.size());
  for (int l = 0; l < lat.num_links(); ++l) {
    const auto& link = lat.links()[l];
    out.values.push_back(g.values[link.source] * a.values[l] * g.values[link.target].inverse());
  }
  return out;
}

/// E(l) -> Ad(g(y)) E(l) for l : x -> y (left trivialization).
inline ElectricField apply_gauge(const LatticeGraph& lat, const ElectricField& e, const GaugeTransform& g) {
  if (static_cast<int>(e.values.size()) != lat.num_links())
    throw LatticeMismatch("electric field size does not match the number of links");
  check_transform(lat, g);
  ElectricField out;
  for (int l = 0; l < lat.num_links(); ++l)
    out.values.push_back(adjoint_action(g.values[lat.links()[l].target], e.values[l]));
  return out;
}

/// Pointwise product (hg)(x) = h(x) g(x).
inline GaugeTransform compose(const GaugeTransform& h, const GaugeTransform& g) {
  GaugeTransform out;
  for (std::size_t i = 0; i < g.values.size(); ++i) out.values.push_back(h.values[i] * g.values[i]);
  return out;
}

struct TreeGaugeResult {
  std::vector<SU2Element> tuple;  ///< off-tree values of a.g, in off-tree order
  GaugeTransform gauge;           ///< g with g(x0) = 1 and (a.g)(l) = 1 on the tree
};

/// Tree gauge fixing: propagates g(y) = g(x) a(l) along tree links x -> y
/// (and g(x) = g(y) a(l)^{-1} when a tree link is walked backwards).
inline TreeGaugeResult tree_gauge_fix(const LatticeGraph& lat, const GaugeConfig& a) {
  check_config(lat, a);
  std::vector<SU2Element> g(static_cast<std::size_t>(lat.num_sites()));
  std::vector<bool> known(static_cast<std::size_t>(lat.num_sites()), false);
  known[lat.basepoint()] = true;
  for (LinkId l : lat.tree_traversal()) {
    const auto& link = lat.links()[l];
    if (known[link.source]) {
      g[link.target] = g[link.source] * a.values[l];
      known[link.target] = true;
    } else {
      g[link.source] = g[link.target] * a.values[l].inverse();
      known[link.source] = true;
    }
  }
  TreeGaugeResult res;
  res.gauge.values = std::move(g);
  for (LinkId l : lat.off_tree()) {
    const auto& link = lat.links()[l];
    res.tuple.push_back(res.gauge.values[link.source] * a.values[l] * res.gauge.values[link.target].inverse());
  }
  return res;
}

/// Ordered boundary product; reversed links contribute their inverse.
inline SU2Element holonomy(const GaugeConfig& a, const Plaquette& p) {
  SU2Element h;
  for (const auto& e : p) h = h * (e.dir > 0 ? a.values[e.link] : a.values[e.link].inverse());
  return h;
}

inline SU2Element plaquette_holonomy(const LatticeGraph& lat, const GaugeConfig& a, int plaquette) {
  check_config(lat, a);
  if (plaquette < 0 || plaquette >= lat.num_plaquettes()) throw InvalidParams("plaquette id out of range");
  return holonomy(a, lat.plaquettes()[plaquette]);
}

/// The same boundary traversed in the opposite sense.
inline Plaquette reversed(const Plaquette& p) {
  Plaquette out(p.rbegin(), p.rend());
  for (auto& e : out) e.dir = -e.dir;
  return out;
}

/// Kogut-Susskind energy (g^2 / 2d) sum |E(l)|^2 - (1 / g^2 d) sum (tr a(p) + conj tr a(p)).
inline double kogut_susskind_energy(const LatticeGraph& lat, const GaugeConfig& a, const ElectricField& e,
                                    double coupling, double spacing) {
  if (!(coupling > 0) || !(spacing > 0)) throw InvalidParams("coupling and spacing must be positive");
  check_config(lat, a);
  if (static_cast<int>(e.values.size()) != lat.num_links())
    throw LatticeMismatch("electric field size does not match the number of links");
  double electric = 0.0;
  for (const auto& x : e.values) electric += su2_inner(x, x);
  double magnetic = 0.0;
  for (const auto& p : lat.plaquettes()) magnetic += 2.0 * holonomy(a, p).matrix().trace().real();
  const double g2 = coupling * coupling;
  return g2 / (2.0 * spacing) * electric - magnetic / (g2 * spacing);
}

inline GaugeConfig random_config(const LatticeGraph& lat, Rng& rng) {
  GaugeConfig a;
  for (int l = 0; l < lat.num_links(); ++l) a.values.push_back(sample_su2(rng));
  return a;
}

inline GaugeTransform random_transform(const LatticeGraph& lat, Rng& rng) {
  GaugeTransform g;
  for (int s = 0; s < lat.num_sites(); ++s) g.values.push_back(sample_su2(rng));
  return g;
}

inline ElectricField random_electric(const LatticeGraph& lat, Rng& rng, double bound) {
  ElectricField e;
  for (int l = 0; l < lat.num_links(); ++l) e.values.push_back(sample_su2_algebra(rng, bound));
  return e;
}

}  // namespace orbitstrata::lattice

#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "orbitstrata/errors.hpp"

namespace orbitstrata::lattice {

using SiteId = int;
using LinkId = int;

struct Link {
  SiteId source;
  SiteId target;
  friend bool operator==(const Link&, const Link&) = default;
};

/// One boundary edge of a plaquette: traversed along (+1) or against (-1)
/// the link's stored orientation.
struct PlaquetteEdge {
  LinkId link;
  int dir;
  friend bool operator==(const PlaquetteEdge&, const PlaquetteEdge&) = default;
};

using Plaquette = std::vector<PlaquetteEdge>;

/// Finite oriented lattice with a spanning tree. Construct through
/// LatticeGraph::make (validated) or build_rect_lattice.
class LatticeGraph {
 public:
  static LatticeGraph make(int sites, std::vector<Link> links, std::vector<Plaquette> plaquettes,
                           std::vector<LinkId> tree, SiteId basepoint);

  int num_sites() const { return sites_; }
  int num_links() const { return static_cast<int>(links_.size()); }
  int num_plaquettes() const { return static_cast<int>(plaquettes_.size()); }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
  const std::vector<LinkId>& tree() const { return tree_; }
  SiteId basepoint() const { return basepoint_; }
  bool in_tree(LinkId l) const { return in_tree_[static_cast<std::size_t>(l)]; }

  /// Off-tree links in increasing id order; position k is off-tree link k+1.
  const std::vector<LinkId>& off_tree() const { return off_tree_; }
  /// N = |links| - |sites| + 1.
  int num_off_tree() const { return static_cast<int>(off_tree_.size()); }

  /// Tree links ordered so that every link touches a site reached earlier,
  /// starting from the basepoint.
  const std::vector<LinkId>& tree_traversal() const { return traversal_; }

  friend bool operator==(const LatticeGraph& a, const LatticeGraph& b) {
    return a.sites_ == b.sites_ && a.links_ == b.links_ && a.plaquettes_ == b.plaquettes_ && a.tree_ == b.tree_ &&
           a.basepoint_ == b.basepoint_;
  }

 private:
  int sites_ = 0;
  std::vector<Link> links_;
  std::vector<Plaquette> plaquettes_;
  std::vector<LinkId> tree_;
  SiteId basepoint_ = 0;
  std::vector<bool> in_tree_;
  std::vector<LinkId> off_tree_;
  std::vector<LinkId> traversal_;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

inline LatticeGraph LatticeGraph::make(int sites, std::vector<Link> links, std::vector<Plaquette> plaquettes,
                                       std::vector<LinkId> tree, SiteId basepoint) {
  if (sites < 1) throw InvalidLattice("lattice needs at least one site");
  if (basepoint < 0 || basepoint >= sites) throw InvalidLattice("basepoint out of range");
  const int nl = static_cast<int>(links.size());
  for (const auto& l : links)
    if (l.source < 0 || l.source >= sites || l.target < 0 || l.target >= sites)
      throw InvalidLattice("link endpoint out of range");

  detail::UnionFind all(sites);
  for (const auto& l : links) all.unite(l.source, l.target);
  for (int s = 0; s < sites; ++s)
    if (all.find(s) != all.find(0)) throw InvalidLattice("lattice graph is not connected");

  std::sort(tree.begin(), tree.end());
  if (std::adjacent_find(tree.begin(), tree.end()) != tree.end()) throw InvalidLattice("duplicate tree link");
  if (static_cast<int>(tree.size()) != sites - 1) throw InvalidLattice("tree must have |sites| - 1 links");
  detail::UnionFind forest(sites);
  for (LinkId t : tree) {
    if (t < 0 || t >= nl) throw InvalidLattice("tree link out of range");
    if (!forest.unite(links[t].source, links[t].target)) throw InvalidLattice("tree contains a cycle");
  }

  for (const auto& p : plaquettes) {
    if (p.empty()) throw InvalidLattice("empty plaquette");
    auto start = [&](const PlaquetteEdge& e) {
      return e.dir > 0 ? links[e.link].source : links[e.link].target;
    };
    auto end = [&](const PlaquetteEdge& e) {
      return e.dir > 0 ? links[e.link].target : links[e.link].source;
    };
    for (const auto& e : p) {
      if (e.link < 0 || e.link >= nl) throw InvalidLattice("plaquette link out of range");
      if (e.dir != 1 && e.dir != -1) throw InvalidLattice("plaquette direction must be +1 or -1");
    }
    for (std::size_t k = 0; k < p.size(); ++k)
      if (end(p[k]) != start(p[(k + 1) % p.size()])) throw InvalidLattice("plaquette boundary is not a closed cycle");
  }

  LatticeGraph g;
  g.sites_ = sites;
  g.links_ = std::move(links);
  g.plaquettes_ = std::move(plaquettes);
  g.tree_ = std::move(tree);
  g.basepoint_ = basepoint;
  g.in_tree_.assign(static_cast<std::size_t>(nl), false);
  for (LinkId t : g.tree_) g.in_tree_[t] = true;
  for (LinkId l = 0; l < nl; ++l)
    if (!g.in_tree_[l]) g.off_tree_.push_back(l);

  // BFS over tree links from the basepoint, visiting incident links by id.
  std::vector<std::vector<LinkId>> incident(static_cast<std::size_t>(sites));
  for (LinkId t : g.tree_) {
    incident[g.links_[t].source].push_back(t);
    incident[g.links_[t].target].push_back(t);
  }
  std::vector<bool> seen(static_cast<std::size_t>(sites), false);
  std::queue<SiteId> queue;
  queue.push(basepoint);
  seen[basepoint] = true;
  while (!queue.empty()) {
    const SiteId x = queue.front();
    queue.pop();
    for (LinkId t : incident[x]) {
      const SiteId y = g.links_[t].source == x ? g.links_[t].target : g.links_[t].source;
      if (seen[y]) continue;
      seen[y] = true;
      g.traversal_.push_back(t);
      queue.push(y);
    }
  }
  return g;
}

/// Hypercubic lattice with the given extents. Sites are numbered with axis 0
/// fastest; links are emitted per site in axis order; plaquettes are
/// counterclockwise in each (mu, nu) plane with mu < nu. The tree is the BFS
/// tree from the origin over links in id order.
inline LatticeGraph build_rect_lattice(const std::vector<int>& dims, bool periodic) {
  if (dims.empty()) throw InvalidDims("at least one extent required");
  for (int d : dims) {
    if (d < 1) throw InvalidDims("extents must be >= 1");
    if (periodic && d < 2) throw InvalidDims("periodic axes need extent >= 2");
  }
  const int nd = static_cast<int>(dims.size());
  std::vector<int> stride(nd, 1);
  for (int a = 1; a < nd; ++a) stride[a] = stride[a - 1] * dims[a - 1];
  const int nsites = stride[nd - 1] * dims[nd - 1];

  auto coord = [&](int s, int a) { return (s / stride[a]) % dims[a]; };
  // Neighbour in direction +a, or -1 if it leaves an open boundary.
  auto step = [&](int s, int a) {
    const int c = coord(s, a);
    if (c + 1 < dims[a]) return s + stride[a];
    if (periodic) return s - c * stride[a];
    return -1;
  };

  std::vector<Link> links;
  std::vector<std::vector<int>> link_at(static_cast<std::size_t>(nsites), std::vector<int>(nd, -1));
  for (int s = 0; s < nsites; ++s)
    for (int a = 0; a < nd; ++a) {
      const int t = step(s, a);
      if (t < 0) continue;
      link_at[s][a] = static_cast<int>(links.size());
      links.push_back({s, t});
    }

  std::vector<Plaquette> plaquettes;
  for (int s = 0; s < nsites; ++s)
    for (int mu = 0; mu < nd; ++mu)
      for (int nu = mu + 1; nu < nd; ++nu) {
        const int l1 = link_at[s][mu];
        const int l4 = link_at[s][nu];
        if (l1 < 0 || l4 < 0) continue;
        const int l2 = link_at[step(s, mu)][nu];
        const int l3 = link_at[step(s, nu)][mu];
        if (l2 < 0 || l3 < 0) continue;
        plaquettes.push_back({{l1, 1}, {l2, 1}, {l3, -1}, {l4, -1}});
      }

  // BFS spanning tree over all links.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(nsites));
  for (int l = 0; l < static_cast<int>(links.size()); ++l) {
    incident[links[l].source].push_back(l);
    incident[links[l].target].push_back(l);
  }
  for (auto& v : incident) std::sort(v.begin(), v.end());
  std::vector<bool> seen(static_cast<std::size_t>(nsites), false);
  std::vector<LinkId> tree;
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    for (int l : incident[x]) {
      const int y = links[l].source == x ? links[l].target : links[l].source;
      if (seen[y]) continue;
      seen[y] = true;
      tree.push_back(l);
      queue.push(y);
    }
  }
  return LatticeGraph::make(nsites, std::move(links), std::move(plaquettes), std::move(tree), 0);
}

/// Parses "LxW[x...][,periodic]".
inline LatticeGraph parse_lattice_spec(const std::string& text) {
  std::string dims_part = text;
  bool periodic = false;
  if (const auto comma = text.find(','); comma != std::string::npos) {
    dims_part = text.substr(0, comma);
    const std::string flag = text.substr(comma + 1);
    if (flag != "periodic") throw InvalidDims("unknown lattice flag '" + flag + "'");
    periodic = true;
  }
  std::vector<int> dims;
  std::size_t pos = 0;
  while (pos <= dims_part.size()) {
    const auto x = dims_part.find('x', pos);
    const std::string tok = dims_part.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidDims("malformed lattice extents '" + dims_part + "'");
    dims.push_back(std::stoi(tok));
    if (x == std::string::npos) break;
    pos = x + 1;
  }
  return build_rect_lattice(dims, periodic);
}

inline nlohmann::json to_json(const LatticeGraph& g) {
  nlohmann::json links = nlohmann::json::array();
  for (const auto& l : g.links()) links.push_back({l.source, l.target});
  nlohmann::json plaquettes = nlohmann::json::array();
  for (const auto& p : g.plaquettes()) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : p) edges.push_back({{"link", e.link}, {"dir", e.dir}});
    plaquettes.push_back(edges);
  }
  return {{"sites", g.num_sites()},
          {"links", links},
          {"plaquettes", plaquettes},
          {"tree", g.tree()},
          {"basepoint", g.basepoint()}};
}

inline LatticeGraph lattice_from_json(const nlohmann::json& j) {
  try {
    std::vector<Link> links;
    for (const auto& l : j.at("links")) links.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
    std::vector<Plaquette> plaquettes;
    for (const auto& p : j.value("plaquettes", nlohmann::json::array())) {
      Plaquette pl;
      for (const auto& e : p) pl.push_back({e.at("link").get<int>(), e.at("dir").get<int>()});
      plaquettes.push_back(std::move(pl));
    }
    return LatticeGraph::make(j.at("sites").get<int>(), std::move(links), std::move(plaquettes),
                              j.at("tree").get<std::vector<int>>(), j.value("basepoint", 0));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("lattice JSON: ") + e.what());
  }
}

}  // namespace orbitstrata::lattice

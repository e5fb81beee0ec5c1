#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ultratree/duality.hpp"
#include "ultratree/error.hpp"
#include "ultratree/graph.hpp"
#include "ultratree/metric.hpp"
#include "ultratree/rational.hpp"
#include "ultratree/representing.hpp"

namespace ultratree {

enum class IsoFlavor { Free, Rooted, VertexLabeled, EdgeWeighted, RootedLabeled, RootedWeighted };

inline std::string_view to_string(IsoFlavor f) {
  switch (f) {
    case IsoFlavor::Free: return "free";
    case IsoFlavor::Rooted: return "rooted";
    case IsoFlavor::VertexLabeled: return "vlabel";
    case IsoFlavor::EdgeWeighted: return "eweight";
    case IsoFlavor::RootedLabeled: return "rlabel";
    case IsoFlavor::RootedWeighted: return "rweight";
  }
  return "free";
}

inline IsoFlavor parse_iso_flavor(std::string_view text) {
  for (auto f : {IsoFlavor::Free, IsoFlavor::Rooted, IsoFlavor::VertexLabeled, IsoFlavor::EdgeWeighted,
                 IsoFlavor::RootedLabeled, IsoFlavor::RootedWeighted}) {
    if (to_string(f) == text) return f;
  }
  throw ParseError("unknown isomorphism flavor '" + std::string(text) + "'");
}

inline bool is_rooted(IsoFlavor f) {
  return f == IsoFlavor::Rooted || f == IsoFlavor::RootedLabeled || f == IsoFlavor::RootedWeighted;
}
inline bool uses_labels(IsoFlavor f) { return f == IsoFlavor::VertexLabeled || f == IsoFlavor::RootedLabeled; }
inline bool uses_weights(IsoFlavor f) { return f == IsoFlavor::EdgeWeighted || f == IsoFlavor::RootedWeighted; }

// Optional payloads attached to a tree or graph. Which ones must be present
// depends on the flavor.
struct Decoration {
  std::optional<Vertex> root;
  std::optional<LabelFn> labels;
  std::optional<WeightFn> weights;
};

// Printable, totally ordered code. Layout: schema version '1', one flavor
// letter, ':', then the nested encoding. A vertex is "(" + "<label>" (labeled
// flavors) + its sorted child items + ")"; a child item is "[weight]" (weighted
// flavors) followed by the child's encoding.
struct CanonicalCode {
  std::string text;

  auto operator<=>(const CanonicalCode&) const = default;
};

namespace detail {

inline char flavor_letter(IsoFlavor f) {
  switch (f) {
    case IsoFlavor::Free: return 'F';
    case IsoFlavor::Rooted: return 'R';
    case IsoFlavor::VertexLabeled: return 'V';
    case IsoFlavor::EdgeWeighted: return 'E';
    case IsoFlavor::RootedLabeled: return 'L';
    case IsoFlavor::RootedWeighted: return 'W';
  }
  return '?';
}

inline std::string rooted_encoding(const Tree& t, const Vertex& root, const LabelFn* labels,
                                   const WeightFn* weights) {
  const RootedTree rt(t, root);
  std::map<Vertex, std::string> enc;
  const auto& order = rt.top_down();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex& v = *it;
    std::vector<std::string> items;
    for (const auto& c : rt.children(v)) {
      std::string item;
      if (weights) item += "[" + to_string(weights->at(make_edge(v, c))) + "]";
      item += enc.at(c);
      items.push_back(std::move(item));
    }
    std::sort(items.begin(), items.end());
    std::string code = "(";
    if (labels) code += "<" + to_string(labels->at(v)) + ">";
    for (auto& item : items) code += item;
    code += ")";
    for (const auto& c : rt.children(v)) enc.erase(c);
    enc[v] = std::move(code);
  }
  return enc.at(root);
}

}  // namespace detail

inline CanonicalCode canonical_code(const Tree& t, IsoFlavor flavor, const Decoration& dec = {}) {
  const LabelFn* labels = nullptr;
  const WeightFn* weights = nullptr;
  if (uses_labels(flavor)) {
    if (!dec.labels) throw Error("missing-payload-for-flavor", "flavor needs vertex labels");
    require_total(t.graph(), *dec.labels);
    labels = &*dec.labels;
  }
  if (uses_weights(flavor)) {
    if (!dec.weights) throw Error("missing-payload-for-flavor", "flavor needs edge weights");
    require_total(t.graph(), *dec.weights);
    weights = &*dec.weights;
  }
  std::string prefix = std::string("1") + detail::flavor_letter(flavor) + ":";
  if (is_rooted(flavor)) {
    if (!dec.root) throw Error("missing-payload-for-flavor", "flavor needs a root");
    require_vertex(t.graph(), *dec.root);
    return {prefix + detail::rooted_encoding(t, *dec.root, labels, weights)};
  }
  std::optional<std::string> best;
  for (const auto& c : tree_centers(t)) {
    std::string code = detail::rooted_encoding(t, c, labels, weights);
    if (!best || code < *best) best = std::move(code);
  }
  return {prefix + *best};
}

inline CanonicalCode canonical_code(const RootedTree& rt, IsoFlavor flavor, Decoration dec = {}) {
  if (!dec.root) dec.root = rt.root();
  return canonical_code(rt.tree(), flavor, dec);
}

// RootedLabeled code of a labeled rooted tree such as a representing tree.
inline CanonicalCode canonical_code(const LabeledRootedTree& t) {
  return canonical_code(t.tree, IsoFlavor::RootedLabeled, Decoration{t.tree.root(), t.labels, std::nullopt});
}

inline bool are_isomorphic(const Tree& t1, const Decoration& d1, const Tree& t2, const Decoration& d2,
                           IsoFlavor flavor) {
  return canonical_code(t1, flavor, d1) == canonical_code(t2, flavor, d2);
}

// Whether f is a bijection V(g1) -> V(g2) preserving adjacency both ways and
// every payload present in d1/d2.
inline bool is_isomorphism(const Graph& g1, const Decoration& d1, const Graph& g2, const Decoration& d2,
                           const std::map<Vertex, Vertex>& f) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  if (f.size() != g1.vertex_count()) return false;
  std::set<Vertex> image;
  for (const auto& v : g1.vertices()) {
    auto it = f.find(v);
    if (it == f.end() || !g2.contains(it->second) || !image.insert(it->second).second) return false;
    if (d1.labels && d2.labels && d1.labels->at(v) != d2.labels->at(it->second)) return false;
  }
  if (d1.root && d2.root && f.at(*d1.root) != *d2.root) return false;
  for (const auto& e : g1.edges()) {
    const Vertex& a = f.at(e.first);
    const Vertex& b = f.at(e.second);
    if (!g2.adjacent(a, b)) return false;
    if (d1.weights && d2.weights && d1.weights->at(e) != d2.weights->at(make_edge(a, b))) return false;
  }
  return true;
}

inline constexpr std::size_t kGraphIsoLimit = 8;
inline constexpr std::size_t kIsometryLimit = 9;

// Isomorphism of graphs with optional labels and weights. Trees with at most
// one kind of payload go through canonical codes; everything else is a
// backtracking bijection search capped at kGraphIsoLimit vertices.
inline bool are_isomorphic_graphs(const Graph& g1, const Decoration& d1, const Graph& g2, const Decoration& d2) {
  if (d1.labels.has_value() != d2.labels.has_value() || d1.weights.has_value() != d2.weights.has_value()) {
    throw Error("missing-payload-for-flavor", "both graphs must carry the same payload kinds");
  }
  if (d1.labels) {
    require_total(g1, *d1.labels);
    require_total(g2, *d2.labels);
  }
  if (d1.weights) {
    require_total(g1, *d1.weights);
    require_total(g2, *d2.weights);
  }
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;

  if (is_tree(g1) && is_tree(g2) && !(d1.labels && d1.weights)) {
    IsoFlavor flavor = d1.labels ? IsoFlavor::VertexLabeled : d1.weights ? IsoFlavor::EdgeWeighted : IsoFlavor::Free;
    return are_isomorphic(Tree(g1), Decoration{std::nullopt, d1.labels, d1.weights}, Tree(g2),
                          Decoration{std::nullopt, d2.labels, d2.weights}, flavor);
  }
  if (g1.vertex_count() > kGraphIsoLimit) {
    throw Error("size-limit-exceeded", "general graph isomorphism is limited to 8 vertices");
  }

  const auto& vs1 = g1.vertices();
  const auto& vs2 = g2.vertices();
  std::map<Vertex, Vertex> f;
  std::set<Vertex> used;
  auto compatible = [&](const Vertex& v, const Vertex& u) {
    if (g1.degree(v) != g2.degree(u)) return false;
    if (d1.labels && d1.labels->at(v) != d2.labels->at(u)) return false;
    for (const auto& [a, b] : f) {
      if (g1.adjacent(v, a) != g2.adjacent(u, b)) return false;
      if (d1.weights && g1.adjacent(v, a) && d1.weights->at(make_edge(v, a)) != d2.weights->at(make_edge(u, b))) {
        return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == vs1.size()) return true;
    for (const auto& u : vs2) {
      if (used.count(u) || !compatible(vs1[i], u)) continue;
      f[vs1[i]] = u;
      used.insert(u);
      if (self(self, i + 1)) return true;
      f.erase(vs1[i]);
      used.erase(u);
    }
    return false;
  };
  return search(search, 0);
}

inline bool is_isometry(const FiniteMetricSpace& s1, const FiniteMetricSpace& s2, const std::map<Vertex, Vertex>& f) {
  if (s1.size() != s2.size() || f.size() != s1.size()) return false;
  std::set<Vertex> image;
  for (const auto& x : s1.points()) {
    auto it = f.find(x);
    if (it == f.end() || !s2.contains(it->second) || !image.insert(it->second).second) return false;
  }
  for (const auto& x : s1.points()) {
    for (const auto& y : s1.points()) {
      if (s1.distance(x, y) != s2.distance(f.at(x), f.at(y))) return false;
    }
  }
  return true;
}

// Distance-preserving bijection s1 -> s2 if any. Backtracking over points of
// s1 in order; a candidate image must have the same sorted distance row.
inline std::optional<std::map<Vertex, Vertex>> isometry_search(const FiniteMetricSpace& s1,
                                                              const FiniteMetricSpace& s2) {
  if (s1.size() > kIsometryLimit || s2.size() > kIsometryLimit) {
    throw Error("size-limit-exceeded", "isometry search is limited to 9 points");
  }
  if (s1.size() != s2.size()) return std::nullopt;
  const std::size_t n = s1.size();
  auto sorted_row = [](const FiniteMetricSpace& s, std::size_t i) {
    std::vector<Rational> row = s.matrix()[i];
    std::sort(row.begin(), row.end());
    return row;
  };
  std::vector<std::vector<Rational>> rows1(n);
  std::vector<std::vector<Rational>> rows2(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows1[i] = sorted_row(s1, i);
    rows2[i] = sorted_row(s2, i);
  }
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || rows1[i] != rows2[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = s1(i, k) == s2(j, image[k]);
      if (!ok) continue;
      image[i] = j;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::map<Vertex, Vertex> f;
  for (std::size_t i = 0; i < n; ++i) f[s1.points()[i]] = s2.points()[image[i]];
  return f;
}

// Ultrametric spaces are isometric exactly when their representing trees are
// isomorphic as labeled rooted trees.
inline bool ultrametric_isometric(const FiniteMetricSpace& s1, const FiniteMetricSpace& s2) {
  require_ultrametric(s1);
  require_ultrametric(s2);
  return canonical_code(representing_tree(s1)) == canonical_code(representing_tree(s2));
}

// Transposition of a leaf (out-degree 0) with its parent. It preserves d_l but
// moves a 0 label onto a positive one, so it is never a labeled isomorphism.
// Defaults to the smallest leaf.
inline std::map<Vertex, Vertex> leaf_swap_isometry(const RootedTree& rt, const LabelFn& l,
                                                   const std::optional<Vertex>& leaf = std::nullopt) {
  if (rt.vertex_count() < 2) throw Error("single-vertex-tree", "a swap needs at least two vertices");
  if (!check_monotone(rt, l)) throw Error("not-monotone", "labeling is not monotone");
  Vertex v;
  if (leaf) {
    require_vertex(rt.tree().graph(), *leaf);
    if (rt.out_degree(*leaf) != 0) throw Error("not-a-leaf", "vertex '" + *leaf + "' has successors");
    v = *leaf;
  } else {
    v = *degree_sets(rt).out0.begin();
  }
  const Vertex u = *rt.parent(v);
  std::map<Vertex, Vertex> f;
  for (const auto& x : rt.vertices()) f[x] = x;
  f[v] = u;
  f[u] = v;
  return f;
}

}  // namespace ultratree

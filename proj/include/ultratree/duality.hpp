#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ultratree/error.hpp"
#include "ultratree/graph.hpp"
#include "ultratree/metric.hpp"
#include "ultratree/rational.hpp"

namespace ultratree {

// Rooted tree with a strictly positive weight under which every vertex of
// out-degree 0 lies at the same distance `height` (the constant K) from the
// root.
struct EquidistantTree {
  RootedTree tree;
  WeightFn weights;
  Rational height;
};

// Rooted tree whose labels vanish exactly on the out-degree-0 vertices and
// strictly decrease from parent to child.
struct MonotoneTree {
  RootedTree tree;
  LabelFn labels;
};

// d_w(root, v) for every vertex.
inline std::map<Vertex, Rational> root_distances(const RootedTree& rt, const WeightFn& w) {
  std::map<Vertex, Rational> dist;
  for (const auto& v : rt.top_down()) {
    auto p = rt.parent(v);
    dist[v] = p ? dist.at(*p) + w.at(make_edge(*p, v)) : Rational(0);
  }
  return dist;
}

// K when all root-to-(out-degree-0) path sums agree.
inline std::optional<Rational> check_equidistant(const RootedTree& rt, const WeightFn& w) {
  require_strictly_positive(rt.tree().graph(), w);
  const auto dist = root_distances(rt, w);
  std::optional<Rational> height;
  for (const auto& v : rt.vertices()) {
    if (rt.out_degree(v) != 0) continue;
    if (!height) {
      height = dist.at(v);
    } else if (*height != dist.at(v)) {
      return std::nullopt;
    }
  }
  return height;
}

inline EquidistantTree make_equidistant(RootedTree rt, WeightFn w) {
  auto height = check_equidistant(rt, w);
  if (!height) throw Error("not-equidistant", "root-to-leaf weight sums differ");
  return {std::move(rt), std::move(w), *height};
}

inline bool check_monotone(const RootedTree& rt, const LabelFn& l) {
  require_total(rt.tree().graph(), l);
  for (const auto& v : rt.vertices()) {
    if ((l.at(v) == 0) != (rt.out_degree(v) == 0)) return false;
    if (auto p = rt.parent(v); p && !(l.at(v) < l.at(*p))) return false;
  }
  return true;
}

inline MonotoneTree make_monotone(RootedTree rt, LabelFn l) {
  if (!check_monotone(rt, l)) throw Error("not-monotone", "labeling is not monotone");
  return {std::move(rt), std::move(l)};
}

// w({u, v}) = (l(u) - l(v)) / 2 for every child v of u; K = l(root) / 2.
inline EquidistantTree labeling_to_weight(const MonotoneTree& mt) {
  if (!check_monotone(mt.tree, mt.labels)) throw Error("not-monotone", "labeling is not monotone");
  WeightFn w;
  for (const auto& v : mt.tree.vertices()) {
    if (auto p = mt.tree.parent(v)) w[make_edge(*p, v)] = half(mt.labels.at(*p) - mt.labels.at(v));
  }
  return {mt.tree, std::move(w), half(mt.labels.at(mt.tree.root()))};
}

// The unique monotone labeling with w = (l(parent) - l(child)) / 2, which is
// l(u) = 2 (K - d_w(root, u)).
inline MonotoneTree weight_to_labeling(const EquidistantTree& et) {
  auto height = check_equidistant(et.tree, et.weights);
  if (!height || *height != et.height) throw Error("not-equidistant", "weight is not equidistant");
  LabelFn l;
  for (const auto& [v, d] : root_distances(et.tree, et.weights)) l[v] = 2 * (*height - d);
  return {et.tree, std::move(l)};
}

// d_w restricted to the out-degree-0 vertices.
inline FiniteMetricSpace leaf_space(const EquidistantTree& et) {
  return restrict(additive_metric(et.tree.tree(), et.weights), degree_sets(et.tree).out0);
}

// d_l restricted to the out-degree-0 vertices.
inline FiniteMetricSpace leaf_space(const MonotoneTree& mt) {
  return restrict(label_tree_metric(mt.tree.tree(), mt.labels).space, degree_sets(mt.tree).out0);
}

struct MonotoneGeneratorOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 8;
  // Forbid out-degree 1 everywhere, so the result is shaped like the
  // representing tree of some ultrametric space. Two vertices cannot satisfy
  // this; such a draw becomes three vertices (or one when max_vertices < 3).
  bool representing_shape = false;
};

// Random monotone tree, fully determined by the seed. Vertices are "v0".."vN"
// with v0 the root; labels step up by 1/2, 1, 3/2, 2 or 3 per level.
inline MonotoneTree generate_monotone(std::uint64_t seed, const MonotoneGeneratorOptions& opts = {}) {
  if (opts.min_vertices == 0 || opts.max_vertices < opts.min_vertices) {
    throw Error("invalid-argument", "need 1 <= min_vertices <= max_vertices");
  }
  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  std::size_t n = opts.min_vertices + draw(opts.max_vertices - opts.min_vertices + 1);
  if (opts.representing_shape && n == 2) n = opts.max_vertices >= 3 ? 3 : 1;

  std::vector<std::vector<std::size_t>> children(1);
  auto add_child = [&children](std::size_t p) {
    children[p].push_back(children.size());
    children.emplace_back();
  };
  if (!opts.representing_shape) {
    for (std::size_t i = 1; i < n; ++i) add_child(draw(i));
  } else {
    while (children.size() < n) {
      std::vector<std::size_t> leaves;
      std::vector<std::size_t> internal;
      for (std::size_t v = 0; v < children.size(); ++v) (children[v].empty() ? leaves : internal).push_back(v);
      const std::size_t missing = n - children.size();
      if (internal.empty() || (missing >= 2 && draw(2) == 0)) {
        const std::size_t leaf = leaves[draw(leaves.size())];
        add_child(leaf);
        add_child(leaf);
      } else {
        add_child(internal[draw(internal.size())]);
      }
    }
  }

  std::vector<Rational> label(children.size(), Rational(0));
  for (std::size_t v = children.size(); v-- > 0;) {
    if (children[v].empty()) continue;
    Rational top = 0;
    for (auto c : children[v]) top = std::max(top, label[c]);
    static constexpr std::int64_t kSteps[][2] = {{1, 2}, {1, 1}, {3, 2}, {2, 1}, {3, 1}};
    const auto& step = kSteps[draw(5)];
    label[v] = top + Rational(step[0], step[1]);
  }

  std::vector<Vertex> ids;
  std::vector<std::pair<Vertex, Vertex>> edges;
  LabelFn l;
  for (std::size_t v = 0; v < children.size(); ++v) {
    ids.push_back("v" + std::to_string(v));
    l[ids.back()] = label[v];
    for (auto c : children[v]) edges.emplace_back("v" + std::to_string(v), "v" + std::to_string(c));
  }
  return {RootedTree(Tree(std::move(ids), edges), "v0"), std::move(l)};
}

}  // namespace ultratree

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ultratree/duality.hpp"
#include "ultratree/error.hpp"
#include "ultratree/graph.hpp"
#include "ultratree/metric.hpp"
#include "ultratree/rational.hpp"
#include "ultratree/representing.hpp"

namespace ultratree {

// Every root at which (t, w) is equidistant.
inline std::vector<Vertex> centers(const Tree& t, const WeightFn& w) {
  require_strictly_positive(t.graph(), w);
  std::vector<Vertex> out;
  for (const auto& r : t.vertices()) {
    if (check_equidistant(RootedTree(t, r), w)) out.push_back(r);
  }
  return out;
}

// One vertex adjacent to all others, at least two vertices.
inline bool is_star(const Tree& t) {
  if (t.vertex_count() < 2) return false;
  return std::any_of(t.vertices().begin(), t.vertices().end(),
                     [&](const Vertex& v) { return t.degree(v) + 1 == t.vertex_count(); });
}

// The all-ones weight for a star (equidistant at every root), nothing otherwise.
inline std::optional<WeightFn> star_equidistant_witness(const Tree& t) {
  if (!is_star(t)) return std::nullopt;
  WeightFn w;
  for (const auto& e : t.edges()) w[e] = 1;
  return w;
}

// (c, t) such that the space is the sphere S_t(c) together with c.
inline std::optional<std::pair<Vertex, Rational>> sphere_center_check(const FiniteMetricSpace& space) {
  require_ultrametric(space);
  for (std::size_t c = 0; c < space.size(); ++c) {
    std::optional<Rational> radius;
    bool sphere = true;
    for (std::size_t x = 0; x < space.size() && sphere; ++x) {
      if (x == c) continue;
      if (!radius) radius = space(c, x);
      sphere = *radius == space(c, x);
    }
    if (sphere && radius) return std::make_pair(space.points()[c], *radius);
  }
  return std::nullopt;
}

// min over a in targets of d_w(root, a).
inline Rational root_distance_to(const RootedTree& rt, const WeightFn& w, const std::set<Vertex>& targets) {
  const auto dist = root_distances(rt, w);
  std::optional<Rational> best;
  for (const auto& a : targets) {
    if (!best || dist.at(a) < *best) best = dist.at(a);
  }
  return *best;
}

struct PlantedCheck {
  bool holds;
  Rational lhs;  // 2 dist(root, out-degree >= 2 vertices)
  Rational rhs;  // dist(root, out-degree 0 vertices), which is K
};

// For a planted equidistant tree the inequality lhs >= rhs decides whether
// d_w restricted to the degree-1 vertices is ultrametric.
inline PlantedCheck planted_leaf_ultrametric_check(const EquidistantTree& et) {
  make_equidistant(et.tree, et.weights);
  if (!et.tree.is_planted()) throw Error("not-planted", "root must have exactly one successor");
  const DegreeSets sets = degree_sets(et.tree);
  if (sets.out2plus.empty()) throw Error("no-branching-vertex", "no vertex has two or more successors");
  const Rational lhs = 2 * root_distance_to(et.tree, et.weights, sets.out2plus);
  const Rational rhs = root_distance_to(et.tree, et.weights, sets.out0);
  return {lhs >= rhs, lhs, rhs};
}

struct DiameterBound {
  Rational diam0;       // diameter of d_w on the out-degree-0 vertices
  Rational height;      // K
  bool within_bound;    // diam0 <= 2K
  bool strict;          // diam0 < 2K
  bool planted;
  Rational diam1;       // the same diameter over out-degree-1 vertices, report only
};

inline DiameterBound diameter_bound_check(const EquidistantTree& et) {
  const EquidistantTree checked = make_equidistant(et.tree, et.weights);
  const FiniteMetricSpace d = additive_metric(et.tree.tree(), et.weights);
  const DegreeSets sets = degree_sets(et.tree);
  const std::vector<Vertex> out0(sets.out0.begin(), sets.out0.end());
  const std::vector<Vertex> out1(sets.out1.begin(), sets.out1.end());
  const Rational diam0 = diameter_of(d, out0);
  const Rational bound = 2 * checked.height;
  return {diam0, checked.height, diam0 <= bound, diam0 < bound, et.tree.is_planted(), diameter_of(d, out1)};
}

// Every vertex of degree >= 2 has degree >= 3.
inline bool phylo_shape(const Tree& t) {
  return std::all_of(t.vertices().begin(), t.vertices().end(),
                     [&](const Vertex& v) { return t.degree(v) < 2 || t.degree(v) >= 3; });
}

struct StructureReport {
  std::optional<bool> planted;
  std::optional<std::vector<Vertex>> centers;
  bool is_star = false;
  bool phylo_shape = false;
  std::optional<Rational> height;
  std::optional<Rational> planted_lhs;
  std::optional<Rational> planted_rhs;
};

// Fields needing a root or weights stay empty when those are absent.
inline StructureReport analyze(const Tree& t, const std::optional<Vertex>& root,
                               const std::optional<WeightFn>& weights) {
  StructureReport report;
  report.is_star = is_star(t);
  report.phylo_shape = phylo_shape(t);
  if (weights) report.centers = centers(t, *weights);
  if (!root) return report;
  const RootedTree rt(t, *root);
  report.planted = rt.is_planted();
  if (!weights) return report;
  report.height = check_equidistant(rt, *weights);
  if (report.height && rt.is_planted() && !degree_sets(rt).out2plus.empty()) {
    const PlantedCheck pc = planted_leaf_ultrametric_check({rt, *weights, *report.height});
    report.planted_lhs = pc.lhs;
    report.planted_rhs = pc.rhs;
  }
  return report;
}

}  // namespace ultratree

#pragma once

// Randomized property suites. Each returns how many instances it checked and
// describes the first failure, so gtest cases and the acceptance runner can
// share them.

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "ultratree/analysis.hpp"
#include "ultratree/canonical.hpp"
#include "ultratree/duality.hpp"
#include "ultratree/metric.hpp"
#include "ultratree/representing.hpp"
#include "ultratree/transforms.hpp"

namespace ultratree::testing {

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what + " (case " + std::to_string(cases) + ")";
  }
  bool ok() const { return failures == 0; }
};

inline std::string describe(const FiniteMetricSpace& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << s.points()[i] << ":";
    for (std::size_t j = 0; j < s.size(); ++j) out << " " << to_string(s(i, j));
    out << ";";
  }
  return out.str();
}

inline CanonicalCode weighted_code(const EquidistantTree& et) {
  return canonical_code(et.tree, IsoFlavor::RootedWeighted, Decoration{std::nullopt, std::nullopt, et.weights});
}

inline CanonicalCode labeled_code(const RootedTree& rt, const LabelFn& l) {
  return canonical_code(rt, IsoFlavor::RootedLabeled, Decoration{std::nullopt, l, std::nullopt});
}

// ultrametric_isometric against brute-force isometry_search.
inline SuiteResult ultrametric_isometry_suite(std::uint64_t seed, std::size_t pairs) {
  Rng rng(seed);
  SuiteResult r;
  std::size_t positives = 0;
  for (; r.cases < pairs; ++r.cases) {
    const std::size_t n = 1 + pick(rng, 6);
    const FiniteMetricSpace a = random_ultrametric(rng, n, "a");
    FiniteMetricSpace b;
    switch (pick(rng, 3)) {
      case 0: b = renamed_copy(rng, a); break;
      case 1: b = random_ultrametric(rng, n, "b"); break;
      default: b = random_ultrametric(rng, 1 + pick(rng, 6), "b"); break;
    }
    const bool fast = ultrametric_isometric(a, b);
    const bool search = isometry_search(a, b).has_value();
    positives += search;
    r.check(fast == search, "fast path disagrees with search on " + describe(a) + " vs " + describe(b));
    r.check(search == brute_isometric(a, b), "isometry_search disagrees with permutation oracle");
  }
  r.check(positives > pairs / 4 && positives < pairs, "degenerate mix of isometric and non-isometric pairs");
  return r;
}

// minimax_label_metric against enumeration of all simple paths.
inline SuiteResult minimax_suite(std::uint64_t seed, std::size_t graphs) {
  Rng rng(seed);
  SuiteResult r;
  for (; r.cases < graphs; ++r.cases) {
    const Graph g = random_connected_graph(rng, 1 + pick(rng, 7), 35);
    const LabelFn l = random_labels(rng, g, 4);
    const ClassifiedSpace rho = minimax_label_metric(g, l);
    r.check(rho.space.matrix() == minimax_by_paths(g, l), "minimax matrix differs from path enumeration");
    bool edge_rule = true;
    for (const auto& e : g.edges()) edge_rule = edge_rule && (l.at(e.first) > 0 || l.at(e.second) > 0);
    r.check((rho.metric_class == MetricClass::Ultrametric) == edge_rule, "ultrametric flag contradicts edge rule");
    r.check(is_ultrametric_matrix(rho.space.matrix()) == edge_rule, "matrix class contradicts edge rule");
  }
  return r;
}

// ballean against brute-force ball enumeration.
inline SuiteResult ballean_suite(std::uint64_t seed, std::size_t spaces) {
  Rng rng(seed);
  SuiteResult r;
  for (; r.cases < spaces; ++r.cases) {
    const FiniteMetricSpace s = random_ultrametric(rng, 1 + pick(rng, 6));
    const auto balls = ballean(s);
    const auto brute = brute_balls(s);
    r.check(std::set<std::vector<Vertex>>(balls.begin(), balls.end()) == brute && balls.size() == brute.size(),
            "ballean differs from enumeration for " + describe(s));
    r.check(representing_tree(s).tree.vertex_count() == balls.size(), "vertex/ball bijection broken");
  }
  return r;
}

// Distances equal the max label on tree paths: T_X leaves for ultrametric
// spaces, and the dual labeling on out-degree-0 pairs of equidistant trees.
inline SuiteResult max_label_path_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  for (; r.cases < trials; ++r.cases) {
    const FiniteMetricSpace s = random_ultrametric(rng, 1 + pick(rng, 8));
    const LabeledRootedTree tx = representing_tree(s);
    for (const auto& x : s.points()) {
      for (const auto& y : s.points()) {
        const Rational along = path_max_label(tx.tree.tree().graph(), tx.labels, ball_id({x}), ball_id({y}));
        r.check(along == s.distance(x, y), "T_X path label differs from d(" + x + "," + y + ")");
      }
    }
    const EquidistantTree et = random_equidistant(rng, 1 + pick(rng, 10));
    const LabelFn l = weight_to_labeling(et).labels;
    const auto out0 = degree_sets(et.tree).out0;
    for (const auto& u : out0) {
      for (const auto& v : out0) {
        if (u == v) continue;
        r.check(path_weight(et.tree.tree().graph(), et.weights, u, v) ==
                    path_max_label(et.tree.tree().graph(), l, u, v),
                "d_w on leaves differs from max dual label");
      }
    }
  }
  return r;
}

// Both duality round trips are exact.
inline SuiteResult duality_round_trip_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  for (; r.cases < trials; ++r.cases) {
    const EquidistantTree et = random_equidistant(rng, 1 + pick(rng, 10));
    const MonotoneTree mt = weight_to_labeling(et);
    r.check(check_monotone(mt.tree, mt.labels), "dual labeling is not monotone");
    const EquidistantTree back = labeling_to_weight(mt);
    r.check(back.weights == et.weights && back.height == et.height, "weight -> labeling -> weight changed w");
    r.check(mt.labels.at(mt.tree.root()) == 2 * et.height, "root label is not 2K");

    const MonotoneTree m2 = random_monotone(rng, 1 + pick(rng, 10));
    const EquidistantTree w2 = labeling_to_weight(m2);
    r.check(check_equidistant(w2.tree, w2.weights) == w2.height, "dual weight is not equidistant with K = l(r)/2");
    r.check(weight_to_labeling(w2).labels == m2.labels, "labeling -> weight -> labeling changed l");
  }
  return r;
}

// Reduction invariants, order independence and the geometric membership rule.
inline SuiteResult nabla_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  while (r.cases < trials) {
    EquidistantTree et = random_equidistant(rng, 2 + pick(rng, 9));
    for (std::size_t k = pick(rng, 3); k > 0; --k) et = add_degree_one_vertex(rng, et, "u" + std::to_string(k));
    const DegreeSets before = degree_sets(et.tree);
    if (before.out2plus.empty()) continue;
    ++r.cases;
    const NablaResult red = reduce_nabla(et);
    const DegreeSets after = degree_sets(red.reduced.tree);
    r.check(after.out1.empty(), "reduced tree still has out-degree-1 vertices");
    r.check(after.out0 == before.out0, "out-degree-0 set changed");
    r.check(red.removed == before.out1, "removed set is not the out-degree-1 set");
    r.check(red.reduced.tree.vertex_count() + before.out1.size() == et.tree.vertex_count(), "size identity fails");
    for (const auto& v : red.reduced.tree.vertices()) r.check(et.tree.contains(v), "new vertex appeared");
    r.check(check_equidistant(red.reduced.tree, red.reduced.weights) == red.reduced.height, "reduced K is wrong");
    r.check(leaf_space(red.reduced) == leaf_space(et), "d_w on out-degree-0 vertices changed");

    // Suppress in a shuffled order after the same rerooting.
    std::vector<Vertex> order(before.out1.begin(), before.out1.end());
    std::shuffle(order.begin(), order.end(), rng);
    EquidistantTree manual = et;
    if (red.new_root != et.tree.root()) {
      const RootedTree below = subtree_below(et.tree, red.new_root);
      WeightFn w;
      for (const auto& e : below.edges()) w[e] = et.weights.at(e);
      manual = make_equidistant(below, w);
    }
    for (const auto& v : order) {
      if (manual.tree.contains(v)) manual = suppress_vertex(manual, v);
    }
    r.check(manual.tree == red.reduced.tree && manual.weights == red.reduced.weights, "suppression order matters");

    for (const auto& x : et.tree.vertices()) {
      r.check(nabla_geometric_membership(et, x) == red.reduced.tree.contains(x), "membership rule fails at " + x);
    }
  }
  return r;
}

// Equidistant pairs: T-nabla codes agree exactly when the leaf spaces are
// isometric.
inline SuiteResult nabla_isometry_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  std::size_t positives = 0;
  while (r.cases < trials) {
    const EquidistantTree a = random_equidistant(rng, 2 + pick(rng, 7), "a");
    EquidistantTree b = a;
    if (pick(rng, 2) == 0) {
      const auto f = random_renaming(rng, a.tree.vertices(), "b");
      b = make_equidistant(rename(a.tree, f), rename(a.weights, f));
      if (b.tree.vertex_count() < 8) b = add_degree_one_vertex(rng, b, "extra");
    } else {
      b = random_equidistant(rng, 2 + pick(rng, 7), "b");
    }
    if (degree_sets(a.tree).out2plus.empty() || degree_sets(b.tree).out2plus.empty()) continue;
    ++r.cases;
    const bool iso = weighted_code(reduce_nabla(a).reduced) == weighted_code(reduce_nabla(b).reduced);
    const bool isometric = isometry_search(leaf_space(a), leaf_space(b)).has_value();
    positives += isometric;
    r.check(iso == isometric, "T-nabla isomorphism and leaf isometry disagree");
  }
  r.check(positives > 0, "no isometric pair generated");
  return r;
}

// On a fixed shape: without out-degree-1 vertices, weightings (and their dual
// labelings) are isomorphic exactly when the leaf spaces are isometric; with
// one, the rebalanced pair is isometric yet not isomorphic.
inline SuiteResult fixed_shape_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  std::size_t positives = 0;
  for (; r.cases < trials; ++r.cases) {
    const MonotoneTree shape = random_branching_monotone(rng, 8);
    // Coarse labels make coinciding labelings likely.
    LabelFn l1;
    LabelFn l2;
    const auto& order = shape.tree.top_down();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Rational top1 = 0;
      Rational top2 = 0;
      for (const auto& c : shape.tree.children(*it)) {
        top1 = std::max(top1, l1.at(c));
        top2 = std::max(top2, l2.at(c));
      }
      const bool leaf = shape.tree.out_degree(*it) == 0;
      l1[*it] = leaf ? Rational(0) : top1 + Rational(1 + static_cast<std::int64_t>(pick(rng, 2)));
      l2[*it] = leaf ? Rational(0) : top2 + Rational(1 + static_cast<std::int64_t>(pick(rng, 2)));
    }
    const EquidistantTree w1 = labeling_to_weight({shape.tree, l1});
    const EquidistantTree w2 = labeling_to_weight({shape.tree, l2});
    const bool isometric = isometry_search(leaf_space(w1), leaf_space(w2)).has_value();
    positives += isometric;
    r.check((weighted_code(w1) == weighted_code(w2)) == isometric, "weighted isomorphism vs isometry");
    r.check((labeled_code(shape.tree, l1) == labeled_code(shape.tree, l2)) == isometric,
            "labeled isomorphism vs isometry");
    r.check(isometry_search(leaf_space(MonotoneTree{shape.tree, l1}), leaf_space(MonotoneTree{shape.tree, l2}))
                    .has_value() == isometric,
            "d_l leaf spaces disagree with d_w leaf spaces");

    EquidistantTree with_v1 = random_equidistant(rng, 3 + pick(rng, 6));
    if (degree_sets(with_v1.tree).out1.empty()) with_v1 = add_degree_one_vertex(rng, with_v1, "deg1");
    const EquidistantTree other = make_equidistant(with_v1.tree, rebalanced_weights(with_v1));
    r.check(leaf_space(with_v1) == leaf_space(other), "rebalanced pair changes leaf distances");
    r.check(weighted_code(with_v1) != weighted_code(other), "rebalanced pair is isomorphic");
    const MonotoneTree d1 = weight_to_labeling(with_v1);
    const MonotoneTree d2 = weight_to_labeling(other);
    r.check(leaf_space(d1) == leaf_space(d2), "dual labelings change leaf d_l");
    r.check(labeled_code(d1.tree, d1.labels) != labeled_code(d2.tree, d2.labels), "dual labelings are isomorphic");
  }
  r.check(positives > 0, "no isometric labeling pair generated");
  return r;
}

// |V(T)| >= number of balls of its leaf space, with equality exactly when T
// is (dual to) the representing tree.
inline SuiteResult ball_count_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  std::size_t equalities = 0;
  for (; r.cases < trials; ++r.cases) {
    EquidistantTree et = random_equidistant(rng, 1 + pick(rng, 9));
    if (pick(rng, 2) == 0) {
      // Start from the dual of a representing tree, sometimes padded.
      const FiniteMetricSpace x = random_ultrametric(rng, 1 + pick(rng, 6));
      const LabeledRootedTree tx = representing_tree(x);
      et = labeling_to_weight({tx.tree, tx.labels});
      if (pick(rng, 2) == 0 && et.tree.vertex_count() > 1) et = add_degree_one_vertex(rng, et, "pad");
    }
    const FiniteMetricSpace leaves = leaf_space(et);
    const LabeledRootedTree tx = representing_tree(leaves);
    const std::size_t balls = ballean(leaves).size();
    const CanonicalCode dual_tx = weighted_code(labeling_to_weight({tx.tree, tx.labels}));
    r.check(et.tree.vertex_count() >= balls, "tree smaller than the ballean");
    const bool equal = et.tree.vertex_count() == balls;
    equalities += equal;
    r.check(equal == (weighted_code(et) == dual_tx), "equality case does not match isomorphism with T_X");
    if (et.tree.vertex_count() > 1 && !degree_sets(et.tree).out2plus.empty()) {
      r.check(weighted_code(reduce_nabla(et).reduced) == dual_tx, "T-nabla differs from the dual of T_X");
    }
  }
  r.check(equalities > 0 && equalities < trials, "degenerate equality mix");
  return r;
}

// Planted trees: 2 dist(r, branching) >= K exactly when the degree-1
// vertices form an ultrametric space.
inline SuiteResult planted_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  std::size_t holds = 0;
  while (r.cases < trials) {
    EquidistantTree et = random_planted_equidistant(rng, 3 + pick(rng, 8));
    if (pick(rng, 3) == 0) {
      // Long root edge: the inequality holds.
      WeightFn w = et.weights;
      w[et.tree.parent_edge(et.tree.children(et.tree.root()).front())] += 6;
      et = make_equidistant(et.tree, w);
    }
    if (degree_sets(et.tree).out2plus.empty()) continue;
    ++r.cases;
    const PlantedCheck pc = planted_leaf_ultrametric_check(et);
    const FiniteMetricSpace leaves = restrict(additive_metric(et.tree.tree(), et.weights), et.tree.tree().leaves());
    holds += pc.holds;
    r.check(pc.rhs == et.height, "rhs is not K");
    r.check(pc.holds == (classify_metric(leaves) == MetricClass::Ultrametric), "inequality vs leaf ultrametricity");
  }
  r.check(holds > 0 && holds < trials, "degenerate holds/fails mix");
  return r;
}

// diam of the out-degree-0 set is at most 2K, strictly exactly when planted.
inline SuiteResult diameter_bound_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  for (; r.cases < trials; ++r.cases) {
    const EquidistantTree et = pick(rng, 2) ? random_equidistant(rng, 1 + pick(rng, 10))
                                            : random_planted_equidistant(rng, 2 + pick(rng, 9));
    const DiameterBound b = diameter_bound_check(et);
    r.check(b.within_bound, "diameter exceeds 2K");
    r.check(b.strict == et.tree.is_planted(), "strictness differs from plantedness");
  }
  return r;
}

inline Tree star_tree(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back("s0", "s" + std::to_string(i));
  return Tree(names("s", n), edges);
}

// Stars are exactly the trees with a weight that is equidistant at every root.
inline SuiteResult star_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  for (; r.cases < trials; ++r.cases) {
    const std::size_t n = 1 + pick(rng, 8);
    const Tree t = pick(rng, 4) == 0 && n >= 2 ? star_tree(n) : random_tree(rng, n);
    const auto witness = star_equidistant_witness(t);
    r.check(is_star(t) == witness.has_value(), "star test disagrees with witness");
    if (witness) r.check(centers(t, *witness).size() == t.vertex_count(), "witness is not equidistant everywhere");
    if (!is_star(t) && t.vertex_count() >= 2) {
      for (int k = 0; k < 5; ++k) {
        r.check(centers(t, random_weights(rng, t.graph())).size() < t.vertex_count(),
                "non-star equidistant at every root");
      }
    }
  }
  return r;
}

// The two counterexample weightings give isometric shortest-path metrics but
// non-isomorphic weighted graphs.
inline SuiteResult counterexample_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  while (r.cases < trials) {
    const Graph g = random_connected_graph(rng, 3 + pick(rng, 5), 40);
    if (!find_cycle(g)) continue;
    ++r.cases;
    const CounterexampleWeights cw = isometric_nonisomorphic_weights(g);
    const auto m = static_cast<std::int64_t>(g.edge_count());
    r.check(cw.w1.at(cw.heavy) == 1 + m && cw.w2.at(cw.heavy) == 2 + m, "heavy weights are not |E|+1, |E|+2");
    const FiniteMetricSpace r1 = shortest_path_metric(g, cw.w1);
    const FiniteMetricSpace r2 = shortest_path_metric(g, cw.w2);
    r.check(r1 == r2, "shortest-path metrics differ");
    WeightFn unit;
    const Graph rest = g.without_edge(cw.heavy);
    for (const auto& e : rest.edges()) unit[e] = 1;
    r.check(r1 == shortest_path_metric(rest, unit), "metric is not the hop metric without the heavy edge");
    r.check(isometry_search(r1, r2).has_value(), "no isometry found");
    const Decoration d1{std::nullopt, std::nullopt, cw.w1};
    const Decoration d2{std::nullopt, std::nullopt, cw.w2};
    r.check(!are_isomorphic_graphs(g, d1, g, d2), "weighted graphs reported isomorphic");
    r.check(!brute_isomorphic(g, {std::nullopt, nullptr, &cw.w1}, g, {std::nullopt, nullptr, &cw.w2}),
            "oracle finds an isomorphism");
  }
  return r;
}

// The leaf/parent swap preserves d_l and breaks the labeled tree structure.
inline SuiteResult leaf_swap_suite(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  SuiteResult r;
  for (; r.cases < trials; ++r.cases) {
    const MonotoneTree mt = pick(rng, 2) ? random_monotone(rng, 2 + pick(rng, 7))
                                         : generate_monotone(rng(), {2, 8, false});
    const auto out0 = degree_sets(mt.tree).out0;
    const Vertex leaf = *std::next(out0.begin(), static_cast<std::ptrdiff_t>(pick(rng, out0.size())));
    const auto f = leaf_swap_isometry(mt.tree, mt.labels, leaf);
    const FiniteMetricSpace d = label_tree_metric(mt.tree.tree(), mt.labels).space;
    bool isometry = true;
    for (const auto& x : d.points())
      for (const auto& y : d.points()) isometry = isometry && d.distance(x, y) == d.distance(f.at(x), f.at(y));
    bool preserves_labels = true;
    for (const auto& x : d.points()) preserves_labels = preserves_labels && mt.labels.at(x) == mt.labels.at(f.at(x));
    bool preserves_edges = true;
    for (const auto& e : mt.tree.edges())
      preserves_edges = preserves_edges && mt.tree.tree().graph().adjacent(f.at(e.first), f.at(e.second));
    r.check(isometry, "swap is not a d_l isometry");
    r.check(!(preserves_labels && preserves_edges), "swap is a labeled isomorphism");
  }
  return r;
}

}  // namespace ultratree::testing

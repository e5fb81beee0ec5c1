#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ultratree/duality.hpp"
#include "ultratree/error.hpp"
#include "ultratree/graph.hpp"
#include "ultratree/metric.hpp"
#include "ultratree/rational.hpp"

namespace ultratree {

// Removes a non-root vertex v with exactly one child c, replacing the path
// parent(v) - v - c by a single edge carrying the summed weight.
inline EquidistantTree suppress_vertex(const EquidistantTree& et, const Vertex& v) {
  const RootedTree& rt = et.tree;
  require_vertex(rt.tree().graph(), v);
  const auto p = rt.parent(v);
  if (!p || rt.out_degree(v) != 1) {
    throw Error("not-suppressible", "vertex '" + v + "' is the root or does not have exactly one successor");
  }
  const Vertex& c = rt.children(v).front();
  std::vector<Vertex> ids;
  for (const auto& x : rt.vertices()) {
    if (x != v) ids.push_back(x);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  WeightFn w;
  for (const auto& e : rt.edges()) {
    if (e.contains(v)) continue;
    edges.emplace_back(e.first, e.second);
    w[e] = et.weights.at(e);
  }
  edges.emplace_back(*p, c);
  w[make_edge(*p, c)] = et.weights.at(make_edge(*p, v)) + et.weights.at(make_edge(v, c));
  return {RootedTree(Tree(std::move(ids), edges), rt.root()), std::move(w), et.height};
}

struct NablaResult {
  EquidistantTree reduced;
  std::set<Vertex> removed;
  Vertex new_root;
};

// Drops every out-degree-1 vertex while keeping d_w on the out-degree-0
// vertices. A root of out-degree 1 is handled first by rerooting at the first
// branching vertex below it and discarding the path above.
inline NablaResult reduce_nabla(const EquidistantTree& et) {
  const EquidistantTree checked = make_equidistant(et.tree, et.weights);
  if (checked.height != et.height) throw Error("not-equidistant", "stated height differs from the weight sums");
  const RootedTree& rt = et.tree;
  if (degree_sets(rt).out2plus.empty()) {
    throw Error("path-tree", "every vertex has at most one successor; nothing would remain");
  }

  NablaResult result{et, {}, rt.root()};
  Rational depth = 0;
  while (rt.out_degree(result.new_root) == 1) {
    const Vertex next = rt.children(result.new_root).front();
    depth += et.weights.at(make_edge(result.new_root, next));
    result.removed.insert(result.new_root);
    result.new_root = next;
  }
  if (result.new_root != rt.root()) {
    RootedTree below = subtree_below(rt, result.new_root);
    WeightFn w;
    for (const auto& e : below.edges()) w[e] = et.weights.at(e);
    result.reduced = {std::move(below), std::move(w), et.height - depth};
  }

  const std::set<Vertex> pending = degree_sets(result.reduced.tree).out1;
  for (const auto& v : pending) {
    result.reduced = suppress_vertex(result.reduced, v);
    result.removed.insert(v);
  }
  return result;
}

// x is kept by reduce_nabla exactly when some y, z of out-degree 0 satisfy
// d_w(y, x) = d_w(x, z) = d_w(y, z) / 2. y = z is allowed, which admits the
// out-degree-0 vertices themselves.
inline bool nabla_geometric_membership(const EquidistantTree& et, const Vertex& x) {
  if (degree_sets(et.tree).out2plus.empty()) {
    throw Error("path-tree", "every vertex has at most one successor; nothing would remain");
  }
  require_vertex(et.tree.tree().graph(), x);
  const FiniteMetricSpace d = additive_metric(et.tree.tree(), et.weights);
  const auto out0 = degree_sets(et.tree).out0;
  for (const auto& y : out0) {
    for (const auto& z : out0) {
      const Rational& yx = d.distance(y, x);
      if (yx == d.distance(x, z) && 2 * yx == d.distance(y, z)) return true;
    }
  }
  return false;
}

// Spanning tree T of g with d_l on T equal to rho_l on g. While a cycle
// remains, delete the smallest cycle edge touching a maximum-label cycle vertex.
inline Tree bottleneck_spanning_tree(const Graph& g, const LabelFn& l) {
  require_connected(g);
  require_total(g, l);
  Graph current = g;
  while (auto cycle = find_cycle(current)) {
    Rational top = 0;
    for (const auto& v : *cycle) top = std::max(top, l.at(v));
    std::optional<Edge> drop;
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      const Vertex& a = (*cycle)[i];
      const Vertex& b = (*cycle)[(i + 1) % cycle->size()];
      if (l.at(a) != top && l.at(b) != top) continue;
      const Edge e = make_edge(a, b);
      if (!drop || e < *drop) drop = e;
    }
    current = current.without_edge(*drop);
  }
  return Tree(std::move(current));
}

// Two weightings of a cyclic graph that give isometric shortest-path metrics
// although the weighted graphs are not isomorphic. The heavy edge is the
// smallest edge lying on a cycle; w1 puts 1 + |E| on it and w2 puts 2 + |E|,
// every other edge weighs 1. Both metrics equal the hop metric of g minus the
// heavy edge.
struct CounterexampleWeights {
  Edge heavy;
  WeightFn w1;
  WeightFn w2;
};

inline CounterexampleWeights isometric_nonisomorphic_weights(const Graph& g) {
  require_connected(g);
  std::optional<Edge> heavy;
  for (const auto& e : g.edges()) {
    if (is_connected(g.without_edge(e))) {
      heavy = e;
      break;
    }
  }
  if (!heavy) throw Error("acyclic-input", "graph has no cycle");
  CounterexampleWeights out{*heavy, {}, {}};
  const auto m = static_cast<std::int64_t>(g.edge_count());
  for (const auto& e : g.edges()) {
    out.w1[e] = e == *heavy ? Rational(1 + m) : Rational(1);
    out.w2[e] = e == *heavy ? Rational(2 + m) : Rational(1);
  }
  return out;
}

}  // namespace ultratree

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ultratree/error.hpp"
#include "ultratree/graph.hpp"
#include "ultratree/metric.hpp"

namespace ultratree {

// Disjoint nonempty blocks covering a point set.
using Partition = std::vector<std::vector<Vertex>>;

// Labeled rooted tree whose vertices may carry the point set they stand for.
// For a representing tree the payload of a vertex is its ball, child payloads
// partition the parent payload, and the label is the payload's diameter.
struct LabeledRootedTree {
  RootedTree tree;
  LabelFn labels;
  std::map<Vertex, std::vector<Vertex>> payloads;
};

// "{a,b,c}" for a sorted point set; the vertex id of a ball.
inline std::string ball_id(const std::vector<Vertex>& points) {
  std::string id = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) id += ",";
    id += points[i];
  }
  return id + "}";
}

inline void require_ultrametric(const FiniteMetricSpace& space) {
  if (space.size() == 0) throw Error("empty-set", "space has no points");
  if (classify_metric(space) != MetricClass::Ultrametric) {
    throw Error("not-ultrametric", "space is not an ultrametric space");
  }
}

// Edges exactly between diameter-realizing pairs.
inline Graph diametrical_graph(const FiniteMetricSpace& space) {
  if (space.size() < 2) throw Error("too-few-points", "diametrical graph needs at least two points");
  const Rational diam = space.diameter();
  std::set<Edge> edges;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (space(i, j) == diam) edges.insert(make_edge(space.points()[i], space.points()[j]));
    }
  }
  return Graph(space.points(), std::move(edges));
}

// Blocks are the connected components of the complement graph; the result is
// then verified to be complete multipartite with at least two blocks.
inline Partition multipartite_parts(const Graph& g) {
  const auto& vs = g.vertices();
  std::set<Edge> complement;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) complement.insert(make_edge(vs[i], vs[j]));
    }
  }
  Partition blocks = connected_components(Graph(vs, std::move(complement)));
  if (blocks.size() < 2) {
    throw Error("not-complete-multipartite", "complement graph is connected; fewer than two blocks");
  }
  std::map<Vertex, std::size_t> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& v : blocks[b]) block_of[v] = b;
  }
  for (const auto& v : vs) {
    // Every vertex must see exactly the vertices of all other blocks.
    const std::size_t expected = vs.size() - blocks[block_of[v]].size();
    std::size_t cross = 0;
    for (const auto& u : g.neighbors(v)) {
      if (block_of[u] == block_of[v]) {
        throw Error("not-complete-multipartite", "edge " + make_edge(u, v).key() + " lies inside a block");
      }
      ++cross;
    }
    if (cross != expected) {
      throw Error("not-complete-multipartite", "vertex '" + v + "' misses an edge to another block");
    }
  }
  return blocks;
}

inline LabeledRootedTree representing_tree(const FiniteMetricSpace& space) {
  require_ultrametric(space);
  std::vector<Vertex> ids;
  std::vector<std::pair<Vertex, Vertex>> edges;
  LabelFn labels;
  std::map<Vertex, std::vector<Vertex>> payloads;

  std::vector<Vertex> all = space.points();
  std::sort(all.begin(), all.end());
  std::vector<std::vector<Vertex>> pending{all};
  while (!pending.empty()) {
    std::vector<Vertex> ball = std::move(pending.back());
    pending.pop_back();
    const Vertex id = ball_id(ball);
    ids.push_back(id);
    payloads[id] = ball;
    if (ball.size() == 1) {
      labels[id] = 0;
      continue;
    }
    const FiniteMetricSpace sub = restrict(space, ball);
    labels[id] = sub.diameter();
    for (auto& block : multipartite_parts(diametrical_graph(sub))) {
      edges.emplace_back(id, ball_id(block));
      pending.push_back(std::move(block));
    }
  }
  const Vertex root = ball_id(all);
  return {RootedTree(Tree(std::move(ids), edges), root), std::move(labels), std::move(payloads)};
}

// All balls B_r(c), read off the representing tree's vertex payloads.
inline std::vector<std::vector<Vertex>> ballean(const FiniteMetricSpace& space) {
  const LabeledRootedTree tx = representing_tree(space);
  std::set<std::vector<Vertex>> balls;
  for (const auto& [id, ball] : tx.payloads) balls.insert(ball);
  return {balls.begin(), balls.end()};
}

// The ballean with the Hausdorff distance; points are named by ball_id.
inline FiniteMetricSpace ballean_space(const FiniteMetricSpace& space) {
  const auto balls = ballean(space);
  std::vector<Vertex> ids;
  for (const auto& b : balls) ids.push_back(ball_id(b));
  DistanceMatrix dist(balls.size(), std::vector<Rational>(balls.size()));
  for (std::size_t i = 0; i < balls.size(); ++i) {
    for (std::size_t j = 0; j < balls.size(); ++j) {
      dist[i][j] = i == j ? Rational(0) : hausdorff_distance(space, balls[i], balls[j]);
    }
  }
  return FiniteMetricSpace(std::move(ids), std::move(dist));
}

// The representing tree with one extra 0-labeled leaf under every internal
// vertex. The extra leaf of vertex v is named v + "*" and carries v's ball.
inline LabeledRootedTree ballean_tree(const FiniteMetricSpace& space) {
  LabeledRootedTree tx = representing_tree(space);
  std::vector<Vertex> ids = tx.tree.vertices();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : tx.tree.edges()) edges.emplace_back(e.first, e.second);
  for (const auto& v : tx.tree.vertices()) {
    if (tx.tree.out_degree(v) == 0) continue;
    const Vertex extra = v + "*";
    ids.push_back(extra);
    edges.emplace_back(v, extra);
    tx.labels[extra] = 0;
    tx.payloads[extra] = tx.payloads.at(v);
  }
  const Vertex root = tx.tree.root();
  return {RootedTree(Tree(std::move(ids), edges), root), std::move(tx.labels), std::move(tx.payloads)};
}

}  // namespace ultratree

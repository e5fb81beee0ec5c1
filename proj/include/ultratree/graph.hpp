#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ultratree/error.hpp"
#include "ultratree/rational.hpp"

namespace ultratree {

// Vertex identifiers are opaque strings; lexicographic order is the
// determinism order everywhere in the library.
using Vertex = std::string;

// Unordered pair of distinct vertices, stored with first < second.
struct Edge {
  Vertex first;
  Vertex second;

  auto operator<=>(const Edge&) const = default;

  bool contains(const Vertex& v) const { return v == first || v == second; }
  const Vertex& other(const Vertex& v) const { return v == first ? second : first; }
  // "u|v" with u < v, the key used by the JSON schema.
  std::string key() const { return first + "|" + second; }
};

inline Edge make_edge(const Vertex& u, const Vertex& v) {
  if (u == v) throw Error("self-loop", "self-loop at vertex '" + u + "'");
  return u < v ? Edge{u, v} : Edge{v, u};
}

using WeightFn = std::map<Edge, Rational>;
using LabelFn = std::map<Vertex, Rational>;
// Vertex sequence of a path; consecutive entries are adjacent.
using Path = std::vector<Vertex>;
// Vertex sequence of a cycle; the closing edge back to the front is implied.
using Cycle = std::vector<Vertex>;

class Graph {
 public:
  Graph() = default;

  Graph(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : vertices_(std::move(vertices)) {
    std::set<Edge> es;
    for (const auto& [u, v] : edges) es.insert(make_edge(u, v));
    init(std::move(es));
  }

  Graph(std::vector<Vertex> vertices, std::set<Edge> edges) : vertices_(std::move(vertices)) {
    init(std::move(edges));
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool contains(const Vertex& v) const { return adjacency_.count(v) != 0; }

  bool adjacent(const Vertex& u, const Vertex& v) const {
    return u != v && edges_.count(make_edge(u, v)) != 0;
  }

  const std::set<Vertex>& neighbors(const Vertex& v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) throw Error("vertex-not-found", "unknown vertex '" + v + "'");
    return it->second;
  }

  std::size_t degree(const Vertex& v) const { return neighbors(v).size(); }

  Graph without_edge(const Edge& e) const {
    std::set<Edge> es = edges_;
    es.erase(e);
    return Graph(vertices_, std::move(es));
  }

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  void init(std::set<Edge> edges) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
      throw Error("duplicate-vertex", "vertex identifiers must be unique");
    }
    for (const auto& v : vertices_) adjacency_[v];
    for (const auto& e : edges) {
      if (e.first == e.second) throw Error("self-loop", "self-loop at vertex '" + e.first + "'");
      auto a = adjacency_.find(e.first);
      auto b = adjacency_.find(e.second);
      if (a == adjacency_.end() || b == adjacency_.end()) {
        throw Error("vertex-not-found", "edge " + e.key() + " has an endpoint outside the vertex set");
      }
      a->second.insert(e.second);
      b->second.insert(e.first);
    }
    edges_ = std::move(edges);
  }

  std::vector<Vertex> vertices_;
  std::set<Edge> edges_;
  std::map<Vertex, std::set<Vertex>> adjacency_;
};

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::set<Vertex> seen;
  for (const auto& start : g.vertices()) {
    if (seen.count(start)) continue;
    std::vector<Vertex> component;
    std::vector<Vertex> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (const auto& u : g.neighbors(v)) {
        if (seen.insert(u).second) stack.push_back(u);
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline void require_connected(const Graph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) {
    throw Error("disconnected-graph", "graph must be nonempty and connected");
  }
}

// Some cycle of g, or nothing when g is a forest. The cycle starts at its
// lexicographically smallest vertex and continues toward the smaller of that
// vertex's two cycle neighbours.
inline std::optional<Cycle> find_cycle(const Graph& g) {
  std::map<Vertex, Vertex> parent;
  std::map<Vertex, int> depth;
  for (const auto& start : g.vertices()) {
    if (depth.count(start)) continue;
    depth[start] = 0;
    // Iterative DFS; each frame remembers the next neighbour to visit.
    std::vector<std::pair<Vertex, std::set<Vertex>::const_iterator>> stack;
    stack.emplace_back(start, g.neighbors(start).begin());
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      if (it == g.neighbors(v).end()) {
        stack.pop_back();
        continue;
      }
      const Vertex u = *it++;
      auto pit = parent.find(v);
      if (pit != parent.end() && pit->second == u) continue;
      if (depth.count(u)) {
        // Back edge v -> u closes a cycle through the DFS tree path u..v.
        Cycle cycle;
        for (Vertex x = v; x != u; x = parent.at(x)) cycle.push_back(x);
        cycle.push_back(u);
        auto smallest = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), smallest, cycle.end());
        if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      parent[u] = v;
      depth[u] = depth[v] + 1;
      stack.emplace_back(u, g.neighbors(u).begin());
    }
  }
  return std::nullopt;
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

class Tree {
 public:
  explicit Tree(Graph g) : graph_(std::move(g)) {
    if (!is_tree(graph_)) throw Error("not-a-tree", "graph is not a nonempty connected acyclic graph");
  }

  Tree(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : Tree(Graph(std::move(vertices), edges)) {}

  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& vertices() const { return graph_.vertices(); }
  const std::set<Edge>& edges() const { return graph_.edges(); }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  bool contains(const Vertex& v) const { return graph_.contains(v); }
  const std::set<Vertex>& neighbors(const Vertex& v) const { return graph_.neighbors(v); }
  std::size_t degree(const Vertex& v) const { return graph_.degree(v); }

  // Vertices of degree < 2 (the lone vertex of a one-vertex tree included).
  std::vector<Vertex> leaves() const {
    std::vector<Vertex> out;
    for (const auto& v : vertices()) {
      if (degree(v) < 2) out.push_back(v);
    }
    return out;
  }

  bool operator==(const Tree& other) const { return graph_ == other.graph_; }

 private:
  Graph graph_;
};

inline void require_vertex(const Graph& g, const Vertex& v) {
  if (!g.contains(v)) throw Error("vertex-not-found", "unknown vertex '" + v + "'");
}

// The unique u-v path, u first.
inline Path find_path(const Tree& t, const Vertex& u, const Vertex& v) {
  require_vertex(t.graph(), u);
  require_vertex(t.graph(), v);
  std::map<Vertex, Vertex> towards_u;
  std::vector<Vertex> stack{u};
  towards_u[u] = u;
  while (!stack.empty() && !towards_u.count(v)) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const auto& y : t.neighbors(x)) {
      if (towards_u.emplace(y, x).second) stack.push_back(y);
    }
  }
  Path path{v};
  while (path.back() != u) path.push_back(towards_u.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

// One or two middle vertices of a longest path (leaf-stripping centers).
inline std::vector<Vertex> tree_centers(const Tree& t) {
  std::map<Vertex, std::size_t> remaining;
  std::vector<Vertex> layer;
  for (const auto& v : t.vertices()) {
    remaining[v] = t.degree(v);
    if (t.degree(v) <= 1) layer.push_back(v);
  }
  std::size_t left = t.vertex_count();
  while (left > 2) {
    std::vector<Vertex> next;
    left -= layer.size();
    for (const auto& leaf : layer) {
      for (const auto& u : t.neighbors(leaf)) {
        if (--remaining[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

class RootedTree {
 public:
  RootedTree(Tree tree, Vertex root) : tree_(std::move(tree)), root_(std::move(root)) {
    require_vertex(tree_.graph(), root_);
    order_.push_back(root_);
    children_[root_];
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const Vertex v = order_[i];
      for (const auto& u : tree_.neighbors(v)) {
        if (parent_.count(v) && parent_.at(v) == u) continue;
        parent_[u] = v;
        children_[v].push_back(u);
        children_[u];
        order_.push_back(u);
      }
    }
  }

  const Tree& tree() const { return tree_; }
  const Vertex& root() const { return root_; }
  const std::vector<Vertex>& vertices() const { return tree_.vertices(); }
  const std::set<Edge>& edges() const { return tree_.edges(); }
  std::size_t vertex_count() const { return tree_.vertex_count(); }
  bool contains(const Vertex& v) const { return tree_.contains(v); }

  std::optional<Vertex> parent(const Vertex& v) const {
    require_vertex(tree_.graph(), v);
    auto it = parent_.find(v);
    if (it == parent_.end()) return std::nullopt;
    return it->second;
  }

  // Direct successors, lexicographically ordered.
  const std::vector<Vertex>& children(const Vertex& v) const {
    auto it = children_.find(v);
    if (it == children_.end()) throw Error("vertex-not-found", "unknown vertex '" + v + "'");
    return it->second;
  }

  // delta+: degree for the root, degree - 1 otherwise.
  std::size_t out_degree(const Vertex& v) const { return children(v).size(); }

  // Breadth-first from the root; every parent precedes its children.
  const std::vector<Vertex>& top_down() const { return order_; }

  // Root first, v last.
  Path path_from_root(const Vertex& v) const {
    require_vertex(tree_.graph(), v);
    Path path{v};
    while (path.back() != root_) path.push_back(parent_.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
  }

  Edge parent_edge(const Vertex& v) const {
    auto p = parent(v);
    if (!p) throw Error("vertex-not-found", "root has no parent edge");
    return make_edge(*p, v);
  }

  bool is_planted() const { return out_degree(root_) == 1; }

  bool operator==(const RootedTree& other) const {
    return root_ == other.root_ && tree_ == other.tree_;
  }

 private:
  Tree tree_;
  Vertex root_;
  std::map<Vertex, Vertex> parent_;
  std::map<Vertex, std::vector<Vertex>> children_;
  std::vector<Vertex> order_;
};

struct DegreeSets {
  std::set<Vertex> out0;      // delta+ = 0
  std::set<Vertex> out1;      // delta+ = 1
  std::set<Vertex> out2plus;  // delta+ >= 2
};

inline DegreeSets degree_sets(const RootedTree& rt) {
  DegreeSets sets;
  for (const auto& v : rt.vertices()) {
    switch (rt.out_degree(v)) {
      case 0: sets.out0.insert(v); break;
      case 1: sets.out1.insert(v); break;
      default: sets.out2plus.insert(v); break;
    }
  }
  return sets;
}

// v together with all of its successors, rooted at v.
inline RootedTree subtree_below(const RootedTree& rt, const Vertex& v) {
  require_vertex(rt.tree().graph(), v);
  std::vector<Vertex> keep{v};
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (const auto& c : rt.children(keep[i])) {
      keep.push_back(c);
      edges.emplace_back(keep[i], c);
    }
  }
  return RootedTree(Tree(std::move(keep), edges), v);
}

inline void require_total(const Graph& g, const LabelFn& labels) {
  for (const auto& v : g.vertices()) {
    auto it = labels.find(v);
    if (it == labels.end()) throw Error("invalid-labeling", "no label for vertex '" + v + "'");
    if (it->second < 0) throw Error("invalid-labeling", "negative label at '" + v + "'");
  }
  if (labels.size() != g.vertex_count()) {
    throw Error("invalid-labeling", "labeling mentions vertices outside the graph");
  }
}

inline void require_total(const Graph& g, const WeightFn& weights) {
  for (const auto& e : g.edges()) {
    auto it = weights.find(e);
    if (it == weights.end()) throw Error("invalid-weight", "no weight for edge " + e.key());
    if (it->second < 0) throw Error("invalid-weight", "negative weight on " + e.key());
  }
  if (weights.size() != g.edge_count()) {
    throw Error("invalid-weight", "weight mentions edges outside the graph");
  }
}

inline bool strictly_positive(const WeightFn& weights) {
  return std::all_of(weights.begin(), weights.end(), [](const auto& kv) { return kv.second > 0; });
}

inline void require_strictly_positive(const Graph& g, const WeightFn& weights) {
  require_total(g, weights);
  if (!strictly_positive(weights)) {
    throw Error("non-strictly-positive-weight", "every edge weight must be > 0");
  }
}

}  // namespace ultratree

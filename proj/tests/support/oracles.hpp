#pragma once

// Brute-force reference implementations. They deliberately share no code with
// the library algorithms they check: paths come from BFS or exhaustive DFS,
// isomorphisms and isometries from enumerating permutations.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ultratree/graph.hpp"
#include "ultratree/metric.hpp"
#include "ultratree/rational.hpp"

namespace ultratree::testing {

inline constexpr std::size_t kPathOracleLimit = 10;

// Shortest (by edge count) u-v path by BFS; in a tree this is the unique path.
inline Path bfs_path(const Graph& g, const Vertex& u, const Vertex& v) {
  std::map<Vertex, Vertex> prev;
  std::deque<Vertex> queue{u};
  prev[u] = u;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (const auto& y : g.neighbors(x)) {
      if (prev.emplace(y, x).second) queue.push_back(y);
    }
  }
  Path path{v};
  while (path.back() != u) path.push_back(prev.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

// Every simple u-v path (u != v).
inline std::vector<Path> all_simple_paths(const Graph& g, const Vertex& u, const Vertex& v) {
  if (g.vertex_count() > kPathOracleLimit) throw std::length_error("path oracle limited to 10 vertices");
  std::vector<Path> out;
  Path current{u};
  std::set<Vertex> on_path{u};
  auto dfs = [&](auto&& self, const Vertex& x) -> void {
    if (x == v) {
      out.push_back(current);
      return;
    }
    for (const auto& y : g.neighbors(x)) {
      if (on_path.count(y)) continue;
      current.push_back(y);
      on_path.insert(y);
      self(self, y);
      on_path.erase(y);
      current.pop_back();
    }
  };
  dfs(dfs, u);
  return out;
}

// min over simple paths of the max label on the path.
inline DistanceMatrix minimax_by_paths(const Graph& g, const LabelFn& l) {
  const auto& vs = g.vertices();
  DistanceMatrix m(vs.size(), std::vector<Rational>(vs.size(), Rational(0)));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      std::optional<Rational> best;
      for (const auto& p : all_simple_paths(g, vs[i], vs[j])) {
        Rational top = 0;
        for (const auto& x : p) top = std::max(top, l.at(x));
        if (!best || top < *best) best = top;
      }
      m[i][j] = *best;
    }
  }
  return m;
}

// min over simple paths of the weight sum.
inline DistanceMatrix shortest_by_paths(const Graph& g, const WeightFn& w) {
  const auto& vs = g.vertices();
  DistanceMatrix m(vs.size(), std::vector<Rational>(vs.size(), Rational(0)));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      std::optional<Rational> best;
      for (const auto& p : all_simple_paths(g, vs[i], vs[j])) {
        Rational sum = 0;
        for (std::size_t k = 0; k + 1 < p.size(); ++k) sum += w.at(make_edge(p[k], p[k + 1]));
        if (!best || sum < *best) best = sum;
      }
      m[i][j] = *best;
    }
  }
  return m;
}

// Sum of weights / max of labels along the BFS path of a tree.
inline Rational path_weight(const Graph& t, const WeightFn& w, const Vertex& u, const Vertex& v) {
  const Path p = bfs_path(t, u, v);
  Rational sum = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) sum += w.at(make_edge(p[k], p[k + 1]));
  return sum;
}

inline Rational path_max_label(const Graph& t, const LabelFn& l, const Vertex& u, const Vertex& v) {
  if (u == v) return 0;
  Rational top = 0;
  for (const auto& x : bfs_path(t, u, v)) top = std::max(top, l.at(x));
  return top;
}

inline bool strong_triangle(const DistanceMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[i][j] > std::max(m[i][k], m[k][j])) return false;
  return true;
}

inline bool is_ultrametric_matrix(const DistanceMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if ((i == j) != (m[i][j] == 0) || m[i][j] != m[j][i]) return false;
  return strong_triangle(m);
}

// All closed balls {x : d(c, x) <= r} for every center c and every radius in
// the distance values together with 0.
inline std::set<std::vector<Vertex>> brute_balls(const FiniteMetricSpace& s) {
  std::set<Rational> radii{Rational(0)};
  for (const auto& row : s.matrix()) radii.insert(row.begin(), row.end());
  std::set<std::vector<Vertex>> balls;
  for (std::size_t c = 0; c < s.size(); ++c) {
    for (const auto& r : radii) {
      std::vector<Vertex> ball;
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (s(c, x) <= r) ball.push_back(s.points()[x]);
      }
      std::sort(ball.begin(), ball.end());
      balls.insert(ball);
    }
  }
  return balls;
}

inline Rational brute_hausdorff(const FiniteMetricSpace& s, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  Rational best = 0;
  for (const auto& x : a) {
    Rational to_b = -1;
    for (const auto& y : b) {
      if (to_b < 0 || s.distance(x, y) < to_b) to_b = s.distance(x, y);
    }
    best = std::max(best, to_b);
  }
  for (const auto& y : b) {
    Rational to_a = -1;
    for (const auto& x : a) {
      if (to_a < 0 || s.distance(x, y) < to_a) to_a = s.distance(x, y);
    }
    best = std::max(best, to_a);
  }
  return best;
}

// Payloads that a brute-force isomorphism must respect.
struct BrutePayload {
  std::optional<Vertex> root;
  const LabelFn* labels = nullptr;
  const WeightFn* weights = nullptr;
};

// Enumerates all bijections V(g1) -> V(g2).
inline bool brute_isomorphic(const Graph& g1, const BrutePayload& p1, const Graph& g2, const BrutePayload& p2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  std::vector<Vertex> image = g2.vertices();
  std::sort(image.begin(), image.end());
  const auto& dom = g1.vertices();
  do {
    std::map<Vertex, Vertex> f;
    for (std::size_t i = 0; i < dom.size(); ++i) f[dom[i]] = image[i];
    bool ok = true;
    if (p1.root && p2.root) ok = f.at(*p1.root) == *p2.root;
    for (std::size_t i = 0; ok && i < dom.size(); ++i) {
      if (p1.labels && p1.labels->at(dom[i]) != p2.labels->at(image[i])) ok = false;
    }
    for (auto it = g1.edges().begin(); ok && it != g1.edges().end(); ++it) {
      const Vertex& a = f.at(it->first);
      const Vertex& b = f.at(it->second);
      if (!g2.adjacent(a, b)) ok = false;
      else if (p1.weights && p1.weights->at(*it) != p2.weights->at(make_edge(a, b))) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

inline bool brute_isometric(const FiniteMetricSpace& s1, const FiniteMetricSpace& s2) {
  if (s1.size() != s2.size()) return false;
  std::vector<std::size_t> perm(s1.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < perm.size(); ++i)
      for (std::size_t j = 0; ok && j < perm.size(); ++j) ok = s1(i, j) == s2(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ultratree::testing

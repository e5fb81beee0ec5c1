#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ultratree/error.hpp"
#include "ultratree/graph.hpp"
#include "ultratree/rational.hpp"

namespace ultratree {

using DistanceMatrix = std::vector<std::vector<Rational>>;

// Points plus an exact symmetric, zero-diagonal, nonnegative distance matrix.
// Positivity and the triangle inequalities are not enforced here so that
// pseudoultrametrics flow through the same type; see classify_metric.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  FiniteMetricSpace(std::vector<Vertex> points, DistanceMatrix dist)
      : points_(std::move(points)), dist_(std::move(dist)) {
    const std::size_t n = points_.size();
    if (dist_.size() != n) throw Error("asymmetric-or-nonzero-diagonal", "matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
      if (dist_[i].size() != n) throw Error("asymmetric-or-nonzero-diagonal", "matrix is not square");
      if (!index_.emplace(points_[i], i).second) {
        throw Error("duplicate-vertex", "duplicate point '" + points_[i] + "'");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (dist_[i][i] != 0) throw Error("asymmetric-or-nonzero-diagonal", "nonzero diagonal entry");
      for (std::size_t j = 0; j < n; ++j) {
        if (dist_[i][j] != dist_[j][i]) throw Error("asymmetric-or-nonzero-diagonal", "matrix is not symmetric");
        if (dist_[i][j] < 0) throw Error("negative-distance", "distances must be nonnegative");
      }
    }
  }

  const std::vector<Vertex>& points() const { return points_; }
  const DistanceMatrix& matrix() const { return dist_; }
  std::size_t size() const { return points_.size(); }

  bool contains(const Vertex& x) const { return index_.count(x) != 0; }

  std::size_t index_of(const Vertex& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw Error("vertex-not-found", "unknown point '" + x + "'");
    return it->second;
  }

  const Rational& operator()(std::size_t i, std::size_t j) const { return dist_[i][j]; }

  const Rational& distance(const Vertex& x, const Vertex& y) const {
    return dist_[index_of(x)][index_of(y)];
  }

  // Max entry; 0 for the empty and one-point spaces.
  Rational diameter() const {
    Rational d = 0;
    for (const auto& row : dist_) {
      for (const auto& x : row) d = std::max(d, x);
    }
    return d;
  }

  bool operator==(const FiniteMetricSpace& other) const {
    return points_ == other.points_ && dist_ == other.dist_;
  }

 private:
  std::vector<Vertex> points_;
  DistanceMatrix dist_;
  std::map<Vertex, std::size_t> index_;
};

enum class MetricClass {
  NotSemimetric,      // none of the tags below applies
  MetricOnly,         // metric, strong triangle inequality fails
  Ultrametric,
  PseudoUltrametric,  // strong triangle holds but distinct points may be at 0
};

inline std::string_view to_string(MetricClass c) {
  switch (c) {
    case MetricClass::NotSemimetric: return "NotSemimetric";
    case MetricClass::MetricOnly: return "MetricOnly";
    case MetricClass::Ultrametric: return "Ultrametric";
    case MetricClass::PseudoUltrametric: return "PseudoUltrametric";
  }
  return "NotSemimetric";
}

inline MetricClass parse_metric_class(std::string_view text) {
  for (auto c : {MetricClass::NotSemimetric, MetricClass::MetricOnly, MetricClass::Ultrametric,
                 MetricClass::PseudoUltrametric}) {
    if (to_string(c) == text) return c;
  }
  throw ParseError("unknown metric class '" + std::string(text) + "'");
}

inline MetricClass classify_metric(const DistanceMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error("asymmetric-or-nonzero-diagonal", "matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 0) throw Error("asymmetric-or-nonzero-diagonal", "nonzero diagonal entry");
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != m[j][i]) throw Error("asymmetric-or-nonzero-diagonal", "matrix is not symmetric");
    }
  }
  bool nonnegative = true;
  bool positive = true;
  bool triangle = true;
  bool strong = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] < 0) nonnegative = false;
      if (m[i][j] <= 0) positive = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (m[i][j] > m[i][k] + m[k][j]) triangle = false;
        if (m[i][j] > std::max(m[i][k], m[k][j])) strong = false;
      }
    }
  }
  if (!nonnegative) return MetricClass::NotSemimetric;
  if (positive && strong) return MetricClass::Ultrametric;
  if (positive && triangle) return MetricClass::MetricOnly;
  if (strong) return MetricClass::PseudoUltrametric;
  return MetricClass::NotSemimetric;
}

inline MetricClass classify_metric(const FiniteMetricSpace& s) { return classify_metric(s.matrix()); }

// A distance matrix paired with the strongest class it satisfies.
struct ClassifiedSpace {
  FiniteMetricSpace space;
  MetricClass metric_class;
};

// d_w: sum of the weights along the unique path.
inline FiniteMetricSpace additive_metric(const Tree& t, const WeightFn& w) {
  require_strictly_positive(t.graph(), w);
  const auto& vs = t.vertices();
  const std::size_t n = vs.size();
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[vs[i]] = i;
  DistanceMatrix dist(n, std::vector<Rational>(n, Rational(0)));
  // One traversal per source; O(n^2) overall.
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::pair<Vertex, Vertex>> stack{{vs[s], vs[s]}};
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      for (const auto& u : t.neighbors(v)) {
        if (u == from) continue;
        dist[s][index[u]] = dist[s][index[v]] + w.at(make_edge(u, v));
        stack.emplace_back(u, v);
      }
    }
  }
  return FiniteMetricSpace(vs, std::move(dist));
}

// rho_w: minimum weight over all paths (Floyd-Warshall).
inline FiniteMetricSpace shortest_path_metric(const Graph& g, const WeightFn& w) {
  require_connected(g);
  require_strictly_positive(g, w);
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[vs[i]] = i;
  std::vector<std::vector<std::optional<Rational>>> best(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i) best[i][i] = Rational(0);
  for (const auto& e : g.edges()) {
    const auto a = index[e.first];
    const auto b = index[e.second];
    best[a][b] = best[b][a] = w.at(e);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!best[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!best[k][j]) continue;
        Rational via = *best[i][k] + *best[k][j];
        if (!best[i][j] || via < *best[i][j]) best[i][j] = via;
      }
    }
  }
  DistanceMatrix dist(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = *best[i][j];
  }
  return FiniteMetricSpace(vs, std::move(dist));
}

namespace detail {

// Ultrametric iff every edge has an endpoint with a positive label.
inline MetricClass label_metric_class(const Graph& g, const LabelFn& l) {
  for (const auto& e : g.edges()) {
    if (l.at(e.first) == 0 && l.at(e.second) == 0) return MetricClass::PseudoUltrametric;
  }
  return MetricClass::Ultrametric;
}

}  // namespace detail

// d_l: max label over the unique path, endpoints included; 0 on the diagonal.
inline ClassifiedSpace label_tree_metric(const Tree& t, const LabelFn& l) {
  require_total(t.graph(), l);
  const auto& vs = t.vertices();
  const std::size_t n = vs.size();
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[vs[i]] = i;
  DistanceMatrix dist(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t s = 0; s < n; ++s) {
    // Carry the running max along each branch of the traversal from vs[s].
    std::vector<std::tuple<Vertex, Vertex, Rational>> stack{{vs[s], vs[s], l.at(vs[s])}};
    while (!stack.empty()) {
      auto [v, from, running] = stack.back();
      stack.pop_back();
      for (const auto& u : t.neighbors(v)) {
        if (u == from) continue;
        Rational m = std::max(running, l.at(u));
        dist[s][index[u]] = m;
        stack.emplace_back(u, v, m);
      }
    }
  }
  return {FiniteMetricSpace(vs, std::move(dist)), detail::label_metric_class(t.graph(), l)};
}

// rho_l: min over paths of the max vertex label, a bottleneck Floyd-Warshall.
inline ClassifiedSpace minimax_label_metric(const Graph& g, const LabelFn& l) {
  require_connected(g);
  require_total(g, l);
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[vs[i]] = i;
  std::vector<std::vector<std::optional<Rational>>> best(n, std::vector<std::optional<Rational>>(n));
  for (const auto& e : g.edges()) {
    const auto a = index[e.first];
    const auto b = index[e.second];
    best[a][b] = best[b][a] = std::max(l.at(e.first), l.at(e.second));
  }
  // best[i][k] already includes l(k), so max(best[i][k], best[k][j]) covers the
  // whole concatenated path.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || !best[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k || j == i || !best[k][j]) continue;
        Rational via = std::max(*best[i][k], *best[k][j]);
        if (!best[i][j] || via < *best[i][j]) best[i][j] = via;
      }
    }
  }
  DistanceMatrix dist(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) dist[i][j] = *best[i][j];
    }
  }
  return {FiniteMetricSpace(vs, std::move(dist)), detail::label_metric_class(g, l)};
}

inline FiniteMetricSpace restrict(const FiniteMetricSpace& space, const std::vector<Vertex>& subset) {
  if (subset.empty()) throw Error("empty-set", "restriction to the empty set");
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const auto& x : subset) idx.push_back(space.index_of(x));
  DistanceMatrix dist(idx.size(), std::vector<Rational>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) dist[i][j] = space(idx[i], idx[j]);
  }
  return FiniteMetricSpace(subset, std::move(dist));
}

inline FiniteMetricSpace restrict(const FiniteMetricSpace& space, const std::set<Vertex>& subset) {
  return restrict(space, std::vector<Vertex>(subset.begin(), subset.end()));
}

// max of the two directed sup-inf distances.
inline Rational hausdorff_distance(const FiniteMetricSpace& space, const std::vector<Vertex>& a,
                                   const std::vector<Vertex>& b) {
  if (a.empty() || b.empty()) throw Error("empty-set", "Hausdorff distance needs nonempty sets");
  auto directed = [&](const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    Rational sup = 0;
    for (const auto& x : from) {
      Rational inf = space.distance(x, to.front());
      for (const auto& y : to) inf = std::min(inf, space.distance(x, y));
      sup = std::max(sup, inf);
    }
    return sup;
  };
  return std::max(directed(a, b), directed(b, a));
}

// Diameter of a subset; 0 for empty and singleton subsets.
inline Rational diameter_of(const FiniteMetricSpace& space, const std::vector<Vertex>& subset) {
  Rational d = 0;
  for (const auto& x : subset) {
    for (const auto& y : subset) d = std::max(d, space.distance(x, y));
  }
  return d;
}

}  // namespace ultratree

#pragma once

// Small hand-entered trees and graphs. The ones also in corpus/ are typed in
// again here so the corpus and the tests do not share a source.

#include <string>
#include <utility>
#include <vector>

#include "ultratree/duality.hpp"
#include "ultratree/graph.hpp"
#include "ultratree/rational.hpp"

namespace ultratree::testing {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

struct WeightedEdge {
  Vertex u;
  Vertex v;
  Rational w;
};

inline std::pair<Tree, WeightFn> weighted_tree(const std::vector<Vertex>& vs, const std::vector<WeightedEdge>& es) {
  EdgeList edges;
  WeightFn w;
  for (const auto& e : es) {
    edges.emplace_back(e.u, e.v);
    w[make_edge(e.u, e.v)] = e.w;
  }
  return {Tree(vs, edges), std::move(w)};
}

// Planted tree with K = 7: r - a - b, b has the two deepest leaves c and d.
inline EquidistantTree planted_k7() {
  auto [t, w] = weighted_tree({"r", "a", "b", "c", "d"}, {{"r", "a", 1}, {"a", "b", 2}, {"b", "c", 4}, {"b", "d", 4}});
  return make_equidistant(RootedTree(t, "r"), w);
}

// Equidistant tree with K = 5 and its dual labeling (root 10).
inline EquidistantTree equidistant_k5() {
  auto [t, w] = weighted_tree({"r", "x", "m", "n", "p", "q", "s", "t", "p1", "p2", "q1", "q2", "n1", "n2"},
                              {{"r", "x", 5},  {"r", "m", 1},  {"r", "n", 2},  {"m", "p", 2},  {"m", "q", 2},
                               {"m", "s", 4},  {"m", "t", 4},  {"p", "p1", 2}, {"p", "p2", 2}, {"q", "q1", 2},
                               {"q", "q2", 2}, {"n", "n1", 3}, {"n", "n2", 3}});
  return make_equidistant(RootedTree(t, "r"), w);
}

inline LabelFn equidistant_k5_labels() {
  return {{"r", 10}, {"x", 0},  {"m", 8},  {"n", 6},  {"p", 4},  {"q", 4},  {"s", 0},
          {"t", 0},  {"p1", 0}, {"p2", 0}, {"q1", 0}, {"q2", 0}, {"n1", 0}, {"n2", 0}};
}

// T(r, w) with V1+ = {r, v2}; its reduction is v1 with two edges of weight 3.
inline EquidistantTree degree_one_root_tree() {
  auto [t, w] = weighted_tree({"r", "v1", "v2", "v3", "v4"},
                              {{"r", "v1", 1}, {"v1", "v3", 3}, {"v1", "v2", 2}, {"v2", "v4", 1}});
  return make_equidistant(RootedTree(t, "r"), w);
}

// Centers exactly v1, v4, v5.
inline std::pair<Tree, WeightFn> three_center_tree() {
  return weighted_tree({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"},
                       {{"v1", "v2", 2}, {"v1", "v3", 2}, {"v1", "v4", 4}, {"v1", "v5", 4},
                        {"v2", "v6", 2}, {"v2", "v7", 2}, {"v3", "v8", 2}, {"v3", "v9", 2}});
}

// Leaves x1..x4 are ultrametric, but no root is a center.
inline std::pair<Tree, WeightFn> centerless_tree() {
  return weighted_tree({"x1", "x2", "x3", "x4", "y1", "y2"},
                       {{"x1", "y1", 2}, {"x2", "y1", 2}, {"y1", "y2", 3}, {"y2", "x3", 1}, {"y2", "x4", 1}});
}

inline Graph six_vertex_graph() {
  const EdgeList edges{{"A", "B"}, {"B", "D"}, {"D", "F"}, {"F", "E"}, {"E", "C"}, {"C", "A"},
                       {"A", "D"}, {"D", "E"}, {"B", "C"}, {"C", "F"}, {"C", "D"}};
  return Graph({"A", "B", "C", "D", "E", "F"}, edges);
}

inline LabelFn six_vertex_labels() { return {{"A", 3}, {"B", 3}, {"C", 2}, {"D", 2}, {"E", 1}, {"F", 1}}; }

// The spanning tree drawn next to the graph.
inline Tree drawn_spanning_tree() {
  return Tree({"A", "B", "C", "D", "E", "F"}, EdgeList{{"A", "B"}, {"B", "D"}, {"D", "F"}, {"F", "E"}, {"C", "D"}});
}

// Representing tree of the minimax label metric of six_vertex_graph.
inline std::pair<RootedTree, LabelFn> minimax_representing_shape() {
  const RootedTree rt(Tree({"R", "a", "b", "M", "c", "d", "N", "e", "f"},
                           EdgeList{{"R", "a"}, {"R", "b"}, {"R", "M"}, {"M", "c"}, {"M", "d"}, {"M", "N"},
                                    {"N", "e"}, {"N", "f"}}),
                      "R");
  return {rt, {{"R", 3}, {"a", 0}, {"b", 0}, {"M", 2}, {"c", 0}, {"d", 0}, {"N", 1}, {"e", 0}, {"f", 0}}};
}

// Fourteen-vertex free tree; every internal vertex has degree >= 3.
inline RootedTree branching_tree() {
  return RootedTree(Tree({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10", "v11", "v12", "v13", "v14"},
                         EdgeList{{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}, {"v3", "v5"}, {"v3", "v6"},
                                  {"v3", "v7"}, {"v3", "v8"}, {"v5", "v11"}, {"v5", "v12"}, {"v6", "v13"},
                                  {"v6", "v14"}, {"v4", "v9"}, {"v4", "v10"}}),
                    "v1");
}

// Path a1 - ... - a5 and the star centered at a1, both labeled a_i = i - 1.
inline Tree labeled_path() {
  return Tree({"a1", "a2", "a3", "a4", "a5"}, EdgeList{{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a5"}});
}

inline Tree labeled_star() {
  return Tree({"a1", "a2", "a3", "a4", "a5"}, EdgeList{{"a1", "a2"}, {"a1", "a3"}, {"a1", "a4"}, {"a1", "a5"}});
}

inline LabelFn path_star_labels() { return {{"a1", 0}, {"a2", 1}, {"a3", 2}, {"a4", 3}, {"a5", 4}}; }

}  // namespace ultratree::testing

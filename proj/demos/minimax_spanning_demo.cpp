// Builds the labeled graph of the corpus file fig6.json by hand, then walks it
// through the minimax metric, its representing tree and a bottleneck spanning
// tree.
#include <iostream>
#include <utility>
#include <vector>

#include "ultratree/canonical.hpp"
#include "ultratree/representing.hpp"
#include "ultratree/transforms.hpp"

int main() {
  using namespace ultratree;
  const std::vector<std::pair<Vertex, Vertex>> edges{
      {"A", "B"}, {"B", "D"}, {"D", "F"}, {"F", "E"}, {"E", "C"}, {"C", "A"},
      {"A", "D"}, {"D", "E"}, {"B", "C"}, {"C", "F"}, {"C", "D"}};
  const Graph g({"A", "B", "C", "D", "E", "F"}, edges);
  const LabelFn l{{"A", 3}, {"B", 3}, {"C", 2}, {"D", 2}, {"E", 1}, {"F", 1}};

  const ClassifiedSpace rho = minimax_label_metric(g, l);
  std::cout << "minimax metric class: " << to_string(rho.metric_class) << "\n";

  const LabeledRootedTree tx = representing_tree(rho.space);
  std::cout << "representing tree code: " << canonical_code(tx).text << "\n";
  for (const auto& v : tx.tree.top_down()) {
    std::cout << "  " << v << " label " << to_string(tx.labels.at(v)) << "\n";
  }

  const Tree t = bottleneck_spanning_tree(g, l);
  std::cout << "spanning tree edges:";
  for (const auto& e : t.edges()) std::cout << " " << e.key();
  std::cout << "\nlabel metric preserved: " << std::boolalpha
            << (label_tree_metric(t, l).space == rho.space) << "\n";
}

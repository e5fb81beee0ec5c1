#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ultratree/analysis.hpp"
#include "ultratree/canonical.hpp"
#include "ultratree/duality.hpp"
#include "ultratree/json_io.hpp"
#include "ultratree/metric.hpp"
#include "ultratree/representing.hpp"
#include "ultratree/transforms.hpp"

#ifndef ULTRATREE_CORPUS_DIR
#define ULTRATREE_CORPUS_DIR "corpus"
#endif

namespace ultratree {

inline constexpr const char* kDefaultCorpusDir = ULTRATREE_CORPUS_DIR;
inline constexpr std::uint64_t kDefaultSeed = 1;

namespace detail {

inline Json vertex_set_json(const std::set<Vertex>& s) { return std::vector<Vertex>(s.begin(), s.end()); }

inline Json weights_json(const WeightFn& w) {
  Json j = Json::object();
  for (const auto& [e, x] : w) j[e.key()] = to_string(x);
  return j;
}

inline Json labels_json(const LabelFn& l) {
  Json j = Json::object();
  for (const auto& [v, x] : l) j[v] = to_string(x);
  return j;
}

inline FiniteMetricSpace tree_leaf_space(const GraphDocument& doc) {
  const Tree t(doc.graph);
  return restrict(additive_metric(t, weights_of(doc)), t.leaves());
}

inline Json spanning_report(const Graph& g, const LabelFn& l, const Tree& t) {
  bool spanning = t.vertices() == g.vertices();
  for (const auto& e : t.edges()) spanning = spanning && g.adjacent(e.first, e.second);
  const bool matches = label_tree_metric(t, l).space == minimax_label_metric(g, l).space;
  return {{"spanning", spanning}, {"matches_minimax", matches}};
}

// Result of one corpus check, compared against its "expect" entry.
inline Json evaluate_check(const GraphDocument& doc, const Json& check) {
  const std::string op = check.at("op").get<std::string>();
  if (op == "check_equidistant") {
    auto k = check_equidistant(rooted_tree_of(doc), weights_of(doc));
    return k ? Json(to_string(*k)) : Json(nullptr);
  }
  if (op == "degree_sets") {
    const DegreeSets s = degree_sets(rooted_tree_of(doc));
    return {{"out0", vertex_set_json(s.out0)}, {"out1", vertex_set_json(s.out1)},
            {"out2plus", vertex_set_json(s.out2plus)}};
  }
  if (op == "classify_leaves") return to_string(classify_metric(tree_leaf_space(doc)));
  if (op == "planted_check") {
    const auto et = make_equidistant(rooted_tree_of(doc), weights_of(doc));
    const PlantedCheck pc = planted_leaf_ultrametric_check(et);
    return {{"holds", pc.holds}, {"lhs", to_string(pc.lhs)}, {"rhs", to_string(pc.rhs)}};
  }
  if (op == "diameter_bound") {
    const Vertex root = check.contains("root") ? check["root"].get<Vertex>() : *doc.root;
    const auto et = make_equidistant(RootedTree(Tree(doc.graph), root), weights_of(doc));
    const DiameterBound b = diameter_bound_check(et);
    return {{"diam0", to_string(b.diam0)}, {"height", to_string(b.height)}, {"strict", b.strict},
            {"within_bound", b.within_bound}};
  }
  if (op == "weight_to_labeling") {
    const auto et = make_equidistant(rooted_tree_of(doc), weights_of(doc));
    return labels_json(weight_to_labeling(et).labels);
  }
  if (op == "labeling_to_weight") {
    const auto et = labeling_to_weight(make_monotone(rooted_tree_of(doc), labels_of(doc)));
    return {{"height", to_string(et.height)}, {"weights", weights_json(et.weights)}};
  }
  if (op == "leaf_swap") {
    const RootedTree rt = rooted_tree_of(doc);
    const auto f = leaf_swap_isometry(rt, labels_of(doc), check.at("vertex").get<Vertex>());
    const FiniteMetricSpace d = label_tree_metric(rt.tree(), labels_of(doc)).space;
    const Decoration dec{rt.root(), labels_of(doc), std::nullopt};
    return {{"isometry", is_isometry(d, d, f)},
            {"isomorphism", is_isomorphism(rt.tree().graph(), dec, rt.tree().graph(), dec, f)}};
  }
  if (op == "reduce_nabla") {
    const RootedTree rt = rooted_tree_of(doc);
    const auto et = make_equidistant(rt, weights_of(doc));
    const NablaResult r = reduce_nabla(et);
    const bool size_identity =
        r.reduced.tree.vertex_count() + degree_sets(rt).out1.size() == rt.vertex_count();
    return {{"root", r.new_root},
            {"vertices", r.reduced.tree.vertices()},
            {"weights", weights_json(r.reduced.weights)},
            {"removed", vertex_set_json(r.removed)},
            {"height", to_string(r.reduced.height)},
            {"size_identity", size_identity}};
  }
  if (op == "nabla_membership") {
    const auto et = make_equidistant(rooted_tree_of(doc), weights_of(doc));
    const Vertex x = check.at("vertex").get<Vertex>();
    return {{"geometric", nabla_geometric_membership(et, x)}, {"kept", reduce_nabla(et).reduced.tree.contains(x)}};
  }
  if (op == "centers") return centers(Tree(doc.graph), weights_of(doc));
  if (op == "find_path") {
    return find_path(Tree(doc.graph), check.at("from").get<Vertex>(), check.at("to").get<Vertex>());
  }
  if (op == "sphere_center_leaves") {
    auto sc = sphere_center_check(tree_leaf_space(doc));
    if (!sc) return nullptr;
    return {{"center", sc->first}, {"radius", to_string(sc->second)}};
  }
  if (op == "find_cycle") {
    auto c = find_cycle(doc.graph);
    bool ok = c && c->size() >= 3 && std::set<Vertex>(c->begin(), c->end()).size() == c->size();
    for (std::size_t i = 0; ok && i < c->size(); ++i) ok = doc.graph.adjacent((*c)[i], (*c)[(i + 1) % c->size()]);
    return {{"is_cycle", ok}};
  }
  if (op == "minimax_class") return to_string(minimax_label_metric(doc.graph, labels_of(doc)).metric_class);
  if (op == "multipartite_parts") {
    return multipartite_parts(diametrical_graph(minimax_label_metric(doc.graph, labels_of(doc)).space));
  }
  if (op == "representing_tree") {
    return canonical_code(representing_tree(minimax_label_metric(doc.graph, labels_of(doc)).space)).text;
  }
  if (op == "bottleneck_spanning_tree") {
    return spanning_report(doc.graph, labels_of(doc), bottleneck_spanning_tree(doc.graph, labels_of(doc)));
  }
  if (op == "spanning_candidate") {
    const auto edges = check.at("edges").get<std::vector<std::pair<Vertex, Vertex>>>();
    return spanning_report(doc.graph, labels_of(doc), Tree(doc.graph.vertices(), edges));
  }
  if (op == "counterexample") {
    const CounterexampleWeights cw = isometric_nonisomorphic_weights(doc.graph);
    const bool isometric = isometry_search(shortest_path_metric(doc.graph, cw.w1),
                                           shortest_path_metric(doc.graph, cw.w2))
                               .has_value();
    const bool isomorphic = are_isomorphic_graphs(doc.graph, Decoration{std::nullopt, std::nullopt, cw.w1},
                                                  doc.graph, Decoration{std::nullopt, std::nullopt, cw.w2});
    return {{"heavy", cw.heavy.key()},
            {"w1", to_string(cw.w1.at(cw.heavy))},
            {"w2", to_string(cw.w2.at(cw.heavy))},
            {"isometric", isometric},
            {"isomorphic", isomorphic}};
  }
  throw ParseError("unknown corpus check '" + op + "'");
}

inline Json expected_value(const Json& check) {
  if (check.contains("expect_tree")) {
    const GraphDocument t = graph_document_from_json(check["expect_tree"]);
    return canonical_code(rooted_tree_of(t), IsoFlavor::RootedLabeled,
                          Decoration{std::nullopt, labels_of(t), std::nullopt})
        .text;
  }
  return check.at("expect");
}

inline std::string check_name(const Json& check) {
  std::string name = check.at("op").get<std::string>();
  if (check.contains("vertex")) name += "(" + check["vertex"].get<std::string>() + ")";
  if (check.contains("root")) name += "@" + check["root"].get<std::string>();
  if (check.contains("from")) name += "(" + check["from"].get<std::string>() + "," + check["to"].get<std::string>() + ")";
  return name;
}

// Fisher-Yates with explicit modulo draws, so the order is the same with every
// standard library.
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng() % i]);
}

inline FiniteMetricSpace renamed_shuffled(const FiniteMetricSpace& s, std::mt19937_64& rng) {
  std::vector<std::size_t> order(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  seeded_shuffle(order, rng);
  std::vector<Vertex> names;
  DistanceMatrix m(s.size(), std::vector<Rational>(s.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    names.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < order.size(); ++j) m[i][j] = s(order[i], order[j]);
  }
  return FiniteMetricSpace(std::move(names), std::move(m));
}

}  // namespace detail

struct SelftestSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0; }
};

// Runs every check of every corpus file (sorted by file name), then a seeded
// fuzz section. Output is a pure function of the corpus and the seed.
inline SelftestSummary run_selftest(const std::string& corpus_dir, std::uint64_t seed, std::ostream& out) {
  SelftestSummary summary;
  auto report = [&](bool ok, const std::string& line, const std::string& detail = {}) {
    ++(ok ? summary.passed : summary.failed);
    out << (ok ? "PASS " : "FAIL ") << line;
    if (!ok && !detail.empty()) out << "  " << detail;
    out << "\n";
  };

  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(corpus_dir)) throw ParseError("corpus directory '" + corpus_dir + "' not found");
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const Json corpus = read_json_file(path.string());
    const std::string figure = corpus.value("figure", path.stem().string());
    out << "# " << figure << ": " << corpus.value("claim", "") << "\n";
    const GraphDocument doc = graph_document_from_json(corpus.at("graph"));
    for (const auto& check : corpus.at("checks")) {
      const std::string name = figure + " " + detail::check_name(check);
      try {
        const Json got = detail::evaluate_check(doc, check);
        const Json want = detail::expected_value(check);
        report(got == want, name, "got " + got.dump() + " expected " + want.dump());
      } catch (const Error& e) {
        report(false, name, "error " + e.code() + ": " + e.what());
      }
    }
  }

  out << "# fuzz (seed " << seed << ")\n";
  constexpr std::size_t kRounds = 60;
  std::mt19937_64 rng(seed);
  std::size_t round_trip = 0;
  std::size_t swap_witness = 0;
  std::size_t representing = 0;
  std::size_t isometry = 0;
  std::size_t swap_trials = 0;
  for (std::size_t i = 0; i < kRounds; ++i) {
    const MonotoneTree mt = generate_monotone(rng(), {1, 10, false});
    const EquidistantTree et = labeling_to_weight(mt);
    const MonotoneTree back = weight_to_labeling(et);
    if (back.labels == mt.labels && labeling_to_weight(back).weights == et.weights) ++round_trip;

    if (mt.tree.vertex_count() >= 2) {
      ++swap_trials;
      const auto f = leaf_swap_isometry(mt.tree, mt.labels);
      const FiniteMetricSpace d = label_tree_metric(mt.tree.tree(), mt.labels).space;
      const Decoration dec{std::nullopt, mt.labels, std::nullopt};
      if (is_isometry(d, d, f) && !is_isomorphism(mt.tree.tree().graph(), dec, mt.tree.tree().graph(), dec, f)) {
        ++swap_witness;
      }
    }

    const MonotoneTree shaped = generate_monotone(rng(), {1, 9, true});
    const LabeledRootedTree tx = representing_tree(leaf_space(shaped));
    if (canonical_code(tx) == canonical_code(shaped.tree, IsoFlavor::RootedLabeled,
                                             Decoration{std::nullopt, shaped.labels, std::nullopt})) {
      ++representing;
    }

    const FiniteMetricSpace a = leaf_space(shaped);
    const FiniteMetricSpace b = (rng() % 2 == 0) ? detail::renamed_shuffled(a, rng)
                                                 : leaf_space(generate_monotone(rng(), {1, 9, true}));
    if (ultrametric_isometric(a, b) == isometry_search(a, b).has_value()) ++isometry;
  }
  auto tally = [&](const std::string& name, std::size_t hits, std::size_t total) {
    report(hits == total, "fuzz " + name + " " + std::to_string(hits) + "/" + std::to_string(total));
  };
  tally("duality-round-trip", round_trip, kRounds);
  tally("leaf-swap-witness", swap_witness, swap_trials);
  tally("representing-tree-round-trip", representing, kRounds);
  tally("ultrametric-isometry-vs-search", isometry, kRounds);

  out << "selftest: " << summary.passed << " passed, " << summary.failed << " failed\n";
  return summary;
}

}  // namespace ultratree

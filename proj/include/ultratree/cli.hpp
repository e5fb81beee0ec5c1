#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ultratree/analysis.hpp"
#include "ultratree/canonical.hpp"
#include "ultratree/duality.hpp"
#include "ultratree/error.hpp"
#include "ultratree/json_io.hpp"
#include "ultratree/metric.hpp"
#include "ultratree/representing.hpp"
#include "ultratree/selftest.hpp"
#include "ultratree/transforms.hpp"

namespace ultratree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

inline Json error_json(const std::string& kind, const std::string& code, const std::string& message) {
  return {{"error", kind}, {"code", code}, {"message", message}};
}

// ULTRATREE_SEED, or the default seed when unset.
inline std::uint64_t seed_from_env() {
  const char* text = std::getenv("ULTRATREE_SEED");
  if (text == nullptr || *text == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (text[used] != '\0') throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string("ULTRATREE_SEED must be a nonnegative integer, got '") + text + "'");
  }
}

namespace detail {

inline Json structure_report_json(const StructureReport& r) {
  auto opt_rational = [](const std::optional<Rational>& x) { return x ? Json(to_string(*x)) : Json(nullptr); };
  Json j;
  j["planted"] = r.planted ? Json(*r.planted) : Json(nullptr);
  j["centers"] = r.centers ? Json(*r.centers) : Json(nullptr);
  j["is_star"] = r.is_star;
  j["phylo_shape"] = r.phylo_shape;
  j["K"] = opt_rational(r.height);
  j["planted_lhs"] = opt_rational(r.planted_lhs);
  j["planted_rhs"] = opt_rational(r.planted_rhs);
  return j;
}

inline Decoration decoration_of(const GraphDocument& doc, IsoFlavor flavor) {
  Decoration d;
  if (is_rooted(flavor)) d.root = doc.root;
  if (uses_labels(flavor)) d.labels = doc.labels;
  if (uses_weights(flavor)) d.weights = doc.weights;
  return d;
}

}  // namespace detail

// Parses args (without the program name), runs one verb and writes its JSON
// result (or selftest report) to out. Returns the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for finite ultrametric spaces and their trees", "ultratree"};
  app.require_subcommand(1);
  std::string output_path;
  app.add_option("-o,--output", output_path, "Write the result here instead of stdout");

  std::function<Json()> action;
  std::function<int()> text_action;
  std::vector<std::string> inputs;

  auto* repr = app.add_subcommand("repr", "Representing tree of an ultrametric space");
  bool from_matrix = false;
  bool from_labeled = false;
  repr->add_flag("--matrix", from_matrix, "Input is a distance matrix (JSON or .csv); the default");
  repr->add_flag("--labeled-tree", from_labeled, "Input is a labeled graph; its minimax label metric is used");
  repr->add_option("input", inputs, "Input file")->required()->expected(1);
  repr->callback([&] {
    if (from_matrix && from_labeled) throw ParseError("--matrix and --labeled-tree are exclusive");
    action = [&] {
      FiniteMetricSpace space;
      if (from_labeled) {
        const GraphDocument doc = load_graph_document(inputs.at(0));
        space = minimax_label_metric(doc.graph, labels_of(doc)).space;
      } else {
        space = load_metric_space(inputs.at(0));
      }
      return to_json(to_document(representing_tree(space)));
    };
  });

  auto* iso = app.add_subcommand("iso", "Isomorphism test for two trees (or small graphs)");
  std::string flavor_name = "free";
  iso->add_option("--flavor", flavor_name, "free, rooted, vlabel, eweight, rlabel or rweight")
      ->check(CLI::IsMember({"free", "rooted", "vlabel", "eweight", "rlabel", "rweight"}));
  iso->add_option("inputs", inputs, "Two graph documents")->required()->expected(2);
  iso->callback([&] {
    action = [&] {
      const IsoFlavor flavor = parse_iso_flavor(flavor_name);
      const GraphDocument a = load_graph_document(inputs.at(0));
      const GraphDocument b = load_graph_document(inputs.at(1));
      const Decoration da = detail::decoration_of(a, flavor);
      const Decoration db = detail::decoration_of(b, flavor);
      if (is_tree(a.graph) && is_tree(b.graph)) {
        const CanonicalCode ca = canonical_code(Tree(a.graph), flavor, da);
        const CanonicalCode cb = canonical_code(Tree(b.graph), flavor, db);
        return Json{{"isomorphic", ca == cb}, {"code1", ca.text}, {"code2", cb.text}};
      }
      if (is_rooted(flavor)) throw Error("not-a-tree", "rooted flavors apply to trees only");
      return Json{{"isomorphic", are_isomorphic_graphs(a.graph, da, b.graph, db)}};
    };
  });

  auto* isometry = app.add_subcommand("isometry", "Isometry test for two finite metric spaces");
  bool fast = false;
  isometry->add_flag("--fast-ultrametric", fast, "Compare representing trees instead of searching bijections");
  isometry->add_option("inputs", inputs, "Two distance matrices")->required()->expected(2);
  isometry->callback([&] {
    action = [&] {
      const FiniteMetricSpace a = load_metric_space(inputs.at(0));
      const FiniteMetricSpace b = load_metric_space(inputs.at(1));
      if (fast) return Json{{"isometric", ultrametric_isometric(a, b)}};
      const auto f = isometry_search(a, b);
      return Json{{"isometric", f.has_value()}, {"bijection", f ? Json(*f) : Json(nullptr)}};
    };
  });

  auto* dual = app.add_subcommand("dual", "Equidistant weight <-> monotone labeling");
  std::string direction;
  dual->add_option("--direction", direction, "w2l or l2w")->required()->check(CLI::IsMember({"w2l", "l2w"}));
  dual->add_option("input", inputs, "Rooted tree document")->required()->expected(1);
  dual->callback([&] {
    action = [&] {
      const GraphDocument doc = load_graph_document(inputs.at(0));
      const RootedTree rt = rooted_tree_of(doc);
      if (direction == "w2l") return to_json(to_document(weight_to_labeling(make_equidistant(rt, weights_of(doc)))));
      return to_json(to_document(labeling_to_weight(make_monotone(rt, labels_of(doc)))));
    };
  });

  auto* reduce = app.add_subcommand("reduce", "Suppress all out-degree-1 vertices of an equidistant tree");
  reduce->add_option("input", inputs, "Rooted weighted tree document")->required()->expected(1);
  reduce->callback([&] {
    action = [&] {
      const GraphDocument doc = load_graph_document(inputs.at(0));
      const NablaResult r = reduce_nabla(make_equidistant(rooted_tree_of(doc), weights_of(doc)));
      return Json{{"reduced", to_json(to_document(r.reduced))},
                  {"removed", std::vector<Vertex>(r.removed.begin(), r.removed.end())},
                  {"K", to_string(r.reduced.height)}};
    };
  });

  auto* spanning = app.add_subcommand("spanning", "Spanning tree preserving the minimax label metric");
  spanning->add_option("input", inputs, "Labeled graph document")->required()->expected(1);
  spanning->callback([&] {
    action = [&] {
      const GraphDocument doc = load_graph_document(inputs.at(0));
      const Tree t = bottleneck_spanning_tree(doc.graph, labels_of(doc));
      return to_json(GraphDocument{t.graph(), std::nullopt, std::nullopt, doc.labels, std::nullopt});
    };
  });

  auto* analyze_cmd = app.add_subcommand("analyze", "Structural report for a tree");
  analyze_cmd->add_option("input", inputs, "Tree document (root and weights optional)")->required()->expected(1);
  analyze_cmd->callback([&] {
    action = [&] {
      const GraphDocument doc = load_graph_document(inputs.at(0));
      return detail::structure_report_json(analyze(Tree(doc.graph), doc.root, doc.weights));
    };
  });

  auto* ballean_cmd = app.add_subcommand("ballean", "Balls of an ultrametric space");
  bool as_tree = false;
  ballean_cmd->add_flag("--tree", as_tree, "Emit the representing tree of the ballean");
  ballean_cmd->add_option("input", inputs, "Distance matrix")->required()->expected(1);
  ballean_cmd->callback([&] {
    action = [&] {
      const FiniteMetricSpace space = load_metric_space(inputs.at(0));
      if (as_tree) return to_json(to_document(ballean_tree(space)));
      return Json{{"balls", ballean(space)}, {"hausdorff", to_json(ballean_space(space))}};
    };
  });

  auto* counter = app.add_subcommand("counterexample", "Isometric but non-isomorphic weightings of a cyclic graph");
  counter->add_option("input", inputs, "Graph document")->required()->expected(1);
  counter->callback([&] {
    action = [&] {
      const GraphDocument doc = load_graph_document(inputs.at(0));
      const CounterexampleWeights cw = isometric_nonisomorphic_weights(doc.graph);
      auto weighted = [&](const WeightFn& w) {
        return to_json(GraphDocument{doc.graph, std::nullopt, w, std::nullopt, std::nullopt});
      };
      return Json{{"heavy_edge", cw.heavy.key()}, {"w1", weighted(cw.w1)}, {"w2", weighted(cw.w2)}};
    };
  });

  auto* selftest = app.add_subcommand("selftest", "Check the figure corpus and run a seeded fuzz pass");
  std::string corpus_dir = kDefaultCorpusDir;
  selftest->add_option("--corpus", corpus_dir, "Directory of figure JSON files");
  selftest->callback([&] {
    text_action = [&] {
      const std::uint64_t seed = seed_from_env();
      std::ostringstream report;
      const SelftestSummary s = run_selftest(corpus_dir, seed, report);
      if (output_path.empty()) {
        out << report.str();
      } else {
        std::ofstream(output_path) << report.str();
      }
      return s.ok() ? kExitOk : kExitDomainError;
    };
  });

  std::vector<const char*> argv{"ultratree"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << error_json("parse-error", "parse-error", e.what()).dump() << "\n";
    err << e.what() << "\n";
    return kExitParseError;
  } catch (const ParseError& e) {
    out << error_json("parse-error", e.code(), e.what()).dump() << "\n";
    return kExitParseError;
  }

  try {
    if (text_action) return text_action();
    const Json result = action();
    if (output_path.empty()) {
      out << result.dump(2) << "\n";
    } else {
      std::ofstream file(output_path);
      if (!file) throw ParseError("cannot write '" + output_path + "'");
      file << result.dump(2) << "\n";
    }
    return kExitOk;
  } catch (const ParseError& e) {
    out << error_json("parse-error", e.code(), e.what()).dump() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    out << error_json("domain-error", e.code(), e.what()).dump() << "\n";
    return kExitDomainError;
  } catch (const Json::exception& e) {
    out << error_json("parse-error", "parse-error", e.what()).dump() << "\n";
    return kExitParseError;
  }
}

}  // namespace ultratree::cli

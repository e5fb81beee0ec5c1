#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ultratree/duality.hpp"
#include "ultratree/error.hpp"
#include "ultratree/graph.hpp"
#include "ultratree/metric.hpp"
#include "ultratree/rational.hpp"
#include "ultratree/representing.hpp"

namespace ultratree {

using Json = nlohmann::json;

// In-memory form of the graph/tree JSON schema:
//   {"vertices": [..], "edges": [[u, v], ..], "root": v|null,
//    "weights": {"u|v": "p/q"}|null, "labels": {"v": "p/q"}|null,
//    "payloads": {"v": [point, ..]}  (representing trees only)}
struct GraphDocument {
  Graph graph;
  std::optional<Vertex> root;
  std::optional<WeightFn> weights;
  std::optional<LabelFn> labels;
  std::optional<std::map<Vertex, std::vector<Vertex>>> payloads;

  bool operator==(const GraphDocument&) const = default;
};

inline Json rational_to_json(const Rational& x) { return to_string(x); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

inline Edge parse_edge_key(const std::string& key) {
  const auto bar = key.find('|');
  if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos) {
    throw ParseError("edge key '" + key + "' is not of the form \"u|v\"");
  }
  return make_edge(key.substr(0, bar), key.substr(bar + 1));
}

inline Json to_json(const GraphDocument& doc) {
  Json j;
  j["vertices"] = doc.graph.vertices();
  j["edges"] = Json::array();
  for (const auto& e : doc.graph.edges()) j["edges"].push_back({e.first, e.second});
  j["root"] = doc.root ? Json(*doc.root) : Json(nullptr);
  j["weights"] = nullptr;
  if (doc.weights) {
    j["weights"] = Json::object();
    for (const auto& [e, w] : *doc.weights) j["weights"][e.key()] = rational_to_json(w);
  }
  j["labels"] = nullptr;
  if (doc.labels) {
    j["labels"] = Json::object();
    for (const auto& [v, l] : *doc.labels) j["labels"][v] = rational_to_json(l);
  }
  if (doc.payloads) j["payloads"] = *doc.payloads;
  return j;
}

inline GraphDocument graph_document_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph document must be a JSON object");
  try {
    const auto vertices = j.at("vertices").get<std::vector<Vertex>>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.value("edges", Json::array())) {
      const auto pair = e.get<std::vector<Vertex>>();
      if (pair.size() != 2) throw ParseError("edge " + e.dump() + " must have two endpoints");
      edges.emplace_back(pair[0], pair[1]);
    }
    GraphDocument doc{Graph(vertices, edges), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("root") && !j["root"].is_null()) doc.root = j["root"].get<Vertex>();
    if (j.contains("weights") && !j["weights"].is_null()) {
      WeightFn w;
      for (const auto& [key, value] : j["weights"].items()) w[parse_edge_key(key)] = rational_from_json(value);
      doc.weights = std::move(w);
    }
    if (j.contains("labels") && !j["labels"].is_null()) {
      LabelFn l;
      for (const auto& [key, value] : j["labels"].items()) l[key] = rational_from_json(value);
      doc.labels = std::move(l);
    }
    if (j.contains("payloads") && !j["payloads"].is_null()) {
      doc.payloads = j["payloads"].get<std::map<Vertex, std::vector<Vertex>>>();
    }
    if (doc.root) require_vertex(doc.graph, *doc.root);
    return doc;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what());
  }
}

inline GraphDocument to_document(const LabeledRootedTree& t) {
  return {t.tree.tree().graph(), t.tree.root(), std::nullopt, t.labels, t.payloads};
}

inline GraphDocument to_document(const EquidistantTree& t) {
  return {t.tree.tree().graph(), t.tree.root(), t.weights, std::nullopt, std::nullopt};
}

inline GraphDocument to_document(const MonotoneTree& t) {
  return {t.tree.tree().graph(), t.tree.root(), std::nullopt, t.labels, std::nullopt};
}

inline RootedTree rooted_tree_of(const GraphDocument& doc) {
  if (!doc.root) throw Error("missing-root", "document has no root");
  return RootedTree(Tree(doc.graph), *doc.root);
}

inline const WeightFn& weights_of(const GraphDocument& doc) {
  if (!doc.weights) throw Error("invalid-weight", "document has no weights");
  return *doc.weights;
}

inline const LabelFn& labels_of(const GraphDocument& doc) {
  if (!doc.labels) throw Error("invalid-labeling", "document has no labels");
  return *doc.labels;
}

// {"points": [..], "matrix": [[..], ..]} with "p/q" or integer entries.
inline Json to_json(const FiniteMetricSpace& space) {
  Json rows = Json::array();
  for (const auto& row : space.matrix()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_to_json(x));
    rows.push_back(std::move(r));
  }
  return {{"points", space.points()}, {"matrix", std::move(rows)}};
}

inline FiniteMetricSpace metric_space_from_json(const Json& j) {
  try {
    auto points = j.at("points").get<std::vector<Vertex>>();
    DistanceMatrix m;
    for (const auto& row : j.at("matrix")) {
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(rational_from_json(x));
      m.push_back(std::move(r));
    }
    return FiniteMetricSpace(std::move(points), std::move(m));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed metric space: ") + e.what());
  }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace detail

// First row: an ignored corner cell, then the point ids. Each further row: a
// point id, then its distances.
inline FiniteMetricSpace metric_space_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(detail::split_csv_line(line));
  }
  if (rows.empty()) throw ParseError("empty CSV matrix");
  std::vector<Vertex> points(rows[0].begin() + 1, rows[0].end());
  if (rows.size() != points.size() + 1) throw ParseError("CSV matrix is not square");
  DistanceMatrix m;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != points.size() + 1 || row[0] != points[i]) {
      throw ParseError("CSV row " + std::to_string(i + 1) + " does not match the header");
    }
    std::vector<Rational> r;
    for (std::size_t k = 1; k < row.size(); ++k) r.push_back(parse_rational(row[k]));
    m.push_back(std::move(r));
  }
  return FiniteMetricSpace(std::move(points), std::move(m));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// JSON, or CSV when the file name ends in ".csv".
inline FiniteMetricSpace load_metric_space(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return metric_space_from_csv(read_text_file(path));
  }
  return metric_space_from_json(read_json_file(path));
}

inline GraphDocument load_graph_document(const std::string& path) {
  return graph_document_from_json(read_json_file(path));
}

}  // namespace ultratree

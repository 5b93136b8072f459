#include "graphtok/graph_io.hpp"

#include <algorithm>
#include <limits>

namespace graphtok {

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string field(const std::string& path, const std::string& name) {
  return path.empty() ? name : path + "." + name;
}

int as_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  const auto value = j.get<std::int64_t>();
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    throw ParseError(where, "integer out of range");
  }
  return static_cast<int>(value);
}

}  // namespace

nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_column(text, e.byte), "malformed JSON");
  }
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path.empty() ? "<root>" : path, "expected a graph object");
  if (!j.contains("n")) throw ParseError(field(path, "n"), "missing field");
  if (!j.contains("edges")) throw ParseError(field(path, "edges"), "missing field");

  const int n = as_int(j["n"], field(path, "n"));
  if (n < 1) throw ParseError(field(path, "n"), "node count must be positive");

  const auto& arr = j["edges"];
  const std::string edges_path = field(path, "edges");
  if (!arr.is_array()) throw ParseError(edges_path, "expected an array");
  std::vector<Edge> edges;
  edges.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string here = edges_path + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) throw ParseError(here, "expected [u, v]");
    const Edge e{as_int(arr[i][0], here + "[0]"), as_int(arr[i][1], here + "[1]")};
    for (int k = 0; k < 2; ++k) {
      const int x = k == 0 ? e.u : e.v;
      if (x < 0 || x >= n) {
        throw ParseError(here + "[" + std::to_string(k) + "]",
                         "endpoint out of range [0, " + std::to_string(n) + ")");
      }
    }
    if (e.u == e.v) throw ParseError(here, "self-loop");
    edges.push_back(e);
  }
  return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

Graph parse_graph(std::string_view text) { return graph_from_json(parse_json_text(text)); }

std::string serialize_dataset(const Dataset& d) {
  nlohmann::ordered_json j;
  auto graphs = nlohmann::ordered_json::array();
  for (const Graph& g : d.graphs) graphs.push_back(graph_to_json(g));
  j["graphs"] = std::move(graphs);
  j["labels"] = d.labels;
  return j.dump() + "\n";
}

Dataset parse_dataset(std::string_view text) {
  const nlohmann::json j = parse_json_text(text);
  Dataset d;
  const nlohmann::json* graphs = &j;
  if (j.is_object()) {
    if (!j.contains("graphs")) throw ParseError("graphs", "missing field");
    graphs = &j["graphs"];
    if (j.contains("labels")) {
      const auto& labels = j["labels"];
      if (!labels.is_array()) throw ParseError("labels", "expected an array");
      for (std::size_t i = 0; i < labels.size(); ++i) {
        d.labels.push_back(as_int(labels[i], "labels[" + std::to_string(i) + "]"));
      }
    }
  }
  if (!graphs->is_array()) throw ParseError("graphs", "expected an array of graphs");
  for (std::size_t i = 0; i < graphs->size(); ++i) {
    d.graphs.push_back(graph_from_json((*graphs)[i], "graphs[" + std::to_string(i) + "]"));
  }
  if (!d.labels.empty() && d.labels.size() != d.graphs.size()) {
    throw ParseError("labels", "label count does not match graph count");
  }
  return d;
}

}  // namespace graphtok

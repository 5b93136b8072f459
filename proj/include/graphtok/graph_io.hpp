#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "graphtok/graph.hpp"

namespace graphtok {

/// Malformed graph text. `where()` is either "line L, column C" for syntax
/// errors or a JSON field path such as "edges[3][1]" for schema errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Graph file format: {"n": int, "edges": [[u, v], ...]}, edges canonical on output.

nlohmann::ordered_json graph_to_json(const Graph& g);
/// `path` prefixes field names in diagnostics (e.g. "graphs[2]").
Graph graph_from_json(const nlohmann::json& j, const std::string& path = "");

/// Canonical single-line text followed by a newline.
std::string serialize_graph(const Graph& g);
Graph parse_graph(std::string_view text);

/// Dataset file: {"graphs": [...], "labels": [...]}; a bare array of graph
/// objects is accepted on input with empty labels.
struct Dataset {
  std::vector<Graph> graphs;
  std::vector<int> labels;
};

std::string serialize_dataset(const Dataset& d);
Dataset parse_dataset(std::string_view text);

/// Parses text as JSON, mapping syntax errors to ParseError with line/column.
nlohmann::json parse_json_text(std::string_view text);

}  // namespace graphtok

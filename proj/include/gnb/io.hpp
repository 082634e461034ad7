#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gnb/bounds.hpp"
#include "gnb/design.hpp"
#include "gnb/graph.hpp"
#include "gnb/guessing.hpp"

namespace gnb {

using Json = nlohmann::ordered_json;

// DIMACS edge format: optional "c" comment lines, "p edge <n> <m>", then
// "e <u> <v>" with 1-indexed endpoints.
void write_dimacs(std::ostream& os, const Graph& g);
Graph read_dimacs(std::istream& is);

// {"n": .., "edges": [[u, v], ..], "labels": [..]} with 0-indexed endpoints.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Reads a graph file; ".json" files (or content starting with '{') are JSON,
/// anything else DIMACS.
Graph load_graph_file(const std::string& path);
/// A builtin name, or else a file path.
Graph resolve_graph(const std::string& spec);

// {"v": 22, "t": 3, "k": 6, "blocks": [[0, 1, ..], ..]}
Json design_to_json(const Design& d);
Design design_from_json(const Json& j);

// {"s": .., "tables": [[..], ..]}; a bare array of tables is also accepted on input.
Json strategy_to_json(const Strategy& s);
std::vector<std::vector<Symbol>> strategy_tables_from_json(const Json& j);

Json cover_to_json(const FractionalCover& c);
Json witness_to_json(const IndependentSetWitness& w);
Json report_to_json(const BoundsReport& r);
Json guessing_number_to_json(const GuessingNumber& gn);

/// gn as an exact rational when known, otherwise a 12-digit decimal.
std::string format_gn(const GuessingNumber& gn);

}  // namespace gnb

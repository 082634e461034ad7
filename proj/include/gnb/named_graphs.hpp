#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gnb/graph.hpp"

namespace gnb {

// Each builder verifies triangle-freeness and its SRG parameters and throws
// ConstructionFault otherwise. Results are built once and cached.

/// Vertex 0 is ∞, vertices 1..22 are the points of S(3,6,22), 23..99 the blocks.
const Graph& higman_sims_graph();
/// The 77 blocks of S(3,6,22), adjacent when disjoint. Same order as in HS.
const Graph& m22_graph();
/// Blocks of S(3,6,22) avoiding point 0, adjacent when disjoint.
const Graph& gewirtz_graph();
/// Vertex 0 is ∗, 1..5 the singletons of {1..5}, 6..15 the pairs.
const Graph& clebsch_graph();
/// Pentagons P_h at 5h..5h+4, pentagrams Q_i at 25+5i..25+5i+4.
const Graph& hoffman_singleton_graph();

/// The 21 blocks through point 0, an independent set of the M22 graph.
std::vector<Vertex> m22_point_star();

std::vector<std::string> builtin_graph_names();
bool is_builtin_graph(std::string_view name);
/// Throws InvalidInput for unknown names.
Graph builtin_graph(std::string_view name);

}  // namespace gnb

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gnb/bitset.hpp"
#include "gnb/gf.hpp"

namespace gnb {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
/// Loop-free and symmetric; both are checked on every construction path.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Rejects loops, duplicate edges and out-of-range endpoints.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    /// Rejects asymmetric rows or a set diagonal bit.
    static Graph from_adjacency(std::vector<Bitset> rows);

    std::size_t size() const { return adj_.size(); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    const Bitset& neighbors(Vertex v) const { return adj_[v]; }
    std::vector<Vertex> neighbor_list(Vertex v) const { return adj_[v].to_vector(); }
    std::size_t degree(Vertex v) const { return adj_[v].count(); }
    std::size_t edge_count() const;
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of v, or its index when unlabeled.
    std::string label(Vertex v) const;
    Graph with_labels(std::vector<std::string> labels) const;

    /// Adjacency equality; labels are ignored.
    bool same_adjacency(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph petersen_graph();
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Tensor (categorical) product; vertex (u, a) has index u * |H| + a.
Graph tensor_product(const Graph& g, const Graph& h);

/// Each vertex replaced by an independent class of t vertices; vertex (u, i)
/// has index u * t + i. Identical to the tensor product with a looped K_t.
Graph uniform_blowup(const Graph& g, std::size_t t);

namespace detail {
// Second tensor factor whose adjacency rows may contain the diagonal.
struct LoopedGraph {
    std::vector<Bitset> adj;
};
LoopedGraph looped_complete(std::size_t t);
Graph tensor_product(const Graph& g, const LoopedGraph& h);
}  // namespace detail

bool is_triangle_free(const Graph& g);
bool is_independent_set(const Graph& g, std::span<const Vertex> s);
bool is_clique(const Graph& g, std::span<const Vertex> s);

struct SrgParams {
    std::size_t n = 0, k = 0, lambda = 0, mu = 0;
    bool feasible() const { return k * (k - lambda - 1) == (n - k - 1) * mu; }
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct SrgCheck {
    std::optional<SrgParams> params;
    std::string failure;                 // empty on success
    std::optional<Edge> offending_pair;  // set when a pair breaks the counts
};

SrgCheck check_srg(const Graph& g);

bool is_connected(const Graph& g);

/// A + cI over Z_q, where A is the adjacency matrix of g. c must be nonzero mod q.
MatrixGF adjacency_shifted(const Graph& g, std::uint32_t q, std::int64_t c);

enum class WitnessMethod { Neighborhood, Greedy, BranchAndBound, Explicit };
std::string to_string(WitnessMethod m);

struct IndependentSetWitness {
    std::vector<Vertex> vertices;
    WitnessMethod method = WitnessMethod::Greedy;
    bool reached_target = false;
    std::uint64_t nodes = 0;  // branch-and-bound nodes expanded
};

struct SearchBudget {
    std::uint64_t node_limit = 10'000'000;
};

/// Best independent set found: greedy and neighborhood seeds first, then
/// branch and bound on the complement clique problem until `target` is hit
/// or the budget runs out. The returned set is always verified independent.
IndependentSetWitness independent_set_witness(const Graph& g, std::size_t target,
                                              SearchBudget budget = {});

}  // namespace gnb

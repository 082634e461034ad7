#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gnb/clique_cover.hpp"
#include "gnb/gf.hpp"
#include "gnb/graph.hpp"
#include "gnb/rational.hpp"

namespace gnb {

using Symbol = std::uint32_t;

/// The game (G, s): every vertex holds a uniform value in {0..s-1}.
class GuessingGame {
public:
    GuessingGame(Graph g, std::uint32_t s);

    const Graph& graph() const { return graph_; }
    std::uint32_t s() const { return s_; }

private:
    Graph graph_;
    std::uint32_t s_;
};

/// Per-vertex lookup tables. The table of v is indexed by the values of its
/// neighbours in ascending vertex order, read as a base-s number with the
/// lowest-numbered neighbour as the most significant digit.
class Strategy {
public:
    Strategy() = default;
    /// Checks table sizes s^deg(v) and entry ranges against the game.
    Strategy(const GuessingGame& game, std::vector<std::vector<Symbol>> tables);

    std::uint32_t s() const { return s_; }
    std::size_t size() const { return tables_.size(); }
    const std::vector<Symbol>& table(Vertex v) const { return tables_[v]; }
    const std::vector<std::vector<Symbol>>& tables() const { return tables_; }

    friend bool operator==(const Strategy&, const Strategy&) = default;

private:
    std::uint32_t s_ = 0;
    std::vector<std::vector<Symbol>> tables_;
};

/// Table index of v's view of a full assignment.
std::size_t view_index(const Graph& g, std::uint32_t s, Vertex v, std::span<const Symbol> assignment);

struct EvalOptions {
    std::uint64_t assignment_cap = std::uint64_t{1} << 24;
    unsigned threads = 1;
};

/// gn(G, s, F) = log_s(wins). Exact when the win probability is a rational
/// power of s; `decimal` is always filled.
struct GuessingNumber {
    std::optional<Rational> exact;
    double decimal = 0.0;
};

GuessingNumber guessing_number_from_wins(const BigInt& wins, std::uint32_t s);

struct Evaluation {
    BigInt wins;
    BigInt total;
    Rational probability;
    GuessingNumber gn;
};

/// Exact count of winning assignments. Throws ResourceLimit if s^n exceeds the cap.
Evaluation eval_strategy(const GuessingGame& game, const Strategy& strat, EvalOptions opts = {});

struct SearchOptions {
    std::uint64_t strategy_cap = std::uint64_t{1} << 30;
    std::uint64_t assignment_cap = std::uint64_t{1} << 16;
    bool symmetry = true;
    unsigned threads = 1;
};

struct SearchResult {
    Rational probability;
    BigInt wins;
    Strategy strategy;
    GuessingNumber gn;
    std::uint64_t nodes = 0;
    std::uint64_t root_functions = 0;  // vertex-0 functions searched after symmetry pruning
};

/// Maximum win probability over all pure strategies, by branch and bound on
/// bitmasks of winning assignments. Ties go to the lexicographically first
/// strategy (tables concatenated in vertex order). With `symmetry`, vertex 0
/// only ranges over functions that are minimal under relabelling the alphabet.
SearchResult exhaustive_optimal(const GuessingGame& game, SearchOptions opts = {});

/// Diagonal nonzero and off-diagonal support inside the edge set.
bool is_representing_matrix(const Graph& g, const MatrixGF& m);

struct LinearStrategy {
    std::size_t rank = 0;
    std::size_t gn_value = 0;          // n - rank
    std::optional<Strategy> strategy;  // present when the tables fit the cap
};

/// Each player assumes its row equation m_ii x_i + Σ m_ij x_j = 0 holds and
/// guesses x_i = -m_ii^{-1} Σ m_ij x_j, so the winning assignments are
/// exactly the kernel of M.
LinearStrategy linear_strategy(const Graph& g, const MatrixGF& m, std::uint64_t table_cap = std::uint64_t{1} << 20);

struct CoverStrategy {
    GuessingGame game;
    Strategy strategy;
    std::uint32_t base = 2;
    std::uint32_t digits = 1;  // lcm of the weight denominators
};

/// Alphabet base^D with D the lcm of the weight denominators. Each value is
/// split into D base-digits; clique k receives w(k)·D digit slots at each of
/// its vertices, and within a slot the clique plays "digits sum to zero".
CoverStrategy clique_cover_strategy(const Graph& g, const FractionalCover& cover, std::uint32_t base = 2,
                                    std::uint64_t table_cap = std::uint64_t{1} << 20);

struct BlowupStrategy {
    GuessingGame game;
    Strategy strategy;
};

/// Strategy on (G, s^t) to the matching strategy on (G(t), s). Vertex (v, i)
/// reads its neighbour classes as base-s numbers (member i is digit i) and
/// announces digit i of f_v.
BlowupStrategy blowup_transfer(const Graph& g, const Strategy& strat, std::size_t t);

/// Largest integer r with r^t == s exactly, or nullopt.
std::optional<std::uint32_t> exact_root(std::uint64_t s, std::size_t t);

}  // namespace gnb

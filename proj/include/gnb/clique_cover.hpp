#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gnb/graph.hpp"
#include "gnb/rational.hpp"

namespace gnb {

using Clique = std::vector<Vertex>;  // sorted ascending

struct CliqueLimits {
    std::optional<std::size_t> max_size;
    std::size_t cap = 1'000'000;
};

/// Every non-empty clique, ordered by size and then lexicographically.
/// Throws ResourceLimit past `cap` cliques.
std::vector<Clique> enumerate_cliques(const Graph& g, CliqueLimits limits = {});

/// Weights on cliques. Entries are kept in clique order with no zero weights.
struct FractionalCover {
    std::vector<Clique> cliques;
    std::vector<Rational> weights;

    Rational total() const;
    Rational coverage(Vertex v) const;
    /// Every set is a clique, weights lie in [0,1], every vertex covered at least once.
    bool is_feasible(const Graph& g) const;
    /// Feasible with every vertex covered exactly once.
    bool is_regular(const Graph& g) const;
};

struct KappaResult {
    Rational value;
    FractionalCover cover;
};

/// Exact covering LP over all cliques, solved through its packing dual.
KappaResult kappa_f_lp(const Graph& g, CliqueLimits limits = {});

/// κ_f = n - ν_f for triangle-free graphs, with ν_f read off a maximum
/// matching of the bipartite double cover. The returned cover is regular.
KappaResult kappa_f_triangle_free(const Graph& g);

enum class KappaMethod { Auto, Lp, Matching };

/// Auto picks the matching path for triangle-free graphs above 20 vertices.
KappaResult kappa_f(const Graph& g, KappaMethod method = KappaMethod::Auto);

/// Moves excess weight from a clique to the clique minus the over-covered
/// vertex until every vertex is covered exactly once. Total never grows.
FractionalCover regularize_cover(const Graph& g, const FractionalCover& c);

std::size_t clique_number(const Graph& g);

struct OmegaBound {
    Rational kappa;
    Rational n_over_omega;
    bool holds = false;
};

OmegaBound check_omega_bound(const Graph& g);

}  // namespace gnb

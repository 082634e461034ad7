#include "gnb/clique_cover.hpp"

#include <algorithm>
#include <map>

#include "gnb/errors.hpp"
#include "gnb/lp.hpp"
#include "gnb/matching.hpp"

namespace gnb {

namespace {

bool clique_less(const Clique& a, const Clique& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct CliqueOrder {
    bool operator()(const Clique& a, const Clique& b) const { return clique_less(a, b); }
};

void extend(const Graph& g, Clique& current, Bitset cand, const CliqueLimits& limits, std::vector<Clique>& out) {
    if (out.size() >= limits.cap)
        throw ResourceLimit("clique count exceeds cap of " + std::to_string(limits.cap) +
                            "; use the triangle-free matching method");
    out.push_back(current);
    if (limits.max_size && current.size() >= *limits.max_size) return;
    for (auto v = cand.first(); v < g.size(); v = cand.next(v)) {
        current.push_back(v);
        Bitset next = cand;
        next &= g.neighbors(v);
        // keep only vertices above v
        for (auto u = next.first(); u <= v && u < g.size(); u = next.next(u)) next.reset(u);
        extend(g, current, std::move(next), limits, out);
        current.pop_back();
    }
}

FractionalCover from_map(const std::map<Clique, Rational, CliqueOrder>& m) {
    FractionalCover c;
    for (const auto& [k, w] : m)
        if (w != 0) {
            c.cliques.push_back(k);
            c.weights.push_back(w);
        }
    return c;
}

}  // namespace

std::vector<Clique> enumerate_cliques(const Graph& g, CliqueLimits limits) {
    std::vector<Clique> out;
    if (limits.max_size && *limits.max_size == 0) return out;
    for (Vertex v = 0; v < g.size(); ++v) {
        Clique current{v};
        Bitset cand = g.neighbors(v);
        for (auto u = cand.first(); u <= v && u < g.size(); u = cand.next(u)) cand.reset(u);
        extend(g, current, std::move(cand), limits, out);
    }
    std::sort(out.begin(), out.end(), clique_less);
    return out;
}

Rational FractionalCover::total() const {
    Rational t = 0;
    for (const auto& w : weights) t += w;
    return t;
}

Rational FractionalCover::coverage(Vertex v) const {
    Rational s = 0;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        if (std::binary_search(cliques[i].begin(), cliques[i].end(), v)) s += weights[i];
    return s;
}

bool FractionalCover::is_feasible(const Graph& g) const {
    if (cliques.size() != weights.size()) return false;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        if (cliques[i].empty() || !std::is_sorted(cliques[i].begin(), cliques[i].end())) return false;
        if (!is_clique(g, cliques[i])) return false;
        if (weights[i] < 0 || weights[i] > 1) return false;
    }
    for (Vertex v = 0; v < g.size(); ++v)
        if (coverage(v) < 1) return false;
    return true;
}

bool FractionalCover::is_regular(const Graph& g) const {
    if (!is_feasible(g)) return false;
    for (Vertex v = 0; v < g.size(); ++v)
        if (coverage(v) != 1) return false;
    return true;
}

KappaResult kappa_f_lp(const Graph& g, CliqueLimits limits) {
    auto cliques = enumerate_cliques(g, limits);
    // Packing dual: max Σ y_v  s.t.  Σ_{v∈k} y_v <= 1 for every clique k.
    std::vector<std::vector<Rational>> a(cliques.size(), std::vector<Rational>(g.size(), Rational(0)));
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (auto v : cliques[i]) a[i][v] = 1;
    std::vector<Rational> b(cliques.size(), Rational(1));
    std::vector<Rational> c(g.size(), Rational(1));
    auto sol = solve_packing_lp(a, b, c);

    KappaResult r;
    r.value = sol.value;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        if (sol.dual[i] != 0) {
            r.cover.cliques.push_back(cliques[i]);
            r.cover.weights.push_back(sol.dual[i]);
        }
    if (!r.cover.is_feasible(g) || r.cover.total() != r.value)
        throw ConstructionFault("simplex returned an inconsistent clique cover");
    return r;
}

KappaResult kappa_f_triangle_free(const Graph& g) {
    if (!is_triangle_free(g)) throw InvalidInput("graph contains a triangle");
    const auto n = g.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (Vertex u = 0; u < n; ++u) adj[u] = g.neighbor_list(u);
    auto m = hopcroft_karp(adj, n);

    // Fractional matching y_uv = (x_uv' + x_vu') / 2, completed to a regular
    // cover by singleton weights 1 - Σ_{e∋v} y_e.
    std::map<Clique, Rational, CliqueOrder> weights;
    const Rational half(1, 2);
    for (Vertex u = 0; u < n; ++u) {
        auto v = m.left_mate[u];
        if (v == kUnmatched) continue;
        weights[Clique{std::min(u, v), std::max(u, v)}] += half;
    }
    std::vector<Rational> load(n, Rational(0));
    for (const auto& [k, w] : weights)
        for (auto v : k) load[v] += w;
    for (Vertex v = 0; v < n; ++v)
        if (load[v] < 1) weights[Clique{v}] += 1 - load[v];

    KappaResult r;
    r.value = Rational(static_cast<long long>(n)) - Rational(static_cast<long long>(m.size), 2);
    r.cover = from_map(weights);
    if (!r.cover.is_regular(g) || r.cover.total() != r.value)
        throw ConstructionFault("matching-derived cover is inconsistent");
    return r;
}

KappaResult kappa_f(const Graph& g, KappaMethod method) {
    if (method == KappaMethod::Auto)
        method = (g.size() > 20 && is_triangle_free(g)) ? KappaMethod::Matching : KappaMethod::Lp;
    return method == KappaMethod::Matching ? kappa_f_triangle_free(g) : kappa_f_lp(g);
}

FractionalCover regularize_cover(const Graph& g, const FractionalCover& c) {
    if (!c.is_feasible(g)) throw InvalidInput("cover is not feasible");
    std::map<Clique, Rational, CliqueOrder> w;
    for (std::size_t i = 0; i < c.cliques.size(); ++i) w[c.cliques[i]] += c.weights[i];

    // Shifting weight off clique k onto k \ {v} changes only v's coverage, so
    // one pass over the vertices suffices. Each step either settles v or
    // empties a clique through v, which bounds the work by the support size.
    for (Vertex v = 0; v < g.size(); ++v) {
        Rational excess = -1;
        for (const auto& [k, x] : w)
            if (std::binary_search(k.begin(), k.end(), v)) excess += x;
        while (excess > 0) {
            // Smallest clique through v first, so singleton weight is dropped
            // before anything is pushed onto subcliques.
            auto it = std::find_if(w.begin(), w.end(), [&](const auto& kv) {
                return kv.second > 0 && std::binary_search(kv.first.begin(), kv.first.end(), v);
            });
            if (it == w.end()) throw ConstructionFault("over-covered vertex with no weighted clique");
            Clique k = it->first;
            Rational delta = std::min(excess, it->second);
            it->second -= delta;
            if (it->second == 0) w.erase(it);
            if (k.size() > 1) {
                k.erase(std::find(k.begin(), k.end(), v));
                w[k] += delta;
            }
            excess -= delta;
        }
    }
    auto out = from_map(w);
    if (!out.is_regular(g)) throw ConstructionFault("regularization did not produce a regular cover");
    return out;
}

std::size_t clique_number(const Graph& g) {
    if (g.size() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    if (is_triangle_free(g)) return 2;
    std::size_t best = 0;
    for (const auto& k : enumerate_cliques(g)) best = std::max(best, k.size());
    return best;
}

OmegaBound check_omega_bound(const Graph& g) {
    OmegaBound b;
    b.kappa = kappa_f(g).value;
    auto omega = clique_number(g);
    b.n_over_omega = omega == 0 ? Rational(0) : Rational(static_cast<long long>(g.size()), static_cast<long long>(omega));
    b.holds = b.kappa >= b.n_over_omega;
    return b;
}

}  // namespace gnb

#include "gnb/graph.hpp"

#include <algorithm>
#include <numeric>

#include "gnb/errors.hpp"

namespace gnb {

Graph::Graph(std::size_t n) : adj_(n, Bitset(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
        if (g.adj_[u].test(v))
            throw InvalidInput("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

Graph Graph::from_adjacency(std::vector<Bitset> rows) {
    const auto n = rows.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (rows[u].size() != n) throw InvalidInput("adjacency row has wrong length");
        if (rows[u].test(u)) throw InvalidInput("loop at vertex " + std::to_string(u));
        for (auto v = rows[u].first(); v < n; v = rows[u].next(v))
            if (!rows[v].test(u)) throw InvalidInput("adjacency is not symmetric");
    }
    Graph g;
    g.adj_ = std::move(rows);
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : adj_) twice += r.count();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < size(); ++u)
        for (auto v = adj_[u].next(u); v < size(); v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

std::string Graph::label(Vertex v) const {
    return v < labels_.size() ? labels_[v] : std::to_string(v);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != size()) throw InvalidInput("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph petersen_graph() {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer pentagon
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(10, e);
}

Graph complement(const Graph& g) {
    const auto n = g.size();
    std::vector<Bitset> rows(n, Bitset(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && !g.adjacent(u, v)) rows[u].set(v);
    return Graph::from_adjacency(std::move(rows)).with_labels(g.labels());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    const auto n = vertices.size();
    std::vector<Bitset> rows(n, Bitset(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        if (vertices[i] >= g.size()) throw InvalidInput("induced subgraph vertex out of range");
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(vertices[i], vertices[j])) rows[i].set(j);
        if (!g.labels().empty()) labels.push_back(g.label(vertices[i]));
    }
    return Graph::from_adjacency(std::move(rows)).with_labels(std::move(labels));
}

namespace detail {

LoopedGraph looped_complete(std::size_t t) {
    LoopedGraph h;
    h.adj.assign(t, Bitset(t));
    for (std::size_t a = 0; a < t; ++a)
        for (std::size_t b = 0; b < t; ++b) h.adj[a].set(b);
    return h;
}

Graph tensor_product(const Graph& g, const LoopedGraph& h) {
    const auto m = h.adj.size();
    const auto n = g.size() * m;
    std::vector<Bitset> rows(n, Bitset(n));
    for (Vertex u = 0; u < g.size(); ++u)
        for (auto w = g.neighbors(u).first(); w < g.size(); w = g.neighbors(u).next(w))
            for (std::size_t a = 0; a < m; ++a)
                for (auto b = h.adj[a].first(); b < m; b = h.adj[a].next(b)) rows[u * m + a].set(w * m + b);
    return Graph::from_adjacency(std::move(rows));
}

}  // namespace detail

Graph tensor_product(const Graph& g, const Graph& h) {
    detail::LoopedGraph lh;
    for (Vertex v = 0; v < h.size(); ++v) lh.adj.push_back(h.neighbors(v));
    return detail::tensor_product(g, lh);
}

Graph uniform_blowup(const Graph& g, std::size_t t) {
    if (t == 0) throw InvalidInput("blowup factor must be at least 1");
    const auto n = g.size() * t;
    std::vector<Bitset> rows(n, Bitset(n));
    for (auto [u, v] : g.edges())
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                rows[u * t + i].set(v * t + j);
                rows[v * t + j].set(u * t + i);
            }
    std::vector<std::string> labels;
    if (!g.labels().empty())
        for (Vertex u = 0; u < g.size(); ++u)
            for (std::size_t i = 0; i < t; ++i) labels.push_back(g.label(u) + "." + std::to_string(i));
    return Graph::from_adjacency(std::move(rows)).with_labels(std::move(labels));
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v))) return false;
    return true;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= g.size()) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    }
    return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= g.size()) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.size() == 0) return true;
    Bitset seen(g.size());
    std::vector<Vertex> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto v = g.neighbors(u).first(); v < g.size(); v = g.neighbors(u).next(v))
            if (!seen.test(v)) {
                seen.set(v);
                stack.push_back(v);
            }
    }
    return seen.count() == g.size();
}

SrgCheck check_srg(const Graph& g) {
    SrgCheck out;
    const auto n = g.size();
    if (n < 2) {
        out.failure = "graph has fewer than two vertices";
        return out;
    }
    if (!is_connected(g)) {
        out.failure = "graph is not connected";
        return out;
    }
    SrgParams p{n, g.degree(0), 0, 0};
    if (p.k == n - 1) {
        out.failure = "graph is complete";
        return out;
    }
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) != p.k) {
            out.failure = "graph is not regular";
            out.offending_pair = Edge{0, v};
            return out;
        }
    std::optional<std::size_t> lambda, mu;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            auto common = g.neighbors(u).intersection_count(g.neighbors(v));
            auto& slot = g.adjacent(u, v) ? lambda : mu;
            if (!slot) {
                slot = common;
            } else if (*slot != common) {
                out.failure = g.adjacent(u, v) ? "inconsistent lambda" : "inconsistent mu";
                out.offending_pair = Edge{u, v};
                return out;
            }
        }
    p.lambda = lambda.value_or(0);
    p.mu = mu.value_or(0);
    out.params = p;
    return out;
}

MatrixGF adjacency_shifted(const Graph& g, std::uint32_t q, std::int64_t c) {
    PrimeField f(q);
    auto shift = f.reduce(c);
    if (shift == 0) throw InvalidInput("diagonal shift must be nonzero in the field");
    MatrixGF m(f, g.size(), g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
        m.set(u, u, shift);
        for (auto v = g.neighbors(u).first(); v < g.size(); v = g.neighbors(u).next(v)) m.set(u, v, 1);
    }
    return m;
}

std::string to_string(WitnessMethod m) {
    switch (m) {
        case WitnessMethod::Neighborhood: return "neighborhood";
        case WitnessMethod::Greedy: return "greedy";
        case WitnessMethod::BranchAndBound: return "branch-and-bound";
        case WitnessMethod::Explicit: return "explicit";
    }
    return "unknown";
}

namespace {

std::vector<Vertex> greedy_independent(const Graph& g) {
    Bitset cand(g.size());
    for (Vertex v = 0; v < g.size(); ++v) cand.set(v);
    std::vector<Vertex> out;
    while (cand.any()) {
        Vertex best = g.size();
        std::size_t best_deg = 0;
        for (auto v = cand.first(); v < g.size(); v = cand.next(v)) {
            auto d = g.neighbors(v).intersection_count(cand);
            if (best == g.size() || d < best_deg) {
                best = v;
                best_deg = d;
            }
        }
        out.push_back(best);
        cand.reset(best);
        cand.subtract(g.neighbors(best));
    }
    return out;
}

// Maximum clique in the complement with greedy colouring bounds, on a
// vertex order that puts low g-degree vertices first.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::size_t target, std::uint64_t limit, std::size_t incumbent)
        : n_(g.size()), target_(target), limit_(limit), best_size_(incumbent) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
        comp_.assign(n_, Bitset(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j && !g.adjacent(order_[i], order_[j])) comp_[i].set(j);
    }

    void run() {
        Bitset p(n_);
        for (std::size_t i = 0; i < n_; ++i) p.set(i);
        std::vector<std::size_t> current;
        expand(current, p);
    }

    std::uint64_t nodes() const { return nodes_; }
    // Original vertex ids of the best clique found by the search itself.
    std::vector<Vertex> best() const {
        std::vector<Vertex> out;
        for (auto i : best_) out.push_back(order_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    bool done() const { return nodes_ >= limit_ || best_size_ >= target_; }

    void expand(std::vector<std::size_t>& current, Bitset p) {
        ++nodes_;
        std::vector<std::pair<std::size_t, std::size_t>> colored;  // (vertex, colour)
        Bitset uncolored = p;
        for (std::size_t colour = 1; uncolored.any(); ++colour) {
            Bitset q = uncolored;
            while (q.any()) {
                auto v = q.first();
                q.reset(v);
                q.subtract(comp_[v]);
                uncolored.reset(v);
                colored.emplace_back(v, colour);
            }
        }
        for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
            if (done()) return;
            auto [v, colour] = *it;
            if (current.size() + colour <= best_size_) return;
            current.push_back(v);
            Bitset next = p;
            next &= comp_[v];
            if (next.none()) {
                if (current.size() > best_size_) {
                    best_size_ = current.size();
                    best_ = current;
                }
            } else {
                expand(current, next);
            }
            current.pop_back();
            p.reset(v);
        }
    }

    std::size_t n_;
    std::size_t target_;
    std::uint64_t limit_;
    std::size_t best_size_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> order_;
    std::vector<Bitset> comp_;
    std::vector<std::size_t> best_;
};

}  // namespace

IndependentSetWitness independent_set_witness(const Graph& g, std::size_t target, SearchBudget budget) {
    IndependentSetWitness w;
    w.vertices = greedy_independent(g);
    w.method = WitnessMethod::Greedy;

    if (g.size() > 0 && is_triangle_free(g)) {
        Vertex hub = 0;
        for (Vertex v = 1; v < g.size(); ++v)
            if (g.degree(v) > g.degree(hub)) hub = v;
        if (g.degree(hub) > w.vertices.size()) {
            w.vertices = g.neighbor_list(hub);
            w.method = WitnessMethod::Neighborhood;
        }
    }

    if (w.vertices.size() < target) {
        CliqueSearch search(g, target, budget.node_limit, w.vertices.size());
        search.run();
        w.nodes = search.nodes();
        auto found = search.best();
        if (found.size() > w.vertices.size()) {
            w.vertices = std::move(found);
            w.method = WitnessMethod::BranchAndBound;
        }
    }

    std::sort(w.vertices.begin(), w.vertices.end());
    if (!is_independent_set(g, w.vertices)) throw ConstructionFault("witness search returned a dependent set");
    w.reached_target = w.vertices.size() >= target;
    return w;
}

}  // namespace gnb

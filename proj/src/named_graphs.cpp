#include "gnb/named_graphs.hpp"

#include <bit>

#include "gnb/design.hpp"
#include "gnb/errors.hpp"

namespace gnb {

namespace {

const Design& s22() {
    static const Design d = build_s_3_6_22();
    return d;
}

Graph verified(Graph g, SrgParams expected, const char* name) {
    if (!is_triangle_free(g)) throw ConstructionFault(std::string(name) + " graph has a triangle");
    auto check = check_srg(g);
    if (!check.params || !(*check.params == expected))
        throw ConstructionFault(std::string(name) + " graph has the wrong SRG parameters");
    return g;
}

std::string block_label(PointSet b) {
    std::string s = "B{";
    bool first = true;
    for (auto p : points_of(b)) {
        if (!first) s += ',';
        s += std::to_string(p);
        first = false;
    }
    return s + "}";
}

Graph disjointness_graph(const std::vector<PointSet>& blocks) {
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        labels.push_back(block_label(blocks[i]));
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (!(blocks[i] & blocks[j])) edges.emplace_back(i, j);
    }
    return Graph::from_edges(blocks.size(), edges).with_labels(std::move(labels));
}

}  // namespace

const Graph& higman_sims_graph() {
    static const Graph g = [] {
        const auto& d = s22();
        const std::size_t np = d.v, nb = d.blocks.size();
        std::vector<Edge> edges;
        std::vector<std::string> labels{"inf"};
        for (std::size_t p = 0; p < np; ++p) {
            edges.emplace_back(0, 1 + p);
            labels.push_back("p" + std::to_string(p));
        }
        for (std::size_t i = 0; i < nb; ++i) {
            labels.push_back(block_label(d.blocks[i]));
            for (auto p : points_of(d.blocks[i])) edges.emplace_back(1 + p, 1 + np + i);
            for (std::size_t j = i + 1; j < nb; ++j)
                if (!(d.blocks[i] & d.blocks[j])) edges.emplace_back(1 + np + i, 1 + np + j);
        }
        auto hs = Graph::from_edges(1 + np + nb, edges).with_labels(std::move(labels));
        return verified(std::move(hs), {100, 22, 0, 6}, "Higman-Sims");
    }();
    return g;
}

const Graph& m22_graph() {
    static const Graph g = verified(disjointness_graph(s22().blocks), {77, 16, 0, 4}, "M22");
    return g;
}

const Graph& gewirtz_graph() {
    static const Graph g = [] {
        std::vector<PointSet> avoiding;
        for (auto b : s22().blocks)
            if (!(b & 1U)) avoiding.push_back(b);
        return verified(disjointness_graph(avoiding), {56, 10, 0, 2}, "Gewirtz");
    }();
    return g;
}

const Graph& clebsch_graph() {
    static const Graph g = [] {
        // Subsets of {1..5}: index 0 is ∗, then singletons, then pairs.
        std::vector<PointSet> sets{0};
        std::vector<std::string> labels{"*"};
        for (std::size_t i = 1; i <= 5; ++i) {
            sets.push_back(PointSet{1} << i);
            labels.push_back("{" + std::to_string(i) + "}");
        }
        for (std::size_t i = 1; i <= 5; ++i)
            for (std::size_t j = i + 1; j <= 5; ++j) {
                sets.push_back((PointSet{1} << i) | (PointSet{1} << j));
                labels.push_back("{" + std::to_string(i) + "," + std::to_string(j) + "}");
            }
        std::vector<Edge> edges;
        for (std::size_t u = 0; u < sets.size(); ++u)
            for (std::size_t v = u + 1; v < sets.size(); ++v) {
                auto su = std::popcount(sets[u]), sv = std::popcount(sets[v]);
                bool e = (su == 0 && sv == 1) || (su == 1 && sv == 2 && (sets[u] & sets[v])) ||
                         (su == 2 && sv == 2 && !(sets[u] & sets[v]));
                if (e) edges.emplace_back(u, v);
            }
        return verified(Graph::from_edges(16, edges).with_labels(std::move(labels)), {16, 5, 0, 2}, "Clebsch");
    }();
    return g;
}

const Graph& hoffman_singleton_graph() {
    static const Graph g = [] {
        auto pent = [](std::size_t h, std::size_t j) { return 5 * h + j; };
        auto gram = [](std::size_t i, std::size_t j) { return 25 + 5 * i + j; };
        std::vector<Edge> edges;
        std::vector<std::string> labels(50);
        for (std::size_t h = 0; h < 5; ++h)
            for (std::size_t j = 0; j < 5; ++j) {
                labels[pent(h, j)] = "P" + std::to_string(h) + "." + std::to_string(j);
                labels[gram(h, j)] = "Q" + std::to_string(h) + "." + std::to_string(j);
                edges.emplace_back(pent(h, j), pent(h, (j + 1) % 5));
                edges.emplace_back(gram(h, j), gram(h, (j + 2) % 5));
                for (std::size_t i = 0; i < 5; ++i) edges.emplace_back(pent(h, j), gram(i, (h * i + j) % 5));
            }
        return verified(Graph::from_edges(50, edges).with_labels(std::move(labels)), {50, 7, 0, 1},
                        "Hoffman-Singleton");
    }();
    return g;
}

std::vector<Vertex> m22_point_star() {
    std::vector<Vertex> out;
    const auto& blocks = s22().blocks;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i] & 1U) out.push_back(i);
    return out;
}

std::vector<std::string> builtin_graph_names() {
    std::vector<std::string> names{"c4", "c5"};
    for (int n = 2; n <= 9; ++n) names.push_back("k" + std::to_string(n));
    for (const char* s : {"petersen", "clebsch", "hosi", "gewirtz", "m22", "higman-sims"}) names.emplace_back(s);
    return names;
}

bool is_builtin_graph(std::string_view name) {
    for (const auto& n : builtin_graph_names())
        if (n == name) return true;
    return false;
}

Graph builtin_graph(std::string_view name) {
    if (name == "c4") return cycle_graph(4);
    if (name == "c5") return cycle_graph(5);
    if (name.size() == 2 && name[0] == 'k' && name[1] >= '2' && name[1] <= '9')
        return complete_graph(static_cast<std::size_t>(name[1] - '0'));
    if (name == "petersen") return petersen_graph();
    if (name == "clebsch") return clebsch_graph();
    if (name == "hosi") return hoffman_singleton_graph();
    if (name == "gewirtz") return gewirtz_graph();
    if (name == "m22") return m22_graph();
    if (name == "higman-sims") return higman_sims_graph();
    throw InvalidInput("unknown builtin graph '" + std::string(name) + "'");
}

}  // namespace gnb

#include "gnb/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gnb/errors.hpp"
#include "gnb/named_graphs.hpp"

namespace gnb {

void write_dimacs(std::ostream& os, const Graph& g) {
    auto edges = g.edges();
    os << "p edge " << g.size() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_dimacs(std::istream& is) {
    std::string line;
    std::optional<std::size_t> n;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            std::size_t nn = 0;
            if (!(ls >> kind >> nn >> m) || kind != "edge")
                throw InvalidInput("DIMACS: bad problem line " + std::to_string(lineno));
            n = nn;
        } else if (tag == "e") {
            std::size_t u = 0, v = 0;
            if (!n || !(ls >> u >> v) || u == 0 || v == 0)
                throw InvalidInput("DIMACS: bad edge line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw InvalidInput("DIMACS: unknown line tag '" + tag + "'");
        }
    }
    if (!n) throw InvalidInput("DIMACS: missing 'p edge' line");
    if (edges.size() != m) throw InvalidInput("DIMACS: edge count does not match header");
    return Graph::from_edges(*n, edges);
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.size();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const Json& j) {
    try {
        auto n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InvalidInput("graph JSON: each edge must be a pair");
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        auto g = Graph::from_edges(n, edges);
        if (j.contains("labels")) g = g.with_labels(j["labels"].get<std::vector<std::string>>());
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("graph JSON: ") + e.what());
    }
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    auto text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    bool json = (path.size() >= 5 && path.substr(path.size() - 5) == ".json") ||
                (first != std::string::npos && text[first] == '{');
    if (json) {
        try {
            return graph_from_json(Json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
            throw InvalidInput(std::string("graph JSON: ") + e.what());
        }
    }
    std::istringstream is(text);
    return read_dimacs(is);
}

Graph resolve_graph(const std::string& spec) {
    if (is_builtin_graph(spec)) return builtin_graph(spec);
    return load_graph_file(spec);
}

Json design_to_json(const Design& d) {
    Json j;
    j["v"] = d.v;
    j["t"] = d.t;
    j["k"] = d.k;
    Json blocks = Json::array();
    for (auto b : d.blocks) blocks.push_back(points_of(b));
    j["blocks"] = std::move(blocks);
    return j;
}

Design design_from_json(const Json& j) {
    try {
        Design d;
        d.v = j.at("v").get<std::size_t>();
        d.t = j.at("t").get<std::size_t>();
        d.k = j.at("k").get<std::size_t>();
        if (d.v > 32) throw InvalidInput("design JSON: at most 32 points supported");
        for (const auto& b : j.at("blocks")) {
            auto pts = b.get<std::vector<std::size_t>>();
            for (auto p : pts)
                if (p >= d.v) throw InvalidInput("design JSON: point out of range");
            d.blocks.push_back(point_set(pts));
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("design JSON: ") + e.what());
    }
}

Json strategy_to_json(const Strategy& s) {
    Json j;
    j["s"] = s.s();
    j["tables"] = s.tables();
    return j;
}

std::vector<std::vector<Symbol>> strategy_tables_from_json(const Json& j) {
    try {
        const auto& t = j.is_array() ? j : j.at("tables");
        return t.get<std::vector<std::vector<Symbol>>>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("strategy JSON: ") + e.what());
    }
}

Json cover_to_json(const FractionalCover& c) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < c.cliques.size(); ++i)
        arr.push_back({{"clique", c.cliques[i]}, {"weight", to_string(c.weights[i])}});
    return {{"total", to_string(c.total())}, {"weights", std::move(arr)}};
}

Json witness_to_json(const IndependentSetWitness& w) {
    return {{"size", w.vertices.size()},
            {"method", to_string(w.method)},
            {"reached_target", w.reached_target},
            {"nodes", w.nodes},
            {"vertices", w.vertices}};
}

Json guessing_number_to_json(const GuessingNumber& gn) {
    Json j;
    j["exact"] = gn.exact ? Json(to_string(*gn.exact)) : Json(nullptr);
    j["decimal"] = format_gn(GuessingNumber{std::nullopt, gn.decimal});
    return j;
}

std::string format_gn(const GuessingNumber& gn) {
    if (gn.exact) return to_string(*gn.exact);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", gn.decimal);
    return buf;
}

Json report_to_json(const BoundsReport& r) {
    Json j;
    j["graph"] = r.graph_id;
    j["n"] = r.n;
    j["interval"] = {to_string(r.best_lower()), to_string(r.best_upper())};
    Json lows = Json::array();
    for (const auto& b : r.lower_bounds) {
        Json e{{"value", to_string(b.value)}, {"method", b.method}};
        if (b.cover) e["certificate"] = {{"kind", "fractional-clique-cover"}, {"cover", cover_to_json(*b.cover)}};
        if (b.matrix)
            e["certificate"] = {{"kind", "representing-matrix"},
                                {"matrix", "A+" + std::to_string(b.matrix->shift) + "I"},
                                {"q", b.matrix->q},
                                {"shift", b.matrix->shift},
                                {"rank", b.matrix->rank}};
        lows.push_back(std::move(e));
    }
    j["lower_bounds"] = std::move(lows);
    Json ups = Json::array();
    for (const auto& b : r.upper_bounds)
        ups.push_back({{"value", to_string(b.value)},
                       {"method", b.method},
                       {"certificate", {{"kind", "independent-set"}, {"witness", witness_to_json(b.witness)}}}});
    j["upper_bounds"] = std::move(ups);
    j["notes"] = r.notes;
    return j;
}

}  // namespace gnb

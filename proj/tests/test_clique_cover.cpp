#include <doctest.h>

#include <bit>
#include <random>

#include "gnb/clique_cover.hpp"
#include "gnb/errors.hpp"
#include "gnb/named_graphs.hpp"
#include "oracles.hpp"

using namespace gnb;

namespace {

std::vector<std::uint32_t> cliques_brute(const Graph& g) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 1; m < (1u << g.size()); ++m) {
        bool ok = true;
        for (std::size_t u = 0; u < g.size() && ok; ++u)
            for (std::size_t v = u + 1; v < g.size() && ok; ++v)
                ok = !((m >> u & 1) && (m >> v & 1) && !g.adjacent(u, v));
        if (ok) out.push_back(m);
    }
    return out;
}

std::size_t alpha_brute(const Graph& g) {
    std::size_t best = 0;
    for (std::uint32_t m = 0; m < (1u << g.size()); ++m) {
        bool ok = true;
        for (std::size_t u = 0; u < g.size() && ok; ++u)
            for (std::size_t v = u + 1; v < g.size() && ok; ++v)
                ok = !((m >> u & 1) && (m >> v & 1) && g.adjacent(u, v));
        if (ok) best = std::max<std::size_t>(best, std::popcount(m));
    }
    return best;
}

// Intervals on a line meeting pairwise are adjacent; such graphs are perfect,
// so their fractional clique cover number equals alpha.
Graph random_interval_graph(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> pos(0, 20), len(0, 6);
    std::vector<std::pair<int, int>> iv;
    for (std::size_t i = 0; i < n; ++i) {
        int a = pos(rng);
        iv.emplace_back(a, a + len(rng));
    }
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("clique enumeration") {
    CHECK(enumerate_cliques(complete_graph(3)).size() == 7);
    CHECK(enumerate_cliques(petersen_graph()).size() == 25);
    auto c = enumerate_cliques(complete_graph(4), CliqueLimits{2});
    CHECK(c.size() == 10);
    CHECK(c.front() == Clique{0});
    CHECK(c.back() == Clique{2, 3});
    CHECK_THROWS_AS(enumerate_cliques(complete_graph(12), CliqueLimits{std::nullopt, 100}), ResourceLimit);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_graph(rng, 3 + trial % 9, 0.6);
        CHECK(enumerate_cliques(g).size() == cliques_brute(g).size());
    }
}

TEST_CASE("kappa_f on vertex-transitive graphs is n / omega") {
    CHECK(kappa_f_lp(cycle_graph(5)).value == Rational(5, 2));
    for (std::size_t n = 3; n <= 12; ++n) {
        auto g = cycle_graph(n);
        CHECK(kappa_f_lp(g).value == Rational(n, n == 3 ? 3 : 2));
    }
    CHECK(kappa_f_lp(petersen_graph()).value == 5);
    CHECK(kappa_f_lp(complete_graph(6)).value == 1);
    CHECK(kappa_f(clebsch_graph()).value == 8);
    CHECK(kappa_f(hoffman_singleton_graph()).value == 25);
    CHECK(kappa_f(gewirtz_graph()).value == 28);
    CHECK(kappa_f(m22_graph()).value == Rational(77, 2));
    CHECK(kappa_f_triangle_free(higman_sims_graph()).value == 50);
}

TEST_CASE("kappa_f small cases") {
    std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    CHECK(kappa_f_lp(Graph::from_edges(4, star)).value == 3);
    CHECK(kappa_f_lp(Graph(4)).value == 4);
    CHECK_THROWS_AS(kappa_f_triangle_free(complete_graph(3)), InvalidInput);
}

TEST_CASE("returned covers are feasible and sum to the value") {
    for (const auto& g : {cycle_graph(5), petersen_graph(), clebsch_graph(), complete_graph(4)}) {
        auto r = kappa_f_lp(g);
        CHECK(r.cover.is_feasible(g));
        CHECK(r.cover.total() == r.value);
    }
    auto hs = kappa_f_triangle_free(higman_sims_graph());
    CHECK(hs.cover.is_regular(higman_sims_graph()));
    CHECK(hs.cover.total() == 50);
}

TEST_CASE("property: kappa_f equals alpha on random interval graphs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_interval_graph(rng, 3 + trial % 10);
        CHECK(kappa_f_lp(g).value == alpha_brute(g));
    }
}

TEST_CASE("property: alpha <= kappa_f and n/omega <= kappa_f on random graphs") {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_graph(rng, 3 + trial % 10, 0.5);
        auto k = kappa_f_lp(g).value;
        CHECK(k >= alpha_brute(g));
        CHECK(k <= g.size());
        CHECK(check_omega_bound(g).holds);
    }
}

TEST_CASE("property: LP and matching paths agree on random triangle-free graphs") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_triangle_free(rng, 1 + trial % 12);
        auto lp = kappa_f_lp(g);
        auto mt = kappa_f_triangle_free(g);
        CHECK(lp.value == mt.value);
        CHECK(mt.cover.is_regular(g));
    }
}

TEST_CASE("regularize_cover") {
    auto k2 = complete_graph(2);
    FractionalCover c{{{0}, {0, 1}}, {Rational(1), Rational(1)}};
    REQUIRE(c.is_feasible(k2));
    auto r = regularize_cover(k2, c);
    CHECK(r.is_regular(k2));
    CHECK(r.total() == 1);

    FractionalCover bad{{{0}}, {Rational(1)}};
    CHECK_THROWS_AS(regularize_cover(k2, bad), InvalidInput);
}

TEST_CASE("property: regularization gives regular covers without increasing weight") {
    std::mt19937_64 rng(9001);
    std::uniform_int_distribution<int> num(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(rng, 2 + trial % 9, 0.5);
        auto all = enumerate_cliques(g);
        std::bernoulli_distribution pick(0.4);
        FractionalCover c;
        for (const auto& k : all)
            if (pick(rng)) {
                c.cliques.push_back(k);
                c.weights.emplace_back(num(rng), 6);
            }
        for (Vertex v = 0; v < g.size(); ++v)
            if (c.coverage(v) < 1) {
                c.cliques.push_back({v});
                c.weights.emplace_back(1);
            }
        REQUIRE(c.is_feasible(g));
        auto r = regularize_cover(g, c);
        CHECK(r.is_regular(g));
        CHECK(r.total() <= c.total());
    }
}

TEST_CASE("omega bound") {
    auto b = check_omega_bound(cycle_graph(5));
    CHECK(b.kappa == Rational(5, 2));
    CHECK(b.n_over_omega == Rational(5, 2));
    CHECK(b.holds);
    CHECK(clique_number(complete_graph(5)) == 5);
}

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "gnb/clique_cover.hpp"
#include "gnb/errors.hpp"
#include "gnb/guessing.hpp"
#include "gnb/named_graphs.hpp"
#include "oracles.hpp"

using namespace gnb;

namespace {

Strategy c5_rule(const GuessingGame& game) {
    // Guess 0 when both neighbours hold 1, otherwise 1.
    return Strategy(game, std::vector<std::vector<Symbol>>(5, {1, 1, 1, 0}));
}

Strategy random_strategy(std::mt19937_64& rng, const GuessingGame& game) {
    std::uniform_int_distribution<Symbol> sym(0, game.s() - 1);
    std::vector<std::vector<Symbol>> t(game.graph().size());
    for (Vertex v = 0; v < t.size(); ++v) {
        t[v].resize(oracle::ipow(game.s(), game.graph().degree(v)));
        for (auto& x : t[v]) x = sym(rng);
    }
    return Strategy(game, t);
}

std::uint64_t oracle_wins(const GuessingGame& game, const Strategy& st) {
    return oracle::win_count(game.graph().size(), game.s(), [&](std::size_t v, const auto& a) {
        return oracle::table_guess(game.graph(), game.s(), st.tables(), v, a);
    });
}

MatrixGF random_representing(std::mt19937_64& rng, const Graph& g, std::uint32_t q) {
    std::uniform_int_distribution<std::uint32_t> any(0, q - 1), nz(1, q - 1);
    const auto n = g.size();
    std::vector<std::uint32_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e[i * n + j] = i == j ? nz(rng) : g.adjacent(i, j) ? any(rng) : 0;
    return MatrixGF(PrimeField(q), n, n, std::move(e));
}

std::vector<Graph> all_graphs(std::size_t n) {
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (m >> i & 1) e.push_back(pairs[i]);
        out.push_back(Graph::from_edges(n, e));
    }
    return out;
}

}  // namespace

TEST_CASE("game and strategy validation") {
    CHECK_THROWS_AS(GuessingGame(cycle_graph(5), 1), InvalidInput);
    GuessingGame game(cycle_graph(5), 2);
    CHECK_THROWS_AS(Strategy(game, std::vector<std::vector<Symbol>>(4, {1, 1, 1, 0})), InvalidInput);
    CHECK_THROWS_AS(Strategy(game, std::vector<std::vector<Symbol>>(5, {1, 1, 0})), InvalidInput);
    CHECK_THROWS_AS(Strategy(game, std::vector<std::vector<Symbol>>(5, {1, 1, 2, 0})), InvalidInput);
}

TEST_CASE("view index puts the lowest neighbour first") {
    auto g = path_graph(3);
    std::vector<Symbol> a{2, 0, 1};
    CHECK(view_index(g, 3, 1, a) == 2 * 3 + 1);
    CHECK(view_index(g, 3, 0, a) == 0);
}

TEST_CASE("C5 with s = 2: the rule wins on exactly five assignments") {
    GuessingGame game(cycle_graph(5), 2);
    auto st = c5_rule(game);
    auto ev = eval_strategy(game, st);
    CHECK(ev.wins == 5);
    CHECK(ev.total == 32);
    CHECK(ev.probability == Rational(5, 32));
    CHECK_FALSE(ev.gn.exact);
    CHECK(ev.gn.decimal == doctest::Approx(std::log2(5.0)));

    std::set<std::string> won;
    std::vector<Symbol> a(5);
    for (std::uint32_t m = 0; m < 32; ++m) {
        std::string s;
        for (std::size_t v = 0; v < 5; ++v) {
            a[v] = m >> (4 - v) & 1;
            s += char('0' + a[v]);
        }
        bool ok = true;
        for (Vertex v = 0; v < 5; ++v) ok = ok && oracle::table_guess(game.graph(), 2, st.tables(), v, a) == a[v];
        if (ok) won.insert(s);
    }
    CHECK(won == std::set<std::string>{"11010", "10110", "10101", "01101", "01011"});
}

TEST_CASE("exhaustive search on C5 with s = 2") {
    GuessingGame game(cycle_graph(5), 2);
    auto r = exhaustive_optimal(game);
    CHECK(r.probability == Rational(5, 32));
    CHECK(r.wins == 5);
    CHECK(eval_strategy(game, r.strategy).wins == 5);
    CHECK(oracle_wins(game, r.strategy) == 5);
}

TEST_CASE("property: exhaustive search matches plain enumeration of all strategies") {
    std::vector<std::pair<Graph, std::uint32_t>> cases{
        {complete_graph(2), 2}, {complete_graph(2), 3}, {complete_graph(3), 2}, {path_graph(3), 2},
        {complete_graph(2), 4}, {cycle_graph(4), 2},    {path_graph(4), 2},     {Graph(2), 3}};
    for (auto& [g, s] : cases) {
        GuessingGame game(g, s);
        auto expect = oracle::brute_force_optimum(g, s);
        auto r = exhaustive_optimal(game);
        CHECK(r.wins == expect);
        CHECK(oracle_wins(game, r.strategy) == expect);
        auto plain = exhaustive_optimal(game, SearchOptions{.symmetry = false});
        CHECK(plain.wins == expect);
        CHECK(plain.strategy == r.strategy);
    }
}

TEST_CASE("search is independent of symmetry pruning and thread count") {
    GuessingGame game(cycle_graph(5), 2);
    auto a = exhaustive_optimal(game);
    auto b = exhaustive_optimal(game, SearchOptions{.symmetry = false});
    auto c = exhaustive_optimal(game, SearchOptions{.threads = 4});
    CHECK(a.strategy == b.strategy);
    CHECK(a.strategy == c.strategy);
    CHECK(a.root_functions < b.root_functions);
}

TEST_CASE("search and evaluation caps") {
    GuessingGame game(cycle_graph(5), 3);
    CHECK_THROWS_AS(exhaustive_optimal(game), ResourceLimit);
    GuessingGame big(cycle_graph(30), 2);
    auto st = Strategy(big, std::vector<std::vector<Symbol>>(30, {0, 0, 0, 0}));
    CHECK_THROWS_AS(eval_strategy(big, st), ResourceLimit);
}

TEST_CASE("blowup identity gn(C4, 2) = 2 = 2 gn(K2, 4)") {
    auto c4 = uniform_blowup(complete_graph(2), 2);
    auto c4_direct = exhaustive_optimal(GuessingGame(cycle_graph(4), 2));
    auto c4_blow = exhaustive_optimal(GuessingGame(c4, 2));
    auto k2 = exhaustive_optimal(GuessingGame(complete_graph(2), 4));
    REQUIRE(c4_direct.gn.exact);
    REQUIRE(c4_blow.gn.exact);
    REQUIRE(k2.gn.exact);
    CHECK(*c4_direct.gn.exact == 2);
    CHECK(*c4_blow.gn.exact == 2);
    CHECK(*k2.gn.exact == 1);
    CHECK(*c4_blow.gn.exact == 2 * *k2.gn.exact);
}

TEST_CASE("property: blowup transfer preserves the win probability") {
    std::mt19937_64 rng(1212);
    const std::pair<std::uint32_t, std::size_t> alphabets[] = {{2, 2}, {3, 2}, {2, 3}};
    for (int trial = 0; trial < 20; ++trial) {
        auto [r, t] = alphabets[trial % 3];
        auto s = static_cast<std::uint32_t>(oracle::ipow(r, t));
        auto g = oracle::random_graph(rng, 2 + trial % 3, 0.6);
        GuessingGame game(g, s);
        auto st = random_strategy(rng, game);
        auto b = blowup_transfer(g, st, t);
        CHECK(b.game.s() == r);
        CHECK(b.game.graph().same_adjacency(uniform_blowup(g, t)));
        auto p = eval_strategy(game, st).probability;
        CHECK(eval_strategy(b.game, b.strategy).probability == p);
        CHECK(Rational(oracle_wins(b.game, b.strategy), oracle::ipow(r, g.size() * t)) == p);
    }
    GuessingGame g5(cycle_graph(4), 5);
    CHECK_THROWS_AS(blowup_transfer(cycle_graph(4), random_strategy(rng, g5), 2), InvalidInput);
}

TEST_CASE("exact roots and guessing numbers") {
    CHECK(exact_root(16, 2) == std::optional<std::uint32_t>{4});
    CHECK(exact_root(27, 3) == std::optional<std::uint32_t>{3});
    CHECK_FALSE(exact_root(12, 2));
    auto gn = guessing_number_from_wins(32, 4);
    REQUIRE(gn.exact);
    CHECK(*gn.exact == Rational(5, 2));
    CHECK(gn.decimal == doctest::Approx(2.5));
    CHECK_FALSE(guessing_number_from_wins(12, 3).exact);
}

TEST_CASE("representing matrices") {
    auto c5 = cycle_graph(5);
    CHECK(is_representing_matrix(c5, adjacency_shifted(c5, 2, 1)));
    CHECK_FALSE(is_representing_matrix(c5, adjacency_shifted(complete_graph(5), 2, 1)));
    CHECK_FALSE(is_representing_matrix(c5, MatrixGF(PrimeField(2), 5, 5)));
    CHECK_THROWS_AS(is_representing_matrix(c5, MatrixGF(PrimeField(2), 5, 4)), InvalidInput);
}

TEST_CASE("property: linear strategies win exactly on the kernel") {
    std::mt19937_64 rng(606);
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& g : all_graphs(n))
            for (std::uint32_t q : {2u, 3u}) {
                auto m = random_representing(rng, g, q);
                auto lin = linear_strategy(g, m);
                REQUIRE(lin.strategy);
                CHECK(lin.rank == rank(m));
                CHECK(lin.gn_value == n - lin.rank);
                GuessingGame game(g, q);
                auto ev = eval_strategy(game, *lin.strategy);
                CHECK(ev.probability == Rational(1, oracle::ipow(q, lin.rank)));
                CHECK(ev.wins == oracle::kernel_size(m));
            }
}

TEST_CASE("linear strategy on a large graph keeps only the rank") {
    const auto& hs = higman_sims_graph();
    auto lin = linear_strategy(hs, adjacency_shifted(hs, 3, 1));
    CHECK(lin.rank == 23);
    CHECK(lin.gn_value == 77);
    CHECK_FALSE(lin.strategy);
}

TEST_CASE("clique cover strategies") {
    auto c5 = cycle_graph(5);
    auto cs = clique_cover_strategy(c5, kappa_f_lp(c5).cover);
    CHECK(cs.game.s() == 4);
    CHECK(cs.digits == 2);
    auto ev = eval_strategy(cs.game, cs.strategy);
    CHECK(ev.probability == Rational(32, 1024));
    CHECK(oracle_wins(cs.game, cs.strategy) == 32);
    REQUIRE(ev.gn.exact);
    CHECK(*ev.gn.exact == Rational(5, 2));

    for (std::size_t n = 1; n <= 6; ++n) {
        auto kn = complete_graph(n);
        FractionalCover one{{enumerate_cliques(kn).back()}, {Rational(1)}};
        auto st = clique_cover_strategy(kn, one);
        // One clique of weight 1: the whole clique plays "sum to zero".
        auto ev_n = eval_strategy(st.game, st.strategy);
        CHECK(ev_n.probability == Rational(1, 2));
        CHECK(ev_n.wins == oracle::ipow(2, n - 1));
    }

    auto p3 = path_graph(3);
    auto cover = regularize_cover(p3, kappa_f_lp(p3).cover);
    for (std::uint32_t base : {2u, 3u}) {
        auto st = clique_cover_strategy(p3, cover, base);
        CHECK(eval_strategy(st.game, st.strategy).probability == Rational(1, base * base));
    }

    FractionalCover twice{{{0, 1}, {1, 2}}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(clique_cover_strategy(p3, twice), InvalidInput);
}

TEST_CASE("property: more information never lowers the optimum") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = oracle::random_graph(rng, 3, 0.4);
        std::vector<Edge> e = g.edges();
        std::vector<Edge> missing;
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t v = u + 1; v < 3; ++v)
                if (!g.adjacent(u, v)) missing.emplace_back(u, v);
        if (missing.empty()) continue;
        e.push_back(missing[trial % missing.size()]);
        auto h = Graph::from_edges(3, e);
        CHECK(exhaustive_optimal(GuessingGame(h, 2)).wins >= exhaustive_optimal(GuessingGame(g, 2)).wins);
    }
}

TEST_CASE("evaluation is independent of the thread count") {
    std::mt19937_64 rng(3);
    GuessingGame game(cycle_graph(7), 3);
    auto st = random_strategy(rng, game);
    EvalOptions many;
    many.threads = 4;
    CHECK(eval_strategy(game, st).wins == eval_strategy(game, st, many).wins);
}

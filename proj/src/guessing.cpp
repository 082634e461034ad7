#include "gnb/guessing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "gnb/errors.hpp"

namespace gnb {

namespace {

// base^exp, or nullopt once it exceeds cap.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return std::nullopt;
        r *= base;
    }
    if (r > cap) return std::nullopt;
    return r;
}

std::uint64_t pow_or_throw(std::uint64_t base, std::uint64_t exp, std::uint64_t cap, const char* what) {
    auto r = checked_pow(base, exp, cap);
    if (!r) throw ResourceLimit(std::string(what) + " exceeds cap of " + std::to_string(cap));
    return *r;
}

// Digits of x in base s, most significant first.
void decode(std::uint64_t x, std::uint32_t s, std::span<Symbol> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Symbol>(x % s);
        x /= s;
    }
}

std::uint64_t encode(std::span<const Symbol> digits, std::uint64_t base) {
    std::uint64_t x = 0;
    for (auto d : digits) x = x * base + d;
    return x;
}

unsigned clamp_threads(unsigned t) {
    if (t == 0) t = std::max(1U, std::thread::hardware_concurrency());
    return t;
}

}  // namespace

GuessingGame::GuessingGame(Graph g, std::uint32_t s) : graph_(std::move(g)), s_(s) {
    if (s < 2) throw InvalidInput("alphabet size must be at least 2");
}

Strategy::Strategy(const GuessingGame& game, std::vector<std::vector<Symbol>> tables)
    : s_(game.s()), tables_(std::move(tables)) {
    const auto& g = game.graph();
    if (tables_.size() != g.size()) throw InvalidInput("strategy needs one table per vertex");
    for (Vertex v = 0; v < g.size(); ++v) {
        auto expected = checked_pow(s_, g.degree(v), std::numeric_limits<std::uint32_t>::max());
        if (!expected || tables_[v].size() != *expected)
            throw InvalidInput("table of vertex " + std::to_string(v) + " must have s^deg entries");
        for (auto x : tables_[v])
            if (x >= s_) throw InvalidInput("table entry outside the alphabet");
    }
}

std::size_t view_index(const Graph& g, std::uint32_t s, Vertex v, std::span<const Symbol> assignment) {
    std::size_t idx = 0;
    const auto& nb = g.neighbors(v);
    for (auto u = nb.first(); u < g.size(); u = nb.next(u)) idx = idx * s + assignment[u];
    return idx;
}

GuessingNumber guessing_number_from_wins(const BigInt& wins, std::uint32_t s) {
    GuessingNumber gn;
    if (wins <= 0) {
        gn.decimal = -std::numeric_limits<double>::infinity();
        return gn;
    }
    gn.decimal = std::log(wins.convert_to<double>()) / std::log(static_cast<double>(s));
    // wins = s^(a/b)  <=>  wins^b = s^a
    BigInt power = 1;
    for (long long b = 1; b <= 24; ++b) {
        power *= wins;
        BigInt rest = power;
        long long a = 0;
        while (rest % s == 0) {
            rest /= s;
            ++a;
        }
        if (rest == 1) {
            gn.exact = Rational(a, b);
            break;
        }
    }
    return gn;
}

Evaluation eval_strategy(const GuessingGame& game, const Strategy& strat, EvalOptions opts) {
    const auto& g = game.graph();
    const auto s = game.s();
    if (strat.s() != s || strat.size() != g.size()) throw InvalidInput("strategy does not match the game");
    const auto n = g.size();
    const auto total = pow_or_throw(s, n, opts.assignment_cap, "assignment count s^n");

    std::vector<std::vector<Vertex>> nbrs(n);
    for (Vertex v = 0; v < n; ++v) nbrs[v] = g.neighbor_list(v);

    auto count_range = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Symbol> a(n);
        decode(lo, s, a);
        std::uint64_t wins = 0;
        for (std::uint64_t x = lo; x < hi; ++x) {
            bool won = true;
            for (Vertex v = 0; v < n && won; ++v) {
                std::size_t idx = 0;
                for (auto u : nbrs[v]) idx = idx * s + a[u];
                won = strat.table(v)[idx] == a[v];
            }
            wins += won;
            for (std::size_t i = n; i-- > 0;) {  // odometer, last vertex fastest
                if (++a[i] < s) break;
                a[i] = 0;
            }
        }
        return wins;
    };

    const auto threads = static_cast<std::uint64_t>(std::min<std::uint64_t>(clamp_threads(opts.threads), total));
    std::uint64_t wins = 0;
    if (threads <= 1) {
        wins = count_range(0, total);
    } else {
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        for (std::uint64_t k = 0; k < threads; ++k)
            pool.emplace_back([&, k] { partial[k] = count_range(total * k / threads, total * (k + 1) / threads); });
        for (auto& th : pool) th.join();
        wins = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
    }

    Evaluation e;
    e.wins = wins;
    e.total = total;
    e.probability = Rational(e.wins, e.total);
    e.gn = guessing_number_from_wins(e.wins, s);
    return e;
}

namespace {

struct SearchSpace {
    std::size_t n = 0;
    std::uint32_t s = 0;
    std::size_t assignments = 0;
    std::vector<std::size_t> table_len;                 // s^deg(v)
    std::vector<std::uint64_t> function_count;          // s^table_len
    std::vector<std::vector<Bitset>> masks;             // masks[v][F]: assignments where F guesses v right
};

// Entry e of function F, entry 0 most significant.
std::vector<Symbol> function_table(std::uint64_t f, std::uint32_t s, std::size_t len) {
    std::vector<Symbol> t(len);
    decode(f, s, t);
    return t;
}

SearchSpace build_space(const GuessingGame& game, const SearchOptions& opts) {
    const auto& g = game.graph();
    SearchSpace sp;
    sp.n = g.size();
    sp.s = game.s();
    sp.assignments = pow_or_throw(sp.s, sp.n, opts.assignment_cap, "assignment count s^n");

    long double strategies = 1;
    for (Vertex v = 0; v < sp.n; ++v) {
        auto len = pow_or_throw(sp.s, g.degree(v), 64, "table length s^deg");
        sp.table_len.push_back(len);
        auto fc = checked_pow(sp.s, len, opts.strategy_cap);
        if (!fc) throw ResourceLimit("strategy count exceeds cap of " + std::to_string(opts.strategy_cap));
        sp.function_count.push_back(*fc);
        strategies *= static_cast<long double>(*fc);
    }
    if (strategies > static_cast<long double>(opts.strategy_cap))
        throw ResourceLimit("strategy count exceeds cap of " + std::to_string(opts.strategy_cap));

    long double mask_words = 0;
    for (auto fc : sp.function_count) mask_words += static_cast<long double>(fc) * ((sp.assignments + 63) / 64);
    if (mask_words > static_cast<long double>(std::uint64_t{1} << 27))
        throw ResourceLimit("search masks would exceed memory budget");

    // cell[v][e][x]: assignments where v sees view e and holds x.
    std::vector<std::vector<std::vector<Bitset>>> cell(sp.n);
    for (Vertex v = 0; v < sp.n; ++v)
        cell[v].assign(sp.table_len[v], std::vector<Bitset>(sp.s, Bitset(sp.assignments)));
    std::vector<Symbol> a(sp.n);
    for (std::uint64_t x = 0; x < sp.assignments; ++x) {
        decode(x, sp.s, a);
        for (Vertex v = 0; v < sp.n; ++v) cell[v][view_index(g, sp.s, v, a)][a[v]].set(x);
    }

    sp.masks.resize(sp.n);
    for (Vertex v = 0; v < sp.n; ++v) {
        sp.masks[v].reserve(sp.function_count[v]);
        for (std::uint64_t f = 0; f < sp.function_count[v]; ++f) {
            auto t = function_table(f, sp.s, sp.table_len[v]);
            Bitset m(sp.assignments);
            for (std::size_t e = 0; e < t.size(); ++e) m |= cell[v][e][t[e]];
            sp.masks[v].push_back(std::move(m));
        }
    }
    return sp;
}

// Vertex-0 functions that are lexicographically minimal among their images
// under relabelling the alphabet (f -> σ∘f∘σ⁻¹ applied to all players).
std::vector<std::uint64_t> canonical_roots(const Graph& g, const SearchSpace& sp) {
    const auto deg = g.degree(0);
    const auto len = sp.table_len[0];
    std::vector<std::vector<std::size_t>> index_maps;  // view e -> view σ(e)
    std::vector<std::vector<Symbol>> perms;
    std::vector<Symbol> sigma(sp.s);
    std::iota(sigma.begin(), sigma.end(), Symbol{0});
    std::vector<Symbol> digits(deg);
    do {
        std::vector<std::size_t> map(len);
        for (std::size_t e = 0; e < len; ++e) {
            decode(e, sp.s, digits);
            for (auto& d : digits) d = sigma[d];
            map[e] = encode(digits, sp.s);
        }
        index_maps.push_back(std::move(map));
        perms.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::vector<std::uint64_t> roots;
    std::vector<Symbol> image(len);
    for (std::uint64_t f = 0; f < sp.function_count[0]; ++f) {
        auto t = function_table(f, sp.s, len);
        bool minimal = true;
        for (std::size_t p = 0; p < perms.size() && minimal; ++p) {
            for (std::size_t e = 0; e < len; ++e) image[index_maps[p][e]] = perms[p][t[e]];
            if (image < t) minimal = false;
        }
        if (minimal) roots.push_back(f);
    }
    return roots;
}

struct Incumbent {
    std::size_t wins = 0;
    std::vector<std::uint64_t> choice;
    std::uint64_t nodes = 0;
};

void search(const SearchSpace& sp, std::size_t v, const Bitset& running, std::vector<std::uint64_t>& choice,
            Incumbent& best) {
    ++best.nodes;
    if (v == sp.n) {
        auto c = running.count();
        if (c > best.wins) {
            best.wins = c;
            best.choice = choice;
        }
        return;
    }
    for (std::uint64_t f = 0; f < sp.function_count[v]; ++f) {
        Bitset next = running;
        next &= sp.masks[v][f];
        if (next.count() <= best.wins) continue;
        choice[v] = f;
        search(sp, v + 1, next, choice, best);
    }
}

}  // namespace

SearchResult exhaustive_optimal(const GuessingGame& game, SearchOptions opts) {
    const auto& g = game.graph();
    if (g.size() == 0) throw InvalidInput("exhaustive search needs at least one vertex");
    auto sp = build_space(game, opts);

    std::vector<std::uint64_t> roots;
    if (opts.symmetry) {
        roots = canonical_roots(g, sp);
    } else {
        roots.resize(sp.function_count[0]);
        std::iota(roots.begin(), roots.end(), std::uint64_t{0});
    }

    Bitset all(sp.assignments);
    for (std::size_t x = 0; x < sp.assignments; ++x) all.set(x);

    auto run = [&](std::size_t stride, std::size_t offset) {
        Incumbent best;
        std::vector<std::uint64_t> choice(sp.n, 0);
        for (std::size_t r = offset; r < roots.size(); r += stride) {
            Bitset next = all;
            next &= sp.masks[0][roots[r]];
            if (next.count() <= best.wins) continue;
            choice[0] = roots[r];
            search(sp, 1, next, choice, best);
        }
        return best;
    };

    const auto threads = std::min<std::size_t>(clamp_threads(opts.threads), roots.size());
    std::vector<Incumbent> results(std::max<std::size_t>(threads, 1));
    if (threads <= 1) {
        results[0] = run(1, 0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < threads; ++k) pool.emplace_back([&, k] { results[k] = run(threads, k); });
        for (auto& th : pool) th.join();
    }

    Incumbent best;
    for (auto& r : results) {
        best.nodes += r.nodes;
        if (r.choice.empty()) continue;
        if (r.wins > best.wins || (r.wins == best.wins && r.choice < best.choice)) {
            best.wins = r.wins;
            best.choice = r.choice;
        }
    }
    if (best.choice.empty()) throw ConstructionFault("exhaustive search found no winning strategy");

    std::vector<std::vector<Symbol>> tables;
    for (Vertex v = 0; v < sp.n; ++v) tables.push_back(function_table(best.choice[v], sp.s, sp.table_len[v]));

    SearchResult out;
    out.wins = best.wins;
    out.probability = Rational(out.wins, BigInt(sp.assignments));
    out.strategy = Strategy(game, std::move(tables));
    out.gn = guessing_number_from_wins(out.wins, sp.s);
    out.nodes = best.nodes;
    out.root_functions = roots.size();
    return out;
}

bool is_representing_matrix(const Graph& g, const MatrixGF& m) {
    if (m.rows() != g.size() || m.cols() != g.size())
        throw InvalidInput("representing matrix must be square of order n");
    for (Vertex i = 0; i < g.size(); ++i) {
        if (m.at(i, i) == 0) return false;
        for (Vertex j = 0; j < g.size(); ++j)
            if (i != j && m.at(i, j) != 0 && !g.adjacent(i, j)) return false;
    }
    return true;
}

LinearStrategy linear_strategy(const Graph& g, const MatrixGF& m, std::uint64_t table_cap) {
    if (!is_representing_matrix(g, m)) throw InvalidInput("matrix does not represent the graph");
    const auto& f = m.field();
    const auto q = f.q();
    LinearStrategy out;
    out.rank = rank(m);
    out.gn_value = g.size() - out.rank;

    std::uint64_t entries = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
        auto len = checked_pow(q, g.degree(v), table_cap);
        if (!len || entries + *len > table_cap) return out;
        entries += *len;
    }

    GuessingGame game(g, q);
    std::vector<std::vector<Symbol>> tables(g.size());
    for (Vertex i = 0; i < g.size(); ++i) {
        auto nb = g.neighbor_list(i);
        auto len = *checked_pow(q, nb.size(), table_cap);
        auto coef = f.neg(f.inv(m.at(i, i)));
        std::vector<Symbol> y(nb.size());
        tables[i].resize(len);
        for (std::uint64_t e = 0; e < len; ++e) {
            decode(e, q, y);
            Elem sum = 0;
            for (std::size_t k = 0; k < nb.size(); ++k) sum = f.add(sum, f.mul(m.at(i, nb[k]), y[k]));
            tables[i][e] = f.mul(coef, sum);
        }
    }
    out.strategy = Strategy(game, std::move(tables));
    return out;
}

CoverStrategy clique_cover_strategy(const Graph& g, const FractionalCover& cover, std::uint32_t base,
                                    std::uint64_t table_cap) {
    if (base < 2) throw InvalidInput("digit base must be at least 2");
    if (!cover.is_regular(g)) throw InvalidInput("cover is not regular; call regularize_cover first");

    BigInt lcm = 1;
    for (const auto& w : cover.weights) {
        BigInt d = boost::multiprecision::denominator(w);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    if (lcm > 32) throw ResourceLimit("weight denominators too large for an explicit strategy");
    const auto digits = lcm.convert_to<std::uint32_t>();
    const auto s = pow_or_throw(base, digits, std::numeric_limits<std::uint32_t>::max(), "alphabet base^D");

    // Slot layout: clique c owns slots [offset[c][u], offset[c][u] + len[c]) at vertex u.
    const auto n = g.size();
    std::vector<std::uint32_t> used(n, 0);
    std::vector<std::uint32_t> len(cover.cliques.size());
    std::vector<std::vector<std::uint32_t>> offset(cover.cliques.size());
    for (std::size_t c = 0; c < cover.cliques.size(); ++c) {
        len[c] = static_cast<std::uint32_t>(boost::multiprecision::numerator(Rational(cover.weights[c] * digits)));
        for (auto u : cover.cliques[c]) {
            offset[c].push_back(used[u]);
            used[u] += len[c];
        }
    }
    for (Vertex u = 0; u < n; ++u)
        if (used[u] != digits) throw ConstructionFault("slot allocation does not fill every vertex");

    std::uint64_t entries = 0;
    for (Vertex v = 0; v < n; ++v) entries += pow_or_throw(s, g.degree(v), table_cap, "strategy table size");
    if (entries > table_cap) throw ResourceLimit("strategy tables exceed cap");

    std::vector<std::uint64_t> place(digits);
    for (std::uint32_t p = 0; p < digits; ++p) place[p] = *checked_pow(base, p, s);
    auto digit = [&](Symbol a, std::uint32_t p) { return static_cast<std::uint32_t>((a / place[p]) % base); };

    GuessingGame game(g, static_cast<std::uint32_t>(s));
    std::vector<std::vector<Symbol>> tables(n);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbor_list(v);
        std::vector<std::size_t> slot_of(n, 0);
        for (std::size_t k = 0; k < nb.size(); ++k) slot_of[nb[k]] = k;
        const auto tlen = *checked_pow(s, nb.size(), table_cap);
        tables[v].resize(tlen);
        std::vector<Symbol> view(nb.size());
        for (std::uint64_t e = 0; e < tlen; ++e) {
            decode(e, static_cast<std::uint32_t>(s), view);
            std::uint64_t guess = 0;
            for (std::size_t c = 0; c < cover.cliques.size(); ++c) {
                const auto& k = cover.cliques[c];
                auto me = std::find(k.begin(), k.end(), v);
                if (me == k.end()) continue;
                const auto my_off = offset[c][static_cast<std::size_t>(me - k.begin())];
                for (std::uint32_t r = 0; r < len[c]; ++r) {
                    std::uint32_t sum = 0;
                    for (std::size_t i = 0; i < k.size(); ++i)
                        if (k[i] != v) sum += digit(view[slot_of[k[i]]], offset[c][i] + r);
                    guess += ((base - sum % base) % base) * place[my_off + r];
                }
            }
            tables[v][e] = static_cast<Symbol>(guess);
        }
    }
    Strategy strat(game, std::move(tables));
    return CoverStrategy{std::move(game), std::move(strat), base, digits};
}

std::optional<std::uint32_t> exact_root(std::uint64_t s, std::size_t t) {
    if (t == 0) return std::nullopt;
    for (std::uint64_t r = 1; r <= s; ++r) {
        auto p = checked_pow(r, t, s);
        if (!p) return std::nullopt;
        if (*p == s) return static_cast<std::uint32_t>(r);
    }
    return std::nullopt;
}

BlowupStrategy blowup_transfer(const Graph& g, const Strategy& strat, std::size_t t) {
    if (t == 0) throw InvalidInput("blowup factor must be at least 1");
    const auto big = strat.s();
    auto root = exact_root(big, t);
    if (!root || *root < 2) throw InvalidInput("alphabet " + std::to_string(big) + " is not a t-th power");
    const auto s = *root;
    // Validates table shapes against (G, s^t).
    Strategy checked(GuessingGame(g, big), strat.tables());

    auto blown = uniform_blowup(g, t);
    GuessingGame game(blown, s);
    std::vector<std::vector<Symbol>> tables(blown.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        const auto deg = g.degree(v);
        const auto tlen = *checked_pow(s, deg * t, std::numeric_limits<std::uint64_t>::max());
        std::vector<Symbol> view(deg * t), classes(deg);
        std::vector<std::vector<Symbol>> member(t, std::vector<Symbol>(tlen));
        for (std::uint64_t e = 0; e < tlen; ++e) {
            decode(e, s, view);
            // Neighbour (u, j) sits at position u_rank * t + j; class value Σ_j x_(u,j) s^j.
            for (std::size_t k = 0; k < deg; ++k) {
                std::uint64_t a = 0;
                for (std::size_t j = t; j-- > 0;) a = a * s + view[k * t + j];
                classes[k] = static_cast<Symbol>(a);
            }
            auto guess = checked.table(v)[encode(classes, big)];
            for (std::size_t i = 0; i < t; ++i) {
                member[i][e] = guess % s;
                guess /= s;
            }
        }
        for (std::size_t i = 0; i < t; ++i) tables[v * t + i] = std::move(member[i]);
    }
    Strategy out(game, std::move(tables));
    return BlowupStrategy{std::move(game), std::move(out)};
}

}  // namespace gnb

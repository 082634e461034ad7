#include "gnb/bounds.hpp"

#include <algorithm>

#include "gnb/errors.hpp"
#include "gnb/gf.hpp"
#include "gnb/named_graphs.hpp"

namespace gnb {

Rational BoundsReport::best_lower() const { return best_lower_bound().value; }
Rational BoundsReport::best_upper() const { return best_upper_bound().value; }

const LowerBound& BoundsReport::best_lower_bound() const {
    if (lower_bounds.empty()) throw InvalidInput("report has no lower bounds");
    // First maximal entry, so ties keep the earlier method.
    const LowerBound* best = &lower_bounds.front();
    for (const auto& b : lower_bounds)
        if (b.value > best->value) best = &b;
    return *best;
}

const UpperBound& BoundsReport::best_upper_bound() const {
    if (upper_bounds.empty()) throw InvalidInput("report has no upper bounds");
    const UpperBound* best = &upper_bounds.front();
    for (const auto& b : upper_bounds)
        if (b.value < best->value) best = &b;
    return *best;
}

BoundsReport bounds_report(const Graph& g, const std::string& graph_id, const BoundsConfig& config) {
    BoundsReport rep;
    rep.graph_id = graph_id;
    rep.n = g.size();
    const Rational n(static_cast<long long>(g.size()));

    if (config.use_kappa) {
        try {
            auto k = kappa_f(g, config.kappa_method);
            rep.lower_bounds.push_back({n - k.value, "fractional-clique-cover", std::move(k.cover), std::nullopt});
        } catch (const ResourceLimit& e) {
            rep.notes.push_back(std::string("fractional clique cover skipped: ") + e.what());
        }
    }

    for (auto q : config.fields) {
        PrimeField f(q);
        std::vector<std::uint32_t> shifts = config.shifts;
        if (shifts.empty())
            for (std::uint32_t c = 1; c < q; ++c) shifts.push_back(c);
        for (auto c : shifts) {
            if (c % q == 0) {
                rep.notes.push_back("shift " + std::to_string(c) + " is zero mod " + std::to_string(q) + "; skipped");
                continue;
            }
            auto r = rank(adjacency_shifted(g, q, c));
            rep.lower_bounds.push_back({n - Rational(static_cast<long long>(r)), "representing-matrix",
                                        std::nullopt, RankCertificate{q, c % q, r}});
        }
    }
    if (rep.lower_bounds.empty())
        rep.lower_bounds.push_back({Rational(0), "trivial", std::nullopt, std::nullopt});

    auto target = config.witness_target.value_or(g.size());
    auto w = independent_set_witness(g, target, config.budget);
    if (!w.reached_target)
        rep.notes.push_back("independent set search stopped at size " + std::to_string(w.vertices.size()) +
                            " below target " + std::to_string(target));
    rep.upper_bounds.push_back({n - Rational(static_cast<long long>(w.vertices.size())), "independent-set", w});
    for (const auto& ex : config.explicit_witnesses) {
        auto sorted = ex;
        std::sort(sorted.begin(), sorted.end());
        if (!is_independent_set(g, sorted)) {
            rep.notes.push_back("explicit witness rejected: not independent");
            continue;
        }
        IndependentSetWitness ew{sorted, WitnessMethod::Explicit, sorted.size() >= target, 0};
        rep.upper_bounds.push_back({n - Rational(static_cast<long long>(sorted.size())), "independent-set", ew});
    }

    if (rep.best_lower() > rep.best_upper()) throw ConstructionFault("lower bound exceeds upper bound");
    return rep;
}

std::vector<SrgTableRow> srg_bounds_table(SearchBudget budget) {
    struct Spec {
        const char* name;
        const char* builtin;
        std::size_t alpha;
    };
    const Spec rows[] = {
        {"Clebsch", "clebsch", 5},   {"Hoffman-Singleton", "hosi", 15}, {"Gewirtz", "gewirtz", 16},
        {"M22", "m22", 21},          {"Higman-Sims", "higman-sims", 22},
    };
    std::vector<SrgTableRow> out;
    for (const auto& r : rows) {
        auto g = builtin_graph(r.builtin);
        BoundsConfig cfg;
        cfg.budget = budget;
        cfg.witness_target = r.alpha;
        if (std::string(r.builtin) == "m22") cfg.explicit_witnesses.push_back(m22_point_star());
        out.push_back({r.name, r.builtin, g.size(), bounds_report(g, r.builtin, cfg)});
    }
    return out;
}

}  // namespace gnb

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnb/clique_cover.hpp"
#include "gnb/graph.hpp"
#include "gnb/rational.hpp"

namespace gnb {

struct RankCertificate {
    std::uint32_t q = 0;
    std::uint32_t shift = 0;  // matrix is A + shift·I over Z_q
    std::size_t rank = 0;
};

struct LowerBound {
    Rational value;
    std::string method;  // "fractional-clique-cover" or "representing-matrix"
    std::optional<FractionalCover> cover;
    std::optional<RankCertificate> matrix;
};

struct UpperBound {
    Rational value;
    std::string method;  // "independent-set"
    IndependentSetWitness witness;
};

struct BoundsConfig {
    std::vector<std::uint32_t> fields{2, 3, 5, 7};
    /// Shifts c in A + cI; empty means every c in 1..q-1.
    std::vector<std::uint32_t> shifts;
    bool use_kappa = true;
    KappaMethod kappa_method = KappaMethod::Auto;
    SearchBudget budget{};
    /// Witness search stops at this size; defaults to n (search until budget or proof).
    std::optional<std::size_t> witness_target;
    /// Extra independent sets to consider (verified before use).
    std::vector<std::vector<Vertex>> explicit_witnesses;
};

/// Certified interval for the asymptotic guessing number. Every lower bound
/// comes from a computation made here (κ_f or a rank), every upper bound from
/// a verified independent set via gn <= n - |I|.
struct BoundsReport {
    std::string graph_id;
    std::size_t n = 0;
    std::vector<LowerBound> lower_bounds;
    std::vector<UpperBound> upper_bounds;
    std::vector<std::string> notes;

    Rational best_lower() const;
    Rational best_upper() const;
    const LowerBound& best_lower_bound() const;
    const UpperBound& best_upper_bound() const;
};

BoundsReport bounds_report(const Graph& g, const std::string& graph_id, const BoundsConfig& config = {});

/// One row of the triangle-free SRG table (Clebsch, Hoffman-Singleton,
/// Gewirtz, M22, Higman-Sims) with the independence targets 5, 15, 16, 21, 22.
struct SrgTableRow {
    std::string name;
    std::string builtin;
    std::size_t n = 0;
    BoundsReport report;
};

std::vector<SrgTableRow> srg_bounds_table(SearchBudget budget = {});

}  // namespace gnb

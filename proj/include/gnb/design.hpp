#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace gnb {

using PointSet = std::uint32_t;  // bit i set <=> point i in the set

/// Block design on points 0..v-1 (v <= 32), blocks as bitmasks.
struct Design {
    std::size_t v = 0;
    std::size_t t = 0;
    std::size_t k = 0;
    std::vector<PointSet> blocks;
};

std::vector<std::size_t> points_of(PointSet s);
PointSet point_set(const std::vector<std::size_t>& points);

// Sorts blocks by their ascending point lists so labelings are reproducible.
void canonicalize(Design& d);

/// All 4096 codewords of the extended binary Golay code, as 24-bit masks.
std::vector<PointSet> golay_codewords();

/// The 759 weight-8 codewords. Throws ConstructionFault if the generator
/// does not produce the weight distribution 1, 759, 2576, 759, 1.
std::vector<PointSet> build_golay_octads();

Design build_s_5_8_24();

/// Blocks through p with p removed; points above p shift down by one.
Design derive(const Design& d, std::size_t p);

/// S(3,6,22): the Golay octads derived at points 23 and then 22.
Design build_s_3_6_22();

struct SteinerReport {
    bool ok = false;
    std::size_t subsets_checked = 0;
    std::optional<PointSet> violating_subset;  // t-subset not covered exactly once
    std::size_t violating_count = 0;
    std::optional<std::size_t> bad_block;      // block of the wrong size
};

/// Checks that every t-subset lies in exactly one block.
SteinerReport verify_steiner(const Design& d);

struct IntersectionProfile {
    std::map<std::size_t, std::size_t> histogram;  // |B ∩ C| -> number of unordered pairs
    std::vector<std::size_t> disjoint_per_block;
    std::vector<std::size_t> meeting_per_block;
    bool no_three_pairwise_disjoint = true;
};

IntersectionProfile intersection_profile(const Design& d);

}  // namespace gnb

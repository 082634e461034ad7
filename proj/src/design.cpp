#include "gnb/design.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "gnb/errors.hpp"

namespace gnb {

namespace {

// Right half of the generator [I_12 | B] of the extended Golay code. Row 0 is
// (0, 1^11); row i >= 1 is 1 followed by the 11-cycle shift of the indicator
// of {0} ∪ {quadratic non-residues mod 11}. Bit j is coordinate 12 + j.
constexpr std::array<const char*, 12> kGolayRight = {
    "011111111111", "110100011101", "111010001110", "101101000111",
    "110110100011", "111011010001", "111101101000", "101110110100",
    "100111011010", "100011101101", "110001110110", "101000111011",
};

std::array<PointSet, 12> golay_generator() {
    std::array<PointSet, 12> rows{};
    for (std::size_t i = 0; i < 12; ++i) {
        PointSet r = PointSet{1} << i;
        for (std::size_t j = 0; j < 12; ++j)
            if (kGolayRight[i][j] == '1') r |= PointSet{1} << (12 + j);
        rows[i] = r;
    }
    return rows;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Colex rank of a t-subset.
std::uint64_t subset_rank(PointSet s) {
    std::uint64_t r = 0;
    std::size_t i = 1;
    for (auto p : points_of(s)) r += binomial(p, i++);
    return r;
}

PointSet subset_unrank(std::uint64_t r, std::size_t t, std::size_t v) {
    PointSet s = 0;
    for (std::size_t i = t; i >= 1; --i) {
        std::size_t p = i - 1;
        while (p + 1 < v && binomial(p + 1, i) <= r) ++p;
        r -= binomial(p, i);
        s |= PointSet{1} << p;
    }
    return s;
}

template <typename F>
void for_each_subset(const std::vector<std::size_t>& pts, std::size_t t, F&& f) {
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    if (t > pts.size()) return;
    while (true) {
        PointSet s = 0;
        for (auto i : idx) s |= PointSet{1} << pts[i];
        f(s);
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == pts.size() - t + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<std::size_t> points_of(PointSet s) {
    std::vector<std::size_t> out;
    while (s) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

PointSet point_set(const std::vector<std::size_t>& points) {
    PointSet s = 0;
    for (auto p : points) {
        if (p >= 32) throw InvalidInput("point index exceeds 31");
        s |= PointSet{1} << p;
    }
    return s;
}

void canonicalize(Design& d) {
    std::sort(d.blocks.begin(), d.blocks.end(),
              [](PointSet a, PointSet b) { return points_of(a) < points_of(b); });
}

std::vector<PointSet> golay_codewords() {
    auto gen = golay_generator();
    std::vector<PointSet> words(4096);
    for (std::uint32_t m = 0; m < 4096; ++m) {
        PointSet w = 0;
        for (std::size_t i = 0; i < 12; ++i)
            if ((m >> i) & 1U) w ^= gen[i];
        words[m] = w;
    }
    return words;
}

std::vector<PointSet> build_golay_octads() {
    std::array<std::size_t, 25> weights{};
    std::vector<PointSet> octads;
    for (auto w : golay_codewords()) {
        auto wt = static_cast<std::size_t>(std::popcount(w));
        ++weights[wt];
        if (wt == 8) octads.push_back(w);
    }
    std::array<std::size_t, 25> expected{};
    expected[0] = 1;
    expected[8] = 759;
    expected[12] = 2576;
    expected[16] = 759;
    expected[24] = 1;
    if (weights != expected) throw ConstructionFault("Golay generator has the wrong weight distribution");
    return octads;
}

Design build_s_5_8_24() {
    Design d{24, 5, 8, build_golay_octads()};
    canonicalize(d);
    return d;
}

Design derive(const Design& d, std::size_t p) {
    if (p >= d.v) throw InvalidInput("derivation point out of range");
    if (d.t == 0 || d.k == 0) throw InvalidInput("cannot derive a design of strength 0");
    Design out{d.v - 1, d.t - 1, d.k - 1, {}};
    const PointSet bit = PointSet{1} << p;
    const PointSet low = bit - 1;
    for (auto b : d.blocks) {
        if (!(b & bit)) continue;
        out.blocks.push_back((b & low) | ((b >> 1) & ~low));
    }
    canonicalize(out);
    return out;
}

Design build_s_3_6_22() {
    auto s24 = build_s_5_8_24();
    auto s22 = derive(derive(s24, 23), 22);
    if (!verify_steiner(s22).ok) throw ConstructionFault("derived design is not S(3,6,22)");
    return s22;
}

SteinerReport verify_steiner(const Design& d) {
    SteinerReport rep;
    if (d.v > 32 || d.t > d.k || d.k > d.v) return rep;
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
        if (static_cast<std::size_t>(std::popcount(d.blocks[i])) != d.k || (d.v < 32 && (d.blocks[i] >> d.v))) {
            rep.bad_block = i;
            return rep;
        }
    const auto total = binomial(d.v, d.t);
    std::vector<std::uint32_t> count(total, 0);
    for (auto b : d.blocks) for_each_subset(points_of(b), d.t, [&](PointSet s) { ++count[subset_rank(s)]; });
    rep.subsets_checked = total;
    for (std::uint64_t r = 0; r < total; ++r)
        if (count[r] != 1) {
            rep.violating_subset = subset_unrank(r, d.t, d.v);
            rep.violating_count = count[r];
            return rep;
        }
    rep.ok = true;
    return rep;
}

IntersectionProfile intersection_profile(const Design& d) {
    IntersectionProfile prof;
    const auto nb = d.blocks.size();
    prof.disjoint_per_block.assign(nb, 0);
    prof.meeting_per_block.assign(nb, 0);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j) {
            auto m = static_cast<std::size_t>(std::popcount(d.blocks[i] & d.blocks[j]));
            ++prof.histogram[m];
            auto& slot = m == 0 ? prof.disjoint_per_block : prof.meeting_per_block;
            ++slot[i];
            ++slot[j];
        }
    for (std::size_t i = 0; i < nb && prof.no_three_pairwise_disjoint; ++i)
        for (std::size_t j = i + 1; j < nb && prof.no_three_pairwise_disjoint; ++j) {
            if (d.blocks[i] & d.blocks[j]) continue;
            for (std::size_t k = j + 1; k < nb; ++k)
                if (!(d.blocks[k] & (d.blocks[i] | d.blocks[j]))) {
                    prof.no_three_pairwise_disjoint = false;
                    break;
                }
        }
    return prof;
}

}  // namespace gnb

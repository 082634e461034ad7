#pragma once

#include <cstddef>
#include <vector>

namespace gnb {

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

struct BipartiteMatching {
    std::size_t size = 0;
    std::vector<std::size_t> left_mate;   // right vertex or kUnmatched
    std::vector<std::size_t> right_mate;  // left vertex or kUnmatched
};

/// Hopcroft-Karp maximum matching. adj[u] lists the right neighbours of left vertex u.
BipartiteMatching hopcroft_karp(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_count);

}  // namespace gnb

#pragma once

#include <cstddef>
#include <vector>

#include "gnb/rational.hpp"

namespace gnb {

/// Solution of  max c·y  s.t.  A y <= b,  y >= 0  with b >= 0.
struct PackingSolution {
    Rational value;
    std::vector<Rational> primal;  // y, one per column
    std::vector<Rational> dual;    // one per row; optimal for  min b·x  s.t.  Aᵀx >= c, x >= 0
    std::size_t pivots = 0;
};

/// Exact tableau simplex with Bland's rule. The slack basis is feasible
/// because b >= 0, so no phase one is needed. Assumes the LP is bounded.
PackingSolution solve_packing_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                                 const std::vector<Rational>& c);

}  // namespace gnb

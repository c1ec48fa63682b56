#ifndef FOLCUP_TESTS_ORACLES_HPP
#define FOLCUP_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>

#include "folcup/bounds.hpp"

namespace folcup::testing {

/* Independent cup-length oracle: exhaustive enumeration of left-associated
 * products of basis elements. A nonzero product has nonzero prefixes, so the
 * depth-first walk over nonzero accumulations is complete; multilinearity
 * reduces arbitrary factors to basis factors. */
inline int brute_force_cup_length(const GradedAlgebraSlice& slice)
{
    int best = 0;
    std::function<void(const SliceElement&, int)> dfs = [&](const SliceElement& acc, int len) {
        best = std::max(best, len);
        for (const auto& e : slice.basis) {
            SliceElement prod = slice.mult(acc, e);
            if (!prod.is_zero())
                dfs(prod, len + 1);
        }
    };
    for (const auto& e : slice.basis)
        dfs(e, 1);
    return best;
}

}  // namespace folcup::testing

#endif

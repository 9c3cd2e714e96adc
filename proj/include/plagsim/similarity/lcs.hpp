#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "plagsim/similarity/symbols.hpp"

namespace plagsim::similarity {

/// Length of the longest common subsequence, O(|a|·|b|) time, O(|b|) space.
inline std::size_t lcs_length(SymbolSpan a, SymbolSpan b) {
    std::vector<std::size_t> prev(b.size() + 1, 0);
    std::vector<std::size_t> curr(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
        }
        std::swap(prev, curr);
    }
    return prev[b.size()];
}

}  // namespace plagsim::similarity

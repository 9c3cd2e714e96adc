#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "plagsim/similarity/symbols.hpp"

namespace plagsim::similarity {

struct NgramOverlap {
    std::size_t shared = 0;     // multiset intersection size
    std::size_t windows_a = 0;  // |a| - n + 1, or 0
    std::size_t windows_b = 0;
};

inline std::size_t window_count(std::size_t length, std::size_t n) {
    return length >= n ? length - n + 1 : 0;
}

/// Counts contiguous n-symbol windows shared by both sequences, with multiplicity.
inline NgramOverlap count_shared_ngrams(SymbolSpan a, SymbolSpan b, std::size_t n) {
    NgramOverlap result{0, window_count(a.size(), n), window_count(b.size(), n)};
    if (n == 0 || result.windows_a == 0 || result.windows_b == 0) return result;

    std::map<std::vector<Symbol>, std::size_t> counts;
    for (std::size_t i = 0; i < result.windows_b; ++i) {
        ++counts[std::vector<Symbol>(b.begin() + i, b.begin() + i + n)];
    }
    for (std::size_t i = 0; i < result.windows_a; ++i) {
        auto it = counts.find(std::vector<Symbol>(a.begin() + i, a.begin() + i + n));
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++result.shared;
        }
    }
    return result;
}

}  // namespace plagsim::similarity

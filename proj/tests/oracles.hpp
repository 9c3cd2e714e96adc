#pragma once

// Independent brute-force reference implementations used only by tests.
// None of these share code with the library algorithms they check.

#include <cstddef>
#include <vector>

namespace oracle {

using Seq = std::vector<unsigned>;

inline bool is_subsequence(const Seq& sub, const Seq& of) {
    std::size_t j = 0;
    for (unsigned x : of) {
        if (j < sub.size() && sub[j] == x) ++j;
    }
    return j == sub.size();
}

/// Longest common subsequence by enumerating every subsequence of a.
inline std::size_t lcs_exhaustive(const Seq& a, const Seq& b) {
    std::size_t best = 0;
    const std::size_t subsets = std::size_t{1} << a.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        Seq sub;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (mask & (std::size_t{1} << i)) sub.push_back(a[i]);
        }
        if (sub.size() > best && is_subsequence(sub, b)) best = sub.size();
    }
    return best;
}

/// Multiset intersection of n-windows by pairing each window of a with an
/// unused equal window of b.
inline std::size_t shared_ngrams_bruteforce(const Seq& a, const Seq& b, std::size_t n) {
    if (a.size() < n || b.size() < n) return 0;
    std::vector<bool> used(b.size() - n + 1, false);
    std::size_t shared = 0;
    for (std::size_t i = 0; i + n <= a.size(); ++i) {
        for (std::size_t j = 0; j + n <= b.size(); ++j) {
            if (used[j]) continue;
            bool eq = true;
            for (std::size_t k = 0; k < n && eq; ++k) eq = a[i + k] == b[j + k];
            if (eq) {
                used[j] = true;
                ++shared;
                break;
            }
        }
    }
    return shared;
}

struct NaiveTile {
    std::size_t a_pos, b_pos, length;
};

/// Greedy String Tiling exactly as in Wise's original pseudocode: a full
/// O(|a|·|b|·L) scan per round, no hashing.
inline std::vector<NaiveTile> gst_naive(const Seq& a, const Seq& b, std::size_t min_match) {
    std::vector<bool> ma(a.size(), false), mb(b.size(), false);
    std::vector<NaiveTile> tiles;
    std::size_t maxmatch;
    do {
        maxmatch = min_match;
        std::vector<NaiveTile> matches;
        for (std::size_t p = 0; p < a.size(); ++p) {
            if (ma[p]) continue;
            for (std::size_t t = 0; t < b.size(); ++t) {
                if (mb[t]) continue;
                std::size_t j = 0;
                while (p + j < a.size() && t + j < b.size() && a[p + j] == b[t + j] &&
                       !ma[p + j] && !mb[t + j]) {
                    ++j;
                }
                if (j == maxmatch) {
                    matches.push_back({p, t, j});
                } else if (j > maxmatch) {
                    matches.assign(1, {p, t, j});
                    maxmatch = j;
                }
            }
        }
        for (const auto& m : matches) {
            bool occluded = false;
            for (std::size_t k = 0; k < m.length; ++k) occluded |= ma[m.a_pos + k] || mb[m.b_pos + k];
            if (occluded) continue;
            for (std::size_t k = 0; k < m.length; ++k) ma[m.a_pos + k] = mb[m.b_pos + k] = true;
            tiles.push_back(m);
        }
    } while (maxmatch > min_match);
    return tiles;
}

inline std::size_t coverage(const std::vector<NaiveTile>& tiles) {
    std::size_t total = 0;
    for (const auto& t : tiles) total += t.length;
    return total;
}

}  // namespace oracle

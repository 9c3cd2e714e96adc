#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "plagsim/similarity/symbols.hpp"

namespace plagsim::similarity {

/// A maximal common substring marked during tiling.
struct Tile {
    std::size_t a_pos = 0;
    std::size_t b_pos = 0;
    std::size_t length = 0;

    friend bool operator==(const Tile&, const Tile&) = default;
};

namespace detail {

// Polynomial window hashes modulo 2^64, Karp-Rabin style. Collisions are
// harmless: every hash hit is confirmed by direct comparison.
class WindowHasher {
public:
    explicit WindowHasher(SymbolSpan s) : prefix_(s.size() + 1, 0), power_(s.size() + 1, 1) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            prefix_[i + 1] = prefix_[i] * kBase + (static_cast<std::uint64_t>(s[i]) + 1);
            power_[i + 1] = power_[i] * kBase;
        }
    }

    std::uint64_t window(std::size_t pos, std::size_t len) const {
        return prefix_[pos + len] - prefix_[pos] * power_[len];
    }

private:
    static constexpr std::uint64_t kBase = 0x9E3779B97F4A7C15ull;
    std::vector<std::uint64_t> prefix_;
    std::vector<std::uint64_t> power_;
};

// run[i] = number of consecutive unmarked positions starting at i.
inline std::vector<std::size_t> unmarked_runs(const std::vector<bool>& marked) {
    std::vector<std::size_t> run(marked.size() + 1, 0);
    for (std::size_t i = marked.size(); i-- > 0;) run[i] = marked[i] ? 0 : run[i + 1] + 1;
    return run;
}

class Tiler {
public:
    Tiler(SymbolSpan a, SymbolSpan b)
        : a_(a), b_(b), hash_a_(a), hash_b_(b), marked_a_(a.size(), false),
          marked_b_(b.size(), false) {}

    std::vector<Tile> run(std::size_t min_match) {
        std::vector<Tile> tiles;
        while (true) {
            run_a_ = unmarked_runs(marked_a_);
            run_b_ = unmarked_runs(marked_b_);
            const std::size_t length = longest_common(min_match);
            if (length < min_match) break;

            for (const Tile& m : matches_of_length(length)) {
                if (occluded(m)) continue;
                std::fill_n(marked_a_.begin() + static_cast<std::ptrdiff_t>(m.a_pos), m.length, true);
                std::fill_n(marked_b_.begin() + static_cast<std::ptrdiff_t>(m.b_pos), m.length, true);
                tiles.push_back(m);
            }
        }
        return tiles;
    }

private:
    using Buckets = std::unordered_map<std::uint64_t, std::vector<std::size_t>>;

    Buckets index_b(std::size_t len) const {
        Buckets buckets;
        for (std::size_t t = 0; t + len <= b_.size(); ++t) {
            if (run_b_[t] >= len) buckets[hash_b_.window(t, len)].push_back(t);
        }
        return buckets;
    }

    bool same(std::size_t p, std::size_t t, std::size_t len) const {
        return std::equal(a_.begin() + p, a_.begin() + p + len, b_.begin() + t);
    }

    bool any_common(std::size_t len) const {
        const Buckets buckets = index_b(len);
        for (std::size_t p = 0; p + len <= a_.size(); ++p) {
            if (run_a_[p] < len) continue;
            auto it = buckets.find(hash_a_.window(p, len));
            if (it == buckets.end()) continue;
            for (std::size_t t : it->second) {
                if (same(p, t, len)) return true;
            }
        }
        return false;
    }

    // Longest unmarked common substring; 0 when none reaches min_match.
    // Existence of a common window is monotone in its length, so binary search.
    std::size_t longest_common(std::size_t min_match) const {
        const std::size_t cap = std::min(*std::max_element(run_a_.begin(), run_a_.end()),
                                         *std::max_element(run_b_.begin(), run_b_.end()));
        if (min_match == 0 || cap < min_match || !any_common(min_match)) return 0;
        std::size_t lo = min_match;
        std::size_t hi = cap;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo + 1) / 2;
            if (any_common(mid)) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        return lo;
    }

    // All unmarked equal window pairs of the given length, ordered by
    // position in a, then position in b.
    std::vector<Tile> matches_of_length(std::size_t len) const {
        std::vector<Tile> out;
        const Buckets buckets = index_b(len);
        for (std::size_t p = 0; p + len <= a_.size(); ++p) {
            if (run_a_[p] < len) continue;
            auto it = buckets.find(hash_a_.window(p, len));
            if (it == buckets.end()) continue;
            for (std::size_t t : it->second) {
                if (same(p, t, len)) out.push_back({p, t, len});
            }
        }
        return out;
    }

    bool occluded(const Tile& m) const {
        for (std::size_t k = 0; k < m.length; ++k) {
            if (marked_a_[m.a_pos + k] || marked_b_[m.b_pos + k]) return true;
        }
        return false;
    }

    SymbolSpan a_;
    SymbolSpan b_;
    WindowHasher hash_a_;
    WindowHasher hash_b_;
    std::vector<bool> marked_a_;
    std::vector<bool> marked_b_;
    std::vector<std::size_t> run_a_;
    std::vector<std::size_t> run_b_;
};

}  // namespace detail

/// Greedy String Tiling with Karp-Rabin window matching.
///
/// Each round finds the longest common substring length L over unmarked
/// positions; every non-occluded match of length L becomes a tile, in order
/// of start in a then start in b. Stops once L falls below min_match.
inline std::vector<Tile> greedy_string_tiling(SymbolSpan a, SymbolSpan b, std::size_t min_match) {
    if (min_match == 0) min_match = 1;
    return detail::Tiler(a, b).run(min_match);
}

inline std::size_t tiled_length(const std::vector<Tile>& tiles) {
    std::size_t total = 0;
    for (const auto& t : tiles) total += t.length;
    return total;
}

}  // namespace plagsim::similarity

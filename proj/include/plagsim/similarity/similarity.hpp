#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "plagsim/errors.hpp"
#include "plagsim/frontend/token.hpp"
#include "plagsim/similarity/gst.hpp"
#include "plagsim/similarity/lcs.hpp"
#include "plagsim/similarity/ngram.hpp"
#include "plagsim/similarity/symbols.hpp"

namespace plagsim::similarity {

using frontend::TokenStream;

/// How a raw count becomes a percentage.
///
/// SourceNormalized divides by the size of the first (source) stream, which
/// makes every score directional. Symmetric divides by the mean size of both.
enum class Normalization { SourceNormalized, Symmetric };

struct SimilarityConfig {
    std::vector<std::size_t> ngram_orders{1, 2, 3};
    std::vector<std::size_t> gst_min_match_lengths{1, 2, 3};
    Normalization normalization = Normalization::SourceNormalized;

    void validate() const {
        if (ngram_orders.size() != 3 || gst_min_match_lengths.size() != 3) {
            throw ConfigError("similarity config needs exactly three n-gram orders and three GST lengths");
        }
        for (auto n : ngram_orders) {
            if (n < 1) throw ConfigError("n-gram order must be >= 1");
        }
        for (auto m : gst_min_match_lengths) {
            if (m < 1) throw ConfigError("GST minimum match length must be >= 1");
        }
    }
};

namespace detail {

inline double percent(std::size_t count, std::size_t size_a, std::size_t size_b,
                      Normalization norm) {
    const double denom = norm == Normalization::SourceNormalized
                             ? static_cast<double>(size_a)
                             : (static_cast<double>(size_a) + static_cast<double>(size_b)) / 2.0;
    return 100.0 * static_cast<double>(count) / denom;
}

inline void require_source(std::size_t size_a, const char* measure) {
    if (size_a == 0) throw EmptyStream(std::string(measure) + ": source stream is empty");
}

}  // namespace detail

// Symbol-level measures, reused by the stream-level wrappers and by tests.

inline double ngram_overlap(SymbolSpan a, SymbolSpan b, std::size_t n,
                            Normalization norm = Normalization::SourceNormalized) {
    if (n < 1) throw ConfigError("n-gram order must be >= 1");
    const NgramOverlap o = count_shared_ngrams(a, b, n);
    if (o.windows_a == 0 && o.windows_b == 0) {
        throw EmptyStream("n-gram overlap undefined: both streams shorter than n=" + std::to_string(n));
    }
    if (norm == Normalization::SourceNormalized && o.windows_a == 0) return 0.0;
    return detail::percent(o.shared, o.windows_a, o.windows_b, norm);
}

inline double lcs_similarity(SymbolSpan a, SymbolSpan b,
                             Normalization norm = Normalization::SourceNormalized) {
    detail::require_source(a.size(), "LCS");
    return detail::percent(lcs_length(a, b), a.size(), b.size(), norm);
}

inline double gst_similarity(SymbolSpan a, SymbolSpan b, std::size_t min_match,
                             Normalization norm = Normalization::SourceNormalized) {
    if (min_match < 1) throw ConfigError("GST minimum match length must be >= 1");
    detail::require_source(a.size(), "GST");
    const auto tiles = greedy_string_tiling(a, b, min_match);
    return detail::percent(tiled_length(tiles), a.size(), b.size(), norm);
}

/// Percentage of a's n-gram windows also present in b (multiset intersection).
/// 0 when a has no window but b does; EmptyStream when neither has one.
inline double ngram_overlap(const TokenStream& a, const TokenStream& b, std::size_t n,
                            Normalization norm = Normalization::SourceNormalized) {
    const auto [sa, sb] = intern(a, b);
    return ngram_overlap(sa, sb, n, norm);
}

/// 100 · LCS length / |a|.
inline double lcs_similarity(const TokenStream& a, const TokenStream& b,
                             Normalization norm = Normalization::SourceNormalized) {
    const auto [sa, sb] = intern(a, b);
    return lcs_similarity(sa, sb, norm);
}

/// 100 · (atoms of a covered by tiles) / |a|.
inline double gst_similarity(const TokenStream& a, const TokenStream& b, std::size_t min_match,
                             Normalization norm = Normalization::SourceNormalized) {
    const auto [sa, sb] = intern(a, b);
    return gst_similarity(sa, sb, min_match, norm);
}

inline constexpr std::size_t kFeatureCount = 7;
inline constexpr std::array<const char*, kFeatureCount> kFeatureNames = {
    "LCS", "N1", "N2", "N3", "GST1", "GST2", "GST3",
};

struct SimilarityVector {
    double lcs = 0, n1 = 0, n2 = 0, n3 = 0, gst1 = 0, gst2 = 0, gst3 = 0;
    double avg = 0;
    double stdv = 0;  // sample standard deviation of the seven scores

    std::array<double, kFeatureCount> scores() const { return {lcs, n1, n2, n3, gst1, gst2, gst3}; }

    static SimilarityVector from_scores(const std::array<double, kFeatureCount>& s) {
        SimilarityVector v{s[0], s[1], s[2], s[3], s[4], s[5], s[6]};
        double sum = 0;
        for (double x : s) sum += x;
        v.avg = sum / static_cast<double>(kFeatureCount);
        double sq = 0;
        for (double x : s) sq += (x - v.avg) * (x - v.avg);
        v.stdv = std::sqrt(sq / static_cast<double>(kFeatureCount - 1));
        return v;
    }
};

/// All seven scores for the ordered pair (a is the source solution).
inline SimilarityVector similarity_vector(const TokenStream& a, const TokenStream& b,
                                          const SimilarityConfig& cfg = {}) {
    cfg.validate();
    if (a.empty() || b.empty()) throw EmptyStream("similarity vector needs two non-empty streams");
    const auto [sa, sb] = intern(a, b);
    const auto norm = cfg.normalization;
    return SimilarityVector::from_scores({
        lcs_similarity(sa, sb, norm),
        ngram_overlap(sa, sb, cfg.ngram_orders[0], norm),
        ngram_overlap(sa, sb, cfg.ngram_orders[1], norm),
        ngram_overlap(sa, sb, cfg.ngram_orders[2], norm),
        gst_similarity(sa, sb, cfg.gst_min_match_lengths[0], norm),
        gst_similarity(sa, sb, cfg.gst_min_match_lengths[1], norm),
        gst_similarity(sa, sb, cfg.gst_min_match_lengths[2], norm),
    });
}

}  // namespace plagsim::similarity

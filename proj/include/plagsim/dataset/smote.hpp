#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "plagsim/dataset/dataset.hpp"
#include "plagsim/errors.hpp"
#include "plagsim/util/random.hpp"

namespace plagsim::dataset {

struct SmoteConfig {
    double percent = 235;
    std::size_t k = 5;
    std::uint64_t seed = 42;

    void validate() const {
        if (!std::isfinite(percent) || percent < 0) throw ConfigError("SMOTE percent must be a non-negative number");
        if (k < 1) throw ConfigError("SMOTE k must be at least 1");
    }
};

/// Parents of one synthetic row: row = base + u * (neighbor - base).
struct SyntheticOrigin {
    std::size_t base = 0;      // index into the input dataset
    std::size_t neighbor = 0;  // index into the input dataset
    double u = 0;
};

struct SmoteResult {
    Dataset dataset;
    std::vector<SyntheticOrigin> origins;  // one per appended row, in order
};

/// The class with fewer instances; P on a tie.
inline Label minority_label(const Dataset& ds) {
    return ds.count(Label::P) <= ds.count(Label::NP) ? Label::P : Label::NP;
}

inline std::size_t synthetic_count(std::size_t minority, double percent) {
    return static_cast<std::size_t>(std::llround(percent / 100.0 * static_cast<double>(minority)));
}

namespace detail {

inline double squared_distance(const Features& a, const Features& b) {
    double d = 0;
    for (std::size_t f = 0; f < a.size(); ++f) d += (a[f] - b[f]) * (a[f] - b[f]);
    return d;
}

/// For each minority row, its k nearest other minority rows (ties by index).
inline std::vector<std::vector<std::size_t>> nearest_neighbors(const Dataset& ds,
                                                                const std::vector<std::size_t>& minority,
                                                                std::size_t k) {
    std::vector<std::vector<std::size_t>> out(minority.size());
    std::vector<std::pair<double, std::size_t>> dist;
    for (std::size_t i = 0; i < minority.size(); ++i) {
        dist.clear();
        for (std::size_t j = 0; j < minority.size(); ++j) {
            if (j == i) continue;
            dist.emplace_back(squared_distance(ds.instances[minority[i]].features, ds.instances[minority[j]].features),
                              minority[j]);
        }
        std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
        for (std::size_t n = 0; n < k; ++n) out[i].push_back(dist[n].second);
    }
    return out;
}

}  // namespace detail

/// Appends round(percent/100 * minority) synthetic minority rows. Every
/// minority row donates floor(count/minority) times in index order; the
/// remainder comes from donors drawn without replacement. Each synthetic row
/// interpolates between its donor and one of the donor's k nearest minority
/// neighbours. Existing rows are left untouched.
inline SmoteResult smote_with_lineage(const Dataset& ds, const SmoteConfig& cfg) {
    cfg.validate();
    SmoteResult result{ds, {}};

    const Label label = minority_label(ds);
    std::vector<std::size_t> minority;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (ds.instances[i].label == label) minority.push_back(i);
    }
    const std::size_t count = synthetic_count(minority.size(), cfg.percent);
    if (count == 0) return result;
    if (minority.size() < 2 || cfg.k >= minority.size()) {
        throw TooFewMinority("SMOTE needs at least k+1 = " + std::to_string(cfg.k + 1) + " minority instances, found " +
                             std::to_string(minority.size()));
    }

    const auto neighbors = detail::nearest_neighbors(ds, minority, cfg.k);
    util::Rng rng(cfg.seed);

    std::vector<std::size_t> donors;
    for (std::size_t pass = 0; pass < count / minority.size(); ++pass) {
        for (std::size_t i = 0; i < minority.size(); ++i) donors.push_back(i);
    }
    std::vector<std::size_t> pool(minority.size());
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t r = 0; r < count % minority.size(); ++r) {
        const std::size_t pick = r + util::uniform_index(rng, pool.size() - r);
        std::swap(pool[r], pool[pick]);
        donors.push_back(pool[r]);
    }

    for (std::size_t donor : donors) {
        const std::size_t base = minority[donor];
        const std::size_t other = neighbors[donor][util::uniform_index(rng, cfg.k)];
        const double u = util::uniform01(rng);
        const Features& x = ds.instances[base].features;
        const Features& y = ds.instances[other].features;
        LabeledInstance row;
        row.label = label;
        row.provenance = std::string(kSyntheticProvenance);
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            row.features[f] = std::clamp(x[f] + u * (y[f] - x[f]), std::min(x[f], y[f]), std::max(x[f], y[f]));
        }
        result.dataset.instances.push_back(std::move(row));
        result.origins.push_back({base, other, u});
    }
    return result;
}

inline Dataset smote(const Dataset& ds, const SmoteConfig& cfg) {
    return smote_with_lineage(ds, cfg).dataset;
}

}  // namespace plagsim::dataset

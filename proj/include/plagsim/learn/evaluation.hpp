#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <string>
#include <vector>

#include "plagsim/dataset/dataset.hpp"
#include "plagsim/errors.hpp"
#include "plagsim/learn/metrics.hpp"
#include "plagsim/learn/model.hpp"
#include "plagsim/util/parallel.hpp"
#include "plagsim/util/random.hpp"

namespace plagsim::learn {

/// Fold index per instance. Each class is shuffled with the seed and dealt
/// round-robin, NP first, P continuing from the next fold.
inline std::vector<std::size_t> stratified_folds(const std::vector<Label>& labels, std::size_t folds,
                                                 std::uint64_t seed) {
    if (folds < 2) throw StratificationError("need at least 2 folds");
    std::array<std::vector<std::size_t>, 2> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[static_cast<std::size_t>(labels[i])].push_back(i);
    for (std::size_t c = 0; c < 2; ++c) {
        if (by_class[c].size() < folds) {
            throw StratificationError("class " + std::string(to_string(static_cast<Label>(c))) + " has " +
                                      std::to_string(by_class[c].size()) + " instances, fewer than " +
                                      std::to_string(folds) + " folds");
        }
    }
    util::Rng rng(seed);
    std::vector<std::size_t> fold_of(labels.size());
    std::size_t next = 0;
    for (auto& members : by_class) {
        util::shuffle(members, rng);
        for (std::size_t i : members) {
            fold_of[i] = next;
            next = (next + 1) % folds;
        }
    }
    return fold_of;
}

/// Stratified k-fold cross-validation; every instance is predicted once by a
/// model trained on the other folds. Fold models are seeded from spec.seed and
/// the fold index; folds run on up to `jobs` threads.
inline EvaluationReport cross_validate(const ClassifierSpec& spec, const dataset::Dataset& ds, std::size_t folds = 10,
                                       std::uint64_t seed = 42, unsigned jobs = 1) {
    spec.validate();
    const TrainingSet all = TrainingSet::from(ds);
    const auto fold_of = stratified_folds(all.y, folds, seed);

    EvaluationReport report;
    report.classifier = std::string(to_string(spec.kind));
    report.folds = folds;
    report.seed = seed;
    report.per_fold.resize(folds);

    util::parallel_for(folds, jobs, [&](std::size_t k) {
        std::vector<std::size_t> train_rows, test_rows;
        for (std::size_t i = 0; i < all.size(); ++i) (fold_of[i] == k ? test_rows : train_rows).push_back(i);
        ClassifierSpec fold_spec = spec;
        fold_spec.seed = util::derive_seed(spec.seed, k);
        fold_spec.jobs = 1;
        const Model model = train(fold_spec, all.subset(train_rows));
        for (std::size_t i : test_rows) report.per_fold[k].add(all.y[i], model.predict(all.x[i]));
    });
    for (const auto& c : report.per_fold) report.pooled += c;
    report.metrics = summarize(report.pooled);
    return report;
}

// ---------------------------------------------------------------- CFS

/// Pearson correlation; 0 when either side is constant.
inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const double n = static_cast<double>(a.size());
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    if (saa <= 0 || sbb <= 0) return 0.0;
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

/// Absolute feature-class and feature-feature correlations of a training set.
struct CorrelationTable {
    std::array<double, kFeatureCount> class_corr{};
    std::array<std::array<double, kFeatureCount>, kFeatureCount> feature_corr{};

    static CorrelationTable of(const TrainingSet& data) {
        std::array<std::vector<double>, kFeatureCount> cols;
        std::vector<double> cls;
        for (std::size_t i = 0; i < data.size(); ++i) {
            for (std::size_t f = 0; f < kFeatureCount; ++f) cols[f].push_back(data.x[i][f]);
            cls.push_back(data.y[i] == Label::P ? 1.0 : 0.0);
        }
        CorrelationTable t;
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            t.class_corr[f] = std::abs(pearson(cols[f], cls));
            for (std::size_t g = 0; g < kFeatureCount; ++g) {
                t.feature_corr[f][g] = f == g ? 1.0 : std::abs(pearson(cols[f], cols[g]));
            }
        }
        return t;
    }

    /// k·mean(r_cf) / sqrt(k + k(k-1)·mean(r_ff)); 0 for the empty subset.
    double merit(const std::vector<std::size_t>& subset) const {
        const std::size_t k = subset.size();
        if (k == 0) return 0.0;
        double rcf = 0;
        for (std::size_t f : subset) rcf += class_corr[f];
        double rff = 0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) rff += feature_corr[subset[i]][subset[j]];
        }
        const double kd = static_cast<double>(k);
        const double mean_cf = rcf / kd;
        const double mean_ff = k > 1 ? rff / (kd * (kd - 1) / 2) : 0.0;
        const double denom = std::sqrt(kd + kd * (kd - 1) * mean_ff);
        return denom > 0 ? kd * mean_cf / denom : 0.0;
    }
};

/// Best-first forward search from the empty set; stops after `max_stale`
/// consecutive expansions that do not improve the best merit. Returns the
/// best subset as sorted feature indices.
inline std::vector<std::size_t> cfs_select(const CorrelationTable& table, std::size_t max_stale = 5) {
    using Subset = std::vector<std::size_t>;
    struct Entry {
        Subset subset;
        double merit;
    };
    std::vector<Entry> open{{{}, 0.0}};
    std::map<Subset, bool> seen{{{}, true}};
    Entry best = open.front();
    std::size_t stale = 0;

    while (!open.empty() && stale < max_stale) {
        auto it = std::max_element(open.begin(), open.end(),
                                   [](const Entry& a, const Entry& b) { return a.merit < b.merit; });
        const Entry current = *it;
        open.erase(it);

        bool improved = false;
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            if (std::find(current.subset.begin(), current.subset.end(), f) != current.subset.end()) continue;
            Subset child = current.subset;
            child.insert(std::upper_bound(child.begin(), child.end(), f), f);
            if (!seen.emplace(child, true).second) continue;
            const double m = table.merit(child);
            open.push_back({child, m});
            if (m > best.merit + 1e-12) {
                best = {child, m};
                improved = true;
            }
        }
        stale = improved ? 0 : stale + 1;
    }
    return best.subset;
}

struct FeatureRank {
    std::vector<std::string> names;
    std::vector<std::size_t> ranks;  // folds in which the feature was selected
    std::size_t folds = 0;
    std::uint64_t seed = 0;

    std::size_t rank_of(std::string_view name) const {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == name) return ranks[i];
        }
        throw ConfigError("unknown feature '" + std::string(name) + "'");
    }

    friend bool operator==(const FeatureRank&, const FeatureRank&) = default;
};

/// CFS on the training portion of each stratified fold; a feature's rank is the
/// number of folds whose selected subset contains it.
inline FeatureRank rank_features(const dataset::Dataset& ds, std::size_t folds = 10, std::uint64_t seed = 42) {
    const TrainingSet all = TrainingSet::from(ds);
    const auto fold_of = stratified_folds(all.y, folds, seed);
    FeatureRank rank;
    rank.names = ds.feature_names;
    rank.ranks.assign(kFeatureCount, 0);
    rank.folds = folds;
    rank.seed = seed;
    for (std::size_t k = 0; k < folds; ++k) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (fold_of[i] != k) rows.push_back(i);
        }
        for (std::size_t f : cfs_select(CorrelationTable::of(all.subset(rows)))) ++rank.ranks[f];
    }
    return rank;
}

}  // namespace plagsim::learn

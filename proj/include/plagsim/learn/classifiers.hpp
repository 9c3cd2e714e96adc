#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "plagsim/dataset/dataset.hpp"
#include "plagsim/errors.hpp"
#include "plagsim/label.hpp"
#include "plagsim/util/parallel.hpp"
#include "plagsim/util/random.hpp"

namespace plagsim::learn {

using dataset::Features;
using dataset::kFeatureCount;

/// Feature rows and labels in matching order.
struct TrainingSet {
    std::vector<Features> x;
    std::vector<Label> y;

    std::size_t size() const { return y.size(); }

    std::array<std::size_t, 2> class_counts() const {
        std::array<std::size_t, 2> c{};
        for (Label l : y) ++c[static_cast<std::size_t>(l)];
        return c;
    }

    static TrainingSet from(const dataset::Dataset& ds) {
        TrainingSet t;
        for (const auto& row : ds.instances) {
            t.x.push_back(row.features);
            t.y.push_back(row.label);
        }
        return t;
    }

    TrainingSet subset(const std::vector<std::size_t>& rows) const {
        TrainingSet t;
        for (std::size_t r : rows) {
            t.x.push_back(x[r]);
            t.y.push_back(y[r]);
        }
        return t;
    }
};

/// Majority label of two counts; NP on a tie.
inline Label majority(const std::array<std::size_t, 2>& counts) {
    return counts[1] > counts[0] ? Label::P : Label::NP;
}

inline Label majority(std::size_t np, std::size_t p) { return majority({np, p}); }

// ---------------------------------------------------------------- OneR

/// One numeric feature cut into intervals, each predicting a class.
class OneR {
public:
    struct Params {
        std::size_t min_bucket = 6;
    };

    static OneR fit(const TrainingSet& data, const Params& params) {
        OneR best;
        std::size_t best_errors = SIZE_MAX;
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            auto [rule, errors] = rule_for(data, f, params.min_bucket);
            if (errors < best_errors) {
                best = std::move(rule);
                best_errors = errors;
            }
        }
        return best;
    }

    Label predict(const Features& x) const {
        const double v = x[feature_];
        std::size_t i = 0;
        while (i < breakpoints_.size() && v > breakpoints_[i]) ++i;
        return labels_[i];
    }

    std::size_t feature() const { return feature_; }
    /// Interval i covers values up to breakpoints()[i]; the last is unbounded.
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<Label>& labels() const { return labels_; }

private:
    static std::pair<OneR, std::size_t> rule_for(const TrainingSet& data, std::size_t f, std::size_t min_bucket) {
        std::vector<std::size_t> order(data.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return data.x[a][f] < data.x[b][f]; });

        struct Bucket {
            std::array<std::size_t, 2> counts{};
            double lo = 0, hi = 0;
        };
        std::vector<Bucket> buckets;
        std::size_t i = 0;
        auto take_group = [&](Bucket& b) {
            const double v = data.x[order[i]][f];
            if (b.counts[0] + b.counts[1] == 0) b.lo = v;
            b.hi = v;
            while (i < order.size() && data.x[order[i]][f] == v) ++b.counts[static_cast<std::size_t>(data.y[order[i++]])];
        };
        auto group_is_pure = [&](Label l) {
            const double v = data.x[order[i]][f];
            for (std::size_t j = i; j < order.size() && data.x[order[j]][f] == v; ++j) {
                if (data.y[order[j]] != l) return false;
            }
            return true;
        };
        while (i < order.size()) {
            Bucket b;
            take_group(b);
            while (i < order.size() && b.counts[static_cast<std::size_t>(majority(b.counts))] < min_bucket) {
                take_group(b);
            }
            while (i < order.size() && group_is_pure(majority(b.counts))) take_group(b);
            buckets.push_back(b);
        }
        // a short trailing bucket joins its predecessor
        if (buckets.size() > 1 &&
            buckets.back().counts[static_cast<std::size_t>(majority(buckets.back().counts))] < min_bucket) {
            Bucket last = buckets.back();
            buckets.pop_back();
            buckets.back().counts[0] += last.counts[0];
            buckets.back().counts[1] += last.counts[1];
            buckets.back().hi = last.hi;
        }

        OneR rule;
        rule.feature_ = f;
        rule.labels_.clear();
        std::size_t errors = 0;
        for (std::size_t b = 0; b < buckets.size(); ++b) {
            const Label l = majority(buckets[b].counts);
            errors += buckets[b].counts[1 - static_cast<std::size_t>(l)];
            if (!rule.labels_.empty() && rule.labels_.back() == l) {
                rule.breakpoints_.pop_back();  // adjacent intervals with the same class merge
            } else {
                rule.labels_.push_back(l);
            }
            if (b + 1 < buckets.size()) rule.breakpoints_.push_back((buckets[b].hi + buckets[b + 1].lo) / 2);
        }
        return {std::move(rule), errors};
    }

    std::size_t feature_ = 0;
    std::vector<double> breakpoints_;
    std::vector<Label> labels_{Label::NP};
};

// ---------------------------------------------------------------- NaiveBayes

/// Gaussian class-conditional likelihood per feature.
class NaiveBayes {
public:
    struct Params {
        double variance_floor = 1e-9;
    };

    static NaiveBayes fit(const TrainingSet& data, const Params& params) {
        NaiveBayes nb;
        const auto counts = data.class_counts();
        for (std::size_t c = 0; c < 2; ++c) {
            nb.present_[c] = counts[c] > 0;
            nb.log_prior_[c] = counts[c] > 0 ? std::log(static_cast<double>(counts[c]) / static_cast<double>(data.size()))
                                             : -INFINITY;
        }
        for (std::size_t i = 0; i < data.size(); ++i) {
            const auto c = static_cast<std::size_t>(data.y[i]);
            for (std::size_t f = 0; f < kFeatureCount; ++f) nb.mean_[c][f] += data.x[i][f];
        }
        for (std::size_t c = 0; c < 2; ++c) {
            for (std::size_t f = 0; f < kFeatureCount; ++f) {
                if (counts[c] > 0) nb.mean_[c][f] /= static_cast<double>(counts[c]);
            }
        }
        for (std::size_t i = 0; i < data.size(); ++i) {
            const auto c = static_cast<std::size_t>(data.y[i]);
            for (std::size_t f = 0; f < kFeatureCount; ++f) {
                const double d = data.x[i][f] - nb.mean_[c][f];
                nb.var_[c][f] += d * d;
            }
        }
        for (std::size_t c = 0; c < 2; ++c) {
            for (std::size_t f = 0; f < kFeatureCount; ++f) {
                const double v = counts[c] > 0 ? nb.var_[c][f] / static_cast<double>(counts[c]) : 0.0;
                nb.var_[c][f] = std::max(v, params.variance_floor);
            }
        }
        return nb;
    }

    /// Unnormalized log posterior per class (-inf for a class absent in training).
    std::array<double, 2> log_scores(const Features& x) const {
        std::array<double, 2> s{};
        for (std::size_t c = 0; c < 2; ++c) {
            s[c] = log_prior_[c];
            if (!present_[c]) continue;
            for (std::size_t f = 0; f < kFeatureCount; ++f) {
                const double d = x[f] - mean_[c][f];
                s[c] += -0.5 * std::log(2 * std::numbers::pi * var_[c][f]) - d * d / (2 * var_[c][f]);
            }
        }
        return s;
    }

    /// Normalized posterior, indexed by Label.
    std::array<double, 2> posterior(const Features& x) const {
        const auto s = log_scores(x);
        const double top = std::max(s[0], s[1]);
        std::array<double, 2> p{std::exp(s[0] - top), std::exp(s[1] - top)};
        const double z = p[0] + p[1];
        return {p[0] / z, p[1] / z};
    }

    Label predict(const Features& x) const {
        const auto s = log_scores(x);
        return s[1] > s[0] ? Label::P : Label::NP;
    }

private:
    std::array<bool, 2> present_{};
    std::array<double, 2> log_prior_{};
    std::array<Features, 2> mean_{};
    std::array<Features, 2> var_{};
};

// ---------------------------------------------------------------- Logistic

/// L2-regularized logistic regression on standardized features, fitted by
/// batch gradient descent.
class Logistic {
public:
    struct Params {
        double l2 = 1e-8;
        double learning_rate = 0.5;
        double tolerance = 1e-6;
        std::size_t max_iterations = 10000;
    };

    /// weights[0..6] and the bias at weights[7].
    using Weights = std::array<double, kFeatureCount + 1>;

    /// Mean log-loss plus (l2/2)·|w|² (bias unpenalized), and its gradient.
    static double loss_and_gradient(const Weights& w, const std::vector<Features>& x, const std::vector<Label>& y,
                                    double l2, Weights* gradient) {
        Weights g{};
        double loss = 0;
        const double n = static_cast<double>(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            double z = w[kFeatureCount];
            for (std::size_t f = 0; f < kFeatureCount; ++f) z += w[f] * x[i][f];
            const double t = y[i] == Label::P ? 1.0 : 0.0;
            // log(1 + e^z) - t·z, computed without overflow
            loss += (z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z))) - t * z;
            const double r = sigmoid(z) - t;
            for (std::size_t f = 0; f < kFeatureCount; ++f) g[f] += r * x[i][f];
            g[kFeatureCount] += r;
        }
        loss /= n;
        for (auto& v : g) v /= n;
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            loss += 0.5 * l2 * w[f] * w[f];
            g[f] += l2 * w[f];
        }
        if (gradient) *gradient = g;
        return loss;
    }

    static Logistic fit(const TrainingSet& data, const Params& params) {
        Logistic m;
        const double n = static_cast<double>(data.size());
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            double mean = 0, sq = 0;
            for (const auto& x : data.x) mean += x[f];
            mean /= n;
            for (const auto& x : data.x) sq += (x[f] - mean) * (x[f] - mean);
            const double sd = std::sqrt(sq / n);
            m.mean_[f] = mean;
            m.scale_[f] = sd > 0 ? sd : 1.0;
        }
        std::vector<Features> z(data.x.size());
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = m.standardize(data.x[i]);

        Weights g{};
        for (m.iterations_ = 0; m.iterations_ < params.max_iterations; ++m.iterations_) {
            loss_and_gradient(m.w_, z, data.y, params.l2, &g);
            double norm = 0;
            for (double v : g) norm = std::max(norm, std::abs(v));
            if (norm < params.tolerance) break;
            for (std::size_t k = 0; k < g.size(); ++k) m.w_[k] -= params.learning_rate * g[k];
        }
        return m;
    }

    double probability(const Features& x) const {
        const Features s = standardize(x);
        double z = w_[kFeatureCount];
        for (std::size_t f = 0; f < kFeatureCount; ++f) z += w_[f] * s[f];
        return sigmoid(z);
    }

    Label predict(const Features& x) const { return probability(x) > 0.5 ? Label::P : Label::NP; }

    const Weights& weights() const { return w_; }
    std::size_t iterations() const { return iterations_; }

    static double sigmoid(double z) {
        return z >= 0 ? 1 / (1 + std::exp(-z)) : std::exp(z) / (1 + std::exp(z));
    }

private:
    Features standardize(const Features& x) const {
        Features s;
        for (std::size_t f = 0; f < kFeatureCount; ++f) s[f] = (x[f] - mean_[f]) / scale_[f];
        return s;
    }

    Features mean_{};
    Features scale_{};
    Weights w_{};
    std::size_t iterations_ = 0;
};

// ---------------------------------------------------------------- DecisionTree

/// Binary tree on numeric thresholds (x <= threshold goes left).
///
/// Each feature's best threshold is the midpoint with the highest information
/// gain; the split feature is the one with the highest gain ratio among those
/// whose gain is at least the average. No pruning.
class DecisionTree {
public:
    struct Params {
        std::size_t min_leaf = 2;
        std::size_t max_depth = 0;           // 0: unlimited
        std::size_t features_per_split = 0;  // 0 or >= feature count: all features
    };

    struct Node {
        int feature = -1;  // -1 for a leaf
        double threshold = 0;
        Label label = Label::NP;
        std::array<std::size_t, 2> counts{};  // training instances reaching the node
        std::size_t left = 0, right = 0;
    };

    static DecisionTree fit(const TrainingSet& data, const Params& params, std::uint64_t seed) {
        DecisionTree tree;
        util::Rng rng(seed);
        std::vector<std::size_t> rows(data.size());
        std::iota(rows.begin(), rows.end(), 0);
        tree.build(data, rows, params, rng, 0);
        return tree;
    }

    Label predict(const Features& x) const { return nodes_[leaf_of(x)].label; }

    /// Index into nodes() of the leaf x falls into.
    std::size_t leaf_of(const Features& x) const {
        std::size_t i = 0;
        while (nodes_[i].feature >= 0) {
            i = x[static_cast<std::size_t>(nodes_[i].feature)] <= nodes_[i].threshold ? nodes_[i].left : nodes_[i].right;
        }
        return i;
    }

    const std::vector<Node>& nodes() const { return nodes_; }

    static double entropy(const std::array<std::size_t, 2>& c) {
        const double n = static_cast<double>(c[0] + c[1]);
        double h = 0;
        for (std::size_t k : c) {
            if (k > 0) {
                const double p = static_cast<double>(k) / n;
                h -= p * std::log2(p);
            }
        }
        return h;
    }

private:
    struct Split {
        std::size_t feature = 0;
        double threshold = 0;
        double gain = 0;
        double ratio = 0;
    };

    static std::optional<Split> best_threshold(const TrainingSet& data, std::vector<std::size_t>& rows,
                                               std::size_t f, std::size_t min_leaf) {
        std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
            return data.x[a][f] != data.x[b][f] ? data.x[a][f] < data.x[b][f] : a < b;
        });
        std::array<std::size_t, 2> total{}, left{};
        for (std::size_t r : rows) ++total[static_cast<std::size_t>(data.y[r])];
        const double n = static_cast<double>(rows.size());
        const double base = entropy(total);

        std::optional<Split> best;
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
            ++left[static_cast<std::size_t>(data.y[rows[i]])];
            const double v = data.x[rows[i]][f], next = data.x[rows[i + 1]][f];
            if (v == next) continue;
            const std::size_t nl = i + 1, nr = rows.size() - nl;
            if (nl < min_leaf || nr < min_leaf) continue;
            const std::array<std::size_t, 2> right{total[0] - left[0], total[1] - left[1]};
            const double wl = static_cast<double>(nl) / n, wr = static_cast<double>(nr) / n;
            const double gain = base - wl * entropy(left) - wr * entropy(right);
            if (!best || gain > best->gain + 1e-12) {
                const double split_info = -(wl * std::log2(wl) + wr * std::log2(wr));
                best = Split{f, (v + next) / 2, gain, gain / split_info};
            }
        }
        return best;
    }

    std::size_t build(const TrainingSet& data, std::vector<std::size_t> rows, const Params& params, util::Rng& rng,
                      std::size_t depth) {
        const std::size_t id = nodes_.size();
        nodes_.emplace_back();
        Node node;
        for (std::size_t r : rows) ++node.counts[static_cast<std::size_t>(data.y[r])];
        node.label = majority(node.counts);

        const bool pure = node.counts[0] == 0 || node.counts[1] == 0;
        const bool too_deep = params.max_depth > 0 && depth >= params.max_depth;
        if (pure || too_deep || rows.size() < 2 * params.min_leaf) {
            nodes_[id] = node;
            return id;
        }

        std::vector<std::size_t> candidates(kFeatureCount);
        std::iota(candidates.begin(), candidates.end(), 0);
        const std::size_t m = params.features_per_split;
        if (m > 0 && m < kFeatureCount) {
            for (std::size_t i = 0; i < m; ++i) {
                std::swap(candidates[i], candidates[i + util::uniform_index(rng, kFeatureCount - i)]);
            }
            candidates.resize(m);
            std::sort(candidates.begin(), candidates.end());
        }

        std::vector<Split> splits;
        for (std::size_t f : candidates) {
            if (auto s = best_threshold(data, rows, f, params.min_leaf); s && s->gain > 1e-12) splits.push_back(*s);
        }
        if (splits.empty()) {
            nodes_[id] = node;
            return id;
        }
        double mean_gain = 0;
        for (const auto& s : splits) mean_gain += s.gain;
        mean_gain /= static_cast<double>(splits.size());
        const Split* chosen = nullptr;
        for (const auto& s : splits) {
            if (s.gain + 1e-12 < mean_gain) continue;
            if (!chosen || s.ratio > chosen->ratio + 1e-12) chosen = &s;
        }

        std::vector<std::size_t> left_rows, right_rows;
        for (std::size_t r : rows) {
            (data.x[r][chosen->feature] <= chosen->threshold ? left_rows : right_rows).push_back(r);
        }
        node.feature = static_cast<int>(chosen->feature);
        node.threshold = chosen->threshold;
        rows.clear();
        rows.shrink_to_fit();
        node.left = build(data, std::move(left_rows), params, rng, depth + 1);
        node.right = build(data, std::move(right_rows), params, rng, depth + 1);
        nodes_[id] = node;
        return id;
    }

    std::vector<Node> nodes_;
};

// ---------------------------------------------------------------- RandomForest

/// Bagged decision trees with random feature subsets; majority vote.
class RandomForest {
public:
    struct Params {
        std::size_t tree_count = 100;
        std::size_t features_per_split = 3;
        std::size_t max_depth = 0;
        std::size_t min_leaf = 2;
        bool bootstrap = true;
    };

    static RandomForest fit(const TrainingSet& data, const Params& params, std::uint64_t seed, unsigned jobs = 1) {
        RandomForest forest;
        forest.trees_.resize(params.tree_count);
        const DecisionTree::Params tree_params{params.min_leaf, params.max_depth, params.features_per_split};
        util::parallel_for(params.tree_count, jobs, [&](std::size_t t) {
            const std::uint64_t tree_seed = util::derive_seed(seed, t);
            if (!params.bootstrap) {
                forest.trees_[t] = DecisionTree::fit(data, tree_params, tree_seed);
                return;
            }
            util::Rng rng(tree_seed);
            std::vector<std::size_t> rows(data.size());
            for (auto& r : rows) r = util::uniform_index(rng, data.size());
            forest.trees_[t] = DecisionTree::fit(data.subset(rows), tree_params, rng());
        });
        return forest;
    }

    std::array<std::size_t, 2> votes(const Features& x) const {
        std::array<std::size_t, 2> v{};
        for (const auto& tree : trees_) ++v[static_cast<std::size_t>(tree.predict(x))];
        return v;
    }

    Label predict(const Features& x) const { return majority(votes(x)); }

    const std::vector<DecisionTree>& trees() const { return trees_; }

private:
    std::vector<DecisionTree> trees_;
};

}  // namespace plagsim::learn

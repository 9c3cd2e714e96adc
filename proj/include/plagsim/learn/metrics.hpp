#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plagsim/label.hpp"

namespace plagsim::learn {

/// Counts with one class treated as positive.
struct ConfusionCounts {
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;

    std::size_t total() const { return tp + fp + fn + tn; }

    /// The same counts seen with the other class as positive.
    ConfusionCounts swapped() const { return {tn, fn, fp, tp}; }

    void add(Label gold, Label predicted, Label positive = Label::P) {
        const bool g = gold == positive, p = predicted == positive;
        if (g && p) ++tp;
        else if (!g && p) ++fp;
        else if (g) ++fn;
        else ++tn;
    }

    ConfusionCounts& operator+=(const ConfusionCounts& o) {
        tp += o.tp;
        fp += o.fp;
        fn += o.fn;
        tn += o.tn;
        return *this;
    }

    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

inline double ratio(std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

inline double precision(const ConfusionCounts& c) { return ratio(c.tp, c.tp + c.fp); }
inline double recall(const ConfusionCounts& c) { return ratio(c.tp, c.tp + c.fn); }

inline double f1(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; }

struct ClassMetrics {
    double precision = 0, recall = 0, f1 = 0;
    std::size_t support = 0;  // gold instances of the class

    friend bool operator==(const ClassMetrics&, const ClassMetrics&) = default;
};

inline ClassMetrics class_metrics(const ConfusionCounts& c) {
    ClassMetrics m;
    m.precision = precision(c);
    m.recall = recall(c);
    m.f1 = f1(m.precision, m.recall);
    m.support = c.tp + c.fn;
    return m;
}

/// Per-class values indexed by Label, plus their support-weighted means.
struct MetricSummary {
    std::array<ClassMetrics, 2> per_class{};
    ClassMetrics weighted;

    const ClassMetrics& operator[](Label l) const { return per_class[static_cast<std::size_t>(l)]; }

    friend bool operator==(const MetricSummary&, const MetricSummary&) = default;
};

/// `counts` has P as the positive class.
inline MetricSummary summarize(const ConfusionCounts& counts) {
    MetricSummary s;
    s.per_class[static_cast<std::size_t>(Label::P)] = class_metrics(counts);
    s.per_class[static_cast<std::size_t>(Label::NP)] = class_metrics(counts.swapped());
    const std::size_t n = counts.total();
    s.weighted.support = n;
    if (n > 0) {
        for (const auto& c : s.per_class) {
            const double w = static_cast<double>(c.support) / static_cast<double>(n);
            s.weighted.precision += w * c.precision;
            s.weighted.recall += w * c.recall;
            s.weighted.f1 += w * c.f1;
        }
    }
    return s;
}

struct EvaluationReport {
    std::string classifier;
    std::size_t folds = 0;
    std::uint64_t seed = 0;
    ConfusionCounts pooled;                  // P positive
    std::vector<ConfusionCounts> per_fold;  // P positive
    MetricSummary metrics;

    friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

}  // namespace plagsim::learn

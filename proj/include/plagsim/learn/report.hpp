#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "plagsim/learn/evaluation.hpp"
#include "plagsim/learn/metrics.hpp"

namespace plagsim::learn {

/// Rounds to `digits` decimals for presentation.
inline double rounded(double x, int digits = 3) {
    const double scale = std::pow(10.0, digits);
    return std::round(x * scale) / scale;
}

inline std::string fixed(double x, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, rounded(x, digits));
    return buf;
}

inline nlohmann::ordered_json to_json(const ConfusionCounts& c) {
    return {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}, {"tn", c.tn}};
}

inline nlohmann::ordered_json to_json(const ClassMetrics& m) {
    return {{"precision", rounded(m.precision)},
            {"recall", rounded(m.recall)},
            {"f1", rounded(m.f1)},
            {"support", m.support}};
}

/// Metrics rounded to 3 decimals; confusion counts are relative to class P.
inline nlohmann::ordered_json to_json(const EvaluationReport& r) {
    nlohmann::ordered_json j;
    j["classifier"] = r.classifier;
    j["folds"] = r.folds;
    j["seed"] = r.seed;
    j["weighted"] = to_json(r.metrics.weighted);
    j["classes"]["NP"] = to_json(r.metrics[Label::NP]);
    j["classes"]["P"] = to_json(r.metrics[Label::P]);
    j["confusion"] = to_json(r.pooled);
    j["fold_confusion"] = nlohmann::ordered_json::array();
    for (const auto& c : r.per_fold) j["fold_confusion"].push_back(to_json(c));
    return j;
}

inline nlohmann::ordered_json to_json(const FeatureRank& r) {
    nlohmann::ordered_json j;
    j["folds"] = r.folds;
    j["seed"] = r.seed;
    j["ranks"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < r.names.size(); ++i) j["ranks"][r.names[i]] = r.ranks[i];
    return j;
}

/// One classifier's weighted results on each dataset variant.
struct SummaryRow {
    std::string classifier;
    std::vector<ClassMetrics> variants;
};

inline std::string trim_line_ends(const std::string& text) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::size_t last = end;
        while (last > start && text[last - 1] == ' ') --last;
        out.append(text, start, last - start);
        if (end < text.size()) out += '\n';
        start = end + 1;
    }
    return out;
}

/// Fixed-width table: classifier name, then P, R, F1 per dataset variant.
inline std::string summary_table(const std::vector<std::string>& variant_names, const std::vector<SummaryRow>& rows) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-16s", "Classifier");
    out += buf;
    for (const auto& v : variant_names) {
        std::snprintf(buf, sizeof buf, " | %-23s", v.c_str());
        out += buf;
    }
    out += "\n";
    std::snprintf(buf, sizeof buf, "%-16s", "");
    out += buf;
    for (std::size_t i = 0; i < variant_names.size(); ++i) {
        std::snprintf(buf, sizeof buf, " | %7s %7s %7s", "P", "R", "F1");
        out += buf;
    }
    out += "\n";
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%-16s", row.classifier.c_str());
        out += buf;
        for (const auto& m : row.variants) {
            std::snprintf(buf, sizeof buf, " | %7s %7s %7s", fixed(m.precision).c_str(), fixed(m.recall).c_str(),
                          fixed(m.f1).c_str());
            out += buf;
        }
        out += "\n";
    }
    return trim_line_ends(out);
}

/// Two columns per variant: feature name and rank.
inline std::string rank_table(const std::vector<std::string>& variant_names, const std::vector<FeatureRank>& ranks) {
    std::string out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-8s", "Feature");
    out += buf;
    for (const auto& v : variant_names) {
        std::snprintf(buf, sizeof buf, " %12s", v.c_str());
        out += buf;
    }
    out += "\n";
    if (ranks.empty()) return out;
    for (std::size_t f = 0; f < ranks.front().names.size(); ++f) {
        std::snprintf(buf, sizeof buf, "%-8s", ranks.front().names[f].c_str());
        out += buf;
        for (const auto& r : ranks) {
            std::snprintf(buf, sizeof buf, " %12zu", r.ranks[f]);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

}  // namespace plagsim::learn

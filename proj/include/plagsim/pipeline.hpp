#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "plagsim/corpus.hpp"
#include "plagsim/dataset/dataset.hpp"
#include "plagsim/dataset/smote.hpp"
#include "plagsim/errors.hpp"
#include "plagsim/learn/learn.hpp"
#include "plagsim/similarity/similarity.hpp"
#include "plagsim/version.hpp"

namespace plagsim {

namespace fs = std::filesystem;

struct RunConfig {
    fs::path corpus_root;
    fs::path output_dir;
    std::uint64_t seed = 42;
    corpus::PairPolicy policy;
    similarity::SimilarityConfig similarity;
    dataset::SmoteConfig smote;
    learn::ClassifierSpec classifier;
    std::size_t folds = 10;
    unsigned jobs = 1;

    /// Propagates the master seed and thread budget into the module configs.
    void apply_seed() {
        smote.seed = seed;
        classifier.seed = seed;
        classifier.jobs = 1;
    }
};

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// `plagsim <version> seed=<n>`; the first line of every output artifact.
inline std::string stamp(std::uint64_t seed) {
    return std::string(kToolName) + " " + std::string(kVersion) + " seed=" + std::to_string(seed);
}

inline std::string percent1(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", x);
    return buf;
}

/// Policy names accepted on the command line.
inline corpus::PairPolicy parse_policy(std::string_view name) {
    corpus::PairPolicy p;
    if (name == "default") return p;
    if (name == "with-comments") {
        p.include_comment_copies = true;
        return p;
    }
    if (name == "ordered") {
        p.ordering = corpus::PairPolicy::Ordering::Ordered;
        return p;
    }
    if (name == "ordered-with-comments") {
        p.include_comment_copies = true;
        p.ordering = corpus::PairPolicy::Ordering::Ordered;
        return p;
    }
    throw ConfigError("unknown pair policy '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- similarity matrix

struct MatrixRow {
    std::string left, right;
    similarity::SimilarityVector scores;
};

/// Pairs of one assignment sorted by AVG, highest first (pair id breaks ties).
inline std::map<int, std::vector<MatrixRow>> similarity_matrix(const corpus::Corpus& c,
                                                               const corpus::PairPolicy& policy,
                                                               const similarity::SimilarityConfig& cfg,
                                                               unsigned jobs) {
    const auto pairs = corpus::generate_pairs(c, policy);
    std::vector<MatrixRow> rows(pairs.size());
    util::parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        const auto& p = pairs[i];
        try {
            rows[i] = {p.left.name(), p.right.name(),
                       similarity::similarity_vector(c.solutions[p.left_index].stream,
                                                     c.solutions[p.right_index].stream, cfg)};
        } catch (const EmptyStream& e) {
            throw EmptyStream(p.id() + ": " + e.what());
        }
    });
    std::map<int, std::vector<MatrixRow>> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) out[pairs[i].left.assignment].push_back(std::move(rows[i]));
    for (auto& [a, list] : out) {
        std::stable_sort(list.begin(), list.end(), [](const MatrixRow& x, const MatrixRow& y) {
            if (x.scores.avg != y.scores.avg) return x.scores.avg > y.scores.avg;
            return std::tie(x.left, x.right) < std::tie(y.left, y.right);
        });
    }
    return out;
}

inline std::string matrix_csv(const std::vector<MatrixRow>& rows, std::uint64_t seed) {
    std::string out = "# " + stamp(seed) + "\nSN,SolutionI,SolutionJ,LCS,N1,N2,N3,GST1,GST2,GST3,AVG,STDV\n";
    std::size_t sn = 0;
    for (const auto& r : rows) {
        out += std::to_string(++sn) + "," + r.left + "," + r.right;
        for (double x : r.scores.scores()) out += "," + percent1(x);
        out += "," + percent1(r.scores.avg) + "," + percent1(r.scores.stdv) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------- experiment bundle

/// File name to content, in write order.
using Bundle = std::vector<std::pair<std::string, std::string>>;

inline std::string dataset_csv(const dataset::Dataset& ds, std::uint64_t seed) {
    std::ostringstream out;
    dataset::write_csv(out, ds, stamp(seed));
    return out.str();
}

inline nlohmann::ordered_json stamped(std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["seed"] = seed;
    return j;
}

/// Builds both dataset variants, cross-validates every classifier on each,
/// ranks features, and renders the bundle. Nothing is written to disk.
inline Bundle run_pipeline(RunConfig cfg) {
    cfg.apply_seed();
    const auto corpus = corpus::load_corpus(cfg.corpus_root, {.permissive = false, .jobs = cfg.jobs});
    const auto original = dataset::build_dataset(corpus, cfg.policy, cfg.similarity, cfg.jobs);
    const auto balanced = dataset::smote(original, cfg.smote);

    const std::vector<std::string> variant_names{"Original", "Oversampled"};
    const std::vector<const dataset::Dataset*> variants{&original, &balanced};
    const std::vector<std::string> eval_files{"eval-original.json", "eval-smote.json"};

    Bundle bundle;
    bundle.emplace_back("dataset.csv", dataset_csv(original, cfg.seed));
    bundle.emplace_back("dataset-smote.csv", dataset_csv(balanced, cfg.seed));

    std::vector<learn::SummaryRow> summary;
    for (auto kind : learn::kAllClassifiers) summary.push_back({std::string(learn::display_name(kind)), {}});
    std::vector<learn::FeatureRank> ranks;

    for (std::size_t v = 0; v < variants.size(); ++v) {
        auto doc = stamped(cfg.seed);
        doc["dataset"] = variant_names[v];
        doc["instances"] = variants[v]->size();
        doc["folds"] = cfg.folds;
        doc["reports"] = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < learn::kAllClassifiers.size(); ++k) {
            auto spec = cfg.classifier;
            spec.kind = learn::kAllClassifiers[k];
            const auto report = learn::cross_validate(spec, *variants[v], cfg.folds, cfg.seed, cfg.jobs);
            doc["reports"].push_back(learn::to_json(report));
            summary[k].variants.push_back(report.metrics.weighted);
        }
        bundle.emplace_back(eval_files[v], doc.dump(2) + "\n");
        ranks.push_back(learn::rank_features(*variants[v], cfg.folds, cfg.seed));
    }

    auto rank_doc = stamped(cfg.seed);
    for (std::size_t v = 0; v < variants.size(); ++v) rank_doc[variant_names[v]] = learn::to_json(ranks[v]);
    bundle.emplace_back("feature-ranks.json", rank_doc.dump(2) + "\n");

    std::string text = stamp(cfg.seed) + "\n\nDatasets\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-12s %10s %10s %10s\n", "Dataset", "Instances", "NP", "P");
    text += buf;
    for (std::size_t v = 0; v < variants.size(); ++v) {
        std::snprintf(buf, sizeof buf, "%-12s %10zu %10zu %10zu\n", variant_names[v].c_str(), variants[v]->size(),
                      variants[v]->count(Label::NP), variants[v]->count(Label::P));
        text += buf;
    }
    text += "\nWeighted precision, recall and F1 (" + std::to_string(cfg.folds) + "-fold cross-validation)\n";
    text += learn::summary_table(variant_names, summary);
    text += "\nFeature ranks (folds selecting the feature)\n";
    text += learn::rank_table(variant_names, ranks);
    bundle.emplace_back("summary.txt", text);
    return bundle;
}

/// Writes every file of the bundle; on failure removes what was written.
inline void write_bundle(const fs::path& dir, const Bundle& bundle) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    std::vector<fs::path> written;
    try {
        for (const auto& [name, content] : bundle) {
            const fs::path path = dir / name;
            std::ofstream out(path, std::ios::binary);
            if (!out) throw IoError("cannot write " + path.string());
            written.push_back(path);
            out << content;
            out.close();
            if (!out) throw IoError("error while writing " + path.string());
        }
    } catch (...) {
        for (const auto& p : written) fs::remove(p, ec);
        throw;
    }
}

}  // namespace plagsim

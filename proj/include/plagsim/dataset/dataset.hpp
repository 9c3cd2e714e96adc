#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "plagsim/corpus.hpp"
#include "plagsim/errors.hpp"
#include "plagsim/label.hpp"
#include "plagsim/similarity/similarity.hpp"
#include "plagsim/util/parallel.hpp"

namespace plagsim::dataset {

using similarity::kFeatureCount;
using Features = std::array<double, kFeatureCount>;

inline constexpr std::string_view kSyntheticProvenance = "synthetic";

struct LabeledInstance {
    Features features{};
    Label label = Label::NP;
    std::string provenance;  // pair id, "synthetic", or empty when read from a file
};

struct Dataset {
    std::vector<LabeledInstance> instances;
    std::vector<std::string> feature_names{similarity::kFeatureNames.begin(), similarity::kFeatureNames.end()};

    std::size_t size() const { return instances.size(); }
    bool empty() const { return instances.empty(); }

    std::size_t count(Label label) const {
        return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                      [label](const LabeledInstance& x) { return x.label == label; }));
    }
};

/// Same features, labels and names, row by row. Provenance is not compared.
inline bool same_rows(const Dataset& a, const Dataset& b) {
    if (a.feature_names != b.feature_names || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.instances[i].features != b.instances[i].features || a.instances[i].label != b.instances[i].label) {
            return false;
        }
    }
    return true;
}

/// One row per generated pair, sorted by pair id. Throws EmptyStream naming the
/// pair when a solution has no atoms.
inline Dataset build_dataset(const corpus::Corpus& corpus, const corpus::PairPolicy& policy = {},
                             const similarity::SimilarityConfig& cfg = {}, unsigned jobs = 1) {
    cfg.validate();
    if (corpus.solutions.empty()) throw LayoutError("cannot build a dataset from an empty corpus");

    auto pairs = corpus::generate_pairs(corpus, policy);
    std::sort(pairs.begin(), pairs.end(),
              [](const corpus::LabeledPair& a, const corpus::LabeledPair& b) { return a.id() < b.id(); });

    Dataset ds;
    ds.instances.resize(pairs.size());
    util::parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        const auto& pair = pairs[i];
        similarity::SimilarityVector v;
        try {
            v = similarity::similarity_vector(corpus.solutions[pair.left_index].stream,
                                              corpus.solutions[pair.right_index].stream, cfg);
        } catch (const EmptyStream& e) {
            throw EmptyStream(pair.id() + ": " + e.what());
        }
        ds.instances[i] = {v.scores(), pair.label, pair.id()};
    });
    return ds;
}

namespace detail {

inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, std::size_t line) {
    double x = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw FormatError("line " + std::to_string(line) + ": bad number '" + std::string(text) + "'");
    }
    return x;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::string header(const Dataset& ds) {
    std::string h;
    for (const auto& name : ds.feature_names) h += name + ",";
    return h + "label";
}

}  // namespace detail

/// CSV with the header `LCS,...,GST3,label`, shortest round-trip number
/// formatting and LF line endings. A non-empty comment is written first as a
/// `# ` line.
inline void write_csv(std::ostream& out, const Dataset& ds, std::string_view comment = {}) {
    if (!comment.empty()) out << "# " << comment << '\n';
    out << detail::header(ds) << '\n';
    for (const auto& row : ds.instances) {
        for (double x : row.features) out << detail::format_double(x) << ',';
        out << to_string(row.label) << '\n';
    }
}

/// Reads what write_csv writes. Lines starting with '#' are skipped.
inline Dataset read_csv(std::istream& in) {
    Dataset ds;
    const std::string expected_header = detail::header(ds);
    std::string line;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!seen_header) {
            if (line != expected_header) throw FormatError("line " + std::to_string(line_no) + ": unexpected header");
            seen_header = true;
            continue;
        }
        const auto fields = detail::split(line, ',');
        if (fields.size() != kFeatureCount + 1) {
            throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(kFeatureCount + 1) +
                              " fields, found " + std::to_string(fields.size()));
        }
        LabeledInstance row;
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            const double x = detail::parse_double(fields[f], line_no);
            if (!std::isfinite(x) || x < 0 || x > 100) {
                throw FormatError("line " + std::to_string(line_no) + ": feature out of [0,100]");
            }
            row.features[f] = x;
        }
        row.label = parse_label(fields[kFeatureCount]);
        ds.instances.push_back(std::move(row));
    }
    if (!seen_header) throw FormatError("missing header");
    return ds;
}

inline void write_csv(const std::filesystem::path& path, const Dataset& ds, std::string_view comment = {}) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    write_csv(out, ds, comment);
    if (!out) throw IoError("error while writing " + path.string());
}

inline Dataset read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    return read_csv(in);
}

/// Attribute-relation file: `@relation`, one numeric `@attribute` per feature,
/// a nominal `class {NP,P}` attribute, then `@data` rows. Layout in docs/formats.md.
inline void write_arff(std::ostream& out, const Dataset& ds, std::string_view relation = "plagsim",
                       std::string_view comment = {}) {
    if (!comment.empty()) out << "% " << comment << '\n';
    out << "@relation " << relation << "\n\n";
    for (const auto& name : ds.feature_names) out << "@attribute " << name << " numeric\n";
    out << "@attribute class {NP,P}\n\n@data\n";
    for (const auto& row : ds.instances) {
        for (double x : row.features) out << detail::format_double(x) << ',';
        out << to_string(row.label) << '\n';
    }
}

}  // namespace plagsim::dataset

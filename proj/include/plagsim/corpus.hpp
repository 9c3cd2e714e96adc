#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "plagsim/errors.hpp"
#include "plagsim/frontend/frontend.hpp"
#include "plagsim/label.hpp"
#include "plagsim/util/parallel.hpp"
#include "plagsim/version.hpp"

namespace plagsim::corpus {

namespace fs = std::filesystem;

enum class Provenance { Original, PlagComments, PlagVariables, PlagLoops };

inline constexpr std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::Original: return "original";
        case Provenance::PlagComments: return "comments";
        case Provenance::PlagVariables: return "variables";
        case Provenance::PlagLoops: return "loops";
    }
    return "?";
}

struct SolutionMeta {
    int assignment = 0;
    int base_solution = 0;
    Provenance provenance = Provenance::Original;
    fs::path path;

    /// File name without extension, e.g. "A1-P-Sol-3-variables".
    std::string name() const { return path.stem().string(); }

    friend bool operator==(const SolutionMeta&, const SolutionMeta&) = default;
};

/// Recovers metadata from an IPCA file name.
///
/// Canonical form: `A<k>-NP-Sol-<b>.cpp` for originals and
/// `A<k>-P-Sol-<b>[-comments|-variables|-loops].cpp` for plagiarized copies;
/// a P file without suffix is a comments copy. The fallback form accepts any
/// letter case, `_` or space separators, `Assignment<k>` and `Solution<b>`
/// spellings, and singular suffixes. Returns nullopt for anything else.
inline std::optional<SolutionMeta> parse_solution_name(const fs::path& path) {
    static const std::regex canonical(R"(^A(\d+)-(NP|P)-Sol-(\d+)(?:-(comments|variables|loops))?\.cpp$)");
    static const std::regex fallback(
        R"(^A(?:ssignment)?[-_ ]?(\d+)[-_ ]+(NP|P)[-_ ]+Sol(?:ution)?[-_ ]?(\d+)(?:[-_ ]+(comments?|variables?|vars|loops?))?\.cpp$)",
        std::regex::icase);

    const std::string file = path.filename().string();
    std::smatch m;
    if (!std::regex_match(file, m, canonical) && !std::regex_match(file, m, fallback)) {
        return std::nullopt;
    }

    SolutionMeta meta;
    meta.assignment = std::stoi(m[1].str());
    meta.base_solution = std::stoi(m[3].str());
    meta.path = path;
    if (meta.assignment < 1 || meta.base_solution < 1) return std::nullopt;

    std::string kind = m[2].str();
    std::string suffix = m[4].matched ? m[4].str() : "";
    std::transform(kind.begin(), kind.end(), kind.begin(), ::toupper);
    std::transform(suffix.begin(), suffix.end(), suffix.begin(), ::tolower);

    if (kind == "NP") {
        if (!suffix.empty()) return std::nullopt;
        meta.provenance = Provenance::Original;
    } else if (suffix.empty() || suffix.starts_with("comment")) {
        meta.provenance = Provenance::PlagComments;
    } else if (suffix.starts_with("var")) {
        meta.provenance = Provenance::PlagVariables;
    } else {
        meta.provenance = Provenance::PlagLoops;
    }
    return meta;
}

struct Solution {
    SolutionMeta meta;
    frontend::TokenStream stream;
};

struct AssignmentCount {
    std::size_t original = 0;
    std::size_t plagiarized = 0;

    std::size_t total() const { return original + plagiarized; }
};

/// Parsed solutions ordered by (assignment, file name). Immutable once loaded.
struct Corpus {
    fs::path root;
    std::vector<Solution> solutions;
    std::vector<std::string> warnings;

    std::map<int, AssignmentCount> counts() const {
        std::map<int, AssignmentCount> out;
        for (const auto& s : solutions) {
            auto& c = out[s.meta.assignment];
            (s.meta.provenance == Provenance::Original ? c.original : c.plagiarized) += 1;
        }
        return out;
    }

    std::size_t count(Provenance p) const {
        return static_cast<std::size_t>(std::count_if(
            solutions.begin(), solutions.end(), [p](const Solution& s) { return s.meta.provenance == p; }));
    }
};

struct LoadOptions {
    /// Skip unrecognized names and unparsable files, recording them as warnings.
    bool permissive = false;
    unsigned jobs = 1;
};

inline std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error while reading " + path.string());
    return buf.str();
}

/// Loads every `.cpp` file below root. Throws MissingRoot, LayoutError, or the
/// frontend's LexError/ParseError (with the file attached).
inline Corpus load_corpus(const fs::path& root, const LoadOptions& options = {}) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) throw MissingRoot("corpus root not found: " + root.string());

    Corpus corpus;
    corpus.root = root;

    std::vector<fs::path> files;
    for (auto it = fs::recursive_directory_iterator(root, ec); !ec && it != fs::recursive_directory_iterator();
         it.increment(ec)) {
        if (it->is_regular_file() && it->path().extension() == ".cpp") files.push_back(it->path());
    }
    if (ec) throw IoError("cannot list " + root.string() + ": " + ec.message());

    std::vector<SolutionMeta> metas;
    for (const auto& file : files) {
        if (auto meta = parse_solution_name(file)) {
            metas.push_back(*meta);
        } else if (options.permissive) {
            corpus.warnings.push_back("unrecognized solution file name: " + file.string());
        } else {
            throw LayoutError("unrecognized solution file name: " + file.string());
        }
    }
    std::sort(metas.begin(), metas.end(), [](const SolutionMeta& a, const SolutionMeta& b) {
        return std::tuple(a.assignment, a.name()) < std::tuple(b.assignment, b.name());
    });

    std::set<std::tuple<int, int, Provenance>> seen;
    for (const auto& m : metas) {
        if (!seen.insert({m.assignment, m.base_solution, m.provenance}).second) {
            throw LayoutError("duplicate solution " + m.name() + " (" + m.path.string() + ")");
        }
    }
    for (const auto& m : metas) {
        if (m.provenance != Provenance::Original &&
            !seen.contains({m.assignment, m.base_solution, Provenance::Original})) {
            const std::string msg = m.name() + " has no original solution in the corpus";
            if (!options.permissive) throw LayoutError(msg);
            corpus.warnings.push_back(msg);
        }
    }

    if (metas.empty()) corpus.warnings.push_back("no solution files found under " + root.string());

    std::vector<std::optional<frontend::TokenStream>> streams(metas.size());
    std::vector<std::string> failures(metas.size());
    util::parallel_for(metas.size(), options.jobs, [&](std::size_t i) {
        const std::string source = read_file(metas[i].path);
        try {
            streams[i] = frontend::token_stream(source);
        } catch (SourceError& e) {
            e.set_file(metas[i].path.string());
            if (!options.permissive) throw;
            failures[i] = e.what();
        }
    });

    for (std::size_t i = 0; i < metas.size(); ++i) {
        if (streams[i]) {
            corpus.solutions.push_back({metas[i], std::move(*streams[i])});
        } else {
            corpus.warnings.push_back("excluded: " + failures[i]);
        }
    }
    return corpus;
}

/// Controls pair enumeration.
struct PairPolicy {
    enum class Ordering { Unordered, Ordered };

    bool include_comment_copies = false;
    Ordering ordering = Ordering::Unordered;
};

struct LabeledPair {
    std::size_t left_index = 0;  // indices into Corpus::solutions
    std::size_t right_index = 0;
    SolutionMeta left;  // source solution of the ordered pair
    SolutionMeta right;
    Label label = Label::NP;

    std::string id() const { return left.name() + "|" + right.name(); }
};

/// P iff both derive from the same base solution and at least one is a copy.
inline Label gold_label(const SolutionMeta& a, const SolutionMeta& b) {
    const bool same_base = a.assignment == b.assignment && a.base_solution == b.base_solution;
    const bool any_copy = a.provenance != Provenance::Original || b.provenance != Provenance::Original;
    return same_base && any_copy ? Label::P : Label::NP;
}

/// All within-assignment pairs, no self pairs. Under Unordered the file name
/// that sorts first is the left (source) solution; Ordered emits both directions.
inline std::vector<LabeledPair> generate_pairs(const Corpus& corpus, const PairPolicy& policy = {}) {
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < corpus.solutions.size(); ++i) {
        const auto& meta = corpus.solutions[i].meta;
        if (!policy.include_comment_copies && meta.provenance == Provenance::PlagComments) continue;
        groups[meta.assignment].push_back(i);
    }

    std::vector<LabeledPair> pairs;
    for (auto& [assignment, members] : groups) {
        std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
            return corpus.solutions[x].meta.name() < corpus.solutions[y].meta.name();
        });
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const auto& a = corpus.solutions[members[i]].meta;
                const auto& b = corpus.solutions[members[j]].meta;
                const Label label = gold_label(a, b);
                pairs.push_back({members[i], members[j], a, b, label});
                if (policy.ordering == PairPolicy::Ordering::Ordered) {
                    pairs.push_back({members[j], members[i], b, a, label});
                }
            }
        }
    }
    return pairs;
}

/// One record per solution: path (relative to the root), assignment, base,
/// provenance and token count.
inline nlohmann::ordered_json manifest(const Corpus& corpus) {
    nlohmann::ordered_json doc;
    doc["tool"] = kToolName;
    doc["version"] = kVersion;
    doc["solutions"] = nlohmann::ordered_json::array();
    for (const auto& s : corpus.solutions) {
        nlohmann::ordered_json rec;
        rec["path"] = fs::relative(s.meta.path, corpus.root).generic_string();
        rec["assignment"] = s.meta.assignment;
        rec["base"] = s.meta.base_solution;
        rec["provenance"] = std::string(to_string(s.meta.provenance));
        rec["tokens"] = s.stream.size();
        doc["solutions"].push_back(std::move(rec));
    }
    return doc;
}

}  // namespace plagsim::corpus

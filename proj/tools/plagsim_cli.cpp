// plagsim: token-based similarity scores and plagiarism classifiers for
// small C++ programs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plagsim/corpus.hpp"
#include "plagsim/dataset/dataset.hpp"
#include "plagsim/dataset/smote.hpp"
#include "plagsim/frontend/frontend.hpp"
#include "plagsim/learn/learn.hpp"
#include "plagsim/pipeline.hpp"
#include "plagsim/version.hpp"

namespace fs = std::filesystem;
using namespace plagsim;

namespace {

enum Exit { kOk = 0, kEnvironment = 1, kInput = 2, kConfig = 3 };

struct Options {
    std::string corpus;
    std::string out;
    std::string input;
    std::string policy = "default";
    std::string classifier = "random-forest";
    std::string normalization = "source";
    std::string format = "csv";
    std::string manifest;
    std::string file_a, file_b;
    std::uint64_t seed = 42;
    double percent = 235;
    std::size_t k = 5;
    std::size_t folds = 10;
    unsigned jobs = 0;
    bool json = false;
    bool permissive = false;
};

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    out.close();
    if (!out) throw IoError("error while writing " + path.string());
}

/// Prints to stdout, or writes the file when a path is given.
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_text(path, text);
    }
}

unsigned jobs_of(const Options& o) { return o.jobs == 0 ? default_jobs() : o.jobs; }

similarity::SimilarityConfig similarity_of(const Options& o) {
    similarity::SimilarityConfig cfg;
    if (o.normalization == "source") {
        cfg.normalization = similarity::Normalization::SourceNormalized;
    } else if (o.normalization == "symmetric") {
        cfg.normalization = similarity::Normalization::Symmetric;
    } else {
        throw ConfigError("unknown normalization '" + o.normalization + "'");
    }
    return cfg;
}

learn::ClassifierSpec classifier_of(const Options& o) {
    learn::ClassifierSpec spec;
    spec.kind = learn::parse_classifier(o.classifier);
    spec.seed = o.seed;
    spec.jobs = jobs_of(o);
    spec.validate();
    return spec;
}

corpus::Corpus load(const Options& o) {
    if (o.corpus.empty()) throw ConfigError("--corpus is required");
    return corpus::load_corpus(o.corpus, {.permissive = o.permissive, .jobs = jobs_of(o)});
}

void report_warnings(const corpus::Corpus& c) {
    for (const auto& w : c.warnings) std::cerr << "warning: " << w << '\n';
}

frontend::TokenStream stream_of_file(const std::string& path) {
    const std::string source = corpus::read_file(path);
    try {
        return frontend::token_stream(source);
    } catch (SourceError& e) {
        e.set_file(path);
        throw;
    }
}

std::string vector_table(const std::string& left, const std::string& right, const similarity::SimilarityVector& v) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-28s %-28s", "SolutionI", "SolutionJ");
    out += buf;
    for (const char* name : similarity::kFeatureNames) {
        std::snprintf(buf, sizeof buf, " %6s", name);
        out += buf;
    }
    out += "    AVG   STDV\n";
    std::snprintf(buf, sizeof buf, "%-28s %-28s", left.c_str(), right.c_str());
    out += buf;
    for (double x : v.scores()) {
        std::snprintf(buf, sizeof buf, " %6s", percent1(x).c_str());
        out += buf;
    }
    std::snprintf(buf, sizeof buf, " %6s %6s\n", percent1(v.avg).c_str(), percent1(v.stdv).c_str());
    return out + buf;
}

int cmd_compare(const Options& o) {
    const auto cfg = similarity_of(o);
    const auto a = stream_of_file(o.file_a);
    const auto b = stream_of_file(o.file_b);
    const auto v = similarity::similarity_vector(a, b, cfg);
    const std::string left = fs::path(o.file_a).stem().string(), right = fs::path(o.file_b).stem().string();

    std::optional<Label> gold;
    const auto ma = corpus::parse_solution_name(o.file_a), mb = corpus::parse_solution_name(o.file_b);
    if (ma && mb && ma->assignment == mb->assignment && !(*ma == *mb)) gold = corpus::gold_label(*ma, *mb);

    std::optional<Label> predicted;
    if (!o.corpus.empty()) {
        const auto c = load(o);
        report_warnings(c);
        const auto ds = dataset::build_dataset(c, parse_policy(o.policy), cfg, jobs_of(o));
        predicted = learn::train(classifier_of(o), ds).predict(v.scores());
    }

    if (o.json) {
        nlohmann::ordered_json j = stamped(o.seed);
        j["source"] = o.file_a;
        j["target"] = o.file_b;
        j["scores"] = nlohmann::ordered_json::object();
        const auto s = v.scores();
        for (std::size_t f = 0; f < s.size(); ++f) j["scores"][similarity::kFeatureNames[f]] = learn::rounded(s[f], 1);
        j["avg"] = learn::rounded(v.avg, 1);
        j["stdv"] = learn::rounded(v.stdv, 1);
        j["predicted"] = predicted ? nlohmann::ordered_json(std::string(to_string(*predicted))) : nullptr;
        j["gold"] = gold ? nlohmann::ordered_json(std::string(to_string(*gold))) : nullptr;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << vector_table(left, right, v);
        if (predicted) std::cout << "predicted: " << to_string(*predicted) << '\n';
        if (gold) std::cout << "gold: " << to_string(*gold) << '\n';
    }
    return kOk;
}

int cmd_matrix(const Options& o) {
    if (o.out.empty()) throw ConfigError("--out is required");
    const auto c = load(o);
    report_warnings(c);
    const auto matrix = similarity_matrix(c, parse_policy(o.policy), similarity_of(o), jobs_of(o));
    fs::create_directories(o.out);
    for (const auto& [assignment, rows] : matrix) {
        write_text(fs::path(o.out) / ("assignment-" + std::to_string(assignment) + ".csv"), matrix_csv(rows, o.seed));
    }
    std::cerr << "wrote " << matrix.size() << " matrices to " << o.out << '\n';
    return kOk;
}

int cmd_dataset(const Options& o) {
    const auto c = load(o);
    report_warnings(c);
    const auto ds = dataset::build_dataset(c, parse_policy(o.policy), similarity_of(o), jobs_of(o));
    std::ostringstream text;
    if (o.format == "csv") {
        dataset::write_csv(text, ds, stamp(o.seed));
    } else if (o.format == "arff") {
        dataset::write_arff(text, ds, "plagsim", stamp(o.seed));
    } else {
        throw ConfigError("unknown format '" + o.format + "'");
    }
    if (!o.manifest.empty()) {
        auto doc = corpus::manifest(c);
        doc["seed"] = o.seed;
        write_text(o.manifest, doc.dump(2) + "\n");
    }
    emit(o.out, text.str());
    std::cerr << ds.size() << " instances (" << ds.count(Label::NP) << " NP, " << ds.count(Label::P) << " P)\n";
    return kOk;
}

dataset::Dataset read_input(const Options& o) {
    if (o.input.empty()) throw ConfigError("--in is required");
    return dataset::read_csv(fs::path(o.input));
}

int cmd_smote(const Options& o) {
    const auto ds = read_input(o);
    const dataset::SmoteConfig cfg{o.percent, o.k, o.seed};
    cfg.validate();
    const auto out = dataset::smote(ds, cfg);
    std::ostringstream text;
    dataset::write_csv(text, out, stamp(o.seed));
    emit(o.out, text.str());
    std::cerr << out.size() << " instances (" << out.count(Label::NP) << " NP, " << out.count(Label::P) << " P)\n";
    return kOk;
}

int cmd_eval(const Options& o) {
    const auto spec = classifier_of(o);
    const auto ds = read_input(o);
    const auto report = learn::cross_validate(spec, ds, o.folds, o.seed, jobs_of(o));
    if (o.json) {
        auto j = stamped(o.seed);
        j["report"] = learn::to_json(report);
        emit(o.out, j.dump(2) + "\n");
    } else {
        std::string text = "# " + stamp(o.seed) + "\n";
        text += learn::summary_table({fs::path(o.input).filename().string()},
                                     {{std::string(learn::display_name(spec.kind)), {report.metrics.weighted}}});
        for (Label l : {Label::NP, Label::P}) {
            const auto& m = report.metrics[l];
            text += "class " + std::string(to_string(l)) + ": P=" + learn::fixed(m.precision) +
                    " R=" + learn::fixed(m.recall) + " F1=" + learn::fixed(m.f1) +
                    " support=" + std::to_string(m.support) + "\n";
        }
        emit(o.out, text);
    }
    return kOk;
}

int cmd_rank(const Options& o) {
    const auto ds = read_input(o);
    const auto rank = learn::rank_features(ds, o.folds, o.seed);
    if (o.json) {
        auto j = stamped(o.seed);
        j["ranks"] = learn::to_json(rank);
        emit(o.out, j.dump(2) + "\n");
    } else {
        emit(o.out, "# " + stamp(o.seed) + "\n" + learn::rank_table({"Rank"}, {rank}));
    }
    return kOk;
}

int cmd_pipeline(const Options& o) {
    if (o.out.empty()) throw ConfigError("--out is required");
    if (o.corpus.empty()) throw ConfigError("--corpus is required");
    RunConfig cfg;
    cfg.corpus_root = o.corpus;
    cfg.output_dir = o.out;
    cfg.seed = o.seed;
    cfg.policy = parse_policy(o.policy);
    cfg.similarity = similarity_of(o);
    cfg.smote = {o.percent, o.k, o.seed};
    cfg.smote.validate();
    cfg.classifier = classifier_of(o);
    cfg.folds = o.folds;
    cfg.jobs = jobs_of(o);
    write_bundle(cfg.output_dir, run_pipeline(cfg));
    std::cerr << "wrote experiment bundle to " << o.out << '\n';
    return kOk;
}

int run(int argc, char** argv) {
    CLI::App app{"Token-based similarity scores and plagiarism classifiers for small C++ programs", "plagsim"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    Options o;

    auto corpus_opts = [&](CLI::App* cmd) {
        cmd->add_option("--corpus", o.corpus, "Corpus root directory");
        cmd->add_option("--policy", o.policy, "Pair policy: default, with-comments, ordered, ordered-with-comments")
            ->capture_default_str();
        cmd->add_flag("--permissive", o.permissive, "Skip unrecognized or unparsable files with a warning");
        cmd->add_option("--normalization", o.normalization, "source or symmetric")->capture_default_str();
    };
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
        cmd->add_option("--jobs", o.jobs, "Worker threads (0: all cores)")->capture_default_str();
    };

    auto* compare = app.add_subcommand("compare", "Similarity vector of two source files (first is the source)");
    compare->add_option("file_a", o.file_a, "Source solution")->required();
    compare->add_option("file_b", o.file_b, "Compared solution")->required();
    compare->add_flag("--json", o.json, "Machine-readable output");
    compare->add_option("--classifier", o.classifier, "Classifier trained on --corpus to predict a label")
        ->capture_default_str();
    corpus_opts(compare);
    common(compare);

    auto* matrix = app.add_subcommand("matrix", "Per-assignment similarity matrices sorted by AVG");
    corpus_opts(matrix);
    common(matrix);
    matrix->add_option("--out", o.out, "Output directory");

    auto* ds = app.add_subcommand("dataset", "Feature dataset of all labeled pairs");
    corpus_opts(ds);
    common(ds);
    ds->add_option("--out", o.out, "Output file (default: stdout)");
    ds->add_option("--format", o.format, "csv or arff")->capture_default_str();
    ds->add_option("--manifest", o.manifest, "Also write a corpus manifest (JSON)");

    auto* smote = app.add_subcommand("smote", "Oversample the minority class of a dataset");
    smote->add_option("--in", o.input, "Input dataset (CSV)");
    smote->add_option("--out", o.out, "Output file (default: stdout)");
    smote->add_option("--percent", o.percent, "Oversampling percentage")->capture_default_str();
    smote->add_option("--k", o.k, "Nearest neighbours")->capture_default_str();
    common(smote);

    auto* eval = app.add_subcommand("eval", "Stratified cross-validation of a classifier");
    eval->add_option("--in", o.input, "Input dataset (CSV)");
    eval->add_option("--out", o.out, "Output file (default: stdout)");
    eval->add_option("--classifier", o.classifier,
                     "one-r, naive-bayes, logistic, decision-tree or random-forest")
        ->capture_default_str();
    eval->add_option("--folds", o.folds, "Cross-validation folds")->capture_default_str();
    eval->add_flag("--json", o.json, "Machine-readable output");
    common(eval);

    auto* rank = app.add_subcommand("rank", "Feature ranks by correlation-based selection per fold");
    rank->add_option("--in", o.input, "Input dataset (CSV)");
    rank->add_option("--out", o.out, "Output file (default: stdout)");
    rank->add_option("--folds", o.folds, "Cross-validation folds")->capture_default_str();
    rank->add_flag("--json", o.json, "Machine-readable output");
    common(rank);

    auto* pipeline = app.add_subcommand("pipeline", "Datasets, evaluations, feature ranks and a summary");
    corpus_opts(pipeline);
    common(pipeline);
    pipeline->add_option("--out", o.out, "Output directory");
    pipeline->add_option("--classifier", o.classifier, "Base hyperparameters source (all classifiers are run)")
        ->capture_default_str();
    pipeline->add_option("--percent", o.percent, "SMOTE percentage")->capture_default_str();
    pipeline->add_option("--k", o.k, "SMOTE nearest neighbours")->capture_default_str();
    pipeline->add_option("--folds", o.folds, "Cross-validation folds")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    if (*compare) return cmd_compare(o);
    if (*matrix) return cmd_matrix(o);
    if (*ds) return cmd_dataset(o);
    if (*smote) return cmd_smote(o);
    if (*eval) return cmd_eval(o);
    if (*rank) return cmd_rank(o);
    return cmd_pipeline(o);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "plagsim: configuration error: " << e.what() << '\n';
        return kConfig;
    } catch (const InvalidHyperparameters& e) {
        std::cerr << "plagsim: configuration error: " << e.what() << '\n';
        return kConfig;
    } catch (const IoError& e) {
        std::cerr << "plagsim: " << e.what() << '\n';
        return kEnvironment;
    } catch (const MissingRoot& e) {
        std::cerr << "plagsim: " << e.what() << '\n';
        return kEnvironment;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "plagsim: " << e.what() << '\n';
        return kEnvironment;
    } catch (const Error& e) {
        std::cerr << "plagsim: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "plagsim: internal error: " << e.what() << '\n';
        return kEnvironment;
    }
}

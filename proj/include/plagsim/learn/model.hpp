#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "plagsim/dataset/dataset.hpp"
#include "plagsim/errors.hpp"
#include "plagsim/learn/classifiers.hpp"

namespace plagsim::learn {

enum class ClassifierKind { OneR, NaiveBayes, Logistic, DecisionTree, RandomForest };

inline constexpr std::array<ClassifierKind, 5> kAllClassifiers = {
    ClassifierKind::OneR, ClassifierKind::NaiveBayes, ClassifierKind::Logistic, ClassifierKind::DecisionTree,
    ClassifierKind::RandomForest,
};

inline constexpr std::string_view to_string(ClassifierKind k) {
    switch (k) {
        case ClassifierKind::OneR: return "one-r";
        case ClassifierKind::NaiveBayes: return "naive-bayes";
        case ClassifierKind::Logistic: return "logistic";
        case ClassifierKind::DecisionTree: return "decision-tree";
        case ClassifierKind::RandomForest: return "random-forest";
    }
    return "?";
}

/// Display name used in report tables.
inline constexpr std::string_view display_name(ClassifierKind k) {
    switch (k) {
        case ClassifierKind::OneR: return "OneR";
        case ClassifierKind::NaiveBayes: return "Naive Bayes";
        case ClassifierKind::Logistic: return "Logistic";
        case ClassifierKind::DecisionTree: return "Decision Tree";
        case ClassifierKind::RandomForest: return "Random Forest";
    }
    return "?";
}

inline ClassifierKind parse_classifier(std::string_view name) {
    for (auto k : kAllClassifiers) {
        if (name == to_string(k)) return k;
    }
    throw ConfigError("unknown classifier '" + std::string(name) + "'");
}

struct ClassifierSpec {
    ClassifierKind kind = ClassifierKind::RandomForest;
    std::uint64_t seed = 42;
    OneR::Params one_r;
    NaiveBayes::Params naive_bayes;
    Logistic::Params logistic;
    DecisionTree::Params tree;
    RandomForest::Params forest;
    unsigned jobs = 1;  // threads for forest training

    void validate() const {
        auto fail = [](const std::string& what) { throw InvalidHyperparameters(what); };
        if (one_r.min_bucket < 1) fail("OneR min_bucket must be at least 1");
        if (!(naive_bayes.variance_floor > 0)) fail("NaiveBayes variance floor must be positive");
        if (!(logistic.l2 >= 0)) fail("Logistic l2 must be non-negative");
        if (!(logistic.learning_rate > 0)) fail("Logistic learning rate must be positive");
        if (!(logistic.tolerance > 0)) fail("Logistic tolerance must be positive");
        if (logistic.max_iterations < 1) fail("Logistic needs at least one iteration");
        if (tree.min_leaf < 1) fail("DecisionTree min_leaf must be at least 1");
        if (tree.features_per_split > kFeatureCount) fail("DecisionTree features_per_split exceeds feature count");
        if (forest.tree_count < 1) fail("RandomForest tree_count must be at least 1");
        if (forest.min_leaf < 1) fail("RandomForest min_leaf must be at least 1");
        if (forest.features_per_split < 1 || forest.features_per_split > kFeatureCount) {
            fail("RandomForest features_per_split must be in 1.." + std::to_string(kFeatureCount));
        }
    }
};

/// A trained classifier. Immutable; safe to share across threads.
class Model {
public:
    using Impl = std::variant<OneR, NaiveBayes, Logistic, DecisionTree, RandomForest>;

    explicit Model(Impl impl) : impl_(std::move(impl)) {}

    Label predict(const Features& x) const {
        return std::visit([&](const auto& m) { return m.predict(x); }, impl_);
    }

    const Impl& impl() const { return impl_; }

private:
    Impl impl_;
};

inline Model train(const ClassifierSpec& spec, const TrainingSet& data) {
    spec.validate();
    if (data.size() == 0) throw Error("cannot train on an empty dataset");
    switch (spec.kind) {
        case ClassifierKind::OneR: return Model(OneR::fit(data, spec.one_r));
        case ClassifierKind::NaiveBayes: return Model(NaiveBayes::fit(data, spec.naive_bayes));
        case ClassifierKind::Logistic: return Model(Logistic::fit(data, spec.logistic));
        case ClassifierKind::DecisionTree: return Model(DecisionTree::fit(data, spec.tree, spec.seed));
        case ClassifierKind::RandomForest: return Model(RandomForest::fit(data, spec.forest, spec.seed, spec.jobs));
    }
    throw InvalidHyperparameters("unknown classifier kind");
}

inline Model train(const ClassifierSpec& spec, const dataset::Dataset& ds) {
    return train(spec, TrainingSet::from(ds));
}

}  // namespace plagsim::learn

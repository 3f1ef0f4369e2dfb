#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "nlpkg/classify/survey.hpp"

namespace nlpkg::classify {

struct SurveyPrediction {
    bool label = false;
    double score = 0.0;  // in [0, 1]
};

class ModelNotTrained : public Error {
public:
    using Error::Error;
};

// Pluggable survey / non-survey classifier.
class SurveyClassifier {
public:
    virtual ~SurveyClassifier() = default;
    virtual SurveyPrediction classify(const kg::Publication& pub) const = 0;
    virtual std::string name() const = 0;
};

// Rule fallback: the keyword candidacy test, score 1 or 0.
class KeywordSurveyClassifier final : public SurveyClassifier {
public:
    explicit KeywordSurveyClassifier(std::vector<std::string> phrases = default_survey_phrases())
        : phrases_(std::move(phrases)) {}

    SurveyPrediction classify(const kg::Publication& pub) const override;
    std::string name() const override { return "keyword"; }

private:
    std::vector<std::string> phrases_;
};

struct LabeledExample {
    const kg::Publication* pub = nullptr;
    bool is_survey = false;
};

std::vector<LabeledExample> examples_from_dataset(const SurveyDataset& ds, const kg::Corpus& corpus);

/// Logistic regression over binary stemmed unigram features of the title
/// ("t:" prefix) and abstract ("a:" prefix), trained by seeded SGD with
/// L2 shrinkage and optional class balancing.
class LogisticSurveyClassifier final : public SurveyClassifier {
public:
    struct TrainOptions {
        std::size_t epochs = 30;
        double learning_rate = 0.2;
        double l2 = 1e-4;
        std::uint64_t seed = 13;
        bool balance_classes = true;
        double threshold = 0.5;
    };

    void train(const std::vector<LabeledExample>& examples, const TrainOptions& options);
    void train(const std::vector<LabeledExample>& examples) { train(examples, TrainOptions{}); }

    SurveyPrediction classify(const kg::Publication& pub) const override;  // throws ModelNotTrained
    std::string name() const override { return "logistic"; }
    bool trained() const { return trained_; }

    nlohmann::json to_json() const;
    static LogisticSurveyClassifier from_json(const nlohmann::json& j);

    static std::vector<std::string> features(const kg::Publication& pub);

private:
    double margin(const std::vector<std::string>& feats) const;

    std::unordered_map<std::string, double> weights_;
    double bias_ = 0.0;
    double threshold_ = 0.5;
    bool trained_ = false;
};

struct BinaryScores {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double accuracy = 0.0;
};

BinaryScores evaluate(const SurveyClassifier& model, const std::vector<LabeledExample>& examples);

}  // namespace nlpkg::classify

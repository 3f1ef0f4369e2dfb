#include "nlpkg/classify/survey_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "nlpkg/text/analyzer.hpp"
#include "nlpkg/util/rng.hpp"

namespace nlpkg::classify {

namespace {

double sigmoid(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

}  // namespace

SurveyPrediction KeywordSurveyClassifier::classify(const kg::Publication& pub) const {
    const bool hit = survey_candidate(pub, phrases_);
    return {hit, hit ? 1.0 : 0.0};
}

std::vector<LabeledExample> examples_from_dataset(const SurveyDataset& ds, const kg::Corpus& corpus) {
    std::vector<LabeledExample> out;
    auto add = [&](const std::string& id, bool label) {
        const auto* p = corpus.find(id);
        if (!p) throw UnknownPublication("dataset names unknown publication '" + id + "'");
        out.push_back({p, label});
    };
    for (const auto& id : ds.positives) add(id, true);
    for (const auto& id : ds.negatives) add(id, false);
    return out;
}

std::vector<std::string> LogisticSurveyClassifier::features(const kg::Publication& pub) {
    std::set<std::string> f;
    for (const auto& t : text::analyze(pub.title)) f.insert("t:" + t);
    for (const auto& t : text::analyze(pub.abstract)) f.insert("a:" + t);
    return {f.begin(), f.end()};
}

double LogisticSurveyClassifier::margin(const std::vector<std::string>& feats) const {
    double z = bias_;
    for (const auto& f : feats) {
        if (auto it = weights_.find(f); it != weights_.end()) z += it->second;
    }
    return z;
}

void LogisticSurveyClassifier::train(const std::vector<LabeledExample>& examples, const TrainOptions& options) {
    weights_.clear();
    bias_ = 0.0;
    threshold_ = options.threshold;
    std::vector<std::vector<std::string>> feats;
    feats.reserve(examples.size());
    std::size_t n_pos = 0;
    for (const auto& e : examples) {
        feats.push_back(features(*e.pub));
        n_pos += e.is_survey ? 1 : 0;
    }
    const std::size_t n_neg = examples.size() - n_pos;
    const double pos_weight =
        options.balance_classes && n_pos > 0 ? static_cast<double>(n_neg) / static_cast<double>(n_pos) : 1.0;

    std::vector<std::size_t> order(examples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    StableRng rng(options.seed);
    for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
        rng.shuffle(order);
        const double lr = options.learning_rate / (1.0 + 0.1 * static_cast<double>(epoch));
        for (auto i : order) {
            const double y = examples[i].is_survey ? 1.0 : 0.0;
            const double w = examples[i].is_survey ? pos_weight : 1.0;
            const double g = w * (sigmoid(margin(feats[i])) - y);
            bias_ -= lr * g;
            for (const auto& f : feats[i]) {
                double& wf = weights_[f];
                wf -= lr * (g + options.l2 * wf);
            }
        }
    }
    trained_ = true;
}

SurveyPrediction LogisticSurveyClassifier::classify(const kg::Publication& pub) const {
    if (!trained_) throw ModelNotTrained("survey model has not been trained or loaded");
    const double score = sigmoid(margin(features(pub)));
    return {score >= threshold_, score};
}

nlohmann::json LogisticSurveyClassifier::to_json() const {
    if (!trained_) throw ModelNotTrained("cannot save an untrained survey model");
    // std::map for a stable key order in the file.
    std::map<std::string, double> sorted(weights_.begin(), weights_.end());
    return {{"kind", "logistic"}, {"bias", bias_}, {"threshold", threshold_}, {"weights", sorted}};
}

LogisticSurveyClassifier LogisticSurveyClassifier::from_json(const nlohmann::json& j) {
    if (j.value("kind", "") != "logistic") throw Error("not a logistic survey model");
    LogisticSurveyClassifier m;
    m.bias_ = j.at("bias").get<double>();
    m.threshold_ = j.value("threshold", 0.5);
    for (const auto& [k, v] : j.at("weights").items()) m.weights_.emplace(k, v.get<double>());
    m.trained_ = true;
    return m;
}

BinaryScores evaluate(const SurveyClassifier& model, const std::vector<LabeledExample>& examples) {
    BinaryScores s;
    for (const auto& e : examples) {
        const bool predicted = model.classify(*e.pub).label;
        if (predicted && e.is_survey) ++s.tp;
        else if (predicted) ++s.fp;
        else if (e.is_survey) ++s.fn;
        else ++s.tn;
    }
    const auto ratio = [](std::size_t a, std::size_t b) { return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b); };
    s.precision = ratio(s.tp, s.tp + s.fp);
    s.recall = ratio(s.tp, s.tp + s.fn);
    s.f1 = (s.precision + s.recall) > 0 ? 2 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
    s.accuracy = ratio(s.tp + s.tn, examples.size());
    return s;
}

}  // namespace nlpkg::classify

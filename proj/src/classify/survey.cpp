#include "nlpkg/classify/survey.hpp"

#include <algorithm>
#include <set>

#include "nlpkg/text/normalize.hpp"
#include "nlpkg/util/jsonl.hpp"
#include "nlpkg/util/rng.hpp"

namespace nlpkg::classify {

namespace {

std::string fold_spaces(std::string_view s) {
    std::string out;
    bool space = false;
    for (char c : text::fold(s)) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            space = !out.empty();
            continue;
        }
        if (space) out.push_back(' ');
        space = false;
        out.push_back(c);
    }
    return out;
}

}  // namespace

const std::vector<std::string>& default_survey_phrases() {
    static const std::vector<std::string> phrases{"survey", "a review", "landscape"};
    return phrases;
}

bool survey_candidate(const kg::Publication& pub, const std::vector<std::string>& phrases) {
    const std::string title = fold_spaces(pub.title);
    return std::any_of(phrases.begin(), phrases.end(), [&](const std::string& p) {
        const auto needle = fold_spaces(p);
        return !needle.empty() && title.find(needle) != std::string::npos;
    });
}

SurveyDataset build_survey_dataset(const kg::Corpus& corpus, const std::vector<std::string>& positives,
                                   std::size_t ratio, std::uint64_t seed) {
    const std::set<std::string> pos(positives.begin(), positives.end());
    for (const auto& id : pos) {
        if (!corpus.contains(id)) throw UnknownPublication("positive '" + id + "' is not in the corpus");
    }
    std::vector<std::string> pool;
    for (const auto& p : corpus.publications()) {
        if (!pos.count(p.id)) pool.push_back(p.id);
    }
    std::sort(pool.begin(), pool.end());

    SurveyDataset ds;
    ds.positives.assign(pos.begin(), pos.end());
    ds.seed = seed;
    ds.ratio = ratio;
    const std::size_t wanted = ratio * pos.size();
    const std::size_t take = std::min(wanted, pool.size());
    ds.insufficient_negatives = take < wanted;

    // Partial Fisher-Yates: the first `take` slots become the sample.
    StableRng rng(seed);
    for (std::size_t i = 0; i < take; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    ds.negatives.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
    std::sort(ds.negatives.begin(), ds.negatives.end());
    return ds;
}

void save_survey_dataset(const SurveyDataset& ds, const std::filesystem::path& path) {
    std::vector<nlohmann::json> out;
    for (const auto& id : ds.positives) out.push_back({{"pub_id", id}, {"label", 1}, {"seed", ds.seed}, {"ratio", ds.ratio}});
    for (const auto& id : ds.negatives) out.push_back({{"pub_id", id}, {"label", 0}, {"seed", ds.seed}, {"ratio", ds.ratio}});
    jsonl::write_atomic(path, out);
}

SurveyDataset load_survey_dataset(const std::filesystem::path& path) {
    SurveyDataset ds;
    jsonl::for_each(path, [&](const nlohmann::json& j, std::size_t) {
        const auto id = j.at("pub_id").get<std::string>();
        (j.at("label").get<int>() != 0 ? ds.positives : ds.negatives).push_back(id);
        ds.seed = j.value("seed", ds.seed);
        ds.ratio = j.value("ratio", ds.ratio);
    });
    std::sort(ds.positives.begin(), ds.positives.end());
    std::sort(ds.negatives.begin(), ds.negatives.end());
    ds.insufficient_negatives = ds.negatives.size() < ds.ratio * ds.positives.size();
    return ds;
}

}  // namespace nlpkg::classify

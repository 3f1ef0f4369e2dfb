#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <regex>
#include <sstream>

#include "nlpkg/eval/metrics.hpp"
#include "nlpkg/eval/traces.hpp"
#include "nlpkg/kg/snapshot.hpp"
#include "nlpkg/rag/chat.hpp"
#include "nlpkg/rag/mock_provider.hpp"
#include "nlpkg/rag/prompts.hpp"
#include "nlpkg/search/embedder.hpp"
#include "nlpkg/search/engine.hpp"
#include "nlpkg/util/jsonl.hpp"

using namespace nlpkg;
using namespace nlpkg::eval;

namespace {

const std::string kFixtures = NLPKG_FIXTURES;

double mape_oracle(const std::vector<NavigationTrace>& ts) {
    double s = 0;
    for (const auto& t : ts) {
        s += std::fabs(static_cast<double>(t.total_steps) - static_cast<double>(t.ideal_steps)) /
             static_cast<double>(t.ideal_steps);
    }
    return s / static_cast<double>(ts.size());
}

std::vector<NavigationTrace> random_traces(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> n(1, 40), steps(1, 30);
    std::vector<NavigationTrace> ts(n(rng));
    for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = {"t" + std::to_string(i), steps(rng), steps(rng)};
    return ts;
}

std::filesystem::path scratch(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / ("nlpkg_test_eval_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("mape examples") {
    CHECK(mape({{"a", 2, 2}}) == 0.0);
    CHECK(mape({{"a", 4, 2}}) == 1.0);
    CHECK(mape({{"a", 1, 2}}) == 0.5);
    CHECK(mape({{"a", 3, 2}, {"b", 2, 4}}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(mape({}), EmptyTraces);
    CHECK_THROWS_AS(mape({{"a", 3, 0}}), ZeroIdeal);
}

TEST_CASE("mape agrees with a direct sum and is order and scale invariant") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        auto ts = random_traces(rng);
        const double m = mape(ts);
        CHECK(m == doctest::Approx(mape_oracle(ts)).epsilon(1e-12));
        CHECK(m >= 0.0);
        auto shuffled = ts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(mape(shuffled) == m);
        auto scaled = ts;
        for (auto& t : scaled) {
            t.total_steps *= 3;
            t.ideal_steps *= 3;
        }
        CHECK(mape(scaled) == doctest::Approx(m).epsilon(1e-12));
        auto perfect = ts;
        for (auto& t : perfect) t.total_steps = t.ideal_steps;
        CHECK(mape(perfect) == 0.0);
    }
}

TEST_CASE("relation precision, recall and f1") {
    std::vector<RelationJudgment> j{{"a", "p", Verdict::correct},
                                    {"b", "p", Verdict::correct},
                                    {"c", "p", Verdict::correct},
                                    {"d", "p", Verdict::incorrect},
                                    {"e", "p", Verdict::missing}};
    auto r = relation_prf(j);
    CHECK(r.correct == 3);
    CHECK(r.incorrect == 1);
    CHECK(r.missing == 1);
    CHECK(r.precision == doctest::Approx(0.75));
    CHECK(r.recall == doctest::Approx(0.75));
    CHECK(r.f1 == doctest::Approx(0.75));
    CHECK_FALSE(r.precision_undefined);

    auto only_missing = relation_prf({{"a", "p", Verdict::missing}});
    CHECK(only_missing.precision_undefined);
    CHECK(only_missing.precision == 0.0);
    CHECK(only_missing.recall == 0.0);
    CHECK_FALSE(only_missing.recall_undefined);
    CHECK(only_missing.f1_undefined);

    auto only_wrong = relation_prf({{"a", "p", Verdict::incorrect}});
    CHECK(only_wrong.recall_undefined);
    CHECK(only_wrong.f1_undefined);

    CHECK_THROWS_AS(relation_prf({}), EmptyJudgments);
    CHECK_THROWS_AS(relation_prf({{"a", "p", Verdict::correct}, {"a", "p", Verdict::missing}}), DuplicateJudgment);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RelationJudgment> rs;
        std::uniform_int_distribution<int> v(0, 2), n(1, 30);
        const int count = n(rng);
        for (int i = 0; i < count; ++i) rs.push_back({"c" + std::to_string(i), "p", static_cast<Verdict>(v(rng))});
        auto x = relation_prf(rs);
        for (double m : {x.precision, x.recall, x.f1}) {
            CHECK(m >= 0.0);
            CHECK(m <= 1.0);
        }
        CHECK(x.f1 <= std::max(x.precision, x.recall) + 1e-12);
        CHECK(x.f1 >= std::min(x.precision, x.recall) - 1e-12);
    }
}

TEST_CASE("verdict parsing") {
    for (auto v : {Verdict::correct, Verdict::incorrect, Verdict::missing}) CHECK(parse_verdict(to_string(v)) == v);
    CHECK_THROWS_AS(parse_verdict("maybe"), Error);
}

TEST_CASE("grounding report examples") {
    rag::ChatSession s;
    s.id = "x";
    s.rounds.push_back({{"t"}, {{"P1", ""}, {"P2", ""}}});
    s.messages.push_back({"user", "q", {}, std::nullopt, ""});
    s.messages.push_back({"assistant", "One [1]. Two [2].", {{1, "P1"}, {2, "P2"}}, 0, ""});
    s.messages.push_back({"assistant", "Cited [1]. Not cited.", {{1, "P1"}}, 0, ""});
    s.messages.push_back({"assistant", "Dangling [3].", {}, 0, ""});
    auto g = grounding_report({s});
    CHECK(g.sessions == 1);
    CHECK(g.messages == 3);
    CHECK(g.mean_coverage == doctest::Approx((1.0 + 0.5 + 1.0) / 3.0));
    CHECK(g.percent_valid == doctest::Approx(200.0 / 3.0));

    auto none = grounding_report({});
    CHECK(none.messages == 0);
    CHECK(none.percent_valid == 100.0);
}

TEST_CASE("grounding report over recorded mock sessions matches a marker recount") {
    auto kgs = kg::load_knowledge_graph(kg::DataPaths{kFixtures + "/demo"});
    auto corpus = std::make_shared<const kg::Corpus>(kgs.corpus);
    search::SearchEngine engine(corpus, search::SearchConfig{}, std::make_shared<const search::HashingEmbedder>(256));
    auto mock = rag::MockProvider::from_file(kFixtures + "/mock/demo_script.json");
    rag::ChatEngine chat(engine, mock);
    auto dir = scratch("sessions");
    int n = 0;
    rag::SessionStore store(dir, [] { return std::string("2024-01-01T00:00:00Z"); },
                            [&n] { return "s" + std::to_string(++n); });
    const std::vector<std::string> questions{
        "How can I make language models smaller?", "What helps low-resource translation?",
        "How does dense retrieval work?", "Which methods make pretrained models smaller?",
        "How is translation quality improved?"};
    for (const auto& q : questions) {
        auto s = store.create();
        auto before = s;
        chat.conversational_answer(q, s);
        store.append(before, s);
        before = s;
        chat.conversational_answer("Tell me more about the first one", s);
        store.append(before, s);
    }
    auto sessions = load_sessions(dir);
    REQUIRE(sessions.size() == 5);

    // independent recount from the raw transcript files
    const std::regex marker(R"(\[(\d+(?:\s*,\s*\d+)*)\])");
    std::size_t messages = 0, valid = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        std::size_t round_size = 0;
        jsonl::for_each(e.path(), [&](const nlohmann::json& j, std::size_t) {
            if (j["type"] == "retrieval") round_size = j["docs"].size();
            if (j["type"] != "message" || j["role"] != "assistant") return;
            ++messages;
            bool ok = true;
            const auto text = j["content"].get<std::string>();
            for (std::sregex_iterator it(text.begin(), text.end(), marker), end; it != end; ++it) {
                std::string nums = (*it)[1];
                std::replace(nums.begin(), nums.end(), ',', ' ');
                std::istringstream in(nums);
                for (std::size_t k; in >> k;) ok &= k >= 1 && k <= round_size;
            }
            valid += ok;
        });
    }
    auto g = grounding_report(sessions);
    CHECK(g.sessions == 5);
    CHECK(g.messages == messages);
    CHECK(messages == 10);
    CHECK(g.percent_valid == doctest::Approx(100.0 * static_cast<double>(valid) / static_cast<double>(messages)));
    CHECK(g.percent_valid == 100.0);
    CHECK(g.mean_coverage > 0.0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("trace and judgment files") {
    auto kgs = kg::load_knowledge_graph(kg::DataPaths{kFixtures + "/demo"});
    auto traces = load_traces(kFixtures + "/demo_raw/eval/traces.jsonl", &kgs.fos);
    REQUIRE(traces.size() == 4);
    CHECK(traces[0].ideal_steps == kgs.fos.ideal_steps("dense-retrieval"));
    CHECK(traces[3].ideal_steps == 2);
    CHECK_THROWS_AS(load_traces(kFixtures + "/demo_raw/eval/traces.jsonl"), ParseError);

    auto dir = scratch("io");
    save_traces(traces, dir / "t.jsonl");
    auto back = load_traces(dir / "t.jsonl");
    REQUIRE(back.size() == traces.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(to_json(back[i]) == to_json(traces[i]));
    CHECK(mape(back) == mape(traces));

    jsonl::write_text_atomic(dir / "bad.jsonl", "{\"target\":\"a\",\"total_steps\":2,\"ideal_steps\":1}\n"
                                         "{\"target\":\"b\",\"total_steps\":0,\"ideal_steps\":1}\n");
    CHECK_THROWS_AS(load_traces(dir / "bad.jsonl"), ParseError);

    auto js = load_judgments(kFixtures + "/demo_raw/eval/judgments.jsonl");
    REQUIRE(js.size() == 5);
    CHECK(js[3].verdict == Verdict::incorrect);
    auto r = relation_prf(js);
    CHECK(r.precision == doctest::Approx(0.75));
    CHECK(to_json(r)["f1"].get<double>() == doctest::Approx(0.75));
    CHECK_THROWS_AS(load_sessions(dir / "nope"), IoError);
    std::filesystem::remove_all(dir);
}

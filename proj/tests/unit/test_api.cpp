#include <doctest.h>

#include <httplib.h>

#include <filesystem>
#include <future>
#include <set>
#include <thread>

#include "api_golden.hpp"
#include "golden.hpp"
#include "nlpkg/api/config.hpp"
#include "nlpkg/api/server.hpp"
#include "nlpkg/api/service.hpp"
#include "nlpkg/rag/ask_paper.hpp"
#include "nlpkg/rag/mock_provider.hpp"
#include "nlpkg/util/jsonl.hpp"

using namespace nlpkg;
using namespace nlpkg::api;
using nlpkg::testing::ApiFixture;
using nlohmann::json;

namespace {

const std::string kFixtures = NLPKG_FIXTURES;

void check_known(const json& j, const kg::Corpus& corpus, const std::set<std::string>& keys) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (keys.count(k) && v.is_string()) {
                CAPTURE(k);
                CHECK(corpus.contains(v.get<std::string>()));
            }
            check_known(v, corpus, keys);
        }
    } else if (j.is_array()) {
        for (const auto& v : j) check_known(v, corpus, keys);
    }
}

}  // namespace

TEST_CASE("search endpoint") {
    ApiFixture f("search");
    auto ok = f.get("/search", {{"q", "knowledge distillation"}, {"page_size", "3"}});
    REQUIRE(ok.status == 200);
    CHECK(ok.body["results"].size() == 3);
    CHECK(ok.body["results"][0]["rank"] == 1);
    CHECK(ok.body["total"].get<std::size_t>() >= 3);
    auto page2 = f.get("/search", {{"q", "knowledge distillation"}, {"page_size", "3"}, {"page", "2"}});
    CHECK(page2.body["results"][0]["rank"] == 4);

    CHECK(f.get("/search").status == 400);
    CHECK(f.get("/search", {{"q", "   "}}).status == 400);
    CHECK(f.get("/search", {{"q", "x"}, {"page", "0"}}).status == 400);
    CHECK(f.get("/search", {{"q", "x"}, {"page_size", "1000"}}).status == 400);
    CHECK(f.get("/search", {{"q", "x"}, {"from", "2020"}, {"to", "2010"}}).status == 400);
    CHECK(f.get("/search", {{"q", "x"}, {"survey", "perhaps"}}).status == 400);

    auto surveys = f.get("/search", {{"q", "survey of methods"}, {"survey", "true"}});
    REQUIRE(surveys.status == 200);
    CHECK(surveys.body["total"].get<int>() > 0);
    for (const auto& r : surveys.body["results"]) CHECK(r["is_survey"] == true);

    auto venue = f.get("/search", {{"q", "translation"}, {"venue", "ACL,EMNLP"}, {"from", "2018"}});
    REQUIRE(venue.status == 200);
    for (const auto& r : venue.body["results"]) {
        CHECK((r["venue"] == "ACL" || r["venue"] == "EMNLP"));
        CHECK(r["year"].get<int>() >= 2018);
    }
}

TEST_CASE("field of study endpoints") {
    ApiFixture f("fos");
    auto list = f.get("/fos");
    REQUIRE(list.status == 200);
    CHECK_FALSE(list.body["nodes"].empty());

    auto d = f.get("/fos/multilinguality");
    REQUIRE(d.status == 200);
    CHECK(d.body["name"] == "Multilinguality");
    CHECK(d.body["publications"]["total"] == 7);
    CHECK_FALSE(d.body["publications"]["results"].empty());
    for (const auto& p : d.body["publications"]["results"]) {
        bool tagged = false;
        for (const auto& x : p["fos"]) tagged |= x["id"] == "multilinguality";
        CHECK(tagged);
    }
    CHECK(f.get("/fos/no-such-field").status == 404);
    CHECK(f.get("/fos/no-such-field/subgraph").status == 404);
    CHECK(f.get("/fos/machine-translation/subgraph", {{"depth", "99"}}).status == 400);

    auto sg = f.get("/fos/machine-translation/subgraph", {{"depth", "1"}});
    REQUIRE(sg.status == 200);
    std::set<std::string> ids;
    for (const auto& n : sg.body["nodes"]) ids.insert(n["id"]);
    CHECK(ids.count("machine-translation"));
    for (const auto& e : sg.body["edges"]) {
        CHECK(ids.count(e["child"]));
        CHECK(ids.count(e["parent"]));
    }
}

TEST_CASE("publication and ask endpoints") {
    ApiFixture f("ask");
    auto p = f.get("/publication/P006");
    REQUIRE(p.status == 200);
    CHECK(p.body["has_fulltext"] == true);
    CHECK(p.body["predefined_questions"].size() == 3);
    CHECK(f.get("/publication/NOPE").status == 404);

    auto a = f.post("/publication/P006/ask", {{"predefined_id", 2}});
    REQUIRE(a.status == 200);
    CHECK(a.body["question"] == rag::predefined_question(2));
    CHECK(a.body["predefined_id"] == 2);
    CHECK(a.body["support"].size() == 2);
    CHECK(a.body["followups"].size() == 3);
    CHECK(f.mock->calls().back().back().content == rag::predefined_question(2));

    auto free = f.post("/publication/P006/ask", {{"question", "Which datasets are used?"}});
    CHECK(free.status == 200);
    CHECK(free.body["predefined_id"].is_null());

    CHECK(f.post("/publication/P006/ask", {{"question", "x"}, {"predefined_id", 1}}).status == 400);
    CHECK(f.post("/publication/P006/ask", json::object()).status == 400);
    CHECK(f.post("/publication/P006/ask", {{"predefined_id", 7}}).status == 400);
    CHECK(f.post("/publication/P006/ask", {{"question", "  "}}).status == 400);
    CHECK(f.service->handle({"POST", "/publication/P006/ask", {}, "{not json"}).status == 400);
    auto none = f.post("/publication/P001/ask", {{"question", "What?"}});
    CHECK(none.status == 409);
    CHECK(none.body["error"] == "no_full_text");
    CHECK(f.post("/publication/NOPE/ask", {{"question", "What?"}}).status == 404);
}

TEST_CASE("chat endpoints") {
    ApiFixture f("chat");
    auto created = f.post("/chat/sessions");
    REQUIRE(created.status == 201);
    CHECK(created.body["id"] == "session-1");

    auto m = f.post("/chat/sessions/session-1/messages", {{"text", "How can I make language models smaller?"}});
    REQUIRE(m.status == 200);
    CHECK(m.body["route"] == "new_search");
    CHECK(m.body["retrieved"].size() == 5);
    CHECK(m.body["grounding"]["markers_valid"] == true);
    for (const auto& c : m.body["answer"]["citations"]) {
        auto marker = c["marker"].get<std::size_t>();
        REQUIRE(marker >= 1);
        REQUIRE(marker <= 5);
        CHECK(m.body["retrieved"][marker - 1]["pub_id"] == c["pub_id"]);
    }

    auto follow = f.post("/chat/sessions/session-1/messages", {{"text", "Tell me more about the second one"}});
    REQUIRE(follow.status == 200);
    CHECK(follow.body["route"] == "reuse_context");
    CHECK(follow.body["retrieved"] == m.body["retrieved"]);

    auto s = f.get("/chat/sessions/session-1");
    REQUIRE(s.status == 200);
    CHECK(s.body["messages"].size() == 4);
    CHECK(s.body["rounds"].size() == 1);
    CHECK(s.body["title"] == "How can I make language models smaller?");

    CHECK(f.get("/chat/sessions").body["sessions"].size() == 1);
    CHECK(f.get("/chat/sessions/missing").status == 404);
    CHECK(f.post("/chat/sessions/missing/messages", {{"text", "hi"}}).status == 404);
    CHECK(f.post("/chat/sessions/session-1/messages", {{"txt", "hi"}}).status == 400);
    CHECK(f.get("/nowhere").status == 404);
    CHECK(f.get("/health").body["status"] == "ok");
}

TEST_CASE("responses never reference publications outside the corpus") {
    ApiFixture f("dangling");
    const auto corpus = f.service->snapshot()->corpus;
    const std::set<std::string> keys{"pub_id", "publication_id"};
    for (const auto& q : {"knowledge distillation", "translation", "retrieval", "parsing"}) {
        auto r = f.get("/search", {{"q", q}, {"page_size", "50"}});
        for (const auto& x : r.body["results"]) CHECK(corpus->contains(x["id"].get<std::string>()));
    }
    for (const auto& p : corpus->publications()) {
        auto r = f.get("/publication/" + p.id);
        REQUIRE(r.status == 200);
        for (const auto& ref : r.body["references"]) CHECK(corpus->contains(ref.get<std::string>()));
        CHECK(r.body["references"].size() + r.body["external_references"].get<std::size_t>() == p.cited_ids.size());
    }
    for (const auto& id : f.service->snapshot()->fos.ids()) {
        auto r = f.get("/fos/" + id, {{"page_size", "100"}});
        for (const auto& x : r.body["publications"]["results"]) CHECK(corpus->contains(x["id"].get<std::string>()));
    }
    f.post("/chat/sessions");
    auto m = f.post("/chat/sessions/session-1/messages", {{"text", "What helps translation?"}});
    check_known(m.body, *corpus, keys);
    check_known(f.get("/chat/sessions/session-1").body, *corpus, keys);
}

TEST_CASE("representative responses match the golden files byte for byte") {
    const auto first = testing::api_golden_responses();
    const auto second = testing::api_golden_responses();
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CAPTURE(first[i].first);
        CHECK(first[i].second == second[i].second);
        CHECK(first[i].second == testing::golden(first[i].first, first[i].second));
    }
}

TEST_CASE("cors allowlist") {
    CHECK(cors_origin({"*"}, "http://a.test") == "http://a.test");
    CHECK(cors_origin({"*"}, "") == "*");
    CHECK(cors_origin({"http://a.test"}, "http://a.test") == "http://a.test");
    CHECK(cors_origin({"http://a.test"}, "http://b.test").empty());
    CHECK(cors_origin({}, "http://a.test").empty());
}

TEST_CASE("http server round trip") {
    ApiFixture f("http");
    ApiConfig cfg;
    cfg.port = 0;
    cfg.cors_allowlist = {"http://ui.test"};
    std::promise<std::pair<int, std::function<void()>>> ready;
    std::thread t([&] {
        serve(*f.service, cfg, [&](int port, std::function<void()> stop) { ready.set_value({port, stop}); });
    });
    auto [port, stop] = ready.get_future().get();
    httplib::Client c("127.0.0.1", port);
    auto r = c.Get("/search?q=knowledge%20distillation&page_size=2", {{"Origin", "http://ui.test"}});
    REQUIRE(r);
    CHECK(r->status == 200);
    CHECK(r->get_header_value("Access-Control-Allow-Origin") == "http://ui.test");
    CHECK(r->body == f.get("/search", {{"q", "knowledge distillation"}, {"page_size", "2"}}).dump());

    auto other = c.Get("/health", {{"Origin", "http://evil.test"}});
    REQUIRE(other);
    CHECK_FALSE(other->has_header("Access-Control-Allow-Origin"));

    auto pre = c.Options("/chat/sessions", {{"Origin", "http://ui.test"}});
    REQUIRE(pre);
    CHECK(pre->status == 204);
    CHECK(pre->get_header_value("Access-Control-Allow-Methods").find("POST") != std::string::npos);

    auto created = c.Post("/chat/sessions", "", "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    stop();
    t.join();
}

TEST_CASE("api config") {
    auto dir = testing::api_scratch("cfg");
    std::filesystem::create_directories(dir / "sessions");
    jsonl::write_text_atomic(dir / "api.json", json{{"data_dir", kFixtures + "/demo"},
                                                    {"sessions_dir", "sessions"},
                                                    {"provider_config", kFixtures + "/mock/provider.json"},
                                                    {"port", 9001},
                                                    {"cors_allowlist", {"*"}}}
                                                   .dump());
    auto cfg = load_api_config(dir / "api.json");
    CHECK(cfg.port == 9001);
    CHECK(cfg.sessions_dir == dir / "sessions");
    CHECK_NOTHROW(cfg.validate());
    cfg.data_dir = dir / "missing";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    jsonl::write_text_atomic(dir / "bad.json", "{\"port\": 1}");
    CHECK_THROWS_AS(load_api_config(dir / "bad.json"), ConfigError);
    std::filesystem::remove_all(dir);
}

#include "nlpkg/api/service.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <set>

#include "nlpkg/rag/ask_paper.hpp"
#include "nlpkg/search/embedder.hpp"

namespace nlpkg::api {

using nlohmann::json;

namespace {

class BadRequest : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

ApiResponse error(int status, const std::string& code, const std::string& message) {
    return {status, {{"error", code}, {"message", message}}};
}

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> parts;
    std::size_t i = 0;
    while (i < path.size()) {
        while (i < path.size() && path[i] == '/') ++i;
        auto j = path.find('/', i);
        if (j == std::string::npos) j = path.size();
        if (j > i) parts.push_back(path.substr(i, j - i));
        i = j;
    }
    return parts;
}

std::optional<std::string> param(const ApiRequest& req, const std::string& key) {
    auto it = req.query.find(key);
    if (it == req.query.end()) return std::nullopt;
    return it->second;
}

// Repeated keys and comma-separated values both accumulate.
std::optional<std::set<std::string>> param_set(const ApiRequest& req, const std::string& key) {
    auto [lo, hi] = req.query.equal_range(key);
    if (lo == hi) return std::nullopt;
    std::set<std::string> out;
    for (auto it = lo; it != hi; ++it) {
        std::size_t i = 0;
        const auto& v = it->second;
        while (i <= v.size()) {
            auto j = v.find(',', i);
            if (j == std::string::npos) j = v.size();
            if (j > i) out.insert(v.substr(i, j - i));
            i = j + 1;
        }
    }
    return out;
}

std::int64_t parse_int(const std::string& key, const std::string& v, std::int64_t lo, std::int64_t hi) {
    std::int64_t x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size() || x < lo || x > hi) {
        throw BadRequest("parameter '" + key + "' must be an integer in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    }
    return x;
}

std::optional<std::int64_t> int_param(const ApiRequest& req, const std::string& key, std::int64_t lo,
                                      std::int64_t hi) {
    auto v = param(req, key);
    if (!v) return std::nullopt;
    return parse_int(key, *v, lo, hi);
}

bool bool_param(const ApiRequest& req, const std::string& key) {
    auto v = param(req, key);
    if (!v) return false;
    if (*v == "true" || *v == "1" || v->empty()) return true;
    if (*v == "false" || *v == "0") return false;
    throw BadRequest("parameter '" + key + "' must be true or false");
}

search::FilterSpec filters_from(const ApiRequest& req) {
    search::FilterSpec f;
    f.fos_ids = param_set(req, "fos");
    f.venue_ids = param_set(req, "venue");
    if (auto v = int_param(req, "from", -9999, 9999)) f.year_from = static_cast<int>(*v);
    if (auto v = int_param(req, "to", -9999, 9999)) f.year_to = static_cast<int>(*v);
    f.min_citations = int_param(req, "min_citations", 0, INT64_MAX);
    f.survey_only = bool_param(req, "survey");
    f.validate();
    return f;
}

json fos_ref(const kg::FosGraph& g, const std::string& id) {
    const auto* n = g.find(id);
    return {{"id", id}, {"name", n ? n->name : id}};
}

json pub_summary(const kg::Publication& p, const kg::FosGraph& g) {
    json fos = json::array();
    for (const auto& f : p.fos_ids) fos.push_back(fos_ref(g, f));
    return {{"id", p.id},
            {"title", p.title},
            {"year", p.year},
            {"venue", p.venue},
            {"authors", p.authors},
            {"citation_count", p.citation_count},
            {"is_survey", p.is_survey},
            {"tldr", p.tldr ? json(*p.tldr) : json(nullptr)},
            {"fos", fos}};
}

json facets_json(const search::Facets& f, const kg::FosGraph& g) {
    json years = json::array(), fos = json::array(), authors = json::array();
    for (const auto& y : f.years) years.push_back({{"year", y.year}, {"count", y.count}});
    for (const auto& c : f.fos) {
        auto r = fos_ref(g, c.id);
        r["count"] = c.count;
        fos.push_back(r);
    }
    for (const auto& a : f.authors) authors.push_back({{"name", a.id}, {"count", a.count}});
    return {{"years", years}, {"fos", fos}, {"authors", authors}};
}

json parse_body(const ApiRequest& req) {
    if (req.body.empty()) return json::object();
    try {
        auto j = json::parse(req.body);
        if (!j.is_object()) throw BadRequest("request body must be a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw BadRequest(std::string("malformed JSON body: ") + e.what());
    }
}

json session_summary(const rag::ChatSession& s) {
    std::string title;
    for (const auto& m : s.messages) {
        if (m.role == "user") {
            title = m.content;
            break;
        }
    }
    return {{"id", s.id}, {"created_at", s.created_at}, {"updated_at", s.updated_at}, {"title", title},
            {"messages", s.messages.size()}};
}

json citations_json(const std::vector<rag::Citation>& cites, const kg::Corpus& corpus) {
    json out = json::array();
    for (const auto& c : cites) {
        const auto* p = corpus.find(c.pub_id);
        out.push_back({{"marker", c.marker}, {"pub_id", c.pub_id}, {"title", p ? p->title : ""}});
    }
    return out;
}

}  // namespace

std::string ApiResponse::dump() const { return body.dump() + "\n"; }

std::shared_ptr<const ServiceSnapshot> make_snapshot(kg::KnowledgeGraph kg, const search::SearchConfig& cfg,
                                                     std::shared_ptr<const search::QueryEmbedder> embedder) {
    auto snap = std::make_shared<ServiceSnapshot>();
    snap->fos = std::move(kg.fos);
    snap->corpus = std::make_shared<const kg::Corpus>(std::move(kg.corpus));
    snap->engine = std::make_shared<const search::SearchEngine>(snap->corpus, cfg, std::move(embedder));
    return snap;
}

std::shared_ptr<const ServiceSnapshot> load_snapshot(const std::filesystem::path& data_dir,
                                                     const search::SearchConfig& cfg, std::size_t embedding_dim) {
    auto kg = kg::load_knowledge_graph(kg::DataPaths{data_dir});
    std::shared_ptr<const search::QueryEmbedder> embedder;
    if (kg.corpus.embedding_dim() > 0) {
        if (kg.corpus.embedding_dim() != embedding_dim) {
            throw kg::DimensionMismatch("corpus vectors have dimension " + std::to_string(kg.corpus.embedding_dim()) +
                                        ", query embedder has " + std::to_string(embedding_dim));
        }
        embedder = std::make_shared<search::HashingEmbedder>(embedding_dim);
    }
    return make_snapshot(std::move(kg), cfg, std::move(embedder));
}

ApiService::ApiService(std::shared_ptr<const ServiceSnapshot> snapshot, std::shared_ptr<const rag::LlmProvider> provider,
                       std::shared_ptr<rag::SessionStore> sessions, ServiceOptions opts)
    : snapshot_(std::move(snapshot)), provider_(std::move(provider)), sessions_(std::move(sessions)), opts_(opts) {
    if (!snapshot_.get() || !provider_ || !sessions_) throw Error("api service needs a snapshot, provider and session store");
}

ApiResponse ApiService::handle(const ApiRequest& req) {
    try {
        return route(req);
    } catch (const BadRequest& e) {
        return error(400, "bad_request", e.what());
    } catch (const search::EmptyQuery& e) {
        return error(400, "empty_query", e.what());
    } catch (const search::InvalidFilter& e) {
        return error(400, "bad_request", e.what());
    } catch (const rag::UnknownQuestion& e) {
        return error(400, "bad_request", e.what());
    } catch (const NotFound& e) {
        return error(404, "not_found", e.what());
    } catch (const rag::SessionNotFound& e) {
        return error(404, "not_found", e.what());
    } catch (const rag::NoFullText& e) {
        return error(409, "no_full_text", e.what());
    } catch (const rag::ProviderError& e) {
        return error(502, "provider_error", e.what());
    } catch (const rag::UngroundedCitation& e) {
        return error(502, "ungrounded_citation", e.what());
    } catch (const rag::ReplyFormatError& e) {
        return error(502, "bad_provider_reply", e.what());
    } catch (const std::exception& e) {
        return error(500, "internal", e.what());
    }
}

ApiResponse ApiService::route(const ApiRequest& req) {
    const auto snap = snapshot_.get();
    const auto parts = split_path(req.path);
    const bool get = req.method == "GET", post = req.method == "POST";
    const auto n = parts.size();

    if (n == 1 && parts[0] == "search" && get) return search(req, *snap);
    if (n >= 1 && parts[0] == "fos") {
        if (n == 1 && get) return fos_list(*snap);
        if (n == 2 && get) return fos_detail(parts[1], req, *snap);
        if (n == 3 && parts[2] == "subgraph" && get) return fos_subgraph(parts[1], req, *snap);
    }
    if (n >= 2 && parts[0] == "publication") {
        if (n == 2 && get) return publication(parts[1], *snap);
        if (n == 3 && parts[2] == "ask" && post) return ask(parts[1], req, *snap);
    }
    if (n >= 2 && parts[0] == "chat" && parts[1] == "sessions") {
        if (n == 2 && post) return create_session();
        if (n == 2 && get) return list_sessions();
        if (n == 3 && get) return get_session(parts[2], *snap);
        if (n == 4 && parts[3] == "messages" && post) return post_message(parts[2], req, *snap);
    }
    if (n == 1 && parts[0] == "health" && get) return {200, {{"status", "ok"}, {"publications", snap->corpus->size()}}};
    return error(404, "not_found", "no route for " + req.method + " " + req.path);
}

ApiResponse ApiService::search(const ApiRequest& req, const ServiceSnapshot& snap) {
    auto q = param(req, "q");
    if (!q) throw BadRequest("missing query parameter 'q'");
    search::SearchRequest sr;
    sr.query = *q;
    sr.filters = filters_from(req);
    sr.page = static_cast<std::size_t>(int_param(req, "page", 1, 1000000).value_or(1));
    if (auto ps = int_param(req, "page_size", 1, static_cast<std::int64_t>(opts_.max_page_size))) {
        sr.page_size = static_cast<std::size_t>(*ps);
    }
    const auto page = snap.engine->search(sr);

    json results = json::array();
    for (std::size_t i = 0; i < page.results.size(); ++i) {
        const auto& e = page.results[i];
        auto j = pub_summary(*snap.corpus->find(e.id), snap.fos);
        j["rank"] = (page.page - 1) * page.page_size + i + 1;
        j["score"] = e.score;
        results.push_back(std::move(j));
    }
    return {200,
            {{"query", page.query},
             {"page", page.page},
             {"page_size", page.page_size},
             {"total", page.total},
             {"results", results},
             {"facets", facets_json(page.facets, snap.fos)}}};
}

ApiResponse ApiService::fos_list(const ServiceSnapshot& snap) {
    json nodes = json::array();
    for (const auto& id : snap.fos.ids()) {
        if (!snap.fos.is_first_level(id)) continue;
        const auto& n = snap.fos.node(id);
        nodes.push_back({{"id", id}, {"name", n.name}, {"children", snap.fos.children(id).size()}});
    }
    return {200, {{"nodes", nodes}}};
}

ApiResponse ApiService::fos_detail(const std::string& id, const ApiRequest& req, const ServiceSnapshot& snap) {
    const auto* node = snap.fos.find(id);
    if (!node) throw NotFound("no field of study '" + id + "'");
    auto filters = filters_from(req);
    filters.fos_ids = std::set<std::string>{id};

    search::RankedList hits;
    for (const auto& p : snap.corpus->publications()) {
        if (filters.matches(p)) hits.entries.push_back({p.id, static_cast<double>(p.citation_count), 0, 0});
    }
    std::sort(hits.entries.begin(), hits.entries.end(), [&](const auto& a, const auto& b) {
        const auto* pa = snap.corpus->find(a.id);
        const auto* pb = snap.corpus->find(b.id);
        if (pa->citation_count != pb->citation_count) return pa->citation_count > pb->citation_count;
        if (pa->year != pb->year) return pa->year > pb->year;
        return a.id < b.id;
    });
    const auto facets = search::compute_facets(hits, *snap.corpus);
    const auto page = static_cast<std::size_t>(int_param(req, "page", 1, 1000000).value_or(1));
    const auto page_size = static_cast<std::size_t>(
        int_param(req, "page_size", 1, static_cast<std::int64_t>(opts_.max_page_size)).value_or(20));

    json pubs = json::array();
    for (std::size_t i = (page - 1) * page_size; i < hits.size() && i < page * page_size; ++i) {
        pubs.push_back(pub_summary(*snap.corpus->find(hits.entries[i].id), snap.fos));
    }
    json parents = json::array(), children = json::array();
    for (const auto& p : snap.fos.parents(id)) parents.push_back(fos_ref(snap.fos, p));
    for (const auto& c : snap.fos.children(id)) children.push_back(fos_ref(snap.fos, c));
    const auto fj = facets_json(facets, snap.fos);
    return {200,
            {{"id", node->id},
             {"name", node->name},
             {"tier", kg::to_string(node->tier)},
             {"synonyms", node->synonyms},
             {"description", node->description ? json(*node->description) : json(nullptr)},
             {"parents", parents},
             {"children", children},
             {"yearly_counts", fj["years"]},
             {"top_authors", fj["authors"]},
             {"publications",
              {{"page", page}, {"page_size", page_size}, {"total", hits.size()}, {"results", pubs}}}}};
}

ApiResponse ApiService::fos_subgraph(const std::string& id, const ApiRequest& req, const ServiceSnapshot& snap) {
    if (!snap.fos.contains(id)) throw NotFound("no field of study '" + id + "'");
    const auto depth = static_cast<std::size_t>(
        int_param(req, "depth", 0, static_cast<std::int64_t>(opts_.max_subgraph_depth)).value_or(1));
    const auto sg = snap.fos.subgraph(id, depth);
    json nodes = json::array(), edges = json::array();
    for (const auto& n : sg.nodes) {
        nodes.push_back({{"id", n.id}, {"name", n.name},
                         {"tier", kg::to_string(n.tier)},
                         {"children", snap.fos.children(n.id).size()},
                         {"first_level", snap.fos.is_first_level(n.id)}});
    }
    for (const auto& e : sg.edges) edges.push_back({{"child", e.child}, {"parent", e.parent}});
    return {200, {{"root", sg.root}, {"depth", depth}, {"nodes", nodes}, {"edges", edges}}};
}

ApiResponse ApiService::publication(const std::string& id, const ServiceSnapshot& snap) {
    const auto* p = snap.corpus->find(id);
    if (!p) throw NotFound("no publication '" + id + "'");
    auto j = pub_summary(*p, snap.fos);
    j["abstract"] = p->abstract;
    std::vector<std::string> refs;
    for (const auto& c : p->cited_ids) {
        if (snap.corpus->contains(c)) refs.push_back(c);
    }
    j["references"] = refs;
    j["external_references"] = p->cited_ids.size() - refs.size();
    j["has_fulltext"] = snap.corpus->has_fulltext(*p);
    json qs = json::array();
    for (int i = 1; i <= 3; ++i) qs.push_back({{"id", i}, {"text", rag::predefined_question(i)}});
    j["predefined_questions"] = qs;
    return {200, j};
}

ApiResponse ApiService::ask(const std::string& id, const ApiRequest& req, const ServiceSnapshot& snap) {
    const auto* p = snap.corpus->find(id);
    if (!p) throw NotFound("no publication '" + id + "'");
    const auto body = parse_body(req);
    const bool has_q = body.contains("question") && !body["question"].is_null();
    const bool has_id = body.contains("predefined_id") && !body["predefined_id"].is_null();
    if (has_q == has_id) throw BadRequest("give exactly one of 'question' and 'predefined_id'");
    std::string question;
    json predefined = nullptr;
    if (has_id) {
        if (!body["predefined_id"].is_number_integer()) throw BadRequest("'predefined_id' must be 1, 2 or 3");
        const int qid = body["predefined_id"].get<int>();
        question = rag::predefined_question(qid);
        predefined = qid;
    } else {
        if (!body["question"].is_string()) throw BadRequest("'question' must be a string");
        question = body["question"].get<std::string>();
        if (question.find_first_not_of(" \t\r\n") == std::string::npos) throw BadRequest("'question' is empty");
    }
    if (!snap.corpus->has_fulltext(*p)) throw rag::NoFullText("publication '" + id + "' has no full text");
    const auto a = rag::ask_paper(*snap.corpus, *p, question, *provider_);
    json support = json::array();
    for (const auto& s : a.support) support.push_back({{"text", s.text}, {"section", s.section}, {"page", s.page}});
    return {200,
            {{"publication_id", id},
             {"question", question},
             {"predefined_id", predefined},
             {"answer", a.text},
             {"support", support},
             {"followups", a.followups}}};
}

ApiResponse ApiService::create_session() {
    const auto s = sessions_->create();
    return {201, {{"id", s.id}, {"created_at", s.created_at}, {"messages", json::array()}}};
}

ApiResponse ApiService::list_sessions() {
    json out = json::array();
    for (const auto& s : sessions_->list()) out.push_back(session_summary(s));
    return {200, {{"sessions", out}}};
}

ApiResponse ApiService::get_session(const std::string& id, const ServiceSnapshot& snap) {
    const auto s = sessions_->load(id);
    json messages = json::array();
    for (const auto& m : s.messages) {
        messages.push_back({{"role", m.role}, {"content", m.content}, {"at", m.at},
                            {"citations", citations_json(m.citations, *snap.corpus)},
                            {"round", m.round ? json(*m.round) : json(nullptr)}});
    }
    json rounds = json::array();
    for (const auto& r : s.rounds) {
        json docs = json::array();
        for (std::size_t i = 0; i < r.docs.size(); ++i) {
            const auto* p = snap.corpus->find(r.docs[i].pub_id);
            docs.push_back({{"marker", i + 1}, {"pub_id", r.docs[i].pub_id}, {"title", p ? p->title : ""}});
        }
        rounds.push_back({{"terms", r.terms}, {"docs", docs}});
    }
    auto j = session_summary(s);
    j["messages"] = messages;
    j["rounds"] = rounds;
    return {200, j};
}

ApiResponse ApiService::post_message(const std::string& id, const ApiRequest& req, const ServiceSnapshot& snap) {
    const auto body = parse_body(req);
    if (!body.contains("text") || !body["text"].is_string()) throw BadRequest("body needs a string field 'text'");
    const auto text = body["text"].get<std::string>();

    auto lock = sessions_->lock(id);
    const auto before = sessions_->load(id);
    auto session = before;
    rag::ChatEngine chat(*snap.engine, *provider_, opts_.chat);
    const auto turn = chat.conversational_answer(text, session, sessions_->now());
    sessions_->append(before, session);

    json retrieved = json::array();
    const auto& docs = session.rounds[turn.round].docs;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        const auto* p = snap.corpus->find(docs[i].pub_id);
        retrieved.push_back({{"marker", i + 1}, {"pub_id", docs[i].pub_id}, {"title", p ? p->title : ""}});
    }
    return {200,
            {{"session_id", id},
             {"route", rag::to_string(turn.route)},
             {"terms", turn.terms},
             {"round", turn.round},
             {"retrieved", retrieved},
             {"answer", {{"text", turn.answer.text}, {"citations", citations_json(turn.answer.citations, *snap.corpus)}}},
             {"grounding",
              {{"markers_valid", turn.grounding.markers_valid},
               {"citation_coverage", turn.grounding.citation_coverage}}}}};
}

}  // namespace nlpkg::api

#include "nlpkg/rag/session.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>

#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::rag {

namespace fs = std::filesystem;

namespace {

std::string random_id() {
    std::random_device rd;
    std::uint64_t v = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

nlohmann::json round_json(std::size_t index, const RetrievalRound& r) {
    nlohmann::json docs = nlohmann::json::array();
    for (const auto& d : r.docs) docs.push_back({{"pub_id", d.pub_id}, {"slice", d.slice}});
    return {{"type", "retrieval"}, {"round", index}, {"terms", r.terms}, {"docs", docs}};
}

void append_lines(const fs::path& path, const std::vector<nlohmann::json>& events) {
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw IoError("cannot append to " + path.string());
    for (const auto& e : events) out << e.dump() << '\n';
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

const std::vector<RetrievedDoc>& ChatSession::retrieved_docs() const {
    static const std::vector<RetrievedDoc> none;
    return rounds.empty() ? none : rounds.back().docs;
}

std::vector<std::string> ChatSession::retrieved_ids(std::size_t round) const {
    std::vector<std::string> ids;
    if (round < rounds.size()) {
        for (const auto& d : rounds[round].docs) ids.push_back(d.pub_id);
    }
    return ids;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool valid_session_id(const std::string& id) {
    if (id.empty() || id.size() > 64) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    });
}

nlohmann::json to_json(const ChatMessage& m) {
    nlohmann::json j{{"role", m.role}, {"content", m.content}, {"at", m.at}};
    j["citations"] = nlohmann::json::array();
    for (const auto& c : m.citations) j["citations"].push_back({{"marker", c.marker}, {"pub_id", c.pub_id}});
    j["round"] = m.round ? nlohmann::json(*m.round) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const ChatSession& s) {
    nlohmann::json msgs = nlohmann::json::array();
    for (const auto& m : s.messages) msgs.push_back(to_json(m));
    nlohmann::json rounds = nlohmann::json::array();
    for (std::size_t i = 0; i < s.rounds.size(); ++i) {
        auto r = round_json(i, s.rounds[i]);
        r.erase("type");
        rounds.push_back(std::move(r));
    }
    return {{"id", s.id}, {"created_at", s.created_at}, {"updated_at", s.updated_at},
            {"messages", msgs}, {"rounds", rounds}};
}

ChatSession read_session(const fs::path& path) {
    ChatSession s;
    bool header = false;
    jsonl::for_each(path, [&](const nlohmann::json& e, std::size_t) {
        const auto type = e.at("type").get<std::string>();
        if (type == "session") {
            s.id = e.at("id").get<std::string>();
            s.created_at = e.at("created_at").get<std::string>();
            s.updated_at = s.created_at;
            header = true;
        } else if (type == "retrieval") {
            RetrievalRound r;
            r.terms = e.at("terms").get<std::vector<std::string>>();
            for (const auto& d : e.at("docs")) r.docs.push_back({d.at("pub_id").get<std::string>(), d.value("slice", "")});
            if (e.at("round").get<std::size_t>() != s.rounds.size()) throw Error("retrieval rounds out of order");
            s.rounds.push_back(std::move(r));
        } else if (type == "message") {
            ChatMessage m;
            m.role = e.at("role").get<std::string>();
            m.content = e.at("content").get<std::string>();
            m.at = e.value("at", "");
            for (const auto& c : e.value("citations", nlohmann::json::array())) {
                m.citations.push_back({c.at("marker").get<std::size_t>(), c.at("pub_id").get<std::string>()});
            }
            if (e.contains("round") && !e["round"].is_null()) m.round = e["round"].get<std::size_t>();
            if (!m.at.empty()) s.updated_at = m.at;
            s.messages.push_back(std::move(m));
        } else {
            throw Error("unknown event type '" + type + "'");
        }
    });
    if (!header) throw ParseError(path.string(), 1, "transcript has no session header");
    return s;
}

SessionStore::SessionStore(fs::path dir, Clock clock, IdGen ids)
    : dir_(std::move(dir)), clock_(clock ? std::move(clock) : Clock(utc_timestamp)),
      ids_(ids ? std::move(ids) : IdGen(random_id)) {
    fs::create_directories(dir_);
}

fs::path SessionStore::path_for(const std::string& id) const {
    if (!valid_session_id(id)) throw SessionNotFound("invalid session id '" + id + "'");
    return dir_ / (id + ".jsonl");
}

ChatSession SessionStore::create() {
    ChatSession s;
    std::lock_guard guard(mu_);
    do {
        s.id = ids_();
    } while (fs::exists(path_for(s.id)));
    s.created_at = s.updated_at = clock_();
    append_lines(path_for(s.id), {{{"type", "session"}, {"id", s.id}, {"created_at", s.created_at}}});
    return s;
}

bool SessionStore::exists(const std::string& id) const {
    return valid_session_id(id) && fs::exists(dir_ / (id + ".jsonl"));
}

ChatSession SessionStore::load(const std::string& id) const {
    const auto p = path_for(id);
    if (!fs::exists(p)) throw SessionNotFound("no session '" + id + "'");
    return read_session(p);
}

std::vector<ChatSession> SessionStore::list() const {
    std::vector<ChatSession> out;
    if (!fs::exists(dir_)) return out;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (entry.path().extension() == ".jsonl") out.push_back(read_session(entry.path()));
    }
    std::sort(out.begin(), out.end(), [](const ChatSession& a, const ChatSession& b) {
        if (a.updated_at != b.updated_at) return a.updated_at > b.updated_at;
        return a.id > b.id;
    });
    return out;
}

void SessionStore::append(const ChatSession& before, const ChatSession& updated) {
    if (before.id != updated.id) throw Error("append across different sessions");
    std::vector<nlohmann::json> events;
    for (std::size_t i = before.rounds.size(); i < updated.rounds.size(); ++i) events.push_back(round_json(i, updated.rounds[i]));
    for (std::size_t i = before.messages.size(); i < updated.messages.size(); ++i) {
        auto j = to_json(updated.messages[i]);
        j["type"] = "message";
        events.push_back(std::move(j));
    }
    if (!events.empty()) append_lines(path_for(updated.id), events);
}

std::unique_lock<std::mutex> SessionStore::lock(const std::string& id) {
    std::shared_ptr<std::mutex> m;
    {
        std::lock_guard guard(mu_);
        auto& slot = locks_[id];
        if (!slot) slot = std::make_shared<std::mutex>();
        m = slot;
    }
    return std::unique_lock<std::mutex>(*m);
}

}  // namespace nlpkg::rag

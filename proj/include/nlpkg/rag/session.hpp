#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlpkg/rag/citations.hpp"

namespace nlpkg::rag {

struct RetrievedDoc {
    std::string pub_id;
    std::string slice;  // context body handed to the provider
};

struct RetrievalRound {
    std::vector<std::string> terms;
    std::vector<RetrievedDoc> docs;  // at most 5
};

struct ChatMessage {
    std::string role;  // user | assistant
    std::string content;
    std::vector<Citation> citations;
    std::optional<std::size_t> round;  // index into rounds the answer used
    std::string at;
};

struct ChatSession {
    std::string id;
    std::string created_at;
    std::string updated_at;
    std::vector<ChatMessage> messages;
    std::vector<RetrievalRound> rounds;

    // Documents of the latest round; empty before the first retrieval.
    const std::vector<RetrievedDoc>& retrieved_docs() const;
    std::vector<std::string> retrieved_ids(std::size_t round) const;
};

class SessionNotFound : public Error {
public:
    using Error::Error;
};

// One JSONL transcript per session, <dir>/<id>.jsonl, appended event by
// event: {"type":"session"...}, {"type":"retrieval"...}, {"type":"message"...}.
class SessionStore {
public:
    using Clock = std::function<std::string()>;
    using IdGen = std::function<std::string()>;

    explicit SessionStore(std::filesystem::path dir, Clock clock = {}, IdGen ids = {});

    ChatSession create();
    ChatSession load(const std::string& id) const;
    bool exists(const std::string& id) const;
    std::vector<ChatSession> list() const;  // newest update first

    // Appends what `updated` has beyond `before` (same id).
    void append(const ChatSession& before, const ChatSession& updated);

    // Serializes operations on one session.
    std::unique_lock<std::mutex> lock(const std::string& id);

    std::string now() const { return clock_(); }
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path path_for(const std::string& id) const;

    std::filesystem::path dir_;
    Clock clock_;
    IdGen ids_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<std::mutex>> locks_;
};

ChatSession read_session(const std::filesystem::path& path);

std::string utc_timestamp();

// Valid ids: 1-64 characters of [A-Za-z0-9_-].
bool valid_session_id(const std::string& id);

nlohmann::json to_json(const ChatMessage& m);
nlohmann::json to_json(const ChatSession& s);

}  // namespace nlpkg::rag

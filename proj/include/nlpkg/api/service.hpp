#pragma once

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "nlpkg/kg/snapshot.hpp"
#include "nlpkg/rag/chat.hpp"
#include "nlpkg/rag/provider.hpp"
#include "nlpkg/rag/session.hpp"
#include "nlpkg/search/engine.hpp"

namespace nlpkg::api {

struct ServiceSnapshot {
    kg::FosGraph fos;
    std::shared_ptr<const kg::Corpus> corpus;
    std::shared_ptr<const search::SearchEngine> engine;
};

std::shared_ptr<const ServiceSnapshot> make_snapshot(kg::KnowledgeGraph kg, const search::SearchConfig& cfg,
                                                     std::shared_ptr<const search::QueryEmbedder> embedder);

// Loads the snapshot directory. The hashing embedder is used for queries when
// the corpus carries vectors of dimension `embedding_dim`.
std::shared_ptr<const ServiceSnapshot> load_snapshot(const std::filesystem::path& data_dir,
                                                     const search::SearchConfig& cfg, std::size_t embedding_dim);

struct ApiRequest {
    std::string method = "GET";
    std::string path;
    std::multimap<std::string, std::string> query;
    std::string body;
};

struct ApiResponse {
    int status = 200;
    nlohmann::json body;

    // Compact JSON plus a trailing newline; the exact bytes sent.
    std::string dump() const;
};

struct ServiceOptions {
    rag::ChatOptions chat;
    std::size_t max_page_size = 100;
    std::size_t max_subgraph_depth = 8;
};

// Transport-independent request handling; the http server is a thin shell.
class ApiService {
public:
    ApiService(std::shared_ptr<const ServiceSnapshot> snapshot, std::shared_ptr<const rag::LlmProvider> provider,
               std::shared_ptr<rag::SessionStore> sessions, ServiceOptions opts = {});

    ApiResponse handle(const ApiRequest& req);

    void publish(std::shared_ptr<const ServiceSnapshot> next) { snapshot_.publish(std::move(next)); }
    std::shared_ptr<const ServiceSnapshot> snapshot() const { return snapshot_.get(); }

private:
    ApiResponse route(const ApiRequest& req);
    ApiResponse search(const ApiRequest& req, const ServiceSnapshot& snap);
    ApiResponse fos_list(const ServiceSnapshot& snap);
    ApiResponse fos_detail(const std::string& id, const ApiRequest& req, const ServiceSnapshot& snap);
    ApiResponse fos_subgraph(const std::string& id, const ApiRequest& req, const ServiceSnapshot& snap);
    ApiResponse publication(const std::string& id, const ServiceSnapshot& snap);
    ApiResponse ask(const std::string& id, const ApiRequest& req, const ServiceSnapshot& snap);
    ApiResponse create_session();
    ApiResponse list_sessions();
    ApiResponse get_session(const std::string& id, const ServiceSnapshot& snap);
    ApiResponse post_message(const std::string& id, const ApiRequest& req, const ServiceSnapshot& snap);

    kg::SnapshotStore<ServiceSnapshot> snapshot_;
    std::shared_ptr<const rag::LlmProvider> provider_;
    std::shared_ptr<rag::SessionStore> sessions_;
    ServiceOptions opts_;
};

}  // namespace nlpkg::api

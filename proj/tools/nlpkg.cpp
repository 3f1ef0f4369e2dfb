#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <set>

#include "nlpkg/api/config.hpp"
#include "nlpkg/api/refresh.hpp"
#include "nlpkg/api/server.hpp"
#include "nlpkg/api/service.hpp"
#include "nlpkg/classify/fos_classifier.hpp"
#include "nlpkg/classify/survey.hpp"
#include "nlpkg/classify/survey_model.hpp"
#include "nlpkg/eval/metrics.hpp"
#include "nlpkg/eval/traces.hpp"
#include "nlpkg/ingest/candidates.hpp"
#include "nlpkg/ingest/corpus_loader.hpp"
#include "nlpkg/ingest/curation.hpp"
#include "nlpkg/kg/snapshot.hpp"
#include "nlpkg/rag/ask_paper.hpp"
#include "nlpkg/rag/chat.hpp"
#include "nlpkg/rag/describe.hpp"
#include "nlpkg/search/embedder.hpp"
#include "nlpkg/search/engine.hpp"
#include "nlpkg/util/jsonl.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace nlpkg;

namespace {

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

search::SearchConfig search_config(const std::string& path) {
    return path.empty() ? search::SearchConfig{} : search::load_search_config(path);
}

std::shared_ptr<const search::QueryEmbedder> query_embedder(const kg::Corpus& c) {
    if (c.embedding_dim() == 0) return nullptr;
    return std::make_shared<search::HashingEmbedder>(c.embedding_dim());
}

json pub_line(const kg::Publication& p) {
    return {{"id", p.id}, {"title", p.title}, {"year", p.year}, {"citation_count", p.citation_count},
            {"is_survey", p.is_survey}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NLP literature knowledge graph: ingest, classify, search and converse"};
    app.require_subcommand(1);
    std::string data = "data";

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Load publications or extraction candidates");
    ingest->require_subcommand(1);
    auto* ing_corpus = ingest->add_subcommand("corpus", "Merge a publications JSONL into the snapshot");
    std::string corpus_in;
    bool overwrite = false;
    ing_corpus->add_option("input", corpus_in, "publications JSONL")->required()->check(CLI::ExistingFile);
    ing_corpus->add_option("--data", data, "snapshot directory");
    ing_corpus->add_flag("--overwrite", overwrite, "replace known ids");
    ing_corpus->callback([&] {
        api::RefreshOptions o;
        o.data_dir = data;
        o.incoming = corpus_in;
        o.overwrite = overwrite;
        auto loaded = ingest::load_corpus(corpus_in);
        const auto r = api::refresh(o);
        json dups = json::array();
        for (const auto& d : loaded.report.duplicates) dups.push_back({{"id", d.id}, {"line", d.line}});
        print({{"loaded", loaded.report.loaded}, {"duplicates", dups}, {"added", r.added}, {"updated", r.updated},
               {"embedded", r.embedded}});
    });

    auto* ing_graph = ingest->add_subcommand("graph", "Validate a FoS hierarchy and start a snapshot with it");
    std::string nodes_in, edges_in;
    ing_graph->add_option("nodes", nodes_in, "fos_nodes JSONL")->required()->check(CLI::ExistingFile);
    ing_graph->add_option("edges", edges_in, "fos_edges JSONL")->required()->check(CLI::ExistingFile);
    ing_graph->add_option("--data", data, "snapshot directory");
    ing_graph->callback([&] {
        const auto g = kg::load_fos_graph(nodes_in, edges_in);
        const kg::DataPaths paths{data};
        fs::create_directories(paths.dir);
        kg::save_fos_graph(g, paths.fos_nodes(), paths.fos_edges());
        if (!fs::exists(paths.publications())) jsonl::write_text_atomic(paths.publications(), "");
        const auto s = g.stats();
        print({{"fos", s.n_fos}, {"hyponym_edges", s.n_hyponym_edges}, {"levels", s.max_depth}});
    });

    auto* ing_cand = ingest->add_subcommand("candidates", "Threshold extraction candidates into a curation queue");
    std::string mentions, queue_out;
    ingest::ExtractionThresholds th;
    bool inclusive = false;
    ing_cand->add_option("mentions", mentions, "candidate mentions JSONL")->required()->check(CLI::ExistingFile);
    ing_cand->add_option("--queue", queue_out, "curation queue to write")->required();
    ing_cand->add_option("--t-entities", th.t_entities, "entity count threshold");
    ing_cand->add_option("--t-relations", th.t_relations, "relation count threshold");
    ing_cand->add_flag("--inclusive", inclusive, "keep counts equal to the threshold");
    ing_cand->callback([&] {
        th.strict = !inclusive;
        const auto sets = ingest::filter_candidates(ingest::load_candidates(mentions), th);
        const auto queue = ingest::curation_queue(sets);
        ingest::save_queue(queue, queue_out);
        print({{"entities", sets.entities.size()}, {"relations", sets.relations.size()}, {"queue", queue_out}});
    });

    // curate
    auto* curate = app.add_subcommand("curate", "Accept, correct or reject one curation item");
    std::string queue_path, item_id, correct_child, correct_parent, parent, reject_reason, log_path;
    bool accept = false, list = false;
    curate->add_option("--queue", queue_path, "curation queue")->required()->check(CLI::ExistingFile);
    curate->add_option("--data", data, "snapshot directory");
    curate->add_flag("--list", list, "show pending items");
    curate->add_option("--item", item_id, "item id");
    curate->add_flag("--accept", accept, "accept as proposed");
    curate->add_option("--correct-child", correct_child, "corrected child surface");
    curate->add_option("--correct-parent", correct_parent, "corrected parent surface");
    curate->add_option("--parent", parent, "parent for an accepted entity");
    curate->add_option("--reject", reject_reason, "reject with this reason");
    curate->add_option("--log", log_path, "curation log JSONL");
    curate->callback([&] {
        auto queue = ingest::load_queue(queue_path);
        if (list) {
            json out = json::array();
            for (const auto& it : queue) {
                if (it.status == ingest::CurationStatus::pending) out.push_back(ingest::to_json(it));
            }
            print(out);
            return;
        }
        auto it = std::find_if(queue.begin(), queue.end(), [&](const auto& q) { return q.id == item_id; });
        if (it == queue.end()) throw CLI::ValidationError("--item", "no item '" + item_id + "' in the queue");
        ingest::Decision d;
        const int modes = (accept ? 1 : 0) + (!correct_child.empty() || !correct_parent.empty() ? 1 : 0) +
                          (!reject_reason.empty() ? 1 : 0);
        if (modes != 1) throw CLI::ValidationError("curate", "choose one of --accept, --correct-*, --reject");
        if (accept) d.action = ingest::Decision::Action::accept;
        if (!reject_reason.empty()) {
            d.action = ingest::Decision::Action::reject;
            d.reason = reject_reason;
        }
        if (!correct_child.empty() || !correct_parent.empty()) {
            d.action = ingest::Decision::Action::correct;
            d.correction = ingest::Triple{correct_child, "hyponym-of", correct_parent};
        }
        if (!parent.empty()) d.parent = parent;

        const kg::DataPaths paths{data};
        auto graph = kg::load_fos_graph(paths.fos_nodes(), paths.fos_edges());
        std::optional<ingest::CurationLog> log;
        if (!log_path.empty()) log.emplace(log_path);
        *it = ingest::resolve(*it, d, graph, log ? &*log : nullptr);
        kg::save_fos_graph(graph, paths.fos_nodes(), paths.fos_edges());
        ingest::save_queue(queue, queue_path);
        print(ingest::to_json(*it));
    });

    // classify
    auto* classify = app.add_subcommand("classify", "FoS and survey classification");
    classify->require_subcommand(1);
    auto* cls_fos = classify->add_subcommand("fos", "Label publications with FoS ids");
    std::string labels_path;
    cls_fos->add_option("--data", data, "snapshot directory");
    cls_fos->add_option("--labels", labels_path, "external top-level labels JSONL")->check(CLI::ExistingFile);
    cls_fos->callback([&] {
        const kg::DataPaths paths{data};
        auto kg = kg::load_knowledge_graph(paths);
        classify::ExternalLabels labels;
        if (!labels_path.empty()) labels = classify::load_external_labels(labels_path);
        const auto r = classify::classify_corpus(kg.corpus, kg.fos, labels);
        kg::save_publications(kg.corpus, paths.publications());
        print({{"publications", r.publications}, {"changed", r.changed}, {"labelled", r.labelled}});
    });

    auto* cls_survey = classify->add_subcommand("survey", "Survey dataset, training and tagging");
    std::string build_out, train_ds, model_path, apply_model, eval_ds, positives_path;
    std::size_t ratio = 15;
    std::uint64_t seed = 13;
    bool candidates_only = false;
    cls_survey->add_option("--data", data, "snapshot directory");
    cls_survey->add_option("--build-dataset", build_out, "write a survey dataset here");
    cls_survey->add_option("--positives", positives_path, "file with one positive pub id per line")
        ->check(CLI::ExistingFile);
    cls_survey->add_option("--ratio", ratio, "negatives per positive");
    cls_survey->add_option("--seed", seed, "sampling / training seed");
    cls_survey->add_flag("--candidates", candidates_only, "list keyword candidates");
    cls_survey->add_option("--train", train_ds, "train on this dataset")->check(CLI::ExistingFile);
    cls_survey->add_option("--model", model_path, "model file (written by --train, read by --evaluate)");
    cls_survey->add_option("--evaluate", eval_ds, "score a dataset with --model and the keyword rule")
        ->check(CLI::ExistingFile);
    cls_survey->add_option("--apply", apply_model, "set is_survey with this model")->check(CLI::ExistingFile);
    cls_survey->callback([&] {
        const kg::DataPaths paths{data};
        auto corpus = kg::load_publications(paths.publications());
        if (candidates_only) {
            json out = json::array();
            for (const auto& p : corpus.publications()) {
                if (classify::survey_candidate(p)) out.push_back(pub_line(p));
            }
            print(out);
        } else if (!build_out.empty()) {
            std::vector<std::string> pos;
            if (!positives_path.empty()) {
                std::istringstream in(jsonl::read_text(positives_path));
                for (std::string line; std::getline(in, line);) {
                    if (!line.empty()) pos.push_back(line);
                }
            } else {
                for (const auto& p : corpus.publications()) {
                    if (classify::survey_candidate(p)) pos.push_back(p.id);
                }
            }
            if (pos.empty()) throw Error("no positive publications to build a dataset from");
            const auto ds = classify::build_survey_dataset(corpus, pos, ratio, seed);
            classify::save_survey_dataset(ds, build_out);
            print({{"positives", ds.positives.size()}, {"negatives", ds.negatives.size()},
                   {"insufficient_negatives", ds.insufficient_negatives}, {"seed", seed}});
        } else if (!train_ds.empty()) {
            if (model_path.empty()) throw CLI::ValidationError("--model", "--train needs --model");
            const auto ds = classify::load_survey_dataset(train_ds);
            classify::LogisticSurveyClassifier m;
            classify::LogisticSurveyClassifier::TrainOptions o;
            o.seed = seed;
            m.train(classify::examples_from_dataset(ds, corpus), o);
            jsonl::write_text_atomic(model_path, m.to_json().dump() + "\n");
            print({{"model", model_path}, {"examples", ds.positives.size() + ds.negatives.size()}});
        } else if (!eval_ds.empty()) {
            if (model_path.empty()) throw CLI::ValidationError("--model", "--evaluate needs --model");
            const auto ds = classify::load_survey_dataset(eval_ds);
            const auto ex = classify::examples_from_dataset(ds, corpus);
            const auto m = classify::LogisticSurveyClassifier::from_json(json::parse(jsonl::read_text(model_path)));
            const auto a = classify::evaluate(m, ex);
            const auto b = classify::evaluate(classify::KeywordSurveyClassifier{}, ex);
            print({{"logistic", {{"precision", a.precision}, {"recall", a.recall}, {"f1", a.f1}}},
                   {"keyword", {{"precision", b.precision}, {"recall", b.recall}, {"f1", b.f1}}}});
        } else if (!apply_model.empty()) {
            const auto m = classify::LogisticSurveyClassifier::from_json(json::parse(jsonl::read_text(apply_model)));
            std::size_t n = 0;
            for (auto& p : corpus.publications_mutable()) {
                p.is_survey = m.classify(p).label;
                n += p.is_survey ? 1 : 0;
            }
            kg::save_publications(corpus, paths.publications());
            print({{"surveys", n}, {"publications", corpus.size()}});
        } else {
            throw CLI::ValidationError("survey", "choose --candidates, --build-dataset, --train, --evaluate or --apply");
        }
    });

    // index
    auto* index = app.add_subcommand("index", "Search indices");
    index->require_subcommand(1);
    auto* idx_build = index->add_subcommand("build", "Embed publications that lack a vector");
    std::size_t dim = 256;
    bool reembed = false;
    idx_build->add_option("--data", data, "snapshot directory");
    idx_build->add_option("--dim", dim, "hashing embedder dimension");
    idx_build->add_flag("--force", reembed, "recompute every vector");
    idx_build->callback([&] {
        const kg::DataPaths paths{data};
        auto kg = kg::load_knowledge_graph(paths);
        if (kg.corpus.embedding_dim() && kg.corpus.embedding_dim() != dim && !reembed) {
            throw CLI::ValidationError("--dim", "snapshot vectors have dimension " +
                                                    std::to_string(kg.corpus.embedding_dim()) + "; use --force");
        }
        const search::HashingEmbedder e(dim);
        kg::Corpus rebuilt(kg.corpus.base_dir());
        std::size_t n = 0;
        for (auto p : kg.corpus.publications()) {
            if (reembed || !p.embedding) {
                p.embedding = search::embed_publication(e, p);
                ++n;
            }
            rebuilt.add(std::move(p));
        }
        kg.corpus = std::move(rebuilt);
        kg::save_embeddings(kg.corpus, paths.embeddings());
        const auto b = search::Bm25Index::build(kg.corpus);
        print({{"embedded", n}, {"dim", dim}, {"documents", b.num_docs()}, {"avgdl", b.avgdl()}});
    });

    // search
    auto* srch = app.add_subcommand("search", "Hybrid search");
    std::string query, cfg_path;
    search::FilterSpec filters;
    std::vector<std::string> fos_filter, venue_filter;
    int year_from = 0, year_to = 0;
    std::int64_t min_cit = -1;
    std::size_t page = 1;
    srch->add_option("query", query, "query text")->required();
    srch->add_option("--data", data, "snapshot directory");
    srch->add_option("--config", cfg_path, "search config JSON")->check(CLI::ExistingFile);
    srch->add_flag("--survey", filters.survey_only, "surveys only");
    auto* from_opt = srch->add_option("--from", year_from, "first year");
    auto* to_opt = srch->add_option("--to", year_to, "last year");
    auto* cit_opt = srch->add_option("--min-citations", min_cit, "minimum citation count");
    auto* fos_opt = srch->add_option("--fos", fos_filter, "FoS ids (any)");
    auto* venue_opt = srch->add_option("--venue", venue_filter, "venues (any)");
    srch->add_option("--page", page, "1-based page");
    srch->callback([&] {
        if (*from_opt) filters.year_from = year_from;
        if (*to_opt) filters.year_to = year_to;
        if (*cit_opt) filters.min_citations = min_cit;
        if (*fos_opt) filters.fos_ids = std::set<std::string>(fos_filter.begin(), fos_filter.end());
        if (*venue_opt) filters.venue_ids = std::set<std::string>(venue_filter.begin(), venue_filter.end());
        auto kg = kg::load_knowledge_graph(kg::DataPaths{data});
        auto corpus = std::make_shared<const kg::Corpus>(std::move(kg.corpus));
        const search::SearchEngine engine(corpus, search_config(cfg_path), query_embedder(*corpus));
        const auto res = engine.search({query, filters, page, std::nullopt, std::nullopt});
        json out = json::array();
        for (const auto& e : res.results) {
            auto j = pub_line(*corpus->find(e.id));
            j["score"] = e.score;
            out.push_back(j);
        }
        json years = json::array();
        for (const auto& y : res.facets.years) years.push_back({{"year", y.year}, {"count", y.count}});
        print({{"total", res.total}, {"page", res.page}, {"results", out}, {"years", years}});
    });

    // eval
    auto* ev = app.add_subcommand("eval", "Evaluation metrics");
    ev->require_subcommand(1);
    std::string eval_in, graph_dir;
    auto* ev_mape = ev->add_subcommand("mape", "Navigation error over traces");
    ev_mape->add_option("traces", eval_in, "traces JSONL")->required()->check(CLI::ExistingFile);
    ev_mape->add_option("--data", graph_dir, "snapshot whose graph fills missing ideal_steps");
    ev_mape->callback([&] {
        std::optional<kg::FosGraph> g;
        if (!graph_dir.empty()) {
            const kg::DataPaths p{graph_dir};
            g = kg::load_fos_graph(p.fos_nodes(), p.fos_edges());
        }
        const auto traces = eval::load_traces(eval_in, g ? &*g : nullptr);
        print({{"traces", traces.size()}, {"mape", eval::mape(traces)}});
    });
    auto* ev_rel = ev->add_subcommand("relations", "Precision, recall and F1 of judged relations");
    ev_rel->add_option("judgments", eval_in, "judgments JSONL")->required()->check(CLI::ExistingFile);
    ev_rel->callback([&] { print(eval::to_json(eval::relation_prf(eval::load_judgments(eval_in)))); });
    auto* ev_gr = ev->add_subcommand("grounding", "Citation grounding over chat transcripts");
    ev_gr->add_option("sessions", eval_in, "session directory")->required()->check(CLI::ExistingDirectory);
    ev_gr->callback([&] { print(eval::to_json(eval::grounding_report(eval::load_sessions(eval_in)))); });

    // serve / refresh
    auto* serve = app.add_subcommand("serve", "Run the HTTP API");
    std::string api_cfg;
    int rc = 0;
    serve->add_option("--config", api_cfg, "api config JSON")->required()->check(CLI::ExistingFile);
    serve->callback([&] { rc = api::run_server(api::load_api_config(api_cfg)); });

    auto* refresh = app.add_subcommand("refresh", "Fold newly fetched publications into the snapshot");
    api::RefreshOptions ro;
    std::string ro_labels, ro_model;
    refresh->add_option("--data", ro.data_dir, "snapshot directory")->required();
    refresh->add_option("--incoming", ro.incoming, "new publications JSONL")->required()->check(CLI::ExistingFile);
    refresh->add_option("--labels", ro_labels, "external top-level labels")->check(CLI::ExistingFile);
    refresh->add_option("--survey-model", ro_model, "logistic survey model")->check(CLI::ExistingFile);
    refresh->add_flag("--overwrite", ro.overwrite, "replace known ids");
    refresh->callback([&] {
        if (!ro_labels.empty()) ro.external_labels = ro_labels;
        if (!ro_model.empty()) ro.survey_model = ro_model;
        const auto r = api::refresh(ro);
        print({{"added", r.added}, {"updated", r.updated}, {"reclassified", r.reclassified}, {"surveys", r.surveys},
               {"embedded", r.embedded}, {"fulltexts_copied", r.fulltexts_copied}});
    });

    // describe / chat / ask
    std::string provider_cfg;
    auto* describe = app.add_subcommand("describe", "Generate short FoS descriptions");
    std::vector<std::string> ids;
    bool force = false;
    describe->add_option("--data", data, "snapshot directory");
    describe->add_option("--provider", provider_cfg, "provider config")->required()->check(CLI::ExistingFile);
    describe->add_option("--id", ids, "only these FoS ids");
    describe->add_flag("--force", force, "replace existing descriptions");
    describe->callback([&] {
        const kg::DataPaths paths{data};
        auto graph = kg::load_fos_graph(paths.fos_nodes(), paths.fos_edges());
        const auto provider = rag::make_provider(rag::load_provider_config(provider_cfg));
        const auto r = rag::describe_all(graph, *provider, ids, force);
        kg::save_fos_graph(graph, paths.fos_nodes(), paths.fos_edges());
        print({{"described", r.described}, {"skipped", r.skipped}});
    });

    auto* chat = app.add_subcommand("chat", "Send one message to a chat session");
    std::string sessions_dir = "sessions", session_id, message;
    chat->add_option("message", message, "message text")->required();
    chat->add_option("--data", data, "snapshot directory");
    chat->add_option("--provider", provider_cfg, "provider config")->required()->check(CLI::ExistingFile);
    chat->add_option("--sessions", sessions_dir, "session directory");
    chat->add_option("--session", session_id, "continue this session");
    chat->callback([&] {
        auto kg = kg::load_knowledge_graph(kg::DataPaths{data});
        auto corpus = std::make_shared<const kg::Corpus>(std::move(kg.corpus));
        const search::SearchEngine engine(corpus, {}, query_embedder(*corpus));
        const auto provider = rag::make_provider(rag::load_provider_config(provider_cfg));
        rag::SessionStore store(sessions_dir);
        auto before = session_id.empty() ? store.create() : store.load(session_id);
        auto s = before;
        const rag::ChatEngine ce(engine, *provider);
        const auto turn = ce.conversational_answer(message, s, store.now());
        store.append(before, s);
        print({{"session_id", s.id}, {"route", rag::to_string(turn.route)}, {"terms", turn.terms},
               {"answer", rag::to_json(turn.answer)}});
    });

    auto* ask = app.add_subcommand("ask", "Ask a question about one publication");
    std::string pub_id, question;
    int predefined = 0;
    ask->add_option("pub_id", pub_id, "publication id")->required();
    ask->add_option("--data", data, "snapshot directory");
    ask->add_option("--provider", provider_cfg, "provider config")->required()->check(CLI::ExistingFile);
    auto* q_opt = ask->add_option("--question", question, "free-text question");
    auto* p_opt = ask->add_option("--predefined", predefined, "predefined question 1-3");
    q_opt->excludes(p_opt);
    ask->callback([&] {
        if (!*q_opt && !*p_opt) throw CLI::ValidationError("ask", "give --question or --predefined");
        auto corpus = kg::load_publications(kg::DataPaths{data}.publications());
        const auto* p = corpus.find(pub_id);
        if (!p) throw CLI::ValidationError("pub_id", "unknown publication '" + pub_id + "'");
        const auto provider = rag::make_provider(rag::load_provider_config(provider_cfg));
        const auto q = *p_opt ? rag::predefined_question(predefined) : question;
        print(rag::to_json(rag::ask_paper(corpus, *p, q, *provider)));
    });

    auto* stats = app.add_subcommand("stats", "Hierarchy statistics");
    stats->add_option("--data", data, "snapshot directory");
    stats->callback([&] {
        const kg::DataPaths p{data};
        const auto s = kg::load_fos_graph(p.fos_nodes(), p.fos_edges()).stats();
        print({{"fos", s.n_fos}, {"hyponym_edges", s.n_hyponym_edges}, {"levels", s.max_depth}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const nlpkg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

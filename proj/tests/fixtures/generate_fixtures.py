#!/usr/bin/env python3
"""Writes the deterministic test fixtures under tests/fixtures.

Needs nltk for the stemmer oracle. Re-running produces identical files.
The demo snapshot (tests/fixtures/demo) is built from demo_raw by
build_demo.sh with the nlpkg binary afterwards.
"""

import json
import math
import random
import re
from collections import Counter
from pathlib import Path

from nltk.stem.porter import PorterStemmer

HERE = Path(__file__).resolve().parent
STEMMER = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)


def write_jsonl(path, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for r in rows:
            f.write(json.dumps(r, ensure_ascii=False, sort_keys=True) + "\n")


def write_json(path, obj):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(obj, f, indent=2, sort_keys=True, ensure_ascii=False)
        f.write("\n")


def stem(word):
    # repeated until stable, words of one or two letters untouched
    if len(word) <= 2 or not word.isalpha():
        return word
    prev = word
    for _ in range(16):
        if len(prev) <= 2:
            return prev
        cur = STEMMER.stem(prev)
        if cur == prev:
            return cur
        prev = cur
    return prev


def analyze(text):
    text = re.sub(r"(?<=[a-z0-9])'(?=[a-z0-9])", "", text.lower())
    return [stem(t) for t in re.findall(r"[a-z0-9]+", text)]


# ---------------------------------------------------------------- hierarchy

def hierarchy():
    rng = random.Random(421)
    sizes = [12, 70, 110, 105, 70, 38, 16]
    assert sum(sizes) == 421
    levels, nodes, n = [], [], 0
    for depth, size in enumerate(sizes):
        ids = []
        for i in range(size):
            n += 1
            fid = f"h{n:03d}"
            ids.append(fid)
            nodes.append({
                "id": fid,
                "name": f"topic {depth + 1}-{i + 1:03d}",
                "synonyms": [],
                "tier": "top_level" if depth < 2 else "extended",
            })
        levels.append(ids)
    edges = set()
    for depth in range(1, len(levels)):
        for child in levels[depth]:
            edges.add((child, rng.choice(levels[depth - 1])))
    assert len(edges) == 409
    while len(edges) < 530:
        depth = rng.randrange(1, len(levels))
        edges.add((rng.choice(levels[depth]), rng.choice(levels[depth - 1])))
    write_jsonl(HERE / "hierarchy" / "fos_nodes.jsonl", nodes)
    write_jsonl(HERE / "hierarchy" / "fos_edges.jsonl",
                [{"child": c, "parent": p} for c, p in sorted(edges)])


# ---------------------------------------------------------------- bm25

BM25_DOCS = [
    {"id": "d1", "title": "Neural machine translation",
     "abstract": "We translate text with a neural network and attention."},
    {"id": "d2", "title": "Dependency parsing with graph networks",
     "abstract": "A graph based parser for dependency trees. The parser is fast and the graph is sparse."},
    {"id": "d3", "title": "Statistical machine translation revisited",
     "abstract": "Phrase tables and language models for translation between many languages."},
]

BM25_QUERIES = [
    "neural translation",
    "graph parser",
    "machine translation",
    "dependency trees attention",
    "languages",
    "unrelated query words",
]


def bm25_oracle(docs, query, k1=1.2, b=0.75):
    toks = {d["id"]: analyze(d["title"]) + analyze(d["abstract"]) for d in docs}
    n_docs = len(docs)
    avgdl = sum(len(t) for t in toks.values()) / n_docs
    terms = sorted(set(analyze(query)))
    out = {}
    for did, t in toks.items():
        tf = Counter(t)
        s = 0.0
        for term in terms:
            if tf[term] == 0:
                continue
            df = sum(1 for x in toks.values() if term in x)
            idf = math.log(1.0 + (n_docs - df + 0.5) / (df + 0.5))
            f = tf[term]
            s += idf * f * (k1 + 1) / (f + k1 * (1 - b + b * len(t) / avgdl))
        if s > 0:
            out[did] = s
    return out


def bm25():
    write_jsonl(HERE / "bm25" / "publications.jsonl",
                [dict(d, year=2020, venue="ACL", authors=[], citation_count=0) for d in BM25_DOCS])
    expected = [{"query": q, "scores": bm25_oracle(BM25_DOCS, q)} for q in BM25_QUERIES]
    write_json(HERE / "bm25" / "expected.json", {"k1": 1.2, "b": 0.75, "queries": expected})


# ---------------------------------------------------------------- demo

DEMO_FOS = [
    # id, name, tier, parents, synonyms
    ("semantic-text-processing", "Semantic Text Processing", "top_level", [], []),
    ("syntactic-text-processing", "Syntactic Text Processing", "top_level", [], []),
    ("multilinguality", "Multilinguality", "top_level", [], []),
    ("natural-language-interfaces", "Natural Language Interfaces", "top_level", [], []),
    ("information-retrieval", "Information Retrieval", "top_level", [], ["IR"]),
    ("responsible-nlp", "Responsible NLP", "top_level", [], []),
    ("text-generation", "Text Generation", "top_level", [], []),
    ("representation-learning", "Representation Learning", "top_level", ["semantic-text-processing"], []),
    ("information-extraction", "Information Extraction", "top_level", ["semantic-text-processing"], []),
    ("machine-translation", "Machine Translation", "top_level", ["multilinguality", "text-generation"], ["MT"]),
    ("question-answering", "Question Answering", "top_level", ["natural-language-interfaces"], ["QA"]),
    ("syntactic-parsing", "Syntactic Parsing", "top_level", ["syntactic-text-processing"], []),
    ("summarization", "Summarization", "top_level", ["text-generation"], []),
    ("word-embeddings", "Word Embeddings", "extended", ["representation-learning"], ["word vectors"]),
    ("language-models", "Language Models", "extended", ["representation-learning"], ["language modeling"]),
    ("knowledge-distillation", "Knowledge Distillation", "extended", ["language-models"], []),
    ("dependency-parsing", "Dependency Parsing", "extended", ["syntactic-parsing"], []),
    ("constituency-parsing", "Constituency Parsing", "extended", ["syntactic-parsing"], []),
    ("neural-machine-translation", "Neural Machine Translation", "extended", ["machine-translation"], ["NMT"]),
    ("low-resource-machine-translation", "Low-Resource Machine Translation", "extended",
     ["machine-translation"], []),
    ("open-domain-question-answering", "Open-Domain Question Answering", "extended",
     ["question-answering", "information-retrieval"], []),
    ("dense-retrieval", "Dense Retrieval", "extended", ["information-retrieval"], []),
    ("abstractive-summarization", "Abstractive Summarization", "extended", ["summarization"], []),
    ("named-entity-recognition", "Named Entity Recognition", "extended", ["information-extraction"], ["NER"]),
    ("bias-mitigation", "Bias Mitigation", "extended", ["responsible-nlp"], ["debiasing"]),
]

# title, abstract, year, venue, citations, top-level label for the external step
DEMO_PUBS = [
    ("Static Word Embeddings from Co-occurrence Statistics",
     "We learn word embeddings from global co-occurrence counts and evaluate them on analogy tasks.",
     2014, "EMNLP", 5400, "semantic-text-processing"),
    ("Subword Information for Word Embeddings",
     "Character n-grams improve word embeddings for rare and morphologically rich words.",
     2017, "TACL", 3100, "semantic-text-processing"),
    ("Evaluating Word Embeddings on Similarity Benchmarks",
     "A comparison of intrinsic evaluations of word vectors shows weak correlation with downstream tasks.",
     2016, "ACL", 210, "semantic-text-processing"),
    ("Deep Contextual Language Models for Transfer",
     "Pretrained language models produce contextual representations that transfer to many tasks.",
     2018, "NAACL", 9800, "semantic-text-processing"),
    ("Scaling Language Models with Sparse Experts",
     "Mixture of experts layers let language models grow in capacity at constant compute.",
     2021, "ICML", 870, "semantic-text-processing"),
    ("Knowledge Distillation for Compact Language Models",
     "A small student network learns from the output distribution of a large teacher language model.",
     2019, "NeurIPS", 2300, "semantic-text-processing"),
    ("Task-Specific Knowledge Distillation of Transformers",
     "We distill fine-tuned transformers into shallow students and keep most of the accuracy.",
     2020, "EMNLP", 640, "semantic-text-processing"),
    ("Quantization and Pruning of Pretrained Encoders",
     "Model compression through low-bit weights and structured pruning reduces memory with little loss.",
     2021, "ACL", 150, "semantic-text-processing"),
    ("A Survey of Knowledge Distillation in NLP",
     "We review distillation objectives, student architectures and evaluation practice across tasks.",
     2022, "CSUR", 120, "semantic-text-processing"),
    ("Transition-Based Dependency Parsing with Stack Networks",
     "A transition system with recurrent stack encoders yields fast and accurate dependency parsing.",
     2015, "ACL", 1200, "syntactic-text-processing"),
    ("Graph-Based Dependency Parsing with Biaffine Attention",
     "Biaffine classifiers score arcs and labels for graph-based dependency parsing.",
     2017, "ICLR", 1900, "syntactic-text-processing"),
    ("Constituency Parsing with a Self-Attentive Encoder",
     "Replacing recurrent encoders with self-attention improves constituency parsing accuracy.",
     2018, "ACL", 700, "syntactic-text-processing"),
    ("Unsupervised Constituency Parsing from Raw Text",
     "We induce phrase structure trees without treebank supervision using a compound grammar.",
     2019, "ACL", 260, "syntactic-text-processing"),
    ("Cross-Lingual Dependency Parsing for Low-Resource Languages",
     "Delexicalized transfer and multilingual encoders enable dependency parsing without target treebanks.",
     2020, "EMNLP", 90, "syntactic-text-processing"),
    ("Attention-Based Neural Machine Translation",
     "An encoder-decoder with attention learns to align and translate jointly.",
     2015, "ICLR", 15000, "multilinguality"),
    ("Transformer Models for Neural Machine Translation",
     "Self-attention replaces recurrence and speeds up training for neural machine translation.",
     2017, "NeurIPS", 60000, "multilinguality"),
    ("Back-Translation for Low-Resource Machine Translation",
     "Synthetic parallel data from monolingual text improves low-resource machine translation.",
     2016, "ACL", 2600, "multilinguality"),
    ("Massively Multilingual Machine Translation",
     "One model translates between one hundred languages and helps low-resource pairs through transfer.",
     2019, "NAACL", 800, "multilinguality"),
    ("Evaluating Machine Translation with Learned Metrics",
     "Learned metrics correlate better with human judgments of translation quality than string overlap.",
     2020, "WMT", 330, "multilinguality"),
    ("A Review of Low-Resource Machine Translation",
     "This review covers data augmentation, transfer learning and unsupervised methods for low-resource translation.",
     2023, "CSUR", 45, "multilinguality"),
    ("Reading Comprehension as Question Answering",
     "Span extraction models answer questions about a given paragraph.",
     2016, "EMNLP", 4100, "natural-language-interfaces"),
    ("Open-Domain Question Answering with Retrieval",
     "A retriever selects passages from a large collection and a reader extracts the answer.",
     2017, "ACL", 1700, "natural-language-interfaces"),
    ("Dense Passage Retrieval for Open-Domain Question Answering",
     "Dual encoders trained on question passage pairs outperform sparse retrieval for open-domain question answering.",
     2020, "EMNLP", 2900, "information-retrieval"),
    ("Retrieval-Augmented Generation for Knowledge-Intensive Tasks",
     "A generator conditions on retrieved documents to answer open questions with fewer hallucinations.",
     2020, "NeurIPS", 3500, "natural-language-interfaces"),
    ("Multi-Hop Question Answering over Knowledge Graphs",
     "We answer complex questions by walking relation paths in a knowledge graph.",
     2018, "AAAI", 400, "natural-language-interfaces"),
    ("BM25 Strikes Back: Sparse Baselines for Retrieval",
     "Well tuned sparse retrieval remains a strong baseline for passage ranking.",
     2021, "SIGIR", 110, "information-retrieval"),
    ("Hybrid Sparse and Dense Retrieval with Rank Fusion",
     "Reciprocal rank fusion of lexical and dense retrieval results improves recall on scholarly search.",
     2022, "ECIR", 60, "information-retrieval"),
    ("Dense Retrieval with Hard Negative Mining",
     "Hard negatives drawn from an approximate index improve dense retrieval training.",
     2021, "ICLR", 900, "information-retrieval"),
    ("Learning to Rank Scientific Publications",
     "Citation counts and recency features rerank candidate publications for literature search.",
     2019, "JCDL", 75, "information-retrieval"),
    ("Abstractive Summarization with Pointer-Generator Networks",
     "A copy mechanism lets abstractive summarization reproduce rare words from the source.",
     2017, "ACL", 3800, "text-generation"),
    ("Pretraining for Abstractive Summarization",
     "Gap sentence generation as a pretraining objective improves abstractive summarization.",
     2020, "ICML", 1500, "text-generation"),
    ("Faithfulness in Abstractive Summarization",
     "Generated summaries often contain unsupported facts; we measure and reduce hallucination.",
     2020, "ACL", 640, "text-generation"),
    ("Extractive Summarization of Scientific Articles",
     "Sentence selection with discourse features summarizes long scientific documents.",
     2018, "NAACL", 220, "text-generation"),
    ("Controllable Text Generation with Attribute Models",
     "Small attribute classifiers steer a pretrained generator toward a topic or sentiment.",
     2020, "ICLR", 700, "text-generation"),
    ("Named Entity Recognition with Bidirectional LSTM-CRF",
     "A bidirectional recurrent encoder with a CRF layer tags named entities without hand features.",
     2016, "NAACL", 4000, "semantic-text-processing"),
    ("Nested Named Entity Recognition as Span Classification",
     "Enumerating spans handles nested mentions in named entity recognition.",
     2020, "ACL", 300, "semantic-text-processing"),
    ("Relation Extraction with Distant Supervision",
     "Knowledge base alignments provide noisy labels for relation extraction at scale.",
     2015, "EMNLP", 1300, "semantic-text-processing"),
    ("Open Information Extraction from the Web",
     "Relation triples are extracted from web text without a fixed schema.",
     2013, "IJCAI", 2000, "semantic-text-processing"),
    ("Measuring Bias in Word Embeddings",
     "Association tests reveal gender and ethnic stereotypes encoded in word embeddings.",
     2017, "Science", 2500, "responsible-nlp"),
    ("Bias Mitigation through Counterfactual Data Augmentation",
     "Swapping gendered terms in training data reduces stereotypical predictions.",
     2019, "ACL", 420, "responsible-nlp"),
    ("Debiasing Pretrained Language Models",
     "We remove a bias subspace from contextual representations and measure downstream effects.",
     2021, "EMNLP", 230, "responsible-nlp"),
    ("The Landscape of Fairness Evaluation in NLP",
     "We map existing fairness benchmarks and discuss what they measure.",
     2022, "FAccT", 80, "responsible-nlp"),
    ("Energy Costs of Training Large Models",
     "We estimate the carbon footprint of training modern NLP models.",
     2019, "ACL", 1800, "responsible-nlp"),
    ("Conversational Search Assistants for Scholarly Literature",
     "A chat interface retrieves publications and answers with inline citations.",
     2024, "SIGIR", 12, "natural-language-interfaces"),
    ("Citation Grounding for Generated Answers",
     "We check that each citation in a generated answer points to a retrieved document.",
     2023, "ACL", 30, "natural-language-interfaces"),
    ("A Survey of Question Answering Systems",
     "We survey reading comprehension, open-domain and knowledge base question answering.",
     2021, "CSUR", 350, "natural-language-interfaces"),
    ("Tokenization Matters for Multilingual Models",
     "Vocabulary allocation across languages affects downstream accuracy of multilingual models.",
     2021, "ACL", 140, "multilinguality"),
    ("Stemming and Lemmatization for Information Retrieval",
     "Suffix stripping improves recall of sparse retrieval on morphologically rich queries.",
     2012, "SIGIR", 500, "information-retrieval"),
    ("Taxonomy Construction from Scientific Text",
     "Hypernym relations extracted from papers are organized into a field of study hierarchy.",
     2022, "EMNLP", 40, "semantic-text-processing"),
    ("Semantic Scholar Metadata for Literature Graphs",
     "Publication metadata, citations and short summaries support building literature graphs.",
     2020, "ACL", 260, "information-retrieval"),
]

AUTHORS = ["A. Rivera", "B. Chen", "C. Okafor", "D. Novak", "E. Haddad", "F. Tanaka", "G. Schmidt",
           "H. Kaur", "I. Petrov", "J. Silva", "K. Mensah", "L. Rossi"]

FULLTEXT_IDS = {"P006", "P011", "P016", "P017", "P022", "P023", "P031", "P039", "P044"}


def fulltext_for(pid, title, abstract, rng):
    topic = title.lower()
    pages = [
        [f"# Abstract", abstract,
         f"# Introduction",
         f"Work on {topic} has grown quickly. Earlier systems relied on hand-built features. "
         f"This paper studies the problem with a simple and reproducible setup."],
        [f"# Method",
         f"Our approach for {topic} uses a standard encoder. The encoder is trained with a cross-entropy objective. "
         f"We tune all hyperparameters on a held-out development set.",
         "Training runs for ten epochs. The learning rate decays linearly."],
        [f"# Results",
         f"On the main benchmark the method improves over the strongest baseline by {rng.randint(1, 5)} points. "
         "Ablations show that each component contributes.",
         "# Conclusion",
         "The results suggest that simple methods remain competitive. Future work will study larger settings."],
    ]
    text = "\f".join("\n\n".join(p) + "\n" for p in pages)
    return text


def demo():
    raw = HERE / "demo_raw"
    nodes, edges = [], []
    for fid, name, tier, parents, syns in DEMO_FOS:
        nodes.append({"id": fid, "name": name, "tier": tier, "synonyms": syns})
        for p in parents:
            edges.append({"child": fid, "parent": p})
    write_jsonl(raw / "fos_nodes.jsonl", sorted(nodes, key=lambda n: n["id"]))
    write_jsonl(raw / "fos_edges.jsonl", sorted(edges, key=lambda e: (e["child"], e["parent"])))

    rng = random.Random(50)
    pubs, labels = [], []
    ids = [f"P{i + 1:03d}" for i in range(len(DEMO_PUBS))]
    for i, (title, abstract, year, venue, cites, top) in enumerate(DEMO_PUBS):
        pid = ids[i]
        n_auth = rng.randint(1, 3)
        cited = sorted(rng.sample(ids[:i], min(i, rng.randint(0, 3)))) if i else []
        if rng.random() < 0.3:
            cited.append(f"X{rng.randint(100, 999)}")
        p = {
            "id": pid, "title": title, "abstract": abstract, "year": year, "venue": venue,
            "authors": sorted(rng.sample(AUTHORS, n_auth)), "citation_count": cites,
            "cited_ids": cited, "tldr": abstract.split(".")[0] + ".",
        }
        if pid in FULLTEXT_IDS:
            p["fulltext"] = f"fulltext/{pid}.txt"
            (raw / "fulltext").mkdir(parents=True, exist_ok=True)
            with open(raw / "fulltext" / f"{pid}.txt", "w", encoding="utf-8") as f:
                f.write(fulltext_for(pid, title, abstract, rng))
        pubs.append(p)
        labels.append({"pub_id": pid, "fos_ids": [top]})
    # one duplicate line to exercise dedup reporting
    pubs.append(dict(pubs[0]))
    write_jsonl(raw / "publications.jsonl", pubs)
    write_jsonl(raw / "external_labels.jsonl", labels)

    write_jsonl(raw / "incoming.jsonl", [{
        "id": "P051", "title": "Efficient Dense Retrieval with Compressed Indexes",
        "abstract": "Product quantization shrinks dense retrieval indexes with little loss in recall.",
        "year": 2024, "venue": "SIGIR", "authors": ["B. Chen"], "citation_count": 3, "cited_ids": ["P028"],
    }])

    script = {
        "rules": [
            {"system_contains": "TASK: search-terms", "contains": "smaller",
             "reply": "knowledge distillation\nmodel compression"},
            {"system_contains": "TASK: search-terms", "contains": "translation",
             "reply": "low-resource machine translation\nback-translation"},
            {"system_contains": "TASK: search-terms", "contains": "retrieval",
             "reply": "dense retrieval\nhybrid retrieval rank fusion"},
            {"system_contains": "TASK: search-terms", "contains": "", "reply": ""},
            {"system_contains": "TASK: route", "contains": "more about", "reply": "REUSE"},
            {"system_contains": "TASK: route", "contains": "", "reply": "SEARCH"},
            {"system_contains": "TASK: grounded-answer", "contains": "",
             "reply": "Several approaches address this question [1]. A complementary line of work is described in [2]. "
                      "Both report gains over strong baselines [1, 3]."},
            {"system_contains": "TASK: ask-paper", "contains": "",
             "reply": "ANSWER: The paper proposes a simple encoder-based approach and shows it is competitive.\n"
                      "SUPPORT: The method uses a standard encoder trained with a cross-entropy objective. "
                      "(Section: Method, Page: 2)\n"
                      "SUPPORT: The method improves over the strongest baseline. (Section: Results, Page: 3)\n"
                      "FOLLOWUP: Which baselines are compared?\n"
                      "FOLLOWUP: How sensitive is the method to the learning rate?\n"
                      "FOLLOWUP: Does the approach scale to larger settings?"},
            {"system_contains": "TASK: describe-fos", "contains": "",
             "reply": "A field of natural language processing studied in the demo corpus."},
        ]
    }
    write_json(HERE / "mock" / "demo_script.json", script)
    write_json(HERE / "mock" / "provider.json", {"kind": "mock", "mock_script": "demo_script.json"})


# ---------------------------------------------------------------- survey

SUBJECTS = ["machine translation", "dependency parsing", "question answering", "summarization",
            "named entity recognition", "dialogue systems", "sentiment analysis", "language modeling",
            "speech recognition", "information extraction", "text classification", "semantic parsing",
            "coreference resolution", "relation extraction", "word embeddings", "topic modeling"]
METHODS = ["contrastive learning", "graph neural networks", "prompting", "adapters", "curriculum learning",
           "data augmentation", "reinforcement learning", "meta-learning", "retrieval", "distillation"]


def survey_split(rng, prefix, n_pos, n_neg):
    pubs, labels = [], []
    keyword_pos = ["A Survey of {s}", "{S}: A Review", "A Survey on {m} for {s}", "The Landscape of {s} Research"]
    plain_pos = ["An Overview of {s}", "Recent Advances in {s}", "{S}: Progress and Open Problems",
                 "A Decade of {s}", "Trends in {m} for {s}"]
    pos_abs = ["We review recent work on {s} and organize existing approaches into a taxonomy.",
               "This article summarizes the literature on {s} and discusses open challenges.",
               "We categorize prior studies of {m} for {s} and outline future research directions.",
               "This overview covers datasets, methods and evaluation for {s}."]
    neg_titles = ["Improving {s} with {m}", "{M} for Low-Resource {s}", "Efficient {s} via {m}",
                  "Robust {s} using {m}", "Revisiting {m} in {s}"]
    neg_keyword = ["Predicting Survey Responses with {m}", "Survey Question Generation for {s}",
                   "Mapping the Loss Landscape of {s} Models", "Survey-Based Annotation for {s}"]
    neg_abs = ["We propose a novel method for {s} based on {m}. Experiments show consistent gains.",
               "We introduce a new model for {s} and report improvements on three benchmarks.",
               "Our approach applies {m} to {s} and outperforms strong baselines.",
               "We present an efficient architecture for {s}; results show faster training."]
    n = 0

    def fill(t, s, m):
        return t.format(s=s, S=s.title(), m=m, M=m.title())

    for label, count in ((1, n_pos), (0, n_neg)):
        for i in range(count):
            n += 1
            s, m = rng.choice(SUBJECTS), rng.choice(METHODS)
            if label:
                title = fill(rng.choice(keyword_pos if i % 2 == 0 else plain_pos), s, m)
                abstract = fill(rng.choice(pos_abs), s, m)
            else:
                title = fill(rng.choice(neg_keyword if rng.random() < 0.06 else neg_titles), s, m)
                abstract = fill(rng.choice(neg_abs), s, m)
            pid = f"{prefix}{n:04d}"
            pubs.append({"id": pid, "title": title, "abstract": abstract, "year": 2015 + n % 9,
                         "venue": "ACL", "authors": [], "citation_count": n % 50, "is_survey": bool(label)})
            labels.append({"pub_id": pid, "label": label, "seed": 7, "ratio": 15})
    return pubs, labels


def survey():
    rng = random.Random(787)
    train_p, train_l = survey_split(rng, "T", 40, 600)
    test_p, test_l = survey_split(rng, "E", 40, 600)
    write_jsonl(HERE / "survey" / "publications.jsonl", train_p + test_p)
    write_jsonl(HERE / "survey" / "train.jsonl", train_l)
    write_jsonl(HERE / "survey" / "test.jsonl", test_l)


# ---------------------------------------------------------------- porter golden

def porter():
    words = set()
    for path in sorted((HERE.parent.parent / "examples").rglob("*")):
        if not path.is_file():
            continue
        text = path.read_text(encoding="utf-8", errors="ignore")
        for comment in re.findall(r"//([^\n]*)|/\*(.*?)\*/", text, flags=re.S):
            for w in re.findall(r"[A-Za-z]+", " ".join(comment)):
                w = w.lower()
                if 3 <= len(w) <= 20:
                    words.add(w)
    for fos in DEMO_FOS:
        words.update(w for w in re.findall(r"[a-z]+", fos[1].lower()) if len(w) > 2)
    words.update(["agreed", "agree", "parsing", "parse", "translation", "translations", "summarizing",
                  "summarization", "generalizations", "oscillators", "conditional", "relational"])
    rows = sorted(words)
    with open(HERE / "porter" / "golden.tsv", "w", encoding="utf-8") as f:
        for w in rows:
            f.write(f"{w}\t{stem(w)}\n")


# ---------------------------------------------------------------- classify step 2

STEP2_FOS = [("text-summarization", "Text Summarization", []), ("summarization", "Summarization", []),
             ("machine-translation", "Machine Translation", ["MT"]),
             ("named-entity-recognition", "Named Entity Recognition", ["NER"]),
             ("language-models", "Language Models", ["language modeling"])]
STEP2_TITLES = ["Abstractive Text Summarization Methods", "Attention Is All You Need", "Summarizing Long Documents",
                "Machine translation of rare words", "Translation with a machine in the loop",
                "NER for Clinical Notes", "Large Language Modeling at Scale", "Language modelling with LSTMs",
                "A Survey of Summaries"]


def contains_run(hay, needle):
    return any(hay[i:i + len(needle)] == needle for i in range(len(hay) - len(needle) + 1))


def step2():
    cases = []
    for title in STEP2_TITLES:
        toks = analyze(title)
        hits = sorted(fid for fid, name, syns in STEP2_FOS
                      if any(contains_run(toks, analyze(x)) for x in [name] + syns if analyze(x)))
        cases.append({"title": title, "fos_ids": hits})
    write_json(HERE / "classify" / "step2_golden.json", {
        "fos": [{"id": i, "name": n, "synonyms": s, "tier": "extended"} for i, n, s in STEP2_FOS],
        "cases": cases})


def evaluation():
    out = HERE / "demo_raw" / "eval"
    out.mkdir(exist_ok=True)
    write_jsonl(out / "traces.jsonl", [
        {"target": "dense-retrieval", "total_steps": 3},
        {"target": "knowledge-distillation", "total_steps": 5},
        {"target": "abstractive-summarization", "total_steps": 2},
        {"target": "dependency-parsing", "total_steps": 4, "ideal_steps": 2},
    ])
    write_jsonl(out / "judgments.jsonl", [
        {"child": "dense-retrieval", "parent": "information-retrieval", "verdict": "correct"},
        {"child": "knowledge-distillation", "parent": "language-models", "verdict": "correct"},
        {"child": "dependency-parsing", "parent": "syntactic-parsing", "verdict": "correct"},
        {"child": "bias-mitigation", "parent": "semantic-text-processing", "verdict": "incorrect"},
        {"child": "machine-translation", "parent": "multilinguality", "verdict": "missing"},
    ])
    mentions = []
    for i in range(4):
        mentions.append({"surface": "coreference resolution", "doc_id": f"P00{i + 1}", "kind": "entity"})
    for i in range(3):
        mentions.append({"surface": "CR", "doc_id": f"P01{i}", "kind": "entity"})
    for i in range(3):
        mentions.append({"surface": "coreference resolution -> information extraction", "doc_id": f"P02{i}",
                         "kind": "hyponym_relation", "head": "coreference resolution",
                         "tail": "Information Extraction"})
    mentions.append({"surface": "entity linking", "doc_id": "P031", "kind": "entity"})
    write_jsonl(out / "mentions.jsonl", mentions)


def main():
    (HERE / "porter").mkdir(exist_ok=True)
    hierarchy()
    bm25()
    demo()
    survey()
    porter()
    step2()
    evaluation()


if __name__ == "__main__":
    main()

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "nlpkg/error.hpp"
#include "nlpkg/text/analyzer.hpp"
#include "nlpkg/text/normalize.hpp"
#include "nlpkg/text/porter.hpp"
#include "nlpkg/util/jsonl.hpp"
#include "nlpkg/util/rng.hpp"

using namespace nlpkg;

TEST_CASE("stem matches the frozen reference stems") {
    std::ifstream in(std::string(NLPKG_FIXTURES) + "/porter/golden.tsv");
    REQUIRE(in.good());
    std::string line;
    std::size_t n = 0, bad = 0;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        auto word = line.substr(0, tab);
        auto expected = line.substr(tab + 1);
        auto got = text::stem(word);
        if (got != expected) {
            if (bad < 20) MESSAGE(word << ": got " << got << ", expected " << expected);
            ++bad;
        }
        ++n;
    }
    CHECK(n > 1000);
    CHECK(bad == 0);
}

TEST_CASE("stem contract examples") {
    CHECK(text::stem("") == "");
    CHECK(text::stem("parsing") == text::stem("parse"));
    CHECK(text::stem("translation") == text::stem("translations"));
    CHECK(text::stem("agreed") == text::stem(text::stem("agreed")));
    CHECK(text::porter_stem_once("agreed") == "agre");
    CHECK(text::stem("agreed") == "agr");
    CHECK(text::stem("is") == "is");
    CHECK(text::stem("abc1") == "abc1");
}

TEST_CASE("stem is idempotent on its own output") {
    for (const char* w : {"generalizations", "oscillators", "relational", "conditional", "summarization",
                          "hopefulness", "electricity", "probate", "controlling"}) {
        auto s = text::stem(w);
        CHECK(text::stem(s) == s);
    }
}

TEST_CASE("fold unifies dashes and quotes") {
    CHECK(text::fold("Machine–Translation") == "machine-translation");
    CHECK(text::fold("“Quoted”") == "\"quoted\"");
    CHECK(text::fold("it’s") == "it's");
    CHECK(text::fold("A B") == "a b");
}

TEST_CASE("normalize_name canonical form") {
    CHECK(text::normalize_name("  Machine   Translation ") == "machine translation");
    CHECK(text::normalize_name("machine-translation") == "machine translation");
    CHECK(text::normalize_name("Machine_Translation") == "machine translation");
    CHECK(text::normalize_name("Machine—Translation") == "machine translation");
    CHECK(text::normalize_name("") == "");
}

TEST_CASE("tokenize splits on punctuation and drops inner apostrophes") {
    CHECK(text::tokenize("The model's BLEU-4, (2020)!") ==
          std::vector<std::string>{"the", "models", "bleu", "4", "2020"});
    CHECK(text::tokenize("").empty());
    CHECK(text::tokenize("--- ...").empty());
}

TEST_CASE("analyze stems every token") {
    CHECK(text::analyze("Summarizing Long Documents") ==
          std::vector<std::string>{text::stem("summarizing"), "long", text::stem("documents")});
}

TEST_CASE("trim") {
    CHECK(text::trim("  a b \n") == "a b");
    CHECK(text::trim("   ") == "");
}

TEST_CASE("StableRng is reproducible and bounded") {
    StableRng a(7), b(7);
    for (int i = 0; i < 100; ++i) {
        auto x = a.below(10);
        CHECK(x == b.below(10));
        CHECK(x < 10);
        auto u = a.unit();
        CHECK(u == b.unit());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    std::vector<int> v{1, 2, 3, 4, 5, 6}, w = v;
    StableRng c(3), d(3);
    c.shuffle(v);
    d.shuffle(w);
    CHECK(v == w);
}

TEST_CASE("jsonl round trip and parse errors carry the line") {
    auto dir = std::filesystem::temp_directory_path() / "nlpkg_test_text";
    std::filesystem::create_directories(dir);
    auto p = dir / "a.jsonl";
    jsonl::write_atomic(p, {{{"a", 1}}, {{"a", 2}}});
    auto rows = jsonl::read_all(p);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1]["a"] == 2);

    {
        std::ofstream out(p);
        out << "{\"a\":1}\n\n{broken\n";
    }
    try {
        jsonl::read_all(p);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    std::filesystem::remove_all(dir);
}

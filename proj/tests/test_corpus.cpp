#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "zipfheaps/corpus.hpp"
#include "zipfheaps/csv_io.hpp"
#include "zipfheaps/simulate.hpp"
#include "zipfheaps/zipf.hpp"

using namespace zipfheaps;

TEST_CASE("tokenizer rule on plain text") {
    CHECK(tokenize("The cat, the CAT!") ==
          std::vector<std::string>{"the", "cat", "the", "cat"});
    CHECK(tokenize("").empty());
    // apostrophe is a separator under the fixed rule
    CHECK(tokenize("don't stop") == std::vector<std::string>{"don", "t", "stop"});
    CHECK(tokenize("a1b2 3c") == std::vector<std::string>{"a1b2", "3c"});
}

TEST_CASE("tokenizer folds case across supported scripts") {
    CHECK(tokenize("Naïve CAFÉ") == std::vector<std::string>{"naïve", "café"});
    CHECK(tokenize("ΑΒΓ") == std::vector<std::string>{"αβγ"});
    CHECK(tokenize("МОСКВА") ==
          std::vector<std::string>{"москва"});
}

TEST_CASE("invalid UTF-8 separates tokens and is counted") {
    TokenizerDiagnostics diag;
    const std::string bad = std::string("ab") + char(0xFF) + "cd";
    CHECK(tokenize(bad, &diag) == std::vector<std::string>{"ab", "cd"});
    CHECK(diag.invalid_bytes == 1);

    // truncated multi-byte sequence at end of input
    TokenizerDiagnostics diag2;
    const std::string truncated = std::string("xy") + char(0xE2) + char(0x82);
    CHECK(tokenize(truncated, &diag2) == std::vector<std::string>{"xy"});
    CHECK(diag2.invalid_bytes == 2);
}

TEST_CASE("chunked feeding matches whole-string tokenization") {
    const std::string text = "The café мир; 12abÜber 中文 done";
    const std::vector<std::string> whole = tokenize(text);
    std::vector<std::string> chunked;
    Tokenizer t([&chunked](std::string&& tok) { chunked.push_back(std::move(tok)); });
    for (char c : text) {
        t.feed(&c, 1);  // worst-case chunking: one byte at a time
    }
    t.finish();
    CHECK(chunked == whole);
}

TEST_CASE("analyzer counts the worked example") {
    const CorpusAnalysis a = analyze_tokens({"the", "cat", "the", "cat"});
    REQUIRE(a.curve.points.size() == 3);
    CHECK(a.curve.points[0].m == 1);
    CHECK(a.curve.points[0].d == 1);
    CHECK(a.curve.points[1].m == 2);
    CHECK(a.curve.points[1].d == 2);
    CHECK(a.curve.points[2].m == 4);
    CHECK(a.curve.points[2].d == 2);
    REQUIRE(a.table.entries.size() == 2);
    CHECK(a.table.entries[0].token == "cat");  // tie broken lexicographically
    CHECK(a.table.entries[0].count == 2);
    CHECK(a.table.entries[1].token == "the");
    CHECK(a.table.entries[1].count == 2);
}

TEST_CASE("empty input gives empty outputs") {
    const CorpusAnalysis a = analyze_tokens({});
    CHECK(a.curve.points.empty());
    CHECK(a.table.entries.empty());
    CHECK(a.total_tokens == 0);
}

TEST_CASE("conservation: counts, curve end, and tokens consumed agree") {
    std::istringstream in(
        "One fish two fish red fish blue fish. Old fish new fish, this one has a little "
        "star, this one has a little car.");
    const CorpusAnalysis a = analyze_stream(in);
    std::uint64_t total = 0;
    for (const RankEntry& e : a.table.entries) {
        total += e.count;
    }
    CHECK(total == a.total_tokens);
    REQUIRE_FALSE(a.curve.points.empty());
    CHECK(a.curve.points.back().m == a.total_tokens);
    CHECK(a.curve.points.back().d == a.table.entries.size());
    for (std::size_t i = 1; i < a.table.entries.size(); ++i) {
        CHECK(a.table.entries[i].count <= a.table.entries[i - 1].count);
    }
}

TEST_CASE("reruns are bit-identical through the CSV writers") {
    const std::string text = "to be or not to be that is the question";
    std::ostringstream first_growth, first_ranks, second_growth, second_ranks;
    {
        std::istringstream in(text);
        const CorpusAnalysis a = analyze_stream(in);
        write_growth_csv(first_growth, a.curve);
        write_rank_csv(first_ranks, a.table);
    }
    {
        std::istringstream in(text);
        const CorpusAnalysis a = analyze_stream(in);
        write_growth_csv(second_growth, a.curve);
        write_rank_csv(second_ranks, a.table);
    }
    CHECK(first_growth.str() == second_growth.str());
    CHECK(first_ranks.str() == second_ranks.str());
}

TEST_CASE("pipeline equivalence with the simulator") {
    // a sampled rank text pushed through the corpus path must reproduce the
    // simulator's growth curve for the same stream
    ZipfParams p(2.0);
    const std::uint64_t n = 5000;

    RandomStream s1 = RandomStream::derive(7, 0);
    const GrowthCurve direct = simulate_growth_curve(p, n, s1, geometric_checkpoints(n));

    RandomStream s2 = RandomStream::derive(7, 0);
    const std::vector<std::uint64_t> text = sample_text(p, n, s2);
    std::vector<std::string> tokens;
    tokens.reserve(text.size());
    for (std::uint64_t r : text) {
        tokens.push_back(std::to_string(r));
    }
    const CorpusAnalysis a = analyze_tokens(tokens);

    REQUIRE(a.curve.points.size() == direct.points.size());
    for (std::size_t i = 0; i < direct.points.size(); ++i) {
        CHECK(a.curve.points[i].m == direct.points[i].m);
        CHECK(a.curve.points[i].d == direct.points[i].d);
    }
}

TEST_CASE("growth CSV round-trips") {
    GrowthCurve c;
    c.points = {{1, 1}, {2, 2}, {4, 3}, {1000000, 1414}};
    std::ostringstream out;
    write_growth_csv(out, c);
    std::istringstream in(out.str());
    const GrowthCurve back = read_growth_csv(in);
    REQUIRE(back.points.size() == c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        CHECK(back.points[i].m == c.points[i].m);
        CHECK(back.points[i].d == c.points[i].d);
    }
    std::istringstream bad("x,y\n1,2\n");
    CHECK_THROWS_AS(read_growth_csv(bad), std::domain_error);
}

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zipfheaps/simulate.hpp"  // GrowthCurve

namespace zipfheaps {

struct RankEntry {
    std::string token;
    std::uint64_t count;
};

// Empirical rank-frequency table: counts nonincreasing, ties broken by
// ascending token, tokens unique. Entry j (0-based) has rank j + 1.
struct RankFrequency {
    std::vector<RankEntry> entries;
};

struct TokenizerDiagnostics {
    std::uint64_t invalid_bytes = 0;  // bytes replaced during lossy UTF-8 decode
};

// Streaming tokenizer. A token is a maximal run of word codepoints; anything
// else separates. Input is decoded as UTF-8 with invalid bytes replaced (and
// counted); tokens are lowercased.
//
// The rule is a fixed artifact policy, not full Unicode classification:
// word codepoints are ASCII alphanumerics plus the letter ranges of the major
// alphabetic scripts (Latin-1/Extended, Greek, Cyrillic, Hebrew, Arabic,
// Devanagari, kana, CJK, Hangul); case folding is applied where it is plain
// arithmetic (ASCII, Latin-1, Greek, Cyrillic) and identity elsewhere.
class Tokenizer {
public:
    explicit Tokenizer(std::function<void(std::string&&)> sink);

    void feed(const char* data, std::size_t len);
    void finish();  // flush carried bytes and any pending token

    const TokenizerDiagnostics& diagnostics() const noexcept { return diag_; }

private:
    void consume_codepoint(char32_t cp);

    std::function<void(std::string&&)> sink_;
    std::string pending_;
    unsigned char carry_[4] = {};
    std::size_t carry_len_ = 0;
    TokenizerDiagnostics diag_;
};

// Whole-string convenience wrapper around Tokenizer.
std::vector<std::string> tokenize(std::string_view text,
                                  TokenizerDiagnostics* diag = nullptr);

struct CorpusAnalysis {
    GrowthCurve curve;
    RankFrequency table;
    std::uint64_t total_tokens = 0;
};

// Single-pass growth-curve + rank-table accumulator. Checkpoint policy:
// every doubling of the token count (1, 2, 4, ...) plus the final count.
// Memory is bounded by the vocabulary, not the text. The hash map's
// iteration order never reaches the output: the table is fully ordered by
// (count desc, token asc) at finish(), so reruns are bit-identical.
class StreamAnalyzer {
public:
    void add(std::string&& token);
    CorpusAnalysis finish();  // analyzer is spent afterwards

private:
    std::unordered_map<std::string, std::uint64_t> counts_;
    std::vector<GrowthPoint> points_;
    std::uint64_t total_ = 0;
    std::uint64_t next_checkpoint_ = 1;
};

// Tokenize an input stream and accumulate both outputs in one pass.
CorpusAnalysis analyze_stream(std::istream& in, TokenizerDiagnostics* diag = nullptr);

// Same accumulation over pre-tokenized input.
CorpusAnalysis analyze_tokens(const std::vector<std::string>& tokens);

}  // namespace zipfheaps

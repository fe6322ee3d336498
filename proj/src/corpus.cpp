#include "zipfheaps/corpus.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <utility>

namespace zipfheaps {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

struct CpRange {
    char32_t lo, hi;
};

// Codepoint ranges treated as word characters. Digits and the letter blocks
// of the major alphabetic scripts; everything outside separates tokens.
constexpr CpRange kWordRanges[] = {
    {0x0030, 0x0039},  // 0-9
    {0x0041, 0x005A},  // A-Z
    {0x0061, 0x007A},  // a-z
    {0x00C0, 0x00D6},  // Latin-1 letters (excluding multiplication sign)
    {0x00D8, 0x00F6},  //   "     (excluding division sign)
    {0x00F8, 0x024F},  // Latin Extended-A/B
    {0x0386, 0x0386},  // Greek
    {0x0388, 0x03FF},  //
    {0x0400, 0x052F},  // Cyrillic + supplement
    {0x05D0, 0x05EA},  // Hebrew letters
    {0x0620, 0x064A},  // Arabic letters
    {0x0660, 0x0669},  // Arabic-Indic digits
    {0x0904, 0x0939},  // Devanagari letters
    {0x0966, 0x096F},  // Devanagari digits
    {0x3041, 0x3096},  // Hiragana
    {0x30A1, 0x30FA},  // Katakana
    {0x4E00, 0x9FFF},  // CJK unified
    {0xAC00, 0xD7A3},  // Hangul syllables
};

bool is_word_cp(char32_t cp) {
    for (const CpRange& r : kWordRanges) {
        if (cp < r.lo) return false;  // ranges are sorted
        if (cp <= r.hi) return true;
    }
    return false;
}

// Case folding where it is plain arithmetic; identity elsewhere.
char32_t to_lower_cp(char32_t cp) {
    if (cp >= 0x41 && cp <= 0x5A) return cp + 0x20;                      // ASCII
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;        // Latin-1
    if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;     // Greek capitals
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;                    // Cyrillic capitals
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;                    // Cyrillic Io etc.
    return cp;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

int sequence_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead & 0xE0) == 0xC0) return 2;
    if ((lead & 0xF0) == 0xE0) return 3;
    if ((lead & 0xF8) == 0xF0) return 4;
    return 0;  // continuation or invalid lead byte
}

// Decodes the complete sequence at buf (len == sequence_length(buf[0])).
// Returns false for overlong encodings, surrogates, and out-of-range values.
bool decode_sequence(const unsigned char* buf, int len, char32_t& cp) {
    switch (len) {
        case 1:
            cp = buf[0];
            return true;
        case 2:
            cp = (char32_t(buf[0] & 0x1F) << 6) | (buf[1] & 0x3F);
            return cp >= 0x80;
        case 3:
            cp = (char32_t(buf[0] & 0x0F) << 12) | (char32_t(buf[1] & 0x3F) << 6) |
                 (buf[2] & 0x3F);
            return cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF);
        case 4:
            cp = (char32_t(buf[0] & 0x07) << 18) | (char32_t(buf[1] & 0x3F) << 12) |
                 (char32_t(buf[2] & 0x3F) << 6) | (buf[3] & 0x3F);
            return cp >= 0x10000 && cp <= 0x10FFFF;
        default:
            return false;
    }
}

}  // namespace

Tokenizer::Tokenizer(std::function<void(std::string&&)> sink) : sink_(std::move(sink)) {}

void Tokenizer::consume_codepoint(char32_t cp) {
    if (is_word_cp(cp)) {
        append_utf8(pending_, to_lower_cp(cp));
    } else if (!pending_.empty()) {
        sink_(std::move(pending_));
        pending_.clear();
    }
}

void Tokenizer::feed(const char* data, std::size_t len) {
    std::size_t i = 0;
    // Finish a sequence whose head arrived in the previous chunk.
    while (carry_len_ > 0 && i < len) {
        const int need = sequence_length(carry_[0]);
        carry_[carry_len_++] = static_cast<unsigned char>(data[i]);
        ++i;
        if (carry_len_ == static_cast<std::size_t>(need)) {
            char32_t cp;
            if ((carry_[carry_len_ - 1] & 0xC0) == 0x80 &&
                decode_sequence(carry_, need, cp)) {
                consume_codepoint(cp);
            } else {
                diag_.invalid_bytes += carry_len_;
                consume_codepoint(kReplacement);
            }
            carry_len_ = 0;
        } else if ((carry_[carry_len_ - 1] & 0xC0) != 0x80) {
            // broken continuation: flush the carried bytes as invalid and
            // reprocess the current byte from scratch
            diag_.invalid_bytes += carry_len_ - 1;
            consume_codepoint(kReplacement);
            carry_len_ = 0;
            --i;
        }
    }

    const unsigned char* bytes = reinterpret_cast<const unsigned char*>(data);
    while (i < len) {
        const unsigned char lead = bytes[i];
        const int need = sequence_length(lead);
        if (need == 0) {
            ++diag_.invalid_bytes;
            consume_codepoint(kReplacement);
            ++i;
            continue;
        }
        if (i + need > len) {  // sequence continues in the next chunk
            for (std::size_t j = 0; j < len - i; ++j) {
                carry_[j] = bytes[i + j];
            }
            carry_len_ = len - i;
            return;
        }
        bool ok = true;
        for (int j = 1; j < need; ++j) {
            if ((bytes[i + j] & 0xC0) != 0x80) {
                ok = false;
                break;
            }
        }
        char32_t cp;
        if (ok && decode_sequence(bytes + i, need, cp)) {
            consume_codepoint(cp);
            i += need;
        } else {
            ++diag_.invalid_bytes;
            consume_codepoint(kReplacement);
            ++i;  // resynchronize one byte at a time
        }
    }
}

void Tokenizer::finish() {
    if (carry_len_ > 0) {
        diag_.invalid_bytes += carry_len_;
        consume_codepoint(kReplacement);
        carry_len_ = 0;
    }
    if (!pending_.empty()) {
        sink_(std::move(pending_));
        pending_.clear();
    }
}

std::vector<std::string> tokenize(std::string_view text, TokenizerDiagnostics* diag) {
    std::vector<std::string> tokens;
    Tokenizer tokenizer([&tokens](std::string&& t) { tokens.push_back(std::move(t)); });
    tokenizer.feed(text.data(), text.size());
    tokenizer.finish();
    if (diag) {
        *diag = tokenizer.diagnostics();
    }
    return tokens;
}

void StreamAnalyzer::add(std::string&& token) {
    ++counts_[std::move(token)];
    ++total_;
    if (total_ == next_checkpoint_) {
        points_.push_back({total_, counts_.size()});
        next_checkpoint_ *= 2;
    }
}

CorpusAnalysis StreamAnalyzer::finish() {
    CorpusAnalysis out;
    if (total_ > 0 && (points_.empty() || points_.back().m != total_)) {
        points_.push_back({total_, counts_.size()});
    }
    out.curve.points = std::move(points_);
    out.total_tokens = total_;
    out.table.entries.reserve(counts_.size());
    for (auto& [token, count] : counts_) {
        out.table.entries.push_back({token, count});
    }
    std::sort(out.table.entries.begin(), out.table.entries.end(),
              [](const RankEntry& a, const RankEntry& b) {
                  if (a.count != b.count) return a.count > b.count;
                  return a.token < b.token;
              });
    counts_.clear();
    total_ = 0;
    next_checkpoint_ = 1;
    return out;
}

CorpusAnalysis analyze_stream(std::istream& in, TokenizerDiagnostics* diag) {
    StreamAnalyzer analyzer;
    Tokenizer tokenizer([&analyzer](std::string&& t) { analyzer.add(std::move(t)); });
    char buffer[1 << 16];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
        tokenizer.feed(buffer, static_cast<std::size_t>(in.gcount()));
    }
    tokenizer.finish();
    if (diag) {
        *diag = tokenizer.diagnostics();
    }
    return analyzer.finish();
}

CorpusAnalysis analyze_tokens(const std::vector<std::string>& tokens) {
    StreamAnalyzer analyzer;
    for (const std::string& t : tokens) {
        analyzer.add(std::string(t));
    }
    return analyzer.finish();
}

}  // namespace zipfheaps

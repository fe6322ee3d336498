#pragma once

#include <iosfwd>
#include <string>

#include "zipfheaps/corpus.hpp"
#include "zipfheaps/simulate.hpp"

namespace zipfheaps {

// Shortest decimal representation that round-trips the exact double
// (std::to_chars); locale-independent. Used for every numeric field the CLI
// emits.
std::string format_double(double v);

// Growth-curve CSV, header "m,d", one point per line, LF endings.
void write_growth_csv(std::ostream& out, const GrowthCurve& curve);

// Parses what write_growth_csv emits (header required; tolerates trailing CR).
// Throws std::domain_error on malformed input.
GrowthCurve read_growth_csv(std::istream& in);

// Rank-frequency CSV, header "token,count". Tokens contain no separators or
// quotes by construction (word codepoints only).
void write_rank_csv(std::ostream& out, const RankFrequency& table);

}  // namespace zipfheaps

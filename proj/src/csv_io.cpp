#include "zipfheaps/csv_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace zipfheaps {

std::string format_double(double v) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

void write_growth_csv(std::ostream& out, const GrowthCurve& curve) {
    out << "m,d\n";
    for (const GrowthPoint& p : curve.points) {
        out << p.m << ',' << p.d << '\n';
    }
}

namespace {

std::uint64_t parse_u64(std::string_view field, const char* what) {
    std::uint64_t value = 0;
    const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc{} || result.ptr != field.data() + field.size()) {
        throw std::domain_error(std::string("growth CSV: bad ") + what + " field '" +
                                std::string(field) + "'");
    }
    return value;
}

}  // namespace

GrowthCurve read_growth_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::domain_error("growth CSV: empty input");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != "m,d") {
        throw std::domain_error("growth CSV: expected header 'm,d', got '" + line + "'");
    }
    GrowthCurve curve;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::domain_error("growth CSV: missing comma in line '" + line + "'");
        }
        const std::uint64_t m = parse_u64(std::string_view(line).substr(0, comma), "m");
        const std::uint64_t d = parse_u64(std::string_view(line).substr(comma + 1), "d");
        curve.points.push_back({m, d});
    }
    return curve;
}

void write_rank_csv(std::ostream& out, const RankFrequency& table) {
    out << "token,count\n";
    for (const RankEntry& e : table.entries) {
        out << e.token << ',' << e.count << '\n';
    }
}

}  // namespace zipfheaps

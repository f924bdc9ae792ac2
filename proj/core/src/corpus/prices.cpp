#include "trendlab/corpus/prices.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include <fmt/format.h>

#include "trendlab/csv.hpp"
#include "trendlab/error.hpp"

namespace trendlab::corpus {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_price(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = field.data() + field.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw_input(fmt::format("line {}: bad price '{}'", line_no, field));
    }
    return value;
}

}  // namespace

PriceSeries parse_prices(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw_input("price file is empty");
    const auto header = csv::split_row(line);
    std::size_t date_col = header.size();
    std::size_t close_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto name = trim(header[i]);
        if (name == "date") date_col = i;
        if (name == "close") close_col = i;
    }
    if (date_col == header.size() || close_col == header.size()) {
        throw_input("price header must contain 'date' and 'close'");
    }

    PriceSeries series;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto row = csv::split_row(line);
        if (row.size() <= std::max(date_col, close_col)) {
            throw_input(fmt::format("line {}: expected {} columns", line_no, header.size()));
        }
        PricePoint p;
        try {
            p.date = parse_date(trim(row[date_col]));
        } catch (const InputError& e) {
            throw InputError(fmt::format("line {}: {}", line_no, e.what()));
        }
        p.close = parse_price(trim(row[close_col]), line_no);
        if (!std::isfinite(p.close) || p.close <= 0.0) {
            throw_input(fmt::format("line {}: price must be positive, got {}", line_no, row[close_col]));
        }
        if (!series.entries.empty() && p.date <= series.entries.back().date) {
            throw_input(fmt::format("line {}: dates must be strictly increasing", line_no));
        }
        series.entries.push_back(p);
    }
    return series;
}

PriceSeries load_prices(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw_input(fmt::format("cannot open price file '{}'", path.string()));
    return parse_prices(in);
}

}  // namespace trendlab::corpus

#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "trendlab/corpus/tweet.hpp"

namespace trendlab::corpus {

struct PricePoint {
    Day date{};
    double close = 0.0;
};

/// Daily closing prices; dates strictly increasing, prices positive.
struct PriceSeries {
    std::vector<PricePoint> entries;

    std::size_t size() const { return entries.size(); }
};

/// CSV with a header naming `date` and `close` columns (other columns are
/// ignored). Rejects non-increasing dates and non-positive or non-finite prices.
PriceSeries parse_prices(std::istream& in);
PriceSeries load_prices(const std::filesystem::path& path);

}  // namespace trendlab::corpus

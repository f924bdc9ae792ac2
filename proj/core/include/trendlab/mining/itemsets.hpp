#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trendlab/mining/tokenize.hpp"

namespace trendlab::mining {

struct FrequentItemset {
    std::vector<std::string> items;  // sorted
    std::size_t count = 0;           // transactions containing every item
    double support = 0.0;            // count / #transactions

    bool operator==(const FrequentItemset&) const = default;
};

struct KeywordCount {
    std::string token;
    std::size_t count = 0;

    bool operator==(const KeywordCount&) const = default;
};

/// Number of transactions containing each token, descending by count with
/// lexicographic tie-break.
std::vector<KeywordCount> keyword_frequencies(std::span<const Transaction> transactions);

/// Smallest integer count c with c / n >= min_support. Shared threshold rule
/// for every miner so that boundary supports are classified identically.
std::size_t min_support_count(double min_support, std::size_t n);

/// FP-growth. Returns every itemset of size <= max_size whose support is at
/// least min_support, ordered by size and then lexicographically.
/// Throws InputError unless 0 < min_support <= 1 and max_size >= 1.
std::vector<FrequentItemset> mine_frequent_itemsets(std::span<const Transaction> transactions,
                                                    double min_support, std::size_t max_size);

}  // namespace trendlab::mining

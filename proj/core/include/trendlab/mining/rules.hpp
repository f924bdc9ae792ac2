#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trendlab/mining/itemsets.hpp"

namespace trendlab::mining {

struct AssociationRule {
    std::vector<std::string> antecedent;  // sorted, non-empty
    std::vector<std::string> consequent;  // sorted, non-empty, disjoint from antecedent
    std::size_t count = 0;                // transactions containing antecedent and consequent
    double support = 0.0;
    double confidence = 0.0;
    double lift = 0.0;

    bool mentions(std::string_view token) const;
};

/// Every rule A -> B with A u B a mined itemset of size >= 2 and confidence at
/// least min_confidence. Rules come out grouped by itemset, in itemset order.
/// Throws InputError if some subset of a mined itemset is missing from the
/// input, or if min_confidence is outside (0, 1].
std::vector<AssociationRule> derive_rules(std::span<const FrequentItemset> itemsets, double min_confidence);

/// Rules mentioning `keyword` on either side, order preserved.
std::vector<AssociationRule> filter_rules(std::span<const AssociationRule> rules, std::string_view keyword);

/// Itemsets containing `keyword`, order preserved.
std::vector<FrequentItemset> filter_itemsets(std::span<const FrequentItemset> itemsets, std::string_view keyword);

/// "a|b" rendering used in CSV reports.
std::string join_items(std::span<const std::string> items);

}  // namespace trendlab::mining

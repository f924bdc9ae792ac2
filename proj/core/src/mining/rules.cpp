#include "trendlab/mining/rules.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include <fmt/format.h>

#include "trendlab/error.hpp"

namespace trendlab::mining {

bool AssociationRule::mentions(std::string_view token) const {
    auto has = [&](const std::vector<std::string>& side) {
        return std::find(side.begin(), side.end(), token) != side.end();
    };
    return has(antecedent) || has(consequent);
}

std::vector<AssociationRule> derive_rules(std::span<const FrequentItemset> itemsets, double min_confidence) {
    if (!(min_confidence > 0.0) || min_confidence > 1.0) {
        throw_input(fmt::format("min_confidence must be in (0, 1], got {}", min_confidence));
    }
    std::map<std::vector<std::string>, const FrequentItemset*> by_items;
    for (const auto& fi : itemsets) by_items.emplace(fi.items, &fi);

    auto lookup = [&](const std::vector<std::string>& items) -> const FrequentItemset& {
        auto it = by_items.find(items);
        if (it == by_items.end()) {
            throw_input(fmt::format("itemsets are not closed under subsets: missing {{{}}}", join_items(items)));
        }
        return *it->second;
    };

    std::vector<AssociationRule> rules;
    for (const auto& fi : itemsets) {
        const std::size_t n = fi.items.size();
        if (n < 2) continue;
        if (n >= 63) throw_input("itemset too large for rule enumeration");
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            AssociationRule rule;
            for (std::size_t i = 0; i < n; ++i) {
                ((mask >> i) & 1U ? rule.antecedent : rule.consequent).push_back(fi.items[i]);
            }
            const auto& ante = lookup(rule.antecedent);
            const auto& cons = lookup(rule.consequent);
            rule.count = fi.count;
            rule.support = fi.support;
            rule.confidence = static_cast<double>(fi.count) / static_cast<double>(ante.count);
            rule.lift = rule.confidence / cons.support;
            if (rule.confidence >= min_confidence) rules.push_back(std::move(rule));
        }
    }
    return rules;
}

std::vector<AssociationRule> filter_rules(std::span<const AssociationRule> rules, std::string_view keyword) {
    std::vector<AssociationRule> out;
    std::copy_if(rules.begin(), rules.end(), std::back_inserter(out),
                 [&](const AssociationRule& r) { return r.mentions(keyword); });
    return out;
}

std::vector<FrequentItemset> filter_itemsets(std::span<const FrequentItemset> itemsets, std::string_view keyword) {
    std::vector<FrequentItemset> out;
    std::copy_if(itemsets.begin(), itemsets.end(), std::back_inserter(out), [&](const FrequentItemset& fi) {
        return std::find(fi.items.begin(), fi.items.end(), keyword) != fi.items.end();
    });
    return out;
}

std::string join_items(std::span<const std::string> items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += '|';
        out += items[i];
    }
    return out;
}

}  // namespace trendlab::mining

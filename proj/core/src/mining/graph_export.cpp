#include "trendlab/mining/graph_export.hpp"

#include <fmt/format.h>

#include "trendlab/error.hpp"

namespace trendlab::mining {

std::vector<graphx::Edge> itemset_graph(std::span<const FrequentItemset> itemsets) {
    if (itemsets.empty()) throw_input("no itemsets to export");
    std::vector<graphx::Edge> edges;
    for (std::size_t i = 0; i < itemsets.size(); ++i) {
        const std::string node = fmt::format("itemset#{}", i);
        for (const auto& item : itemsets[i].items) {
            edges.push_back({node, item, static_cast<std::int64_t>(itemsets[i].count)});
        }
    }
    return edges;
}

std::vector<graphx::Edge> rule_graph(std::span<const AssociationRule> rules) {
    if (rules.empty()) throw_input("no rules to export");
    std::vector<graphx::Edge> edges;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const std::string node = fmt::format("rule#{}", i);
        const auto w = static_cast<std::int64_t>(rules[i].count);
        for (const auto& item : rules[i].antecedent) edges.push_back({item, node, w});
        for (const auto& item : rules[i].consequent) edges.push_back({node, item, w});
    }
    return edges;
}

}  // namespace trendlab::mining

#pragma once

#include <span>
#include <vector>

#include "trendlab/graphx/edge_list.hpp"
#include "trendlab/mining/itemsets.hpp"
#include "trendlab/mining/rules.hpp"

namespace trendlab::mining {

/// Bipartite itemset graph: node `itemset#<i>` points to each of its tokens.
/// Edge weight is the itemset's transaction count.
std::vector<graphx::Edge> itemset_graph(std::span<const FrequentItemset> itemsets);

/// Rule graph: every antecedent token points to node `rule#<i>`, which points to
/// every consequent token. Edge weight is the rule's transaction count.
std::vector<graphx::Edge> rule_graph(std::span<const AssociationRule> rules);

}  // namespace trendlab::mining

#pragma once

#include <span>
#include <string>
#include <vector>

#include "trendlab/mining/rules.hpp"

namespace trendlab::mining {

struct RuleGroup {
    std::string label;                 // most frequent antecedent item
    std::vector<std::size_t> members;  // indices into the input rule list, ascending
    double mean_support = 0.0;
    double mean_confidence = 0.0;
};

/// Grouped-matrix view of a rule set. Groups are ordered by their first member.
struct GroupedRuleMatrix {
    std::vector<RuleGroup> groups;

    std::size_t k() const { return groups.size(); }
};

/// Jaccard distance between two sorted item lists.
double jaccard_distance(std::span<const std::string> a, std::span<const std::string> b);

/// Average-linkage agglomerative clustering of the rules by Jaccard distance of
/// their antecedents, stopped at min(k, #rules) clusters. Among equally close
/// pairs the one with the lowest cluster indices merges first.
/// Throws InputError on an empty rule list or k == 0.
GroupedRuleMatrix group_rules(std::span<const AssociationRule> rules, std::size_t k);

}  // namespace trendlab::mining

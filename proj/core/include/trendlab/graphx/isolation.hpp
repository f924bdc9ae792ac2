#pragma once

#include <vector>

#include "trendlab/graphx/user_graph.hpp"
#include "trendlab/graphx/walktrap.hpp"

namespace trendlab::graphx {

struct CommunityIsolation {
    std::size_t community = 0;
    std::size_t size = 0;
    double cut = 0.0;      // projection weight leaving the community
    double volume = 0.0;   // projection degree sum inside
    double conductance = 0.0;
    bool suspicious = false;
};

inline constexpr double kDefaultIsolationThreshold = 0.05;

/// Conductance cut / min(vol(C), vol(rest)) of every community on the undirected
/// projection (0 when that minimum is 0). Communities below `threshold` are
/// flagged as suspicious-isolated. Throws InputError for a partition with fewer
/// than two communities or one that does not cover the graph.
std::vector<CommunityIsolation> community_isolation(const UserGraph& graph, const CommunityPartition& partition,
                                                    double threshold = kDefaultIsolationThreshold);

}  // namespace trendlab::graphx

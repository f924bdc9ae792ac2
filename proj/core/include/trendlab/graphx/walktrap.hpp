#pragma once

#include <span>
#include <vector>

#include "trendlab/graphx/user_graph.hpp"

namespace trendlab::graphx {

/// One agglomeration step: communities `a` and `b` merge into `merged`.
/// Ids below vertex_count() are singletons; merge i creates id n + i.
struct Merge {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t merged = 0;
    double delta_sigma = 0.0;
};

struct CommunityPartition {
    std::vector<std::size_t> assignment;  // vertex -> community in [0, community_count)
    std::size_t community_count = 0;
    std::vector<Merge> merges;            // full dendrogram
    std::vector<double> modularity_by_step;  // entry s: modularity after s merges
    std::size_t cut_step = 0;
    double modularity = 0.0;

    std::vector<std::vector<Vertex>> communities() const;
};

/// Newman-Girvan modularity of `assignment` on the undirected projection.
/// Zero for an edgeless graph.
double modularity(const UserGraph& graph, std::span<const std::size_t> assignment);

/// Pons-Latapy Walktrap on the undirected weighted projection: each vertex gets
/// a self-loop weighted by its mean incident weight, communities are compared
/// by their t-step random-walk distance, adjacent pairs merge greedily by the
/// smallest increase in mean squared distance, and the dendrogram is cut at the
/// step of maximum modularity (earliest step on ties). Disconnected components
/// are never merged. Throws InputError on an empty graph or steps == 0.
CommunityPartition walktrap(const UserGraph& graph, std::size_t steps = 4);

}  // namespace trendlab::graphx

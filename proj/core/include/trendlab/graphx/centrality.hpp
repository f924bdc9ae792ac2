#pragma once

#include <vector>

#include "trendlab/graphx/user_graph.hpp"

namespace trendlab::graphx {

struct HitsScores {
    std::vector<double> hub;
    std::vector<double> authority;
};

struct CentralityScores {
    std::vector<double> pagerank;
    std::vector<double> hub;
    std::vector<double> authority;
    std::vector<double> betweenness;
};

/// Weighted directed PageRank by power iteration. Mass of vertices without
/// out-edges is spread uniformly. Iterates until the L1 change drops below tol.
std::vector<double> pagerank(const UserGraph& graph, double damping = 0.85, double tol = 1e-10);

/// Kleinberg HITS on the weighted directed graph, starting from uniform
/// vectors; both vectors are L2-normalised. Throws InputError when the graph
/// has no edges.
HitsScores hits(const UserGraph& graph, double tol = 1e-10);

/// Brandes betweenness on the unweighted undirected projection, each
/// unordered endpoint pair counted once.
std::vector<double> betweenness(const UserGraph& graph);

/// All four scores; hub/authority are zero vectors for an edgeless graph.
CentralityScores centralities(const UserGraph& graph, double damping = 0.85);

}  // namespace trendlab::graphx

#include "trendlab/graphx/isolation.hpp"

#include <algorithm>

#include "trendlab/error.hpp"

namespace trendlab::graphx {

std::vector<CommunityIsolation> community_isolation(const UserGraph& graph, const CommunityPartition& partition,
                                                    double threshold) {
    const auto& assign = partition.assignment;
    if (assign.size() != graph.vertex_count()) throw_input("partition does not match the graph");
    if (partition.community_count < 2) throw_input("conductance needs at least two communities");

    std::vector<CommunityIsolation> out(partition.community_count);
    for (std::size_t c = 0; c < out.size(); ++c) out[c].community = c;
    double total_volume = 0.0;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        if (assign[v] >= out.size()) throw_input("community id out of range");
        auto& ci = out[assign[v]];
        ++ci.size;
        for (const auto& a : graph.neighbours(v)) {
            const auto w = static_cast<double>(a.weight);
            ci.volume += w;
            total_volume += w;
            if (assign[a.target] != assign[v]) ci.cut += w;
        }
    }
    for (auto& ci : out) {
        const double denom = std::min(ci.volume, total_volume - ci.volume);
        ci.conductance = denom > 0.0 ? ci.cut / denom : 0.0;
        ci.suspicious = ci.conductance < threshold;
    }
    return out;
}

}  // namespace trendlab::graphx

#pragma once

#include <cstdint>
#include <vector>

#include "trendlab/graphx/user_graph.hpp"

namespace trendlab::graphx {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Layout {
    std::vector<Point> position;  // per vertex
    Point min_corner;
    Point max_corner;
    double ideal_length = 0.0;    // k = sqrt(area / |V|)
};

/// Fruchterman-Reingold force-directed layout on the undirected projection.
/// Frame area equals |V| (square, centred on the origin), so the ideal edge
/// length is 1; the temperature starts at a tenth of the frame width and cools
/// linearly to zero. Initial positions are uniform in the frame from `seed`.
/// The result is translated so that its centroid is the frame centre.
Layout fr_layout(const UserGraph& graph, std::size_t iterations = 200, std::uint64_t seed = 1);

}  // namespace trendlab::graphx

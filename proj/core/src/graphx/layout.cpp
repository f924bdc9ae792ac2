#include "trendlab/graphx/layout.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "trendlab/error.hpp"

namespace trendlab::graphx {

Layout fr_layout(const UserGraph& graph, std::size_t iterations, std::uint64_t seed) {
    if (graph.empty()) throw_input("layout needs a non-empty graph");
    const std::size_t n = graph.vertex_count();
    const double area = static_cast<double>(n);
    const double width = std::sqrt(area);
    const double half = width / 2.0;
    const double k = std::sqrt(area / static_cast<double>(n));
    const double k2 = k * k;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-half, half);
    std::vector<Point> pos(n);
    for (auto& p : pos) {
        p.x = coord(rng);
        p.y = coord(rng);
    }

    std::vector<Point> disp(n);
    const double t0 = width / 10.0;
    for (std::size_t iter = 0; iter < iterations; ++iter) {
        const double temp = t0 * (1.0 - static_cast<double>(iter) / static_cast<double>(iterations));
        std::fill(disp.begin(), disp.end(), Point{});
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex u = v + 1; u < n; ++u) {
                double dx = pos[v].x - pos[u].x;
                double dy = pos[v].y - pos[u].y;
                double d = std::hypot(dx, dy);
                if (d < 1e-9) {
                    // Coincident points: push apart along a fixed diagonal.
                    dx = 1e-4;
                    dy = 1e-4 * static_cast<double>((u + v) % 3) - 1e-4;
                    d = std::hypot(dx, dy);
                }
                const double f = k2 / d;
                disp[v].x += dx / d * f;
                disp[v].y += dy / d * f;
                disp[u].x -= dx / d * f;
                disp[u].y -= dy / d * f;
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            for (const auto& a : graph.neighbours(v)) {
                const Vertex u = a.target;
                if (u <= v) continue;
                const double dx = pos[v].x - pos[u].x;
                const double dy = pos[v].y - pos[u].y;
                const double d = std::hypot(dx, dy);
                if (d < 1e-12) continue;
                const double f = d * d / k;
                disp[v].x -= dx / d * f;
                disp[v].y -= dy / d * f;
                disp[u].x += dx / d * f;
                disp[u].y += dy / d * f;
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            const double len = std::hypot(disp[v].x, disp[v].y);
            if (len > 0.0) {
                const double step = std::min(len, temp);
                pos[v].x += disp[v].x / len * step;
                pos[v].y += disp[v].y / len * step;
            }
            pos[v].x = std::clamp(pos[v].x, -half, half);
            pos[v].y = std::clamp(pos[v].y, -half, half);
        }
    }

    Point centroid;
    for (const auto& p : pos) {
        centroid.x += p.x;
        centroid.y += p.y;
    }
    centroid.x /= static_cast<double>(n);
    centroid.y /= static_cast<double>(n);

    Layout out;
    out.ideal_length = k;
    out.position = std::move(pos);
    out.min_corner = {out.position[0].x - centroid.x, out.position[0].y - centroid.y};
    out.max_corner = out.min_corner;
    for (auto& p : out.position) {
        p.x -= centroid.x;
        p.y -= centroid.y;
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw_numeric("layout produced non-finite coordinates");
        out.min_corner = {std::min(out.min_corner.x, p.x), std::min(out.min_corner.y, p.y)};
        out.max_corner = {std::max(out.max_corner.x, p.x), std::max(out.max_corner.y, p.y)};
    }
    return out;
}

}  // namespace trendlab::graphx

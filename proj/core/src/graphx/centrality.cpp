#include "trendlab/graphx/centrality.hpp"

#include <cmath>
#include <deque>

#include <fmt/format.h>

#include "trendlab/error.hpp"

namespace trendlab::graphx {
namespace {

constexpr std::size_t kMaxIterations = 100000;

void normalize_l2(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    if (s > 0.0) {
        for (double& x : v) x /= s;
    }
}

}  // namespace

std::vector<double> pagerank(const UserGraph& graph, double damping, double tol) {
    if (graph.empty()) throw_input("pagerank needs a non-empty graph");
    if (!(damping >= 0.0 && damping < 1.0)) throw_input(fmt::format("damping must be in [0, 1), got {}", damping));
    const std::size_t n = graph.vertex_count();
    const double nd = static_cast<double>(n);
    std::vector<double> out_w(n);
    for (Vertex v = 0; v < n; ++v) out_w[v] = static_cast<double>(graph.out_weight(v));

    std::vector<double> rank(n, 1.0 / nd);
    std::vector<double> next(n);
    for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
        double dangling = 0.0;
        for (Vertex v = 0; v < n; ++v) {
            if (out_w[v] == 0.0) dangling += rank[v];
        }
        const double base = (1.0 - damping) / nd + damping * dangling / nd;
        for (Vertex v = 0; v < n; ++v) {
            double inflow = 0.0;
            for (const auto& a : graph.in_arcs(v)) {
                inflow += rank[a.target] * static_cast<double>(a.weight) / out_w[a.target];
            }
            next[v] = base + damping * inflow;
        }
        double change = 0.0;
        for (Vertex v = 0; v < n; ++v) change += std::abs(next[v] - rank[v]);
        rank.swap(next);
        if (change < tol) {
            double total = 0.0;
            for (double r : rank) total += r;
            for (double& r : rank) r /= total;
            return rank;
        }
    }
    throw_numeric("pagerank did not converge");
}

HitsScores hits(const UserGraph& graph, double tol) {
    if (graph.edge_count() == 0) throw_input("HITS needs at least one edge");
    const std::size_t n = graph.vertex_count();
    HitsScores s;
    s.hub.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    s.authority.assign(n, 0.0);
    std::vector<double> auth(n);
    std::vector<double> hub(n);
    for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
        for (Vertex v = 0; v < n; ++v) {
            double a = 0.0;
            for (const auto& arc : graph.in_arcs(v)) a += static_cast<double>(arc.weight) * s.hub[arc.target];
            auth[v] = a;
        }
        normalize_l2(auth);
        for (Vertex v = 0; v < n; ++v) {
            double h = 0.0;
            for (const auto& arc : graph.out_arcs(v)) h += static_cast<double>(arc.weight) * auth[arc.target];
            hub[v] = h;
        }
        normalize_l2(hub);
        double change = 0.0;
        for (Vertex v = 0; v < n; ++v) {
            change += std::abs(auth[v] - s.authority[v]) + std::abs(hub[v] - s.hub[v]);
        }
        s.authority = auth;
        s.hub = hub;
        if (change < tol) return s;
    }
    throw_numeric("HITS did not converge");
}

std::vector<double> betweenness(const UserGraph& graph) {
    const std::size_t n = graph.vertex_count();
    // long double accumulators, rounded once at the end
    std::vector<long double> score(n, 0.0L);
    std::vector<std::vector<Vertex>> pred(n);
    std::vector<double> sigma(n);
    std::vector<long> dist(n);
    std::vector<long double> delta(n);
    std::vector<Vertex> order;
    order.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex v = 0; v < n; ++v) pred[v].clear();
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(delta.begin(), delta.end(), 0.0L);
        order.clear();
        sigma[s] = 1.0;
        dist[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (const auto& a : graph.neighbours(v)) {
                const Vertex w = a.target;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Vertex w = *it;
            for (Vertex v : pred[w]) delta[v] += static_cast<long double>(sigma[v]) / sigma[w] * (1.0L + delta[w]);
            if (w != s) score[w] += delta[w];
        }
    }
    std::vector<double> out(n);
    for (Vertex v = 0; v < n; ++v) out[v] = static_cast<double>(score[v] / 2.0L);
    return out;
}

CentralityScores centralities(const UserGraph& graph, double damping) {
    CentralityScores out;
    out.pagerank = pagerank(graph, damping);
    if (graph.edge_count() > 0) {
        auto h = hits(graph);
        out.hub = std::move(h.hub);
        out.authority = std::move(h.authority);
    } else {
        out.hub.assign(graph.vertex_count(), 0.0);
        out.authority.assign(graph.vertex_count(), 0.0);
    }
    out.betweenness = betweenness(graph);
    return out;
}

}  // namespace trendlab::graphx

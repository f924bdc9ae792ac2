#include <algorithm>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "trendlab/fixtures/fixtures.hpp"

namespace trendlab::fixtures {

using graphx::Edge;
using graphx::UserGraph;

PlantedGraph planted_two_cliques(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(4, 7);
    std::uniform_int_distribution<std::int64_t> weight(1, 3);
    std::bernoulli_distribution coin(0.5);

    const std::size_t na = size(rng);
    const std::size_t nb = size(rng);
    // shuffled ids so that the blocks interleave in vertex order
    std::vector<std::size_t> ids(na + nb);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<std::string> names(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) names[i] = fmt::format("user{:02}", ids[i]);

    std::vector<Edge> edges;
    auto clique = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = i + 1; j < hi; ++j) {
                const int kind = static_cast<int>(rng() % 3);
                if (kind != 1) edges.push_back({names[i], names[j], weight(rng)});
                if (kind != 0) edges.push_back({names[j], names[i], weight(rng)});
            }
        }
    };
    clique(0, na);
    clique(na, na + nb);
    const std::size_t bridges = coin(rng) ? 2 : 1;
    for (std::size_t b = 0; b < bridges; ++b) {
        const std::size_t u = (b * 2) % na;
        const std::size_t v = na + (b * 3) % nb;
        if (coin(rng)) edges.push_back({names[u], names[v], 1});
        else edges.push_back({names[v], names[u], 1});
    }

    PlantedGraph out;
    out.graph = UserGraph::from_edges(edges);
    out.truth.resize(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) out.truth[*out.graph.find(names[i])] = i < na ? 0 : 1;
    return out;
}

UserGraph two_cliques_with_bridge(std::size_t k) {
    std::vector<Edge> edges;
    for (const char side : {'a', 'b'}) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                edges.push_back({fmt::format("{}{}", side, i), fmt::format("{}{}", side, j), 1});
            }
        }
    }
    edges.push_back({"a0", "b0", 1});
    return UserGraph::from_edges(edges);
}

UserGraph three_chain() {
    return UserGraph::from_edges({{"a", "b", 1}, {"b", "c", 1}});
}

UserGraph random_graph(std::size_t vertices, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution arc(density);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vertices; ++i) names.push_back(fmt::format("v{}", i));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices; ++i) {
        for (std::size_t j = 0; j < vertices; ++j) {
            if (i != j && arc(rng)) edges.push_back({names[i], names[j], 1});
        }
    }
    return UserGraph::from_edges(edges, names);
}

}  // namespace trendlab::fixtures

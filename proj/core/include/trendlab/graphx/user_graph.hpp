#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trendlab/corpus/tweet.hpp"
#include "trendlab/graphx/edge_list.hpp"

namespace trendlab::graphx {

using Vertex = std::size_t;

struct Arc {
    Vertex target = 0;
    std::int64_t weight = 1;
};

/// Weighted directed user graph (retweeter -> author) with a cached undirected
/// projection whose edge weight is w(u->v) + w(v->u). Vertices are ordered by
/// name. No self-loops; weights are positive integers.
class UserGraph {
public:
    UserGraph() = default;

    /// Duplicate (source, target) pairs are summed. Throws InputError on
    /// self-loops, non-positive weights or empty names. `extra_vertices` adds
    /// vertices that may have no edges.
    static UserGraph from_edges(const std::vector<Edge>& edges, const std::vector<std::string>& extra_vertices = {});

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return names_.empty(); }

    const std::string& name(Vertex v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Vertex> find(std::string_view name) const;

    const std::vector<Arc>& out_arcs(Vertex v) const { return out_[v]; }
    const std::vector<Arc>& in_arcs(Vertex v) const { return in_[v]; }
    /// Undirected neighbours, each listed once, sorted by vertex.
    const std::vector<Arc>& neighbours(Vertex v) const { return und_[v]; }

    std::int64_t out_weight(Vertex v) const;
    /// Weighted degree in the undirected projection.
    std::int64_t degree_weight(Vertex v) const;
    /// Sum of undirected projection edge weights.
    std::int64_t total_weight() const { return total_weight_; }

    /// Directed edges sorted by (source, target).
    std::vector<Edge> edges() const;

    /// Same graph with vertex i renamed to `new_names[i]`.
    UserGraph relabel(const std::vector<std::string>& new_names) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<std::vector<Arc>> out_;
    std::vector<std::vector<Arc>> in_;
    std::vector<std::vector<Arc>> und_;
    std::size_t edge_count_ = 0;
    std::int64_t total_weight_ = 0;
};

/// One edge per (retweeter, author) pair weighted by retweet multiplicity across
/// the corpus; self-retweets dropped; authors without retweeters kept as
/// isolated vertices.
UserGraph build_user_graph(const corpus::Corpus& corpus);

}  // namespace trendlab::graphx

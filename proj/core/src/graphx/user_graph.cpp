#include "trendlab/graphx/user_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include <fmt/format.h>

#include "trendlab/csv.hpp"
#include "trendlab/error.hpp"

namespace trendlab::graphx {

UserGraph UserGraph::from_edges(const std::vector<Edge>& edges, const std::vector<std::string>& extra_vertices) {
    std::map<std::pair<std::string, std::string>, std::int64_t> merged;
    std::set<std::string> vertex_set(extra_vertices.begin(), extra_vertices.end());
    for (const auto& e : edges) {
        if (e.source.empty() || e.target.empty()) throw_input("edge with empty vertex name");
        if (e.source == e.target) throw_input(fmt::format("self-loop on '{}'", e.source));
        if (e.weight < 1) throw_input(fmt::format("edge {}->{} has weight {} < 1", e.source, e.target, e.weight));
        merged[{e.source, e.target}] += e.weight;
        vertex_set.insert(e.source);
        vertex_set.insert(e.target);
    }
    if (vertex_set.count(std::string{})) throw_input("empty vertex name");

    UserGraph g;
    g.names_.assign(vertex_set.begin(), vertex_set.end());
    for (Vertex v = 0; v < g.names_.size(); ++v) g.index_.emplace(g.names_[v], v);
    const std::size_t n = g.names_.size();
    g.out_.resize(n);
    g.in_.resize(n);
    g.und_.resize(n);
    std::vector<std::map<Vertex, std::int64_t>> und(n);
    for (const auto& [key, w] : merged) {
        const Vertex s = g.index_.at(key.first);
        const Vertex t = g.index_.at(key.second);
        g.out_[s].push_back({t, w});
        g.in_[t].push_back({s, w});
        und[s][t] += w;
        und[t][s] += w;
        g.total_weight_ += w;
    }
    g.edge_count_ = merged.size();
    for (Vertex v = 0; v < n; ++v) {
        std::sort(g.in_[v].begin(), g.in_[v].end(), [](const Arc& a, const Arc& b) { return a.target < b.target; });
        for (const auto& [u, w] : und[v]) g.und_[v].push_back({u, w});
    }
    return g;
}

std::optional<Vertex> UserGraph::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::int64_t UserGraph::out_weight(Vertex v) const {
    std::int64_t s = 0;
    for (const auto& a : out_[v]) s += a.weight;
    return s;
}

std::int64_t UserGraph::degree_weight(Vertex v) const {
    std::int64_t s = 0;
    for (const auto& a : und_[v]) s += a.weight;
    return s;
}

std::vector<Edge> UserGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex v = 0; v < names_.size(); ++v) {
        for (const auto& a : out_[v]) out.push_back({names_[v], names_[a.target], a.weight});
    }
    return out;
}

UserGraph UserGraph::relabel(const std::vector<std::string>& new_names) const {
    if (new_names.size() != names_.size()) throw_input("relabel: name count mismatch");
    std::vector<Edge> renamed;
    for (Vertex v = 0; v < names_.size(); ++v) {
        for (const auto& a : out_[v]) renamed.push_back({new_names[v], new_names[a.target], a.weight});
    }
    return from_edges(renamed, new_names);
}

UserGraph build_user_graph(const corpus::Corpus& corpus) {
    std::vector<Edge> edges;
    std::vector<std::string> authors;
    for (const auto& t : corpus.tweets) {
        authors.push_back(t.author);
        for (const auto& r : t.retweeters) {
            if (r != t.author) edges.push_back({r, t.author, 1});
        }
    }
    return UserGraph::from_edges(edges, authors);
}

void write_edge_list(std::ostream& out, const std::vector<Edge>& edges) {
    out << "source,target,weight\n";
    for (const auto& e : edges) csv::write_row(out, {e.source, e.target, std::to_string(e.weight)});
}

std::vector<Edge> parse_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw_input("edge list is empty");
    const auto header = csv::split_row(line);
    if (header.size() < 3 || header[0] != "source" || header[1] != "target" || header[2] != "weight") {
        throw_input("edge list header must be 'source,target,weight'");
    }
    std::vector<Edge> edges;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto row = csv::split_row(line);
        if (row.size() < 3) throw_input(fmt::format("line {}: expected 3 columns", line_no));
        Edge e{row[0], row[1], 0};
        try {
            std::size_t used = 0;
            e.weight = std::stoll(row[2], &used);
            if (used != row[2].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw_input(fmt::format("line {}: weight '{}' is not an integer", line_no, row[2]));
        }
        if (e.weight < 1) throw_input(fmt::format("line {}: weight must be >= 1", line_no));
        edges.push_back(std::move(e));
    }
    return edges;
}

std::vector<Edge> load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw_input(fmt::format("cannot open edge list '{}'", path.string()));
    return parse_edge_list(in);
}

}  // namespace trendlab::graphx

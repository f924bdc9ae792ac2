#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace trendlab::graphx {

/// One row of a `source,target,weight` edge-list CSV.
struct Edge {
    std::string source;
    std::string target;
    std::int64_t weight = 1;

    bool operator==(const Edge&) const = default;
};

void write_edge_list(std::ostream& out, const std::vector<Edge>& edges);

/// Reads the CSV written by write_edge_list(). Weights must be positive integers.
std::vector<Edge> parse_edge_list(std::istream& in);
std::vector<Edge> load_edge_list(const std::filesystem::path& path);

}  // namespace trendlab::graphx

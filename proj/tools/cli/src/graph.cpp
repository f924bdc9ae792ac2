#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "commands.hpp"
#include "output.hpp"
#include "trendlab/error.hpp"
#include "trendlab/graphx/centrality.hpp"
#include "trendlab/graphx/isolation.hpp"
#include "trendlab/graphx/layout.hpp"
#include "trendlab/graphx/user_graph.hpp"
#include "trendlab/graphx/walktrap.hpp"

namespace trendlab::cli {

void run_graph(const GraphOptions& o, std::ostream& out, std::ostream& err) {
    if (o.steps == 0) throw_input("--steps must be at least 1");
    if (!(o.damping >= 0.0 && o.damping < 1.0)) throw_input("--damping must lie in [0, 1)");
    if (!(o.threshold >= 0.0 && o.threshold <= 1.0)) throw_input("--threshold must lie in [0, 1]");
    const auto tweets = corpus::load_corpus(o.common.corpus);
    const auto graph = graphx::build_user_graph(tweets);
    if (graph.empty()) throw_input("corpus has no users");
    const auto dir = prepare_out_dir(o.common.out);

    const auto partition = graphx::walktrap(graph, o.steps);
    std::vector<graphx::CommunityIsolation> isolation;
    if (partition.community_count >= 2) {
        isolation = graphx::community_isolation(graph, partition, o.threshold);
    } else {
        err << "warning: a single community; conductance is undefined\n";
    }
    CsvText communities({"vertex", "community", "conductance_of_community", "flag"});
    for (graphx::Vertex v = 0; v < graph.vertex_count(); ++v) {
        const std::size_t c = partition.assignment[v];
        if (isolation.empty()) {
            communities.row({graph.name(v), std::to_string(c), "", ""});
        } else {
            const auto& iso = isolation[c];
            communities.row({graph.name(v), std::to_string(c), num(iso.conductance),
                             iso.suspicious ? "suspicious-isolated" : "none"});
        }
    }
    write_file(dir / "communities.csv", communities.str());

    const auto scores = graphx::centralities(graph, o.damping);
    CsvText central({"vertex", "pagerank", "hub", "authority", "betweenness"});
    for (graphx::Vertex v = 0; v < graph.vertex_count(); ++v) {
        central.row({graph.name(v), num(scores.pagerank[v]), num(scores.hub[v]), num(scores.authority[v]),
                     num(scores.betweenness[v])});
    }
    write_file(dir / "centrality.csv", central.str());

    const auto layout = graphx::fr_layout(graph, o.iterations, o.seed);
    CsvText pos({"vertex", "x", "y"});
    for (graphx::Vertex v = 0; v < graph.vertex_count(); ++v) {
        pos.row({graph.name(v), num(layout.position[v].x), num(layout.position[v].y)});
    }
    write_file(dir / "layout.csv", pos.str());

    std::ostringstream edges;
    graphx::write_edge_list(edges, graph.edges());
    write_file(dir / "edges.csv", edges.str());

    Json summary;
    summary["vertices"] = graph.vertex_count();
    summary["edges"] = graph.edge_count();
    summary["walktrap_steps"] = o.steps;
    summary["communities"] = partition.community_count;
    summary["modularity"] = partition.modularity;
    summary["cut_step"] = partition.cut_step;
    Json list = Json::array();
    for (const auto& iso : isolation) {
        list.push_back({{"community", iso.community},
                        {"size", iso.size},
                        {"cut", iso.cut},
                        {"volume", iso.volume},
                        {"conductance", iso.conductance},
                        {"suspicious_isolated", iso.suspicious}});
    }
    summary["isolation"] = list;
    write_json(dir / "graph.json", summary);

    std::size_t flagged = 0;
    for (const auto& iso : isolation) flagged += iso.suspicious;
    out << fmt::format("{} users, {} edges, {} communities (modularity {:.4f}), {} suspicious-isolated\n",
                       graph.vertex_count(), graph.edge_count(), partition.community_count, partition.modularity,
                       flagged);
}

}  // namespace trendlab::cli

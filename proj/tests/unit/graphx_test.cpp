#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "brute_betweenness.hpp"
#include "exhaustive_modularity.hpp"
#include "pagerank_hp.hpp"
#include "trendlab/error.hpp"
#include "trendlab/fixtures/fixtures.hpp"
#include "trendlab/graphx/centrality.hpp"
#include "trendlab/graphx/isolation.hpp"
#include "trendlab/graphx/layout.hpp"
#include "trendlab/graphx/user_graph.hpp"
#include "trendlab/graphx/walktrap.hpp"

using namespace trendlab;
using namespace trendlab::graphx;

namespace {

std::vector<std::vector<double>> directed_matrix(const UserGraph& g) {
    std::vector<std::vector<double>> w(g.vertex_count(), std::vector<double>(g.vertex_count(), 0.0));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const auto& a : g.out_arcs(v)) w[v][a.target] = static_cast<double>(a.weight);
    }
    return w;
}

std::vector<std::vector<double>> undirected_matrix(const UserGraph& g) {
    std::vector<std::vector<double>> w(g.vertex_count(), std::vector<double>(g.vertex_count(), 0.0));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const auto& a : g.neighbours(v)) w[v][a.target] = static_cast<double>(a.weight);
    }
    return w;
}

std::vector<std::vector<std::size_t>> adjacency(const UserGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const auto& a : g.neighbours(v)) adj[v].push_back(a.target);
    }
    return adj;
}

corpus::Tweet tweet(std::string id, std::string author, std::vector<std::string> retweeters) {
    corpus::Tweet t;
    t.id = std::move(id);
    t.author = std::move(author);
    t.retweeters = std::move(retweeters);
    return t;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_SUITE("user graph") {
    TEST_CASE("retweets become weighted arcs") {
        corpus::Corpus c;
        c.tweets.push_back(tweet("1", "alice", {"bob", "carol"}));
        c.tweets.push_back(tweet("2", "alice", {"bob", "alice"}));
        c.tweets.push_back(tweet("3", "dave", {}));
        const auto g = build_user_graph(c);
        REQUIRE(g.vertex_count() == 4);
        CHECK(g.edges() == std::vector<Edge>{{"bob", "alice", 2}, {"carol", "alice", 1}});
        CHECK(g.degree_weight(*g.find("dave")) == 0);
        CHECK(g.total_weight() == 3);
    }
    TEST_CASE("projection sums both directions") {
        const auto g = UserGraph::from_edges({{"a", "b", 2}, {"b", "a", 3}, {"a", "b", 1}});
        CHECK(g.edge_count() == 2);
        REQUIRE(g.neighbours(0).size() == 1);
        CHECK(g.neighbours(0)[0].weight == 6);
        CHECK(g.total_weight() == 6);
    }
    TEST_CASE("bad edges") {
        CHECK_THROWS_AS(UserGraph::from_edges({{"a", "a", 1}}), InputError);
        CHECK_THROWS_AS(UserGraph::from_edges({{"a", "b", 0}}), InputError);
        CHECK_THROWS_AS(UserGraph::from_edges({{"", "b", 1}}), InputError);
    }
    TEST_CASE("edge list round trip") {
        const auto g = fixtures::planted_two_cliques(3).graph;
        std::stringstream s;
        write_edge_list(s, g.edges());
        CHECK(parse_edge_list(s) == g.edges());
        std::stringstream bad("source,target,weight\na,b,-2\n");
        CHECK_THROWS_AS(parse_edge_list(bad), InputError);
    }
    TEST_CASE("graph fixture corpus reproduces the graph") {
        const auto g = fixtures::planted_two_cliques(9).graph;
        CHECK(build_user_graph(fixtures::corpus_from_graph(g)).edges() == g.edges());
    }
}

TEST_SUITE("pagerank") {
    TEST_CASE("mutual pair") {
        const auto pr = pagerank(UserGraph::from_edges({{"a", "b", 1}, {"b", "a", 1}}));
        CHECK(pr[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(pr[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
    TEST_CASE("single isolated vertex") {
        const auto pr = pagerank(UserGraph::from_edges({}, {"solo"}));
        REQUIRE(pr.size() == 1);
        CHECK(pr[0] == doctest::Approx(1.0).epsilon(1e-15));
    }
    TEST_CASE("3-chain against the 50-digit oracle") {
        const auto g = fixtures::three_chain();
        const auto pr = pagerank(g);
        const auto exact = oracle::pagerank_exact(directed_matrix(g), oracle::hp("0.85"));
        for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(pr[i] - exact[i].convert_to<double>()) < 1e-9);
        CHECK(std::abs(sum(pr) - 1.0) < 1e-9);
    }
    TEST_CASE("random weighted graphs against the oracle") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto g = fixtures::random_graph(3 + seed % 7, 0.3, seed);
            const auto pr = pagerank(g);
            const auto exact = oracle::pagerank_exact(directed_matrix(g), oracle::hp("0.85"));
            CHECK(std::abs(sum(pr) - 1.0) < 1e-9);
            for (std::size_t i = 0; i < pr.size(); ++i) {
                CHECK(pr[i] > 0.0);
                CHECK(std::abs(pr[i] - exact[i].convert_to<double>()) < 1e-9);
            }
        }
    }
    TEST_CASE("damping outside [0, 1)") {
        const auto g = fixtures::three_chain();
        CHECK_THROWS_AS(pagerank(g, 1.0), InputError);
        CHECK_THROWS_AS(pagerank(g, -0.1), InputError);
    }
}

TEST_SUITE("hits") {
    TEST_CASE("mutual pair") {
        const auto h = hits(UserGraph::from_edges({{"a", "b", 1}, {"b", "a", 1}}));
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(h.hub[i] == doctest::Approx(1.0 / std::sqrt(2.0)));
            CHECK(h.authority[i] == doctest::Approx(1.0 / std::sqrt(2.0)));
        }
    }
    TEST_CASE("star of three leaves pointing at the centre") {
        const auto g = UserGraph::from_edges({{"l1", "c", 1}, {"l2", "c", 1}, {"l3", "c", 1}});
        const auto h = hits(g);
        const Vertex c = *g.find("c");
        CHECK(h.authority[c] == doctest::Approx(1.0));
        CHECK(h.hub[c] == doctest::Approx(0.0));
        for (const char* leaf : {"l1", "l2", "l3"}) {
            CHECK(h.hub[*g.find(leaf)] == doctest::Approx(1.0 / std::sqrt(3.0)));
            CHECK(h.authority[*g.find(leaf)] == doctest::Approx(0.0));
        }
    }
    TEST_CASE("unit norm and isolated vertices score zero") {
        const auto g = UserGraph::from_edges({{"a", "b", 2}, {"b", "c", 1}, {"c", "a", 1}}, {"z"});
        const auto h = hits(g);
        double nh = 0, na = 0;
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            nh += h.hub[i] * h.hub[i];
            na += h.authority[i] * h.authority[i];
        }
        CHECK(nh == doctest::Approx(1.0));
        CHECK(na == doctest::Approx(1.0));
        CHECK(h.hub[*g.find("z")] == 0.0);
        CHECK(h.authority[*g.find("z")] == 0.0);
    }
    TEST_CASE("edgeless graph") {
        CHECK_THROWS_AS(hits(UserGraph::from_edges({}, {"a", "b"})), InputError);
        const auto all = centralities(UserGraph::from_edges({}, {"a", "b"}));
        CHECK(all.hub == std::vector<double>{0.0, 0.0});
        CHECK(all.pagerank[0] == doctest::Approx(0.5));
    }
}

TEST_SUITE("betweenness") {
    TEST_CASE("path of four") {
        const auto b = betweenness(UserGraph::from_edges({{"a", "b", 1}, {"b", "c", 5}, {"c", "d", 1}}));
        CHECK(b == std::vector<double>{0.0, 2.0, 2.0, 0.0});
    }
    TEST_CASE("star on n vertices gives (n-1)(n-2)/2 at the centre") {
        for (std::size_t n = 3; n <= 8; ++n) {
            std::vector<Edge> edges;
            for (std::size_t i = 1; i < n; ++i) edges.push_back({"leaf" + std::to_string(i), "centre", 1});
            const auto g = UserGraph::from_edges(edges);
            const auto b = betweenness(g);
            CHECK(b[*g.find("centre")] == static_cast<double>((n - 1) * (n - 2) / 2));
            CHECK(b[*g.find("leaf1")] == 0.0);
        }
    }
    TEST_CASE("every small random graph matches path enumeration") {
        std::size_t checked = 0;
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const auto g = fixtures::random_graph(2 + seed % 7, 0.15 + 0.05 * static_cast<double>(seed % 8), seed);
            const auto got = betweenness(g);
            const auto exact = oracle::brute_betweenness_exact(adjacency(g));
            for (std::size_t v = 0; v < got.size(); ++v) CHECK(got[v] == boost::rational_cast<double>(exact[v]));
            ++checked;
        }
        CHECK(checked == 1000);
    }
}

TEST_SUITE("walktrap") {
    TEST_CASE("two 5-cliques joined by a bridge") {
        const auto g = fixtures::two_cliques_with_bridge(5);
        const auto p = walktrap(g);
        CHECK(p.community_count == 2);
        std::vector<std::size_t> best;
        const double top = oracle::max_modularity(undirected_matrix(g), &best, 3);
        CHECK(oracle::rand_index(p.assignment, best) == 1.0);
        CHECK(std::abs(p.modularity - top) < 1e-12);
    }
    TEST_CASE("planted cliques are recovered") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto f = fixtures::planted_two_cliques(seed);
            const auto p = walktrap(f.graph);
            CHECK_MESSAGE(oracle::rand_index(p.assignment, f.truth) == 1.0, "seed ", seed);
        }
    }
    TEST_CASE("a single clique stays whole") {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) edges.push_back({std::to_string(i), std::to_string(j), 1});
        }
        const auto p = walktrap(UserGraph::from_edges(edges));
        CHECK(p.community_count == 1);
        CHECK(p.modularity == doctest::Approx(0.0).scale(1.0));
    }
    TEST_CASE("components are never merged") {
        const auto g = UserGraph::from_edges({{"a", "b", 1}, {"c", "d", 1}});
        const auto p = walktrap(g);
        CHECK(p.community_count == 2);
        CHECK(p.assignment[0] == p.assignment[1]);
        CHECK(p.assignment[2] == p.assignment[3]);
        CHECK(p.merges.size() == 2);
    }
    TEST_CASE("dendrogram bookkeeping and reported modularity") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto g = fixtures::random_graph(9, 0.25, seed + 100);
            const auto p = walktrap(g);
            CHECK(p.modularity_by_step.size() == p.merges.size() + 1);
            CHECK(std::abs(p.modularity - p.modularity_by_step[p.cut_step]) < 1e-12);
            CHECK(std::abs(p.modularity - modularity(g, p.assignment)) < 1e-12);
            CHECK(std::abs(p.modularity - oracle::modularity(undirected_matrix(g), p.assignment)) < 1e-12);
            const auto top = *std::max_element(p.modularity_by_step.begin(), p.modularity_by_step.end());
            CHECK(p.modularity >= top - 1e-12);
            for (std::size_t i = 0; i < p.merges.size(); ++i) CHECK(p.merges[i].merged == g.vertex_count() + i);
            std::size_t covered = 0;
            for (const auto& c : p.communities()) covered += c.size();
            CHECK(covered == g.vertex_count());
        }
    }
    TEST_CASE("bad input") {
        CHECK_THROWS_AS(walktrap(UserGraph{}), InputError);
        CHECK_THROWS_AS(walktrap(fixtures::three_chain(), 0), InputError);
    }
}

TEST_SUITE("layout") {
    TEST_CASE("single vertex sits at the centre") {
        const auto l = fr_layout(UserGraph::from_edges({}, {"a"}));
        CHECK(l.position[0].x == doctest::Approx(0.0).scale(1.0));
        CHECK(l.position[0].y == doctest::Approx(0.0).scale(1.0));
    }
    TEST_CASE("two connected vertices settle near the ideal length") {
        const auto g = UserGraph::from_edges({{"a", "b", 1}});
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const auto l = fr_layout(g, 200, seed);
            const double d = std::hypot(l.position[0].x - l.position[1].x, l.position[0].y - l.position[1].y);
            CHECK(d >= 0.25 * l.ideal_length);
            CHECK(d <= 4.0 * l.ideal_length);
        }
    }
    TEST_CASE("inside the frame, centred, deterministic") {
        const auto g = fixtures::planted_two_cliques(4).graph;
        const auto a = fr_layout(g, 150, 9);
        const auto b = fr_layout(g, 150, 9);
        double cx = 0, cy = 0;
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            CHECK(a.position[i].x == b.position[i].x);
            CHECK(a.position[i].y == b.position[i].y);
            CHECK(std::isfinite(a.position[i].x));
            cx += a.position[i].x;
            cy += a.position[i].y;
        }
        CHECK(std::abs(cx) < 1e-9);
        CHECK(std::abs(cy) < 1e-9);
        CHECK(a.ideal_length == doctest::Approx(1.0));
    }
}

TEST_SUITE("isolation") {
    TEST_CASE("clique sides have conductance 1/21") {
        const auto g = fixtures::two_cliques_with_bridge(5);
        const auto p = walktrap(g);
        const auto iso = community_isolation(g, p);
        REQUIRE(iso.size() == 2);
        for (const auto& c : iso) {
            CHECK(c.conductance == 1.0 / 21.0);
            CHECK(c.cut == 1.0);
            CHECK(c.volume == 21.0);
            CHECK(c.suspicious);
        }
        CHECK_FALSE(community_isolation(g, p, 0.04)[0].suspicious);
    }
    TEST_CASE("disconnected community has conductance 0") {
        const auto g = UserGraph::from_edges({{"a", "b", 1}, {"c", "d", 1}});
        const auto iso = community_isolation(g, walktrap(g));
        for (const auto& c : iso) {
            CHECK(c.conductance == 0.0);
            CHECK(c.suspicious);
        }
    }
    TEST_CASE("bipartite split has conductance 1") {
        const auto g = UserGraph::from_edges({{"a", "b", 1}});
        CommunityPartition p;
        p.assignment = {0, 1};
        p.community_count = 2;
        for (const auto& c : community_isolation(g, p)) {
            CHECK(c.conductance == 1.0);
            CHECK_FALSE(c.suspicious);
        }
    }
    TEST_CASE("needs two communities covering the graph") {
        const auto g = fixtures::three_chain();
        CommunityPartition one;
        one.assignment = {0, 0, 0};
        one.community_count = 1;
        CHECK_THROWS_AS(community_isolation(g, one), InputError);
        CommunityPartition short_cover;
        short_cover.assignment = {0, 1};
        short_cover.community_count = 2;
        CHECK_THROWS_AS(community_isolation(g, short_cover), InputError);
    }
}

TEST_SUITE("relabelling") {
    TEST_CASE("scores and communities follow a vertex permutation") {
        std::mt19937_64 rng(3);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto g = fixtures::planted_two_cliques(seed).graph;
            const std::size_t n = g.vertex_count();
            std::vector<std::string> names(n);
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (std::size_t i = 0; i < n; ++i) names[i] = "x" + std::to_string(perm[i]);
            const auto h = g.relabel(names);
            const auto a = centralities(g);
            const auto b = centralities(h);
            const auto pa = walktrap(g);
            const auto pb = walktrap(h);
            std::vector<std::size_t> mapped(n);
            for (Vertex v = 0; v < n; ++v) {
                const Vertex w = *h.find(names[v]);
                CHECK(std::abs(a.pagerank[v] - b.pagerank[w]) < 1e-12);
                CHECK(std::abs(a.hub[v] - b.hub[w]) < 1e-9);
                CHECK(std::abs(a.authority[v] - b.authority[w]) < 1e-9);
                CHECK(a.betweenness[v] == b.betweenness[w]);
                mapped[v] = pb.assignment[w];
            }
            CHECK(oracle::rand_index(pa.assignment, mapped) == 1.0);
            CHECK(std::abs(pa.modularity - pb.modularity) < 1e-12);
        }
    }
}

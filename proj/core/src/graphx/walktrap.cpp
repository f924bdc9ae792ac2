#include "trendlab/graphx/walktrap.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "trendlab/error.hpp"

namespace trendlab::graphx {
namespace {

// Connected components of the undirected projection; vertices keep a local
// index inside their component so that random-walk vectors stay component-sized.
struct Components {
    std::vector<std::size_t> of;     // vertex -> component
    std::vector<std::size_t> local;  // vertex -> position inside component
    std::vector<std::vector<Vertex>> members;
};

Components find_components(const UserGraph& g) {
    const std::size_t n = g.vertex_count();
    Components c;
    c.of.assign(n, n);
    c.local.assign(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (c.of[s] != n) continue;
        const std::size_t id = c.members.size();
        c.members.emplace_back();
        std::vector<Vertex> stack{s};
        c.of[s] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            c.local[v] = c.members[id].size();
            c.members[id].push_back(v);
            for (const auto& a : g.neighbours(v)) {
                if (c.of[a.target] == n) {
                    c.of[a.target] = id;
                    stack.push_back(a.target);
                }
            }
        }
    }
    return c;
}

struct Community {
    std::size_t component = 0;
    std::size_t size = 0;
    std::vector<double> walk;     // t-step distribution over the component
    std::set<std::size_t> adjacent;
    double internal = 0.0;        // projection weight inside
    double degree = 0.0;          // projection degree sum
    bool alive = true;
};

}  // namespace

std::vector<std::vector<Vertex>> CommunityPartition::communities() const {
    std::vector<std::vector<Vertex>> out(community_count);
    for (Vertex v = 0; v < assignment.size(); ++v) out[assignment[v]].push_back(v);
    return out;
}

double modularity(const UserGraph& graph, std::span<const std::size_t> assignment) {
    const double m = static_cast<double>(graph.total_weight());
    if (m <= 0.0) return 0.0;
    std::map<std::size_t, std::pair<double, double>> per;  // internal weight, degree
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        auto& [in, deg] = per[assignment[v]];
        for (const auto& a : graph.neighbours(v)) {
            deg += static_cast<double>(a.weight);
            if (a.target > v && assignment[a.target] == assignment[v]) in += static_cast<double>(a.weight);
        }
    }
    double q = 0.0;
    for (const auto& [c, p] : per) {
        const double frac = p.second / (2.0 * m);
        q += p.first / m - frac * frac;
    }
    return q;
}

CommunityPartition walktrap(const UserGraph& graph, std::size_t steps) {
    if (graph.empty()) throw_input("walktrap needs a non-empty graph");
    if (steps == 0) throw_input("walktrap needs at least one random-walk step");
    const std::size_t n = graph.vertex_count();
    const auto comps = find_components(graph);

    // Loop-augmented degrees used by the random walk.
    std::vector<double> loop(n);
    std::vector<double> walk_degree(n);
    for (Vertex v = 0; v < n; ++v) {
        const auto& nb = graph.neighbours(v);
        const double total = static_cast<double>(graph.degree_weight(v));
        loop[v] = nb.empty() ? 1.0 : total / static_cast<double>(nb.size());
        walk_degree[v] = total + loop[v];
    }

    std::vector<Community> comm;
    comm.reserve(2 * n);
    for (Vertex v = 0; v < n; ++v) {
        const auto cid = comps.of[v];
        const auto& members = comps.members[cid];
        std::vector<double> p(members.size(), 0.0);
        p[comps.local[v]] = 1.0;
        for (std::size_t s = 0; s < steps; ++s) {
            std::vector<double> next(members.size(), 0.0);
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (p[i] == 0.0) continue;
                const Vertex u = members[i];
                const double share = p[i] / walk_degree[u];
                next[i] += share * loop[u];
                for (const auto& a : graph.neighbours(u)) {
                    next[comps.local[a.target]] += share * static_cast<double>(a.weight);
                }
            }
            p = std::move(next);
        }
        Community c;
        c.component = cid;
        c.size = 1;
        c.walk = std::move(p);
        for (const auto& a : graph.neighbours(v)) c.adjacent.insert(a.target);
        c.degree = static_cast<double>(graph.degree_weight(v));
        comm.push_back(std::move(c));
    }

    const double nd = static_cast<double>(n);
    auto delta_sigma = [&](std::size_t a, std::size_t b) {
        const auto& ca = comm[a];
        const auto& cb = comm[b];
        const auto& members = comps.members[ca.component];
        double r2 = 0.0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const double d = ca.walk[i] - cb.walk[i];
            r2 += d * d / walk_degree[members[i]];
        }
        const double sa = static_cast<double>(ca.size);
        const double sb = static_cast<double>(cb.size);
        return (sa * sb / (sa + sb)) * r2 / nd;
    };

    std::set<std::tuple<double, std::size_t, std::size_t>> queue;
    std::map<std::pair<std::size_t, std::size_t>, double> key;
    auto push = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        const double d = delta_sigma(a, b);
        queue.emplace(d, a, b);
        key[{a, b}] = d;
    };
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t u : comm[v].adjacent) {
            if (v < u) push(v, u);
        }
    }

    CommunityPartition out;
    const double m = static_cast<double>(graph.total_weight());
    double q = 0.0;
    if (m > 0.0) {
        for (Vertex v = 0; v < n; ++v) {
            const double f = comm[v].degree / (2.0 * m);
            q -= f * f;
        }
    }
    out.modularity_by_step.push_back(q);

    // Projection weight between two communities, needed for the internal-weight update.
    auto cross_weight = [&](const std::vector<Vertex>& left, const std::vector<std::size_t>& owner,
                            std::size_t other) {
        double w = 0.0;
        for (Vertex v : left) {
            for (const auto& a : graph.neighbours(v)) {
                if (owner[a.target] == other) w += static_cast<double>(a.weight);
            }
        }
        return w;
    };
    std::vector<std::size_t> owner(n);
    std::vector<std::vector<Vertex>> verts(n);
    for (Vertex v = 0; v < n; ++v) {
        owner[v] = v;
        verts[v] = {v};
    }

    while (!queue.empty()) {
        const auto [d, a, b] = *queue.begin();
        queue.erase(queue.begin());
        key.erase({a, b});

        const std::size_t id = comm.size();
        Community c;
        c.component = comm[a].component;
        c.size = comm[a].size + comm[b].size;
        const double sa = static_cast<double>(comm[a].size);
        const double sb = static_cast<double>(comm[b].size);
        c.walk.resize(comm[a].walk.size());
        for (std::size_t i = 0; i < c.walk.size(); ++i) {
            c.walk[i] = (sa * comm[a].walk[i] + sb * comm[b].walk[i]) / (sa + sb);
        }
        const double between = cross_weight(verts[a], owner, b);
        c.internal = comm[a].internal + comm[b].internal + between;
        c.degree = comm[a].degree + comm[b].degree;
        for (std::size_t x : {a, b}) {
            for (std::size_t nb : comm[x].adjacent) {
                if (nb == a || nb == b) continue;
                c.adjacent.insert(nb);
                auto k = std::minmax(x, nb);
                if (auto it = key.find({k.first, k.second}); it != key.end()) {
                    queue.erase({it->second, k.first, k.second});
                    key.erase(it);
                }
                comm[nb].adjacent.erase(x);
            }
        }
        if (m > 0.0) {
            const double fa = comm[a].degree / (2.0 * m);
            const double fb = comm[b].degree / (2.0 * m);
            const double fc = c.degree / (2.0 * m);
            q += between / m - fc * fc + fa * fa + fb * fb;
        }
        comm[a].alive = false;
        comm[b].alive = false;
        comm[a].walk.clear();
        comm[b].walk.clear();
        verts.push_back({});
        auto& joined = verts.back();
        joined = std::move(verts[a]);
        joined.insert(joined.end(), verts[b].begin(), verts[b].end());
        verts[b].clear();
        for (Vertex v : joined) owner[v] = id;

        comm.push_back(std::move(c));
        for (std::size_t nb : comm[id].adjacent) {
            comm[nb].adjacent.insert(id);
            push(nb, id);
        }
        out.merges.push_back({a, b, id, d});
        out.modularity_by_step.push_back(q);
    }

    std::size_t best = 0;
    for (std::size_t s = 1; s < out.modularity_by_step.size(); ++s) {
        if (out.modularity_by_step[s] > out.modularity_by_step[best] + 1e-12) best = s;
    }
    out.cut_step = best;

    // Replay the dendrogram up to the cut.
    std::vector<std::size_t> parent(n + out.merges.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    for (std::size_t s = 0; s < best; ++s) {
        parent[out.merges[s].a] = out.merges[s].merged;
        parent[out.merges[s].b] = out.merges[s].merged;
    }
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    std::map<std::size_t, std::size_t> relabel;
    out.assignment.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        const auto r = root(v);
        auto it = relabel.find(r);
        if (it == relabel.end()) it = relabel.emplace(r, relabel.size()).first;
        out.assignment[v] = it->second;
    }
    out.community_count = relabel.size();
    out.modularity = modularity(graph, out.assignment);
    return out;
}

}  // namespace trendlab::graphx

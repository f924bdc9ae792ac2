#include "trendlab/mining/grouping.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "trendlab/error.hpp"

namespace trendlab::mining {

double jaccard_distance(std::span<const std::string> a, std::span<const std::string> b) {
    std::size_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    const std::size_t uni = a.size() + b.size() - common;
    if (uni == 0) return 0.0;
    return 1.0 - static_cast<double>(common) / static_cast<double>(uni);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Greedy average linkage over weighted clusters with cached row minima.
// nn[i] is the lowest-index active j > i at the smallest distance from i.
void agglomerate(std::vector<std::vector<std::size_t>>& members, std::vector<double> dist, std::size_t k) {
    const std::size_t n = members.size();
    std::vector<bool> active(n, true);
    std::vector<std::size_t> nn(n, n);
    std::vector<double> nnd(n, kInf);
    const auto refresh = [&](std::size_t i) {
        nn[i] = n;
        nnd[i] = kInf;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (active[j] && dist[i * n + j] < nnd[i]) {
                nnd[i] = dist[i * n + j];
                nn[i] = j;
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i) refresh(i);

    for (std::size_t clusters = n; clusters > k; --clusters) {
        std::size_t a = n;
        double best = kInf;
        for (std::size_t i = 0; i < n; ++i) {
            if (active[i] && nn[i] < n && (a == n || nnd[i] < best)) {
                best = nnd[i];
                a = i;
            }
        }
        const std::size_t b = nn[a];
        const double sa = static_cast<double>(members[a].size());
        const double sb = static_cast<double>(members[b].size());
        for (std::size_t m = 0; m < n; ++m) {
            if (!active[m] || m == a || m == b) continue;
            const double d = (sa * dist[a * n + m] + sb * dist[b * n + m]) / (sa + sb);
            dist[a * n + m] = d;
            dist[m * n + a] = d;
        }
        members[a].insert(members[a].end(), members[b].begin(), members[b].end());
        std::sort(members[a].begin(), members[a].end());
        members[b].clear();
        active[b] = false;

        refresh(a);
        for (std::size_t i = 0; i < b; ++i) {
            if (!active[i] || i == a) continue;
            if (nn[i] == a || nn[i] == b) {
                refresh(i);
            } else if (i < a) {
                const double d = dist[i * n + a];
                if (d < nnd[i] || (d == nnd[i] && a < nn[i])) {
                    nnd[i] = d;
                    nn[i] = a;
                }
            }
        }
    }
    std::erase_if(members, [](const auto& m) { return m.empty(); });
}

}  // namespace

GroupedRuleMatrix group_rules(std::span<const AssociationRule> rules, std::size_t k) {
    if (rules.empty()) throw_input("cannot group an empty rule list");
    if (k == 0) throw_input("group count must be at least 1");
    const std::size_t n = rules.size();
    k = std::min(k, n);

    // Rules sharing an antecedent sit at distance zero and merge first.
    std::map<std::vector<std::string>, std::size_t> slot;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [it, fresh] = slot.try_emplace(rules[i].antecedent, members.size());
        if (fresh) members.emplace_back();
        members[it->second].push_back(i);
    }

    if (members.size() <= k) {
        // Not enough distinct antecedents: the latest duplicates stay apart.
        std::vector<std::vector<std::size_t>> split;
        std::size_t extra = k - members.size();
        for (auto g = members.rbegin(); g != members.rend(); ++g) {
            std::size_t keep = g->size();
            while (extra > 0 && keep > 1) {
                --keep;
                --extra;
            }
            for (std::size_t j = g->size(); j-- > keep;) split.push_back({(*g)[j]});
            split.emplace_back(g->begin(), g->begin() + static_cast<std::ptrdiff_t>(keep));
        }
        members = std::move(split);
    } else {
        const std::size_t m = members.size();
        std::vector<double> dist(m * m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                const double d =
                    jaccard_distance(rules[members[i].front()].antecedent, rules[members[j].front()].antecedent);
                dist[i * m + j] = d;
                dist[j * m + i] = d;
            }
        }
        agglomerate(members, std::move(dist), k);
    }

    GroupedRuleMatrix out;
    for (auto& mem : members) {
        RuleGroup g;
        g.members = std::move(mem);
        std::map<std::string, std::size_t> freq;
        for (std::size_t m : g.members) {
            g.mean_support += rules[m].support;
            g.mean_confidence += rules[m].confidence;
            for (const auto& item : rules[m].antecedent) ++freq[item];
        }
        g.mean_support /= static_cast<double>(g.members.size());
        g.mean_confidence /= static_cast<double>(g.members.size());
        std::size_t best = 0;
        for (const auto& [item, c] : freq) {
            if (c > best) {
                best = c;
                g.label = item;
            }
        }
        out.groups.push_back(std::move(g));
    }
    std::sort(out.groups.begin(), out.groups.end(),
              [](const RuleGroup& a, const RuleGroup& b) { return a.members.front() < b.members.front(); });
    return out;
}

}  // namespace trendlab::mining

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "trendlab/error.hpp"
#include "trendlab/mining/itemsets.hpp"

namespace trendlab::mining {
namespace {

// Items are identified by their rank in the global frequency order; rank 0 is
// the most frequent item, so paths are inserted in ascending rank.
struct FpNode {
    int item = -1;
    std::size_t count = 0;
    int parent = -1;
    int next_same = -1;
    std::vector<int> children;
};

class FpTree {
public:
    explicit FpTree(std::size_t item_count) : heads_(item_count, -1), totals_(item_count, 0) {
        nodes_.push_back(FpNode{});  // root
    }

    void insert(std::span<const int> path, std::size_t count) {
        int cur = 0;
        for (int item : path) {
            int child = -1;
            for (int c : nodes_[static_cast<std::size_t>(cur)].children) {
                if (nodes_[static_cast<std::size_t>(c)].item == item) {
                    child = c;
                    break;
                }
            }
            if (child < 0) {
                child = static_cast<int>(nodes_.size());
                FpNode node;
                node.item = item;
                node.parent = cur;
                node.next_same = heads_[static_cast<std::size_t>(item)];
                heads_[static_cast<std::size_t>(item)] = child;
                nodes_.push_back(std::move(node));
                nodes_[static_cast<std::size_t>(cur)].children.push_back(child);
            }
            nodes_[static_cast<std::size_t>(child)].count += count;
            totals_[static_cast<std::size_t>(item)] += count;
            cur = child;
        }
    }

    std::size_t total(int item) const { return totals_[static_cast<std::size_t>(item)]; }
    std::size_t item_count() const { return heads_.size(); }

    // Prefix paths (root side first) of every node carrying `item`.
    std::vector<std::pair<std::vector<int>, std::size_t>> pattern_base(int item) const {
        std::vector<std::pair<std::vector<int>, std::size_t>> base;
        for (int n = heads_[static_cast<std::size_t>(item)]; n >= 0;
             n = nodes_[static_cast<std::size_t>(n)].next_same) {
            const auto& node = nodes_[static_cast<std::size_t>(n)];
            std::vector<int> path;
            for (int p = node.parent; p > 0; p = nodes_[static_cast<std::size_t>(p)].parent) {
                path.push_back(nodes_[static_cast<std::size_t>(p)].item);
            }
            std::reverse(path.begin(), path.end());
            if (!path.empty()) base.emplace_back(std::move(path), node.count);
        }
        return base;
    }

private:
    std::vector<FpNode> nodes_;
    std::vector<int> heads_;
    std::vector<std::size_t> totals_;
};

struct Miner {
    std::size_t min_count;
    std::size_t max_size;
    std::vector<std::pair<std::vector<int>, std::size_t>> found;

    void mine(const FpTree& tree, std::vector<int>& suffix) {
        // Least frequent item first, as in the classic formulation.
        for (int item = static_cast<int>(tree.item_count()) - 1; item >= 0; --item) {
            const std::size_t support = tree.total(item);
            if (support < min_count) continue;
            suffix.push_back(item);
            found.emplace_back(suffix, support);
            if (suffix.size() < max_size) {
                const auto base = tree.pattern_base(item);
                if (!base.empty()) {
                    std::vector<std::size_t> counts(tree.item_count(), 0);
                    for (const auto& [path, c] : base) {
                        for (int i : path) counts[static_cast<std::size_t>(i)] += c;
                    }
                    FpTree conditional(tree.item_count());
                    bool any = false;
                    std::vector<int> filtered;
                    for (const auto& [path, c] : base) {
                        filtered.clear();
                        for (int i : path) {
                            if (counts[static_cast<std::size_t>(i)] >= min_count) filtered.push_back(i);
                        }
                        if (!filtered.empty()) {
                            conditional.insert(filtered, c);
                            any = true;
                        }
                    }
                    if (any) mine(conditional, suffix);
                }
            }
            suffix.pop_back();
        }
    }
};

}  // namespace

std::size_t min_support_count(double min_support, std::size_t n) {
    const double nd = static_cast<double>(n);
    auto c = static_cast<std::size_t>(std::max(0.0, std::floor(min_support * nd) - 1.0));
    while (static_cast<double>(c) / nd < min_support) ++c;
    return c;
}

std::vector<FrequentItemset> mine_frequent_itemsets(std::span<const Transaction> transactions,
                                                    double min_support, std::size_t max_size) {
    if (!(min_support > 0.0) || min_support > 1.0) {
        throw_input(fmt::format("min_support must be in (0, 1], got {}", min_support));
    }
    if (max_size < 1) throw_input("max_size must be at least 1");
    if (transactions.empty()) return {};

    const std::size_t n = transactions.size();
    const std::size_t min_count = min_support_count(min_support, n);

    std::map<std::string, std::size_t> singles;
    for (const auto& t : transactions) {
        for (const auto& item : t.items) ++singles[item];
    }
    std::vector<std::string> names;
    for (const auto& [item, c] : singles) {
        if (c >= min_count) names.push_back(item);
    }
    // Descending count, lexicographic among equals (map order is lexicographic).
    std::stable_sort(names.begin(), names.end(),
                     [&](const std::string& a, const std::string& b) { return singles[a] > singles[b]; });
    std::map<std::string, int> rank;
    for (std::size_t i = 0; i < names.size(); ++i) rank[names[i]] = static_cast<int>(i);

    FpTree tree(names.size());
    std::vector<int> path;
    for (const auto& t : transactions) {
        path.clear();
        for (const auto& item : t.items) {
            if (auto it = rank.find(item); it != rank.end()) path.push_back(it->second);
        }
        std::sort(path.begin(), path.end());
        if (!path.empty()) tree.insert(path, 1);
    }

    Miner miner{min_count, max_size, {}};
    std::vector<int> suffix;
    miner.mine(tree, suffix);

    std::vector<FrequentItemset> out;
    out.reserve(miner.found.size());
    for (const auto& [ids, count] : miner.found) {
        FrequentItemset fi;
        for (int id : ids) fi.items.push_back(names[static_cast<std::size_t>(id)]);
        std::sort(fi.items.begin(), fi.items.end());
        fi.count = count;
        fi.support = static_cast<double>(count) / static_cast<double>(n);
        out.push_back(std::move(fi));
    }
    std::sort(out.begin(), out.end(), [](const FrequentItemset& a, const FrequentItemset& b) {
        if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
        return a.items < b.items;
    });
    return out;
}

}  // namespace trendlab::mining

#include <algorithm>
#include <map>

#include "trendlab/mining/itemsets.hpp"

namespace trendlab::mining {

std::vector<KeywordCount> keyword_frequencies(std::span<const Transaction> transactions) {
    std::map<std::string, std::size_t> counts;
    for (const auto& t : transactions) {
        for (const auto& item : t.items) ++counts[item];
    }
    std::vector<KeywordCount> out;
    out.reserve(counts.size());
    for (auto& [token, n] : counts) out.push_back({token, n});
    std::stable_sort(out.begin(), out.end(),
                     [](const KeywordCount& a, const KeywordCount& b) { return a.count > b.count; });
    return out;
}

}  // namespace trendlab::mining

#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "commands.hpp"
#include "output.hpp"
#include "trendlab/corpus/thematic_field.hpp"
#include "trendlab/error.hpp"
#include "trendlab/graphx/edge_list.hpp"
#include "trendlab/mining/graph_export.hpp"
#include "trendlab/mining/grouping.hpp"
#include "trendlab/mining/itemsets.hpp"
#include "trendlab/mining/rules.hpp"
#include "trendlab/mining/tokenize.hpp"

namespace trendlab::cli {

namespace {

std::string edge_csv(const std::vector<graphx::Edge>& edges) {
    std::ostringstream s;
    graphx::write_edge_list(s, edges);
    return s.str();
}

std::string lowercase(std::string s) {
    for (char& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return s;
}

}  // namespace

void run_mine(const MineOptions& o, std::ostream& out) {
    if (o.groups == 0) throw_input("--groups must be at least 1");
    if (!o.field.empty() && o.fields.empty()) throw_input("--field needs --fields");
    const auto tweets = corpus::load_corpus(o.common.corpus);
    std::optional<corpus::ThematicField> field;
    if (!o.fields.empty()) field = select_field(o.fields, o.field);

    std::vector<mining::Transaction> transactions;
    for (const auto& t : tweets.tweets) {
        if (field && !corpus::match_thematic_field(t, *field)) continue;
        transactions.push_back(mining::tokenize(t.text));
    }
    if (transactions.empty()) throw_input("no tweets to mine");

    const auto itemsets = mining::mine_frequent_itemsets(transactions, o.min_support, o.max_size);
    const auto rules = mining::derive_rules(itemsets, o.min_confidence);
    const std::string keyword = lowercase(o.keyword);
    const auto kept_itemsets = keyword.empty() ? itemsets : mining::filter_itemsets(itemsets, keyword);
    const auto kept_rules = keyword.empty() ? rules : mining::filter_rules(rules, keyword);

    const auto dir = prepare_out_dir(o.common.out);

    CsvText kw({"token", "count"});
    for (const auto& k : mining::keyword_frequencies(transactions)) kw.row({k.token, std::to_string(k.count)});
    write_file(dir / "keywords.csv", kw.str());

    CsvText is({"items", "support"});
    for (const auto& s : kept_itemsets) is.row({mining::join_items(s.items), num(s.support)});
    write_file(dir / "itemsets.csv", is.str());

    CsvText rs({"antecedent", "consequent", "support", "confidence", "lift"});
    for (const auto& r : kept_rules) {
        rs.row({mining::join_items(r.antecedent), mining::join_items(r.consequent), num(r.support), num(r.confidence),
                num(r.lift)});
    }
    write_file(dir / "rules.csv", rs.str());

    CsvText groups({"group", "label", "rules", "mean_support", "mean_confidence", "members"});
    CsvText matrix({"group", "label", "consequent", "rules", "mean_support", "mean_lift"});
    std::size_t group_count = 0;
    if (!kept_rules.empty()) {
        const auto grouped = mining::group_rules(kept_rules, o.groups);
        group_count = grouped.k();
        for (std::size_t g = 0; g < grouped.groups.size(); ++g) {
            const auto& grp = grouped.groups[g];
            std::string members;
            for (std::size_t m : grp.members) members += (members.empty() ? "" : "|") + std::to_string(m);
            groups.row({std::to_string(g), grp.label, std::to_string(grp.members.size()), num(grp.mean_support),
                        num(grp.mean_confidence), members});
            // one matrix cell per distinct consequent inside the group
            std::map<std::string, std::vector<std::size_t>> cells;
            for (std::size_t m : grp.members) cells[mining::join_items(kept_rules[m].consequent)].push_back(m);
            for (const auto& [consequent, idx] : cells) {
                double sup = 0.0, lift = 0.0;
                for (std::size_t m : idx) {
                    sup += kept_rules[m].support;
                    lift += kept_rules[m].lift;
                }
                const double n = static_cast<double>(idx.size());
                matrix.row({std::to_string(g), grp.label, consequent, std::to_string(idx.size()), num(sup / n),
                            num(lift / n)});
            }
        }
    }
    write_file(dir / "rule_groups.csv", groups.str());
    write_file(dir / "grouped_matrix.csv", matrix.str());
    write_file(dir / "itemset_graph.csv", edge_csv(kept_itemsets.empty() ? std::vector<graphx::Edge>{}
                                                                         : mining::itemset_graph(kept_itemsets)));
    write_file(dir / "rule_graph.csv",
               edge_csv(kept_rules.empty() ? std::vector<graphx::Edge>{} : mining::rule_graph(kept_rules)));

    out << fmt::format("{} transactions, {} itemsets, {} rules, {} groups", transactions.size(), kept_itemsets.size(),
                       kept_rules.size(), group_count);
    if (!keyword.empty()) out << fmt::format(" (keyword '{}')", keyword);
    out << '\n';
}

}  // namespace trendlab::cli

#include "trendlab/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"
#include "trendlab/error.hpp"

namespace trendlab::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

bool has_option(const std::vector<std::string>& args, const std::string& name) {
    const std::string flag = "--" + name;
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.starts_with(flag + "="); });
}

// Pulls `--config <path>` out of `args` and appends every key the command
// line did not set as `--key=value`.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw_input("--config needs a file");
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
            break;
        }
        if (args[i].starts_with("--config=")) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (!path) return args;
    std::ifstream in(*path);
    if (!in) throw_input(fmt::format("cannot open config file '{}'", *path));
    std::vector<std::string> extra;
    for (const auto& [key, value] : parse_config(in)) {
        if (!has_option(args, key)) extra.push_back("--" + key + "=" + value);
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--corpus", c.corpus, "Line-delimited JSON corpus")->required();
    cmd->add_option("--out", c.out, "Output directory")->required();
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_config(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw_input(fmt::format("config line {}: expected 'key = value'", line_no));
        std::string key = trim(std::string_view(t).substr(0, eq));
        const std::string value = trim(std::string_view(t).substr(eq + 1));
        if (key.empty()) throw_input(fmt::format("config line {}: empty key", line_no));
        std::replace(key.begin(), key.end(), '_', '-');
        if (key == "config") throw_input(fmt::format("config line {}: nested config files are not supported", line_no));
        out.emplace_back(std::move(key), value);
    }
    return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"News-trend forensics: trends, semantics mining, retweet graphs, price impact and classifiers",
                 "trendlab"};
    app.require_subcommand(1);

    TrendsOptions trends;
    auto* c_trends = app.add_subcommand("trends", "Daily counts, rolling mean and z-score per thematic field");
    add_common(c_trends, trends.common);
    c_trends->add_option("--fields", trends.fields, "Thematic-field file")->required();
    c_trends->add_option("--window", trends.window, "Rolling-mean window in days")->capture_default_str();

    MineOptions mine;
    auto* c_mine = app.add_subcommand("mine", "Keyword frequencies, frequent itemsets and association rules");
    add_common(c_mine, mine.common);
    c_mine->add_option("--fields", mine.fields, "Thematic-field file");
    c_mine->add_option("--field", mine.field, "Restrict to tweets of this field");
    c_mine->add_option("--min-support", mine.min_support, "Minimum itemset support in (0, 1]")->capture_default_str();
    c_mine->add_option("--min-confidence", mine.min_confidence, "Minimum rule confidence in (0, 1]")
        ->capture_default_str();
    c_mine->add_option("--max-size", mine.max_size, "Largest itemset size")->capture_default_str();
    c_mine->add_option("--keyword", mine.keyword, "Keep only itemsets and rules mentioning this token");
    c_mine->add_option("--groups", mine.groups, "Rule groups in the grouped matrix")->capture_default_str();

    GraphOptions graph;
    auto* c_graph = app.add_subcommand("graph", "Retweet communities, centralities and layout");
    add_common(c_graph, graph.common);
    c_graph->add_option("--steps", graph.steps, "Walktrap random-walk length")->capture_default_str();
    c_graph->add_option("--damping", graph.damping, "PageRank damping")->capture_default_str();
    c_graph->add_option("--iterations", graph.iterations, "Layout iterations")->capture_default_str();
    c_graph->add_option("--threshold", graph.threshold, "Conductance below which a community is flagged")
        ->capture_default_str();
    c_graph->add_option("--seed", graph.seed, "Layout seed")->required();

    ImpactOptions impact;
    auto* c_impact = app.add_subcommand("impact", "Student-t regression of prices on a field's tweet trend");
    add_common(c_impact, impact.common);
    c_impact->add_option("--fields", impact.fields, "Thematic-field file")->required();
    c_impact->add_option("--field", impact.field, "Field to regress on");
    c_impact->add_option("--prices", impact.prices, "Price CSV with date,close")->required();
    c_impact->add_option("--window", impact.window, "Rolling-mean window in days")->capture_default_str();
    c_impact->add_option("--chains", impact.chains, "MCMC chains")->capture_default_str();
    c_impact->add_option("--draws", impact.draws, "Kept draws per chain")->capture_default_str();
    c_impact->add_option("--warmup", impact.warmup, "Warmup draws per chain")->capture_default_str();
    c_impact->add_option("--bins", impact.bins, "Slope histogram bins")->capture_default_str();
    c_impact->add_option("--seed", impact.seed, "Sampler seed")->required();

    TrainOptions train;
    auto* c_train = app.add_subcommand("train", "Train the three-branch classifier on labeled tweets");
    add_common(c_train, train.common);
    c_train->add_option("--min-retweets", train.min_retweets, "Minimum retweet count of a training tweet")
        ->capture_default_str();
    c_train->add_option("--epochs", train.epochs)->capture_default_str();
    c_train->add_option("--lr", train.lr, "Adam learning rate")->capture_default_str();
    c_train->add_option("--batch-size", train.batch_size)->capture_default_str();
    c_train->add_option("--max-len", train.max_len, "Token sequence length")->capture_default_str();
    c_train->add_option("--svd-k", train.svd_k, "Truncated-SVD components")->capture_default_str();
    c_train->add_option("--model-dim", train.model_dim)->capture_default_str();
    c_train->add_option("--heads", train.heads)->capture_default_str();
    c_train->add_option("--layers", train.layers)->capture_default_str();
    c_train->add_option("--ff-dim", train.ff_dim)->capture_default_str();
    c_train->add_option("--embed-dim", train.embed_dim)->capture_default_str();
    c_train->add_option("--svd-hidden", train.svd_hidden)->capture_default_str();
    c_train->add_flag("--no-text", train.no_text, "Disable the transformer branch");
    c_train->add_flag("--no-bag", train.no_bag, "Disable the word/username bag branch");
    c_train->add_flag("--no-svd", train.no_svd, "Disable the retweeter SVD branch");
    c_train->add_flag("--no-balance", train.no_balance, "Unweighted loss");
    c_train->add_option("--seed", train.seed, "Initialisation, shuffling and SVD seed")->required();

    ClassifyOptions classify;
    auto* c_classify = app.add_subcommand("classify", "Classify a corpus and evaluate on its labels");
    add_common(c_classify, classify.common);
    c_classify->add_option("--model", classify.model, "Checkpoint written by train")->required();
    c_classify->add_option("--min-retweets", classify.min_retweets, "Minimum retweet count of an evaluated tweet")
        ->capture_default_str();

    DetectOptions detect;
    auto* c_detect = app.add_subcommand("detect-generated", "Share of each text generator in a corpus");
    add_common(c_detect, detect.common);
    c_detect->add_option("--model", detect.model, "Checkpoint trained on generator labels")->required();

    try {
        auto args = expand_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
        if (c_trends->parsed()) run_trends(trends, out);
        else if (c_mine->parsed()) run_mine(mine, out);
        else if (c_graph->parsed()) run_graph(graph, out, err);
        else if (c_impact->parsed()) run_impact(impact, out, err);
        else if (c_train->parsed()) run_train(train, out);
        else if (c_classify->parsed()) run_classify(classify, out);
        else if (c_detect->parsed()) run_detect(detect, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitOk;
}

}  // namespace trendlab::cli

// Acceptance suite: one PASS/FAIL line per criterion.
//   trendlab-acceptance            run all ten
//   trendlab-acceptance 3 7        run a subset
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <fmt/format.h>

#include "brute_betweenness.hpp"
#include "exhaustive_modularity.hpp"
#include "finite_difference.hpp"
#include "itemset_enumeration.hpp"
#include "jacobi_svd.hpp"
#include "pagerank_hp.hpp"
#include "tiny_model.hpp"
#include "trendlab/bayes/posterior.hpp"
#include "trendlab/bayes/prediction.hpp"
#include "trendlab/corpus/thematic_field.hpp"
#include "trendlab/corpus/time_series.hpp"
#include "trendlab/error.hpp"
#include "trendlab/features/svd.hpp"
#include "trendlab/fixtures/fixtures.hpp"
#include "trendlab/graphx/centrality.hpp"
#include "trendlab/graphx/isolation.hpp"
#include "trendlab/graphx/walktrap.hpp"
#include "trendlab/mining/itemsets.hpp"
#include "trendlab/mining/rules.hpp"
#include "trendlab/neural/dataset.hpp"
#include "trendlab/neural/detect.hpp"
#include "trendlab/neural/metrics.hpp"
#include "trendlab/neural/train.hpp"

namespace fs = std::filesystem;
using namespace trendlab;
using Items = std::vector<std::string>;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (failures.size() < 5) failures.push_back(what);
        }
    }
};

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<mining::Transaction> random_baskets(std::mt19937_64& rng, std::size_t vocab, std::size_t n) {
    std::vector<mining::Transaction> out;
    std::uniform_real_distribution<double> u(0, 1);
    // skewed item frequencies so that deep itemsets survive
    std::vector<double> p(vocab);
    for (auto& x : p) x = 0.05 + 0.6 * u(rng);
    for (std::size_t i = 0; i < n; ++i) {
        Items t;
        for (std::size_t j = 0; j < vocab; ++j) {
            if (u(rng) < p[j]) t.push_back(fmt::format("w{:02}", j));
        }
        out.push_back(mining::make_transaction(t));
    }
    return out;
}

std::vector<Items> raw_items(const std::vector<mining::Transaction>& tx) {
    std::vector<Items> out;
    for (const auto& t : tx) out.push_back(t.items);
    return out;
}

// ---- 1 ----------------------------------------------------------------------

Outcome itemset_exactness() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1);
    std::size_t itemsets = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t vocab = 1 + rng() % 15;
        const std::size_t n = 1 + rng() % 200;
        const double ms = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
        const auto tx = random_baskets(rng, vocab, n);
        const auto got = mining::mine_frequent_itemsets(tx, ms, vocab);
        const auto want = oracle::enumerate_itemsets(raw_items(tx), mining::min_support_count(ms, n), vocab);
        itemsets += got.size();
        bool same = got.size() == want.size();
        for (std::size_t i = 0; same && i < got.size(); ++i) {
            same = got[i].items == want[i].items && got[i].count == want[i].count &&
                   got[i].support == static_cast<double>(want[i].count) / static_cast<double>(n);
        }
        o.require(same, fmt::format("corpus {} (vocab {}, n {}, min_support {:.3f}) differs", trial, vocab, n, ms));
    }
    const double secs = elapsed(t0);
    o.require(secs < 30.0, fmt::format("took {:.1f} s", secs));
    o.detail = fmt::format("100 corpora, {} itemsets identical to enumeration", itemsets);
    return o;
}

// ---- 2 ----------------------------------------------------------------------

Outcome rule_arithmetic() {
    Outcome o;
    std::mt19937_64 rng(2);
    std::size_t rules_checked = 0;
    std::size_t lattices = 0;
    double worst = 0.0;
    const auto check_lattice = [&](const std::vector<mining::Transaction>& tx, double ms, double mc, std::size_t cap) {
        const auto sets = mining::mine_frequent_itemsets(tx, ms, cap);
        const auto raw = raw_items(tx);
        const double n = static_cast<double>(tx.size());
        std::map<Items, double> support;
        for (const auto& s : sets) support[s.items] = s.support;
        for (const auto& s : sets) {
            // every non-empty proper subset is reported with at least this support
            const std::size_t k = s.items.size();
            for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
                Items sub;
                for (std::size_t i = 0; i < k; ++i) {
                    if (mask & (1u << i)) sub.push_back(s.items[i]);
                }
                const auto it = support.find(sub);
                o.require(it != support.end() && it->second >= s.support,
                          fmt::format("downward closure broken at {}", mining::join_items(s.items)));
            }
        }
        for (const auto& r : mining::derive_rules(sets, mc)) {
            Items u = r.antecedent;
            u.insert(u.end(), r.consequent.begin(), r.consequent.end());
            std::sort(u.begin(), u.end());
            const double ca = static_cast<double>(oracle::raw_count(raw, r.antecedent));
            const double cb = static_cast<double>(oracle::raw_count(raw, r.consequent));
            const double cu = static_cast<double>(oracle::raw_count(raw, u));
            const double conf_err = std::abs(r.confidence - cu / ca);
            const double lift_err = std::abs(r.lift - (cu / ca) / (cb / n));
            worst = std::max({worst, conf_err, lift_err});
            o.require(conf_err <= 1e-12 && lift_err <= 1e-12,
                      fmt::format("rule {} -> {}", mining::join_items(r.antecedent), mining::join_items(r.consequent)));
            ++rules_checked;
        }
        ++lattices;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t vocab = 2 + rng() % 14;
        const auto tx = random_baskets(rng, vocab, 1 + rng() % 200);
        check_lattice(tx, std::uniform_real_distribution<double>(0.05, 0.5)(rng),
                      std::uniform_real_distribution<double>(0.05, 1.0)(rng), 5);
    }
    for (const auto& c : {fixtures::demo_corpus(), fixtures::overfit_corpus(1), fixtures::generated_text_corpus(400, 7)}) {
        std::vector<mining::Transaction> tx;
        for (const auto& t : c.tweets) tx.push_back(mining::tokenize(t.text));
        check_lattice(tx, 0.02, 0.5, 5);
    }
    o.detail = fmt::format("{} rules over {} lattices, worst deviation {:.1e}", rules_checked, lattices, worst);
    return o;
}

// ---- 3 ----------------------------------------------------------------------

std::vector<std::vector<std::size_t>> adjacency(const graphx::UserGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.vertex_count());
    for (graphx::Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const auto& a : g.neighbours(v)) adj[v].push_back(a.target);
    }
    return adj;
}

std::vector<std::vector<double>> directed_matrix(const graphx::UserGraph& g) {
    std::vector<std::vector<double>> w(g.vertex_count(), std::vector<double>(g.vertex_count(), 0.0));
    for (graphx::Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const auto& a : g.out_arcs(v)) w[v][a.target] = static_cast<double>(a.weight);
    }
    return w;
}

Outcome graph_oracles() {
    Outcome o;
    std::vector<graphx::UserGraph> small = {fixtures::three_chain()};
    for (std::size_t k = 2; k <= 4; ++k) small.push_back(fixtures::two_cliques_with_bridge(k));
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto f = fixtures::planted_two_cliques(seed);
        if (f.graph.vertex_count() <= 8) small.push_back(std::move(f.graph));
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        small.push_back(fixtures::random_graph(2 + seed % 7, 0.15 + 0.05 * static_cast<double>(seed % 8), seed));
    }
    for (std::size_t i = 0; i < small.size(); ++i) {
        const auto got = graphx::betweenness(small[i]);
        const auto exact = oracle::brute_betweenness_exact(adjacency(small[i]));
        for (std::size_t v = 0; v < got.size(); ++v) {
            o.require(got[v] == boost::rational_cast<double>(exact[v]), fmt::format("betweenness fixture {} vertex {}", i, v));
        }
    }

    double pr_sum_err = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto pr = graphx::pagerank(fixtures::random_graph(2 + seed % 30, 0.2, seed));
        pr_sum_err = std::max(pr_sum_err, std::abs(std::accumulate(pr.begin(), pr.end(), 0.0) - 1.0));
    }
    o.require(pr_sum_err < 1e-9, fmt::format("pagerank sums off by {:.2e}", pr_sum_err));
    const auto chain = fixtures::three_chain();
    const auto pr = graphx::pagerank(chain);
    const auto exact = oracle::pagerank_exact(directed_matrix(chain), oracle::hp("0.85"));
    double chain_err = 0.0;
    for (std::size_t i = 0; i < 3; ++i) chain_err = std::max(chain_err, std::abs(pr[i] - exact[i].convert_to<double>()));
    o.require(chain_err < 1e-9, fmt::format("3-chain pagerank off by {:.2e}", chain_err));

    std::size_t recovered = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto f = fixtures::planted_two_cliques(seed);
        const bool ok = oracle::rand_index(graphx::walktrap(f.graph).assignment, f.truth) == 1.0;
        recovered += ok;
        o.require(ok, fmt::format("walktrap misses planted cliques for seed {}", seed));
    }

    const auto bridge = fixtures::two_cliques_with_bridge(5);
    const auto iso = graphx::community_isolation(bridge, graphx::walktrap(bridge));
    o.require(iso.size() == 2, "bridge fixture does not split in two");
    for (const auto& c : iso) o.require(c.conductance == 1.0 / 21.0, fmt::format("conductance {}", c.conductance));

    o.detail = fmt::format(
        "betweenness exact on {} graphs; pagerank sum err {:.1e}, 3-chain err {:.1e}; walktrap {}/20; conductance 1/21",
        small.size(), pr_sum_err, chain_err, recovered);
    return o;
}

// ---- 4 ----------------------------------------------------------------------

Outcome svd_fidelity() {
    Outcome o;
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g(0, 1);
    std::uniform_real_distribution<double> u(0, 1);
    double sv_err = 0.0, ortho = 0.0, ey_gap = -1e300;
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index rows = 2 + static_cast<Eigen::Index>(rng() % 49);
        const Eigen::Index cols = 2 + static_cast<Eigen::Index>(rng() % 29);
        const double density = 0.1 + 0.9 * u(rng);
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, cols);
        std::vector<features::SparseRow> sparse(static_cast<std::size_t>(rows));
        for (Eigen::Index r = 0; r < rows; ++r) {
            for (Eigen::Index c = 0; c < cols; ++c) {
                if (u(rng) < density) {
                    a(r, c) = g(rng);
                    sparse[static_cast<std::size_t>(r)].entries.emplace_back(c, a(r, c));
                }
            }
        }
        const features::SparseMatrix m(static_cast<std::size_t>(cols), std::move(sparse));
        const std::size_t k = 1 + rng() % static_cast<std::size_t>(std::min(rows, cols));
        const auto f = features::truncated_svd(m, k, static_cast<std::uint64_t>(trial));
        const auto dense = oracle::jacobi_svd(a);
        for (std::size_t i = 0; i < k; ++i) {
            sv_err = std::max(sv_err, std::abs(f.singular(static_cast<Eigen::Index>(i)) - dense.s(static_cast<Eigen::Index>(i))));
        }
        const auto residual = [](const Eigen::MatrixXd& q) {
            return (q.transpose() * q - Eigen::MatrixXd::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
        };
        ortho = std::max({ortho, residual(f.left), residual(f.right)});
        const double err = (a - f.left * f.singular.asDiagonal() * f.right.transpose()).norm();
        ey_gap = std::max(ey_gap, err - oracle::best_rank_k_error(dense.s, static_cast<Eigen::Index>(k)));
    }
    o.require(sv_err < 1e-8, fmt::format("singular values off by {:.2e}", sv_err));
    o.require(ortho < 1e-8, fmt::format("orthonormality residual {:.2e}", ortho));
    o.require(ey_gap <= 1e-6, fmt::format("rank-k error exceeds the optimum by {:.2e}", ey_gap));
    o.detail = fmt::format("50 matrices: sv err {:.1e}, orthonormality {:.1e}, Eckart-Young gap {:.1e}", sv_err, ortho,
                           ey_gap);
    return o;
}

// ---- 5 ----------------------------------------------------------------------

double mean_of(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

double sd_of(std::span<const double> v) {
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

Outcome bayesian_fit() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    bayes::FitConfig fc;
    fc.seed = 5;
    const auto post = bayes::fit(fixtures::planted_regression(200, 5), fc);
    const auto beta = post[bayes::Param::beta];
    const double bm = mean_of(beta), bsd = sd_of(beta);
    o.require(std::abs(bm - 2.0) < 3.0 * bsd, fmt::format("beta mean {:.4f} sd {:.4f}", bm, bsd));
    double max_rhat = 0.0, min_ess = 1e300;
    for (auto p : {bayes::Param::alpha, bayes::Param::beta, bayes::Param::sigma, bayes::Param::nu}) {
        const auto d = post.diagnostic(p);
        max_rhat = std::max(max_rhat, d.rhat);
        min_ess = std::min(min_ess, d.ess);
    }
    o.require(max_rhat < 1.05, fmt::format("R-hat {:.4f}", max_rhat));
    o.require(min_ess > 200.0, fmt::format("ESS {:.0f}", min_ess));

    std::vector<double> grid;
    for (int i = -30; i <= 30; ++i) grid.push_back(0.1 * i);
    for (const auto& p : bayes::predict_bands(post, grid, 5).points) {
        o.require(p.q01 <= p.q05 && p.q05 <= p.q95 && p.q95 <= p.q99, fmt::format("quantiles unordered at x = {}", p.x));
    }

    // held-out points from the generating process, pooled over replicates
    std::size_t inside = 0, total = 0;
    for (std::uint64_t rep = 0; rep < 50; ++rep) {
        const auto train = fixtures::planted_regression(200, 1000 + rep);
        const auto test = fixtures::planted_regression(100, 5000 + rep);
        bayes::FitConfig rc;
        rc.seed = 100 + rep;
        const auto rp = bayes::fit(train, rc);
        const auto band = bayes::predict_bands(rp, test.x, 200 + rep);
        for (std::size_t i = 0; i < test.x.size(); ++i) {
            const auto& p = band.points[i];
            o.require(p.q01 <= p.q05 && p.q05 <= p.q95 && p.q95 <= p.q99, "replicate quantiles unordered");
            inside += test.y[i] >= p.q05 && test.y[i] <= p.q95;
            ++total;
        }
    }
    const double coverage = static_cast<double>(inside) / static_cast<double>(total);
    o.require(coverage >= 0.86 && coverage <= 0.94, fmt::format("90% band coverage {:.4f}", coverage));
    const double secs = elapsed(t0);
    o.require(secs < 120.0, fmt::format("took {:.1f} s", secs));
    o.detail = fmt::format("beta {:.3f} +- {:.3f}, max R-hat {:.4f}, min ESS {:.0f}, coverage {:.2f}% over 50 datasets",
                           bm, bsd, max_rhat, min_ess, 100.0 * coverage);
    return o;
}

// ---- 6 ----------------------------------------------------------------------

Outcome gradient_fidelity() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::string worst_name;
    std::set<std::string> groups;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto config = testsupport::tiny_config();
        neural::Classifier model(config, seed);
        const auto batch = testsupport::tiny_batch(config, 5, seed + 10);
        for (const auto& weights : {std::vector<double>{}, std::vector<double>{0.5, 2.0, 1.25}}) {
            const auto analytic = neural::loss_and_grad(model, batch, weights);
            for (std::size_t i = 0; i < model.tensors().size(); ++i) {
                const auto numeric = oracle::central_difference(
                    model.param(i), [&] { return neural::loss(model, batch, weights); }, 1e-4);
                const auto c = oracle::compare(model.tensors()[i].name, analytic.grads[i], numeric, 1e-6);
                groups.insert(c.name);
                if (c.max_relative_error > worst) {
                    worst = c.max_relative_error;
                    worst_name = c.name;
                }
                o.require(c.max_relative_error < 1e-4, fmt::format("{}: {:.2e}", c.name, c.max_relative_error));
            }
        }
    }
    const double secs = elapsed(t0);
    o.require(secs < 60.0, fmt::format("took {:.1f} s", secs));
    o.detail = fmt::format("{} weight groups, worst relative error {:.1e} ({})", groups.size(), worst, worst_name);
    return o;
}

// ---- 7 ----------------------------------------------------------------------

Outcome username_ablation() {
    Outcome o;
    double bag_min = 1.0, text_max = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto train_corpus = fixtures::planted_username_corpus(1600, seed, "t");
        const auto val_corpus = fixtures::planted_username_corpus(400, seed + 1000, "v");
        neural::EncoderOptions eo;
        eo.seed = seed;
        const auto encoder = neural::DatasetEncoder::fit(neural::select_training_tweets(train_corpus, 5), eo);
        const auto train = neural::prepare_dataset(train_corpus, 5, encoder);
        const auto val = neural::prepare_dataset(val_corpus, 5, encoder);
        neural::TrainConfig tc;
        tc.epochs = 10;
        tc.seed = seed;
        for (const bool bag : {true, false}) {
            auto config = encoder.model_config();
            config.use_svd = false;
            config.use_bag = bag;
            neural::Classifier model(config, seed);
            neural::train(model, train, tc);
            const double acc = neural::evaluate(model, val).accuracy;
            if (bag) {
                bag_min = std::min(bag_min, acc);
                o.require(acc >= 0.95, fmt::format("seed {}: bag-enabled validation accuracy {:.4f}", seed, acc));
            } else {
                text_max = std::max(text_max, acc);
                o.require(acc <= 0.6, fmt::format("seed {}: text-only validation accuracy {:.4f}", seed, acc));
            }
        }
    }
    o.detail = fmt::format("5 seeds: bag-enabled min {:.4f}, text-only max {:.4f}", bag_min, text_max);
    return o;
}

// ---- 8 ----------------------------------------------------------------------

Outcome overfit_sanity() {
    Outcome o;
    const auto corpus = fixtures::overfit_corpus(1);
    const auto encoder = neural::DatasetEncoder::fit(neural::select_training_tweets(corpus, 5));
    const auto data = neural::prepare_dataset(corpus, 5, encoder);
    o.require(data.size() == 32, fmt::format("fixture has {} examples", data.size()));
    std::vector<std::size_t> first_perfect;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        neural::TrainConfig tc;
        tc.epochs = 200;
        tc.seed = seed;
        neural::Classifier a(encoder.model_config(), seed);
        neural::Classifier b(encoder.model_config(), seed);
        const auto ra = neural::train(a, data, tc);
        const auto rb = neural::train(b, data, tc);
        const double acc = neural::evaluate(a, data).accuracy;
        o.require(acc == 1.0, fmt::format("seed {}: training accuracy {:.4f}", seed, acc));
        bool same = ra.history == rb.history;
        for (std::size_t i = 0; same && i < a.tensors().size(); ++i) same = a.tensors()[i].value == b.tensors()[i].value;
        o.require(same, fmt::format("seed {}: reruns differ", seed));
    }
    o.detail = "32 examples, 100% after 200 epochs for seeds 1-3, reruns bit-identical";
    return o;
}

// ---- 9 ----------------------------------------------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> files;
    if (!fs::exists(dir)) return files;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        if (e.is_regular_file()) files[fs::relative(e.path(), dir).string()] = slurp(e.path());
    }
    return files;
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

Outcome pipeline_determinism() {
    Outcome o;
    const fs::path data = TRENDLAB_DATA_DIR;
    const fs::path work = fs::temp_directory_path() / fmt::format("trendlab_acceptance_{}", ::getpid());
    fs::remove_all(work);
    fs::create_directories(work);
    const std::string exe = quote(TRENDLAB_CLI);
    const auto d = [&](const char* name) { return quote(data / name); };
    const std::string model = quote(work / "train_1" / "model.bin");
    const std::string gen_model = quote(work / "train-gen_1" / "model.bin");
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"trends", "trends --corpus " + d("corpus.jsonl") + " --fields " + d("fields.txt")},
        {"mine", "mine --corpus " + d("corpus.jsonl")},
        {"mine-fake", "mine --corpus " + d("corpus.jsonl") + " --keyword fake"},
        {"graph", "graph --corpus " + d("corpus.jsonl") + " --seed 9"},
        {"impact", "impact --corpus " + d("corpus.jsonl") + " --fields " + d("fields.txt") +
                       " --field mcdonalds --prices " + d("prices.csv") + " --seed 9"},
        {"train", "train --corpus " + d("corpus.jsonl") + " --seed 9"},
        {"classify", "classify --corpus " + d("corpus.jsonl") + " --model " + model},
        {"train-gen", "train --corpus " + d("generated.jsonl") + " --seed 9 --epochs 5"},
        {"detect-generated", "detect-generated --corpus " + d("generated.jsonl") + " --model " + gen_model},
    };
    for (const auto& [name, args] : commands) {
        std::vector<std::map<std::string, std::string>> runs;
        for (int rep = 1; rep <= 2; ++rep) {
            const fs::path out = work / fmt::format("{}_{}", name, rep);
            const fs::path log = work / fmt::format("{}_{}.stdout", name, rep);
            const int rc = std::system((exe + " " + args + " --out " + quote(out) + " > " + quote(log)).c_str());
            o.require(rc == 0, fmt::format("{} exited with {}", name, rc));
            auto files = snapshot(out);
            files["<stdout>"] = slurp(log);
            runs.push_back(std::move(files));
        }
        o.require(runs[0].size() > 1, fmt::format("{} wrote nothing", name));
        o.require(runs[0] == runs[1], fmt::format("{} reruns differ", name));
    }

    const auto rows = slurp(work / "detect-generated_1" / "shares.csv");
    std::istringstream in(rows);
    std::string line;
    std::getline(in, line);
    double total = 0.0;
    while (std::getline(in, line)) total += std::stod(line.substr(line.rfind(',') + 1));
    o.require(std::abs(total - 100.0) <= 0.01, fmt::format("shares sum to {}", total));
    const std::string report = slurp(work / "detect-generated_1" / "shares.txt");
    const std::regex format(R"(^human - \d+\.\d\d%, GPT-2 - \d+\.\d\d%, RNN - \d+\.\d\d%, Others - \d+\.\d\d%\n$)");
    o.require(std::regex_match(report, format), "report format: " + report);

    // the rounding rule on its own, over many count vectors
    std::mt19937_64 rng(9);
    const std::vector<std::string> labels = {"human", "gpt2", "rnn", "other"};
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<std::size_t> counts(4);
        for (auto& c : counts) c = rng() % (trial % 2 ? 10 : 100000);
        if (std::accumulate(counts.begin(), counts.end(), std::size_t{0}) == 0) counts[0] = 1;
        const auto r = neural::share_report(labels, counts);
        double s = 0.0;
        for (const auto& c : r.shares) s += c.percent;
        o.require(std::abs(s - 100.0) <= 0.01, fmt::format("share report sums to {}", s));
        o.require(std::regex_match(r.to_string() + "\n", format), "format: " + r.to_string());
    }
    fs::remove_all(work);
    o.detail = fmt::format("{} invocations byte-identical on rerun; shares sum {:.2f}; {}", commands.size(), total,
                           report.substr(0, report.size() - 1));
    return o;
}

// ---- 10 ---------------------------------------------------------------------

Outcome trend_arithmetic() {
    Outcome o;
    o.require(corpus::rolling_mean(std::vector<double>{2, 4, 6}, 3) == std::vector<double>{2, 3, 4},
              "rolling_mean([2,4,6], 3)");
    std::mt19937_64 rng(10);
    std::normal_distribution<double> g(50, 20);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> x(2 + rng() % 200);
        for (auto& e : x) e = trial % 3 ? g(rng) : static_cast<double>(rng() % 7);
        if (std::all_of(x.begin(), x.end(), [&](double e) { return e == x[0]; })) x[0] += 1.0;
        const auto z = corpus::zscore(x);
        const double m = mean_of(z);
        double ss = 0.0;
        for (double e : z) ss += (e - m) * (e - m);
        const double psd = std::sqrt(ss / static_cast<double>(z.size()));
        worst = std::max({worst, std::abs(m), std::abs(psd - 1.0)});
        const double a = trial % 2 ? -3.5 : 0.25;
        std::vector<double> y = x;
        for (auto& e : y) e = a * e + 7.0;
        const auto zy = corpus::zscore(y);
        for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(zy[i] - (a > 0 ? 1 : -1) * z[i]));
    }
    o.require(worst < 1e-9, fmt::format("z-score invariants off by {:.2e}", worst));

    std::istringstream fields_text(fixtures::demo_fields() + "fake: fake\nbot: (planted_bot OR bird)\n");
    const auto fields = corpus::parse_thematic_fields(fields_text);
    std::size_t series = 0;
    for (const auto& c : {fixtures::demo_corpus(), fixtures::overfit_corpus(1), fixtures::generated_text_corpus(400, 7),
                          fixtures::planted_username_corpus(300, 1),
                          fixtures::corpus_from_graph(fixtures::planted_two_cliques(1).graph)}) {
        for (const auto& f : fields) {
            std::size_t matches = 0;
            for (const auto& t : c.tweets) matches += f.matches(t.text);
            if (matches == 0) {
                bool threw = false;
                try {
                    corpus::count_time_series(c, f);
                } catch (const InputError&) {
                    threw = true;
                }
                o.require(threw, "empty trend accepted");
                continue;
            }
            const auto s = corpus::count_time_series(c, f);
            o.require(std::accumulate(s.values.begin(), s.values.end(), 0.0) == static_cast<double>(matches),
                      fmt::format("series sum for field {}", f.name()));
            ++series;
        }
    }
    o.detail = fmt::format("rolling mean exact, z-score invariants within {:.1e}, {} fixture series sum to their matches",
                           worst, series);
    return o;
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const std::vector<Criterion> kCriteria = {
    {1, "itemset exactness", itemset_exactness},       {2, "rule arithmetic", rule_arithmetic},
    {3, "graph oracles", graph_oracles},               {4, "svd", svd_fidelity},
    {5, "bayesian fit", bayesian_fit},                 {6, "gradient fidelity", gradient_fidelity},
    {7, "username-branch ablation", username_ablation}, {8, "overfit sanity", overfit_sanity},
    {9, "pipeline determinism", pipeline_determinism}, {10, "trend arithmetic", trend_arithmetic},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    const auto t0 = std::chrono::steady_clock::now();
    int failed = 0;
    for (const auto& c : kCriteria) {
        if (!wanted.empty() && !wanted.contains(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = elapsed(start);
        std::cout << fmt::format("[{}] {:>2}. {}: {} ({:.1f} s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail,
                                 secs);
        for (const auto& f : o.failures) std::cout << "       - " << f << '\n';
        std::cout.flush();
        failed += !o.pass;
    }
    std::cout << fmt::format("{} criteria failed, total {:.1f} s\n", failed, elapsed(t0));
    return failed == 0 ? 0 : 1;
}

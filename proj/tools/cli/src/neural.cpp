#include <ostream>

#include <fmt/format.h>

#include "commands.hpp"
#include "output.hpp"
#include "trendlab/error.hpp"
#include "trendlab/neural/checkpoint.hpp"
#include "trendlab/neural/dataset.hpp"
#include "trendlab/neural/detect.hpp"
#include "trendlab/neural/metrics.hpp"
#include "trendlab/neural/train.hpp"

namespace trendlab::cli {

namespace {

Json eval_json(const neural::EvalReport& r, const std::vector<std::string>& classes) {
    Json per_class = Json::object();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        per_class[classes[c]] = {
            {"precision", r.precision[c]}, {"recall", r.recall[c]}, {"f1", r.f1[c]}, {"support", r.support[c]}};
    }
    std::size_t n = 0;
    for (std::size_t s : r.support) n += s;
    Json out;
    out["examples"] = n;
    out["accuracy"] = r.accuracy;
    out["classes"] = classes;
    out["confusion"] = r.confusion;
    out["per_class"] = per_class;
    return out;
}

}  // namespace

void run_train(const TrainOptions& o, std::ostream& out) {
    if (o.epochs == 0) throw_input("--epochs must be at least 1");
    if (o.batch_size == 0) throw_input("--batch-size must be at least 1");
    if (!(o.lr >= 0.0)) throw_input("--lr must be non-negative");
    const auto tweets = corpus::load_corpus(o.common.corpus);
    const auto selected = neural::select_training_tweets(tweets, o.min_retweets);
    if (selected.empty()) throw_input(fmt::format("no labeled tweets with at least {} retweets", o.min_retweets));

    neural::EncoderOptions eo;
    eo.max_len = o.max_len;
    eo.svd_k = o.no_svd ? 0 : o.svd_k;
    eo.seed = o.seed;
    const auto encoder = neural::DatasetEncoder::fit(selected, eo);
    auto config = encoder.model_config();
    config.model_dim = o.model_dim;
    config.heads = o.heads;
    config.layers = o.layers;
    config.ff_dim = o.ff_dim;
    config.embed_dim = o.embed_dim;
    config.svd_hidden = o.svd_hidden;
    config.use_transformer = !o.no_text;
    config.use_bag = !o.no_bag;
    config.use_svd = config.use_svd && !o.no_svd;
    config.validate();

    const auto data = neural::prepare_dataset(tweets, o.min_retweets, encoder);
    neural::Checkpoint ck{neural::Classifier(config, o.seed), encoder};
    neural::TrainConfig tc;
    tc.epochs = o.epochs;
    tc.lr = o.lr;
    tc.batch_size = o.batch_size;
    tc.seed = o.seed;
    tc.balance_classes = !o.no_balance;
    const auto result = neural::train(ck.model, data, tc);
    const auto report = neural::evaluate(ck.model, data);

    const auto dir = prepare_out_dir(o.common.out);
    neural::save_checkpoint(dir / "model.bin", ck);
    CsvText history({"epoch", "loss"});
    for (std::size_t e = 0; e < result.history.size(); ++e) history.row({std::to_string(e + 1), num(result.history[e])});
    write_file(dir / "history.csv", history.str());
    write_json(dir / "train_eval.json", eval_json(report, encoder.classes));

    out << fmt::format("{} examples, {} classes, {} parameters; final loss {:.6f}, training accuracy {:.4f}\n",
                       data.size(), encoder.classes.size(), ck.model.parameter_count(), result.history.back(),
                       report.accuracy);
}

void run_classify(const ClassifyOptions& o, std::ostream& out) {
    const auto ck = neural::load_checkpoint(o.model);
    const auto tweets = corpus::load_corpus(o.common.corpus);
    const auto& classes = ck.encoder.classes;

    std::vector<std::string> header = {"id", "label", "predicted"};
    for (const auto& c : classes) header.push_back("p_" + c);
    CsvText predictions(header);
    std::vector<std::vector<std::size_t>> confusion(classes.size(), std::vector<std::size_t>(classes.size(), 0));
    std::size_t evaluated = 0;
    for (const auto& t : tweets.tweets) {
        auto unlabeled = t;
        unlabeled.label.reset();
        const auto p = neural::forward(ck.model, ck.encoder.encode(unlabeled));
        Eigen::Index best = 0;
        p.maxCoeff(&best);
        std::vector<std::string> row = {t.id, t.label.value_or(""), classes[static_cast<std::size_t>(best)]};
        for (Eigen::Index c = 0; c < p.size(); ++c) row.push_back(num(p(c)));
        predictions.row(row);
        if (t.label && t.retweet_count >= o.min_retweets) {
            ++confusion[static_cast<std::size_t>(ck.encoder.class_index(*t.label))][static_cast<std::size_t>(best)];
            ++evaluated;
        }
    }

    const auto dir = prepare_out_dir(o.common.out);
    write_file(dir / "predictions.csv", predictions.str());
    if (evaluated == 0) {
        out << fmt::format("{} tweets classified; none labeled with at least {} retweets, no evaluation\n",
                           tweets.size(), o.min_retweets);
        return;
    }
    const auto report = neural::report_from_confusion(confusion);
    write_json(dir / "eval.json", eval_json(report, classes));
    out << fmt::format("{} tweets classified; accuracy {:.4f} on {} labeled\n", tweets.size(), report.accuracy,
                       evaluated);
}

void run_detect(const DetectOptions& o, std::ostream& out) {
    const auto ck = neural::load_checkpoint(o.model);
    const auto tweets = corpus::load_corpus(o.common.corpus);
    const auto report = neural::detect_generated(ck.model, ck.encoder, tweets);
    const auto dir = prepare_out_dir(o.common.out);
    CsvText shares({"label", "count", "percent"});
    for (const auto& s : report.shares) shares.row({s.label, std::to_string(s.count), fmt::format("{:.2f}", s.percent)});
    write_file(dir / "shares.csv", shares.str());
    write_file(dir / "shares.txt", report.to_string() + "\n");
    out << report.to_string() << '\n';
}

}  // namespace trendlab::cli

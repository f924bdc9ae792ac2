#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "finite_difference.hpp"
#include "tiny_model.hpp"
#include "trendlab/error.hpp"
#include "trendlab/fixtures/fixtures.hpp"
#include "trendlab/neural/checkpoint.hpp"
#include "trendlab/neural/dataset.hpp"
#include "trendlab/neural/detect.hpp"
#include "trendlab/neural/metrics.hpp"
#include "trendlab/neural/model.hpp"
#include "trendlab/neural/train.hpp"
#include "trendlab/neural/vocab.hpp"

using namespace trendlab;
using namespace trendlab::neural;
using testsupport::tiny_batch;
using testsupport::tiny_config;

namespace {

constexpr double kEps = 1e-4;
constexpr double kFloor = 1e-6;

// Worst relative error over every tensor of `model` on `batch`.
std::vector<oracle::GradientCheck> gradient_check(Classifier& model, const std::vector<Example>& batch,
                                                  const std::vector<double>& weights) {
    const auto analytic = loss_and_grad(model, batch, weights);
    std::vector<oracle::GradientCheck> out;
    for (std::size_t i = 0; i < model.tensors().size(); ++i) {
        const auto numeric = oracle::central_difference(
            model.param(i), [&] { return loss(model, batch, weights); }, kEps);
        out.push_back(oracle::compare(model.tensors()[i].name, analytic.grads[i], numeric, kFloor));
    }
    return out;
}

corpus::Tweet labeled(std::string id, std::string text, std::string author, std::vector<std::string> rts,
                      std::int64_t count, std::optional<std::string> label) {
    corpus::Tweet t;
    t.id = std::move(id);
    t.text = std::move(text);
    t.author = std::move(author);
    t.retweeters = std::move(rts);
    t.retweet_count = count;
    t.label = std::move(label);
    return t;
}

corpus::Corpus small_corpus() {
    corpus::Corpus c;
    c.tweets.push_back(labeled("1", "bio labs exposed", "ann", {"bob", "cy"}, 12, "fake"));
    c.tweets.push_back(labeled("2", "kyiv holds the line", "bob", {"ann"}, 30, "genuine"));
    c.tweets.push_back(labeled("3", "birds carry bio weapons", "cy", {"bob", "dee"}, 11, "fake"));
    c.tweets.push_back(labeled("4", "quiet day", "dee", {}, 2, "genuine"));
    c.tweets.push_back(labeled("5", "no label here", "ann", {"cy"}, 50, std::nullopt));
    return c;
}

}  // namespace

TEST_SUITE("gradients") {
    TEST_CASE("every tensor passes central differences") {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto config = tiny_config();
            Classifier model(config, seed);
            const auto batch = tiny_batch(config, 5, seed + 10);
            for (const auto& weights : {std::vector<double>{}, std::vector<double>{0.5, 2.0, 1.25}}) {
                for (const auto& g : gradient_check(model, batch, weights)) {
                    CHECK_MESSAGE(g.max_relative_error < 1e-4, g.name, " seed ", seed, " analytic ", g.analytic,
                                  " numeric ", g.numeric);
                }
            }
        }
    }
    TEST_CASE("single branches") {
        for (int branch = 0; branch < 3; ++branch) {
            auto config = tiny_config();
            config.use_transformer = branch == 0;
            config.use_bag = branch == 1;
            config.use_svd = branch == 2;
            Classifier model(config, 4);
            const auto batch = tiny_batch(config, 4, 9);
            for (const auto& g : gradient_check(model, batch, {})) {
                CHECK_MESSAGE(g.max_relative_error < 1e-4, g.name, " branch ", branch);
            }
        }
    }
    TEST_CASE("two layers, disabled branches get zero gradient") {
        auto config = tiny_config();
        config.layers = 2;
        config.use_svd = false;
        Classifier model(config, 2);
        const auto batch = tiny_batch(config, 3, 3);
        const auto lg = loss_and_grad(model, batch);
        for (std::size_t i = 0; i < model.tensors().size(); ++i) {
            if (model.tensors()[i].name.starts_with("svd.")) CHECK(lg.grads[i].isZero(0.0));
        }
        for (const auto& g : gradient_check(model, batch, {})) CHECK_MESSAGE(g.max_relative_error < 1e-4, g.name);
    }
}

TEST_SUITE("forward pass") {
    TEST_CASE("probabilities are finite and normalised") {
        const auto config = tiny_config();
        const Classifier model(config, 7);
        for (const auto& ex : tiny_batch(config, 30, 1)) {
            const auto p = forward(model, ex);
            CHECK(p.size() == 3);
            CHECK(p.allFinite());
            CHECK(std::abs(p.sum() - 1.0) < 1e-12);
            CHECK((p.array() >= 0.0).all());
        }
    }
    TEST_CASE("zero weights predict uniformly; two-class loss is ln 2") {
        auto config = tiny_config();
        config.classes = 2;
        Classifier model(config, 1);
        for (auto& t : model.tensors()) t.value.setZero();
        const auto batch = tiny_batch(config, 4, 2);
        const auto p = forward(model, batch[0]);
        CHECK(p(0) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(loss(model, batch) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    }
    TEST_CASE("bag order and padding do not matter") {
        const auto config = tiny_config();
        const Classifier model(config, 3);
        for (auto ex : tiny_batch(config, 10, 4)) {
            const auto base = forward(model, ex);
            auto shuffled = ex;
            std::reverse(shuffled.bag.begin(), shuffled.bag.end());
            CHECK((forward(model, shuffled) - base).cwiseAbs().maxCoeff() < 1e-14);
            auto padded = ex;
            padded.bag.insert(padded.bag.begin(), 0);
            padded.bag.push_back(0);
            if (padded.tokens.size() < config.max_len) padded.tokens.push_back(0);
            CHECK((forward(model, padded) - base).cwiseAbs().maxCoeff() < 1e-14);
        }
    }
    TEST_CASE("token order matters") {
        const auto config = tiny_config();
        const Classifier model(config, 3);
        Example ex = tiny_batch(config, 1, 5)[0];
        ex.tokens = {2, 3, 4};
        auto swapped = ex;
        swapped.tokens = {4, 3, 2};
        CHECK((forward(model, swapped) - forward(model, ex)).cwiseAbs().maxCoeff() > 1e-9);
    }
    TEST_CASE("inputs that do not fit the config") {
        const auto config = tiny_config();
        const Classifier model(config, 3);
        Example ex = tiny_batch(config, 1, 5)[0];
        auto bad_id = ex;
        bad_id.tokens[0] = 12;
        CHECK_THROWS_WITH_AS(forward(model, bad_id), doctest::Contains("dimension mismatch"), InputError);
        auto too_long = ex;
        too_long.tokens.assign(7, 2);
        CHECK_THROWS_AS(forward(model, too_long), InputError);
        auto bad_svd = ex;
        bad_svd.svd.resize(2);
        CHECK_THROWS_AS(forward(model, bad_svd), InputError);
        auto bad_label = ex;
        bad_label.label = 3;
        CHECK_THROWS_AS(loss(model, std::vector<Example>{bad_label}), InputError);
    }
    TEST_CASE("config validation and layout") {
        auto c = tiny_config();
        c.heads = 3;
        CHECK_THROWS_AS(c.validate(), InputError);
        c = tiny_config();
        c.use_transformer = c.use_bag = c.use_svd = false;
        CHECK_THROWS_AS(c.validate(), InputError);
        c = tiny_config();
        c.classes = 1;
        CHECK_THROWS_AS(c.validate(), InputError);
        c = tiny_config();
        c.svd_dim = 0;
        CHECK_THROWS_AS(c.validate(), InputError);
        c.use_svd = false;
        CHECK_NOTHROW(c.validate());

        const auto layout = parameter_layout(tiny_config());
        CHECK(layout.front().name == "transformer.token_embedding");
        CHECK(layout.back().name == "head.b");
        std::size_t total = 0;
        for (const auto& t : layout) total += static_cast<std::size_t>(t.value.size());
        CHECK(Classifier(tiny_config(), 1).parameter_count() == total);
        auto wrong = layout;
        wrong[0].value.resize(3, 3);
        CHECK_THROWS_WITH_AS(Classifier(tiny_config(), wrong), doctest::Contains("dimension mismatch"), InputError);
    }
    TEST_CASE("initialisation") {
        const Classifier a(tiny_config(), 5);
        const Classifier b(tiny_config(), 5);
        const Classifier other(tiny_config(), 6);
        bool differs = false;
        for (std::size_t i = 0; i < a.tensors().size(); ++i) {
            CHECK(a.param(i) == b.param(i));
            differs = differs || a.param(i) != other.param(i);
            const auto& name = a.tensors()[i].name;
            if (name.ends_with(".gamma")) CHECK((a.param(i).array() == 1.0).all());
            if (name.ends_with(".beta") || name.ends_with(".b") || name.ends_with(".b1") || name.ends_with(".b2")) {
                CHECK(a.param(i).isZero(0.0));
            }
        }
        CHECK(differs);
    }
}

TEST_SUITE("training") {
    TEST_CASE("inverse-frequency class weights") {
        std::vector<Example> data(4);
        for (std::size_t i = 0; i < 4; ++i) data[i].label = i < 3 ? 0 : 1;
        const auto w = class_weights(data, 3);
        CHECK(w[0] == doctest::Approx(4.0 / 9.0));
        CHECK(w[1] == doctest::Approx(4.0 / 3.0));
        CHECK(w[2] == 1.0);
    }
    TEST_CASE("zero learning rate keeps the loss flat") {
        const auto config = tiny_config();
        Classifier model(config, 1);
        const auto before = model.tensors();
        TrainConfig t;
        t.epochs = 5;
        t.lr = 0.0;
        const auto data = tiny_batch(config, 9, 2);
        const auto r = train(model, data, t);
        REQUIRE(r.history.size() == 5);
        for (double h : r.history) CHECK(h == r.history[0]);
        for (std::size_t i = 0; i < before.size(); ++i) CHECK(model.param(i) == before[i].value);
    }
    TEST_CASE("memorises a small batch, deterministically") {
        const auto config = tiny_config();
        const auto data = tiny_batch(config, 12, 5);
        TrainConfig t;
        t.epochs = 150;
        t.batch_size = 4;
        Classifier a(config, 3);
        Classifier b(config, 3);
        const auto ra = train(a, data, t);
        const auto rb = train(b, data, t);
        CHECK(ra.history == rb.history);
        CHECK(ra.history.back() < ra.history.front());
        CHECK(evaluate(a, data).accuracy == 1.0);
    }
    TEST_CASE("empty data") {
        Classifier model(tiny_config(), 1);
        CHECK_THROWS_AS(train(model, std::vector<Example>{}, TrainConfig{}), InputError);
        CHECK_THROWS_AS(evaluate(model, std::vector<Example>{}), InputError);
    }
}

TEST_SUITE("metrics") {
    TEST_CASE("two-class confusion") {
        const auto r = report_from_confusion({{2, 1}, {0, 3}});
        CHECK(r.accuracy == doctest::Approx(5.0 / 6.0));
        CHECK(r.precision[0] == 1.0);
        CHECK(r.recall[0] == doctest::Approx(2.0 / 3.0));
        CHECK(r.precision[1] == doctest::Approx(0.75));
        CHECK(r.recall[1] == 1.0);
        CHECK(r.f1[0] == doctest::Approx(0.8));
        CHECK(r.f1[1] == doctest::Approx(6.0 / 7.0));
        CHECK(r.support == std::vector<std::size_t>{3, 3});
    }
    TEST_CASE("never-predicted class") {
        const auto r = report_from_confusion({{4, 0}, {2, 0}});
        CHECK(r.precision[1] == 0.0);
        CHECK(r.f1[1] == 0.0);
        CHECK(r.recall[0] == 1.0);
    }
}

TEST_SUITE("vocabulary and dataset") {
    TEST_CASE("words and usernames get disjoint ids") {
        const TokenVocab v({"alpha", "news"}, {"alpha", "bob"});
        CHECK(v.size() == 6);
        CHECK(v.word_id("alpha") == 2);
        CHECK(v.username_id("alpha") == 4);
        CHECK(v.word_id("zzz") == TokenVocab::kUnknown);
        CHECK(v.username_id("zzz") == TokenVocab::kUnknown);
    }
    TEST_CASE("retweet threshold selects labeled tweets") {
        const auto c = small_corpus();
        const auto sel = select_training_tweets(c, 10);
        REQUIRE(sel.size() == 3);
        CHECK(sel[0].id == "1");
        CHECK(sel[2].id == "3");
        const auto enc = DatasetEncoder::fit(sel);
        CHECK(enc.classes == std::vector<std::string>{"fake", "genuine"});
        CHECK(prepare_dataset(c, 10, enc).size() == 3);
        CHECK_THROWS_WITH_AS(prepare_dataset(c, 100, enc), doctest::Contains("100"), InputError);
    }
    TEST_CASE("encoding") {
        const auto c = small_corpus();
        EncoderOptions opt;
        opt.max_len = 3;
        const auto enc = DatasetEncoder::fit(select_training_tweets(c, 10), opt);
        const auto ex = enc.encode(c.tweets[2]);
        CHECK(ex.tokens.size() == 3);  // truncated
        CHECK(ex.label == enc.class_index("fake"));
        CHECK(ex.bag.size() == 4 + 1 + 2);
        CHECK(std::count(ex.bag.begin(), ex.bag.end(), enc.vocab.username_id("dee")) == 1);
        CHECK(static_cast<std::size_t>(ex.svd.size()) == enc.svd_dim());
        CHECK(enc.svd_dim() == 3);
        CHECK(enc.encode(c.tweets[4]).label == -1);
        CHECK_THROWS_AS(enc.class_index("satire"), InputError);
        const auto mc = enc.model_config();
        CHECK(mc.vocab_size == enc.vocab.size());
        CHECK(mc.svd_dim == 3);
        CHECK(mc.classes == 2);
        CHECK_NOTHROW(forward(Classifier(mc, 1), ex));
    }
    TEST_CASE("one class is not enough") {
        corpus::Corpus c;
        c.tweets.push_back(labeled("1", "a b", "x", {"y"}, 10, "fake"));
        CHECK_THROWS_AS(DatasetEncoder::fit(c.tweets), InputError);
    }
}

TEST_SUITE("share report") {
    TEST_CASE("canonical order and format") {
        const std::vector<std::string> labels = {"other", "rnn", "human", "gpt2"};
        const std::vector<std::size_t> counts = {30, 3, 800, 100};
        const auto r = share_report(labels, counts);
        CHECK(r.total == 933);
        CHECK(r.shares[0].label == "human");
        CHECK(r.shares[3].label == "other");
        CHECK(r.to_string().starts_with("human - 85.74%, GPT-2 - 10.72%, RNN - 0.32%, Others - 3.22%"));
    }
    TEST_CASE("rounded shares add to exactly 100") {
        for (std::size_t a = 1; a < 40; a += 3) {
            for (std::size_t b = 0; b < 40; b += 7) {
                const std::vector<std::string> labels = {"human", "gpt2", "rnn", "zeta"};
                const std::vector<std::size_t> counts = {a, b, 1, 2};
                const auto r = share_report(labels, counts);
                long hundredths = 0;
                for (const auto& s : r.shares) hundredths += std::lround(s.percent * 100.0);
                CHECK(hundredths == 10000);
            }
        }
        const auto thirds = share_report(std::vector<std::string>{"human", "gpt2", "rnn"}, std::vector<std::size_t>{1, 1, 1});
        CHECK(thirds.to_string() == "human - 33.34%, GPT-2 - 33.33%, RNN - 33.33%");
    }
    TEST_CASE("empty report") {
        CHECK_THROWS_AS(share_report(std::vector<std::string>{"human"}, std::vector<std::size_t>{0}), InputError);
    }
}

TEST_SUITE("checkpoint") {
    TEST_CASE("round trip keeps predictions and the encoder") {
        const auto c = small_corpus();
        const auto enc = DatasetEncoder::fit(select_training_tweets(c, 10));
        const Checkpoint ck{Classifier(enc.model_config(), 4), enc};
        std::stringstream s;
        write_checkpoint(s, ck);
        CHECK(s.str().substr(0, 8) == std::string("TLMODEL\0", 8));
        const auto back = read_checkpoint(s);
        CHECK(back.encoder.classes == enc.classes);
        CHECK(back.encoder.vocab.words() == enc.vocab.words());
        REQUIRE(back.model.tensors().size() == ck.model.tensors().size());
        for (std::size_t i = 0; i < ck.model.tensors().size(); ++i) CHECK(back.model.param(i) == ck.model.param(i));
        for (const auto& t : c.tweets) {
            CHECK(forward(back.model, back.encoder.encode(t)) == forward(ck.model, enc.encode(t)));
        }
        std::stringstream again;
        write_checkpoint(again, back);
        CHECK(again.str() == s.str());
    }
    TEST_CASE("model and encoder of different sizes") {
        const auto enc = DatasetEncoder::fit(select_training_tweets(small_corpus(), 10));
        auto config = enc.model_config();
        config.vocab_size += 5;
        std::stringstream s;
        write_checkpoint(s, Checkpoint{Classifier(config, 1), enc});
        CHECK_THROWS_WITH_AS(read_checkpoint(s), doctest::Contains("dimension mismatch"), InputError);
    }
    TEST_CASE("corrupt files") {
        std::stringstream junk("definitely not a model");
        CHECK_THROWS_AS(read_checkpoint(junk), InputError);
        const auto enc = DatasetEncoder::fit(select_training_tweets(small_corpus(), 10));
        std::stringstream s;
        write_checkpoint(s, Checkpoint{Classifier(enc.model_config(), 1), enc});
        const std::string bytes = s.str();
        for (std::size_t cut : {std::size_t{12}, std::size_t{40}, bytes.size() / 2, bytes.size() - 1}) {
            std::stringstream t(bytes.substr(0, cut));
            CHECK_THROWS_AS(read_checkpoint(t), InputError);
        }
    }
}

TEST_SUITE("generated-text detection") {
    TEST_CASE("shares over a corpus") {
        const auto corpus = fixtures::generated_text_corpus(120, 3);
        const auto enc = DatasetEncoder::fit(select_training_tweets(corpus, kDefaultMinRetweets));
        CHECK(enc.classes == std::vector<std::string>{"gpt2", "human", "other", "rnn"});
        const Classifier model(enc.model_config(), 2);
        const auto r = detect_generated(model, enc, corpus);
        CHECK(r.total == 120);
        std::size_t n = 0;
        double pct = 0.0;
        for (const auto& s : r.shares) {
            n += s.count;
            pct += s.percent;
        }
        CHECK(n == 120);
        CHECK(std::abs(pct - 100.0) < 1e-9);
    }
}

#include "trendlab/neural/model.hpp"

#include <cmath>
#include <random>

#include <fmt/format.h>

#include "tensor_ops.hpp"
#include "trendlab/error.hpp"

namespace trendlab::neural {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::RowVectorXd;
using Eigen::VectorXd;

// Positions of every tensor inside Classifier::tensors(), mirroring
// parameter_layout().
struct BlockIndex {
    std::size_t ln1_gamma, ln1_beta;
    std::size_t wq, bq, wk, bk, wv, bv, wo, bo;
    std::size_t ln2_gamma, ln2_beta;
    std::size_t w1, b1, w2, b2;
};

struct LayoutIndex {
    std::size_t tok_embed = 0;
    std::size_t pos_embed = 0;
    std::vector<BlockIndex> blocks;
    std::size_t lnf_gamma = 0, lnf_beta = 0;
    std::size_t bag_embed = 0;
    std::size_t svd_w = 0, svd_b = 0;
    std::size_t head_w = 0, head_b = 0;
};

LayoutIndex make_index(const ModelConfig& c) {
    LayoutIndex ix;
    std::size_t i = 0;
    ix.tok_embed = i++;
    ix.pos_embed = i++;
    for (std::size_t l = 0; l < c.layers; ++l) {
        BlockIndex b{};
        b.ln1_gamma = i++;
        b.ln1_beta = i++;
        b.wq = i++;
        b.bq = i++;
        b.wk = i++;
        b.bk = i++;
        b.wv = i++;
        b.bv = i++;
        b.wo = i++;
        b.bo = i++;
        b.ln2_gamma = i++;
        b.ln2_beta = i++;
        b.w1 = i++;
        b.b1 = i++;
        b.w2 = i++;
        b.b2 = i++;
        ix.blocks.push_back(b);
    }
    ix.lnf_gamma = i++;
    ix.lnf_beta = i++;
    ix.bag_embed = i++;
    ix.svd_w = i++;
    ix.svd_b = i++;
    ix.head_w = i++;
    ix.head_b = i++;
    return ix;
}

struct BlockCache {
    MatrixXd x_in;
    ops::LayerNormCache ln1;
    MatrixXd h1, q, k, v;
    std::vector<MatrixXd> attn;  // per head, T x T
    MatrixXd o;
    MatrixXd x_mid;
    ops::LayerNormCache ln2;
    MatrixXd h2, f_pre, f_act;
};

struct ForwardCache {
    std::vector<int> tok_ids;
    std::vector<int> positions;
    std::vector<BlockCache> blocks;
    ops::LayerNormCache lnf;
    std::vector<int> bag_ids;
    VectorXd svd_act;
    VectorXd features;
    VectorXd probs;
};

void check_example(const ModelConfig& c, const Example& ex) {
    if (ex.tokens.size() > c.max_len) {
        throw_input(fmt::format("dimension mismatch: sequence length {} exceeds max_len {}", ex.tokens.size(),
                                c.max_len));
    }
    for (int id : ex.tokens) {
        if (id < 0 || static_cast<std::size_t>(id) >= c.vocab_size) {
            throw_input(fmt::format("dimension mismatch: token id {} outside vocabulary of {}", id, c.vocab_size));
        }
    }
    for (int id : ex.bag) {
        if (id < 0 || static_cast<std::size_t>(id) >= c.vocab_size) {
            throw_input(fmt::format("dimension mismatch: bag id {} outside vocabulary of {}", id, c.vocab_size));
        }
    }
    if (c.use_svd && static_cast<std::size_t>(ex.svd.size()) != c.svd_dim) {
        throw_input(fmt::format("dimension mismatch: {} SVD features, model expects {}", ex.svd.size(), c.svd_dim));
    }
}

VectorXd run_forward(const Classifier& model, const LayoutIndex& ix, const Example& ex, ForwardCache& cache) {
    const ModelConfig& c = model.config();
    check_example(c, ex);
    const auto d = static_cast<Index>(c.model_dim);
    const auto e = static_cast<Index>(c.embed_dim);
    const auto h = static_cast<Index>(c.svd_hidden);
    cache.features = VectorXd::Zero(static_cast<Index>(c.concat_width()));

    if (c.use_transformer) {
        cache.tok_ids.clear();
        cache.positions.clear();
        for (std::size_t t = 0; t < ex.tokens.size(); ++t) {
            if (ex.tokens[t] == 0) continue;  // padding is masked out entirely
            cache.tok_ids.push_back(ex.tokens[t]);
            cache.positions.push_back(static_cast<int>(t));
        }
        const auto T = static_cast<Index>(cache.tok_ids.size());
        if (T > 0) {
            const MatrixXd& tok = model.param(ix.tok_embed);
            const MatrixXd& pos = model.param(ix.pos_embed);
            MatrixXd x(T, d);
            for (Index t = 0; t < T; ++t) {
                x.row(t) = tok.row(cache.tok_ids[static_cast<std::size_t>(t)]) +
                           pos.row(cache.positions[static_cast<std::size_t>(t)]);
            }
            const auto heads = static_cast<Index>(c.heads);
            const Index dh = d / heads;
            const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
            cache.blocks.assign(c.layers, {});
            for (std::size_t l = 0; l < c.layers; ++l) {
                const auto& b = ix.blocks[l];
                auto& bc = cache.blocks[l];
                bc.x_in = x;
                bc.h1 = ops::layer_norm(x, model.param(b.ln1_gamma), model.param(b.ln1_beta), bc.ln1);
                bc.q = (bc.h1 * model.param(b.wq)).rowwise() + RowVectorXd(model.param(b.bq));
                bc.k = (bc.h1 * model.param(b.wk)).rowwise() + RowVectorXd(model.param(b.bk));
                bc.v = (bc.h1 * model.param(b.wv)).rowwise() + RowVectorXd(model.param(b.bv));
                bc.o.resize(T, d);
                bc.attn.resize(static_cast<std::size_t>(heads));
                for (Index hd = 0; hd < heads; ++hd) {
                    const auto qh = bc.q.middleCols(hd * dh, dh);
                    const auto kh = bc.k.middleCols(hd * dh, dh);
                    const auto vh = bc.v.middleCols(hd * dh, dh);
                    auto& a = bc.attn[static_cast<std::size_t>(hd)];
                    a = ops::softmax_rows(scale * (qh * kh.transpose()));
                    bc.o.middleCols(hd * dh, dh) = a * vh;
                }
                bc.x_mid = x + ((bc.o * model.param(b.wo)).rowwise() + RowVectorXd(model.param(b.bo)));
                bc.h2 = ops::layer_norm(bc.x_mid, model.param(b.ln2_gamma), model.param(b.ln2_beta), bc.ln2);
                bc.f_pre = (bc.h2 * model.param(b.w1)).rowwise() + RowVectorXd(model.param(b.b1));
                bc.f_act = ops::gelu(bc.f_pre);
                x = bc.x_mid + ((bc.f_act * model.param(b.w2)).rowwise() + RowVectorXd(model.param(b.b2)));
            }
            const MatrixXd out = ops::layer_norm(x, model.param(ix.lnf_gamma), model.param(ix.lnf_beta), cache.lnf);
            cache.features.head(d) = out.colwise().mean().transpose();
        }
    }

    if (c.use_bag) {
        cache.bag_ids.clear();
        for (int id : ex.bag) {
            if (id != 0) cache.bag_ids.push_back(id);
        }
        if (!cache.bag_ids.empty()) {
            const MatrixXd& table = model.param(ix.bag_embed);
            VectorXd sum = VectorXd::Zero(e);
            for (int id : cache.bag_ids) sum += table.row(id).transpose();
            cache.features.segment(d, e) = sum / static_cast<double>(cache.bag_ids.size());
        }
    }

    if (c.use_svd) {
        const VectorXd pre = model.param(ix.svd_w).transpose() * ex.svd + model.param(ix.svd_b).transpose();
        cache.svd_act = pre.array().tanh();
        cache.features.segment(d + e, h) = cache.svd_act;
    }

    const VectorXd logits = model.param(ix.head_w).transpose() * cache.features + model.param(ix.head_b).transpose();
    cache.probs = ops::softmax(logits);
    return cache.probs;
}

// Accumulates gradients for one example given dL/dlogits.
void run_backward(const Classifier& model, const LayoutIndex& ix, const Example& ex, const ForwardCache& cache,
                  const VectorXd& dlogits, std::vector<MatrixXd>& g) {
    const ModelConfig& c = model.config();
    const auto d = static_cast<Index>(c.model_dim);
    const auto e = static_cast<Index>(c.embed_dim);
    const auto h = static_cast<Index>(c.svd_hidden);

    g[ix.head_w] += cache.features * dlogits.transpose();
    g[ix.head_b] += dlogits.transpose();
    const VectorXd dfeat = model.param(ix.head_w) * dlogits;

    if (c.use_svd) {
        const VectorXd dpre =
            dfeat.segment(d + e, h).array() * (1.0 - cache.svd_act.array().square());
        g[ix.svd_w] += ex.svd * dpre.transpose();
        g[ix.svd_b] += dpre.transpose();
    }

    if (c.use_bag && !cache.bag_ids.empty()) {
        const RowVectorXd share = dfeat.segment(d, e).transpose() / static_cast<double>(cache.bag_ids.size());
        for (int id : cache.bag_ids) g[ix.bag_embed].row(id) += share;
    }

    if (!c.use_transformer || cache.tok_ids.empty()) return;
    const auto T = static_cast<Index>(cache.tok_ids.size());
    const auto heads = static_cast<Index>(c.heads);
    const Index dh = d / heads;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dh));

    const RowVectorXd dpooled = dfeat.head(d).transpose() / static_cast<double>(T);
    const MatrixXd dout = dpooled.replicate(T, 1);
    MatrixXd dx = ops::layer_norm_backward(dout, model.param(ix.lnf_gamma), cache.lnf, g[ix.lnf_gamma],
                                           g[ix.lnf_beta]);

    for (std::size_t li = c.layers; li-- > 0;) {
        const auto& b = ix.blocks[li];
        const auto& bc = cache.blocks[li];

        // feed-forward sublayer
        g[b.w2] += bc.f_act.transpose() * dx;
        g[b.b2] += dx.colwise().sum();
        const MatrixXd dact = dx * model.param(b.w2).transpose();
        const MatrixXd dpre = dact.cwiseProduct(ops::gelu_grad(bc.f_pre));
        g[b.w1] += bc.h2.transpose() * dpre;
        g[b.b1] += dpre.colwise().sum();
        const MatrixXd dh2 = dpre * model.param(b.w1).transpose();
        MatrixXd dx_mid = dx + ops::layer_norm_backward(dh2, model.param(b.ln2_gamma), bc.ln2, g[b.ln2_gamma],
                                                        g[b.ln2_beta]);

        // attention sublayer
        g[b.wo] += bc.o.transpose() * dx_mid;
        g[b.bo] += dx_mid.colwise().sum();
        const MatrixXd d_o = dx_mid * model.param(b.wo).transpose();
        MatrixXd dq(T, d);
        MatrixXd dk(T, d);
        MatrixXd dv(T, d);
        for (Index hd = 0; hd < heads; ++hd) {
            const auto& a = bc.attn[static_cast<std::size_t>(hd)];
            const auto qh = bc.q.middleCols(hd * dh, dh);
            const auto kh = bc.k.middleCols(hd * dh, dh);
            const auto vh = bc.v.middleCols(hd * dh, dh);
            const auto doh = d_o.middleCols(hd * dh, dh);
            const MatrixXd da = doh * vh.transpose();
            dv.middleCols(hd * dh, dh) = a.transpose() * doh;
            const VectorXd rowdot = da.cwiseProduct(a).rowwise().sum();
            const MatrixXd ds = a.cwiseProduct(da.colwise() - rowdot);
            dq.middleCols(hd * dh, dh) = scale * (ds * kh);
            dk.middleCols(hd * dh, dh) = scale * (ds.transpose() * qh);
        }
        g[b.wq] += bc.h1.transpose() * dq;
        g[b.bq] += dq.colwise().sum();
        g[b.wk] += bc.h1.transpose() * dk;
        g[b.bk] += dk.colwise().sum();
        g[b.wv] += bc.h1.transpose() * dv;
        g[b.bv] += dv.colwise().sum();
        const MatrixXd dh1 = dq * model.param(b.wq).transpose() + dk * model.param(b.wk).transpose() +
                             dv * model.param(b.wv).transpose();
        dx = dx_mid + ops::layer_norm_backward(dh1, model.param(b.ln1_gamma), bc.ln1, g[b.ln1_gamma],
                                               g[b.ln1_beta]);
    }

    for (Index t = 0; t < T; ++t) {
        g[ix.tok_embed].row(cache.tok_ids[static_cast<std::size_t>(t)]) += dx.row(t);
        g[ix.pos_embed].row(cache.positions[static_cast<std::size_t>(t)]) += dx.row(t);
    }
}

double weight_of(std::span<const double> class_weights, int label) {
    return class_weights.empty() ? 1.0 : class_weights[static_cast<std::size_t>(label)];
}

void check_label(const ModelConfig& c, const Example& ex) {
    if (ex.label < 0 || static_cast<std::size_t>(ex.label) >= c.classes) {
        throw_input(fmt::format("label {} outside [0, {})", ex.label, c.classes));
    }
}

}  // namespace

void ModelConfig::validate() const {
    if (vocab_size < 2) throw_input("vocab_size must cover the reserved ids");
    if (classes < 2) throw_input("need at least two classes");
    if (!use_transformer && !use_bag && !use_svd) throw_input("at least one branch must be enabled");
    if (model_dim == 0 || heads == 0 || model_dim % heads != 0) {
        throw_input(fmt::format("model_dim {} must be a positive multiple of heads {}", model_dim, heads));
    }
    if (max_len == 0 || ff_dim == 0 || embed_dim == 0 || svd_hidden == 0) {
        throw_input("layer widths must be positive");
    }
    if (use_svd && svd_dim == 0) throw_input("the SVD branch needs svd_dim >= 1");
}

std::vector<NamedTensor> parameter_layout(const ModelConfig& c) {
    const auto d = static_cast<Index>(c.model_dim);
    const auto ff = static_cast<Index>(c.ff_dim);
    std::vector<NamedTensor> t;
    auto add = [&](std::string name, Index rows, Index cols) {
        t.push_back({std::move(name), MatrixXd::Zero(rows, cols)});
    };
    add("transformer.token_embedding", static_cast<Index>(c.vocab_size), d);
    add("transformer.position_embedding", static_cast<Index>(c.max_len), d);
    for (std::size_t l = 0; l < c.layers; ++l) {
        const std::string p = fmt::format("transformer.block{}.", l);
        add(p + "ln1.gamma", 1, d);
        add(p + "ln1.beta", 1, d);
        add(p + "attn.wq", d, d);
        add(p + "attn.bq", 1, d);
        add(p + "attn.wk", d, d);
        add(p + "attn.bk", 1, d);
        add(p + "attn.wv", d, d);
        add(p + "attn.bv", 1, d);
        add(p + "attn.wo", d, d);
        add(p + "attn.bo", 1, d);
        add(p + "ln2.gamma", 1, d);
        add(p + "ln2.beta", 1, d);
        add(p + "ffn.w1", d, ff);
        add(p + "ffn.b1", 1, ff);
        add(p + "ffn.w2", ff, d);
        add(p + "ffn.b2", 1, d);
    }
    add("transformer.final_ln.gamma", 1, d);
    add("transformer.final_ln.beta", 1, d);
    add("bag.embedding", static_cast<Index>(c.vocab_size), static_cast<Index>(c.embed_dim));
    add("svd.w", static_cast<Index>(c.svd_dim), static_cast<Index>(c.svd_hidden));
    add("svd.b", 1, static_cast<Index>(c.svd_hidden));
    add("head.w", static_cast<Index>(c.concat_width()), static_cast<Index>(c.classes));
    add("head.b", 1, static_cast<Index>(c.classes));
    return t;
}

Classifier::Classifier(const ModelConfig& config, std::uint64_t seed) : config_(config) {
    config_.validate();
    tensors_ = parameter_layout(config_);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto fill = [&](MatrixXd& m, double sd) {
        for (Index c = 0; c < m.cols(); ++c) {
            for (Index r = 0; r < m.rows(); ++r) m(r, c) = sd * gauss(rng);
        }
    };
    for (auto& t : tensors_) {
        const auto& n = t.name;
        const bool is_gamma = n.ends_with(".gamma");
        const bool is_bias = n.ends_with(".beta") || n.ends_with(".b") || n.ends_with(".bq") ||
                             n.ends_with(".bk") || n.ends_with(".bv") || n.ends_with(".bo") ||
                             n.ends_with(".b1") || n.ends_with(".b2");
        if (is_gamma) {
            t.value.setOnes();
        } else if (is_bias) {
            t.value.setZero();
        } else if (n.ends_with("embedding")) {
            fill(t.value, 1.0);
        } else {
            fill(t.value, 1.0 / std::sqrt(static_cast<double>(std::max<Index>(t.value.rows(), 1))));
        }
    }
}

Classifier::Classifier(const ModelConfig& config, std::vector<NamedTensor> tensors) : config_(config) {
    config_.validate();
    const auto layout = parameter_layout(config_);
    if (tensors.size() != layout.size()) {
        throw_input(fmt::format("dimension mismatch: checkpoint has {} tensors, config needs {}", tensors.size(),
                                layout.size()));
    }
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (tensors[i].name != layout[i].name || tensors[i].value.rows() != layout[i].value.rows() ||
            tensors[i].value.cols() != layout[i].value.cols()) {
            throw_input(fmt::format("dimension mismatch: tensor '{}' ({}x{}) where '{}' ({}x{}) expected",
                                    tensors[i].name, tensors[i].value.rows(), tensors[i].value.cols(),
                                    layout[i].name, layout[i].value.rows(), layout[i].value.cols()));
        }
    }
    tensors_ = std::move(tensors);
}

std::size_t Classifier::parameter_count() const {
    std::size_t n = 0;
    for (const auto& t : tensors_) n += static_cast<std::size_t>(t.value.size());
    return n;
}

VectorXd forward(const Classifier& model, const Example& example) {
    const auto ix = make_index(model.config());
    ForwardCache cache;
    return run_forward(model, ix, example, cache);
}

int predict(const Classifier& model, const Example& example) {
    const VectorXd p = forward(model, example);
    Index best = 0;
    p.maxCoeff(&best);
    return static_cast<int>(best);
}

LossAndGrad loss_and_grad(const Classifier& model, std::span<const Example> batch,
                          std::span<const double> class_weights) {
    if (batch.empty()) throw_input("empty batch");
    const auto& c = model.config();
    if (!class_weights.empty() && class_weights.size() != c.classes) throw_input("class weight count mismatch");
    const auto ix = make_index(c);
    LossAndGrad out;
    out.grads.reserve(model.tensors().size());
    for (const auto& t : model.tensors()) out.grads.push_back(MatrixXd::Zero(t.value.rows(), t.value.cols()));

    double total_weight = 0.0;
    for (const auto& ex : batch) {
        check_label(c, ex);
        total_weight += weight_of(class_weights, ex.label);
    }
    ForwardCache cache;
    for (const auto& ex : batch) {
        const VectorXd p = run_forward(model, ix, ex, cache);
        const double w = weight_of(class_weights, ex.label) / total_weight;
        out.loss -= w * std::log(p(ex.label));
        VectorXd dlogits = w * p;
        dlogits(ex.label) -= w;
        run_backward(model, ix, ex, cache, dlogits, out.grads);
    }
    return out;
}

double loss(const Classifier& model, std::span<const Example> batch, std::span<const double> class_weights) {
    if (batch.empty()) throw_input("empty batch");
    const auto& c = model.config();
    const auto ix = make_index(c);
    double total_weight = 0.0;
    for (const auto& ex : batch) {
        check_label(c, ex);
        total_weight += weight_of(class_weights, ex.label);
    }
    ForwardCache cache;
    double l = 0.0;
    for (const auto& ex : batch) {
        const VectorXd p = run_forward(model, ix, ex, cache);
        l -= weight_of(class_weights, ex.label) / total_weight * std::log(p(ex.label));
    }
    return l;
}

}  // namespace trendlab::neural

#include "trendlab/neural/checkpoint.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "../binary_io.hpp"
#include "trendlab/error.hpp"

namespace trendlab::neural {
namespace {

using nlohmann::json;

constexpr std::array<char, 8> kMagic = {'T', 'L', 'M', 'O', 'D', 'E', 'L', '\0'};
constexpr std::uint32_t kVersion = 1;
constexpr const char* kWhat = "model checkpoint";
constexpr std::uint64_t kMaxHeader = std::uint64_t{1} << 31;

json config_to_json(const ModelConfig& c) {
    return {{"vocab_size", c.vocab_size}, {"model_dim", c.model_dim},       {"heads", c.heads},
            {"layers", c.layers},         {"max_len", c.max_len},           {"ff_dim", c.ff_dim},
            {"embed_dim", c.embed_dim},   {"svd_dim", c.svd_dim},           {"svd_hidden", c.svd_hidden},
            {"classes", c.classes},       {"use_transformer", c.use_transformer}, {"use_bag", c.use_bag},
            {"use_svd", c.use_svd}};
}

ModelConfig config_from_json(const json& j) {
    ModelConfig c;
    c.vocab_size = j.at("vocab_size").get<std::size_t>();
    c.model_dim = j.at("model_dim").get<std::size_t>();
    c.heads = j.at("heads").get<std::size_t>();
    c.layers = j.at("layers").get<std::size_t>();
    c.max_len = j.at("max_len").get<std::size_t>();
    c.ff_dim = j.at("ff_dim").get<std::size_t>();
    c.embed_dim = j.at("embed_dim").get<std::size_t>();
    c.svd_dim = j.at("svd_dim").get<std::size_t>();
    c.svd_hidden = j.at("svd_hidden").get<std::size_t>();
    c.classes = j.at("classes").get<std::size_t>();
    c.use_transformer = j.at("use_transformer").get<bool>();
    c.use_bag = j.at("use_bag").get<bool>();
    c.use_svd = j.at("use_svd").get<bool>();
    return c;
}

void put_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
    binary::put<std::uint64_t>(out, static_cast<std::uint64_t>(m.rows()));
    binary::put<std::uint64_t>(out, static_cast<std::uint64_t>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) binary::put<double>(out, m(r, c));
    }
}

Eigen::MatrixXd get_matrix(std::istream& in) {
    const auto rows = binary::get<std::uint64_t>(in, kWhat);
    const auto cols = binary::get<std::uint64_t>(in, kWhat);
    if (rows > (std::uint64_t{1} << 32) || cols > (std::uint64_t{1} << 32) || rows * cols > (std::uint64_t{1} << 32)) {
        throw_input(fmt::format("implausible tensor shape {}x{} in {}", rows, cols, kWhat));
    }
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = binary::get<double>(in, kWhat);
    }
    return m;
}

std::string get_bytes(std::istream& in, std::uint64_t n) {
    std::string s(static_cast<std::size_t>(n), '\0');
    if (n > 0 && !in.read(s.data(), static_cast<std::streamsize>(n))) throw_input(std::string("truncated ") + kWhat);
    return s;
}

void check_fit(const ModelConfig& c, const DatasetEncoder& e) {
    if (c.vocab_size != e.vocab.size()) {
        throw_input(fmt::format("dimension mismatch: model vocabulary has {} ids, encoder vocabulary {}",
                                c.vocab_size, e.vocab.size()));
    }
    if (c.classes != e.classes.size()) {
        throw_input(fmt::format("dimension mismatch: model has {} classes, encoder {}", c.classes,
                                e.classes.size()));
    }
    if (c.use_svd && c.svd_dim != e.svd_dim()) {
        throw_input(fmt::format("dimension mismatch: model expects {} SVD features, encoder provides {}", c.svd_dim,
                                e.svd_dim()));
    }
    if (c.max_len < e.max_len) {
        throw_input(fmt::format("dimension mismatch: encoder max_len {} exceeds model max_len {}", e.max_len,
                                c.max_len));
    }
}

}  // namespace

void write_checkpoint(std::ostream& out, const Checkpoint& ck) {
    const auto& e = ck.encoder;
    json header = {
        {"config", config_to_json(ck.model.config())},
        {"encoder",
         {{"words", e.vocab.words()},
          {"usernames", e.vocab.usernames()},
          {"classes", e.classes},
          {"max_len", e.max_len},
          {"tfidf", {{"terms", e.tfidf.vocab.tokens()}, {"idf", e.tfidf.idf}, {"documents", e.tfidf.document_count}}}}},
    };
    const std::string text = header.dump();
    out.write(kMagic.data(), kMagic.size());
    binary::put<std::uint32_t>(out, kVersion);
    binary::put<std::uint32_t>(out, 0);
    binary::put<std::uint64_t>(out, text.size());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    const auto& tensors = ck.model.tensors();
    binary::put<std::uint64_t>(out, tensors.size());
    for (const auto& t : tensors) {
        binary::put<std::uint32_t>(out, static_cast<std::uint32_t>(t.name.size()));
        out.write(t.name.data(), static_cast<std::streamsize>(t.name.size()));
        put_matrix(out, t.value);
    }
    const char has_svd = e.svd ? 1 : 0;
    out.put(has_svd);
    if (e.svd) features::write_svd(out, *e.svd);
}

Checkpoint read_checkpoint(std::istream& in) {
    std::array<char, 8> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw_input("not a model checkpoint");
    const auto version = binary::get<std::uint32_t>(in, kWhat);
    if (version != kVersion) throw_input(fmt::format("unsupported checkpoint version {}", version));
    binary::get<std::uint32_t>(in, kWhat);
    const auto header_len = binary::get<std::uint64_t>(in, kWhat);
    if (header_len > kMaxHeader) throw_input("implausible checkpoint header length");

    ModelConfig config;
    DatasetEncoder enc;
    try {
        const json header = json::parse(get_bytes(in, header_len));
        config = config_from_json(header.at("config"));
        const auto& je = header.at("encoder");
        enc.vocab = TokenVocab(je.at("words").get<std::vector<std::string>>(),
                               je.at("usernames").get<std::vector<std::string>>());
        enc.classes = je.at("classes").get<std::vector<std::string>>();
        enc.max_len = je.at("max_len").get<std::size_t>();
        const auto& jt = je.at("tfidf");
        enc.tfidf.vocab = features::VocabIndex(jt.at("terms").get<std::vector<std::string>>());
        enc.tfidf.idf = jt.at("idf").get<std::vector<double>>();
        enc.tfidf.document_count = jt.at("documents").get<std::size_t>();
        if (enc.tfidf.idf.size() != enc.tfidf.vocab.size()) throw_input("checkpoint idf length mismatch");
    } catch (const json::exception& ex) {
        throw_input(fmt::format("malformed checkpoint header: {}", ex.what()));
    }

    const auto count = binary::get<std::uint64_t>(in, kWhat);
    if (count > 100000) throw_input("implausible tensor count in checkpoint");
    std::vector<NamedTensor> tensors;
    tensors.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto name_len = binary::get<std::uint32_t>(in, kWhat);
        if (name_len > 4096) throw_input("implausible tensor name length in checkpoint");
        NamedTensor t;
        t.name = get_bytes(in, name_len);
        t.value = get_matrix(in);
        tensors.push_back(std::move(t));
    }
    const int has_svd = in.get();
    if (has_svd == std::char_traits<char>::eof()) throw_input(std::string("truncated ") + kWhat);
    if (has_svd == 1) enc.svd = features::read_svd(in);
    else if (has_svd != 0) throw_input("malformed checkpoint trailer");
    if (enc.svd && enc.svd->cols() != enc.tfidf.vocab.size()) {
        throw_input("dimension mismatch: SVD factors do not match the TF-IDF vocabulary");
    }

    check_fit(config, enc);
    return {Classifier(config, std::move(tensors)), std::move(enc)};
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_input(fmt::format("cannot write '{}'", path.string()));
    write_checkpoint(out, checkpoint);
    if (!out) throw_input(fmt::format("failed writing '{}'", path.string()));
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_input(fmt::format("cannot open '{}'", path.string()));
    return read_checkpoint(in);
}

}  // namespace trendlab::neural

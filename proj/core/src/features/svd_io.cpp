#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "../binary_io.hpp"
#include "trendlab/error.hpp"
#include "trendlab/features/svd.hpp"

namespace trendlab::features {
namespace {

constexpr std::array<char, 8> kMagic = {'T', 'L', 'S', 'V', 'D', 'F', 'A', 'C'};
constexpr std::uint32_t kVersion = 1;
constexpr const char* kWhat = "SVD factor file";

}  // namespace

void write_svd(std::ostream& out, const SvdFactors& f) {
    out.write(kMagic.data(), kMagic.size());
    binary::put<std::uint32_t>(out, kVersion);
    binary::put<std::uint32_t>(out, static_cast<std::uint32_t>(f.rank()));
    binary::put<std::uint64_t>(out, f.rows());
    binary::put<std::uint64_t>(out, f.cols());
    for (Eigen::Index i = 0; i < f.singular.size(); ++i) binary::put<double>(out, f.singular(i));
    for (Eigen::Index r = 0; r < f.left.rows(); ++r) {
        for (Eigen::Index c = 0; c < f.left.cols(); ++c) binary::put<double>(out, f.left(r, c));
    }
    for (Eigen::Index r = 0; r < f.right.rows(); ++r) {
        for (Eigen::Index c = 0; c < f.right.cols(); ++c) binary::put<double>(out, f.right(r, c));
    }
}

SvdFactors read_svd(std::istream& in) {
    std::array<char, 8> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw_input("not an SVD factor file");
    const auto version = binary::get<std::uint32_t>(in, kWhat);
    if (version != kVersion) throw_input(fmt::format("unsupported SVD factor version {}", version));
    const auto k = static_cast<Eigen::Index>(binary::get<std::uint32_t>(in, kWhat));
    const auto d = static_cast<Eigen::Index>(binary::get<std::uint64_t>(in, kWhat));
    const auto v = static_cast<Eigen::Index>(binary::get<std::uint64_t>(in, kWhat));
    SvdFactors f;
    f.singular.resize(k);
    f.left.resize(d, k);
    f.right.resize(v, k);
    for (Eigen::Index i = 0; i < k; ++i) f.singular(i) = binary::get<double>(in, kWhat);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) f.left(r, c) = binary::get<double>(in, kWhat);
    }
    for (Eigen::Index r = 0; r < v; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) f.right(r, c) = binary::get<double>(in, kWhat);
    }
    return f;
}

void save_svd(const std::filesystem::path& path, const SvdFactors& factors) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_input(fmt::format("cannot write '{}'", path.string()));
    write_svd(out, factors);
}

SvdFactors load_svd(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_input(fmt::format("cannot open '{}'", path.string()));
    return read_svd(in);
}

}  // namespace trendlab::features

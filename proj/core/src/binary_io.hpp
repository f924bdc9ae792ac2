#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <type_traits>

#include "trendlab/error.hpp"

namespace trendlab::binary {

// Little-endian scalar I/O independent of host byte order.
template <typename T>
void put(std::ostream& out, T value) {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
    auto bits = std::bit_cast<U>(value);
    std::array<char, sizeof(T)> bytes{};
    for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
    out.write(bytes.data(), bytes.size());
}

template <typename T>
T get(std::istream& in, const char* what) {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
    std::array<unsigned char, sizeof(T)> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) throw_input(std::string("truncated ") + what);
    U bits = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<U>(bytes[i]) << (8 * i);
    return std::bit_cast<T>(bits);
}

}  // namespace trendlab::binary

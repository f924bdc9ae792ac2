#pragma once

#include <filesystem>
#include <iosfwd>

#include "trendlab/neural/dataset.hpp"
#include "trendlab/neural/model.hpp"

namespace trendlab::neural {

struct Checkpoint {
    Classifier model;
    DatasetEncoder encoder;
};

/// Single binary file, little-endian:
///   bytes 0-7   magic "TLMODEL\0"
///   bytes 8-11  uint32 format version (1)
///   bytes 12-15 uint32 reserved (0)
///   uint64 n, then n bytes of UTF-8 JSON: model config and encoder
///     (vocabulary, classes, max_len, TF-IDF vocabulary and idf)
///   uint64 tensor count, then per tensor:
///     uint32 name length, name bytes, uint64 rows, uint64 cols,
///     rows*cols float64 row-major
///   uint8 1 followed by an SVD factor block when the encoder has one, else 0
void write_checkpoint(std::ostream& out, const Checkpoint& checkpoint);
/// Throws InputError on a malformed file or when the model dimensions do not
/// fit the stored encoder.
Checkpoint read_checkpoint(std::istream& in);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace trendlab::neural

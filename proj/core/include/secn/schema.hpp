#pragma once

#include <cstdint>
#include <vector>

#include "secn/matrix.hpp"

namespace secn {

// Field layout of one Criteo-format dataset: dense integer columns followed
// by hashed categorical columns. buckets_per_field[j] >= 2; bucket 0 of every
// field is reserved for missing/unknown values.
struct DatasetSchema {
  std::size_t num_dense = 0;
  std::size_t num_categorical = 0;
  std::vector<std::uint32_t> buckets_per_field;

  void validate() const;
  bool operator==(const DatasetSchema&) const = default;
};

// Uniform bucket count across all categorical fields.
DatasetSchema make_schema(std::size_t num_dense, std::size_t num_categorical,
                          std::uint32_t buckets);

// One labeled record after preprocessing. dense holds the transformed (and,
// once DenseStats exist, standardized) values; cats holds bucket indices.
struct Example {
  std::uint8_t label = 0;
  RealVector dense;
  std::vector<std::uint32_t> cats;
};

// Per-dense-feature mean/stddev, computed on the training split only.
struct DenseStats {
  RealVector mean;
  RealVector stddev;
};

}  // namespace secn

#pragma once

#include <cstdint>

namespace secn {

// splitmix64 generator. 64-bit state, identical stream for a given seed on
// every platform; no OS entropy anywhere.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0,1), 53 random mantissa bits.
  double next_uniform();

  // Standard normal via Box-Muller; one spare value is cached between calls.
  double next_gaussian();

  // Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace secn

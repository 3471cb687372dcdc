#include "secn/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace secn {

std::uint64_t SeededRng::next_u64() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SeededRng::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - next_uniform();  // (0,1], keeps log finite
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t SeededRng::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SeededRng::next_below: bound must be nonzero");
  return next_u64() % bound;
}

}  // namespace secn

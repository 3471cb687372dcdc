#include "secn/hashing.hpp"

#include <array>

namespace secn {

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t state) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    state ^= static_cast<std::uint64_t>(bytes[i]);
    state *= kFnvPrime;
  }
  return state;
}

std::uint32_t hash_categorical(std::uint32_t field_index, std::string_view token,
                               std::uint32_t buckets) {
  const std::array<unsigned char, 4> salt = {
      static_cast<unsigned char>(field_index & 0xFF),
      static_cast<unsigned char>((field_index >> 8) & 0xFF),
      static_cast<unsigned char>((field_index >> 16) & 0xFF),
      static_cast<unsigned char>((field_index >> 24) & 0xFF),
  };
  std::uint64_t h = fnv1a64(salt.data(), salt.size());
  h = fnv1a64(token.data(), token.size(), h);
  return 1u + static_cast<std::uint32_t>(h % (buckets - 1));
}

}  // namespace secn

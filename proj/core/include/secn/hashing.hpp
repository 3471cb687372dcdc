#pragma once

#include <cstdint>
#include <string_view>

namespace secn {

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

// FNV-1a over a byte range, resumable via the state argument.
std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t state = kFnvOffsetBasis);

// Bucket for a categorical token: FNV-1a over (field_index as 4 LE bytes ||
// token bytes), mapped into [1, buckets). Missing tokens never reach this
// function; bucket 0 is reserved for them.
std::uint32_t hash_categorical(std::uint32_t field_index, std::string_view token,
                               std::uint32_t buckets);

}  // namespace secn

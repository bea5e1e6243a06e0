#pragma once

#include <compare>
#include <cstdint>
#include <string_view>

namespace nbres {

// FNV-1a 64-bit over a byte string. Collisions between distinct canonical
// forms are accepted as ranking noise.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct LabelId {
  std::uint64_t value = 0;
  friend auto operator<=>(LabelId, LabelId) = default;
};

struct FeatureId {
  std::uint64_t value = 0;
  friend auto operator<=>(FeatureId, FeatureId) = default;
};

inline LabelId label_from_bytes(std::string_view bytes) { return LabelId{fnv1a64(bytes)}; }
inline FeatureId feature_from_bytes(std::string_view bytes) { return FeatureId{fnv1a64(bytes)}; }

}  // namespace nbres

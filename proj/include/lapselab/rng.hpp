#pragma once
// Deterministic keyed random streams.
//
// Every random decision in the pipeline draws from an RngStream derived from
// (master seed, stage tag, entity id).  Streams are cheap value types: a
// policy, a tree, or a boosting round gets its own stream, so results do not
// depend on scheduling order or worker count.

#include <cstdint>
#include <cstring>
#include <string_view>

namespace lapselab {

// FNV-1a 64-bit hash; also reused for file checksums in run manifests.
inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(std::string_view s) {
  return fnv1a64(s.data(), s.size());
}

namespace detail {
// Finalizing mix used by the splitmix generator family.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}
}  // namespace detail

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  // Stage-level stream: (master seed, stage tag).
  static RngStream from_key(std::uint64_t master_seed, std::string_view tag) {
    std::uint64_t h = fnv1a64(tag);
    std::uint64_t bytes[2] = {master_seed, h};
    return RngStream(fnv1a64(bytes, sizeof bytes));
  }

  // Entity-level child stream; does not advance the parent.
  RngStream substream(std::uint64_t entity_id) const {
    std::uint64_t bytes[2] = {state_, detail::mix64(entity_id + 0x9e3779b97f4a7c15ull)};
    return RngStream(fnv1a64(bytes, sizeof bytes));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return detail::mix64(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on the open interval (0, 1); safe for logs and inversions.
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unbiased integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  double normal();                          // standard normal, Box-Muller
  double gamma(double shape, double scale); // Marsaglia-Tsang squeeze method

  // Current counter value; read-only, for run manifests and diagnostics.
  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace lapselab

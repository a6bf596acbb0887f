#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wl {

/// 64-bit finalizer (splitmix64 style): full avalanche.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// 128-bit content digest with exact wrap-around addition, so multisets can
/// be combined commutatively (sum of per-element digests) with results
/// independent of iteration order and thread count.
struct Digest128 {
  std::uint64_t lo = 0, hi = 0;

  void add(Digest128 o) {
    std::uint64_t l = lo + o.lo;
    hi += o.hi + (l < lo ? 1 : 0);
    lo = l;
  }
  friend bool operator==(const Digest128&, const Digest128&) = default;
  friend bool operator<(const Digest128& a, const Digest128& b) {
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
  }
  std::string hex() const;
};

/// Order-sensitive absorb: h' depends injectively on v given the rest of the
/// chain, and deltas are amplified by the multiplier so nearby small inputs
/// cannot cancel across positions.
inline std::uint64_t absorb(std::uint64_t h, std::uint64_t v) {
  return (h ^ (v + 0x9e3779b97f4a7c15ULL)) * 0xff51afd7ed558ccdULL;
}

/// Per-element contribution for a multiset: (h, h^2) summed over elements
/// gives two independent power sums, a 128-bit multiset fingerprint.
inline Digest128 element_digest(std::uint64_t h) {
  h = mix64(h);
  return {h, h * h};
}

/// Deterministic, platform-independent RNG (splitmix64 core). std::mt19937
/// would also be portable, but the standard distributions are not; this
/// avoids the issue entirely.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }
  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    // rejection-free Lemire reduction is fine here: bias is negligible for
    // the small bounds used, but keep it exact anyway
    std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
  std::uint32_t below32(std::uint32_t bound) { return static_cast<std::uint32_t>(below(bound)); }
  /// Fisher-Yates shuffle.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace wl

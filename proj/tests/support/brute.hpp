#pragma once

// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive and must not share logic with the library paths they
// check.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "wl/cayley.hpp"
#include "wl/fp.hpp"

namespace wl::testing {

/// Rank via row-span enumeration: |span| = p^rank.
inline std::size_t brute_rank(const FpMatrix& m) {
  const std::uint32_t p = m.p();
  std::set<std::vector<std::uint32_t>> span;
  std::vector<std::uint32_t> coeff(m.rows(), 0);
  for (;;) {
    std::vector<std::uint32_t> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        v[c] = (v[c] + coeff[r] * m.at(r, c)) % p;
    span.insert(std::move(v));
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == p) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  std::size_t rank = 0;
  std::size_t size = span.size();
  while (size > 1) {
    size /= p;
    ++rank;
  }
  return rank;
}

/// Does s_i -> t_i extend to an isomorphism of the generated subgroups?
/// Propagates images along words and then verifies the full map, without
/// touching the certificate machinery.
inline bool brute_marked_iso(const CayleyGroup& g, const std::vector<int>& s,
                             const CayleyGroup& h, const std::vector<int>& t) {
  if (s.size() != t.size()) return false;
  std::map<int, int> image{{g.identity(), h.identity()}};
  std::vector<int> queue{g.identity()};
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto [it, fresh] = image.emplace(s[i], t[i]);
    if (!fresh && it->second != t[i]) return false;
    if (fresh) queue.push_back(s[i]);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int u = queue[q];
    for (std::size_t i = 0; i < s.size(); ++i) {
      int v = g.mul(u, s[i]);
      int fv = h.mul(image[u], t[i]);
      auto [it, fresh] = image.emplace(v, fv);
      if (!fresh && it->second != fv) return false;
      if (fresh) queue.push_back(v);
    }
  }
  // injectivity and multiplicativity on the full closure
  std::set<int> range;
  for (auto [u, fu] : image)
    if (!range.insert(fu).second) return false;
  for (auto [u, fu] : image)
    for (auto [v, fv] : image) {
      auto it = image.find(g.mul(u, v));
      if (it == image.end() || it->second != h.mul(fu, fv)) return false;
    }
  return true;
}

inline bool brute_marked_iso(const CayleyGroup& g, const std::vector<int>& s,
                             const std::vector<int>& t) {
  return brute_marked_iso(g, s, g, t);
}

}  // namespace wl::testing

#include "wl/pebble_game.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace wl {

namespace {

// Partial tuples over the occupied slots differ w.r.t. the Version I initial
// coloring: equality pattern or a multiplication triple disagrees.
bool v1_partial_differ(const CayleyGroup& g, const CayleyGroup& h, const std::vector<int>& xs,
                       const std::vector<int>& ys) {
  const std::size_t r = xs.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if ((xs[i] == xs[j]) != (ys[i] == ys[j])) return true;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const int pg = g.mul(xs[i], xs[j]);
      const int ph = h.mul(ys[i], ys[j]);
      for (std::size_t m = 0; m < r; ++m)
        if ((pg == xs[m]) != (ph == ys[m])) return true;
    }
  return false;
}

bool v2_partial_differ(const CayleyGroup& g, const CayleyGroup& h, const std::vector<int>& xs,
                       const std::vector<int>& ys) {
  return marked_certificate(g, xs) != marked_certificate(h, ys);
}

// Kuhn's augmenting-path matching on an n x n boolean matrix.
bool has_perfect_matching(const std::vector<char>& allowed, int n) {
  std::vector<int> match_right(n, -1);
  std::vector<char> visited(n);
  std::function<bool(int)> try_left = [&](int u) -> bool {
    for (int v = 0; v < n; ++v) {
      if (!allowed[u * n + v] || visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || try_left(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < n; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!try_left(u)) return false;
  }
  return true;
}

}  // namespace

GameWinner game_solve(const CayleyGroup& g, const CayleyGroup& h, int pebble_pairs,
                      WlVersion version, int max_order) {
  if (version == WlVersion::III)
    throw std::invalid_argument("the solver covers game Versions I and II");
  if (pebble_pairs < 1) throw std::invalid_argument("need at least one pebble pair");
  if (g.order() != h.order()) return GameWinner::spoiler;
  if (g.order() > max_order)
    throw BudgetError("game solver limited to order " + std::to_string(max_order));

  const int n = g.order();
  const std::uint64_t radix = std::uint64_t(n) * n + 1;  // slot: g*n + h, or empty
  const std::uint64_t empty = radix - 1;
  std::uint64_t configs = 1;
  for (int i = 0; i < pebble_pairs; ++i) configs *= radix;

  std::vector<std::uint64_t> stride(pebble_pairs, 1);
  for (int i = 1; i < pebble_pairs; ++i) stride[i] = stride[i - 1] * radix;

  auto differ = version == WlVersion::I ? v1_partial_differ : v2_partial_differ;

  // win_mask bit i: lifting pair i from this configuration wins for Spoiler
  std::vector<std::uint8_t> win_mask(configs, 0);
  {
    std::vector<std::uint64_t> slot(pebble_pairs);
    std::vector<int> xs, ys;
    for (std::uint64_t c = 0; c < configs; ++c) {
      std::uint64_t t = c;
      for (int i = 0; i < pebble_pairs; ++i) {
        slot[i] = t % radix;
        t /= radix;
      }
      for (int lift = 0; lift < pebble_pairs; ++lift) {
        xs.clear();
        ys.clear();
        for (int i = 0; i < pebble_pairs; ++i) {
          if (i == lift || slot[i] == empty) continue;
          xs.push_back(static_cast<int>(slot[i] / n));
          ys.push_back(static_cast<int>(slot[i] % n));
        }
        if (differ(g, h, xs, ys)) win_mask[c] |= std::uint8_t(1) << lift;
      }
    }
  }

  // greatest fixpoint of Duplicator-safe configurations
  std::vector<std::uint8_t> safe(configs, 1);
  std::vector<char> allowed(static_cast<std::size_t>(n) * n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t c = 0; c < configs; ++c) {
      if (!safe[c]) continue;
      bool survives_all = true;
      for (int lift = 0; lift < pebble_pairs && survives_all; ++lift) {
        if (win_mask[c] & (std::uint8_t(1) << lift)) {
          survives_all = false;
          break;
        }
        const std::uint64_t digit = (c / stride[lift]) % radix;
        const std::uint64_t base = c - digit * stride[lift];
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            allowed[a * n + b] =
                safe[base + (std::uint64_t(a) * n + b) * stride[lift]];
        if (!has_perfect_matching(allowed, n)) survives_all = false;
      }
      if (!survives_all) {
        safe[c] = 0;
        changed = true;
      }
    }
  }

  std::uint64_t initial = 0;
  for (int i = 0; i < pebble_pairs; ++i) initial += empty * stride[i];
  return safe[initial] ? GameWinner::duplicator : GameWinner::spoiler;
}

}  // namespace wl

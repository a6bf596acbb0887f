#include "wl/wl_refine.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wl {

std::string Digest128::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s(32, '0');
  std::uint64_t parts[2] = {hi, lo};
  for (int p = 0; p < 2; ++p)
    for (int i = 0; i < 16; ++i) s[p * 16 + i] = digits[(parts[p] >> (60 - 4 * i)) & 0xf];
  return s;
}

std::uint64_t tuple_count(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) {
    if (n != 0 && c > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(n))
      throw std::overflow_error("tuple space too large");
    c *= static_cast<std::uint64_t>(n);
  }
  return c;
}

namespace {

constexpr std::uint64_t kSeed = 0x243f6a8885a308d3ULL;

inline Digest128 finalize_tuple(std::uint32_t prev, Digest128 acc, std::uint64_t extra) {
  std::uint64_t p = mix64(prev + 0x632be59bd9b4e019ULL);
  return {mix64(acc.lo ^ p), mix64(acc.hi + p + extra)};
}

struct Entry {
  Digest128 d;
  std::uint64_t tag;  // tuple index; second structure offset by N
};

// ---- per-round certificate digests ------------------------------------

void digests_k1(const std::vector<std::uint32_t>& colors, const Graph& g,
                Entry* out, std::uint64_t tag_base) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    Digest128 acc{0, 0};
    for (int w : g.neighbors(v)) acc.add(element_digest(absorb(kSeed, colors[w])));
    out[v] = {finalize_tuple(colors[v], acc, g.degree(v)), tag_base + v};
  }
}

void digests_k2(const std::vector<std::uint32_t>& colors, int n, Entry* out,
                std::uint64_t tag_base, int a_begin, int a_end,
                std::vector<Digest128>& acc_row) {
  const std::uint32_t* c = colors.data();
  for (int a = a_begin; a < a_end; ++a) {
    const std::uint32_t* row_a = c + std::size_t(a) * n;
    std::fill(acc_row.begin(), acc_row.end(), Digest128{0, 0});
    for (int x = 0; x < n; ++x) {
      const std::uint32_t* row_x = c + std::size_t(x) * n;
      const std::uint64_t h1 = row_a[x];
      for (int b = 0; b < n; ++b) {
        std::uint64_t h = absorb(absorb(kSeed, row_x[b]), h1);
        h = mix64(h);
        acc_row[b].add({h, h * h});
      }
    }
    Entry* o = out + std::size_t(a) * n;
    for (int b = 0; b < n; ++b)
      o[b] = {finalize_tuple(row_a[b], acc_row[b], 0), tag_base + std::size_t(a) * n + b};
  }
}

void digests_k3(const std::vector<std::uint32_t>& colors, int n, Entry* out,
                std::uint64_t tag_base, int a_begin, int a_end,
                std::vector<Digest128>& acc_row) {
  const std::uint32_t* cs = colors.data();
  const std::size_t n2 = std::size_t(n) * n;
  for (int a = a_begin; a < a_end; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::size_t base = std::size_t(a) * n2 + std::size_t(b) * n;
      std::fill(acc_row.begin(), acc_row.end(), Digest128{0, 0});
      for (int x = 0; x < n; ++x) {
        const std::uint32_t* r0 = cs + std::size_t(x) * n2 + std::size_t(b) * n;
        const std::uint32_t* r1 = cs + std::size_t(a) * n2 + std::size_t(x) * n;
        const std::uint64_t h2 = cs[base + x];
        for (int cc = 0; cc < n; ++cc) {
          std::uint64_t h = absorb(absorb(absorb(kSeed, r0[cc]), r1[cc]), h2);
          h = mix64(h);
          acc_row[cc].add({h, h * h});
        }
      }
      Entry* o = out + base;
      for (int cc = 0; cc < n; ++cc)
        o[cc] = {finalize_tuple(cs[base + cc], acc_row[cc], 0), tag_base + base + cc};
    }
  }
}

// any k >= 2; only used off the hot paths
void digests_generic(const std::vector<std::uint32_t>& colors, int n, int k, Entry* out,
                     std::uint64_t tag_base) {
  const std::uint64_t total = colors.size();
  std::vector<std::uint64_t> stride(k);
  stride[k - 1] = 1;
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * n;
  std::vector<int> digit(k, 0);
  for (std::uint64_t tau = 0; tau < total; ++tau) {
    Digest128 acc{0, 0};
    for (int x = 0; x < n; ++x) {
      std::uint64_t h = kSeed;
      for (int i = 0; i < k; ++i)
        h = absorb(h, colors[tau + (std::uint64_t(x) - digit[i]) * stride[i]]);
      h = mix64(h);
      acc.add({h, h * h});
    }
    out[tau] = {finalize_tuple(colors[tau], acc, 0), tag_base + tau};
    for (int i = k - 1; i >= 0; --i) {
      if (++digit[i] < n) break;
      digit[i] = 0;
    }
  }
}

void compute_digests(const std::vector<std::uint32_t>& colors, int n, int k, const Graph* g,
                     Entry* out, std::uint64_t tag_base, int threads) {
  if (k == 1) {
    digests_k1(colors, *g, out, tag_base);
    return;
  }
  if (k != 2 && k != 3) {
    digests_generic(colors, n, k, out, tag_base);
    return;
  }
  auto worker = [&](int a_begin, int a_end) {
    std::vector<Digest128> acc_row(n);
    if (k == 2)
      digests_k2(colors, n, out, tag_base, a_begin, a_end, acc_row);
    else
      digests_k3(colors, n, out, tag_base, a_begin, a_end, acc_row);
  };
  if (threads <= 1 || n < 2 * threads) {
    worker(0, n);
    return;
  }
  std::vector<std::thread> pool;
  int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(worker, lo, hi);
  }
  for (auto& th : pool) th.join();
}

inline Digest128 scale_digest(Digest128 d, std::uint64_t count) {
  unsigned __int128 v = (static_cast<unsigned __int128>(d.hi) << 64) | d.lo;
  v *= count;
  return {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
}

}  // namespace

RefineResult joint_refine(RefineSpec spec) {
  const int n = spec.n, k = spec.k;
  if (k < 1) throw std::invalid_argument("refinement needs k >= 1");
  if (k == 1 && (!spec.graph0 || !spec.graph1))
    throw std::invalid_argument("k = 1 refinement needs adjacency");
  const std::uint64_t N = tuple_count(n, k);
  if (spec.init0.size() != N || spec.init1.size() != N)
    throw std::invalid_argument("initial coloring has wrong size");
  int threads = spec.threads > 0 ? spec.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t limit = spec.element_limit < 0 ? std::uint64_t(n)
                                                     : std::uint64_t(spec.element_limit);
  const bool restricted = limit < std::uint64_t(n);

  auto in_verdict_set = [&](std::uint64_t tau) -> bool {
    if (!restricted) return true;
    for (int i = 0; i < k; ++i) {
      if (tau % n >= limit) return false;
      tau /= n;
    }
    return true;
  };

  RefineResult res;
  res.final0.assign(N, 0);
  res.final1.assign(N, 0);
  std::vector<Entry> entries(2 * N);

  // Sort the combined digest pool, assign dense ids in sorted order, and
  // compare the per-structure verdict histograms run by run.
  auto assign_and_compare = [&](std::size_t& classes_out) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      if (a.d.hi != b.d.hi) return a.d.hi < b.d.hi;
      if (a.d.lo != b.d.lo) return a.d.lo < b.d.lo;
      return a.tag < b.tag;
    });
    std::uint32_t id = 0;
    bool equal = true;
    Digest128 hist0{0, 0}, hist1{0, 0};
    std::size_t i = 0;
    while (i < entries.size()) {
      std::size_t j = i;
      std::uint64_t cnt[2] = {0, 0};
      while (j < entries.size() && entries[j].d == entries[i].d) {
        std::uint64_t tag = entries[j].tag;
        bool second = tag >= N;
        std::uint64_t tau = second ? tag - N : tag;
        (second ? res.final1 : res.final0)[tau] = id;
        if (in_verdict_set(tau)) ++cnt[second ? 1 : 0];
        ++j;
      }
      if (cnt[0] != cnt[1]) equal = false;
      Digest128 cls = element_digest(absorb(entries[i].d.lo, entries[i].d.hi));
      if (cnt[0]) hist0.add(scale_digest(cls, cnt[0]));
      if (cnt[1]) hist1.add(scale_digest(cls, cnt[1]));
      ++id;
      i = j;
    }
    res.hist0 = hist0;
    res.hist1 = hist1;
    classes_out = id;
    return equal;
  };

  // round 0: the caller-provided initial certificates
  for (std::uint64_t t = 0; t < N; ++t) entries[t] = {spec.init0[t], t};
  for (std::uint64_t t = 0; t < N; ++t) entries[N + t] = {spec.init1[t], N + t};
  std::size_t classes = 0;
  bool equal = assign_and_compare(classes);
  if (spec.keep_history) {
    res.history0.push_back(res.final0);
    res.history1.push_back(res.final1);
  }
  res.classes = classes;
  if (!equal) {
    res.distinguished = true;
    res.round = 0;
    res.converged = true;
    return res;
  }

  long long cap = spec.max_rounds >= 0 ? spec.max_rounds : static_cast<long long>(N);
  std::vector<std::uint32_t> prev0, prev1;
  for (long long round = 1; round <= cap; ++round) {
    prev0 = res.final0;
    prev1 = res.final1;
    compute_digests(prev0, n, k, spec.graph0, entries.data(), 0, threads);
    compute_digests(prev1, n, k, spec.graph1, entries.data() + N, N, threads);
    std::size_t new_classes = 0;
    equal = assign_and_compare(new_classes);
    if (spec.keep_history) {
      res.history0.push_back(res.final0);
      res.history1.push_back(res.final1);
    }
    if (!equal) {
      res.distinguished = true;
      res.round = static_cast<int>(round);
      res.converged = true;
      res.classes = new_classes;
      return res;
    }
    if (new_classes == classes) {
      // partition repeated: previous round was already stable
      res.round = static_cast<int>(round - 1);
      res.converged = true;
      res.classes = classes;
      res.final0 = prev0;
      res.final1 = prev1;
      if (spec.keep_history) {
        res.history0.pop_back();
        res.history1.pop_back();
      }
      return res;
    }
    classes = new_classes;
    res.classes = classes;
  }
  res.round = static_cast<int>(cap);
  res.converged = false;
  return res;
}

std::vector<Digest128> graph_initial_colors(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k-WL needs k >= 1");
  const int n = g.vertex_count();
  const std::uint64_t N = tuple_count(n, k);
  std::vector<Digest128> out(N);
  auto vcol = [&](int v) -> std::uint64_t {
    return g.has_vertex_colors() ? std::uint64_t(g.vertex_colors()[v]) + 1 : 0;
  };
  if (k == 1) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t h = absorb(kSeed, vcol(v));
      out[v] = {mix64(h), mix64(h + 0x5851f42d4c957f2dULL)};
    }
    return out;
  }
  std::vector<int> t(k, 0);
  for (std::uint64_t tau = 0; tau < N; ++tau) {
    std::uint64_t h = kSeed;
    for (int i = 0; i < k; ++i) h = absorb(h, vcol(t[i]));
    std::uint64_t bits = 0;
    int packed = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        bits = (bits << 2) | (std::uint64_t(t[i] == t[j]) << 1) |
               std::uint64_t(g.has_edge(t[i], t[j]));
        if (++packed == 30) {  // flush before the pattern overflows (k >= 8)
          h = absorb(h, bits);
          bits = 0;
          packed = 0;
        }
      }
    h = absorb(h, bits);
    out[tau] = {mix64(h), mix64(h + 0x5851f42d4c957f2dULL)};
    for (int i = k - 1; i >= 0; --i) {
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
  return out;
}

WlVerdict graph_wl(const Graph& g0, const Graph& g1, int k, long long max_rounds, int threads) {
  if (k < 1) throw std::invalid_argument("graph_wl: k must be >= 1");
  WlVerdict v;
  if (g0.vertex_count() != g1.vertex_count()) {
    v.outcome = WlOutcome::distinguished;
    v.round = 0;
    return v;
  }
  if (g0.vertex_count() == 0) return v;
  RefineSpec spec;
  spec.n = g0.vertex_count();
  spec.k = k;
  spec.graph0 = &g0;
  spec.graph1 = &g1;
  spec.init0 = graph_initial_colors(g0, k);
  spec.init1 = graph_initial_colors(g1, k);
  spec.max_rounds = max_rounds;
  spec.threads = threads;
  RefineResult r = joint_refine(std::move(spec));
  v.outcome = r.distinguished ? WlOutcome::distinguished : WlOutcome::stable_equal;
  v.round = r.round;
  v.converged = r.converged;
  v.classes = r.classes;
  v.hist0 = r.hist0;
  v.hist1 = r.hist1;
  return v;
}

}  // namespace wl

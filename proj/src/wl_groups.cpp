#include "wl/wl_groups.hpp"

#include <algorithm>

namespace wl {

std::string to_string(WlVersion v) {
  switch (v) {
    case WlVersion::I: return "I";
    case WlVersion::II: return "II";
    case WlVersion::III: return "III";
  }
  return "?";
}

namespace {
constexpr std::uint64_t kGroupSeed = 0x452821e638d01377ULL;
}

std::vector<Digest128> group_initial_colors_v1(const CayleyGroup& g, int k) {
  if (k < 2) throw std::invalid_argument("group refinement needs k >= 2");
  const int n = g.order();
  const std::uint64_t N = tuple_count(n, k);
  std::vector<Digest128> out(N);
  std::vector<int> t(k, 0);
  for (std::uint64_t tau = 0; tau < N; ++tau) {
    std::uint64_t h = kGroupSeed;
    std::uint64_t bits = 0;
    int packed = 0;
    auto push_bit = [&](bool b) {
      bits = (bits << 1) | std::uint64_t(b);
      if (++packed == 60) {
        h = absorb(h, bits);
        bits = 0;
        packed = 0;
      }
    };
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) push_bit(t[i] == t[j]);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const int prod = g.mul(t[i], t[j]);
        for (int mm = 0; mm < k; ++mm) push_bit(prod == t[mm]);
      }
    h = absorb(h, bits);
    out[tau] = {mix64(h), mix64(h + 0x13198a2e03707344ULL)};
    for (int i = k - 1; i >= 0; --i) {
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
  return out;
}

std::vector<Digest128> group_initial_colors_v2(const CayleyGroup& g, int k) {
  if (k < 2) throw std::invalid_argument("group refinement needs k >= 2");
  const int n = g.order();
  const std::uint64_t N = tuple_count(n, k);
  std::vector<Digest128> out(N);
  std::vector<int> t(k, 0);
  for (std::uint64_t tau = 0; tau < N; ++tau) {
    out[tau] = marked_certificate(g, t).digest();
    for (int i = k - 1; i >= 0; --i) {
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
  return out;
}

Graph gamma_graph(const CayleyGroup& g, std::uint64_t vertex_budget) {
  const std::uint64_t n = g.order();
  const std::uint64_t vertices = n + 4 * n * n;
  if (vertices > vertex_budget)
    throw BudgetError("gamma graph needs " + std::to_string(vertices) + " vertices, budget " +
                      std::to_string(vertex_budget));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(6 * n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      const int base = static_cast<int>(n + 4 * (a * n + b));
      const int va = base, vb = base + 1, vc = base + 2, vd = base + 3;
      edges.emplace_back(static_cast<int>(a), va);
      edges.emplace_back(static_cast<int>(b), vb);
      edges.emplace_back(g.mul(static_cast<int>(a), static_cast<int>(b)), vd);
      edges.emplace_back(va, vb);
      edges.emplace_back(vb, vc);
      edges.emplace_back(vc, vd);
    }
  return Graph::from_edges(static_cast<int>(vertices), std::move(edges));
}

WlVerdict wl_group(const CayleyGroup& g, const CayleyGroup& h, int k, WlVersion version,
                   const GroupWlOptions& opts) {
  if (k < 2) throw std::invalid_argument("wl_group: k must be >= 2");
  WlVerdict v;
  if (g.order() != h.order()) {
    v.outcome = WlOutcome::distinguished;
    v.round = 0;
    return v;
  }

  RefineSpec spec;
  spec.k = k;
  spec.max_rounds = opts.max_rounds;
  spec.threads = opts.threads;

  if (version == WlVersion::III) {
    // budget check before materializing anything big
    const std::uint64_t n = g.order();
    const std::uint64_t verts = n + 4 * n * n;
    if (tuple_count(static_cast<int>(verts), k) > opts.tuple_budget)
      throw BudgetError("gamma graph tuple space exceeds budget");
    Graph gg = gamma_graph(g);
    Graph gh = gamma_graph(h);
    spec.n = gg.vertex_count();
    spec.element_limit = g.order();
    spec.graph0 = &gg;
    spec.graph1 = &gh;
    spec.init0 = graph_initial_colors(gg, k);
    spec.init1 = graph_initial_colors(gh, k);
    RefineResult r = joint_refine(std::move(spec));
    v.outcome = r.distinguished ? WlOutcome::distinguished : WlOutcome::stable_equal;
    v.round = r.round;
    v.converged = r.converged;
    v.classes = r.classes;
    v.hist0 = r.hist0;
    v.hist1 = r.hist1;
    return v;
  }

  if (tuple_count(g.order(), k) > opts.tuple_budget)
    throw BudgetError("tuple space exceeds budget");
  spec.n = g.order();
  if (version == WlVersion::I) {
    spec.init0 = group_initial_colors_v1(g, k);
    spec.init1 = group_initial_colors_v1(h, k);
  } else {
    spec.init0 = group_initial_colors_v2(g, k);
    spec.init1 = group_initial_colors_v2(h, k);
  }
  RefineResult r = joint_refine(std::move(spec));
  v.outcome = r.distinguished ? WlOutcome::distinguished : WlOutcome::stable_equal;
  v.round = r.round;
  v.converged = r.converged;
  v.classes = r.classes;
  v.hist0 = r.hist0;
  v.hist1 = r.hist1;
  return v;
}

VersionComparison compare_versions(const CayleyGroup& g, const CayleyGroup& h, int k,
                                   const GroupWlOptions& opts) {
  VersionComparison rep;
  rep.k = k;
  rep.k3 = (k + 1) / 2 + 2;
  auto run = [&](WlVersion ver, int dim) -> std::optional<WlVerdict> {
    try {
      return wl_group(g, h, dim, ver, opts);
    } catch (const BudgetError&) {
      return std::nullopt;
    }
  };
  rep.v1 = run(WlVersion::I, k);
  rep.v2 = run(WlVersion::II, k);
  // distinguishing power of graph WL is monotone in k, so a cheaper lower
  // dimension that already distinguishes certifies the higher one
  for (int dim = 2; dim <= rep.k3; ++dim) {
    auto res = run(WlVersion::III, dim);
    if (!res) break;
    if (dim == rep.k3 || res->outcome == WlOutcome::distinguished) {
      rep.v3 = res;
      rep.v3_via_monotonicity = dim < rep.k3 && res->outcome == WlOutcome::distinguished;
      break;
    }
  }

  auto distinguished = [](const std::optional<WlVerdict>& v) {
    return v && v->outcome == WlOutcome::distinguished;
  };
  if (distinguished(rep.v1) && rep.v2 && !distinguished(rep.v2))
    rep.violations.push_back("Version I distinguished at k=" + std::to_string(k) +
                             " but Version II did not");
  if (distinguished(rep.v2) && rep.v3 && !distinguished(rep.v3))
    rep.violations.push_back("Version II distinguished at k=" + std::to_string(k) +
                             " but Version III did not at k=" + std::to_string(rep.k3));
  return rep;
}

}  // namespace wl

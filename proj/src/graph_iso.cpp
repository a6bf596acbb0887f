#include "wl/graph_iso.hpp"

#include <algorithm>
#include <map>

namespace wl {

namespace {

struct SearchState {
  const Graph* g[2];
  int n;
  std::uint64_t nodes_left;
  std::vector<int> result;
  bool out_of_budget = false;
};

// Joint 1-dimensional refinement of the two colorings until stable.
// Returns false if the color histograms diverge (prune).
bool refine(SearchState& st, std::vector<int>& c0, std::vector<int>& c1) {
  const int n = st.n;
  using Sig = std::pair<int, std::vector<int>>;
  std::vector<Sig> sigs(2 * n);
  int classes = 0;
  for (;;) {
    for (int s = 0; s < 2; ++s) {
      const std::vector<int>& c = s ? c1 : c0;
      for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        nb.reserve(st.g[s]->degree(v));
        for (int w : st.g[s]->neighbors(v)) nb.push_back(c[w]);
        std::sort(nb.begin(), nb.end());
        sigs[s * n + v] = {c[v], std::move(nb)};
      }
    }
    std::map<Sig, int> ids;
    for (const Sig& sg : sigs) ids.emplace(sg, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> count0(next, 0), count1(next, 0);
    for (int v = 0; v < n; ++v) {
      c0[v] = ids[sigs[v]];
      c1[v] = ids[sigs[n + v]];
      ++count0[c0[v]];
      ++count1[c1[v]];
    }
    if (count0 != count1) return false;
    if (next == classes) return true;
    classes = next;
  }
}

bool search(SearchState& st, std::vector<int> c0, std::vector<int> c1) {
  if (st.nodes_left-- == 0) {
    st.out_of_budget = true;
    return false;
  }
  if (!refine(st, c0, c1)) return false;

  // smallest color id with a non-singleton class
  int branch_color = -1;
  std::vector<int> sizes;
  int max_color = 0;
  for (int v = 0; v < st.n; ++v) max_color = std::max(max_color, c0[v]);
  sizes.assign(max_color + 1, 0);
  for (int v = 0; v < st.n; ++v) ++sizes[c0[v]];
  for (int c = 0; c <= max_color; ++c)
    if (sizes[c] > 1) {
      branch_color = c;
      break;
    }

  if (branch_color < 0) {
    // discrete: read off the bijection and verify
    std::vector<int> map(st.n, -1), where(max_color + 1, -1);
    for (int v = 0; v < st.n; ++v) where[c1[v]] = v;
    for (int v = 0; v < st.n; ++v) {
      if (where[c0[v]] < 0) return false;
      map[v] = where[c0[v]];
    }
    if (!verify_graph_iso(*st.g[0], *st.g[1], map)) return false;
    st.result = std::move(map);
    return true;
  }

  int v = -1;
  for (int u = 0; u < st.n; ++u)
    if (c0[u] == branch_color) {
      v = u;
      break;
    }
  const int fresh = max_color + 1;
  for (int w = 0; w < st.n; ++w) {
    if (c1[w] != branch_color) continue;
    std::vector<int> d0 = c0, d1 = c1;
    d0[v] = fresh;
    d1[w] = fresh;
    if (search(st, std::move(d0), std::move(d1))) return true;
    if (st.out_of_budget) return false;
  }
  return false;
}

}  // namespace

bool verify_graph_iso(const Graph& g0, const Graph& g1, const std::vector<int>& mapping) {
  const int n = g0.vertex_count();
  if (g1.vertex_count() != n || static_cast<int>(mapping.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v = 0; v < n; ++v) {
    if (mapping[v] < 0 || mapping[v] >= n || hit[mapping[v]]) return false;
    hit[mapping[v]] = 1;
  }
  if (g0.edge_count() != g1.edge_count()) return false;
  for (auto [u, v] : g0.edges())
    if (!g1.has_edge(mapping[u], mapping[v])) return false;
  if (g0.has_vertex_colors() || g1.has_vertex_colors()) {
    auto col = [](const Graph& g, int v) {
      return g.has_vertex_colors() ? g.vertex_colors()[v] : 0;
    };
    for (int v = 0; v < n; ++v)
      if (col(g0, v) != col(g1, mapping[v])) return false;
  }
  return true;
}

GraphIsoResult graph_iso_oracle(const Graph& g0, const Graph& g1, std::uint64_t node_budget) {
  GraphIsoResult res;
  if (g0.vertex_count() != g1.vertex_count() || g0.edge_count() != g1.edge_count())
    return res;
  const int n = g0.vertex_count();
  if (n == 0) {
    res.status = SearchStatus::found;
    return res;
  }
  SearchState st;
  st.g[0] = &g0;
  st.g[1] = &g1;
  st.n = n;
  st.nodes_left = node_budget;
  auto initial = [](const Graph& g) {
    std::vector<int> c(g.vertex_count(), 0);
    if (g.has_vertex_colors()) c = g.vertex_colors();
    return c;
  };
  if (search(st, initial(g0), initial(g1))) {
    res.status = SearchStatus::found;
    res.mapping = std::move(st.result);
  } else if (st.out_of_budget) {
    res.status = SearchStatus::budget;
  }
  return res;
}

}  // namespace wl

#include "wl/cfi.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace wl {

int CfiGraph::base_edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto& es = base_.edges();
  auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v));
  if (it == es.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - es.begin());
}

CfiGraph build_cfi(const Graph& base, const std::vector<std::pair<int, int>>& twist) {
  if (!base.is_connected() || base.vertex_count() == 0)
    throw std::invalid_argument("CFI construction needs a connected base graph");
  const int t = base.vertex_count();
  for (int v = 0; v < t; ++v)
    if (base.degree(v) == 0) throw std::invalid_argument("base graph has an isolated vertex");
  if (base.vertex_count() > 1 && base.edge_count() == 0)
    throw std::invalid_argument("base graph has no edges");

  CfiGraph out;
  out.base_ = base;
  out.gadget_start_.resize(t);
  out.internals_.resize(t);

  int next = 0;
  for (int v = 0; v < t; ++v) {
    const int d = base.degree(v);
    out.gadget_start_[v] = next;
    for (int i = 0; i < d; ++i) {
      // a_i then b_i
      out.kind_of_.push_back({false, i, false, 0});
      out.kind_of_.push_back({false, i, true, 0});
      out.gadget_of_.push_back(v);
      out.gadget_of_.push_back(v);
      next += 2;
    }
    for (std::uint32_t m = 0; m < (1u << d); ++m) {
      if (__builtin_popcount(m) % 2) continue;
      out.kind_of_.push_back({true, -1, false, m});
      out.gadget_of_.push_back(v);
      out.internals_[v].push_back(next);
      ++next;
    }
  }

  std::vector<std::pair<int, int>> edges;
  // gadget wiring: internal m - a_i if bit i of m is 0, else m - b_i
  for (int v = 0; v < t; ++v) {
    const int d = base.degree(v);
    for (int mv : out.internals_[v]) {
      std::uint32_t m = out.kind_of_[mv].bits;
      for (int i = 0; i < d; ++i)
        edges.emplace_back(mv, out.external(v, i, (m >> i) & 1));
    }
  }

  // links: pair index of edge {u,v} at u is the rank of v among u's neighbors
  std::vector<char> twisted_flag(base.edge_count(), 0);
  for (auto [u, v] : twist) {
    if (u > v) std::swap(u, v);
    auto& es = base.edges();
    auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v));
    if (it == es.end() || *it != std::make_pair(u, v))
      throw std::invalid_argument("twist edge is not a base edge");
    twisted_flag[it - es.begin()] = 1;
  }
  auto pair_index_at = [&](int u, int v) {
    const auto& nb = base.neighbors(u);
    return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  };
  for (std::size_t e = 0; e < base.edges().size(); ++e) {
    auto [u, v] = base.edges()[e];
    CfiLink link;
    link.base_u = u;
    link.base_v = v;
    link.pair_u = pair_index_at(u, v);
    link.pair_v = pair_index_at(v, u);
    link.a_u = out.external(u, link.pair_u, false);
    link.b_u = out.external(u, link.pair_u, true);
    link.a_v = out.external(v, link.pair_v, false);
    link.b_v = out.external(v, link.pair_v, true);
    link.twisted = twisted_flag[e];
    if (link.twisted) {
      edges.emplace_back(link.a_u, link.b_v);
      edges.emplace_back(link.b_u, link.a_v);
      out.twisted_.push_back(static_cast<int>(e));
    } else {
      edges.emplace_back(link.a_u, link.a_v);
      edges.emplace_back(link.b_u, link.b_v);
    }
    out.links_.push_back(link);
  }

  out.graph_ = Graph::from_edges(next, std::move(edges));
  return out;
}

int parity_invariant(const CfiGraph& g, const std::vector<int>& internal_choice) {
  if (!g.base().is_regular(3))
    throw std::invalid_argument("parity invariant needs a 3-regular base graph");
  const int t = g.base().vertex_count();
  if (static_cast<int>(internal_choice.size()) != t)
    throw std::invalid_argument("need one internal choice per gadget");
  std::vector<int> special;
  for (int v = 0; v < t; ++v) {
    int idx = internal_choice[v];
    if (idx < 0 || idx >= static_cast<int>(g.internals(v).size()))
      throw std::invalid_argument("internal choice out of range for gadget " + std::to_string(v));
    int mv = g.internals(v)[idx];
    special.push_back(mv);
    for (int w : g.graph().neighbors(mv)) special.push_back(w);
  }
  Graph sub = induced_subgraph(g.graph(), special);
  return static_cast<int>(sub.edge_count() % 2);
}

std::string cfi_metadata_json(const CfiGraph& g) {
  nlohmann::json j;
  j["gadget_of"] = g.gadget_of();
  auto& kinds = j["kind_of"] = nlohmann::json::array();
  for (const auto& k : g.kind_of()) {
    nlohmann::json e;
    if (k.internal) {
      e["kind"] = "internal";
      e["bits"] = k.bits;
    } else {
      e["kind"] = "external";
      e["pair"] = k.pair_index;
      e["side"] = k.b_side ? "b" : "a";
    }
    kinds.push_back(e);
  }
  auto& links = j["links"] = nlohmann::json::array();
  for (const auto& l : g.links()) {
    links.push_back({{"base_edge", {l.base_u, l.base_v}},
                     {"pairs", {l.pair_u, l.pair_v}},
                     {"vertices", {l.a_u, l.b_u, l.a_v, l.b_v}},
                     {"twisted", l.twisted}});
  }
  auto& tw = j["twisted"] = nlohmann::json::array();
  for (int e : g.twisted_base_edges())
    tw.push_back({g.base().edges()[e].first, g.base().edges()[e].second});
  return j.dump(2);
}

}  // namespace wl

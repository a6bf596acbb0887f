#include "wl/cfi_groups.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace wl {

CfiGroupPair CfiGroupPair::build(const Graph& base, std::uint32_t p, int designated_edge) {
  if (!base.is_regular(3)) throw std::invalid_argument("base graph must be 3-regular");
  if (!base.is_connected()) throw std::invalid_argument("base graph must be connected");
  if (designated_edge < 0 || designated_edge >= static_cast<int>(base.edge_count()))
    throw std::invalid_argument("designated edge index out of range");
  CfiGraph c1 = build_cfi(base, {});
  CfiGraph c2 = build_cfi(base, {base.edges()[designated_edge]});
  const int n = c1.graph().vertex_count();
  MeklerGroup g1(c1.graph(), p);
  MeklerGroup g2(c2.graph(), p);
  MeklerGroup f(empty_graph(n), p);
  return CfiGroupPair{base,          p,  designated_edge, std::move(c1), std::move(c2),
                      std::move(g1), std::move(g2), std::move(f)};
}

MeklerElement twist_map(const CfiGroupPair& pair, const MeklerElement& x, int base_edge) {
  if (base_edge < 0 || base_edge >= static_cast<int>(pair.base.edge_count()))
    throw std::invalid_argument("twist edge is not a base edge");
  const CfiLink& link = pair.cfi1.links()[base_edge];
  const MeklerGroup& f = pair.free_group;
  MeklerElement r = x;
  auto swap_coords = [&](int u1, int v1, int u2, int v2) {
    int i1 = f.non_edge_index(u1, v1);
    int i2 = f.non_edge_index(u2, v2);
    std::uint32_t t = r.comm[i1];
    r.comm.set(i1, r.comm[i2]);
    r.comm.set(i2, t);
  };
  swap_coords(link.a_u, link.a_v, link.a_u, link.b_v);
  swap_coords(link.b_u, link.b_v, link.b_u, link.a_v);
  return r;
}

std::vector<MeklerElement> twist_map(const CfiGroupPair& pair,
                                     const std::vector<MeklerElement>& tuple, int base_edge) {
  std::vector<MeklerElement> out;
  out.reserve(tuple.size());
  for (const auto& x : tuple) out.push_back(twist_map(pair, x, base_edge));
  return out;
}

GadgetTwist link_twist_generator(const CfiGraph& cfi, int base_vertex, int edge1, int edge2) {
  const auto& links = cfi.links();
  auto pair_at = [&](int e) {
    const CfiLink& l = links[e];
    if (l.base_u == base_vertex) return l.pair_u;
    if (l.base_v == base_vertex) return l.pair_v;
    throw std::invalid_argument("link not incident to the gadget");
  };
  const int i = pair_at(edge1), j = pair_at(edge2);
  if (i == j) throw std::invalid_argument("need two distinct incident links");

  GadgetTwist out;
  out.perm.resize(cfi.graph().vertex_count());
  std::iota(out.perm.begin(), out.perm.end(), 0);
  for (int pairidx : {i, j}) {
    int a = cfi.external(base_vertex, pairidx, false);
    int b = cfi.external(base_vertex, pairidx, true);
    std::swap(out.perm[a], out.perm[b]);
  }
  const std::uint32_t mask = (1u << i) | (1u << j);
  const auto& internals = cfi.internals(base_vertex);
  for (int mv : internals) {
    std::uint32_t bits = cfi.kind_of()[mv].bits ^ mask;
    auto it = std::find_if(internals.begin(), internals.end(),
                           [&](int w) { return cfi.kind_of()[w].bits == bits; });
    out.perm[mv] = *it;  // even weight is preserved, so the partner exists
  }
  return out;
}

GadgetTwist compose(const GadgetTwist& f, const GadgetTwist& g) {
  GadgetTwist out;
  out.perm.resize(g.perm.size());
  for (std::size_t v = 0; v < g.perm.size(); ++v) out.perm[v] = f.perm[g.perm[v]];
  return out;
}

GadgetTwist sigma_for_edge(const CfiGroupPair& pair, int base_edge) {
  GadgetTwist sigma;
  sigma.perm.resize(pair.cfi1.graph().vertex_count());
  std::iota(sigma.perm.begin(), sigma.perm.end(), 0);
  if (base_edge == pair.designated_edge) return sigma;

  // breadth-first path between edges in the base graph (edges adjacent when
  // they share an endpoint)
  const auto& edges = pair.base.edges();
  const int ne = static_cast<int>(edges.size());
  std::vector<int> prev(ne, -2);
  std::queue<int> q;
  prev[base_edge] = -1;
  q.push(base_edge);
  while (!q.empty() && prev[pair.designated_edge] == -2) {
    int e = q.front();
    q.pop();
    for (int e2 = 0; e2 < ne; ++e2) {
      if (prev[e2] != -2) continue;
      auto [a, b] = edges[e];
      auto [c, d] = edges[e2];
      if (a == c || a == d || b == c || b == d) {
        prev[e2] = e;
        q.push(e2);
      }
    }
  }
  std::vector<int> path;  // designated .. base_edge
  for (int e = pair.designated_edge; e != -1; e = prev[e]) path.push_back(e);
  std::reverse(path.begin(), path.end());  // base_edge .. designated
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    auto [a, b] = edges[path[s]];
    auto [c, d] = edges[path[s + 1]];
    int shared = (a == c || a == d) ? a : b;
    sigma = compose(link_twist_generator(pair.cfi1, shared, path[s], path[s + 1]), sigma);
  }
  return sigma;
}

MeklerElement apply_gadget_twist(const MeklerGroup& free_group, const GadgetTwist& sigma,
                                 const MeklerElement& x) {
  const auto& perm = sigma.perm;
  if (static_cast<int>(perm.size()) != free_group.n())
    throw std::invalid_argument("permutation size mismatch");
  MeklerElement r = free_group.identity();
  for (int v = 0; v < free_group.n(); ++v) r.gen.set(perm[v], x.gen[v]);
  for (int idx = 0; idx < free_group.m(); ++idx) {
    if (!x.comm[idx]) continue;
    auto [i, j] = free_group.non_edges()[idx];
    int u = perm[i], v = perm[j];
    int sign = 1;
    if (u > v) {
      std::swap(u, v);
      sign = -1;
    }
    r.comm.add_at(free_group.non_edge_index(u, v), sign * std::int64_t(x.comm[idx]));
  }
  return r;
}

std::vector<MeklerElement> apply_gadget_twist(const MeklerGroup& free_group,
                                              const GadgetTwist& sigma,
                                              const std::vector<MeklerElement>& tuple) {
  std::vector<MeklerElement> out;
  out.reserve(tuple.size());
  for (const auto& x : tuple) out.push_back(apply_gadget_twist(free_group, sigma, x));
  return out;
}

namespace {

FpMatrix zeroed_b2(const MeklerGroup& f, const FpMatrix& b2,
                   const std::vector<std::pair<int, int>>& edges) {
  FpMatrix z = b2;
  for (auto [u, v] : edges) z.zero_column(pair_rank(std::min(u, v), std::max(u, v), f.n()));
  return z;
}

// edge set of the CFI graph with exactly base edge e twisted, written on the
// untwisted side's metadata
std::vector<std::pair<int, int>> edge_set_with_twist(const CfiGraph& cfi, int e) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : cfi.graph().edges()) edges.emplace_back(u, v);
  const CfiLink& l = cfi.links()[e];
  auto drop = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    edges.erase(std::remove(edges.begin(), edges.end(), std::make_pair(a, b)), edges.end());
  };
  drop(l.a_u, l.a_v);
  drop(l.b_u, l.b_v);
  edges.emplace_back(std::min(l.a_u, l.b_v), std::max(l.a_u, l.b_v));
  edges.emplace_back(std::min(l.b_u, l.a_v), std::max(l.b_u, l.a_v));
  return edges;
}

}  // namespace

SubgroupCertificate subgroup_certificate(const MeklerGroup& free_group,
                                         const std::vector<MeklerElement>& tuple,
                                         const std::vector<std::pair<int, int>>& edges_to_zero) {
  auto [b1, b2] = free_group.b_matrices(tuple);
  FpMatrix z = zeroed_b2(free_group, b2, edges_to_zero);
  SubgroupCertificate cert;
  cert.k = static_cast<int>(tuple.size());
  cert.rank = rank(z);
  cert.kernel = row_kernel(z);
  return cert;
}

std::optional<int> twist_edge_search(const CfiGroupPair& pair,
                                     const std::vector<MeklerElement>& tuple) {
  const MeklerGroup& f = pair.free_group;
  auto [b1, b2] = f.b_matrices(tuple);
  std::vector<std::pair<int, int>> untwisted;
  for (auto [u, v] : pair.cfi1.graph().edges()) untwisted.emplace_back(u, v);
  FpMatrix a = zeroed_b2(f, b2, untwisted);
  for (int e = 0; e < static_cast<int>(pair.base.edge_count()); ++e) {
    FpMatrix be = zeroed_b2(f, b2, edge_set_with_twist(pair.cfi1, e));
    if (column_space_equal(a, be)) return e;
  }
  return std::nullopt;
}

PipelineCheck phi_pipeline_check(const CfiGroupPair& pair,
                                 const std::vector<MeklerElement>& tuple) {
  PipelineCheck out;
  auto e = twist_edge_search(pair, tuple);
  if (!e) return out;
  out.edge_found = true;
  out.edge = *e;

  std::vector<std::pair<int, int>> edges1(pair.cfi1.graph().edges());
  std::vector<std::pair<int, int>> edges2(pair.cfi2.graph().edges());
  SubgroupCertificate left = subgroup_certificate(pair.free_group, tuple, edges1);

  GadgetTwist sigma = sigma_for_edge(pair, *e);
  std::vector<MeklerElement> carried =
      apply_gadget_twist(pair.free_group, sigma, twist_map(pair, tuple, *e));
  SubgroupCertificate right = subgroup_certificate(pair.free_group, carried, edges2);
  out.certificates_equal = left == right;
  return out;
}

CentralizerProfileReport centralizer_profile_check(const MeklerGroup& g, int samples,
                                                   std::uint64_t seed) {
  if (!g.graph().is_regular(3))
    throw std::invalid_argument("centralizer profile check needs a 3-regular graph");
  if (!complement(g.graph()).is_connected())
    throw std::invalid_argument("centralizer profile check needs a connected complement");
  CentralizerProfileReport rep;
  const int zc = g.center_order_exponent();
  for (int v = 0; v < g.n(); ++v) {
    ++rep.vertices_checked;
    if (g.centralizer_basis(g.generator(v)).order_exponent - zc != 4) ++rep.vertex_violations;
  }
  Rng rng(seed);
  while (rep.samples_checked < samples) {
    MeklerElement x = random_element(g, rng);
    if (g.support(x).size() < 2) continue;
    ++rep.samples_checked;
    if (g.centralizer_basis(x).order_exponent - zc > 3) ++rep.sample_violations;
  }
  return rep;
}

CfiGroupVerdict distinguish_cfi_groups(const CfiGroupPair& pair) {
  std::vector<int> choice(pair.base.vertex_count(), 0);
  CfiGroupVerdict v;
  v.bit1 = parity_invariant(pair.cfi1, choice);
  v.bit2 = parity_invariant(pair.cfi2, choice);
  v.distinguished = v.bit1 != v.bit2;
  return v;
}

}  // namespace wl

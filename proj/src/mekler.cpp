#include "wl/mekler.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "wl/graph_iso.hpp"

namespace wl {

MeklerGroup::MeklerGroup(Graph graph, std::uint32_t p) : graph_(std::move(graph)), p_(p) {
  require_odd_prime(p);
  const int nn = graph_.vertex_count();
  pair_to_basis_.assign(choose2(nn), -1);
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j)
      if (!graph_.has_edge(i, j)) {
        pair_to_basis_[pair_rank(i, j, nn)] = static_cast<int>(non_edges_.size());
        non_edges_.emplace_back(i, j);
      }
}

int MeklerGroup::non_edge_index(int i, int j) const {
  if (i == j) return -1;
  if (i > j) std::swap(i, j);
  return pair_to_basis_[pair_rank(i, j, n())];
}

std::optional<std::uint64_t> MeklerGroup::order() const {
  std::uint64_t o = 1;
  for (int i = 0; i < order_exponent(); ++i) {
    if (o > (std::uint64_t(1) << 62) / p_) return std::nullopt;
    o *= p_;
  }
  return o;
}

MeklerElement MeklerGroup::identity() const {
  return {FpVector(p_, n()), FpVector(p_, m())};
}

MeklerElement MeklerGroup::generator(int i) const {
  if (i < 0 || i >= n()) throw std::invalid_argument("generator index out of range");
  MeklerElement x = identity();
  x.gen.set(i, 1);
  return x;
}

MeklerElement MeklerGroup::commutator_basis_element(int non_edge) const {
  if (non_edge < 0 || non_edge >= m()) throw std::invalid_argument("non-edge index out of range");
  MeklerElement x = identity();
  x.comm.set(non_edge, 1);
  return x;
}

MeklerElement MeklerGroup::element(FpVector gen, FpVector comm) const {
  if (gen.p() != p_ || comm.p() != p_ || static_cast<int>(gen.size()) != n() ||
      static_cast<int>(comm.size()) != m())
    throw std::invalid_argument("element shape mismatch");
  return {std::move(gen), std::move(comm)};
}

MeklerElement MeklerGroup::mul(const MeklerElement& x, const MeklerElement& y) const {
  MeklerElement r = identity();
  for (int i = 0; i < n(); ++i) r.gen.set(i, std::int64_t(x.gen[i]) + y.gen[i]);
  // moving y's generators left past x's tail: each non-edge (j,i), j < i,
  // picks up [v_j,v_i]^(-x_i y_j)
  for (int ne = 0; ne < m(); ++ne) {
    auto [j, i] = non_edges_[ne];
    std::int64_t corr = -std::int64_t(x.gen[i]) * y.gen[j];
    r.comm.set(ne, std::int64_t(x.comm[ne]) + y.comm[ne] + corr);
  }
  return r;
}

MeklerElement MeklerGroup::inv(const MeklerElement& x) const {
  MeklerElement r = identity();
  for (int i = 0; i < n(); ++i) r.gen.set(i, -std::int64_t(x.gen[i]));
  for (int ne = 0; ne < m(); ++ne) {
    auto [j, i] = non_edges_[ne];
    r.comm.set(ne, -std::int64_t(x.comm[ne]) - std::int64_t(x.gen[i]) * x.gen[j]);
  }
  return r;
}

MeklerElement MeklerGroup::pow(const MeklerElement& x, std::int64_t e) const {
  e %= p_;
  if (e < 0) e += p_;
  MeklerElement acc = identity(), b = x;
  while (e) {
    if (e & 1) acc = mul(acc, b);
    b = mul(b, b);
    e >>= 1;
  }
  return acc;
}

MeklerElement MeklerGroup::commutator(const MeklerElement& x, const MeklerElement& y) const {
  return mul(mul(x, y), mul(inv(x), inv(y)));
}

bool MeklerGroup::commute(const MeklerElement& x, const MeklerElement& y) const {
  // [x,y] has coordinate x_j y_i - x_i y_j at each non-edge (j,i)
  for (auto [j, i] : non_edges_) {
    std::int64_t c = std::int64_t(x.gen[j]) * y.gen[i] - std::int64_t(x.gen[i]) * y.gen[j];
    if (fp_reduce(c, p_) != 0) return false;
  }
  return true;
}

std::vector<int> MeklerGroup::support(const MeklerElement& x) const {
  std::vector<int> s;
  for (int i = 0; i < n(); ++i)
    if (x.gen[i]) s.push_back(i);
  return s;
}

MeklerElement MeklerGroup::subword(const MeklerElement& x, const std::vector<int>& s) const {
  MeklerElement r = identity();
  for (int i : s) r.gen.set(i, x.gen[i]);
  return r;
}

std::vector<int> MeklerGroup::universal_vertices() const {
  std::vector<int> u;
  for (int v = 0; v < n(); ++v)
    if (graph_.degree(v) == n() - 1) u.push_back(v);
  return u;
}

bool MeklerGroup::is_central(const MeklerElement& x) const {
  for (int i : support(x))
    if (graph_.degree(i) != n() - 1) return false;
  return true;
}

std::vector<MeklerElement> MeklerGroup::center_basis() const {
  std::vector<MeklerElement> basis;
  for (int ne = 0; ne < m(); ++ne) basis.push_back(commutator_basis_element(ne));
  for (int v : universal_vertices()) basis.push_back(generator(v));
  return basis;
}

int MeklerGroup::center_order_exponent() const {
  return m() + static_cast<int>(universal_vertices().size());
}

MeklerGroup::CentralizerBasis MeklerGroup::centralizer_basis(const MeklerElement& x) const {
  CentralizerBasis out;
  std::vector<int> supp = support(x);
  if (supp.empty() || is_central(x)) {
    // whole group
    for (int v = 0; v < n(); ++v) {
      out.basis.push_back(generator(v));
      out.components.push_back({v});
    }
    out.order_exponent = order_exponent();
    return out;
  }

  // connected components of the complement restricted to the support
  const int s = static_cast<int>(supp.size());
  std::vector<int> comp(s, -1);
  int comps = 0;
  for (int i = 0; i < s; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = comps;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < s; ++b)
        if (comp[b] < 0 && !graph_.has_edge(supp[a], supp[b])) {
          comp[b] = comps;
          stack.push_back(b);
        }
    }
    ++comps;
  }
  out.components.assign(comps, {});
  for (int i = 0; i < s; ++i) out.components[comp[i]].push_back(supp[i]);
  for (const auto& c : out.components) out.basis.push_back(subword(x, c));

  for (int v = 0; v < n(); ++v) {
    if (x.gen[v]) continue;
    bool all = true;
    for (int w : supp)
      if (!graph_.has_edge(v, w)) {
        all = false;
        break;
      }
    if (all) {
      out.common_neighbors.push_back(v);
      out.basis.push_back(generator(v));
    }
  }
  out.order_exponent = comps + static_cast<int>(out.common_neighbors.size()) + m();
  return out;
}

std::pair<FpMatrix, FpMatrix> MeklerGroup::b_matrices(const std::vector<MeklerElement>& tuple) const {
  const int k = static_cast<int>(tuple.size());
  FpMatrix b1(p_, k, n());
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n(); ++c) b1.set(r, c, tuple[r].gen[c]);
  FpMatrix b2(p_, choose2(k), choose2(n()));
  if (k >= 2 && n() >= 2) b2 = wedge(b1);
  for (auto [u, v] : graph_.edges()) b2.zero_column(pair_rank(u, v, n()));
  return {std::move(b1), std::move(b2)};
}

namespace {
struct VecPairHash {
  std::size_t operator()(const std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>& v)
      const noexcept {
    std::uint64_t h = 0x01000193;
    for (auto x : v.first) h = absorb(h, x);
    for (auto x : v.second) h = absorb(h, x + 0x100000);
    return static_cast<std::size_t>(mix64(h));
  }
};
struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 17;
    for (auto x : v) h = absorb(h, x);
    return static_cast<std::size_t>(mix64(h));
  }
};
}  // namespace

MeklerGroup::ClosureResult MeklerGroup::subgroup_order(const std::vector<MeklerElement>& tuple,
                                                       std::uint64_t budget) const {
  using Key = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
  std::unordered_map<Key, int, VecPairHash> seen;
  std::vector<MeklerElement> queue;
  auto push = [&](const MeklerElement& e) {
    Key k{e.gen.data(), e.comm.data()};
    if (seen.emplace(std::move(k), 1).second) queue.push_back(e);
  };
  push(identity());
  for (const auto& t : tuple) push(t);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (seen.size() > budget) return {OracleStatus::budget, 0};
    for (const auto& t : tuple) push(mul(queue[i], t));
  }
  return {OracleStatus::found, seen.size()};
}

int MeklerGroup::free_subgroup_order_exponent(const std::vector<MeklerElement>& tuple) const {
  if (m() != static_cast<int>(choose2(n())))
    throw std::invalid_argument("free-group order formula needs an edgeless graph");
  // symbolic elimination on group elements: row-reduce the generator parts,
  // tracking the group-level operations so central residues stay exact
  std::vector<MeklerElement> es = tuple;
  std::vector<MeklerElement> pivots;
  std::vector<int> pivot_cols;
  for (int col = 0; col < n(); ++col) {
    int found = -1;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (es[i].gen[col] != 0) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0) continue;
    MeklerElement piv = pow(es[found], fp_inv(es[found].gen[col], p_));
    es.erase(es.begin() + found);
    for (auto& e : es)
      if (e.gen[col] != 0) e = mul(e, pow(piv, -std::int64_t(e.gen[col])));
    pivots.push_back(piv);
    pivot_cols.push_back(col);
  }
  const int r = static_cast<int>(pivots.size());
  // central contributions: leftovers from eliminated rows plus the
  // commutators among the pivot elements
  std::vector<std::vector<std::int64_t>> central;
  for (const auto& e : es) {
    std::vector<std::int64_t> row(e.comm.data().begin(), e.comm.data().end());
    central.push_back(std::move(row));
  }
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      MeklerElement c = commutator(pivots[a], pivots[b]);
      std::vector<std::int64_t> row(c.comm.data().begin(), c.comm.data().end());
      central.push_back(std::move(row));
    }
  std::size_t dim = central.empty() ? 0 : rank(FpMatrix::from_rows(p_, central));
  return r + static_cast<int>(dim);
}

std::uint64_t MeklerGroup::element_index(const MeklerElement& x) const {
  std::uint64_t idx = 0;
  for (int i = 0; i < n(); ++i) idx = idx * p_ + x.gen[i];
  for (int i = 0; i < m(); ++i) idx = idx * p_ + x.comm[i];
  return idx;
}

MeklerElement MeklerGroup::element_at(std::uint64_t idx) const {
  MeklerElement x = identity();
  for (int i = m() - 1; i >= 0; --i) {
    x.comm.set(i, static_cast<std::int64_t>(idx % p_));
    idx /= p_;
  }
  for (int i = n() - 1; i >= 0; --i) {
    x.gen.set(i, static_cast<std::int64_t>(idx % p_));
    idx /= p_;
  }
  return x;
}

CayleyGroup MeklerGroup::to_cayley(std::uint64_t max_order) const {
  auto ord = order();
  if (!ord || *ord > max_order)
    throw std::invalid_argument("group order exceeds the table budget");
  const std::uint64_t N = *ord;
  std::vector<int> table(N * N);
  for (std::uint64_t a = 0; a < N; ++a) {
    MeklerElement ea = element_at(a);
    for (std::uint64_t b = 0; b < N; ++b)
      table[a * N + b] = static_cast<int>(element_index(mul(ea, element_at(b))));
  }
  return CayleyGroup::from_table(static_cast<int>(N), std::move(table));
}

MeklerGroup::CommutingGraph MeklerGroup::commuting_graph(int support_cap,
                                                         std::uint64_t vertex_budget) const {
  if (support_cap < 1) throw std::invalid_argument("support cap must be >= 1");
  CommutingGraph out;
  std::vector<int> universal = universal_vertices();
  std::vector<char> is_universal(n(), 0);
  for (int v : universal) is_universal[v] = 1;
  std::vector<int> free_verts;
  for (int v = 0; v < n(); ++v)
    if (!is_universal[v]) free_verts.push_back(v);

  // enumerate representatives by (support set, exponents)
  std::unordered_map<std::vector<std::uint32_t>, int, VecHash> id_of;
  auto emit = [&](const std::vector<int>& supp) {
    std::vector<std::uint32_t> gen(n(), 0);
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < supp.size(); ++i) combos *= (p_ - 1);
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t x = c;
      for (std::size_t i = 0; i < supp.size(); ++i) {
        gen[supp[i]] = 1 + static_cast<std::uint32_t>(x % (p_ - 1));
        x /= (p_ - 1);
      }
      int id = static_cast<int>(out.reps.size());
      id_of.emplace(gen, id);
      out.reps.emplace_back(p_, gen);
      for (int v : supp) gen[v] = 0;
    }
  };
  // support sets of size 1..cap over non-universal vertices
  std::vector<int> supp;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!supp.empty()) emit(supp);
    if (static_cast<int>(supp.size()) == support_cap) return;
    for (std::size_t i = start; i < free_verts.size(); ++i) {
      supp.push_back(free_verts[i]);
      self(self, i + 1);
      supp.pop_back();
    }
  };
  rec(rec, 0);
  if (out.reps.size() > vertex_budget)
    throw std::invalid_argument("commuting graph vertex budget exceeded");

  // edges: neighbors of x are the centralizer cosets, enumerated over the
  // centralizer basis modulo the center
  std::vector<std::pair<int, int>> edges;
  const std::uint64_t pp = p_;
  for (std::size_t xi = 0; xi < out.reps.size(); ++xi) {
    MeklerElement x = identity();
    x.gen = out.reps[xi];
    CentralizerBasis cb = centralizer_basis(x);
    // span generators mod center: component subwords and non-universal
    // common neighbors
    std::vector<const FpVector*> span;
    std::vector<MeklerElement> span_store;
    for (std::size_t c = 0; c < cb.components.size(); ++c) span_store.push_back(cb.basis[c]);
    for (int v : cb.common_neighbors)
      if (!is_universal[v]) span_store.push_back(generator(v));
    for (const auto& e : span_store) span.push_back(&e.gen);

    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < span.size(); ++i) combos *= pp;
    std::vector<std::uint32_t> gen(n());
    for (std::uint64_t c = 1; c < combos; ++c) {
      std::fill(gen.begin(), gen.end(), 0);
      std::uint64_t t = c;
      for (std::size_t i = 0; i < span.size(); ++i) {
        std::uint64_t e = t % pp;
        t /= pp;
        if (!e) continue;
        const FpVector& b = *span[i];
        for (int v = 0; v < n(); ++v)
          gen[v] = static_cast<std::uint32_t>((gen[v] + e * b[v]) % pp);
      }
      auto it = id_of.find(gen);
      if (it == id_of.end() || it->second == static_cast<int>(xi)) continue;
      int a = static_cast<int>(xi), b = it->second;
      if (a < b) edges.emplace_back(a, b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = Graph::from_edges(static_cast<int>(out.reps.size()), std::move(edges));
  return out;
}

std::string MeklerGroup::format_element(const MeklerElement& x) const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << "*";
    first = false;
  };
  for (int i = 0; i < n(); ++i)
    if (x.gen[i]) {
      sep();
      os << "v" << (i + 1);
      if (x.gen[i] != 1) os << "^" << x.gen[i];
    }
  for (int ne = 0; ne < m(); ++ne)
    if (x.comm[ne]) {
      sep();
      auto [i, j] = non_edges_[ne];
      os << "[v" << (i + 1) << ",v" << (j + 1) << "]";
      if (x.comm[ne] != 1) os << "^" << x.comm[ne];
    }
  if (first) os << "1";
  return os.str();
}

namespace {

struct ElementLexer {
  const std::string& s;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("element literal: expected integer at position " +
                                  std::to_string(start));
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace

MeklerElement MeklerGroup::parse_element(const std::string& text) const {
  ElementLexer lx{text};
  MeklerElement acc = identity();
  bool expect_factor = true;
  while (true) {
    lx.skip_ws();
    if (lx.pos >= text.size()) break;
    if (!expect_factor) {
      if (!lx.eat('*')) throw std::invalid_argument("element literal: expected '*'");
      expect_factor = true;
      continue;
    }
    MeklerElement factor = identity();
    if (lx.eat('1') || lx.eat('e')) {
      // identity factor
    } else if (lx.eat('[')) {
      if (!lx.eat('v')) throw std::invalid_argument("element literal: expected 'v' in commutator");
      long long i = lx.integer() - 1;
      if (!lx.eat(',') || !lx.eat('v'))
        throw std::invalid_argument("element literal: malformed commutator");
      long long j = lx.integer() - 1;
      if (!lx.eat(']')) throw std::invalid_argument("element literal: missing ']'");
      if (i < 0 || j < 0 || i >= n() || j >= n() || i == j)
        throw std::invalid_argument("element literal: bad commutator indices");
      long long e = lx.eat('^') ? lx.integer() : 1;
      MeklerElement base = identity();
      if (i < j) {
        int ne = non_edge_index(static_cast<int>(i), static_cast<int>(j));
        if (ne < 0) continue;  // edge commutator: trivial factor
        base.comm.set(ne, 1);
      } else {
        int ne = non_edge_index(static_cast<int>(j), static_cast<int>(i));
        if (ne < 0) continue;
        base.comm.set(ne, -1);  // [v_i,v_j] = [v_j,v_i]^-1
      }
      factor = pow(base, e);
    } else if (lx.eat('v')) {
      long long i = lx.integer() - 1;
      if (i < 0 || i >= n()) throw std::invalid_argument("element literal: generator out of range");
      long long e = lx.eat('^') ? lx.integer() : 1;
      factor = pow(generator(static_cast<int>(i)), e);
    } else {
      throw std::invalid_argument("element literal: unexpected character at position " +
                                  std::to_string(lx.pos));
    }
    acc = mul(acc, factor);
    expect_factor = false;
  }
  if (expect_factor) throw std::invalid_argument("element literal: empty input or trailing '*'");
  return acc;
}

MeklerElement GroupIso::apply(const MeklerElement& x) const {
  MeklerElement r = to_->identity();
  for (int i = 0; i < from_->n(); ++i) r.gen.set(phi_[i], x.gen[i]);
  for (int ne = 0; ne < from_->m(); ++ne)
    if (x.comm[ne]) r.comm.add_at(comm_map_[ne], std::int64_t(comm_sign_[ne]) * x.comm[ne]);
  return r;
}

GroupIso graph_iso_to_group_iso(const std::vector<int>& phi, const MeklerGroup& g1,
                                const MeklerGroup& g2, std::uint64_t seed,
                                int multiplicativity_samples) {
  if (g1.p() != g2.p()) throw std::invalid_argument("modulus mismatch");
  if (!verify_graph_iso(g1.graph(), g2.graph(), phi))
    throw std::invalid_argument("phi is not an isomorphism of the presentation graphs");
  GroupIso iso;
  iso.from_ = &g1;
  iso.to_ = &g2;
  iso.phi_ = phi;
  iso.comm_map_.resize(g1.m());
  iso.comm_sign_.resize(g1.m());
  for (int ne = 0; ne < g1.m(); ++ne) {
    auto [i, j] = g1.non_edges()[ne];
    int u = phi[i], v = phi[j];
    int sign = 1;
    if (u > v) {
      std::swap(u, v);
      sign = -1;
    }
    int target = g2.non_edge_index(u, v);
    if (target < 0) throw std::logic_error("image of a non-edge is an edge");
    iso.comm_map_[ne] = target;
    iso.comm_sign_[ne] = sign;
  }
  Rng rng(seed);
  for (int s = 0; s < multiplicativity_samples; ++s) {
    MeklerElement a = random_element(g1, rng), b = random_element(g1, rng);
    if (iso.apply(g1.mul(a, b)) != g2.mul(iso.apply(a), iso.apply(b)))
      throw std::logic_error("induced map failed a multiplicativity check");
  }
  return iso;
}

MeklerElement random_element(const MeklerGroup& g, Rng& rng) {
  MeklerElement x = g.identity();
  for (int i = 0; i < g.n(); ++i) x.gen.set(i, rng.below32(g.p()));
  for (int i = 0; i < g.m(); ++i) x.comm.set(i, rng.below32(g.p()));
  return x;
}

}  // namespace wl

#include "wl/cayley.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "wl/fp.hpp"

namespace wl {

namespace {

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

CayleyGroup CayleyGroup::from_table(int n, std::vector<int> table) {
  if (n < 1) throw std::invalid_argument("group order must be >= 1");
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("table size is not order^2");
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] < 0 || table[i] >= n)
      throw std::invalid_argument("table entry out of range at position " + std::to_string(i));

  CayleyGroup g;
  g.n_ = n;
  g.table_ = std::move(table);

  g.id_ = -1;
  for (int e = 0; e < n && g.id_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) g.id_ = e;
  }
  if (g.id_ < 0) throw std::invalid_argument("table has no identity element");

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == g.id_ && g.mul(b, a) == g.id_) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0)
      throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
  }

  // Light's associativity test: x(gy) == (xg)y for g in a generating set is
  // enough once every element is a product of generators.
  std::vector<int> gens;
  {
    std::vector<char> reach(n, 0);
    int covered = 0;
    auto reclose = [&]() {
      std::fill(reach.begin(), reach.end(), 0);
      reach[g.id_] = 1;
      covered = 1;
      std::vector<int> queue{g.id_};
      while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int s : gens) {
          int v = g.mul(u, s);
          if (!reach[v]) {
            reach[v] = 1;
            ++covered;
            queue.push_back(v);
          }
        }
      }
    };
    reclose();
    while (covered < n) {
      int fresh = 0;
      while (reach[fresh]) ++fresh;
      gens.push_back(fresh);
      reclose();
    }
  }
  for (int s : gens)
    for (int x = 0; x < n; ++x) {
      const int xs = g.mul(x, s);
      const int* row_x = g.table_.data() + static_cast<std::size_t>(x) * n;
      const int* row_xs = g.table_.data() + static_cast<std::size_t>(xs) * n;
      const int* row_s = g.table_.data() + static_cast<std::size_t>(s) * n;
      for (int y = 0; y < n; ++y)
        if (row_xs[y] != row_x[row_s[y]])
          throw std::invalid_argument("table is not associative at " + triple_str(x, s, y));
    }
  return g;
}

int CayleyGroup::element_order(int a) const {
  int x = a, ord = 1;
  while (x != id_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

int CayleyGroup::power(int a, long long e) const {
  if (e < 0) {
    a = inv_[a];
    e = -e;
  }
  int acc = id_, b = a;
  while (e) {
    if (e & 1) acc = mul(acc, b);
    b = mul(b, b);
    e >>= 1;
  }
  return acc;
}

CayleyGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return CayleyGroup::from_table(n, std::move(t));
}

CayleyGroup direct_product(const CayleyGroup& g, const CayleyGroup& h) {
  const int n = g.order() * h.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  auto enc = [&](int a, int b) { return a * h.order() + b; };
  for (int a1 = 0; a1 < g.order(); ++a1)
    for (int b1 = 0; b1 < h.order(); ++b1)
      for (int a2 = 0; a2 < g.order(); ++a2)
        for (int b2 = 0; b2 < h.order(); ++b2)
          t[static_cast<std::size_t>(enc(a1, b1)) * n + enc(a2, b2)] =
              enc(g.mul(a1, a2), h.mul(b1, b2));
  return CayleyGroup::from_table(n, std::move(t));
}

CayleyGroup dihedral_group(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
  // elements: rotation r^i -> i, reflection r^i s -> n + i
  const int m = 2 * n;
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  auto mul = [&](int a, int b) {
    bool fa = a >= n, fb = b >= n;
    int ia = fa ? a - n : a, ib = fb ? b - n : b;
    // (r^ia s^fa)(r^ib s^fb): s r^ib = r^{-ib} s
    int rot = fa ? (ia - ib + n) % n : (ia + ib) % n;
    bool flip = fa != fb;
    return flip ? n + rot : rot;
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a) * m + b] = mul(a, b);
  return CayleyGroup::from_table(m, std::move(t));
}

CayleyGroup quaternion8() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto negate = [](int x) { return x ^ 1; };
  std::vector<int> t(64);
  auto set = [&](int a, int b, int c) { t[static_cast<std::size_t>(a) * 8 + b] = c; };
  // base products on {1,i,j,k}: i*i=-1, i*j=k, j*k=i, k*i=j, j*i=-k, ...
  const int one = 0, I = 2, J = 4, K = 6;
  auto base = [&](int a, int b) {
    if (a == one) return b;
    if (b == one) return a;
    if (a == b) return negate(one);
    if (a == I && b == J) return K;
    if (a == J && b == K) return I;
    if (a == K && b == I) return J;
    if (a == J && b == I) return negate(K);
    if (a == K && b == J) return negate(I);
    return negate(J);  // a == I && b == K
  };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int r = base(a & ~1, b & ~1);
      if ((a & 1) != (b & 1)) r = negate(r);
      set(a, b, r);
    }
  return CayleyGroup::from_table(8, std::move(t));
}

CayleyGroup heisenberg_group(std::uint32_t p) {
  require_odd_prime(p);
  const int n = static_cast<int>(p * p * p);
  auto enc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return static_cast<int>((a * p + b) * p + c);
  };
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a1 = 0; a1 < p; ++a1)
    for (std::uint32_t b1 = 0; b1 < p; ++b1)
      for (std::uint32_t c1 = 0; c1 < p; ++c1)
        for (std::uint32_t a2 = 0; a2 < p; ++a2)
          for (std::uint32_t b2 = 0; b2 < p; ++b2)
            for (std::uint32_t c2 = 0; c2 < p; ++c2)
              t[static_cast<std::size_t>(enc(a1, b1, c1)) * n + enc(a2, b2, c2)] =
                  enc((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
  return CayleyGroup::from_table(n, std::move(t));
}

std::vector<int> center(const CayleyGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x) central = g.mul(a, x) == g.mul(x, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> centralizer(const CayleyGroup& g, int x) {
  std::vector<int> c;
  for (int a = 0; a < g.order(); ++a)
    if (g.mul(a, x) == g.mul(x, a)) c.push_back(a);
  return c;
}

std::vector<int> subgroup_closure(const CayleyGroup& g, const std::vector<int>& tuple) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> queue;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  push(g.identity());
  for (int x : tuple) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("tuple element out of range");
    push(x);
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int s : tuple) push(g.mul(queue[i], s));
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<int> derived_subgroup(const CayleyGroup& g) {
  std::set<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) comms.insert(g.commutator(a, b));
  return subgroup_closure(g, std::vector<int>(comms.begin(), comms.end()));
}

std::vector<int> conjugacy_class_sizes(const CayleyGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> sizes;
  for (int a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    int size = 0;
    for (int x = 0; x < g.order(); ++x) {
      int c = g.conjugate(a, x);
      if (!seen[c]) {
        seen[c] = 1;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

int exponent(const CayleyGroup& g) {
  long long e = 1;
  for (int a = 0; a < g.order(); ++a) e = std::lcm(e, static_cast<long long>(g.element_order(a)));
  return static_cast<int>(e);
}

std::optional<int> nilpotency_class(const CayleyGroup& g) {
  // lower central series; class c iff the (c+1)-st term collapses to 1
  std::vector<int> term(g.order());
  std::iota(term.begin(), term.end(), 0);
  int c = 0;
  for (;;) {
    if (term.size() == 1) return c;
    std::set<int> comms;
    for (int a = 0; a < g.order(); ++a)
      for (int z : term) comms.insert(g.commutator(a, z));
    std::vector<int> next = subgroup_closure(g, std::vector<int>(comms.begin(), comms.end()));
    if (next == term) return std::nullopt;  // series stalled: not nilpotent
    term = std::move(next);
    ++c;
  }
}

std::vector<int> greedy_generating_tuple(const CayleyGroup& g) {
  std::vector<int> gens;
  std::vector<int> closure{g.identity()};
  while (static_cast<int>(closure.size()) < g.order()) {
    int best = -1;
    std::size_t best_size = closure.size();
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(closure.begin(), closure.end(), x)) continue;
      std::vector<int> cand = gens;
      cand.push_back(x);
      std::size_t s = subgroup_closure(g, cand).size();
      if (s > best_size) {
        best_size = s;
        best = x;
      }
    }
    gens.push_back(best);
    closure = subgroup_closure(g, gens);
  }
  if (gens.empty()) gens.push_back(g.identity());  // trivial group
  return gens;
}

std::vector<int> certificate_discovery_order(const CayleyGroup& g, const std::vector<int>& tuple) {
  std::vector<int> pos(g.order(), -1);
  std::vector<int> ord;
  auto discover = [&](int x) {
    if (pos[x] < 0) {
      pos[x] = static_cast<int>(ord.size());
      ord.push_back(x);
    }
  };
  discover(g.identity());
  for (std::size_t i = 0; i < ord.size(); ++i)
    for (int s : tuple) discover(g.mul(s, ord[i]));
  return ord;
}

MarkedCertificate marked_certificate(const CayleyGroup& g, const std::vector<int>& tuple) {
  for (int x : tuple)
    if (x < 0 || x >= g.order()) throw std::invalid_argument("tuple element out of range");
  std::vector<int> ord = certificate_discovery_order(g, tuple);
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < ord.size(); ++i) pos[ord[i]] = static_cast<int>(i);
  MarkedCertificate cert;
  cert.k = static_cast<int>(tuple.size());
  cert.order = static_cast<int>(ord.size());
  for (int s : tuple) cert.gen_pos.push_back(pos[s]);
  cert.table.resize(static_cast<std::size_t>(cert.order) * cert.order);
  for (int a = 0; a < cert.order; ++a)
    for (int b = 0; b < cert.order; ++b)
      cert.table[static_cast<std::size_t>(a) * cert.order + b] = pos[g.mul(ord[a], ord[b])];
  return cert;
}

Digest128 MarkedCertificate::digest() const {
  std::uint64_t h = 0x7c3a9d5b21f08e4dULL;
  h = absorb(h, k);
  h = absorb(h, order);
  for (int p : gen_pos) h = absorb(h, p);
  for (int v : table) h = absorb(h, v);
  return {mix64(h), mix64(h + 0x38b4da56d68c4b7bULL)};
}

namespace {

// order, centralizer size, conjugacy class size: cheap per-element invariants
struct ElementInvariant {
  int order, cent, ccl;
  auto operator<=>(const ElementInvariant&) const = default;
};

std::vector<ElementInvariant> element_invariants(const CayleyGroup& g) {
  std::vector<ElementInvariant> inv(g.order());
  for (int a = 0; a < g.order(); ++a) {
    int cent = static_cast<int>(centralizer(g, a).size());
    inv[a] = {g.element_order(a), cent, g.order() / cent};
  }
  return inv;
}

struct IsoSearch {
  const CayleyGroup *g, *h;
  std::vector<int> tuple;
  std::vector<MarkedCertificate> prefix_cert;  // cert of tuple[0..depth)
  std::vector<ElementInvariant> inv_g, inv_h;
  std::uint64_t budget;
  bool out_of_budget = false;
  std::vector<int> image;

  bool extend(std::size_t depth) {
    if (budget == 0) {
      out_of_budget = true;
      return false;
    }
    --budget;
    if (prefix_cert[depth] != marked_certificate(*h, image)) return false;
    if (depth == tuple.size()) return true;
    const int next = tuple[depth];
    for (int cand = 0; cand < h->order(); ++cand) {
      if (inv_h[cand] != inv_g[next]) continue;
      image.push_back(cand);
      if (extend(depth + 1)) return true;
      image.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

GroupIsoResult group_iso_oracle(const CayleyGroup& g, const CayleyGroup& h, std::uint64_t budget) {
  GroupIsoResult res;
  if (g.order() != h.order()) return res;

  IsoSearch s;
  s.g = &g;
  s.h = &h;
  s.inv_g = element_invariants(g);
  s.inv_h = element_invariants(h);
  {
    auto a = s.inv_g;
    auto b = s.inv_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return res;  // invariant censuses differ
  }
  s.tuple = greedy_generating_tuple(g);
  for (std::size_t d = 0; d <= s.tuple.size(); ++d)
    s.prefix_cert.push_back(
        marked_certificate(g, std::vector<int>(s.tuple.begin(), s.tuple.begin() + d)));
  s.budget = budget;
  if (!s.extend(0)) {
    res.status = s.out_of_budget ? OracleStatus::budget : OracleStatus::none;
    return res;
  }

  // read the isomorphism off the parallel discovery orders, then verify
  std::vector<int> ord_g = certificate_discovery_order(g, s.tuple);
  std::vector<int> ord_h = certificate_discovery_order(h, s.image);
  if (ord_g.size() != static_cast<std::size_t>(g.order()) || ord_h.size() != ord_g.size())
    return res;
  std::vector<int> map(g.order());
  for (std::size_t i = 0; i < ord_g.size(); ++i) map[ord_g[i]] = ord_h[i];
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b]))
        throw std::logic_error("certificate-derived map failed verification");
  res.status = OracleStatus::found;
  res.mapping = std::move(map);
  return res;
}

ProfileResult profile(const CayleyGroup& g, int k, std::uint64_t tuple_budget) {
  ProfileResult res;
  if (k < 1) throw std::invalid_argument("profile needs k >= 1");
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(g.order());
    if (total > tuple_budget) {
      res.status = OracleStatus::budget;
      return res;
    }
  }

  // distinct subgroups generated by k-tuples, keyed by their element sets
  std::map<std::vector<int>, bool> subgroups;
  std::vector<int> tuple(k, 0);
  for (std::uint64_t it = 0; it < total; ++it) {
    std::uint64_t x = it;
    for (int i = 0; i < k; ++i) {
      tuple[i] = static_cast<int>(x % g.order());
      x /= g.order();
    }
    subgroups.emplace(subgroup_closure(g, tuple), true);
  }

  // canonical certificate = min marked certificate over generating k-tuples
  for (const auto& [elements, unused] : subgroups) {
    std::optional<MarkedCertificate> best;
    const std::uint64_t m = elements.size();
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= m;
    std::vector<int> tup(k);
    for (std::uint64_t it = 0; it < count; ++it) {
      std::uint64_t x = it;
      for (int i = 0; i < k; ++i) {
        tup[i] = elements[x % m];
        x /= m;
      }
      if (subgroup_closure(g, tup) != elements) continue;
      MarkedCertificate c = marked_certificate(g, tup);
      if (!best || c < *best) best = std::move(c);
    }
    res.certificates.push_back(std::move(*best));
  }
  std::sort(res.certificates.begin(), res.certificates.end());
  res.status = OracleStatus::found;
  return res;
}

CayleyGroup read_cayley(std::istream& in) {
  int n;
  if (!(in >> n) || n < 1) throw std::runtime_error("group table: bad order line");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (auto& x : t)
    if (!(in >> x)) throw std::runtime_error("group table: truncated");
  CayleyGroup g = CayleyGroup::from_table(n, std::move(t));
  if (g.identity() != 0) throw std::runtime_error("group table: element 0 must be the identity");
  return g;
}

void write_cayley(std::ostream& out, const CayleyGroup& g) {
  const int n = g.order();
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  if (g.identity() != 0) std::swap(relabel[0], relabel[g.identity()]);  // involution
  out << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      out << (b ? " " : "") << relabel[g.mul(relabel[a], relabel[b])];
    out << "\n";
  }
}

CayleyGroup read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file " + path);
  return read_cayley(in);
}

std::string group_invariants_json(const CayleyGroup& g) {
  nlohmann::json j;
  j["order"] = g.order();
  j["exponent"] = exponent(g);
  auto cls = nilpotency_class(g);
  if (cls)
    j["class"] = *cls;
  else
    j["class"] = "not nilpotent";
  j["center_size"] = center(g).size();
  j["conj_class_sizes"] = conjugacy_class_sizes(g);
  return j.dump(2);
}

}  // namespace wl

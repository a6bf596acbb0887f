#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/graph_enum.hpp"
#include "wl/cfi.hpp"
#include "wl/graph_iso.hpp"

using namespace wl;

namespace {

std::vector<std::pair<int, int>> edge_subset(const Graph& base, std::uint64_t mask) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t e = 0; e < base.edge_count(); ++e)
    if (mask & (std::uint64_t(1) << e)) out.push_back(base.edges()[e]);
  return out;
}

}  // namespace

TEST_CASE("gadget shapes: externals, internals, bitstrings") {
  // K4 is 3-regular: every gadget is the 10-vertex gadget with internal
  // strings {000, 011, 101, 110}
  CfiGraph c = build_cfi(complete_graph(4));
  CHECK(c.graph().vertex_count() == 40);
  CHECK(c.graph().is_regular(3));
  for (int v = 0; v < 4; ++v) {
    REQUIRE(c.internals(v).size() == 4);
    std::vector<std::uint32_t> bits;
    for (int mv : c.internals(v)) bits.push_back(c.kind_of()[mv].bits);
    CHECK(bits == std::vector<std::uint32_t>{0b000, 0b011, 0b101, 0b110});
    // each internal meets exactly one of every a/b pair
    for (int mv : c.internals(v)) {
      std::uint32_t m = c.kind_of()[mv].bits;
      for (int i = 0; i < 3; ++i) {
        CHECK(c.graph().has_edge(mv, c.external(v, i, (m >> i) & 1)));
        CHECK_FALSE(c.graph().has_edge(mv, c.external(v, i, !((m >> i) & 1))));
      }
    }
  }
}

TEST_CASE("vertex counts follow the degree formula") {
  // sum over vertices of 2 d(v) + 2^(d(v)-1)
  for (const Graph& base : {path_graph(2), cycle_graph(3), complete_bipartite(2, 3)}) {
    if (!base.is_connected()) continue;
    CfiGraph c = build_cfi(base);
    int expect = 0;
    for (int v = 0; v < base.vertex_count(); ++v)
      expect += 2 * base.degree(v) + (1 << (base.degree(v) - 1));
    CHECK(c.graph().vertex_count() == expect);
  }
  // degree-1 gadget: 2 externals + 1 internal
  CfiGraph p2 = build_cfi(path_graph(2));
  CHECK(p2.graph().vertex_count() == 6);
  CHECK(p2.internals(0).size() == 1);
  CHECK(p2.kind_of()[p2.internals(0)[0]].bits == 0);
}

TEST_CASE("3-regular bases give 10t vertices and 3-regular outputs") {
  for (const Graph& base : {complete_graph(4), complete_bipartite(3, 3), petersen_graph()}) {
    CfiGraph c = build_cfi(base);
    CHECK(c.graph().vertex_count() == 10 * base.vertex_count());
    CHECK(c.graph().is_regular(3));
  }
}

TEST_CASE("construction rejects bad bases and bad twists") {
  CHECK_THROWS_AS(build_cfi(disjoint_union(cycle_graph(3), cycle_graph(3))),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_cfi(cycle_graph(3), {{0, 5}}), std::invalid_argument);
}

TEST_CASE("twisting parity decides isomorphism (small bases, exhaustive)") {
  for (const Graph& base : {cycle_graph(3), complete_graph(4)}) {
    CfiGraph plain = build_cfi(base);
    const std::size_t m = base.edge_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
      CfiGraph twisted = build_cfi(base, edge_subset(base, mask));
      auto res = graph_iso_oracle(plain.graph(), twisted.graph());
      if (__builtin_popcountll(mask) % 2 == 0)
        CHECK(res.status == SearchStatus::found);
      else
        CHECK(res.status == SearchStatus::none);
    }
  }
}

TEST_CASE("metadata sidecar mentions every structural piece") {
  CfiGraph c = build_cfi(cycle_graph(3), {cycle_graph(3).edges()[1]});
  std::string json = cfi_metadata_json(c);
  CHECK(json.find("gadget_of") != std::string::npos);
  CHECK(json.find("kind_of") != std::string::npos);
  CHECK(json.find("links") != std::string::npos);
  CHECK(json.find("twisted") != std::string::npos);
  CHECK(c.twisted_base_edges().size() == 1);
}

TEST_CASE("parity invariant: choice independence and twist sensitivity") {
  for (const Graph& base : {complete_graph(4), complete_bipartite(3, 3)}) {
    const int t = base.vertex_count();
    CfiGraph plain = build_cfi(base);
    CfiGraph twisted = build_cfi(base, {base.edges()[0]});

    std::vector<int> zero(t, 0);
    const int plain_bit = parity_invariant(plain, zero);
    const int twisted_bit = parity_invariant(twisted, zero);
    CHECK(plain_bit != twisted_bit);

    // exhaust all internal choices on K4 (4^4), sample on K_3,3
    std::vector<int> choice(t, 0);
    int combos = t <= 4 ? 256 : 64;
    Rng rng(123);
    for (int trial = 0; trial < combos; ++trial) {
      if (t <= 4) {
        int x = trial;
        for (int v = 0; v < t; ++v) {
          choice[v] = x % 4;
          x /= 4;
        }
      } else {
        for (int v = 0; v < t; ++v) choice[v] = static_cast<int>(rng.below(4));
      }
      CHECK(parity_invariant(plain, choice) == plain_bit);
      CHECK(parity_invariant(twisted, choice) == twisted_bit);
    }
  }
}

TEST_CASE("parity invariant rejects non-3-regular bases and bad choices") {
  CfiGraph c = build_cfi(cycle_graph(4));
  CHECK_THROWS_AS(parity_invariant(c, std::vector<int>(4, 0)), std::invalid_argument);
  CfiGraph k4 = build_cfi(complete_graph(4));
  CHECK_THROWS_AS(parity_invariant(k4, std::vector<int>(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(parity_invariant(k4, std::vector<int>(4, 9)), std::invalid_argument);
}

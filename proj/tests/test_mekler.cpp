#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support/free_reduce.hpp"
#include "support/graph_enum.hpp"
#include "wl/graph_iso.hpp"
#include "wl/mekler.hpp"

using namespace wl;
using namespace wl::testing;

TEST_CASE("orders: free, abelian, and mixed cases") {
  MeklerGroup free3(empty_graph(3), 5);
  CHECK(free3.order_exponent() == 3 + 3);  // n + C(n,2)
  CHECK(free3.order() == 15625);

  MeklerGroup abelian(complete_graph(4), 3);
  CHECK(abelian.m() == 0);
  CHECK(abelian.order() == 81);

  MeklerGroup p3(path_graph(3), 3);
  CHECK(p3.order() == 81);  // n = 3, one non-edge

  CHECK_THROWS_AS(MeklerGroup(path_graph(2), 2), std::invalid_argument);
  CHECK_THROWS_AS(MeklerGroup(path_graph(2), 9), std::invalid_argument);
}

TEST_CASE("non-edge basis is ordered lexicographically") {
  MeklerGroup g(cycle_graph(4), 3);  // edges 01 12 23 03; non-edges 02 13
  REQUIRE(g.m() == 2);
  CHECK(g.non_edges()[0] == std::make_pair(0, 2));
  CHECK(g.non_edges()[1] == std::make_pair(1, 3));
  CHECK(g.non_edge_index(2, 0) == 0);
  CHECK(g.non_edge_index(0, 1) == -1);
}

TEST_CASE("mul: unit laws and the path-graph worked example") {
  MeklerGroup g(path_graph(3), 3);
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    MeklerElement x = random_element(g, rng);
    CHECK(g.mul(x, g.identity()) == x);
    CHECK(g.mul(g.identity(), x) == x);
  }
  // v3 * v1 = v1 v3 [v1,v3]^-1
  MeklerElement prod = g.mul(g.generator(2), g.generator(0));
  CHECK(prod.gen[0] == 1);
  CHECK(prod.gen[2] == 1);
  CHECK(prod.comm[g.non_edge_index(0, 2)] == g.p() - 1);
  CHECK(prod == oracle_mul(g, g.generator(2), g.generator(0)));
}

TEST_CASE("worked commutator: B2 row (-9,-2,-1) for p in {3,5,7,11}") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    MeklerGroup f(empty_graph(3), p);
    MeklerElement g1 = f.parse_element("v1*v2^5*v3");
    MeklerElement g2 = f.parse_element("v1^2*v2*[v1,v2]");
    MeklerElement c = f.commutator(g1, g2);
    CHECK(c.gen.is_zero());
    CHECK(c.comm[0] == fp_reduce(-9, p));
    CHECK(c.comm[1] == fp_reduce(-2, p));
    CHECK(c.comm[2] == fp_reduce(-1, p));

    auto [b1, b2] = f.b_matrices({g1, g2});
    CHECK(b1.at(0, 0) == 1);
    CHECK(b1.at(0, 1) == fp_reduce(5, p));
    CHECK(b1.at(1, 0) == 2);
    REQUIRE(b2.rows() == 1);
    CHECK(b2.at(0, 0) == fp_reduce(-9, p));
    CHECK(b2.at(0, 1) == fp_reduce(-2, p));
    CHECK(b2.at(0, 2) == fp_reduce(-1, p));
  }
}

TEST_CASE("mul agrees with the free-reduction oracle on every small graph") {
  for (std::uint32_t p : {3u, 5u}) {
    for (int n = 1; n <= 4; ++n) {
      for (const Graph& graph : all_graphs(n)) {
        MeklerGroup g(graph, p);
        Rng rng(1000 * n + p);
        for (int trial = 0; trial < 120; ++trial) {
          MeklerElement x = random_element(g, rng), y = random_element(g, rng);
          if (g.mul(x, y) != oracle_mul(g, x, y)) {
            CAPTURE(n);
            CAPTURE(p);
            REQUIRE(g.mul(x, y) == oracle_mul(g, x, y));
          }
        }
      }
    }
  }
}

TEST_CASE("group laws: associativity, inverses, exponent p, commutator flip") {
  MeklerGroup g(cycle_graph(5), 5);
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    MeklerElement x = random_element(g, rng), y = random_element(g, rng),
                  z = random_element(g, rng);
    CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
    CHECK(g.mul(x, g.inv(x)) == g.identity());
    CHECK(g.mul(g.inv(x), x) == g.identity());
    CHECK(g.pow(x, g.p()) == g.identity());
    CHECK(g.commutator(x, y) == g.inv(g.commutator(y, x)));
    CHECK(g.inv(g.identity()) == g.identity());
  }
}

TEST_CASE("support and centrality") {
  MeklerGroup f(empty_graph(3), 5);
  CHECK(f.support(f.identity()).empty());
  MeklerElement x = f.parse_element("v1*v2^5*v3");
  CHECK(f.support(x) == std::vector<int>{0, 2});  // 5 = 0 mod 5

  // central elements have empty support when no vertex is universal
  MeklerGroup g(cycle_graph(4), 3);
  Rng rng(4);
  for (int ne = 0; ne < g.m(); ++ne) CHECK(g.is_central(g.commutator_basis_element(ne)));
  for (int trial = 0; trial < 30; ++trial) {
    MeklerElement a = random_element(g, rng), b = random_element(g, rng);
    CHECK(g.is_central(g.commutator(a, b)));
  }
  // universal middle vertex of the path is central
  MeklerGroup p3(path_graph(3), 3);
  CHECK(p3.is_central(p3.generator(1)));
  CHECK_FALSE(p3.is_central(p3.generator(0)));
}

TEST_CASE("center basis: bipartite, path, complete") {
  MeklerGroup k22(complete_bipartite(2, 2), 3);
  CHECK(k22.center_order_exponent() == 2);  // = m, no universal vertex
  CHECK(k22.center_basis().size() == 2);

  MeklerGroup p3(path_graph(3), 3);
  CHECK(p3.center_order_exponent() == 2);  // one non-edge plus one universal vertex
  CHECK(p3.center_basis().size() == 2);

  MeklerGroup k4(complete_graph(4), 3);
  CHECK(k4.center_order_exponent() == k4.order_exponent());
}

TEST_CASE("centralizer basis: the bipartite worked example") {
  MeklerGroup g(complete_bipartite(2, 2), 3);
  MeklerElement x = g.parse_element("v1*v2*v3*v4");
  auto cb = g.centralizer_basis(x);
  CHECK(cb.order_exponent == 4);  // p^4 out of p^6
  REQUIRE(cb.components.size() == 2);
  CHECK(cb.components[0] == std::vector<int>{0, 1});
  CHECK(cb.components[1] == std::vector<int>{2, 3});
  CHECK(cb.common_neighbors.empty());

  // central element: whole group
  CHECK(g.centralizer_basis(g.commutator_basis_element(0)).order_exponent == 6);
}

TEST_CASE("centralizer basis matches the brute-force centralizer in tables") {
  for (const Graph& graph : {complete_bipartite(2, 2), path_graph(4), cycle_graph(4)}) {
    MeklerGroup g(graph, 3);
    CayleyGroup table = g.to_cayley();
    Rng rng(31);
    for (int trial = 0; trial < 8; ++trial) {
      MeklerElement x = random_element(g, rng);
      auto cb = g.centralizer_basis(x);
      // brute-force centralizer of the same element in the table
      std::vector<int> brute = centralizer(table, static_cast<int>(g.element_index(x)));
      // spanned subgroup from the basis (plus commutator basis elements)
      std::vector<int> gens;
      for (const auto& b : cb.basis) gens.push_back(static_cast<int>(g.element_index(b)));
      for (int ne = 0; ne < g.m(); ++ne)
        gens.push_back(static_cast<int>(g.element_index(g.commutator_basis_element(ne))));
      std::vector<int> spanned = subgroup_closure(table, gens);
      CHECK(spanned == brute);
      CHECK(static_cast<std::size_t>(1) << 0 == 1);  // keep loop structure obvious
      double expect = std::pow(3.0, cb.order_exponent);
      CHECK(static_cast<double>(brute.size()) == expect);
      // every spanned element commutes with x symbolically
      for (const auto& b : cb.basis) CHECK(g.commute(b, x));
    }
  }
}

TEST_CASE("|C(x)| <= |C(v)| for support members") {
  MeklerGroup g(testing::random_connected_regular(8, 3, 42), 3);
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    MeklerElement x = random_element(g, rng);
    auto cx = g.centralizer_basis(x).order_exponent;
    for (int v : g.support(x))
      CHECK(cx <= g.centralizer_basis(g.generator(v)).order_exponent);
  }
}

TEST_CASE("to_cayley bridges to the table world") {
  MeklerGroup k2(complete_graph(2), 3);
  CayleyGroup t = k2.to_cayley();
  CHECK(t.order() == 9);
  CHECK(group_iso_oracle(t, direct_product(cyclic_group(3), cyclic_group(3))).status ==
        OracleStatus::found);

  MeklerGroup p3(path_graph(3), 3);
  CHECK(p3.to_cayley().order() == 81);  // validated associative on construction

  MeklerGroup f2(empty_graph(2), 3);
  CHECK(group_iso_oracle(f2.to_cayley(), heisenberg_group(3)).status == OracleStatus::found);

  CHECK_THROWS_AS(MeklerGroup(empty_graph(5), 3).to_cayley(100), std::invalid_argument);
}

TEST_CASE("element indexing is lexicographic with identity first") {
  MeklerGroup g(path_graph(3), 3);
  CHECK(g.element_index(g.identity()) == 0);
  for (std::uint64_t idx : {0ull, 1ull, 17ull, 80ull}) {
    CHECK(g.element_index(g.element_at(idx)) == idx);
  }
}

TEST_CASE("vertices are a minimal generating set (table check)") {
  for (const Graph& graph : testing::graph_iso_classes(4)) {
    if (choose2(4) - graph.edge_count() > 3) continue;  // keep the table small
    MeklerGroup g(graph, 3);
    CayleyGroup t = g.to_cayley();
    CHECK(greedy_generating_tuple(t).size() == static_cast<std::size_t>(g.n()));
  }
}

TEST_CASE("subgroup orders by closure and by the free formula") {
  MeklerGroup f2(empty_graph(2), 3);
  CHECK(f2.subgroup_order({}).order == 1);
  CHECK(f2.subgroup_order({f2.generator(0)}).order == 3);
  auto both = f2.subgroup_order({f2.generator(0), f2.generator(1)});
  CHECK(both.order == 27);
  CHECK(f2.free_subgroup_order_exponent({f2.generator(0), f2.generator(1)}) == 3);

  MeklerGroup f4(empty_graph(4), 3);
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MeklerElement> tuple;
    for (int i = 0; i < 2 + static_cast<int>(rng.below(2)); ++i)
      tuple.push_back(random_element(f4, rng));
    auto closure = f4.subgroup_order(tuple, 1u << 20);
    REQUIRE(closure.status == OracleStatus::found);
    int expo = f4.free_subgroup_order_exponent(tuple);
    std::uint64_t expect = 1;
    for (int i = 0; i < expo; ++i) expect *= 3;
    CHECK(closure.order == expect);
  }
  CHECK(f4.subgroup_order({f4.generator(0), f4.generator(1)}, 5).status == OracleStatus::budget);
}

TEST_CASE("graph isomorphisms transfer to group isomorphisms") {
  // identity on anything
  MeklerGroup g(cycle_graph(5), 3);
  GroupIso ident = graph_iso_to_group_iso({0, 1, 2, 3, 4}, g, g);
  Rng rng(17);
  MeklerElement x = random_element(g, rng);
  CHECK(ident.apply(x) == x);

  // a rotation of C5
  GroupIso rot = graph_iso_to_group_iso({1, 2, 3, 4, 0}, g, g);
  MeklerElement a = random_element(g, rng), b = random_element(g, rng);
  CHECK(rot.apply(g.mul(a, b)) == g.mul(rot.apply(a), rot.apply(b)));

  // swapping the parts of K_2,2
  MeklerGroup k22(complete_bipartite(2, 2), 3);
  GroupIso swap = graph_iso_to_group_iso({2, 3, 0, 1}, k22, k22);
  MeklerElement c = random_element(k22, rng), d = random_element(k22, rng);
  CHECK(swap.apply(k22.mul(c, d)) == k22.mul(swap.apply(c), swap.apply(d)));

  // a non-isomorphism is rejected
  CHECK_THROWS_AS(graph_iso_to_group_iso({0, 1, 2, 3, 4}, g, MeklerGroup(path_graph(5), 3)),
                  std::invalid_argument);
}

TEST_CASE("commuting graph: cosets, powers, the bipartite example") {
  MeklerGroup k22(complete_bipartite(2, 2), 3);
  auto cg = k22.commuting_graph(3);
  // reps with support 1..3 over 4 free vertices
  CHECK(cg.reps.size() > 0);
  auto find = [&](const MeklerElement& e) {
    for (std::size_t i = 0; i < cg.reps.size(); ++i)
      if (cg.reps[i] == e.gen) return static_cast<int>(i);
    return -1;
  };
  int a = find(k22.parse_element("v1*v2"));
  int b = find(k22.parse_element("v3*v4"));
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(cg.graph.has_edge(a, b));

  // powers of one another are adjacent
  int x = find(k22.parse_element("v1*v2"));
  int x2 = find(k22.parse_element("v1^2*v2^2"));
  CHECK(cg.graph.has_edge(x, x2));

  // complete graph: everything is central, no vertices at all
  MeklerGroup k3(complete_graph(3), 3);
  CHECK(k3.commuting_graph(2).reps.empty());

  // an abelian quotient with a universal vertex: remaining cosets all commute
  MeklerGroup p3(path_graph(3), 3);
  auto cg3 = p3.commuting_graph(2);
  for (const auto& rep : cg3.reps) CHECK(rep[1] == 0);  // universal coordinate zeroed

  CHECK_THROWS_AS(k22.commuting_graph(3, 2), std::invalid_argument);
}

TEST_CASE("element literals round-trip and normalize") {
  MeklerGroup f(empty_graph(3), 5);
  MeklerElement e = f.parse_element("v1^2*v3*[v1,v2]^4");
  CHECK(e.gen[0] == 2);
  CHECK(e.gen[2] == 1);
  CHECK(e.comm[f.non_edge_index(0, 1)] == 4);
  CHECK(f.parse_element(f.format_element(e)) == e);
  CHECK(f.format_element(f.identity()) == "1");
  CHECK(f.parse_element("1") == f.identity());

  // arbitrary order is normalized through mul
  MeklerElement swapped = f.parse_element("v3*v1");
  CHECK(swapped == f.mul(f.generator(2), f.generator(0)));
  // reversed commutators flip sign
  CHECK(f.parse_element("[v2,v1]") == f.inv(f.parse_element("[v1,v2]")));

  CHECK_THROWS_AS(f.parse_element("v9"), std::invalid_argument);
  CHECK_THROWS_AS(f.parse_element("v1**v2"), std::invalid_argument);
  CHECK_THROWS_AS(f.parse_element(""), std::invalid_argument);

  Rng rng(23);
  MeklerGroup g(cycle_graph(4), 3);
  for (int trial = 0; trial < 40; ++trial) {
    MeklerElement x = random_element(g, rng);
    CHECK(g.parse_element(g.format_element(x)) == x);
  }
}

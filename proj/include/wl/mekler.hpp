#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wl/cayley.hpp"
#include "wl/fp.hpp"
#include "wl/graph.hpp"
#include "wl/hash.hpp"

namespace wl {

/// Element of a graph group in normal form: generator exponents d_1..d_n
/// followed by exponents over the non-edge commutator basis.
struct MeklerElement {
  FpVector gen, comm;
  bool operator==(const MeklerElement&) const = default;
};

/// Class-2 exponent-p group presented from a graph: generators are the
/// vertices, two generators commute exactly when joined by an edge. The
/// empty graph gives the relatively free group on n generators; the order
/// is always p^(n + #non-edges). All arithmetic is symbolic on normal forms,
/// so the groups can be astronomically large.
class MeklerGroup {
 public:
  MeklerGroup(Graph graph, std::uint32_t p);

  const Graph& graph() const { return graph_; }
  std::uint32_t p() const { return p_; }
  int n() const { return graph_.vertex_count(); }
  int m() const { return static_cast<int>(non_edges_.size()); }
  const std::vector<std::pair<int, int>>& non_edges() const { return non_edges_; }
  /// Index of (i,j) in the non-edge basis, -1 for edges / diagonal.
  int non_edge_index(int i, int j) const;
  /// log_p of the group order (= n + m).
  int order_exponent() const { return n() + m(); }
  /// The order as a plain integer, if it fits.
  std::optional<std::uint64_t> order() const;

  MeklerElement identity() const;
  MeklerElement generator(int i) const;
  MeklerElement commutator_basis_element(int non_edge) const;
  MeklerElement element(FpVector gen, FpVector comm) const;

  MeklerElement mul(const MeklerElement& x, const MeklerElement& y) const;
  MeklerElement inv(const MeklerElement& x) const;
  MeklerElement pow(const MeklerElement& x, std::int64_t e) const;
  MeklerElement commutator(const MeklerElement& x, const MeklerElement& y) const;
  bool commute(const MeklerElement& x, const MeklerElement& y) const;

  std::vector<int> support(const MeklerElement& x) const;
  /// Subword of x over the vertex set s (generator part only, in index order).
  MeklerElement subword(const MeklerElement& x, const std::vector<int>& s) const;
  bool is_central(const MeklerElement& x) const;
  std::vector<int> universal_vertices() const;

  /// Basis of the center: the m commutator basis elements plus one generator
  /// per universal vertex.
  std::vector<MeklerElement> center_basis() const;
  int center_order_exponent() const;

  struct CentralizerBasis {
    /// Non-central part: the component subwords x_{C_1}..x_{C_s} followed by
    /// one generator per common neighbor of the support.
    std::vector<MeklerElement> basis;
    std::vector<std::vector<int>> components;  // of co(graph[supp x])
    std::vector<int> common_neighbors;         // outside supp(x)
    int order_exponent = 0;                    // log_p |C(x)|, commutator basis included
  };
  CentralizerBasis centralizer_basis(const MeklerElement& x) const;

  /// B1 is the k x n matrix of generator exponents; B2 its exterior square
  /// over all C(n,2) column pairs with the edge columns zeroed.
  std::pair<FpMatrix, FpMatrix> b_matrices(const std::vector<MeklerElement>& tuple) const;

  /// |<tuple>| by breadth-first closure over normal forms.
  struct ClosureResult {
    OracleStatus status = OracleStatus::budget;
    std::uint64_t order = 0;
  };
  ClosureResult subgroup_order(const std::vector<MeklerElement>& tuple,
                               std::uint64_t budget = 1u << 22) const;

  /// log_p |<tuple>| in the free group via symbolic elimination (rank of the
  /// generator matrix plus independent central contributions). Requires an
  /// edgeless graph.
  int free_subgroup_order_exponent(const std::vector<MeklerElement>& tuple) const;

  /// Explicit multiplication table over all normal forms in lexicographic
  /// (gen, comm) order; identity lands at index 0.
  CayleyGroup to_cayley(std::uint64_t max_order = 3000) const;
  std::uint64_t element_index(const MeklerElement& x) const;
  MeklerElement element_at(std::uint64_t idx) const;

  /// Commuting graph on center-cosets with support size in [1, cap]:
  /// canonical coset representatives have universal-vertex coordinates and
  /// the commutator part zeroed; adjacency is commutation.
  struct CommutingGraph {
    Graph graph;
    std::vector<FpVector> reps;  // generator part of each vertex
  };
  CommutingGraph commuting_graph(int support_cap, std::uint64_t vertex_budget = 200000) const;

  std::string format_element(const MeklerElement& x) const;
  MeklerElement parse_element(const std::string& text) const;

 private:
  Graph graph_;
  std::uint32_t p_;
  std::vector<std::pair<int, int>> non_edges_;  // (i,j), i < j, lexicographic
  std::vector<int> pair_to_basis_;              // C(n,2) -> non-edge index or -1
};

/// The map on normal forms induced by a graph isomorphism: permute the
/// generator coordinates, carry each non-edge commutator to its image pair
/// with a sign flip when the pair order reverses.
class GroupIso {
 public:
  const std::vector<int>& vertex_map() const { return phi_; }
  MeklerElement apply(const MeklerElement& x) const;
  const MeklerGroup& domain() const { return *from_; }
  const MeklerGroup& codomain() const { return *to_; }

  friend GroupIso graph_iso_to_group_iso(const std::vector<int>& phi, const MeklerGroup& g1,
                                         const MeklerGroup& g2, std::uint64_t seed,
                                         int multiplicativity_samples);

 private:
  const MeklerGroup* from_ = nullptr;
  const MeklerGroup* to_ = nullptr;
  std::vector<int> phi_;
  std::vector<int> comm_map_;   // non-edge index -> image non-edge index
  std::vector<int> comm_sign_;  // +1 / -1
};

/// Builds the induced group map and verifies multiplicativity on random
/// pairs before returning; throws if phi is not an isomorphism of the
/// underlying graphs.
GroupIso graph_iso_to_group_iso(const std::vector<int>& phi, const MeklerGroup& g1,
                                const MeklerGroup& g2, std::uint64_t seed = 0x5eed,
                                int multiplicativity_samples = 1000);

/// Uniformly random element (both coordinate blocks).
MeklerElement random_element(const MeklerGroup& g, Rng& rng);

}  // namespace wl

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wl/graph.hpp"

namespace wl {

/// One vertex of a CFI graph. Externals sit in a/b pairs indexed by the
/// incident base edge; internals carry an even-weight bitstring whose i-th
/// bit picks the b-side of pair i.
struct CfiVertexKind {
  bool internal = false;
  int pair_index = -1;     // externals only
  bool b_side = false;     // externals only
  std::uint32_t bits = 0;  // internals only
};

/// The two parallel (or crossed) edges realizing one base edge.
struct CfiLink {
  int base_u = -1, base_v = -1;  // base_u < base_v
  int pair_u = -1, pair_v = -1;  // pair index at each endpoint gadget
  int a_u = -1, b_u = -1, a_v = -1, b_v = -1;  // external vertex ids
  bool twisted = false;
};

class CfiGraph {
 public:
  const Graph& graph() const { return graph_; }
  const Graph& base() const { return base_; }
  const std::vector<int>& gadget_of() const { return gadget_of_; }
  const std::vector<CfiVertexKind>& kind_of() const { return kind_of_; }
  /// Links indexed like base().edges().
  const std::vector<CfiLink>& links() const { return links_; }
  const std::vector<int>& twisted_base_edges() const { return twisted_; }

  const std::vector<int>& internals(int base_vertex) const { return internals_[base_vertex]; }
  /// External vertex id for (base vertex, pair index, side).
  int external(int base_vertex, int pair, bool b_side) const {
    return gadget_start_[base_vertex] + 2 * pair + (b_side ? 1 : 0);
  }
  int base_edge_index(int u, int v) const;  // index into base().edges(), -1 if absent

  friend CfiGraph build_cfi(const Graph& base, const std::vector<std::pair<int, int>>& twist);

 private:
  Graph graph_, base_;
  std::vector<int> gadget_of_;
  std::vector<CfiVertexKind> kind_of_;
  std::vector<CfiLink> links_;
  std::vector<int> twisted_;
  std::vector<int> gadget_start_;
  std::vector<std::vector<int>> internals_;
};

/// CFI graph over a connected base graph with the given base edges twisted.
/// Pair indices follow sorted-neighbor order at every base vertex.
CfiGraph build_cfi(const Graph& base, const std::vector<std::pair<int, int>>& twist = {});

/// Number of edges, mod 2, induced by one chosen internal vertex per gadget
/// together with all their external neighbors. Independent of the choice and
/// different across a twist; requires a 3-regular base.
int parity_invariant(const CfiGraph& g, const std::vector<int>& internal_choice);

/// Gadget metadata sidecar (gadget_of, kind_of, links, twisted) as JSON text.
std::string cfi_metadata_json(const CfiGraph& g);

}  // namespace wl

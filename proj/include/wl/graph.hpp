#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wl {

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
/// Optional vertex colors (empty vector = uncolored).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  bool is_connected() const;
  bool is_regular(int d) const;

  const std::vector<int>& vertex_colors() const { return colors_; }
  bool has_vertex_colors() const { return !colors_.empty(); }
  void set_vertex_color(int v, int color);

  /// Relabels vertices by perm (vertex v becomes perm[v]).
  Graph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // u < v, sorted
  std::vector<std::vector<int>> adj_;       // sorted neighbor lists
  std::vector<int> colors_;                 // empty or size n_
};

Graph complement(const Graph& g);

/// Induced subgraph on s; vertices relabeled 0..|s|-1 preserving sorted order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

/// True iff no ordered pair of distinct vertices v, w has N(v) contained in
/// N[w]. When this holds the graph's automorphisms are exactly the
/// automorphisms of the group built from it.
bool canonicity_condition(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

// --- named constructions used throughout the test corpus and CLI ---
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

/// Text format: first line "n m", then m lines "u v" (0-based), then optional
/// "c v color" lines. Rejects loops, duplicate edges and out-of-range ids.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace wl

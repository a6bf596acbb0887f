#pragma once

#include <cstdint>
#include <vector>

#include "wl/graph.hpp"

namespace wl {

enum class SearchStatus { found, none, budget };

struct GraphIsoResult {
  SearchStatus status = SearchStatus::none;
  std::vector<int> mapping;  // vertex of g0 -> vertex of g1, valid iff found
};

/// Exact isomorphism search: backtracking over color classes with color
/// refinement at every node. Returned maps are verified edge by edge.
/// Exceeding the node budget is reported as its own outcome, distinct from
/// "not isomorphic". Intended for graphs up to ~100 vertices.
GraphIsoResult graph_iso_oracle(const Graph& g0, const Graph& g1,
                                std::uint64_t node_budget = 5'000'000);

/// True iff mapping is a color- and adjacency-preserving bijection.
bool verify_graph_iso(const Graph& g0, const Graph& g1, const std::vector<int>& mapping);

}  // namespace wl

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wl/cayley.hpp"
#include "wl/graph.hpp"
#include "wl/wl_refine.hpp"

namespace wl {

/// Thrown when an operation would exceed its explicit resource budget; the
/// CLI maps this to its own exit code, distinct from usage errors.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class WlVersion { I, II, III };

std::string to_string(WlVersion v);

/// Version I initial certificates: per k-tuple, the equality pattern on the
/// entries plus the set of index triples (i,j,m) with g_i g_j = g_m.
std::vector<Digest128> group_initial_colors_v1(const CayleyGroup& g, int k);

/// Version II initial certificates: the marked isomorphism type of the
/// generated subgroup (digested marked certificate).
std::vector<Digest128> group_initial_colors_v2(const CayleyGroup& g, int k);

/// Group-to-graph encoding: one vertex per element plus a four-vertex
/// multiplication gadget for every ordered pair (g,h), wired
/// g-a, h-b, gh-d, a-b, b-c, c-d. Element vertices are 0..|G|-1 and end up
/// with degree 3|G|; gadget vertices have degree 2 or 3.
Graph gamma_graph(const CayleyGroup& g, std::uint64_t vertex_budget = 600000);

struct GroupWlOptions {
  long long max_rounds = -1;
  int threads = 0;
  std::uint64_t tuple_budget = 60'000'000;  // per structure
};

/// k-WL on the pair of groups in the chosen version (k >= 2). Version III
/// runs graph refinement on the gamma graphs and pulls the verdict back to
/// element tuples. Throws BudgetError when the tuple space or gamma graph
/// exceeds its budget.
WlVerdict wl_group(const CayleyGroup& g, const CayleyGroup& h, int k, WlVersion version,
                   const GroupWlOptions& opts = {});

/// Runs the affordable versions and checks the provable implications:
/// distinguishing at Version I forces Version II at the same k, and
/// Version II at k forces Version III at ceil(k/2)+2.
struct VersionComparison {
  int k = 0;
  std::optional<WlVerdict> v1, v2, v3;  // unset = budget skipped
  int k3 = 0;                           // dimension used for Version III
  bool v3_via_monotonicity = false;     // v3 verdict certified by a lower k run
  std::vector<std::string> violations;
};

VersionComparison compare_versions(const CayleyGroup& g, const CayleyGroup& h, int k,
                                   const GroupWlOptions& opts = {});

}  // namespace wl

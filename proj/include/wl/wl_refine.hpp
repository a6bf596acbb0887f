#pragma once

#include <cstdint>
#include <vector>

#include "wl/graph.hpp"
#include "wl/hash.hpp"

namespace wl {

/// Joint color refinement of k-tuples over two structures with a shared
/// domain size. Colors are named canonically: per-round certificates are
/// digested, the distinct digests sorted, and dense ids assigned in sorted
/// order, so two runs (any thread count, either input order) agree.
///
/// Two refinement modes:
///  - k == 1 with adjacency: the multiset ranges over the neighborhood,
///  - k >= 2: the multiset ranges over all single-entry replacements.
struct RefineSpec {
  int n = 0;  // domain size, same for both structures
  int k = 1;
  std::vector<Digest128> init0, init1;  // initial tuple certificates, size n^k
  const Graph* graph0 = nullptr;        // required iff k == 1
  const Graph* graph1 = nullptr;
  /// Verdict histograms restrict to tuples with every coordinate <
  /// element_limit; -1 means all tuples. (Used to pull colorings on gadget
  /// graphs back to group-element tuples.)
  int element_limit = -1;
  long long max_rounds = -1;  // default: n^k
  int threads = 0;            // 0 = hardware_concurrency
  bool keep_history = false;  // retain per-round colors (tests)
};

struct RefineResult {
  bool distinguished = false;
  /// Divergence round if distinguished, else the stable round (the last round
  /// whose partition the next one repeated).
  int round = 0;
  bool converged = false;   // false only if max_rounds cut the run short
  std::size_t classes = 0;  // distinct joint colors at the end
  /// Order-independent multiset digest of final colors over the verdict set,
  /// one per structure. Equal digests <=> equal histograms.
  Digest128 hist0, hist1;
  std::vector<std::uint32_t> final0, final1;
  // per-round color ids (round 0 = initial), only if keep_history
  std::vector<std::vector<std::uint32_t>> history0, history1;
};

RefineResult joint_refine(RefineSpec spec);

/// Initial certificates of classical k-WL on a graph: for k >= 2 the marked
/// isomorphism type of the induced tuple (equality + adjacency pattern plus
/// vertex colors); for k == 1 the vertex color.
std::vector<Digest128> graph_initial_colors(const Graph& g, int k);

enum class WlOutcome { distinguished, stable_equal };

struct WlVerdict {
  WlOutcome outcome = WlOutcome::stable_equal;
  int round = 0;
  bool converged = true;
  std::size_t classes = 0;
  Digest128 hist0, hist1;
};

/// k-WL on the pair: joint refinement, early exit once the histograms
/// diverge. Unequal vertex counts distinguish at round 0.
WlVerdict graph_wl(const Graph& g0, const Graph& g1, int k, long long max_rounds = -1,
                   int threads = 0);

std::uint64_t tuple_count(int n, int k);

}  // namespace wl

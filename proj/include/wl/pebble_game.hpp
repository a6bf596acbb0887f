#pragma once

#include <cstdint>

#include "wl/cayley.hpp"
#include "wl/wl_groups.hpp"

namespace wl {

enum class GameWinner { spoiler, duplicator };

/// Exact winner of the bijective pebble game (Versions I and II) under
/// optimal play, by fixpoint over all pebble configurations. A round is:
/// Spoiler lifts a pebble pair, the winning condition is checked on the
/// remaining pairs, Duplicator offers a bijection, Spoiler places. Duplicator
/// survival against one lift reduces to a perfect matching in the bipartite
/// graph of placements that stay inside the safe set.
///
/// The solver enumerates (|G| |H| + 1)^pairs configurations; max_order
/// guards against accidental blowups.
GameWinner game_solve(const CayleyGroup& g, const CayleyGroup& h, int pebble_pairs,
                      WlVersion version, int max_order = 6);

}  // namespace wl

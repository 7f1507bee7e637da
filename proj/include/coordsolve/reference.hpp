#pragma once

// Serial implementations that follow each definition literally. Kept for
// cross-checking the kernels and the fast paths; not tuned.

#include <vector>

#include "coordsolve/async.hpp"
#include "coordsolve/core.hpp"

namespace coordsolve::reference {

std::vector<PlayerSet> ne_set(const StageGame& game, Context ctx);

std::vector<PlayerSet> sss(const StageGame& game, Context ctx, bool require_ne);

// Every player, every ordered pair of opponent profiles a ⊊ a'.
AssumptionReport check_assumptions(const StageGame& game);

// Dominance tested against every surviving opponent profile.
IesdsResult iesds(const StageGame& game, Context ctx);

int min_tree_depth_over_product(int n, const std::vector<std::vector<PlayerSet>>& choices,
                                PlayerSet x);

// Backward induction with a history-keyed memo instead of dense tables.
PlayerSet ieseds_profile(const StageGame& game, const Partition& p);

}  // namespace coordsolve::reference

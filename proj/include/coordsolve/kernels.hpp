#pragma once

// OpenMP kernels behind the public enumeration operations. Each has a serial
// counterpart in reference.hpp that follows the textbook definition literally;
// the test suite checks they agree and bench/ times them against each other.

#include <cstdint>
#include <vector>

#include "coordsolve/core.hpp"
#include "coordsolve/digraph.hpp"

namespace coordsolve::kernels {

std::vector<PlayerSet> enumerate_ne(const StageGame& game, Context ctx);

std::vector<PlayerSet> enumerate_sss(const StageGame& game, Context ctx, bool require_ne);

// Assumption sweep over covering pairs plus a subset-minimum pass for the
// deviation-proof clause; equivalent to the all-pairs definition.
AssumptionReport sweep_assumptions(const StageGame& game);

// Minimum over the mixed-radix product of per-player in-set choices of
// td(G|reach(X)).
int min_tree_depth_over_product(int n, const std::vector<std::vector<PlayerSet>>& choices,
                                PlayerSet x);

}  // namespace coordsolve::kernels

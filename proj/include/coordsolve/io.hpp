#pragma once

#include <optional>
#include <string>

#include "coordsolve/core.hpp"
#include "coordsolve/digraph.hpp"
#include "coordsolve/game.hpp"
#include "json.hpp"

namespace coordsolve {

using Json = nlohmann::json;

// Game document schema (indices 0-based; payoff arrays indexed by coalition
// bitmask, bit i set iff player i plays 1):
//   {"players": n, "kind": "table", "payoffs": [[u_0(0), u_0(1), ...], ...]}
//   {"players": n, "kind": "weakest_link", "edges": [[i, j], ...]}
//   {"players": n, "kind": "threshold", "edges": [...], "k": [...]}
//   {"kind": "aggregative", "c": [...]}
//   {"kind": "aligned_nsg", "in_start": [...], "out_bound": [...]?}
//   {"kind": "opposed_nsg", "in_start": [...], "k": [...], "out_bound": [...]?}
// Payoff entries are integers or "p/q" strings.
struct GameDocument {
  StageGame game;
  // Absent when the player count is beyond the exhaustive check.
  std::optional<AssumptionReport> report;
};

GameDocument parse_game(const Json& doc);
GameDocument load_game(const std::string& path);
Json game_to_json(const StageGame& game);

// {"n": n, "edges": [[i, j], ...]}
Digraph parse_graph(const Json& doc);
Digraph load_graph(const std::string& path);
Json graph_to_json(const Digraph& g);

// {"cells": [[...], ...]}
Partition parse_partition(const Json& doc, int n);
Partition load_partition(const std::string& path, int n);
Json partition_to_json(const Partition& p, int base = 0);

// Sorted member list with the given index base.
Json set_to_json(PlayerSet s, int base = 1);

Json load_json(const std::string& path);

}  // namespace coordsolve

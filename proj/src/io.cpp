#include "coordsolve/io.hpp"

#include <fstream>

#include "coordsolve/errors.hpp"
#include "coordsolve/ordered.hpp"

namespace coordsolve {
namespace {

const Json& field(const Json& doc, const std::string& key, const std::string& path) {
  if (!doc.is_object()) throw ParseError(path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(path, "missing field \"" + key + "\"");
  return *it;
}

int as_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  auto x = v.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) throw ParseError(path, "integer out of range");
  return static_cast<int>(x);
}

std::vector<int> int_list(const Json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> optional_int_list(const Json& doc, const std::string& key, const std::string& path) {
  auto it = doc.find(key);
  if (it == doc.end()) return {};
  return int_list(*it, path + "." + key);
}

Rational as_rational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(path, e.what());
    }
  }
  throw ParseError(path, "expected an integer or a \"p/q\" string");
}

std::vector<std::pair<int, int>> edge_list(const Json& v, int n, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array of [from, to] pairs");
  std::vector<std::pair<int, int>> out;
  for (size_t k = 0; k < v.size(); ++k) {
    std::string p = path + "[" + std::to_string(k) + "]";
    if (!v[k].is_array() || v[k].size() != 2) throw ParseError(p, "expected [from, to]");
    int a = as_int(v[k][0], p + "[0]");
    int b = as_int(v[k][1], p + "[1]");
    if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError(p, "vertex out of range");
    if (a == b) throw ParseError(p, "self-loop");
    out.emplace_back(a, b);
  }
  return out;
}

int player_count(const Json& doc, const std::string& path) {
  int n = as_int(field(doc, "players", path), path + ".players");
  if (n < 1 || n > kMaxPlayers) throw ParseError(path + ".players", "player count out of range");
  return n;
}

StageGame build(const Json& doc) {
  const std::string root = "$";
  const Json& kind_v = field(doc, "kind", root);
  if (!kind_v.is_string()) throw ParseError(root + ".kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();

  if (kind == "table") {
    int n = player_count(doc, root);
    if (n > kMaxTablePlayers) throw ParseError(root + ".players", "table games are limited to 16 players");
    const Json& pay = field(doc, "payoffs", root);
    const std::string pp = root + ".payoffs";
    if (!pay.is_array() || static_cast<int>(pay.size()) != n) {
      throw ParseError(pp, "expected one payoff array per player");
    }
    const size_t count = size_t{1} << n;
    std::vector<std::vector<Rational>> table(n);
    for (int i = 0; i < n; ++i) {
      std::string pi = pp + "[" + std::to_string(i) + "]";
      if (!pay[i].is_array() || pay[i].size() != count) {
        throw ParseError(pi, "expected " + std::to_string(count) + " entries");
      }
      for (size_t m = 0; m < count; ++m) table[i].push_back(as_rational(pay[i][m], pi + "[" + std::to_string(m) + "]"));
    }
    return StageGame::table(n, std::move(table));
  }
  if (kind == "weakest_link" || kind == "threshold") {
    int n = player_count(doc, root);
    Digraph g(n, edge_list(field(doc, "edges", root), n, root + ".edges"));
    if (kind == "weakest_link") return StageGame::weakest_link(std::move(g));
    auto k = int_list(field(doc, "k", root), root + ".k");
    if (static_cast<int>(k.size()) != n) throw ParseError(root + ".k", "expected one entry per player");
    return StageGame::threshold(std::move(g), std::move(k));
  }
  if (kind == "aggregative") {
    auto c = int_list(field(doc, "c", root), root + ".c");
    if (doc.contains("players") && player_count(doc, root) != static_cast<int>(c.size())) {
      throw ParseError(root + ".c", "expected one entry per player");
    }
    return StageGame::aggregative(std::move(c));
  }
  if (kind == "aligned_nsg" || kind == "opposed_nsg") {
    auto in_start = int_list(field(doc, "in_start", root), root + ".in_start");
    if (doc.contains("players") && player_count(doc, root) != static_cast<int>(in_start.size())) {
      throw ParseError(root + ".in_start", "expected one entry per player");
    }
    auto out_bound = optional_int_list(doc, "out_bound", root);
    if (kind == "aligned_nsg") return generate_aligned_nsg(in_start, out_bound);
    auto k = int_list(field(doc, "k", root), root + ".k");
    return generate_opposed_nsg(in_start, k, out_bound);
  }
  throw ParseError(root + ".kind", "unknown kind \"" + kind + "\"");
}

}  // namespace

GameDocument parse_game(const Json& doc) {
  StageGame game = [&] {
    try {
      return build(doc);
    } catch (const ParseError&) {
      throw;
    } catch (const ArgumentError& e) {
      throw ParseError("$", e.what());
    }
  }();
  GameDocument out{game, std::nullopt};
  if (game.n() <= 20) out.report = check_assumptions(game);
  return out;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

GameDocument load_game(const std::string& path) {
  try {
    return parse_game(load_json(path));
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

Json game_to_json(const StageGame& game) {
  Json out;
  out["players"] = game.n();
  auto edges = [](const Digraph& g) {
    Json e = Json::array();
    for (auto [a, b] : g.edges()) e.push_back({a, b});
    return e;
  };
  switch (game.kind()) {
    case GameKind::kTable: {
      out["kind"] = "table";
      Json pay = Json::array();
      for (int i = 0; i < game.n(); ++i) {
        Json row = Json::array();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << game.n()); ++m) {
          Rational r = game.payoff(i, PlayerSet(static_cast<PlayerSet::Mask>(m)));
          if (r.is_integer()) row.push_back(r.num());
          else row.push_back(r.to_string());
        }
        pay.push_back(std::move(row));
      }
      out["payoffs"] = std::move(pay);
      break;
    }
    case GameKind::kWeakestLink:
      out["kind"] = "weakest_link";
      out["edges"] = edges(game.graph());
      break;
    case GameKind::kThreshold:
      out["kind"] = "threshold";
      out["edges"] = edges(game.graph());
      out["k"] = game.thresholds();
      break;
    case GameKind::kAggregative:
      out["kind"] = "aggregative";
      out["c"] = game.thresholds();
      break;
  }
  return out;
}

Digraph parse_graph(const Json& doc) {
  int n = as_int(field(doc, "n", "$"), "$.n");
  if (n < 0 || n > kMaxPlayers) throw ParseError("$.n", "vertex count out of range");
  return Digraph(n, edge_list(field(doc, "edges", "$"), n, "$.edges"));
}

Digraph load_graph(const std::string& path) {
  try {
    return parse_graph(load_json(path));
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

Json graph_to_json(const Digraph& g) {
  Json e = Json::array();
  for (auto [a, b] : g.edges()) e.push_back({a, b});
  return {{"n", g.n()}, {"edges", e}};
}

Partition parse_partition(const Json& doc, int n) {
  const Json& cells = field(doc, "cells", "$");
  if (!cells.is_array()) throw ParseError("$.cells", "expected an array");
  Partition p;
  for (size_t t = 0; t < cells.size(); ++t) {
    std::string path = "$.cells[" + std::to_string(t) + "]";
    PlayerSet c;
    for (int v : int_list(cells[t], path)) {
      if (v < 0 || v >= n) throw ParseError(path, "player out of range");
      if (c.contains(v)) throw ParseError(path, "repeated player");
      c = c.with(v);
    }
    p.cells.push_back(c);
  }
  try {
    p.validate(n);
  } catch (const ArgumentError& e) {
    throw ParseError("$.cells", e.what());
  }
  return p;
}

Partition load_partition(const std::string& path, int n) {
  try {
    return parse_partition(load_json(path), n);
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

Json set_to_json(PlayerSet s, int base) {
  Json out = Json::array();
  for (int i : s) out.push_back(i + base);
  return out;
}

Json partition_to_json(const Partition& p, int base) {
  Json cells = Json::array();
  for (PlayerSet c : p.cells) cells.push_back(set_to_json(c, base));
  return {{"cells", cells}};
}

}  // namespace coordsolve

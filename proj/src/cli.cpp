#include "coordsolve/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "coordsolve/async.hpp"
#include "coordsolve/design.hpp"
#include "coordsolve/errors.hpp"
#include "coordsolve/io.hpp"
#include "coordsolve/oracle.hpp"
#include "coordsolve/ordered.hpp"
#include "coordsolve/sync.hpp"

namespace coordsolve {
namespace {

struct Flags {
  std::string game;
  std::string graph;
  std::string partition;
  std::string target;
  std::string subsidized;
  std::string mode = "mspne";
  int horizon = 0;
  bool json = false;
  bool sss = false;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;  // reserved: nothing in the driver is randomized
};

// Parses "1,2,5" (1-based) into a set over n players.
PlayerSet parse_players(const std::string& text, int n, const char* flag) {
  PlayerSet out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw ArgumentError(std::string(flag) + ": \"" + item + "\" is not a player number");
    }
    if (v < 1 || v > n) {
      throw ArgumentError(std::string(flag) + ": player " + item + " out of range 1.." +
                          std::to_string(n));
    }
    out = out.with(v - 1);
  }
  return out;
}

std::optional<std::uint64_t> budget_of(const Flags& f) {
  if (f.budget > 0) return f.budget;
  if (const char* env = std::getenv("COORDSOLVE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw ArgumentError("COORDSOLVE_BUDGET must be a positive integer");
    }
    return v;
  }
  return std::nullopt;
}

Json family(const std::vector<PlayerSet>& sets) {
  Json out = Json::array();
  for (PlayerSet s : sets) out.push_back(set_to_json(s));
  return out;
}

std::string text_family(const std::vector<PlayerSet>& sets) {
  std::string out;
  for (PlayerSet s : sets) out += to_string(s) + "\n";
  return out;
}

class Driver {
 public:
  Driver(const Flags& f, std::ostream& out) : f_(f), out_(out) {}

  StageGame game() const {
    if (f_.game.empty()) throw ArgumentError("--game is required");
    return load_game(f_.game).game;
  }

  int horizon() const {
    if (f_.horizon < 1) throw ArgumentError("--t must be a positive integer");
    return f_.horizon;
  }

  void emit(const Json& j, const std::string& text) {
    if (f_.json) out_ << j.dump() << "\n";
    else out_ << text;
  }

  void check() {
    GameDocument doc = load_game(f_.game.empty() ? throw ArgumentError("--game is required") : f_.game);
    AssumptionReport r = doc.report ? *doc.report : check_assumptions(doc.game);
    Json w = Json::array();
    std::string text;
    auto line = [&](const char* name, bool v) { text += std::string(name) + ": " + (v ? "yes" : "no") + "\n"; };
    line("single-crossing", r.single_crossing);
    line("common interests", r.common_interests);
    line(kTieBreak, r.tie_break);
    line("deviation-proof", r.deviation_proof);
    line("nondegenerate", r.nondegenerate);
    for (const auto& x : r.witnesses) {
      w.push_back({{"condition", x.condition}, {"player", x.player + 1},
                   {"lower", set_to_json(x.lower)}, {"upper", set_to_json(x.upper)}});
      text += "  violation " + x.condition + ": player " + std::to_string(x.player + 1) + ", " +
              to_string(x.lower) + " below " + to_string(x.upper) + "\n";
    }
    emit({{"single_crossing", r.single_crossing},
          {"common_interests", r.common_interests},
          {"tie_break", r.tie_break},
          {"deviation_proof", r.deviation_proof},
          {"nondegenerate", r.nondegenerate},
          {"assumption1", r.assumption1()},
          {"witnesses", w}},
         text);
  }

  void ne() {
    auto sets = ne_set(game());
    emit({{"equilibria", family(sets)}}, text_family(sets));
  }

  void tau_cmd() {
    StageGame g = game();
    PlayerSet x = f_.target.empty() ? g.players() : parse_players(f_.target, g.n(), "--target");
    SyncOptions o;
    o.use_sse = !f_.sss;
    int v = tau(g, x, o);
    emit({{"target", set_to_json(x)}, {"tau", v}}, std::to_string(v) + "\n");
  }

  void phi_cmd() {
    PlayerSet s = phi(game(), horizon());
    emit({{"t", f_.horizon}, {"phi", set_to_json(s)}}, to_string(s) + "\n");
  }

  void outcomes_cmd() {
    auto sets = outcomes(game(), horizon());
    emit({{"outcomes", family(sets)}}, text_family(sets));
  }

  void treedepth() {
    Digraph g = !f_.graph.empty() ? load_graph(f_.graph) : game().graph();
    if (f_.graph.empty() && g.n() == 0) throw ArgumentError("--graph is required");
    PlayerSet within = f_.target.empty() ? g.vertices() : reach(g, parse_players(f_.target, g.n(), "--target"));
    TreeDepthResult td = tree_depth(g, within);
    Json j = {{"treedepth", td.value}, {"vertices", set_to_json(within)}};
    std::string text = std::to_string(td.value) + "\n";
    if (f_.horizon > 0) {
      Partition p = partition_from_treedepth(g, f_.horizon, within);
      j["cells"] = partition_to_json(p, 1)["cells"];
      for (PlayerSet c : p.cells) text += to_string(c) + "\n";
    }
    emit(j, text);
  }

  void design_cmd() {
    IesedsOptions o;
    if (auto b = budget_of(f_)) o.budget = *b;
    Design d = design(game(), horizon(), o);
    std::string text = "achieved " + to_string(d.achieved) + "\n";
    for (PlayerSet c : d.partition.cells) text += to_string(c) + "\n";
    emit({{"t", f_.horizon},
          {"achieved", set_to_json(d.achieved)},
          {"cells", partition_to_json(d.partition, 1)["cells"]}},
         text);
  }

  void async_solve() {
    StageGame g = game();
    if (f_.partition.empty()) throw ArgumentError("--partition is required");
    Partition p = load_partition(f_.partition, g.n());
    IesedsOptions o;
    if (auto b = budget_of(f_)) o.budget = *b;
    IesedsTable t = ieseds(g, p, o);
    emit({{"profile", set_to_json(t.profile)}, {"cells", partition_to_json(p, 1)["cells"]}},
         to_string(t.profile) + "\n");
  }

  void centrality() {
    StageGame g = game();
    auto weak = weak_centrality(g);
    auto strong = strong_centrality(g);
    Json w = Json::array();
    std::string text = "weak (by tau):\n";
    for (const auto& c : weak) {
      w.push_back({{"tau", c.tau ? Json(*c.tau) : Json(nullptr)}, {"players", set_to_json(c.players)}});
      text += "  " + (c.tau ? std::to_string(*c.tau) : std::string("never")) + ": " + to_string(c.players) + "\n";
    }
    Json s = Json::array();
    text += "strong (i over j):\n";
    for (int i = 0; i < g.n(); ++i)
      for (int j = 0; j < g.n(); ++j)
        if (i != j && strong[i][j]) {
          s.push_back({i + 1, j + 1});
          text += "  " + std::to_string(i + 1) + " over " + std::to_string(j + 1) + "\n";
        }
    emit({{"weak", w}, {"strong", s}}, text);
  }

  void horizons() {
    HorizonLedger l = candidate_horizons(game());
    Json c = Json::array();
    std::string text;
    for (const auto& x : l.candidates) {
      c.push_back({{"t", x.horizon}, {"phi", set_to_json(x.phi)}});
      text += "T=" + std::to_string(x.horizon) + " " + to_string(x.phi) + "\n";
    }
    text += "optimal count " + std::to_string(l.optimal_count()) + " (bound " + std::to_string(l.bound) + ")\n";
    emit({{"candidates", c}, {"bound", l.bound}, {"optimal_count", l.optimal_count()}}, text);
  }

  void intervene() {
    StageGame g = game();
    PlayerSet sub = parse_players(f_.subsidized, g.n(), "--subsidized");
    InterventionReport r = intervention(g, sub, horizon());
    Json b = Json::array();
    std::string text = "gain " + to_string(r.gain) + "\n";
    for (const auto& x : r.bounds) {
      b.push_back({{"player", x.player + 1}, {"lower", x.lower}, {"tau", x.tau_full}, {"holds", x.holds()}});
      text += "  subsidize " + std::to_string(x.player + 1) + ": " + std::to_string(x.lower) +
              " <= " + std::to_string(x.tau_full) + " <= " + std::to_string(x.lower + 1) +
              (x.holds() ? "" : "  VIOLATED") + "\n";
    }
    emit({{"gain", set_to_json(r.gain)}, {"bounds", b}, {"bounds_hold", r.bounds_hold()}}, text);
  }

  void ordered() {
    StageGame g = game();
    ClassifyOptions co;
    if (auto b = budget_of(f_)) co.budget = *b;
    OrderedFlags fl = classify(g, co);
    Json j = {{"cost_ordered", fl.cost_ordered},
              {"strongly_cost_ordered", fl.strongly_cost_ordered},
              {"contribution_ordered", fl.contribution_ordered},
              {"contribution_natural", fl.contribution_natural},
              {"tau", nullptr},
              {"algorithm1", nullptr}};
    std::string text;
    auto line = [&](const char* name, bool v) { text += std::string(name) + ": " + (v ? "yes" : "no") + "\n"; };
    line("cost-ordered", fl.cost_ordered);
    line("strongly cost-ordered", fl.strongly_cost_ordered);
    line("contribution-ordered", fl.contribution_ordered);
    line("contribution natural", fl.contribution_natural);
    if (fl.fast_path()) {
      PlayerSet x = f_.target.empty() ? g.players() : parse_players(f_.target, g.n(), "--target");
      int v = tau_ordered(g, x, fl);
      j["tau"] = v;
      text += "tau " + std::to_string(v) + "\n";
    }
    if (g.kind() == GameKind::kAggregative && std::is_sorted(g.thresholds().begin(), g.thresholds().end())) {
      int v = algorithm1(g.thresholds(), g.n());
      j["algorithm1"] = v;
      text += "algorithm1 " + std::to_string(v) + "\n";
    }
    emit(j, text);
  }

  void oracle() {
    StageGame g = game();
    Schedule s;
    if (!f_.partition.empty()) s = Schedule::async(load_partition(f_.partition, g.n()));
    else s = Schedule::sync(horizon());
    EquilibriumMode m;
    if (f_.mode == "mspne") m = EquilibriumMode::kMspne;
    else if (f_.mode == "spne") m = EquilibriumMode::kSpne;
    else throw ArgumentError("--mode must be spne or mspne");
    OracleOptions o;
    if (auto b = budget_of(f_)) o.node_cap = *b;
    OracleResult r = enumerate_equilibria(g, s, m, o);
    auto least = r.least();
    std::string text = text_family(r.outcomes);
    text += "least " + (least ? to_string(*least) : std::string("none")) + "\n";
    emit({{"mode", f_.mode},
          {"outcomes", family(r.outcomes)},
          {"minimal", family(r.minimal())},
          {"least", least ? set_to_json(*least) : Json(nullptr)}},
         text);
  }

 private:
  const Flags& f_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for binary-action coordination games with strategic complementarities"};
  app.name("coordsolve");
  app.require_subcommand(1);
  Flags f;

  auto add = [&](const std::string& name, const std::string& help, bool game_flag = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (game_flag) sub->add_option("--game", f.game, "game JSON file");
    sub->add_flag("--json", f.json, "machine-readable output");
    sub->add_option("--budget", f.budget, "evaluation cap (overrides COORDSOLVE_BUDGET)");
    sub->add_option("--seed", f.seed, "reserved; accepted for harness compatibility");
    return sub;
  };

  auto* check = add("check", "verify the stage-game assumptions");
  auto* ne = add("ne", "pure Nash equilibria");
  auto* tau = add("tau", "smallest horizon at which the target plays 1 in every MSPNE");
  tau->add_option("--target", f.target, "players, 1-based, comma separated (default all)");
  auto* sss_flag = tau->add_flag("--sss", f.sss, "divide over all strictly sufficient sets");
  tau->add_flag("--sse", "divide over strictly sufficient equilibria (default)")->excludes(sss_flag);
  auto* phi = add("phi", "players who play 1 in every MSPNE at horizon T");
  phi->add_option("--t", f.horizon, "horizon T");
  auto* outs = add("outcomes", "MSPNE outcomes at horizon T");
  outs->add_option("--t", f.horizon, "horizon T");
  auto* td = add("treedepth", "directed tree-depth of a graph");
  td->add_option("--graph", f.graph, "graph JSON file");
  td->add_option("--target", f.target, "restrict to vertices reaching these (1-based)");
  td->add_option("--t", f.horizon, "also emit a partition with this many cells");
  auto* des = add("design", "optimal asynchronous partition for horizon T");
  des->add_option("--t", f.horizon, "horizon T");
  auto* as = add("async-solve", "least IESEDS profile of a partition");
  as->add_option("--partition", f.partition, "partition JSON file");
  auto* cen = add("centrality", "weak and strong centrality");
  auto* hor = add("horizons", "candidate horizons for a costly design");
  auto* inter = add("intervene", "players gained by subsidizing a set");
  inter->add_option("--subsidized", f.subsidized, "players, 1-based, comma separated");
  inter->add_option("--t", f.horizon, "horizon T");
  auto* ord = add("ordered", "ordered-game classification and fast paths");
  ord->add_option("--target", f.target, "players, 1-based (default all)");
  auto* orc = add("oracle", "brute-force equilibrium enumeration");
  orc->add_option("--t", f.horizon, "synchronous horizon T");
  orc->add_option("--partition", f.partition, "asynchronous partition JSON file");
  orc->add_option("--mode", f.mode, "spne or mspne (default mspne)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Driver d(f, out);
  try {
    if (check->parsed()) d.check();
    else if (ne->parsed()) d.ne();
    else if (tau->parsed()) d.tau_cmd();
    else if (phi->parsed()) d.phi_cmd();
    else if (outs->parsed()) d.outcomes_cmd();
    else if (td->parsed()) d.treedepth();
    else if (des->parsed()) d.design_cmd();
    else if (as->parsed()) d.async_solve();
    else if (cen->parsed()) d.centrality();
    else if (hor->parsed()) d.horizons();
    else if (inter->parsed()) d.intervene();
    else if (ord->parsed()) d.ordered();
    else if (orc->parsed()) d.oracle();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace coordsolve

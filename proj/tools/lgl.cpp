// Command-line front end for the stabilized colouring-game library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lgl/io.hpp"
#include "lgl/solver.hpp"
#include "lgl/strategy.hpp"
#include "lgl/verify.hpp"

namespace {

using namespace lgl;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arguments holding JSON may be inline text or a file path.
json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) throw DomainError("cannot open file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return json::parse(text);
}

Isotopism load_isotopism(const std::string& arg) { return isotopism_from_json(load_json_arg(arg)); }
Board load_board(const std::string& arg) { return board_from_json(load_json_arg(arg)); }

Player parse_player(const std::string& s) {
  if (s == "A" || s == "a" || s == "alice" || s == "Alice") return Player::Alice;
  if (s == "B" || s == "b" || s == "bob" || s == "Bob") return Player::Bob;
  throw CLI::ValidationError("--first", "expected A or B");
}

Variant parse_variant(const std::string& s) {
  if (s == "standard") return Variant::Standard;
  if (s == "first-try" || s == "firsttry") return Variant::FirstTry;
  throw CLI::ValidationError("--variant", "expected standard or first-try");
}

json profile_to_json(const ChromaticProfile& profile) {
  json j;
  j["a"] = profile.a;
  j["b"] = profile.b;
  j["first"] = profile.first == Player::Alice ? "A" : "B";
  j["least_winning"] = profile.least_winning ? json(*profile.least_winning) : json(nullptr);
  j["partial"] = profile.partial;
  json table = json::array();
  for (const auto& e : profile.entries) {
    json row;
    row["colours"] = e.colours;
    row["outcome"] = e.outcome ? json(to_string(*e.outcome)) : json(nullptr);
    row["nodes"] = e.nodes;
    row["seconds"] = e.seconds;
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

template <class Game>
json solve_report(const Game& game, const SolveResult<Game>& res, const Shape* shape) {
  json j;
  j["outcome"] = to_string(res.outcome);
  j["nodes"] = res.nodes_searched;
  j["seconds"] = res.wall_seconds;
  json pv = json::array();
  for (const auto& m : res.principal_variation) {
    if constexpr (std::is_same_v<Game, HammingGame>) {
      pv.push_back(format_move(*shape, m));
    } else {
      (void)game;
      (void)shape;
      if (m.is_pass())
        pv.push_back("pass v" + std::to_string(m.vertex + 1));
      else
        pv.push_back("v" + std::to_string(m.vertex + 1) + "=" + std::to_string(m.colour));
    }
  }
  j["principal_variation"] = std::move(pv);
  return j;
}

void print_board(std::ostream& os, const Board& b) {
  if (b.dim() == 2) {
    for (int r = 1; r <= b.shape().dims[0]; ++r) {
      for (int c = 1; c <= b.shape().dims[1]; ++c) {
        const int s = b.at({r, c});
        os << (c > 1 ? " " : "");
        if (s == 0)
          os << ".";
        else
          os << s;
      }
      os << "\n";
    }
  } else {
    os << board_to_json(b).dump() << "\n";
  }
}

int run_play(const Isotopism& theta, int colours, int a, int b, Player first, Variant variant,
             Player engine_role, const SolveOptions& opt) {
  HammingGame game({theta, colours, a, b, first, variant});
  OptimalStrategy<HammingGame> engine(game, opt);
  GameState state = game.initial_state();
  std::vector<std::pair<Player, Move>> transcript;
  std::cout << "board " << game.shape().dims.size() << "-dimensional, " << game.cell_count()
            << " cells, " << colours << " colours, variant " << to_string(variant) << "\n"
            << "you play " << to_string(other(engine_role)) << "; moves look like (1,2)=3; 'quit' ends\n";
  while (true) {
    if (auto t = game.terminal_status(state)) {
      print_board(std::cout, state.board);
      std::cout << to_string(*t) << "\n";
      std::cout << transcript_to_json(game, transcript).dump() << "\n";
      return 0;
    }
    if (state.to_move == engine_role) {
      const Move m = engine.choose(state, std::nullopt);
      std::cout << "engine plays " << format_move(game.shape(), m) << "\n";
      transcript.emplace_back(state.to_move, m);
      state = game.apply_move(state, m);
      continue;
    }
    print_board(std::cout, state.board);
    std::cout << to_string(state.to_move) << " to move (" << state.remaining
              << " colouring(s) left this turn)\nmove> " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) return 0;
    if (line == "quit" || line == "q") return 0;
    try {
      const Move m = parse_move(game.shape(), line);
      transcript.emplace_back(state.to_move, m);
      state = game.apply_move(state, m);
    } catch (const std::exception& e) {
      std::cout << "rejected: " << e.what() << "\n";
      if (!transcript.empty() && transcript.back().first == state.to_move) transcript.pop_back();
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilized (a,b)-colouring games on Hamming boards"};
  app.require_subcommand(1);

  SolveOptions base_opt = SolveOptions::from_env();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string iso_arg, board_arg, graph_arg, expr_arg, perm_text;
  int size = 0, colours = 0, quota_a = 1, quota_b = 1, n_max = 0, threads = 1;
  std::uint64_t budget = 0;
  std::string first_str = "A", variant_str = "standard", scale = "full", engine_role_str = "B";
  bool want_feasible = false, want_extendable = false, want_dot = false, contracted = false;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "node budget for the solver");
    cmd->add_option("--threads", threads, "root-level solver threads");
  };

  // perm cycles
  auto* perm_cmd = app.add_subcommand("perm", "permutation utilities");
  auto* perm_cycles = perm_cmd->add_subcommand("cycles", "cycle decomposition and structure");
  perm_cycles->add_option("--size", size, "domain size m")->required();
  perm_cycles->add_option("--perm", perm_text, "cycle notation, e.g. \"(1 2)(3 4)\"")->required();

  // iso check / extend
  auto* iso_cmd = app.add_subcommand("iso", "isotopism utilities");
  auto* iso_check = iso_cmd->add_subcommand("check", "feasibility and extendability");
  iso_check->add_option("--iso", iso_arg, "isotopism JSON (inline or file)")->required();
  iso_check->add_flag("--feasible", want_feasible, "exit 0 iff feasible");
  iso_check->add_flag("--extendable", want_extendable, "exit 0 iff extendable");
  auto* iso_extend = iso_cmd->add_subcommand("extend", "natural extension");
  iso_extend->add_option("--iso", iso_arg)->required();
  iso_extend->add_option("--size", size, "target palette size")->required();

  // orbits
  auto* orbits_cmd = app.add_subcommand("orbits", "cell orbits of an isotopism");
  orbits_cmd->add_option("--iso", iso_arg)->required();

  // board validate / member / compat
  auto* board_cmd = app.add_subcommand("board", "board queries");
  auto* board_validate = board_cmd->add_subcommand("validate", "Latin condition");
  board_validate->add_option("--board", board_arg)->required();
  auto* board_member = board_cmd->add_subcommand("member", "fixed by the isotopism");
  board_member->add_option("--board", board_arg)->required();
  board_member->add_option("--iso", iso_arg)->required();
  auto* board_compat = board_cmd->add_subcommand("compat", "compatibility with the isotopism");
  board_compat->add_option("--board", board_arg)->required();
  board_compat->add_option("--iso", iso_arg)->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve a board game exactly");
  solve_cmd->add_option("--iso", iso_arg)->required();
  solve_cmd->add_option("--colors,--colours", colours, "palette size n'")->required();
  solve_cmd->add_option("--a", quota_a, "Alice's colourings per turn");
  solve_cmd->add_option("--b", quota_b, "Bob's colourings per turn");
  solve_cmd->add_option("--first", first_str, "first player: A or B");
  solve_cmd->add_option("--variant", variant_str, "standard or first-try");
  add_budget(solve_cmd);

  // contract
  auto* contract_cmd = app.add_subcommand("contract", "orbit contraction graph");
  contract_cmd->add_option("--iso", iso_arg)->required();
  contract_cmd->add_flag("--dot", want_dot, "emit DOT instead of JSON");

  // solve-graph
  auto* graph_cmd = app.add_subcommand("solve-graph", "solve a weighted-graph game exactly");
  graph_cmd->add_option("--graph", graph_arg, "graph JSON (inline or file)");
  graph_cmd->add_option("--expr", expr_arg, "graph expression, e.g. replicate(strong(Hamming(2,2),K_2),2)");
  graph_cmd->add_option("--colors,--colours", colours)->required();
  graph_cmd->add_option("--a", quota_a);
  graph_cmd->add_option("--b", quota_b);
  graph_cmd->add_option("--first", first_str);
  add_budget(graph_cmd);

  // chromatic
  auto* chrom_cmd = app.add_subcommand("chromatic", "game chromatic profile");
  chrom_cmd->add_option("--iso", iso_arg)->required();
  chrom_cmd->add_option("--a", quota_a);
  chrom_cmd->add_option("--b", quota_b);
  chrom_cmd->add_option("--first", first_str);
  chrom_cmd->add_option("--max", n_max, "profile ceiling (default: orbit count + n - 1)");
  chrom_cmd->add_flag("--contracted", contracted, "solve on the orbit contraction graph");
  add_budget(chrom_cmd);

  // play
  auto* play_cmd = app.add_subcommand("play", "interactive line-based play");
  play_cmd->add_option("--iso", iso_arg)->required();
  play_cmd->add_option("--colors,--colours", colours)->required();
  play_cmd->add_option("--a", quota_a);
  play_cmd->add_option("--b", quota_b);
  play_cmd->add_option("--first", first_str);
  play_cmd->add_option("--variant", variant_str);
  play_cmd->add_option("--engine", engine_role_str, "side the engine plays: A or B");
  add_budget(play_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  verify_cmd->add_option("--scale", scale, "quick or full");

  // Global flags remain usable after the subcommand name.
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough(true);
    for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough(true);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (budget != 0) base_opt.node_budget = budget;
  base_opt.threads = threads;

  try {
    if (perm_cycles->parsed()) {
      const Perm p = parse_perm_cycles(size, perm_text);
      const auto cs = cycle_structure(p);
      if (as_json) {
        json j;
        j["size"] = p.size();
        j["cycles"] = p.cycles(true);
        json counts = json::object();
        for (auto [l, k] : cs.counts) counts[std::to_string(l)] = k;
        j["structure"] = counts;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "cycles:    " << format_perm_cycles(p) << "\n"
                  << "structure: " << cs.to_string() << "\n";
      }
      return 0;
    }

    if (iso_check->parsed()) {
      const Isotopism t = load_isotopism(iso_arg);
      const bool feasible = is_feasible(t);
      const bool extendable = is_extendable(t);
      if (as_json) {
        json j;
        j["feasible"] = feasible;
        j["extendable"] = extendable;
        j["cycle_structure"] = cycle_structure(t).to_string();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "cycle structure: " << cycle_structure(t).to_string() << "\n"
                  << "feasible:   " << (feasible ? "true" : "false") << "\n"
                  << "extendable: " << (extendable ? "true" : "false") << "\n";
      }
      if (want_feasible && !feasible) return 1;
      if (want_extendable && !extendable) return 1;
      return 0;
    }

    if (iso_extend->parsed()) {
      const Isotopism t = load_isotopism(iso_arg);
      std::cout << isotopism_to_json(natural_extension(t, size)).dump() << "\n";
      return 0;
    }

    if (orbits_cmd->parsed()) {
      const Isotopism t = load_isotopism(iso_arg);
      const auto part = orbit_partition(t);
      if (as_json) {
        json j = json::array();
        for (const auto& orbit : part.orbits) {
          json cells = json::array();
          for (int idx : orbit) cells.push_back(t.shape().cell_at(idx));
          j.push_back(std::move(cells));
        }
        std::cout << j.dump() << "\n";
      } else {
        std::cout << part.size() << " orbit(s)\n";
        for (int o = 0; o < part.size(); ++o) {
          std::cout << "  #" << o + 1 << " size " << part.orbits[o].size() << ":";
          for (int idx : part.orbits[o]) {
            const Cell c = t.shape().cell_at(idx);
            std::cout << " (";
            for (std::size_t j = 0; j < c.size(); ++j)
              std::cout << (j ? "," : "") << c[j];
            std::cout << ")";
          }
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (board_validate->parsed()) {
      const Board b = load_board(board_arg);
      const bool ok = validate_latin(b);
      std::cout << (as_json ? json{{"latin", ok}}.dump() : std::string("latin: ") + (ok ? "true" : "false"))
                << "\n";
      return ok ? 0 : 1;
    }

    if (board_member->parsed()) {
      const Board b = load_board(board_arg);
      const Isotopism t = load_isotopism(iso_arg);
      const bool ok = is_member(b, t);
      std::cout << (as_json ? json{{"member", ok}}.dump() : std::string("member: ") + (ok ? "true" : "false"))
                << "\n";
      return ok ? 0 : 1;
    }

    if (board_compat->parsed()) {
      const Board b = load_board(board_arg);
      const Isotopism t = load_isotopism(iso_arg);
      const bool ok = is_theta_compatible(b, t);
      std::cout << (as_json ? json{{"compatible", ok}}.dump()
                            : std::string("compatible: ") + (ok ? "true" : "false"))
                << "\n";
      return ok ? 0 : 1;
    }

    if (solve_cmd->parsed()) {
      const Isotopism t = load_isotopism(iso_arg);
      const HammingGame game(
          {t, colours, quota_a, quota_b, parse_player(first_str), parse_variant(variant_str)});
      const auto res = solve(game, base_opt);
      const json j = solve_report(game, res, &game.shape());
      if (as_json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "outcome: " << to_string(res.outcome) << "\n"
                  << "nodes:   " << res.nodes_searched << "\n"
                  << "time:    " << res.wall_seconds << "s\n"
                  << "line:    ";
        for (const auto& m : j["principal_variation"]) std::cout << m.get<std::string>() << " ";
        std::cout << "\n";
      }
      return 0;
    }

    if (contract_cmd->parsed()) {
      const Isotopism t = load_isotopism(iso_arg);
      const WeightedGraph g = build_contraction_graph(t);
      if (want_dot)
        std::cout << graph_to_dot(g, "contraction");
      else
        std::cout << graph_to_json(g).dump() << "\n";
      return 0;
    }

    if (graph_cmd->parsed()) {
      if (graph_arg.empty() == expr_arg.empty())
        throw DomainError("solve-graph: give exactly one of --graph or --expr");
      const WeightedGraph g =
          graph_arg.empty() ? parse_graph_expression(expr_arg) : graph_from_json(load_json_arg(graph_arg));
      const OrbitGame game({g, colours, quota_a, quota_b, parse_player(first_str)});
      const auto res = solve(game, base_opt);
      const json j = solve_report(game, res, nullptr);
      if (as_json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "outcome: " << to_string(res.outcome) << "\n"
                  << "nodes:   " << res.nodes_searched << "\n"
                  << "time:    " << res.wall_seconds << "s\n"
                  << "line:    ";
        for (const auto& m : j["principal_variation"]) std::cout << m.get<std::string>() << " ";
        std::cout << "\n";
      }
      return 0;
    }

    if (chrom_cmd->parsed()) {
      const Isotopism t = load_isotopism(iso_arg);
      const std::optional<int> ceiling = n_max > 0 ? std::optional<int>(n_max) : std::nullopt;
      const ChromaticProfile profile =
          contracted ? contracted_game_chromatic_number(t, quota_a, quota_b, parse_player(first_str),
                                                        ceiling, base_opt)
                     : game_chromatic_number(t, quota_a, quota_b, parse_player(first_str), ceiling,
                                             base_opt);
      if (as_json) {
        std::cout << profile_to_json(profile).dump() << "\n";
      } else {
        for (const auto& e : profile.entries)
          std::cout << "n'=" << e.colours << "  " << (e.outcome ? to_string(*e.outcome) : "budget exceeded")
                    << "  (" << e.nodes << " nodes, " << e.seconds << "s)\n";
        std::cout << "least_winning: "
                  << (profile.least_winning ? std::to_string(*profile.least_winning) : "none in range")
                  << (profile.partial ? " (partial profile)" : "") << "\n";
      }
      return profile.partial ? 1 : 0;
    }

    if (play_cmd->parsed()) {
      return run_play(load_isotopism(iso_arg), colours, quota_a, quota_b, parse_player(first_str),
                      parse_variant(variant_str), parse_player(engine_role_str), base_opt);
    }

    if (verify_cmd->parsed()) {
      if (scale != "quick" && scale != "full")
        throw CLI::ValidationError("--scale", "expected quick or full");
      return lgl::verify::run_acceptance(scale == "quick", std::cout, as_json) == 0 ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#pragma once

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "lgl/solver.hpp"
#include "lgl/strategy.hpp"

namespace lgl::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected, actual;
  double seconds = 0.0;
};

struct Check {
  std::string name;
  bool quick;  // runs under the quick scale
  std::function<void(CheckResult&)> run;
};

namespace detail {

inline std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "none"; }

inline std::string outcome_str(std::optional<Outcome> o) { return o ? to_string(*o) : "?"; }

// All permutations of {1..n} whose cycles all have length l.
inline void gen_uniform_rec(int n, int l, std::vector<int>& unused,
                            std::vector<std::vector<int>>& cycles, std::vector<Perm>& out) {
  if (unused.empty()) {
    out.push_back(Perm::from_cycles(n, cycles));
    return;
  }
  const int head = unused.front();
  std::vector<int> rest(unused.begin() + 1, unused.end());
  if (l == 1) {
    cycles.push_back({head});
    gen_uniform_rec(n, l, rest, cycles, out);
    cycles.pop_back();
    return;
  }
  std::vector<int> pick(l - 1);
  std::vector<char> taken(rest.size(), 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == l - 1) {
      std::vector<int> cyc{head};
      cyc.insert(cyc.end(), pick.begin(), pick.end());
      std::vector<int> rem;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (!taken[i]) rem.push_back(rest[i]);
      cycles.push_back(cyc);
      gen_uniform_rec(n, l, rem, cycles, out);
      cycles.pop_back();
      return;
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = 1;
      pick[depth] = rest[i];
      self(self, depth + 1);
      taken[i] = 0;
    }
  };
  rec(rec, 0);
}

inline std::vector<Perm> uniform_cycle_perms(int n, int l) {
  std::vector<Perm> out;
  if (l < 1 || n % l != 0) return out;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  std::vector<std::vector<int>> cycles;
  gen_uniform_rec(n, l, all, cycles, out);
  return out;
}

inline Perm consecutive_cycles_perm(int n, int l) {
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; start += l) {
    std::vector<int> cyc(l);
    for (int i = 0; i < l; ++i) cyc[i] = start + i;
    cycles.push_back(std::move(cyc));
  }
  return Perm::from_cycles(n, cycles);
}

inline Isotopism uniform_principal(std::vector<int> dims, int l) {
  const int n = *std::max_element(dims.begin(), dims.end());
  std::vector<Perm> rows;
  for (int d : dims) rows.push_back(consecutive_cycles_perm(d, l));
  return Isotopism(Shape(dims, n), std::move(rows), Perm::identity(n));
}

inline Isotopism hypercube_isotopism(int d) {
  std::vector<int> dims(d, 2);
  std::vector<Perm> rows(d, Perm::from_cycles(2, {{1, 2}}));
  return Isotopism(Shape(dims, 2), rows, Perm::identity(2));
}

// Non-trivial Latin boards over [n] fixed by the isotopism, by direct
// enumeration with incremental line pruning.
inline std::uint64_t count_fixed_boards(const Isotopism& t) {
  const Shape& sh = t.shape();
  const int n_cells = static_cast<int>(sh.cell_count());
  const int n = sh.symbols;
  std::vector<std::vector<int>> collinear(n_cells);
  for (int idx = 0; idx < n_cells; ++idx) {
    Cell c = sh.cell_at(idx);
    for (int j = 0; j < sh.dim(); ++j) {
      const int keep = c[j];
      for (int v = 1; v <= sh.dims[j]; ++v) {
        if (v == keep) continue;
        c[j] = v;
        collinear[idx].push_back(sh.index_of(c));
      }
      c[j] = keep;
    }
  }
  Board b(sh);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == n_cells) {
      if (!b.is_trivial() && apply_isotopism(b, t) == b) ++count;
      return;
    }
    self(self, idx + 1);  // leave empty
    for (int v = 1; v <= n; ++v) {
      bool ok = true;
      for (int w : collinear[idx])
        if (b.at_index(w) == v) {
          ok = false;
          break;
        }
      if (!ok) continue;
      b.set_index(idx, v);
      self(self, idx + 1);
      b.set_index(idx, 0);
    }
  };
  rec(rec, 0);
  return count;
}

// Extendable isotopisms with uniform row-cycle length l and symbol cycles
// whose lengths divide l; the whole extendable family in two dimensions.
inline Isotopism random_extendable(std::mt19937& rng) {
  static const std::vector<std::vector<int>> dim_pool = {{2, 2}, {2, 3}, {3, 3}, {2, 4},
                                                         {3, 4}, {2, 6}, {3, 6}};
  const auto dims = dim_pool[rng() % dim_pool.size()];
  const int n = std::max(dims[0], dims[1]);
  const int g = std::gcd(dims[0], dims[1]);
  std::vector<int> ls;
  for (int l = 1; l <= g; ++l)
    if (g % l == 0) ls.push_back(l);
  for (int tries = 0; tries < 64; ++tries) {
    const int l = ls[rng() % ls.size()];
    auto pick_uniform = [&](int m) {
      auto all = uniform_cycle_perms(m, l);
      return all[rng() % all.size()];
    };
    // Symbol permutation: cycle lengths dividing l, random layout.
    std::vector<int> symbols(n);
    for (int i = 0; i < n; ++i) symbols[i] = i + 1;
    std::shuffle(symbols.begin(), symbols.end(), rng);
    std::vector<std::vector<int>> cycles;
    std::size_t at = 0;
    while (at < symbols.size()) {
      std::vector<int> divs;
      for (int q = 1; q <= l; ++q)
        if (l % q == 0 && at + q <= symbols.size()) divs.push_back(q);
      const int q = divs[rng() % divs.size()];
      cycles.emplace_back(symbols.begin() + at, symbols.begin() + at + q);
      at += q;
    }
    Isotopism t(Shape(dims, n), {pick_uniform(dims[0]), pick_uniform(dims[1])},
                Perm::from_cycles(n, cycles));
    if (is_extendable(t)) return t;
  }
  return trivial_isotopism(dims, n);
}

inline Board widen_palette(const Board& b, int palette) {
  Board out(b.shape(), palette);
  for (int idx = 0; idx < b.cell_count(); ++idx)
    if (b.at_index(idx) != 0) out.set_index(idx, b.at_index(idx));
  return out;
}

}  // namespace detail

inline std::vector<Check> acceptance_checks() {
  using detail::outcome_str;
  using detail::show;
  std::vector<Check> checks;

  checks.push_back({"chromatic-h33-bob-first", true, [](CheckResult& r) {
    const auto profile = game_chromatic_number(trivial_isotopism({3, 3}, 3), 1, 1, Player::Bob);
    r.expected = "least_winning=4, n'=3 BobWins, n'=4 AliceWins";
    r.actual = "least_winning=" + show(profile.least_winning) +
               ", n'=3 " + outcome_str(profile.outcome_at(3)) +
               ", n'=4 " + outcome_str(profile.outcome_at(4));
    r.pass = profile.least_winning == 4 && profile.outcome_at(3) == Outcome::BobWins &&
             profile.outcome_at(4) == Outcome::AliceWins;
  }});

  checks.push_back({"chromatic-h33-alice-first", true, [](CheckResult& r) {
    const auto profile = game_chromatic_number(trivial_isotopism({3, 3}, 3), 1, 1, Player::Alice);
    r.expected = "least_winning=3";
    r.actual = "least_winning=" + show(profile.least_winning);
    r.pass = profile.least_winning == 3;
  }});

  checks.push_back({"chromatic-small-hamming-families", false, [](CheckResult& r) {
    std::string got;
    bool ok = true;
    for (int n = 2; n <= 4; ++n) {
      const auto row = trivial_isotopism({1, n}, n);
      const auto rect = trivial_isotopism({2, n}, n);
      const auto a1 = game_chromatic_number(row, 1, 1, Player::Alice).least_winning;
      const auto b1 = game_chromatic_number(row, 1, 1, Player::Bob).least_winning;
      const auto a2 = game_chromatic_number(rect, 1, 1, Player::Alice).least_winning;
      const auto b2 = game_chromatic_number(rect, 1, 1, Player::Bob).least_winning;
      ok = ok && a1 == n && b1 == n && a2 == n + 1 && b2 == n;
      got += "n=" + std::to_string(n) + ":[" + show(a1) + "," + show(b1) + "," + show(a2) + "," +
             show(b2) + "] ";
    }
    r.expected = "1xN: gA=gB=n; 2xN: gA=n+1, gB=n for n in {2,3,4}";
    r.actual = got;
    r.pass = ok;
  }});

  checks.push_back({"chromatic-order2-tightness", true, [](CheckResult& r) {
    const Perm swap2 = Perm::from_cycles(2, {{1, 2}});
    const Isotopism t1(Shape({2, 2}, 2), {swap2, swap2}, Perm::identity(2));
    const Isotopism t2(Shape({2, 2}, 2), {swap2, swap2}, swap2);
    bool ok = true;
    std::string got;
    for (Player f : {Player::Alice, Player::Bob}) {
      const auto l1 = game_chromatic_number(t1, 1, 1, f).least_winning;
      const auto l2 = game_chromatic_number(t2, 1, 1, f).least_winning;
      ok = ok && l1 == 2 && l2 == 3;
      got += std::string(to_string(f)) + ":[" + show(l1) + "," + show(l2) + "] ";
    }
    r.expected = "principal pair -> 2, symbol-swapping pair -> 3, either first player";
    r.actual = got;
    r.pass = ok;
  }});

  checks.push_back({"chromatic-single-cycle-orbits", true, [](CheckResult& r) {
    bool ok = true;
    std::string got;
    for (int l : {2, 3}) {
      const auto t = detail::uniform_principal({l, l}, l);
      for (Player f : {Player::Alice, Player::Bob}) {
        const auto least = game_chromatic_number(t, 1, 1, f).least_winning;
        ok = ok && least == l;
        got += "l=" + std::to_string(l) + "/" + to_string(f) + "=" + show(least) + " ";
      }
    }
    {
      const auto t = detail::uniform_principal({4, 4}, 4);
      for (Player f : {Player::Alice, Player::Bob}) {
        const auto least = contracted_game_chromatic_number(t, 1, 1, f).least_winning;
        ok = ok && least == 4;
        got += "l=4(contracted)/" + std::string(to_string(f)) + "=" + show(least) + " ";
      }
    }
    r.expected = "least_winning = l for l in {2,3,4} (l=4 via the contracted game)";
    r.actual = got;
    r.pass = ok;
  }});

  checks.push_back({"chromatic-hypercubes", false, [](CheckResult& r) {
    bool ok = true;
    std::string got;
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (Player f : {Player::Alice, Player::Bob}) {
          const auto l2 = game_chromatic_number(detail::hypercube_isotopism(2), a, b, f).least_winning;
          const auto l3 = game_chromatic_number(detail::hypercube_isotopism(3), a, b, f).least_winning;
          ok = ok && l2 == 2 && l3 == 4;
        }
    got += "H2=2,H3=4 over (a,b) in {1,2}^2; ";
    const auto h4 = detail::hypercube_isotopism(4);
    const std::vector<std::tuple<int, int, Player, int>> table = {
        {2, 1, Player::Alice, 2}, {1, 1, Player::Alice, 3}, {1, 2, Player::Alice, 4},
        {1, 3, Player::Alice, 5}, {1, 1, Player::Bob, 2},   {1, 2, Player::Bob, 3},
        {1, 3, Player::Bob, 4},   {1, 4, Player::Bob, 5}};
    for (const auto& [a, b, f, expect] : table) {
      const auto least = contracted_game_chromatic_number(h4, a, b, f).least_winning;
      ok = ok && least == expect;
      got += "H4(" + std::to_string(a) + "," + std::to_string(b) + "," + to_string(f) +
             ")=" + show(least) + " ";
    }
    r.expected = "H2=2, H3=4 for (a,b) in {1,2}^2; H4: A,a=2,b=1 -> 2; A,a=1 -> min{b+2,5}; B,a=1 -> min{b+1,5}";
    r.actual = got;
    r.pass = ok;
  }});

  checks.push_back({"contraction-equivalence-suite", false, [](CheckResult& r) {
    SolveOptions opt;
    long long pairs = 0, mismatches = 0;
    for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 4}, {3, 3}, {4, 4}, {2, 2, 2}}) {
      const int n = *std::max_element(dims.begin(), dims.end());
      int g = dims[0];
      for (int d : dims) g = std::gcd(g, d);
      for (int l = 1; l <= g; ++l) {
        if (g % l != 0) continue;
        std::vector<std::vector<Perm>> per_dim;
        for (int d : dims) per_dim.push_back(detail::uniform_cycle_perms(d, l));
        std::vector<std::size_t> pick(dims.size(), 0);
        while (true) {
          std::vector<Perm> rows;
          for (std::size_t j = 0; j < dims.size(); ++j) rows.push_back(per_dim[j][pick[j]]);
          const Isotopism theta(Shape(dims, n), rows, Perm::identity(n));
          const auto contraction = build_contraction_graph(theta);
          const auto maps = theta.is_trivial() ? cell_symmetry_maps(theta.shape())
                                               : std::vector<std::vector<int>>{};
          for (int colours = n; colours <= 5; ++colours)
            for (int a = 1; a <= 2; ++a)
              for (int b = 1; b <= 2; ++b)
                for (Player f : {Player::Alice, Player::Bob}) {
                  const HammingGame original({theta, colours, a, b, f, Variant::Standard});
                  const OrbitGame contracted({contraction, colours, a, b, f}, maps);
                  ++pairs;
                  if (solve(original, opt).outcome != solve(contracted, opt).outcome) ++mismatches;
                }
          std::size_t j = 0;
          while (j < pick.size() && ++pick[j] == per_dim[j].size()) pick[j++] = 0;
          if (j == pick.size()) break;
        }
      }
    }
    r.expected = "0 mismatches across every uniform-cycle principal isotopism, n' <= 5, (a,b) in {1,2}^2, both first players";
    r.actual = std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches";
    r.pass = mismatches == 0 && pairs > 0;
  }});

  checks.push_back({"first-try-counterexample", true, [](CheckResult& r) {
    const Isotopism theta(Shape({3, 6}, 6),
                          {Perm::from_cycles(3, {{1, 2, 3}}),
                           Perm::from_cycles(6, {{1, 2, 3}, {4, 5, 6}})},
                          Perm::identity(6));
    long long openings = 0, killed = 0, blocked = 0;
    for (int colours : {6, 7, 8}) {
      const HammingGame first_try({theta, colours, 1, 1, Player::Alice, Variant::FirstTry});
      const HammingGame standard({theta, colours, 1, 1, Player::Alice, Variant::Standard});
      FirstTryDestroyerStrategy bob(first_try);
      const auto s0 = first_try.initial_state();
      for (const Move& opening : first_try.legal_moves(s0)) {
        ++openings;
        const auto s1 = first_try.apply_move(s0, opening);
        const Move kill = bob.choose(s1, opening);
        const auto s2 = first_try.apply_move(s1, kill);
        if (first_try.terminal_status(s2) == Outcome::BobWins) ++killed;
        const auto st1 = standard.apply_move(standard.initial_state(), opening);
        if (!(standard.legal_colour_mask(st1, kill.cell) & (1u << (kill.symbol - 1)))) ++blocked;
      }
    }
    r.expected = "destroyer reply ends every opening BobWins in first-try; same reply illegal in standard";
    r.actual = std::to_string(openings) + " openings, " + std::to_string(killed) + " killed, " +
               std::to_string(blocked) + " blocked in standard";
    r.pass = openings > 0 && killed == openings && blocked == openings;
  }});

  checks.push_back({"pairing-strategy-products", false, [](CheckResult& r) {
    bool ok = true;
    std::string got;
    const std::vector<std::pair<std::string, WeightedGraph>> bases = {
        {"K3", complete_graph(3)}, {"C4", cycle_graph(4)}, {"C5", cycle_graph(5)},
        {"P4", path_graph(4)}};
    for (const auto& [name, base] : bases) {
      const auto prod = cartesian_product(complete_graph(2), base);
      const int delta = prod.max_degree();
      const OrbitGame game = OrbitGame::classical(prod, delta, 1, 1, Player::Bob);
      PairingStrategy alice(game, base.size());
      const bool win = verify_strategy(game, alice, Player::Alice);
      ok = ok && win;
      got += name + "(delta=" + std::to_string(delta) + ")=" + (win ? "win" : "loss") + " ";
    }
    r.expected = "pairing strategy wins for K2 products of K3, C4, C5, P4 with max-degree colours, opponent first";
    r.actual = got;
    r.pass = ok;
  }});

  checks.push_back({"turn-quota-lifting", false, [](CheckResult& r) {
    const auto theta = trivial_isotopism({3, 3}, 3);
    bool ok = true;
    std::string got;
    for (Player f : {Player::Alice, Player::Bob}) {
      const auto lifted = game_chromatic_number(theta, 3, 1, f).least_winning;
      const auto base = game_chromatic_number(theta, 1, 1, f).least_winning;
      ok = ok && lifted && base && *lifted <= *base;
      got += std::string(to_string(f)) + ":(3,1)=" + show(lifted) + "<=(1,1)=" + show(base) + " ";
    }
    const HammingGame lifted_game({theta, 4, 3, 1, Player::Bob, Variant::Standard});
    const HammingGame base_game({theta, 4, 1, 1, Player::Bob, Variant::Standard});
    SimulationStrategy alice(lifted_game, base_game,
                             std::make_unique<OptimalStrategy<HammingGame>>(base_game));
    const bool sim_ok = verify_strategy(lifted_game, alice, Player::Alice);
    got += std::string("sim=") + (sim_ok ? "win" : "loss");
    ok = ok && sim_ok;
    r.expected = "(3,1) least <= (1,1) least for both first players; lifted strategy wins at 4 colours, opponent first";
    r.actual = got;
    r.pass = ok;
  }});

  checks.push_back({"graph-structure-isomorphisms", true, [](CheckResult& r) {
    bool ok = true;
    std::string got;
    auto expect_iso = [&](const std::string& name, const WeightedGraph& a, const WeightedGraph& b,
                          bool want = true) {
      const bool iso = is_isomorphic(a, b);
      ok = ok && iso == want;
      got += name + "=" + (iso ? "iso" : "non") + " ";
    };
    expect_iso("diag1~K2", hypercube_plus_diag(1), complete_graph(2));
    expect_iso("diag2~K4", hypercube_plus_diag(2), complete_graph(4));
    expect_iso("diag3~K44", hypercube_plus_diag(3), complete_bipartite(4, 4));
    expect_iso("K3!~P3", complete_graph(3), path_graph(3), false);
    for (int l : {2, 3})
      for (int f1 : {1, 2})
        for (int f2 : {1, 2}) {
          const int n1 = f1 * l, n2 = f2 * l;
          const auto theta = detail::uniform_principal({n1, n2}, l);
          const auto reference =
              replicate(strong_product(hamming_graph({f1, f2}), complete_graph(l)), l);
          expect_iso("block(" + std::to_string(n1) + "x" + std::to_string(n2) + ",l=" +
                         std::to_string(l) + ")",
                     build_contraction_graph(theta), reference);
        }
    for (int d : {2, 3, 4})
      expect_iso("cube(d=" + std::to_string(d) + ")",
                 build_contraction_graph(detail::hypercube_isotopism(d)),
                 replicate(hypercube_plus_diag(d - 1), 2));
    r.expected = "diagonal-hypercube identities, block contractions, cube contractions all isomorphic";
    r.actual = got;
    r.pass = ok;
  }});

  checks.push_back({"autotopism-census-conjugacy", false, [](CheckResult& r) {
    const Perm r3 = Perm::from_cycles(3, {{1, 2, 3}});
    const Perm r3b = Perm::from_cycles(3, {{1, 3, 2}});
    const Perm t12 = Perm::from_cycles(3, {{1, 2}});
    const Perm t13 = Perm::from_cycles(3, {{1, 3}});
    const Perm id3 = Perm::identity(3);
    const Shape sh({3, 3}, 3);
    const std::vector<std::pair<Isotopism, Isotopism>> pairs = {
        {Isotopism(sh, {r3, r3}, id3), Isotopism(sh, {r3b, r3b}, id3)},
        {Isotopism(sh, {t12, t12}, id3), Isotopism(sh, {t13, t13}, id3)},
        {Isotopism(sh, {r3, r3}, r3), Isotopism(sh, {r3b, r3}, r3b)}};
    bool ok = true;
    std::string got;
    int k = 0;
    for (const auto& [t1, t2] : pairs) {
      ++k;
      const bool conjugate = conjugation_witness(t1, t2).has_value();
      const auto c1 = detail::count_fixed_boards(t1);
      const auto c2 = detail::count_fixed_boards(t2);
      ok = ok && conjugate && c1 == c2;
      got += "pair" + std::to_string(k) + ":" + std::to_string(c1) + "/" + std::to_string(c2) +
             (conjugate ? "" : "(not conjugate!)") + " ";
    }
    r.expected = "equal fixed-board censuses across 3 conjugate pairs on a 3x3 board";
    r.actual = got;
    r.pass = ok;
  }});

  checks.push_back({"playout-colourability-suite", true, [](CheckResult& r) {
    std::mt19937 rng(20240811);
    const int playouts = 10000;
    long long states_checked = 0, violations = 0;
    for (int p = 0; p < playouts; ++p) {
      const Isotopism theta = detail::random_extendable(rng);
      const int n = theta.shape().symbols;
      const int colours = n + static_cast<int>(rng() % std::max(1, std::min(8, n + 2) - n + 1));
      const int a = 1 + static_cast<int>(rng() % 2);
      const int b = 1 + static_cast<int>(rng() % 2);
      const Player f = rng() % 2 ? Player::Alice : Player::Bob;
      const HammingGame game({theta, colours, a, b, f, Variant::Standard});
      const HammingGame widened({theta, colours + 1, a, b, f, Variant::Standard});
      GameState s = game.initial_state();
      while (!game.terminal_status(s)) {
        const auto moves = game.legal_moves(s);
        s = game.apply_move(s, moves[rng() % moves.size()]);
        if (!game.symbol_free_orbit_exists(s.board)) break;
        ++states_checked;
        // Every empty cell stays colourable with one spare colour available,
        // and every unused colour still fits somewhere.
        GameState ws{detail::widen_palette(s.board, colours + 1), s.to_move, s.remaining};
        std::uint32_t used = 0, accepted = 0;
        bool empty_ok = true;
        for (int idx = 0; idx < game.cell_count(); ++idx) {
          const int v = s.board.at_index(idx);
          if (v != 0) {
            used |= 1u << (v - 1);
            continue;
          }
          if (widened.legal_colour_mask(ws, idx) == 0) empty_ok = false;
          accepted |= game.legal_colour_mask(s, idx);
        }
        const std::uint32_t unused = ((1u << colours) - 1) & ~used;
        if (!empty_ok || (unused & ~accepted)) ++violations;
      }
    }
    r.expected = "0 violations over 10000 random playouts";
    r.actual = std::to_string(states_checked) + " states checked, " + std::to_string(violations) +
               " violations";
    r.pass = violations == 0 && states_checked > 0;
  }});

  return checks;
}

inline int run_acceptance(bool quick_only, std::ostream& os, bool as_json = false) {
  const auto checks = acceptance_checks();
  int failures = 0;
  int index = 0;
  std::ostringstream json_out;
  json_out << "[";
  bool first = true;
  for (const auto& check : checks) {
    ++index;
    if (quick_only && !check.quick) {
      if (!as_json)
        os << "[" << std::setw(2) << index << "/" << checks.size() << "] SKIP " << check.name
           << " (full scale only)\n";
      continue;
    }
    CheckResult result;
    result.name = check.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      check.run(result);
    } catch (const std::exception& e) {
      result.pass = false;
      result.actual = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!result.pass) ++failures;
    if (as_json) {
      if (!first) json_out << ",";
      first = false;
      json_out << "{\"name\":\"" << result.name << "\",\"pass\":" << (result.pass ? "true" : "false")
               << ",\"expected\":\"" << result.expected << "\",\"actual\":\"" << result.actual
               << "\",\"seconds\":" << result.seconds << "}";
    } else {
      os << "[" << std::setw(2) << index << "/" << checks.size() << "] "
         << (result.pass ? "PASS" : "FAIL") << " " << check.name << "  (" << std::fixed
         << std::setprecision(2) << result.seconds << "s)\n"
         << "        expected: " << result.expected << "\n"
         << "        actual:   " << result.actual << "\n";
    }
  }
  if (as_json)
    os << json_out.str() << "]\n";
  else
    os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
       << "\n";
  return failures;
}

}  // namespace lgl::verify

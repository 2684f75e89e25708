#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "lgl/game.hpp"
#include "lgl/graph.hpp"
#include "lgl/isotopism.hpp"

namespace lgl {

using json = nlohmann::json;

// --- boards ----------------------------------------------------------------
// {"dims":[3,4],"n":4,"palette":4,"rows":[[1,0,4,0],...]} with 0 = empty;
// d != 2 uses a flat "cells" list in row-major order instead of "rows".

inline json board_to_json(const Board& b) {
  json j;
  j["dims"] = b.shape().dims;
  j["n"] = b.shape().symbols;
  j["palette"] = b.palette();
  if (b.dim() == 2) {
    json rows = json::array();
    const int n1 = b.shape().dims[0], n2 = b.shape().dims[1];
    for (int r = 1; r <= n1; ++r) {
      json row = json::array();
      for (int c = 1; c <= n2; ++c) row.push_back(b.at({r, c}));
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
  } else {
    json cells = json::array();
    for (int idx = 0; idx < b.cell_count(); ++idx) cells.push_back(b.at_index(idx));
    j["cells"] = std::move(cells);
  }
  return j;
}

inline Board board_from_json(const json& j) {
  Shape shape(j.at("dims").get<std::vector<int>>(), j.at("n").get<int>());
  const int palette = j.contains("palette") ? j.at("palette").get<int>() : shape.symbols;
  Board b(shape, palette);
  if (j.contains("rows")) {
    if (shape.dim() != 2) throw std::invalid_argument("board json: \"rows\" requires d = 2");
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != shape.dims[0])
      throw std::invalid_argument("board json: row count mismatch");
    for (int r = 1; r <= shape.dims[0]; ++r) {
      const auto& row = rows[r - 1];
      if (static_cast<int>(row.size()) != shape.dims[1])
        throw std::invalid_argument("board json: row length mismatch");
      for (int c = 1; c <= shape.dims[1]; ++c) {
        const int s = row[c - 1].get<int>();
        if (s != 0) b.set({r, c}, s);
      }
    }
  } else {
    const auto cells = j.at("cells").get<std::vector<int>>();
    if (static_cast<long long>(cells.size()) != shape.cell_count())
      throw std::invalid_argument("board json: cell count mismatch");
    for (std::size_t idx = 0; idx < cells.size(); ++idx)
      if (cells[idx] != 0) b.set_index(static_cast<int>(idx), cells[idx]);
  }
  return b;
}

// --- isotopisms --------------------------------------------------------------
// {"dims":[3,4],"n":4,"perms":[[[1,2]],[[1,2,3,4]],[[1,2,3,4]]]}; the last
// permutation acts on symbols, cycles list their elements, omitted elements
// are fixed. "sym_size" widens the symbol permutation (extensions).

inline json isotopism_to_json(const Isotopism& t) {
  json j;
  j["dims"] = t.shape().dims;
  j["n"] = t.shape().symbols;
  if (t.sym_size() != t.shape().symbols) j["sym_size"] = t.sym_size();
  json perms = json::array();
  for (int k = 0; k < t.dim(); ++k) perms.push_back(t.row_perm(k).cycles(false));
  perms.push_back(t.sym_perm().cycles(false));
  j["perms"] = std::move(perms);
  return j;
}

inline Isotopism isotopism_from_json(const json& j) {
  const auto dims = j.at("dims").get<std::vector<int>>();
  const int n = j.at("n").get<int>();
  const int sym_size = j.contains("sym_size") ? j.at("sym_size").get<int>() : n;
  const auto& perms = j.at("perms");
  if (static_cast<int>(perms.size()) != static_cast<int>(dims.size()) + 1)
    throw std::invalid_argument("isotopism json: need one permutation per dimension plus symbols");
  std::vector<Perm> rows;
  for (std::size_t k = 0; k < dims.size(); ++k)
    rows.push_back(Perm::from_cycles(dims[k], perms[k].get<std::vector<std::vector<int>>>()));
  Perm sym = Perm::from_cycles(sym_size, perms.back().get<std::vector<std::vector<int>>>());
  return Isotopism(Shape(dims, n), std::move(rows), std::move(sym));
}

// --- graphs ------------------------------------------------------------------
// {"n":4,"edges":[[1,2],...],"weights":[2,2,2,2]} with 1-based vertices.

inline json graph_to_json(const WeightedGraph& g) {
  json j;
  j["n"] = g.size();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  j["edges"] = std::move(edges);
  j["weights"] = g.weights();
  return j;
}

inline WeightedGraph graph_from_json(const json& j) {
  WeightedGraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (e.size() != 2) throw std::invalid_argument("graph json: edges are vertex pairs");
    g.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  if (j.contains("weights")) {
    const auto w = j.at("weights").get<std::vector<int>>();
    if (static_cast<int>(w.size()) != g.size())
      throw std::invalid_argument("graph json: weight count mismatch");
    for (int v = 0; v < g.size(); ++v) g.set_weight(v, w[v]);
  }
  return g;
}

inline std::string graph_to_dot(const WeightedGraph& g, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  for (int v = 0; v < g.size(); ++v)
    out += "  v" + std::to_string(v + 1) + " [label=\"" + std::to_string(v + 1) + " (w=" +
           std::to_string(g.weight(v)) + ")\"];\n";
  for (auto [u, v] : g.edges())
    out += "  v" + std::to_string(u + 1) + " -- v" + std::to_string(v + 1) + ";\n";
  return out + "}\n";
}

// --- moves -------------------------------------------------------------------
// Text form "(i1,...,id)=s".

inline std::string format_move(const Shape& sh, const Move& m) {
  const Cell c = sh.cell_at(m.cell);
  std::string out = "(";
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(c[j]);
  }
  return out + ")=" + std::to_string(m.symbol);
}

inline Move parse_move(const Shape& sh, std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("move: expected integer");
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return v;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '(') throw std::invalid_argument("move: expected '('");
  ++i;
  Cell c;
  while (true) {
    c.push_back(parse_int());
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  skip_ws();
  if (i >= text.size() || text[i] != ')') throw std::invalid_argument("move: expected ')'");
  ++i;
  skip_ws();
  if (i >= text.size() || text[i] != '=') throw std::invalid_argument("move: expected '='");
  ++i;
  const int symbol = parse_int();
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("move: trailing input");
  if (!sh.contains(c)) throw std::invalid_argument("move: cell out of range");
  return {sh.index_of(c), symbol};
}

// --- transcripts ---------------------------------------------------------------

inline json transcript_to_json(const HammingGame& game,
                               const std::vector<std::pair<Player, Move>>& moves) {
  json j = json::array();
  for (const auto& [player, move] : moves) {
    json e;
    e["player"] = player == Player::Alice ? "A" : "B";
    e["cell"] = game.shape().cell_at(move.cell);
    e["symbol"] = move.symbol;
    e["text"] = format_move(game.shape(), move);
    j.push_back(std::move(e));
  }
  return j;
}

}  // namespace lgl

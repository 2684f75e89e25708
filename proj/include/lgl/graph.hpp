#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgl/isotopism.hpp"

namespace lgl {

/// Simple vertex-weighted graph with sorted adjacency lists.
class WeightedGraph {
public:
  WeightedGraph() = default;

  explicit WeightedGraph(int n, int weight = 1) : adj_(n), weights_(n, weight) {
    if (n < 1) throw std::invalid_argument("WeightedGraph: need at least one vertex");
    if (weight < 1) throw std::invalid_argument("WeightedGraph: weights must be positive");
  }

  int size() const { return static_cast<int>(adj_.size()); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("WeightedGraph: self-loops are not allowed");
    if (adjacent(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  }

  bool adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  int max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
  }

  int weight(int v) const { return weights_[v]; }

  void set_weight(int v, int w) {
    check_vertex(v);
    if (w < 1) throw std::invalid_argument("WeightedGraph: weights must be positive");
    weights_[v] = w;
  }

  const std::vector<int>& weights() const { return weights_; }

  long long total_weight() const {
    long long t = 0;
    for (int w : weights_) t += w;
    return t;
  }

  long long edge_count() const {
    long long e = 0;
    for (const auto& a : adj_) e += static_cast<long long>(a.size());
    return e / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("WeightedGraph: vertex out of range");
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> weights_;
};

inline WeightedGraph complete_graph(int n) {
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline WeightedGraph complete_bipartite(int a, int b) {
  WeightedGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline WeightedGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least three vertices");
  WeightedGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline WeightedGraph path_graph(int n) {
  WeightedGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// Product vertex (u1, u2) maps to u1 * |G2| + u2; product weights start at 1.
inline WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2) {
  WeightedGraph g(g1.size() * g2.size());
  for (int u1 = 0; u1 < g1.size(); ++u1)
    for (int u2 = 0; u2 < g2.size(); ++u2) {
      const int u = u1 * g2.size() + u2;
      for (int v2 : g2.neighbours(u2)) g.add_edge(u, u1 * g2.size() + v2);
      for (int v1 : g1.neighbours(u1)) g.add_edge(u, v1 * g2.size() + u2);
    }
  return g;
}

inline WeightedGraph strong_product(const WeightedGraph& g1, const WeightedGraph& g2) {
  WeightedGraph g = cartesian_product(g1, g2);
  for (int u1 = 0; u1 < g1.size(); ++u1)
    for (int u2 = 0; u2 < g2.size(); ++u2)
      for (int v1 : g1.neighbours(u1))
        for (int v2 : g2.neighbours(u2)) g.add_edge(u1 * g2.size() + u2, v1 * g2.size() + v2);
  return g;
}

// Vertices are cells of the box [n_1] x ... x [n_d]; two vertices are adjacent
// iff they differ in exactly one coordinate.
inline WeightedGraph hamming_graph(const std::vector<int>& dims) {
  Shape sh(dims, 1);
  const int n = static_cast<int>(sh.cell_count());
  WeightedGraph g(n);
  for (int idx = 0; idx < n; ++idx) {
    Cell c = sh.cell_at(idx);
    for (int j = 0; j < sh.dim(); ++j) {
      const int keep = c[j];
      for (int v = keep + 1; v <= sh.dims[j]; ++v) {
        c[j] = v;
        g.add_edge(idx, sh.index_of(c));
      }
      c[j] = keep;
    }
  }
  return g;
}

// d-dimensional hypercube plus an edge between each antipodal vertex pair.
inline WeightedGraph hypercube_plus_diag(int d) {
  if (d < 1) throw std::invalid_argument("hypercube_plus_diag: dimension must be positive");
  const int n = 1 << d;
  WeightedGraph g(n);
  for (int x = 0; x < n; ++x) {
    for (int j = 0; j < d; ++j)
      if (!(x & (1 << j))) g.add_edge(x, x | (1 << j));
    const int anti = (n - 1) ^ x;
    if (x < anti) g.add_edge(x, anti);
  }
  return g;
}

/// Copy of the graph with every vertex weight set to l.
inline WeightedGraph replicate(const WeightedGraph& g, int l) {
  WeightedGraph out = g;
  for (int v = 0; v < out.size(); ++v) out.set_weight(v, l);
  return out;
}

// One vertex per cell orbit, weighted by orbit size; orbits are adjacent iff
// some cell of one is Hamming-adjacent to some cell of the other. Intra-orbit
// adjacencies are dropped: the contraction graph carries no loops.
inline WeightedGraph build_contraction_graph(const Isotopism& t) {
  if (!t.is_principal())
    throw std::invalid_argument("build_contraction_graph: isotopism must be principal");
  if (!is_feasible(t))
    throw std::invalid_argument("build_contraction_graph: isotopism must be feasible");
  const OrbitPartition part = orbit_partition(t);
  WeightedGraph g(part.size());
  for (int o = 0; o < part.size(); ++o) g.set_weight(o, static_cast<int>(part.orbits[o].size()));
  const Shape& sh = t.shape();
  for (int idx = 0; idx < static_cast<int>(sh.cell_count()); ++idx) {
    Cell c = sh.cell_at(idx);
    for (int j = 0; j < sh.dim(); ++j) {
      const int keep = c[j];
      for (int v = keep + 1; v <= sh.dims[j]; ++v) {
        c[j] = v;
        const int o1 = part.orbit_of[idx];
        const int o2 = part.orbit_of[sh.index_of(c)];
        if (o1 != o2) g.add_edge(o1, o2);
      }
      c[j] = keep;
    }
  }
  return g;
}

// Brute-force weight- and adjacency-preserving bijection search with
// (degree, weight) signature pruning. Intended for reference graphs only.
inline bool is_isomorphic(const WeightedGraph& g1, const WeightedGraph& g2) {
  if (g1.size() > 16 || g2.size() > 16)
    throw std::invalid_argument("is_isomorphic: size limit of 16 vertices exceeded");
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return false;

  auto signature = [](const WeightedGraph& g) {
    std::vector<std::pair<int, int>> sig;
    for (int v = 0; v < g.size(); ++v) sig.emplace_back(g.degree(v), g.weight(v));
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  if (signature(g1) != signature(g2)) return false;

  std::vector<int> order(g1.size());
  for (int v = 0; v < g1.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g1.degree(a) > g1.degree(b); });

  std::vector<int> map(g1.size(), -1);
  std::vector<char> used(g2.size(), 0);

  auto backtrack = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const int u = order[pos];
    for (int w = 0; w < g2.size(); ++w) {
      if (used[w] || g1.degree(u) != g2.degree(w) || g1.weight(u) != g2.weight(w)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < pos && ok; ++k) {
        const int prev = order[k];
        if (g1.adjacent(u, prev) != g2.adjacent(w, map[prev])) ok = false;
      }
      if (!ok) continue;
      map[u] = w;
      used[w] = 1;
      if (self(self, pos + 1)) return true;
      map[u] = -1;
      used[w] = 0;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

// ---------------------------------------------------------------------------
// Reference-graph expressions: K_n, C_n, P_n, bipartite(a,b),
// Hamming(n1,...,nd), cartesian(G1,G2), strong(G1,G2), hypercube_plus_diag(d),
// replicate(G,l).

namespace detail {

struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw std::invalid_argument(std::string("graph expression: expected '") + c + "'");
  }

  int parse_int() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("graph expression: expected integer");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return v;
  }

  std::string parse_name() {
    skip_ws();
    std::string name;
    while (pos < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      name += text[pos++];
    if (name.empty()) throw std::invalid_argument("graph expression: expected name");
    return name;
  }

  WeightedGraph parse_expr() {
    const std::string name = parse_name();
    if (name == "K_" || name == "K") return complete_graph(parse_int());
    if (name == "C_" || name == "C") return cycle_graph(parse_int());
    if (name == "P_" || name == "P") return path_graph(parse_int());
    if (name == "bipartite") {
      expect('(');
      const int a = parse_int();
      expect(',');
      const int b = parse_int();
      expect(')');
      return complete_bipartite(a, b);
    }
    if (name == "Hamming" || name == "hamming") {
      expect('(');
      std::vector<int> dims;
      dims.push_back(parse_int());
      while (eat(',')) dims.push_back(parse_int());
      expect(')');
      return hamming_graph(dims);
    }
    if (name == "cartesian" || name == "strong") {
      expect('(');
      WeightedGraph a = parse_expr();
      expect(',');
      WeightedGraph b = parse_expr();
      expect(')');
      return name == "cartesian" ? cartesian_product(a, b) : strong_product(a, b);
    }
    if (name == "hypercube_plus_diag") {
      expect('(');
      const int d = parse_int();
      expect(')');
      return hypercube_plus_diag(d);
    }
    if (name == "replicate") {
      expect('(');
      WeightedGraph g = parse_expr();
      expect(',');
      const int l = parse_int();
      expect(')');
      return replicate(g, l);
    }
    throw std::invalid_argument("graph expression: unknown constructor '" + name + "'");
  }
};

}  // namespace detail

inline WeightedGraph parse_graph_expression(std::string_view text) {
  detail::ExprParser p{text};
  WeightedGraph g = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw std::invalid_argument("graph expression: trailing input");
  return g;
}

}  // namespace lgl

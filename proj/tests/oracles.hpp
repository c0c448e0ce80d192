#pragma once

// Brute-force reference computations for tests. None of these call the
// library's solvers; they only use the plain data types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "hw/core.hpp"

namespace oracle {

using hw::Graph;
using hw::Hypergraph;
using hw::Rational;
using hw::VertexSet;

// ------------------------------------------------------------ generators

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

// Random hypergraph without isolated vertices; arity in [1, max_arity].
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m, int max_arity) {
  std::vector<VertexSet> edges(m);
  for (int v = 0; v < n; ++v) edges[below(rng, m)].push_back(v);
  for (auto& e : edges) {
    int target = 1 + static_cast<int>(below(rng, max_arity));
    while (static_cast<int>(e.size()) < std::min(target, n)) {
      int v = static_cast<int>(below(rng, n));
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
  }
  return Hypergraph(n, edges);
}

inline Graph random_graph(std::mt19937_64& rng, int n, int percent) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(below(rng, 100)) < percent) g.add_edge(u, v);
  return g;
}

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

// Every labeled graph on n vertices.
inline std::vector<Graph> all_graphs(int n) {
  const auto pairs = all_pairs(n);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

// Smallest edge bitstring over all vertex relabelings.
inline std::uint64_t canonical_form(const Graph& g) {
  const int n = g.num_vertices();
  const auto pairs = all_pairs(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (g.adjacent(perm[pairs[i].first], perm[pairs[i].second])) code |= std::uint64_t{1} << i;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One representative per isomorphism class, in enumeration order.
inline std::vector<Graph> graphs_up_to_isomorphism(int n, const std::function<bool(const Graph&)>& keep) {
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (keep(g) && seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  return out;
}

// -------------------------------------------------------------- orderings

// Bags (as vertex bitmasks) produced by eliminating vertices in order.
inline std::vector<std::uint32_t> elimination_bags(const Graph& g, const std::vector<int>& order) {
  const int n = g.num_vertices();
  std::vector<std::uint32_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) adj[u] |= 1u << v;
  std::vector<std::uint32_t> bags;
  std::uint32_t gone = 0;
  for (int v : order) {
    const std::uint32_t nb = adj[v] & ~gone;
    bags.push_back(nb | 1u << v);
    for (int a = 0; a < n; ++a)
      if (nb >> a & 1) adj[a] |= nb & ~(1u << a);
    gone |= 1u << v;
  }
  return bags;
}

// min over all n! orderings of max bag cost.
template <class Cost, class BagCost>
Cost min_over_orderings(const Graph& g, BagCost bag_cost) {
  std::vector<int> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::optional<Cost> best;
  do {
    Cost worst = 0;
    for (std::uint32_t bag : elimination_bags(g, order)) worst = std::max(worst, bag_cost(bag));
    if (!best || worst < *best) best = worst;
  } while (std::next_permutation(order.begin(), order.end()));
  return best.value_or(Cost(0));
}

inline int brute_treewidth(const Graph& g) {
  if (g.num_vertices() == 0) return -1;
  return min_over_orderings<int>(g, [](std::uint32_t bag) { return std::popcount(bag) - 1; });
}

// ---------------------------------------------------------------- covers

inline VertexSet mask_vertices(std::uint32_t mask) {
  VertexSet s;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) s.push_back(v);
  return s;
}

// Smallest number of hyperedges whose union contains s; -1 if impossible.
inline int brute_integral_cover(const Hypergraph& h, const VertexSet& s) {
  const int m = h.num_edges();
  int best = -1;
  for (std::uint32_t pick = 0; pick < (1u << m); ++pick) {
    std::set<int> covered;
    for (int e = 0; e < m; ++e)
      if (pick >> e & 1) covered.insert(h.edge(e).begin(), h.edge(e).end());
    if (std::all_of(s.begin(), s.end(), [&](int v) { return covered.count(v) > 0; }))
      if (best < 0 || std::popcount(pick) < best) best = std::popcount(pick);
  }
  return best;
}

// Solves a square rational system; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Minimum fractional cover of s by vertex enumeration of the polytope
// {0 <= x <= 1, sum over edges containing v of x >= 1 for v in s}.
inline Rational brute_fractional_cover(const Hypergraph& h, const VertexSet& s) {
  const int m = h.num_edges();
  if (s.empty()) return 0;
  // Constraint rows: a . x >= rhs.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (int v : s) {
    std::vector<Rational> row(m, 0);
    for (int e = 0; e < m; ++e)
      if (std::binary_search(h.edge(e).begin(), h.edge(e).end(), v)) row[e] = 1;
    rows.push_back(row);
    rhs.push_back(1);
  }
  for (int e = 0; e < m; ++e) {
    std::vector<Rational> lo(m, 0), hi(m, 0);
    lo[e] = 1;
    hi[e] = -1;
    rows.push_back(lo);
    rhs.push_back(0);
    rows.push_back(hi);
    rhs.push_back(-1);
  }
  const int total = static_cast<int>(rows.size());
  std::optional<Rational> best;
  std::vector<int> pick(m);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == m) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (int i : pick) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
      auto x = solve_square(a, b);
      if (!x) return;
      for (int r = 0; r < total; ++r) {
        Rational lhs = 0;
        for (int e = 0; e < m; ++e) lhs += rows[r][e] * (*x)[e];
        if (lhs < rhs[r]) return;
      }
      Rational value = std::accumulate(x->begin(), x->end(), Rational(0));
      if (!best || value < *best) best = value;
      return;
    }
    for (int i = start; i < total; ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  return best.value();
}

// fhw or ghw by enumerating every elimination ordering of the primal graph.
inline Rational brute_fwidth(const Hypergraph& h, bool fractional) {
  Graph primal(h.num_vertices());
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) primal.add_edge(e[i], e[j]);
  std::map<std::uint32_t, Rational> memo;
  return min_over_orderings<Rational>(primal, [&](std::uint32_t bag) {
    auto it = memo.find(bag);
    if (it != memo.end()) return it->second;
    const VertexSet s = mask_vertices(bag);
    Rational c = fractional ? brute_fractional_cover(h, s) : Rational(brute_integral_cover(h, s));
    memo.emplace(bag, c);
    return c;
  });
}

// ------------------------------------------------------------------ game

// Concrete marshals-and-robbers game on positions (marshal edge set,
// robber vertex); least fixpoint of the marshals' winning region.
inline bool concrete_marshals_win(const Hypergraph& h, int k) {
  const int n = h.num_vertices(), m = h.num_edges();
  std::vector<std::uint32_t> blocked(1u << m, 0);
  for (std::uint32_t g = 0; g < (1u << m); ++g)
    for (int e = 0; e < m; ++e)
      if (g >> e & 1)
        for (int v : h.edge(e)) blocked[g] |= 1u << v;
  auto reach = [&](int v, std::uint32_t avoid) {
    std::uint32_t seen = 1u << v;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : h.incident_edges(x))
        for (int w : h.edge(e))
          if (!(seen >> w & 1) && !(avoid >> w & 1)) {
            seen |= 1u << w;
            stack.push_back(w);
          }
    }
    return seen;
  };
  std::vector<std::uint32_t> moves;
  for (std::uint32_t g = 0; g < (1u << m); ++g)
    if (std::popcount(g) <= k) moves.push_back(g);
  // won[g][v]
  std::vector<std::vector<bool>> won(1u << m, std::vector<bool>(n, false));
  for (bool changed = true; changed;) {
    changed = false;
    auto snapshot = won;
    for (std::uint32_t g : moves)
      for (int v = 0; v < n; ++v) {
        if (won[g][v] || (blocked[g] >> v & 1)) continue;
        for (std::uint32_t g2 : moves) {
          const std::uint32_t region = reach(v, blocked[g] & blocked[g2]);
          bool all = true;
          for (int w = 0; w < n && all; ++w)
            if ((region >> w & 1) && !(blocked[g2] >> w & 1) && !snapshot[g2][w]) all = false;
          if (all) {
            won[g][v] = true;
            changed = true;
            break;
          }
        }
      }
  }
  for (int v = 0; v < n; ++v)
    if (!won[0][v]) return false;
  return true;
}

// ------------------------------------------------------------- brambles

// Every nonempty hyperedge-connected vertex set of h.
inline std::vector<VertexSet> connected_sets(const Hypergraph& h) {
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 1; mask < (1u << h.num_vertices()); ++mask) {
    VertexSet s = mask_vertices(mask);
    if (hw::is_connected_in(h, s)) out.push_back(s);
  }
  return out;
}

inline bool touching(const Hypergraph& h, const VertexSet& a, const VertexSet& b) {
  if (!hw::set_intersection(a, b).empty()) return true;
  for (const auto& e : h.edges())
    if (!hw::set_intersection(e, a).empty() && !hw::set_intersection(e, b).empty()) return true;
  return false;
}

// Random hyperbramble: greedily add random connected sets touching all
// previous ones.
inline std::vector<VertexSet> random_hyperbramble(std::mt19937_64& rng, const Hypergraph& h, int tries) {
  const auto pool = connected_sets(h);
  std::vector<VertexSet> sets;
  for (int i = 0; i < tries; ++i) {
    const VertexSet& s = pool[rng() % pool.size()];
    bool ok = std::find(sets.begin(), sets.end(), s) == sets.end();
    for (const auto& t : sets) ok = ok && touching(h, s, t);
    if (ok) sets.push_back(s);
  }
  return sets;
}

// Least fractional cover over all vertex sets hitting every member.
inline Rational brute_hyperbramble_order(const Hypergraph& h, const std::vector<VertexSet>& family) {
  Rational best = -1;
  for (std::uint32_t mask = 1; mask < (1u << h.num_vertices()); ++mask) {
    const VertexSet t = mask_vertices(mask);
    bool hits = true;
    for (const auto& s : family) hits = hits && !hw::set_intersection(s, t).empty();
    if (!hits) continue;
    const Rational c = brute_fractional_cover(h, t);
    if (best < 0 || c < best) best = c;
  }
  return best;
}

}  // namespace oracle

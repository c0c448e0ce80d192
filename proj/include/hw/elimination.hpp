#pragma once

// Elimination-ordering kernels shared by exact treewidth and the exact
// f-width oracle.
//
// For an ordering of V(G), the bag of v is v together with its neighbors in
// the elimination graph at the moment v is eliminated. Minimizing the
// maximum bag cost over all orderings gives treewidth + 1 for cost = |bag|
// and ghw / fhw for cost = integral / fractional cover of the bag when G is
// the primal graph. Bag costs must be monotone under inclusion.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hw/bits.hpp"
#include "hw/core.hpp"
#include "hw/errors.hpp"
#include "hw/exec.hpp"

namespace hw {

template <class Cost>
struct OrderingSolution {
  Cost value{};
  std::vector<int> order;  // elimination order, first eliminated first
};

enum class GreedyRule { min_fill, min_degree };

// Greedy ordering; ties go to the smallest vertex id.
std::vector<int> greedy_ordering(const Graph& g, GreedyRule rule);

// Bag of every vertex under the given elimination order, indexed by vertex.
std::vector<VertexSet> elimination_bags(const Graph& g, std::span<const int> order);

// Parent of each vertex's bag in the elimination tree: the earliest
// eliminated vertex among its later neighbors, or -1 for component roots.
std::vector<int> elimination_parents(const Graph& g, std::span<const int> order,
                                     const std::vector<VertexSet>& bags);

// Largest vertex count accepted by the subset DP kernel.
inline constexpr int kSubsetDpMaxVertices = 24;

std::vector<std::uint32_t> adjacency_masks(const Graph& g);

// Bag of v after the vertices in `eliminated` are gone.
inline std::uint32_t elimination_bag_mask(std::span<const std::uint32_t> adj,
                                          std::uint32_t eliminated, int v) {
  const std::uint32_t self = std::uint32_t{1} << v;
  std::uint32_t seen = self, todo = self, nbr = 0;
  while (todo) {
    const int u = std::countr_zero(todo);
    todo &= todo - 1;
    nbr |= adj[u];
    const std::uint32_t next = adj[u] & eliminated & ~seen;
    seen |= next;
    todo |= next;
  }
  return (nbr & ~eliminated) | self;
}

// All masks over n bits grouped by popcount, ascending within a group.
std::vector<std::vector<std::uint32_t>> masks_by_popcount(int n);

// Exact minimum over all orderings of the maximum bag cost by dynamic
// programming over vertex subsets, layer by layer. subset_cost[mask] is the
// cost of bag `mask`. Within a layer every subset is independent, so the
// parallel variant splits the layer across threads; the serial variant is
// the reference. Ties pick the smallest last-eliminated vertex, so both
// variants return identical orderings.
template <class Cost>
OrderingSolution<Cost> min_max_ordering_dp(const Graph& g, std::span<const Cost> subset_cost,
                                           Exec exec) {
  const int n = g.num_vertices();
  if (n > kSubsetDpMaxVertices) throw LimitExceeded("subset DP supports at most 24 vertices");
  if (subset_cost.size() != (std::size_t{1} << n))
    throw InvalidInput("subset cost table has the wrong size");
  OrderingSolution<Cost> out;
  if (n == 0) return out;
  const auto adj = adjacency_masks(g);
  const std::size_t total = std::size_t{1} << n;
  std::vector<Cost> best(total);
  std::vector<std::int8_t> last(total, -1);
  const auto layers = masks_by_popcount(n);
  for (int size = 1; size <= n; ++size) {
    const auto& layer = layers[size];
    for_each_index(exec, static_cast<std::int64_t>(layer.size()), [&](std::int64_t idx) {
      const std::uint32_t s = layer[idx];
      bool have = false;
      Cost value{};
      int choice = -1;
      for (std::uint32_t rest = s; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const std::uint32_t before = s & ~(std::uint32_t{1} << v);
        const Cost& bag_cost = subset_cost[elimination_bag_mask(adj, before, v)];
        const Cost& candidate = best[before] < bag_cost ? bag_cost : best[before];
        if (!have || candidate < value) {
          value = candidate;
          choice = v;
          have = true;
        }
      }
      best[s] = value;
      last[s] = static_cast<std::int8_t>(choice);
    });
  }
  std::uint32_t s = static_cast<std::uint32_t>(total - 1);
  out.value = best[s];
  out.order.resize(n);
  for (int pos = n - 1; pos >= 0; --pos) {
    const int v = last[s];
    out.order[pos] = v;
    s &= ~(std::uint32_t{1} << v);
  }
  return out;
}

// Exact branch and bound over elimination graphs, memoized on the set of
// eliminated vertices. A simplicial vertex is always eliminated first: its
// neighborhood is a clique present in every triangulation, and deleting it
// cannot raise the optimum of the rest. Suited to large sparse instances
// where the subset DP is out of reach. `incumbent` seeds the bound.
template <class Cost, class BagCostFn>
OrderingSolution<Cost> min_max_ordering_search(const Graph& g, BagCostFn&& bag_cost,
                                               const OrderingSolution<Cost>& incumbent,
                                               std::int64_t state_limit = 5'000'000) {
  const int n = g.num_vertices();
  struct Entry {
    Cost value;
    bool exact;
    int choice;
  };
  struct Solver {
    int n;
    BagCostFn& bag_cost;
    std::int64_t state_limit;
    std::unordered_map<Bits, Entry, BitsHash> memo;

    // Returns the exact optimum of the remaining graph if it is < bound,
    // otherwise some lower bound >= bound.
    std::pair<Cost, bool> solve(const Bits& eliminated, const std::vector<Bits>& adj,
                                const Cost& bound) {
      if (eliminated.count() == n) return {Cost{}, true};
      if (auto it = memo.find(eliminated); it != memo.end()) {
        if (it->second.exact || !(it->second.value < bound)) return {it->second.value, it->second.exact};
      }
      if (static_cast<std::int64_t>(memo.size()) > state_limit)
        throw LimitExceeded("elimination search exceeded its state limit");

      auto bag_of = [&](int v) {
        Bits bag = adj[v];
        bag.set(v);
        return bag;
      };
      auto eliminate = [&](int v) {
        std::vector<Bits> next = adj;
        adj[v].for_each([&](int a) {
          next[a] |= adj[v];
          next[a].reset(a);
          next[a].reset(v);
        });
        next[v] = Bits(n);
        return next;
      };

      int forced = -1;
      for (int v = 0; v < n && forced < 0; ++v) {
        if (eliminated.test(v)) continue;
        bool simplicial = true;
        adj[v].for_each([&](int a) {
          if (!simplicial) return;
          Bits missing = adj[v] - adj[a];
          missing.reset(a);
          simplicial = missing.none();
        });
        if (simplicial) forced = v;
      }

      Cost best_value{};
      bool found = false;
      Cost lower{};
      bool have_lower = false;
      int best_choice = -1;
      auto consider = [&](int v) {
        const Cost c = bag_cost(bag_of(v));
        const Cost& limit = found ? best_value : bound;
        if (!(c < limit)) {
          if (!have_lower || c < lower) lower = c;
          have_lower = true;
          return;
        }
        Bits next_elim = eliminated;
        next_elim.set(v);
        auto [sub, exact] = solve(next_elim, eliminate(v), limit);
        const Cost total = sub < c ? c : sub;
        if (exact && total < limit) {
          best_value = total;
          best_choice = v;
          found = true;
        } else if (!have_lower || total < lower) {
          lower = total;
          have_lower = true;
        }
      };
      if (forced >= 0) {
        consider(forced);
      } else {
        for (int v = 0; v < n; ++v)
          if (!eliminated.test(v)) consider(v);
      }
      Entry entry = found ? Entry{best_value, true, best_choice} : Entry{lower, false, -1};
      memo.insert_or_assign(eliminated, entry);
      return {entry.value, entry.exact};
    }
  };

  OrderingSolution<Cost> out = incumbent;
  if (n == 0) return out;
  std::vector<Bits> adj(n, Bits(n));
  for (auto [u, v] : g.edges()) {
    adj[u].set(v);
    adj[v].set(u);
  }
  Solver solver{n, bag_cost, state_limit, {}};
  const Bits none(n);
  auto [value, exact] = solver.solve(none, adj, incumbent.value);
  if (!exact) return out;  // the incumbent is optimal
  out.value = value;
  out.order.clear();
  Bits eliminated = none;
  for (int step = 0; step < n; ++step) {
    const int v = solver.memo.at(eliminated).choice;
    out.order.push_back(v);
    eliminated.set(v);
  }
  return out;
}

// Maximum bag cost of an explicit ordering.
template <class Cost, class BagCostFn>
Cost ordering_cost(const Graph& g, std::span<const int> order, BagCostFn&& bag_cost) {
  Cost worst{};
  for (const auto& bag : elimination_bags(g, order)) {
    Cost c = bag_cost(Bits::of(g.num_vertices(), bag));
    if (worst < c) worst = c;
  }
  return worst;
}

}  // namespace hw

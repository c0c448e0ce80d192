#include "hw/elimination.hpp"

#include <limits>

namespace hw {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  if (g.num_vertices() > 32) throw LimitExceeded("bitmask kernels support at most 32 vertices");
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  return adj;
}

std::vector<std::vector<std::uint32_t>> masks_by_popcount(int n) {
  std::vector<std::vector<std::uint32_t>> layers(n + 1);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m)
    layers[std::popcount(m)].push_back(static_cast<std::uint32_t>(m));
  return layers;
}

std::vector<int> greedy_ordering(const Graph& g, GreedyRule rule) {
  const int n = g.num_vertices();
  std::vector<Bits> adj(n, Bits(n));
  for (auto [u, v] : g.edges()) {
    adj[u].set(v);
    adj[v].set(u);
  }
  std::vector<bool> done(n, false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long best = std::numeric_limits<long>::max();
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      long score = 0;
      if (rule == GreedyRule::min_degree) {
        score = adj[v].count();
      } else {
        const auto nb = adj[v].to_vector();
        for (std::size_t i = 0; i < nb.size(); ++i)
          for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!adj[nb[i]].test(nb[j])) ++score;
      }
      if (score < best) {
        best = score;
        pick = v;
      }
    }
    done[pick] = true;
    order.push_back(pick);
    const Bits nb = adj[pick];
    nb.for_each([&](int a) {
      adj[a] |= nb;
      adj[a].reset(a);
      adj[a].reset(pick);
    });
    adj[pick] = Bits(n);
  }
  return order;
}

std::vector<VertexSet> elimination_bags(const Graph& g, std::span<const int> order) {
  const int n = g.num_vertices();
  std::vector<Bits> adj(n, Bits(n));
  for (auto [u, v] : g.edges()) {
    adj[u].set(v);
    adj[v].set(u);
  }
  std::vector<VertexSet> bags(n);
  for (int v : order) {
    Bits bag = adj[v];
    bag.set(v);
    bags[v] = bag.to_vector();
    const Bits nb = adj[v];
    nb.for_each([&](int a) {
      adj[a] |= nb;
      adj[a].reset(a);
      adj[a].reset(v);
    });
    adj[v] = Bits(n);
  }
  return bags;
}

std::vector<int> elimination_parents(const Graph& g, std::span<const int> order,
                                     const std::vector<VertexSet>& bags) {
  std::vector<int> position(g.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  std::vector<int> parent(g.num_vertices(), -1);
  for (int v : order) {
    int best = -1;
    for (int w : bags[v])
      if (w != v && (best < 0 || position[w] < position[best])) best = w;
    parent[v] = best;
  }
  return parent;
}

}  // namespace hw

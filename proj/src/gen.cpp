#include "hw/gen.hpp"

#include <random>
#include <string>

#include "hw/errors.hpp"

namespace hw {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish value in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

bool grid_adjacent(GridCoord a, GridCoord b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

}  // namespace

Hypergraph path_gadget(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexSet> edges;
  int next = n;
  for (auto [u, v] : g.edges())
    for (int i = 0; i <= n; ++i, ++next) {
      edges.push_back({u, next});
      edges.push_back({v, next});
    }
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) throw InvalidInput("vertex " + std::to_string(v) + " of the graph is isolated");
  return Hypergraph(next, std::move(edges));
}

Hypergraph random_hypergraph(int n, int m, int max_arity, std::uint64_t seed) {
  if (n < 1 || m < 1 || max_arity < 1) throw InvalidInput("n, m and max arity must be positive");
  if (static_cast<long long>(m) * max_arity < n)
    throw InvalidInput("m * max_arity must be at least n to avoid isolated vertices");
  Rng rng(seed);
  std::vector<VertexSet> edges(m);
  for (int v = 0; v < n; ++v) {
    std::vector<int> open;
    for (int e = 0; e < m; ++e)
      if (static_cast<int>(edges[e].size()) < max_arity) open.push_back(e);
    edges[open[rng.below(open.size())]].push_back(v);
  }
  for (auto& e : edges) {
    const int have = static_cast<int>(e.size());
    int target = have + static_cast<int>(rng.below(max_arity - have + 1));
    target = std::min(std::max(target, 1), n);
    while (static_cast<int>(e.size()) < target) {
      const int v = static_cast<int>(rng.below(n));
      if (!contains(e, v)) {
        e.push_back(v);
        normalize(e);
      }
    }
    normalize(e);
  }
  return Hypergraph(n, std::move(edges));
}

GridSpec triangulated_grid_spec(int k) {
  GridSpec spec;
  spec.k = k;
  for (int r = 1; r < k; ++r)
    for (int c = 1; c < k; ++c) spec.triangulation.push_back({{r, c}, {r + 1, c + 1}});
  return spec;
}

GridSpec gridoid_spec(int k, int extra, std::uint64_t seed) {
  if (k < 2) throw InvalidInput("grid side must be at least 2");
  std::vector<GridEdge> candidates;
  for (int a = 0; a < k * k; ++a)
    for (int b = a + 1; b < k * k; ++b)
      if (!grid_adjacent(grid_coord(k, a), grid_coord(k, b)))
        candidates.push_back({grid_coord(k, a), grid_coord(k, b)});
  if (extra < 0 || extra > static_cast<int>(candidates.size()))
    throw InvalidInput("too many additional edges for a " + std::to_string(k) + "x" +
                       std::to_string(k) + " grid");
  Rng rng(seed);
  shuffle(candidates, rng);
  GridSpec spec;
  spec.k = k;
  spec.additional.assign(candidates.begin(), candidates.begin() + extra);
  std::sort(spec.additional.begin(), spec.additional.end());
  return spec;
}

GridSpec augmented_grid_spec(int k, int span, std::uint64_t seed) {
  if (k < 2) throw InvalidInput("grid side must be at least 2");
  if (span < 0) throw InvalidInput("span must be nonnegative");
  std::vector<GridEdge> candidates;
  for (int a = 0; a < k * k; ++a)
    for (int b = a + 1; b < k * k; ++b) {
      const GridCoord ca = grid_coord(k, a), cb = grid_coord(k, b);
      if (non_marginal(k, ca) && non_marginal(k, cb) && !grid_adjacent(ca, cb))
        candidates.push_back({ca, cb});
    }
  Rng rng(seed);
  shuffle(candidates, rng);
  std::vector<int> load(k * k, 0);
  GridSpec spec;
  spec.k = k;
  spec.span = span;
  for (const auto& e : candidates) {
    const int a = grid_vertex(k, e.a), b = grid_vertex(k, e.b);
    if (load[a] < span && load[b] < span) {
      ++load[a];
      ++load[b];
      spec.augmentation.push_back(e);
    }
  }
  std::sort(spec.augmentation.begin(), spec.augmentation.end());
  return spec;
}

}  // namespace hw

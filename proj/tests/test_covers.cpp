#include <random>

#include "doctest.h"
#include "hw/covers.hpp"
#include "hw/errors.hpp"
#include "hw/simplex.hpp"
#include "oracles.hpp"

using namespace hw;

namespace {

Hypergraph triangle() { return Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) out.push_back(oracle::mask_vertices(mask));
  return out;
}

// Minimum over hitting sets T of the family of the fractional cover of T.
Rational brute_transversal(const Hypergraph& h, const std::vector<VertexSet>& family) {
  Rational best = -1;
  for (const VertexSet& t : all_subsets(h.num_vertices())) {
    bool hits = true;
    for (const auto& s : family) hits = hits && !set_intersection(s, t).empty();
    if (!hits) continue;
    const Rational c = oracle::brute_fractional_cover(h, t);
    if (best < 0 || c < best) best = c;
  }
  return best;
}

}  // namespace

TEST_CASE("packing LP on a tiny instance") {
  // max y1 + y2 s.t. y1 + y2 <= 1, y1 <= 1.
  const PackingLpResult r = solve_packing_lp({{1, 1}, {1, 0}}, {1, 1}, {1, 1});
  CHECK(r.objective == 1);
  CHECK(r.primal[0] + r.primal[1] == 1);
}

TEST_CASE("triangle fractional cover is 3/2 with an LP-duality certificate") {
  const Hypergraph h = triangle();
  const CoverSolution sol = fractional_cover(h, {0, 1, 2});
  CHECK(sol.cost == Rational(3, 2));
  CHECK(sol.labeling.size() == Rational(3, 2));
  CHECK(blocked_set(h, sol.labeling) == VertexSet{0, 1, 2});
  Rational dual_total = 0;
  for (const auto& y : sol.dual) dual_total += y;
  CHECK(dual_total == Rational(3, 2));
  CHECK(certify_fractional(CoverSystem::of(h), sol));
  CHECK(oracle::brute_fractional_cover(h, {0, 1, 2}) == Rational(3, 2));
  CHECK(integral_cover(h, {0, 1, 2}).cost == 2);
}

TEST_CASE("cover of the empty set and of an uncoverable request") {
  const Hypergraph h = triangle();
  CHECK(fractional_cover(h, {}).cost == 0);
  CHECK(integral_cover(h, {}).cost == 0);
  CHECK_THROWS_AS(fractional_cover(h, {3}), InvalidInput);
  // In an i-labeled graph only N-vertices are coverable.
  const ILabeledGraph inc = incidence_graph(h);
  CHECK_THROWS_AS(fractional_cover(inc, {3}), InvalidInput);
  CHECK(fractional_cover(inc, {0, 1, 2}).cost == Rational(3, 2));
}

TEST_CASE("certificate recheck rejects a tampered solution") {
  const Hypergraph h = triangle();
  CoverSolution sol = fractional_cover(h, {0, 1, 2});
  sol.cost = 1;
  CHECK_FALSE(certify_fractional(CoverSystem::of(h), sol));
  CoverSolution sol2 = fractional_cover(h, {0, 1, 2});
  sol2.labeling.set(0, 0);
  CHECK_FALSE(certify_fractional(CoverSystem::of(h), sol2));
}

TEST_CASE("fractional and integral covers agree with brute force") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4), m = 1 + static_cast<int>(rng() % 4);
    if (m * 3 < n) continue;
    const Hypergraph h = oracle::random_hypergraph(rng, n, m, 3);
    const CoverSystem sys = CoverSystem::of(h);
    for (const VertexSet& s : all_subsets(n)) {
      const CoverSolution f = fractional_cover(sys, s);
      CHECK(f.cost == oracle::brute_fractional_cover(h, s));
      CHECK(certify_fractional(sys, f));
      const CoverSolution i = integral_cover(sys, s);
      CHECK(i.cost == oracle::brute_integral_cover(h, s));
      CHECK(i.labeling.is_binary());
      CHECK(is_subset(s, blocked_set(h, i.labeling)));
      CHECK(f.cost <= i.cost);
    }
  }
}

TEST_CASE("cover cost is monotone under inclusion") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4), m = 2 + static_cast<int>(rng() % 4);
    const Hypergraph h = oracle::random_hypergraph(rng, n, m, 3);
    const auto subsets = all_subsets(n);
    const VertexSet& big = subsets[rng() % subsets.size()];
    VertexSet small;
    for (int v : big)
      if (rng() % 2) small.push_back(v);
    CHECK(fractional_cover(h, small).cost <= fractional_cover(h, big).cost);
    CHECK(integral_cover(h, small).cost <= integral_cover(h, big).cost);
  }
}

TEST_CASE("integral cover of a graph's vertex set is the minimum edge cover") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(rng, n, 50);
    bool isolated = false;
    for (int v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
    if (isolated || g.num_edges() > 12) continue;
    ++checked;
    // Brute force over edge subsets of the graph.
    const auto edges = g.edges();
    int best = -1;
    for (std::uint32_t pick = 0; pick < (1u << edges.size()); ++pick) {
      std::vector<bool> hit(n, false);
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (pick >> i & 1) hit[edges[i].first] = hit[edges[i].second] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
        if (best < 0 || std::popcount(pick) < best) best = std::popcount(pick);
    }
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    CHECK(integral_cover(hypergraph_of_graph(g), all).cost == best);
  }
  CHECK(checked >= 30);
}

TEST_CASE("transversal cover examples") {
  const Hypergraph h = triangle();
  const CoverSystem sys = CoverSystem::of(h);
  // Singletons: every vertex must be blocked.
  const TransversalResult t = transversal_cover(sys, {{0}, {1}, {2}});
  CHECK(t.cover.cost == Rational(3, 2));
  CHECK(t.hitting_set == VertexSet{0, 1, 2});
  // One edge's vertices: a single vertex suffices, cost 1.
  CHECK(transversal_cover(sys, {{0, 1}}).cover.cost == 1);
  CHECK(transversal_cover(sys, {}).cover.cost == 0);
  CHECK_THROWS_AS(transversal_cover(sys, {{}}), InvalidInput);
}

TEST_CASE("transversal cover agrees with brute force, serial and parallel") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4), m = 2 + static_cast<int>(rng() % 3);
    const Hypergraph h = oracle::random_hypergraph(rng, n, m, 3);
    std::vector<VertexSet> family;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      VertexSet s;
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) s.push_back(v);
      if (s.empty()) s.push_back(static_cast<int>(rng() % n));
      family.push_back(s);
    }
    const CoverSystem sys = CoverSystem::of(h);
    const TransversalResult par = transversal_cover(sys, family, {50'000'000, Exec::parallel});
    const TransversalResult ser = transversal_cover(sys, family, {50'000'000, Exec::serial});
    CHECK(par.cover.cost == brute_transversal(h, family));
    CHECK(par.cover.cost == ser.cover.cost);
    CHECK(par.hitting_set == ser.hitting_set);
    CHECK(par.cover.labeling == ser.cover.labeling);
    for (const auto& s : family) CHECK_FALSE(set_intersection(s, blocked_set(h, par.cover.labeling)).empty());
  }
}

TEST_CASE("transversal node limit") {
  const Hypergraph h = triangle();
  CHECK_THROWS_AS(transversal_cover(CoverSystem::of(h), {{0, 1, 2}, {0, 1, 2}}, {1, Exec::serial}),
                  LimitExceeded);
}

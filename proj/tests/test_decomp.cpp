#include <random>

#include "doctest.h"
#include "hw/decomp.hpp"
#include "hw/errors.hpp"
#include "hw/gen.hpp"
#include "oracles.hpp"

using namespace hw;

namespace {

Hypergraph triangle() { return Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

TreeDecomposition path_td(std::vector<VertexSet> bags) {
  Graph tree(static_cast<int>(bags.size()));
  for (int i = 0; i + 1 < tree.num_vertices(); ++i) tree.add_edge(i, i + 1);
  return TreeDecomposition{tree, std::move(bags)};
}

}  // namespace

TEST_CASE("tree decomposition validation names each violated condition") {
  const Hypergraph h = triangle();
  CHECK(validate_td(h, path_td({{0, 1, 2}})).valid);
  CHECK(validate_td(h, path_td({{0, 1, 2}})).width == 2);

  TdReport r = validate_td(h, path_td({{0, 1}, {1, 2}}));
  CHECK_FALSE(r.valid);
  CHECK(r.violation.find("edge coverage") == 0);

  r = validate_td(h, path_td({{0, 1}}));
  CHECK(r.violation.find("vertex coverage") == 0);
  CHECK(r.vertex == 2);

  r = validate_td(h, path_td({{0, 1, 2}, {1}, {0}}));
  CHECK(r.violation.find("connectivity") == 0);
  CHECK(r.vertex == 0);
  CHECK(r.node == 2);

  TreeDecomposition cyc{cycle(3), {{0, 1, 2}, {0}, {1}}};
  CHECK(validate_td(h, cyc).violation == "decomposition graph is not a tree");

  r = validate_td(h, path_td({{0, 1, 7}}));
  CHECK(r.violation == "bag contains an unknown vertex");
}

TEST_CASE("hypertree decomposition validation and width") {
  const Hypergraph h = triangle();
  HypertreeDecomposition d{path_td({{0, 1, 2}}), {Labeling::binary(3, {0, 1})}};
  HtdReport r = validate_htd(h, d);
  CHECK(r.valid);
  CHECK(r.width == 2);
  CHECK(r.generalized);

  d.lambdas[0] = Labeling::binary(3, {0});
  r = validate_htd(h, d);
  CHECK_FALSE(r.valid);
  CHECK(r.vertex == 2);

  // Width is the largest labeling over the nodes.
  HypertreeDecomposition two{path_td({{0, 1}, {0, 1, 2}}),
                             {Labeling::binary(3, {0}), Labeling::binary(3, {0, 1})}};
  CHECK(two.width() == 2);
}

TEST_CASE("single big hyperedge: tw(H) = n-1 but tw(I(H)) = 1") {
  for (int n = 2; n <= 7; ++n) {
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    const Hypergraph h(n, {all});
    CHECK(exact_treewidth(primal_graph(h)).width == n - 1);
    CHECK(exact_treewidth(incidence_graph(h).graph()).width == 1);
  }
}

TEST_CASE("exact treewidth on named graphs") {
  CHECK(exact_treewidth(cycle(6)).width == 2);
  CHECK(exact_treewidth(complete(5)).width == 4);
  Graph grid(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      if (c < 2) grid.add_edge(3 * r + c, 3 * r + c + 1);
      if (r < 2) grid.add_edge(3 * r + c, 3 * r + c + 3);
    }
  CHECK(exact_treewidth(grid).width == 3);
  CHECK(exact_treewidth(Graph(3)).width == 0);
  CHECK_THROWS_AS(exact_treewidth(Graph(17)), LimitExceeded);
  CHECK(exact_treewidth(Graph(17), ExactLimits{20, 9}).width == 0);
}

TEST_CASE("exact treewidth matches all-orderings brute force") {
  // Every labeled graph on up to 5 vertices.
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n)) {
      const int expect = oracle::brute_treewidth(g);
      const TreewidthResult dp = exact_treewidth(g);
      CHECK(dp.width == expect);
      CHECK(exact_treewidth_search(g).width == expect);
      const TdReport r = validate_td(g, dp.decomposition);
      CHECK(r.valid);
      CHECK(r.width == expect);
    }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + trial % 2;
    const Graph g = oracle::random_graph(rng, n, 20 + static_cast<int>(rng() % 60));
    const int expect = oracle::brute_treewidth(g);
    CHECK(exact_treewidth(g).width == expect);
    CHECK(exact_treewidth_search(g).width == expect);
  }
}

TEST_CASE("serial and parallel treewidth DP agree exactly") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(rng, 8 + trial % 5, 35);
    const TreewidthResult a = exact_treewidth(g, {}, Exec::serial);
    const TreewidthResult b = exact_treewidth(g, {}, Exec::parallel);
    CHECK(a.width == b.width);
    CHECK(a.order == b.order);
  }
}

TEST_CASE("heuristics give valid decompositions no better than the optimum") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + trial % 8, 40);
    const int exact = exact_treewidth(g).width;
    for (GreedyRule rule : {GreedyRule::min_fill, GreedyRule::min_degree}) {
      const TreewidthResult h = heuristic_treewidth(g, rule);
      CHECK(validate_td(g, h.decomposition).valid);
      CHECK(h.width >= exact);
    }
  }
}

TEST_CASE("incidence conversion yields a generalized decomposition of width <= tw + 1") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6), m = 1 + static_cast<int>(rng() % 6);
    if (m * 4 < n) continue;
    const Hypergraph h = oracle::random_hypergraph(rng, n, m, 4);
    const Graph inc = incidence_graph(h).graph();
    for (const TreewidthResult& tw : {exact_treewidth(inc), heuristic_treewidth(inc, GreedyRule::min_degree)}) {
      const HypertreeDecomposition d = convert_incidence_td(h, tw.decomposition);
      const HtdReport r = validate_htd(h, d);
      CHECK(r.valid);
      CHECK(r.generalized);
      CHECK(r.width <= tw.width + 1);
      // Each vertex in a bag is blocked by its smallest incident hyperedge.
      for (std::size_t t = 0; t < tw.decomposition.bags.size(); ++t)
        for (int x : tw.decomposition.bags[t])
          if (x < n) CHECK(d.lambdas[t][h.incident_edges(x).front()] == 1);
    }
  }
  CHECK_THROWS_AS(convert_incidence_td(triangle(), path_td({{0, 1, 2}})), InvalidInput);
}

TEST_CASE("exact f-width on the triangle") {
  const Hypergraph h = triangle();
  const FwidthResult f = exact_fwidth(h, CoverKind::fractional);
  CHECK(f.width == Rational(3, 2));
  CHECK(validate_htd(h, f.decomposition).valid);
  CHECK(exact_fwidth(h, CoverKind::integral).width == 2);
  CHECK(oracle::brute_fwidth(h, true) == Rational(3, 2));
  CHECK(oracle::brute_fwidth(h, false) == 2);
}

TEST_CASE("exact f-width matches all-orderings brute force") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5), m = 1 + static_cast<int>(rng() % 4);
    if (m * 3 < n) continue;
    const Hypergraph h = oracle::random_hypergraph(rng, n, m, 3);
    for (CoverKind kind : {CoverKind::fractional, CoverKind::integral}) {
      const Rational expect = oracle::brute_fwidth(h, kind == CoverKind::fractional);
      const FwidthResult dp = exact_fwidth(h, kind, {}, FwidthMethod::subset_dp);
      const FwidthResult search = exact_fwidth(h, kind, {}, FwidthMethod::search);
      CHECK(dp.width == expect);
      CHECK(search.width == expect);
      const HtdReport r = validate_htd(h, dp.decomposition);
      CHECK(r.valid);
      CHECK(r.width == expect);
      CHECK(r.generalized == (kind == CoverKind::integral || dp.decomposition.generalized()));
    }
  }
}

TEST_CASE("serial and parallel f-width kernels agree exactly") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph h = oracle::random_hypergraph(rng, 8, 6, 3);
    for (CoverKind kind : {CoverKind::fractional, CoverKind::integral}) {
      CHECK(subset_cover_costs(h, kind, Exec::serial) == subset_cover_costs(h, kind, Exec::parallel));
      const FwidthResult a = exact_fwidth(h, kind, {}, FwidthMethod::subset_dp, Exec::serial);
      const FwidthResult b = exact_fwidth(h, kind, {}, FwidthMethod::subset_dp, Exec::parallel);
      CHECK(a.width == b.width);
      CHECK(a.order == b.order);
    }
  }
}

TEST_CASE("universal hyperedge brings fhw and ghw to 1") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const Hypergraph h = add_universal_edge(oracle::random_hypergraph(rng, 6, 4, 3));
    CHECK(exact_fwidth(h, CoverKind::fractional).width == 1);
    CHECK(exact_fwidth(h, CoverKind::integral).width == 1);
  }
  CHECK(exact_fwidth(add_universal_edge(triangle()), CoverKind::fractional).width == 1);
}

TEST_CASE("path gadget of K3 has fhw 3") {
  const Hypergraph h = path_gadget(complete(3));
  CHECK(h.num_vertices() == 15);
  CHECK(h.num_edges() == 24);
  const ExactLimits limits{16, 40};
  CHECK(exact_fwidth(h, CoverKind::fractional, limits).width == 3);
}

TEST_CASE("removing a hyperedge contained in another never increases the width") {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 40; ++trial) {
    const Hypergraph h = oracle::random_hypergraph(rng, 5, 4, 4);
    for (int e = 0; e < h.num_edges(); ++e) {
      int host = -1;
      for (int f = 0; f < h.num_edges(); ++f)
        if (f != e && is_subset(h.edge(e), h.edge(f))) host = f;
      if (host < 0) continue;
      std::vector<VertexSet> rest;
      for (int f = 0; f < h.num_edges(); ++f)
        if (f != e) rest.push_back(h.edge(f));
      const Hypergraph smaller(h.num_vertices(), rest);
      for (CoverKind kind : {CoverKind::fractional, CoverKind::integral})
        CHECK(exact_fwidth(smaller, kind).width <= exact_fwidth(h, kind).width);
    }
  }
}

TEST_CASE("sandwich report") {
  const SandwichReport r = sandwich_report(triangle());
  CHECK(r.fhw.value == Rational(3, 2));
  CHECK(r.ghw.value == 2);
  CHECK(r.tw_incidence_plus_one.value == 3);
  CHECK(r.chain_holds);
  CHECK(r.fhw.exact);

  // Above the exact limits the figures become bounds and the chain still holds.
  const Hypergraph big = random_hypergraph(14, 8, 3, 5);
  const SandwichReport b = sandwich_report(big, ExactLimits{12, 9});
  CHECK_FALSE(b.fhw.exact);
  CHECK_FALSE(b.tw_incidence_plus_one.exact);
  CHECK(b.chain_holds);
}

TEST_CASE("f-width limit") {
  const Hypergraph h = random_hypergraph(10, 5, 3, 1);
  CHECK_THROWS_AS(exact_fwidth(h, CoverKind::fractional), LimitExceeded);
  CHECK_NOTHROW(exact_fwidth(h, CoverKind::fractional, ExactLimits{16, 10}));
}

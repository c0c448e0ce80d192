#include <algorithm>
#include <random>
#include <tuple>

#include "doctest.h"
#include "hw/decomp.hpp"
#include "hw/errors.hpp"
#include "hw/games.hpp"
#include "oracles.hpp"

using namespace hw;

namespace {

Hypergraph triangle() { return Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Every hypergraph on n vertices with m hyperedges given as nondecreasing
// sequences of nonempty vertex masks, skipping those with isolated vertices.
std::vector<Hypergraph> all_hypergraphs(int n, int m) {
  std::vector<Hypergraph> out;
  const int subsets = (1 << n) - 1;
  std::vector<int> pick(m, 1);
  while (true) {
    int covered = 0;
    for (int p : pick) covered |= p;
    if (covered == subsets) {
      std::vector<VertexSet> edges;
      for (int p : pick) edges.push_back(oracle::mask_vertices(p));
      out.emplace_back(n, edges);
    }
    int i = m - 1;
    while (i >= 0 && pick[i] == subsets) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[i];
  }
  return out;
}

}  // namespace

TEST_CASE("position compatibility") {
  const Hypergraph h = triangle();
  const Labeling zero(3);
  CHECK(compatible(h, {zero, 0}, {zero, 2}));
  // gamma = {ab}, gamma' = {bc}: c reaches a avoiding {b}.
  CHECK(compatible(h, {Labeling::binary(3, {0}), 2}, {Labeling::binary(3, {1}), 0}));
  // Endpoint inside B(gamma) cap B(gamma').
  CHECK_FALSE(compatible(h, {Labeling::binary(3, {0}), 2}, {Labeling::binary(3, {1}), 1}));
  // Path a - c - b cut at both {b} ... a reaches b only through b itself.
  const Hypergraph path(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(compatible(path, {Labeling::binary(2, {0}), 0}, {Labeling::binary(2, {0, 1}), 2}));
  CHECK_THROWS_AS(compatible(h, {Labeling(2), 0}, {zero, 0}), InvalidInput);
  CHECK_THROWS_AS(compatible(h, {zero, 5}, {zero, 0}), InvalidInput);
}

TEST_CASE("small games") {
  CHECK(marshals_win(Hypergraph(2, {{0, 1}}), 1).marshals_win);
  CHECK(marshal_width(Hypergraph(2, {{0, 1}})) == 1);
  CHECK_FALSE(marshals_win(triangle(), 1).marshals_win);
  CHECK(marshals_win(triangle(), 2).marshals_win);
  CHECK(marshal_width(triangle()) == 2);
  // Star-shaped acyclic hypergraph.
  const Hypergraph star(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3}});
  const Hypergraph acyclic(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
  CHECK(marshal_width(acyclic) == 1);
  CHECK(marshal_width(star) >= 1);
  // Universal edge.
  CHECK(marshal_width(add_universal_edge(triangle())) == 1);
  CHECK_THROWS_AS(marshals_win(triangle(), 4), InvalidInput);
  std::vector<VertexSet> many(13, VertexSet{0});
  CHECK_THROWS_AS(marshals_win(Hypergraph(1, many), 1), LimitExceeded);
}

TEST_CASE("escape witness for the triangle with one marshal") {
  const GameResult r = marshals_win(triangle(), 1);
  REQUIRE_FALSE(r.marshals_win);
  CHECK_FALSE(r.escape.states.empty());
  CHECK(check_escape(triangle(), 1, r.escape));
  // Dropping the start state breaks the witness.
  EscapeWitness cut = r.escape;
  cut.states.erase(std::remove_if(cut.states.begin(), cut.states.end(),
                                  [](const GameState& s) { return s.marshals.empty(); }),
                   cut.states.end());
  CHECK_FALSE(check_escape(triangle(), 1, cut));
}

TEST_CASE("abstract fixpoint agrees with the concrete game on every hypergraph with <= 4 edges") {
  int instances = 0;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      for (const Hypergraph& h : all_hypergraphs(n, m)) {
        ++instances;
        for (int k = 0; k <= m; ++k) CHECK(marshals_win(h, k).marshals_win == oracle::concrete_marshals_win(h, k));
      }
    }
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3), m = 3 + static_cast<int>(rng() % 2);
    const Hypergraph h = oracle::random_hypergraph(rng, n, m, 3);
    ++instances;
    for (int k = 0; k <= m; ++k) CHECK(marshals_win(h, k).marshals_win == oracle::concrete_marshals_win(h, k));
  }
  CHECK(instances > 1000);
}

TEST_CASE("winning strategies replay, are monotone in k, and extract to decompositions") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4), m = 2 + static_cast<int>(rng() % 5);
    if (m * 3 < n) continue;
    const Hypergraph h = oracle::random_hypergraph(rng, n, m, 3);
    const int mw = marshal_width(h);
    for (int k = mw; k <= m; ++k) {
      const GameResult r = marshals_win(h, k);
      REQUIRE(r.marshals_win);
      const StrategyCheck c = check_strategy(h, r.strategy);
      CHECK(c.winning);
      CHECK(c.monotone == r.strategy.monotone);
    }
    if (mw > 1) CHECK(check_escape(h, mw - 1, marshals_win(h, mw - 1).escape));

    const Strategy mono = monotonize(h, marshals_win(h, mw).strategy);
    CHECK(mono.monotone);
    CHECK(check_strategy(h, mono).monotone);
    CHECK(mono.cost <= 3 * mw);
    const HypertreeDecomposition d = extract_decomposition(h, mono);
    const HtdReport v = validate_htd(h, d);
    CHECK(v.valid);
    CHECK(v.generalized);
    CHECK(v.width <= 3 * mono.cost + 1);
    const Rational ghw = exact_fwidth(h, CoverKind::integral).width;
    CHECK(ghw <= 3 * mw + 1);
    CHECK(ghw <= v.width);
  }
}

TEST_CASE("triangle: monotone strategy of cost 2 and its decomposition") {
  const Hypergraph h = triangle();
  const Strategy s = monotonize(h, marshals_win(h, 2).strategy);
  CHECK(s.cost <= 2);
  const HypertreeDecomposition d = extract_decomposition(h, s);
  const HtdReport r = validate_htd(h, d);
  CHECK(r.valid);
  CHECK(r.width <= 7);
  CHECK(r.width >= 2);
}

TEST_CASE("single edge: one-node decomposition of width 1") {
  const Hypergraph h(3, {{0, 1, 2}});
  const GameResult r = marshals_win(h, 1);
  const HypertreeDecomposition d = extract_decomposition(h, r.strategy);
  CHECK(d.base.num_nodes() == 1);
  CHECK(d.width() == 1);
  CHECK(validate_htd(h, d).valid);
}

TEST_CASE("extraction rejects non-monotone and non-winning strategies") {
  // Path a - b - c - d as edges e0 = ab, e1 = bc, e2 = cd. Marshals first
  // sit on bc, robber picks {a}; moving to cd frees b, so the territory
  // grows to {a, b}; then ab plus cd captures.
  const Hypergraph h(4, {{0, 1}, {1, 2}, {2, 3}});
  Strategy s;
  s.cost = 2;
  s.moves = {
      {{}, {0, 1, 2, 3}, {1}},
      {{1}, {0}, {2}},
      {{1}, {3}, {2}},
      {{2}, {0, 1}, {0, 2}},
  };
  std::sort(s.moves.begin(), s.moves.end(), [](const StrategyMove& a, const StrategyMove& b) {
    return std::tie(a.marshals, a.territory) < std::tie(b.marshals, b.territory);
  });
  const StrategyCheck c = check_strategy(h, s);
  CHECK(c.winning);
  CHECK_FALSE(c.monotone);
  CHECK_THROWS_WITH_AS(extract_decomposition(h, s), doctest::Contains("territory grows"), InvalidInput);
  const Strategy mono = monotonize(h, s);
  CHECK(mono.monotone);
  CHECK(validate_htd(h, extract_decomposition(h, mono)).valid);

  Strategy broken = s;
  broken.moves.pop_back();
  CHECK_FALSE(check_strategy(h, broken).winning);
  CHECK_THROWS_AS(extract_decomposition(h, broken), InvalidInput);
  CHECK_THROWS_AS(monotonize(h, broken), InvalidInput);

  // Standing still forever is a cycle, not a win.
  Strategy idle;
  idle.cost = 1;
  idle.moves = {{{}, {0, 1, 2, 3}, {}}};
  const StrategyCheck ic = check_strategy(h, idle);
  CHECK_FALSE(ic.winning);
  CHECK(ic.problem.find("cycle") != std::string::npos);
}

TEST_CASE("robber options") {
  const Hypergraph h(4, {{0, 1}, {1, 2}, {2, 3}});
  // From ({bc}, {a}) to {cd}: b is freed, robber reaches {a, b}.
  CHECK(robber_options(h, {1}, {0}, {2}) == std::vector<VertexSet>{{0, 1}});
  // To {ab}: nothing left reachable.
  CHECK(robber_options(h, {1}, {0}, {0}).empty());
}

#pragma once

// Marshals-and-robbers game on small hypergraphs: position compatibility,
// the abstract-state fixpoint solver, monotone strategies, and extraction of
// generalized hypertree decompositions from monotone strategies.
//
// Abstract state: (M, C) with M a set of occupied hyperedges and C a
// connected component of H - B(M) holding the robber. When the marshals
// move to M', the robber may run through H - (B(M) cap B(M')) and settles
// in any component of H - B(M') it can reach. Captured means no such
// component exists. The game starts from (empty, C) for every component C.

#include <string>
#include <vector>

#include "hw/core.hpp"
#include "hw/decomp.hpp"

namespace hw {

struct GamePosition {
  Labeling labeling;  // over E(h)
  int robber = -1;
};

// True iff a path from p1.robber to p2.robber avoids B(g1) cap B(g2).
// Throws InvalidInput on a labeling domain mismatch or bad robber vertex.
bool compatible(const Hypergraph& h, const GamePosition& p1, const GamePosition& p2);

struct StrategyMove {
  VertexSet marshals;   // hyperedge ids
  VertexSet territory;  // vertex ids
  VertexSet next;       // hyperedge ids
  friend bool operator==(const StrategyMove&, const StrategyMove&) = default;
};

// Positional strategy, one move per state reachable under it, sorted by
// (marshals, territory).
struct Strategy {
  int cost = 0;
  bool monotone = false;
  std::vector<StrategyMove> moves;

  const StrategyMove* find(const VertexSet& marshals, const VertexSet& territory) const;
};

struct GameState {
  VertexSet marshals;
  VertexSet territory;
  friend auto operator<=>(const GameState&, const GameState&) = default;
};

// Robber escape policy as a set of states: it contains a start state, and
// from each member every marshal move of cost <= k leaves the robber a
// successor inside the set.
struct EscapeWitness {
  std::vector<GameState> states;
};

struct GameResult {
  bool marshals_win = false;
  Strategy strategy;     // when marshals_win
  EscapeWitness escape;  // otherwise
  int num_states = 0;
};

constexpr int kMaxGameEdges = 12;
constexpr int kMaxGameVertices = 64;

// Least-fixpoint solution with k marshals. With monotone_only, marshal
// moves are limited to those after which every robber option lies inside
// the current territory. Throws LimitExceeded above kMaxGameEdges edges or
// kMaxGameVertices vertices, InvalidInput for k outside [0, |E|].
GameResult marshals_win(const Hypergraph& h, int k, bool monotone_only = false);

// Least k for which the marshals win.
int marshal_width(const Hypergraph& h);

// Robber options after the marshals move from (marshals, territory) to next.
std::vector<VertexSet> robber_options(const Hypergraph& h, const VertexSet& marshals,
                                      const VertexSet& territory, const VertexSet& next);

struct StrategyCheck {
  bool winning = false;
  bool monotone = false;
  std::string problem;
};

// Replays every play from the start states: each reached state must have a
// move of cost <= s.cost and no play may revisit a state.
StrategyCheck check_strategy(const Hypergraph& h, const Strategy& s);

bool check_escape(const Hypergraph& h, int k, const EscapeWitness& w);

// Least-cost monotone winning strategy. Throws InvalidInput if s is not
// winning on h; returns s with the flag set when it is already monotone.
Strategy monotonize(const Hypergraph& h, const Strategy& s);

// One node per strategy state; chi = boundary of the territory plus the
// part of the territory's closure blocked by the next move, lambda =
// current marshals plus next marshals. Start states hang off a chain.
// Throws InvalidInput naming the transition if s lets the territory grow,
// or if s is not winning.
HypertreeDecomposition extract_decomposition(const Hypergraph& h, const Strategy& s);

}  // namespace hw

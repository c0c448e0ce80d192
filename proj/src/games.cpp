#include "hw/games.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "hw/errors.hpp"

namespace hw {

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (int v : s) m |= bit(v);
  return m;
}

VertexSet from_mask(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

std::string show(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// Bitmask view of a hypergraph with the blocked set and the components of
// H - B(M) precomputed for every marshal set M of size <= k.
class Board {
 public:
  Board(const Hypergraph& h, int k) : k_(k) {
    if (h.num_edges() > kMaxGameEdges)
      throw LimitExceeded("game solver supports at most " + std::to_string(kMaxGameEdges) +
                          " hyperedges");
    if (h.num_vertices() > kMaxGameVertices)
      throw LimitExceeded("game solver supports at most " + std::to_string(kMaxGameVertices) +
                          " vertices");
    if (k < 0 || k > h.num_edges()) throw InvalidInput("marshal count must lie in [0, |E|]");
    m_ = h.num_edges();
    all_ = h.num_vertices() == 64 ? ~Mask{0} : bit(h.num_vertices()) - 1;
    for (const auto& e : h.edges()) edges_.push_back(to_mask(e));
    const Mask moves = Mask{1} << m_;
    blocked_.assign(moves, 0);
    comps_.assign(moves, {});
    offset_.assign(moves, -1);
    for (Mask M = 0; M < moves; ++M) {
      for (int e = 0; e < m_; ++e)
        if (M & bit(e)) blocked_[M] |= edges_[e];
      if (std::popcount(M) > k) continue;
      legal_.push_back(M);
      offset_[M] = num_states_;
      Mask rest = all_ & ~blocked_[M];
      while (rest) {
        Mask c = flood(rest & (~rest + 1), all_ & ~blocked_[M]);
        comps_[M].push_back(c);
        rest &= ~c;
      }
      for (Mask c : comps_[M]) {
        state_marshals_.push_back(M);
        state_territory_.push_back(c);
      }
      num_states_ += static_cast<int>(comps_[M].size());
    }
    std::stable_sort(legal_.begin(), legal_.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  }

  int num_states() const { return num_states_; }
  int num_edges() const { return m_; }
  const std::vector<Mask>& legal_moves() const { return legal_; }
  Mask marshals(int s) const { return state_marshals_[s]; }
  Mask territory(int s) const { return state_territory_[s]; }
  Mask blocked(Mask M) const { return blocked_[M]; }

  // -1 if (M, c) is not a state.
  int state(Mask M, Mask c) const {
    if (M >= offset_.size() || offset_[M] < 0) return -1;
    const auto& list = comps_[M];
    auto it = std::find(list.begin(), list.end(), c);
    return it == list.end() ? -1 : offset_[M] + static_cast<int>(it - list.begin());
  }

  std::vector<int> starts() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < comps_[0].size(); ++i) out.push_back(static_cast<int>(i));
    return out;
  }

  // Components of H - B(next) reachable from territory c through
  // H - (B(M) cap B(next)).
  std::vector<Mask> options(Mask M, Mask c, Mask next) const {
    const Mask region = flood(c, all_ & ~(blocked_[M] & blocked_[next]));
    std::vector<Mask> out;
    for (Mask d : comps_[next])
      if (d & region) out.push_back(d);
    return out;
  }

  // Vertex closure of seed under hyperedge adjacency within allowed.
  Mask flood(Mask seed, Mask allowed) const {
    Mask cur = seed & allowed;
    for (bool grew = true; grew;) {
      grew = false;
      for (Mask e : edges_)
        if ((e & cur) && (e & allowed & ~cur)) {
          cur |= e & allowed;
          grew = true;
        }
    }
    return cur;
  }

 private:
  int k_ = 0;
  int m_ = 0;
  Mask all_ = 0;
  std::vector<Mask> edges_;
  std::vector<Mask> blocked_;
  std::vector<std::vector<Mask>> comps_;
  std::vector<int> offset_;
  std::vector<Mask> legal_;
  std::vector<Mask> state_marshals_;
  std::vector<Mask> state_territory_;
  int num_states_ = 0;
};

bool monotone_move(const std::vector<Mask>& options, Mask c) {
  return std::all_of(options.begin(), options.end(), [&](Mask d) { return (d & ~c) == 0; });
}

std::vector<StrategyMove> sorted_moves(std::map<std::pair<VertexSet, VertexSet>, VertexSet> m) {
  std::vector<StrategyMove> out;
  for (auto& [key, next] : m) out.push_back({key.first, key.second, next});
  return out;
}

}  // namespace

bool compatible(const Hypergraph& h, const GamePosition& p1, const GamePosition& p2) {
  const auto m = static_cast<std::size_t>(h.num_edges());
  if (p1.labeling.domain() != m || p2.labeling.domain() != m)
    throw InvalidInput("position labeling must range over the hyperedges");
  for (int v : {p1.robber, p2.robber})
    if (v < 0 || v >= h.num_vertices()) throw InvalidInput("robber vertex out of range");
  const VertexSet avoid =
      set_intersection(blocked_set(h, p1.labeling), blocked_set(h, p2.labeling));
  if (contains(avoid, p1.robber) || contains(avoid, p2.robber)) return false;
  std::vector<bool> seen(h.num_vertices(), false);
  std::vector<int> stack{p1.robber};
  seen[p1.robber] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == p2.robber) return true;
    for (int e : h.incident_edges(v))
      for (int w : h.edge(e))
        if (!seen[w] && !contains(avoid, w)) {
          seen[w] = true;
          stack.push_back(w);
        }
  }
  return false;
}

const StrategyMove* Strategy::find(const VertexSet& marshals, const VertexSet& territory) const {
  auto it = std::lower_bound(moves.begin(), moves.end(), std::pair{marshals, territory},
                             [](const StrategyMove& m, const auto& key) {
                               return std::tie(m.marshals, m.territory) <
                                      std::tie(key.first, key.second);
                             });
  if (it == moves.end() || it->marshals != marshals || it->territory != territory) return nullptr;
  return &*it;
}

GameResult marshals_win(const Hypergraph& h, int k, bool monotone_only) {
  const Board board(h, k);
  const int n_states = board.num_states();
  std::vector<int> rank(n_states, -1);
  std::vector<Mask> choice(n_states, 0);

  for (int round = 1;; ++round) {
    bool changed = false;
    for (int s = 0; s < n_states; ++s) {
      if (rank[s] >= 0) continue;
      const Mask M = board.marshals(s), c = board.territory(s);
      for (Mask next : board.legal_moves()) {
        const auto opts = board.options(M, c, next);
        if (monotone_only && !monotone_move(opts, c)) continue;
        bool wins = true;
        for (Mask d : opts) {
          const int t = board.state(next, d);
          if (rank[t] < 0 || rank[t] >= round) {
            wins = false;
            break;
          }
        }
        if (wins) {
          rank[s] = round;
          choice[s] = next;
          changed = true;
          break;
        }
      }
    }
    if (!changed) break;
  }

  GameResult result;
  result.num_states = n_states;
  const auto starts = board.starts();
  result.marshals_win =
      std::all_of(starts.begin(), starts.end(), [&](int s) { return rank[s] >= 0; });
  if (!result.marshals_win) {
    for (int s = 0; s < n_states; ++s)
      if (rank[s] < 0)
        result.escape.states.push_back({from_mask(board.marshals(s)), from_mask(board.territory(s))});
    std::sort(result.escape.states.begin(), result.escape.states.end());
    return result;
  }

  std::map<std::pair<VertexSet, VertexSet>, VertexSet> reached;
  std::vector<int> stack = starts;
  std::vector<bool> seen(n_states, false);
  for (int s : stack) seen[s] = true;
  bool monotone = true;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    const Mask M = board.marshals(s), c = board.territory(s), next = choice[s];
    reached[{from_mask(M), from_mask(c)}] = from_mask(next);
    const auto opts = board.options(M, c, next);
    monotone = monotone && monotone_move(opts, c);
    for (Mask d : opts) {
      const int t = board.state(next, d);
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  result.strategy.cost = k;
  result.strategy.monotone = monotone;
  result.strategy.moves = sorted_moves(std::move(reached));
  return result;
}

int marshal_width(const Hypergraph& h) {
  for (int k = 1; k <= h.num_edges(); ++k)
    if (marshals_win(h, k).marshals_win) return k;
  return h.num_edges();
}

std::vector<VertexSet> robber_options(const Hypergraph& h, const VertexSet& marshals,
                                      const VertexSet& territory, const VertexSet& next) {
  const Board board(h, h.num_edges());
  const Mask M = to_mask(marshals), N = to_mask(next);
  if (M >> h.num_edges() || N >> h.num_edges()) throw InvalidInput("unknown hyperedge in move");
  std::vector<VertexSet> out;
  for (Mask d : board.options(M, to_mask(territory), N)) out.push_back(from_mask(d));
  return out;
}

StrategyCheck check_strategy(const Hypergraph& h, const Strategy& s) {
  StrategyCheck check;
  if (h.num_edges() > kMaxGameEdges || h.num_vertices() > kMaxGameVertices)
    throw LimitExceeded("strategy check exceeds the game solver limits");
  if (s.cost < 0 || s.cost > h.num_edges()) {
    check.problem = "strategy cost outside [0, |E|]";
    return check;
  }
  const Board board(h, h.num_edges());
  std::map<std::pair<Mask, Mask>, Mask> table;
  for (const auto& mv : s.moves) {
    for (const VertexSet* set : {&mv.marshals, &mv.next})
      for (int e : *set)
        if (e < 0 || e >= h.num_edges()) {
          check.problem = "move names an unknown hyperedge";
          return check;
        }
    for (int v : mv.territory)
      if (v < 0 || v >= h.num_vertices()) {
        check.problem = "territory names an unknown vertex";
        return check;
      }
    table[{to_mask(mv.marshals), to_mask(mv.territory)}] = to_mask(mv.next);
  }

  // Depth-first replay; color 1 = on the current play, 2 = fully explored.
  std::vector<int> color(board.num_states(), 0);
  bool monotone = true;
  std::string problem;
  auto visit = [&](auto&& self, int st) -> bool {
    color[st] = 1;
    const Mask M = board.marshals(st), c = board.territory(st);
    auto it = table.find({M, c});
    if (it == table.end()) {
      problem = "no move for state " + show(from_mask(M)) + " " + show(from_mask(c));
      return false;
    }
    const Mask next = it->second;
    if (std::popcount(next) > s.cost) {
      problem = "move " + show(from_mask(next)) + " exceeds the strategy cost";
      return false;
    }
    const auto opts = board.options(M, c, next);
    monotone = monotone && monotone_move(opts, c);
    for (Mask d : opts) {
      const int t = board.state(next, d);
      if (color[t] == 1) {
        problem = "play can cycle through state " + show(from_mask(next)) + " " +
                  show(from_mask(d));
        return false;
      }
      if (color[t] == 0 && !self(self, t)) return false;
    }
    color[st] = 2;
    return true;
  };
  for (int st : board.starts())
    if (color[st] == 0 && !visit(visit, st)) {
      check.problem = problem;
      return check;
    }
  check.winning = true;
  check.monotone = monotone;
  return check;
}

bool check_escape(const Hypergraph& h, int k, const EscapeWitness& w) {
  const Board board(h, k);
  std::vector<bool> in(board.num_states(), false);
  for (const auto& st : w.states) {
    if (static_cast<int>(st.marshals.size()) > k) return false;
    for (int e : st.marshals)
      if (e < 0 || e >= h.num_edges()) return false;
    const int id = board.state(to_mask(st.marshals), to_mask(st.territory));
    if (id < 0) return false;
    in[id] = true;
  }
  const auto starts = board.starts();
  if (std::none_of(starts.begin(), starts.end(), [&](int s) { return in[s]; })) return false;
  for (int s = 0; s < board.num_states(); ++s) {
    if (!in[s]) continue;
    for (Mask next : board.legal_moves()) {
      bool survives = false;
      for (Mask d : board.options(board.marshals(s), board.territory(s), next))
        survives = survives || in[board.state(next, d)];
      if (!survives) return false;
    }
  }
  return true;
}

Strategy monotonize(const Hypergraph& h, const Strategy& s) {
  const StrategyCheck check = check_strategy(h, s);
  if (!check.winning) throw InvalidInput("strategy is not winning: " + check.problem);
  if (check.monotone) {
    Strategy out = s;
    out.monotone = true;
    return out;
  }
  for (int k = 1; k <= h.num_edges(); ++k) {
    GameResult r = marshals_win(h, k, true);
    if (r.marshals_win) return r.strategy;
  }
  throw std::logic_error("occupying every hyperedge is always a monotone win");
}

HypertreeDecomposition extract_decomposition(const Hypergraph& h, const Strategy& s) {
  const StrategyCheck check = check_strategy(h, s);
  if (!check.winning) throw InvalidInput("strategy is not winning: " + check.problem);
  const Board board(h, h.num_edges());
  const int m = h.num_edges();

  std::vector<VertexSet> bags;
  std::vector<Labeling> lambdas;
  std::vector<std::pair<int, int>> links;
  auto build = [&](auto&& self, Mask M, Mask c) -> int {
    const StrategyMove* mv = s.find(from_mask(M), from_mask(c));
    const Mask next = to_mask(mv->next);
    const auto opts = board.options(M, c, next);
    for (Mask d : opts)
      if (d & ~c)
        throw InvalidInput("territory grows on move " + show(mv->marshals) + " -> " +
                           show(mv->next) + " from " + show(mv->territory) + " to " +
                           show(from_mask(d)));
    Mask boundary = 0;
    for (const auto& e : h.edges()) {
      const Mask em = to_mask(e);
      if (em & c) boundary |= em & ~c;
    }
    const Mask closure = c | boundary;
    const int node = static_cast<int>(bags.size());
    bags.push_back(from_mask(boundary | (board.blocked(next) & closure)));
    lambdas.push_back(Labeling::binary(m, from_mask(M | next)));
    for (Mask d : opts) links.push_back({node, self(self, next, d)});
    return node;
  };
  int previous = -1;
  for (int st : board.starts()) {
    const int root = build(build, 0, board.territory(st));
    if (previous >= 0) links.push_back({previous, root});
    previous = root;
  }
  TreeDecomposition td{Graph::from_edges(static_cast<int>(bags.size()), links), std::move(bags)};
  return HypertreeDecomposition{std::move(td), std::move(lambdas)};
}

}  // namespace hw

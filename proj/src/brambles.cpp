#include "hw/brambles.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hw/errors.hpp"

namespace hw {

namespace {

bool sets_touch(const Hypergraph& h, const VertexSet& x, const VertexSet& y) {
  if (!set_intersection(x, y).empty()) return true;
  for (const auto& e : h.edges())
    if (!set_intersection(e, x).empty() && !set_intersection(e, y).empty()) return true;
  return false;
}

bool sets_i_touch(const ILabeledGraph& ilg, const VertexSet& s, const VertexSet& r) {
  if (!set_intersection(s, r).empty()) return true;
  const Graph& g = ilg.graph();
  for (int x : s)
    for (int y : g.neighbors(x))
      if (contains(r, y)) return true;
  for (int z : ilg.m_set()) {
    const VertexSet closed = g.closed_neighborhood(z);
    if (!set_intersection(closed, s).empty() && !set_intersection(closed, r).empty()) return true;
  }
  return false;
}

// Every pair of S joined by a path in G[S u M].
bool i_connected(const ILabeledGraph& ilg, const VertexSet& s) {
  if (s.empty()) return true;
  const Graph& g = ilg.graph();
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<int> stack{s.front()};
  seen[s.front()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (contains(s, v)) ++reached;
    for (int w : g.neighbors(v))
      if (!seen[w] && (ilg.in_m(w) || contains(s, w))) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return reached == s.size();
}

const ILabeledGraph& labeled_host(const Bramble& b) {
  if (b.on_hypergraph()) throw InvalidInput("operation needs an i-labeled host");
  if (b.sets.empty()) throw InvalidInput("bramble is empty");
  return std::get<ILabeledGraph>(b.host);
}

VertexSet covered_union(const Bramble& b) {
  VertexSet all;
  for (const auto& s : b.sets) all = set_union(all, s);
  return all;
}

}  // namespace

BrambleReport verify_bramble(const Bramble& b) {
  BrambleReport r;
  auto fail = [&](std::string what, int i, int j = -1) {
    r.violation = std::move(what);
    r.first = i;
    r.second = j;
    return r;
  };
  const int count = static_cast<int>(b.sets.size());
  for (int i = 0; i < count; ++i) {
    const auto& s = b.sets[i];
    if (s.empty()) return fail("set is empty", i);
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
      return fail("set is not sorted and duplicate free", i);
    if (b.on_hypergraph()) {
      const auto& h = std::get<Hypergraph>(b.host);
      if (s.front() < 0 || s.back() >= h.num_vertices()) return fail("set has an unknown vertex", i);
      if (!is_connected_in(h, s)) return fail("set is not connected", i);
    } else {
      const auto& ilg = std::get<ILabeledGraph>(b.host);
      if (s.front() < 0 || s.back() >= ilg.num_vertices()) return fail("set has an unknown vertex", i);
      for (int v : s)
        if (!ilg.in_n(v)) return fail("set has a vertex outside N", i);
      if (!i_connected(ilg, s)) return fail("set is not i-connected", i);
    }
  }
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      const bool touch = b.on_hypergraph()
                             ? sets_touch(std::get<Hypergraph>(b.host), b.sets[i], b.sets[j])
                             : sets_i_touch(std::get<ILabeledGraph>(b.host), b.sets[i], b.sets[j]);
      if (!touch) return fail("sets do not touch", i, j);
    }
  r.valid = true;
  return r;
}

int influence(const Bramble& b) {
  const ILabeledGraph& ilg = labeled_host(b);
  const VertexSet all = covered_union(b);
  int best = 0;
  for (int v : all)
    best = std::max(best, static_cast<int>(set_intersection(ilg.graph().ball(v, 2), all).size()));
  return best;
}

int valency(const Bramble& b) {
  if (b.sets.empty()) throw InvalidInput("bramble is empty");
  int best = 0;
  for (int v : covered_union(b)) {
    int c = 0;
    for (const auto& s : b.sets) c += contains(s, v) ? 1 : 0;
    best = std::max(best, c);
  }
  return best;
}

bool OrderCertificate::recheck() const {
  if (size <= 0 || influence <= 0 || valency <= 0) return false;
  Rational expect(size, influence * valency);
  expect.canonicalize();
  if (lower_bound != expect) return false;
  return !exact_order || lower_bound <= *exact_order;
}

OrderCertificate order_lower_bound(const Bramble& b) {
  BrambleReport check = verify_bramble(b);
  if (!check.valid) throw InvalidInput("bramble does not verify: " + check.violation);
  OrderCertificate c;
  c.size = static_cast<int>(b.sets.size());
  c.influence = influence(b);
  c.valency = valency(b);
  c.lower_bound = Rational(c.size, c.influence * c.valency);
  c.lower_bound.canonicalize();
  return c;
}

Rational exact_order(const Bramble& b, int max_sets, const TransversalOptions& options) {
  if (static_cast<int>(b.sets.size()) > max_sets)
    throw LimitExceeded("exact order limited to " + std::to_string(max_sets) + " sets");
  const CoverSystem sys = b.on_hypergraph() ? CoverSystem::of(std::get<Hypergraph>(b.host))
                                            : CoverSystem::of(std::get<ILabeledGraph>(b.host));
  return transversal_cover(sys, b.sets, options).cover.cost;
}

Bramble bramble_from_hypergraph(const Bramble& b) {
  if (!b.on_hypergraph()) throw InvalidInput("bramble is not hosted on a hypergraph");
  BrambleReport check = verify_bramble(b);
  if (!check.valid) throw InvalidInput("hyperbramble does not verify: " + check.violation);
  return Bramble{incidence_graph(std::get<Hypergraph>(b.host)), b.sets};
}

// ------------------------------------------------------------------ grids

namespace {

bool in_grid(int k, GridCoord c) { return c.row >= 1 && c.row <= k && c.col >= 1 && c.col <= k; }

std::pair<int, int> key(int k, const GridEdge& e) {
  int a = grid_vertex(k, e.a), b = grid_vertex(k, e.b);
  return {std::min(a, b), std::max(a, b)};
}

std::string show(const GridEdge& e) {
  return "(" + std::to_string(e.a.row) + "," + std::to_string(e.a.col) + ")-(" +
         std::to_string(e.b.row) + "," + std::to_string(e.b.col) + ")";
}

bool even(GridCoord c) { return (c.row + c.col) % 2 == 0; }

}  // namespace

int augmentation_load(const GridSpec& spec, int v) {
  int load = 0;
  for (const auto& e : spec.augmentation) {
    const int a = grid_vertex(spec.k, e.a), b = grid_vertex(spec.k, e.b);
    if (a == v && non_marginal(spec.k, e.b)) ++load;
    if (b == v && non_marginal(spec.k, e.a)) ++load;
  }
  return load;
}

void validate_grid_spec(const GridSpec& spec) {
  const int k = spec.k;
  if (k < 2) throw InvalidInput("grid side must be at least 2");
  std::set<std::pair<int, int>> present;
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c <= k; ++c) {
      if (c < k) present.insert(key(k, {{r, c}, {r, c + 1}}));
      if (r < k) present.insert(key(k, {{r, c}, {r + 1, c}}));
    }
  auto add = [&](const GridEdge& e, const char* kind) {
    if (!in_grid(k, e.a) || !in_grid(k, e.b))
      throw InvalidInput(std::string(kind) + " edge " + show(e) + " has an endpoint off the grid");
    if (e.a == e.b) throw InvalidInput(std::string(kind) + " edge " + show(e) + " is a loop");
    if (!present.insert(key(k, e)).second)
      throw InvalidInput(std::string(kind) + " edge " + show(e) + " duplicates an existing edge");
  };
  std::set<GridCoord> cells;
  for (const auto& e : spec.triangulation) {
    if (std::abs(e.a.row - e.b.row) != 1 || std::abs(e.a.col - e.b.col) != 1)
      throw InvalidInput("triangulation edge " + show(e) + " is not a cell diagonal");
    GridCoord cell{std::min(e.a.row, e.b.row), std::min(e.a.col, e.b.col)};
    if (!cells.insert(cell).second)
      throw InvalidInput("cell of " + show(e) + " already has a diagonal; the drawing would not be planar");
    add(e, "triangulation");
  }
  for (const auto& e : spec.additional) add(e, "additional");
  for (const auto& e : spec.augmentation) {
    if (!non_marginal(k, e.a) || !non_marginal(k, e.b))
      throw InvalidInput("augmentation edge " + show(e) + " touches a marginal vertex");
    add(e, "augmentation");
  }
  if (!spec.augmentation.empty())
    for (int v = 0; v < k * k; ++v)
      if (augmentation_load(spec, v) > spec.span)
        throw InvalidInput("vertex (" + std::to_string(grid_coord(k, v).row) + "," +
                           std::to_string(grid_coord(k, v).col) + ") exceeds span " +
                           std::to_string(spec.span));
}

LabelScheme resolved_scheme(const GridSpec& spec) {
  bool same_parity = false;
  for (const auto* list : {&spec.triangulation, &spec.additional, &spec.augmentation})
    for (const auto& e : *list) same_parity = same_parity || even(e.a) == even(e.b);
  if (spec.scheme == LabelScheme::bipartition && same_parity)
    throw InvalidInput("bipartition labels need every edge to join opposite parities");
  if (spec.scheme != LabelScheme::automatic) return spec.scheme;
  return same_parity ? LabelScheme::vertex_cover : LabelScheme::bipartition;
}

ILabeledGraph build_grid(const GridSpec& spec) {
  validate_grid_spec(spec);
  const int k = spec.k;
  Graph g(k * k);
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c <= k; ++c) {
      if (c < k) g.add_edge(grid_vertex(k, {r, c}), grid_vertex(k, {r, c + 1}));
      if (r < k) g.add_edge(grid_vertex(k, {r, c}), grid_vertex(k, {r + 1, c}));
    }
  for (const auto* list : {&spec.triangulation, &spec.additional, &spec.augmentation})
    for (const auto& e : *list) g.add_edge(grid_vertex(k, e.a), grid_vertex(k, e.b));

  VertexSet ns, ms;
  if (resolved_scheme(spec) == LabelScheme::bipartition) {
    for (int v = 0; v < k * k; ++v) (even(grid_coord(k, v)) ? ns : ms).push_back(v);
  } else {
    std::vector<bool> in_m(k * k, false);
    for (int v = 0; v < k * k; ++v) {
      ns.push_back(v);
      in_m[v] = !even(grid_coord(k, v));
    }
    for (auto [u, v] : g.edges())
      if (!in_m[u] && !in_m[v]) in_m[u] = true;
    for (int v = 0; v < k * k; ++v)
      if (in_m[v]) ms.push_back(v);
  }
  return ILabeledGraph(std::move(g), std::move(ns), std::move(ms));
}

Bramble grid_bramble(const GridSpec& spec) {
  const int k = spec.k;
  if (k < 4) throw InvalidInput("grid bramble needs k >= 4");
  ILabeledGraph ilg = build_grid(spec);
  std::set<int> skip_rows, skip_cols;
  for (const auto& e : spec.additional)
    for (GridCoord c : {e.a, e.b}) {
      skip_rows.insert(c.row);
      skip_cols.insert(c.col);
    }
  Bramble b{ilg, {}};
  for (int i = 2; i <= k - 1; ++i) {
    if (skip_rows.count(i)) continue;
    for (int j = 2; j <= k - 1; ++j) {
      if (skip_cols.count(j)) continue;
      VertexSet set;
      for (int v : ilg.n_set()) {
        GridCoord c = grid_coord(k, v);
        if (non_marginal(k, c) && (c.row == i || c.col == j)) set.push_back(v);
      }
      b.sets.push_back(std::move(set));
    }
  }
  if (b.sets.empty())
    throw BrambleEmptied("additional edges exclude every row or column; the bramble is empty");
  return b;
}

}  // namespace hw

#include "hw/decomp.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hw/covers.hpp"
#include "hw/errors.hpp"

namespace hw {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

Rational HypertreeDecomposition::width() const {
  Rational w = 0;
  for (const auto& l : lambdas) w = std::max(w, l.size());
  return w;
}

bool HypertreeDecomposition::generalized() const {
  return std::all_of(lambdas.begin(), lambdas.end(), [](const Labeling& l) { return l.is_binary(); });
}

// ------------------------------------------------------------ validation

namespace {

TdReport validate_generic(int n, const std::vector<VertexSet>& edges, const TreeDecomposition& td) {
  TdReport r;
  auto fail = [&](std::string what, int node = -1, int vertex = -1) {
    r.valid = false;
    r.violation = std::move(what);
    r.node = node;
    r.vertex = vertex;
    return r;
  };
  const int nodes = td.num_nodes();
  if (nodes == 0) return fail("decomposition has no nodes");
  if (static_cast<int>(td.bags.size()) != nodes) return fail("bag count differs from node count");
  if (!td.tree.is_tree()) return fail("decomposition graph is not a tree");
  for (int t = 0; t < nodes; ++t) {
    const auto& bag = td.bags[t];
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      return fail("bag is not a sorted duplicate-free set", t);
    if (!bag.empty() && (bag.front() < 0 || bag.back() >= n))
      return fail("bag contains an unknown vertex", t);
  }
  r.width = td.width();

  std::vector<std::vector<int>> occurrences(n);
  for (int t = 0; t < nodes; ++t)
    for (int v : td.bags[t]) occurrences[v].push_back(t);
  for (int v = 0; v < n; ++v)
    if (occurrences[v].empty()) return fail("vertex coverage: vertex is in no bag", -1, v);

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    bool covered = std::any_of(td.bags.begin(), td.bags.end(),
                               [&](const VertexSet& bag) { return is_subset(edge, bag); });
    if (!covered)
      return fail("edge coverage: edge " + std::to_string(e) + " is in no bag", -1, edge.front());
  }

  for (int v = 0; v < n; ++v) {
    const auto& occ = occurrences[v];
    std::vector<bool> seen(nodes, false);
    std::vector<int> stack{occ.front()};
    seen[occ.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      ++reached;
      for (int u : td.tree.neighbors(t))
        if (!seen[u] && contains(td.bags[u], v)) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    if (reached != occ.size()) {
      int stray = *std::find_if(occ.begin(), occ.end(), [&](int t) { return !seen[t]; });
      return fail("connectivity: occurrences of the vertex are not a subtree", stray, v);
    }
  }
  r.valid = true;
  return r;
}

std::vector<VertexSet> graph_edge_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

}  // namespace

TdReport validate_td(const Hypergraph& h, const TreeDecomposition& td) {
  return validate_generic(h.num_vertices(), h.edges(), td);
}

TdReport validate_td(const Graph& g, const TreeDecomposition& td) {
  return validate_generic(g.num_vertices(), graph_edge_sets(g), td);
}

HtdReport validate_htd(const Hypergraph& h, const HypertreeDecomposition& d) {
  HtdReport r;
  TdReport base = validate_td(h, d.base);
  if (!base.valid) {
    r.violation = base.violation;
    r.node = base.node;
    r.vertex = base.vertex;
    return r;
  }
  if (d.lambdas.size() != d.base.bags.size()) {
    r.violation = "labeling count differs from node count";
    return r;
  }
  for (std::size_t t = 0; t < d.lambdas.size(); ++t) {
    if (d.lambdas[t].domain() != static_cast<std::size_t>(h.num_edges())) {
      r.violation = "labeling domain differs from the hyperedge set";
      r.node = static_cast<int>(t);
      return r;
    }
    const VertexSet blocked = blocked_set(h, d.lambdas[t]);
    for (int v : d.base.bags[t])
      if (!contains(blocked, v)) {
        r.violation = "bag vertex is not blocked by the node labeling";
        r.node = static_cast<int>(t);
        r.vertex = v;
        return r;
      }
  }
  r.valid = true;
  r.width = d.width();
  r.generalized = d.generalized();
  return r;
}

// --------------------------------------------------------- construction

TreeDecomposition decomposition_from_ordering(const Graph& g, std::span<const int> order) {
  const int n = g.num_vertices();
  TreeDecomposition td;
  if (n == 0) {
    td.tree = Graph(1);
    td.bags = {VertexSet{}};
    return td;
  }
  const auto bags = elimination_bags(g, order);
  const auto parent = elimination_parents(g, order, bags);

  // Nodes are vertices in elimination order; merge a node into a tree
  // neighbor whose bag contains it.
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<VertexSet> node_bag(n);
  std::vector<VertexSet> links(n);
  std::vector<bool> alive(n, true);
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    node_bag[i] = bags[v];
    int p = parent[v] >= 0 ? position[parent[v]] : -1;
    if (p < 0) {
      p = previous_root;
      previous_root = i;
    }
    if (p >= 0) {
      links[i].push_back(p);
      links[p].push_back(i);
    }
  }
  bool merged = true;
  while (merged) {
    merged = false;
    for (int a = 0; a < n && !merged; ++a) {
      if (!alive[a]) continue;
      for (int b : links[a]) {
        if (!is_subset(node_bag[a], node_bag[b])) continue;
        for (int c : links[a]) {
          if (c == b) continue;
          std::replace(links[c].begin(), links[c].end(), a, b);
          links[b].push_back(c);
        }
        links[b].erase(std::remove(links[b].begin(), links[b].end(), a), links[b].end());
        links[a].clear();
        alive[a] = false;
        merged = true;
        break;
      }
    }
  }
  std::vector<int> id(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i)
    if (alive[i]) id[i] = next++;
  td.tree = Graph(next);
  for (int i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    td.bags.push_back(node_bag[i]);
    for (int j : links[i])
      if (i < j) td.tree.add_edge(id[i], id[j]);
  }
  return td;
}

// ------------------------------------------------------------ treewidth

TreewidthResult exact_treewidth(const Graph& g, const ExactLimits& limits, Exec exec) {
  const int n = g.num_vertices();
  if (n > limits.treewidth || n > kSubsetDpMaxVertices)
    throw LimitExceeded("exact treewidth limited to " + std::to_string(limits.treewidth) +
                        " vertices, instance has " + std::to_string(n));
  TreewidthResult r;
  if (n == 0) {
    r.decomposition = decomposition_from_ordering(g, {});
    return r;
  }
  std::vector<int> sizes(std::size_t{1} << n);
  for (std::size_t m = 0; m < sizes.size(); ++m) sizes[m] = std::popcount(m);
  auto sol = min_max_ordering_dp<int>(g, sizes, exec);
  r.width = sol.value - 1;
  r.order = sol.order;
  r.decomposition = decomposition_from_ordering(g, sol.order);
  return r;
}

TreewidthResult exact_treewidth_search(const Graph& g) {
  TreewidthResult r;
  if (g.num_vertices() == 0) {
    r.decomposition = decomposition_from_ordering(g, {});
    return r;
  }
  auto size_of = [](const Bits& bag) { return bag.count(); };
  OrderingSolution<int> incumbent;
  incumbent.order = greedy_ordering(g, GreedyRule::min_fill);
  incumbent.value = ordering_cost<int>(g, incumbent.order, size_of);
  auto sol = min_max_ordering_search<int>(g, size_of, incumbent);
  r.width = sol.value - 1;
  r.order = sol.order;
  r.decomposition = decomposition_from_ordering(g, sol.order);
  return r;
}

TreewidthResult heuristic_treewidth(const Graph& g, GreedyRule rule) {
  TreewidthResult r;
  r.order = greedy_ordering(g, rule);
  r.decomposition = decomposition_from_ordering(g, r.order);
  r.width = r.decomposition.width();
  return r;
}

// ------------------------------------------------------ incidence to htd

HypertreeDecomposition convert_incidence_td(const Hypergraph& h, const TreeDecomposition& td) {
  const ILabeledGraph inc = incidence_graph(h);
  TdReport check = validate_td(inc.graph(), td);
  if (!check.valid)
    throw InvalidInput("not a tree decomposition of the incidence graph: " + check.violation);
  const int n = h.num_vertices(), m = h.num_edges();
  HypertreeDecomposition out;
  out.base.tree = td.tree;
  for (const auto& bag : td.bags) {
    VertexSet verts, chosen;
    for (int x : bag) {
      if (x < n) {
        verts.push_back(x);
        chosen.push_back(h.incident_edges(x).front());
      } else {
        const int e = x - n;
        chosen.push_back(e);
        verts.insert(verts.end(), h.edge(e).begin(), h.edge(e).end());
      }
    }
    normalize(verts);
    normalize(chosen);
    out.base.bags.push_back(std::move(verts));
    out.lambdas.push_back(Labeling::binary(m, chosen));
  }
  return out;
}

// -------------------------------------------------------------- f-width

namespace {

CoverSolution bag_cover(const CoverSystem& sys, const VertexSet& bag, CoverKind kind) {
  return kind == CoverKind::fractional ? fractional_cover(sys, bag) : integral_cover(sys, bag);
}

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet s;
  for (; mask; mask &= mask - 1) s.push_back(std::countr_zero(mask));
  return s;
}

}  // namespace

std::vector<Rational> subset_cover_costs(const Hypergraph& h, CoverKind kind, Exec exec) {
  const int n = h.num_vertices();
  if (n > kSubsetDpMaxVertices) throw LimitExceeded("subset cost table limited to 24 vertices");
  const CoverSystem sys = CoverSystem::of(h);
  std::vector<Rational> costs(std::size_t{1} << n);
  for_each_index(exec, static_cast<std::int64_t>(costs.size()), [&](std::int64_t m) {
    costs[m] = bag_cover(sys, mask_to_set(static_cast<std::uint32_t>(m)), kind).cost;
  });
  return costs;
}

FwidthResult exact_fwidth(const Hypergraph& h, CoverKind kind, const ExactLimits& limits,
                          FwidthMethod method, Exec exec) {
  const int n = h.num_vertices();
  if (n > limits.fwidth)
    throw LimitExceeded("exact f-width limited to " + std::to_string(limits.fwidth) +
                        " vertices, instance has " + std::to_string(n));
  if (method == FwidthMethod::automatic)
    method = n <= 12 ? FwidthMethod::subset_dp : FwidthMethod::search;

  const Graph primal = primal_graph(h);
  const CoverSystem sys = CoverSystem::of(h);
  OrderingSolution<Rational> sol;
  if (method == FwidthMethod::subset_dp) {
    const auto costs = subset_cover_costs(h, kind, exec);
    sol = min_max_ordering_dp<Rational>(primal, costs, exec);
  } else {
    std::unordered_map<Bits, Rational, BitsHash> memo;
    auto cost = [&](const Bits& bag) -> Rational {
      auto it = memo.find(bag);
      if (it != memo.end()) return it->second;
      Rational c = bag_cover(sys, bag.to_vector(), kind).cost;
      memo.emplace(bag, c);
      return c;
    };
    for (GreedyRule rule : {GreedyRule::min_fill, GreedyRule::min_degree}) {
      OrderingSolution<Rational> candidate;
      candidate.order = greedy_ordering(primal, rule);
      candidate.value = ordering_cost<Rational>(primal, candidate.order, cost);
      if (sol.order.empty() || candidate.value < sol.value) sol = std::move(candidate);
    }
    sol = min_max_ordering_search<Rational>(primal, cost, sol);
  }

  FwidthResult r;
  r.width = sol.value;
  r.order = sol.order;
  r.decomposition.base = decomposition_from_ordering(primal, sol.order);
  for (const auto& bag : r.decomposition.base.bags)
    r.decomposition.lambdas.push_back(bag_cover(sys, bag, kind).labeling);
  if (r.decomposition.width() != r.width)
    throw std::logic_error("witness decomposition width differs from the optimum");
  return r;
}

// ------------------------------------------------------------- sandwich

SandwichReport sandwich_report(const Hypergraph& h, const ExactLimits& limits) {
  SandwichReport r;
  const ILabeledGraph inc = incidence_graph(h);
  TreewidthResult tw;
  if (inc.num_vertices() <= limits.treewidth && inc.num_vertices() <= kSubsetDpMaxVertices) {
    tw = exact_treewidth(inc.graph(), limits);
    r.tw_incidence_plus_one = {Rational(tw.width + 1), true, "subset-dp"};
  } else {
    tw = heuristic_treewidth(inc.graph(), GreedyRule::min_fill);
    r.tw_incidence_plus_one = {Rational(tw.width + 1), false, "min-fill"};
  }

  if (h.num_vertices() <= limits.fwidth) {
    r.fhw = {exact_fwidth(h, CoverKind::fractional, limits).width, true, "exact"};
    r.ghw = {exact_fwidth(h, CoverKind::integral, limits).width, true, "exact"};
  } else {
    const HypertreeDecomposition converted = convert_incidence_td(h, tw.decomposition);
    const CoverSystem sys = CoverSystem::of(h);
    Rational frac = 0;
    for (const auto& bag : converted.base.bags) frac = std::max(frac, fractional_cover(sys, bag).cost);
    r.ghw = {converted.width(), false, "incidence-conversion"};
    r.fhw = {frac, false, "incidence-conversion"};
  }

  if (!(r.fhw.value <= r.ghw.value)) {
    r.failure = "fhw exceeds ghw";
  } else if (!(r.ghw.value <= r.tw_incidence_plus_one.value)) {
    r.failure = "ghw exceeds tw(I)+1";
  }
  r.chain_holds = r.failure.empty();
  return r;
}

}  // namespace hw

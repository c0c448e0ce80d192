#include "hw/core.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <string>

#include "hw/errors.hpp"

namespace hw {

void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool contains(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------- Graph

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  const int n = num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside the vertex set");
  if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
  auto insert = [](VertexSet& s, int x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) s.insert(it, x);
  };
  insert(adj_[u], v);
  insert(adj_[v], u);
}

int Graph::num_edges() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return static_cast<int>(total / 2);
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = adj_[v];
  s.insert(std::lower_bound(s.begin(), s.end(), v), v);
  return s;
}

bool Graph::adjacent(int u, int v) const { return contains(adj_[u], v); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::remove_vertices(const VertexSet& x, std::vector<int>* old_to_new) const {
  std::vector<int> map(num_vertices(), -1);
  int next = 0;
  for (int v = 0; v < num_vertices(); ++v)
    if (!contains(x, v)) map[v] = next++;
  Graph g(next);
  for (auto [u, v] : edges())
    if (map[u] >= 0 && map[v] >= 0) g.add_edge(map[u], map[v]);
  if (old_to_new) *old_to_new = std::move(map);
  return g;
}

VertexSet Graph::ball(int v, int radius) const {
  std::vector<int> dist(num_vertices(), -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  VertexSet out;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    out.push_back(u);
    if (dist[u] == radius) continue;
    for (int w : adj_[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  normalize(out);
  return out;
}

bool Graph::is_connected() const {
  if (num_vertices() == 0) return true;
  return static_cast<int>(ball(0, num_vertices()).size()) == num_vertices();
}

bool Graph::is_tree() const {
  return num_vertices() > 0 && is_connected() && num_edges() == num_vertices() - 1;
}

// ----------------------------------------------------------- Hypergraph

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges)
    : n_(n), edges_(std::move(edges)), incident_(n < 0 ? 0 : n) {
  if (n < 1) throw InvalidInput("hypergraph needs at least one vertex");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    normalize(edge);
    if (edge.empty()) throw InvalidInput("hyperedge " + std::to_string(e) + " is empty");
    if (edge.front() < 0 || edge.back() >= n)
      throw InvalidInput("hyperedge " + std::to_string(e) + " has a vertex out of range");
    for (int v : edge) incident_[v].push_back(static_cast<int>(e));
  }
  for (int v = 0; v < n; ++v)
    if (incident_[v].empty()) throw InvalidInput("vertex " + std::to_string(v) + " is isolated");
}

// ------------------------------------------------------- ILabeledGraph

ILabeledGraph::ILabeledGraph(Graph g, VertexSet n_set, VertexSet m_set)
    : graph_(std::move(g)), n_set_(std::move(n_set)), m_set_(std::move(m_set)) {
  normalize(n_set_);
  normalize(m_set_);
  const int n = graph_.num_vertices();
  in_n_.assign(n, false);
  in_m_.assign(n, false);
  m_position_.assign(n, -1);
  auto check_range = [n](const VertexSet& s, const char* name) {
    if (!s.empty() && (s.front() < 0 || s.back() >= n))
      throw InvalidInput(std::string(name) + " contains a vertex out of range");
  };
  check_range(n_set_, "N");
  check_range(m_set_, "M");
  for (int v : n_set_) in_n_[v] = true;
  for (std::size_t i = 0; i < m_set_.size(); ++i) {
    in_m_[m_set_[i]] = true;
    m_position_[m_set_[i]] = static_cast<int>(i);
  }
  for (int v = 0; v < n; ++v)
    if (!in_n_[v] && !in_m_[v])
      throw InvalidInput("vertex " + std::to_string(v) + " is in neither N nor M");
  for (auto [u, v] : graph_.edges()) {
    bool n_only = !in_m_[u] && !in_m_[v];
    bool m_only = !in_n_[u] && !in_n_[v];
    if (n_only || m_only)
      throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) + "} joins two " +
                         (n_only ? "N-M" : "M-N") + " vertices");
  }
  for (int v = 0; v < n; ++v) {
    bool meets_n = in_n_[v], meets_m = in_m_[v];
    for (int w : graph_.neighbors(v)) {
      meets_n = meets_n || in_n_[w];
      meets_m = meets_m || in_m_[w];
    }
    if (!meets_n || !meets_m)
      throw InvalidInput("closed neighborhood of vertex " + std::to_string(v) + " misses " +
                         (meets_n ? "M" : "N"));
  }
}

// ------------------------------------------------------------ Labeling

namespace {
void check_unit(const Rational& r) {
  if (r < 0 || r > 1) throw InvalidInput("label value " + to_string(r) + " is outside [0,1]");
}
}  // namespace

Labeling::Labeling(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& r : values_) check_unit(r);
}

Labeling Labeling::binary(std::size_t domain, const VertexSet& ones) {
  Labeling g(domain);
  for (int i : ones) g.set(static_cast<std::size_t>(i), Rational(1));
  return g;
}

void Labeling::set(std::size_t i, const Rational& value) {
  check_unit(value);
  values_.at(i) = value;
}

Rational Labeling::size() const {
  Rational total = 0;
  for (const auto& r : values_) total += r;
  return total;
}

bool Labeling::is_binary() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& r) { return r == 0 || r == 1; });
}

VertexSet Labeling::support() const {
  VertexSet out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != 0) out.push_back(static_cast<int>(i));
  return out;
}

// ----------------------------------------------------------- operations

ILabeledGraph incidence_graph(const Hypergraph& h) {
  const int n = h.num_vertices(), m = h.num_edges();
  Graph g(n + m);
  for (int e = 0; e < m; ++e)
    for (int v : h.edge(e)) g.add_edge(v, n + e);
  VertexSet ns(n), ms(m);
  for (int v = 0; v < n; ++v) ns[v] = v;
  for (int e = 0; e < m; ++e) ms[e] = n + e;
  return ILabeledGraph(std::move(g), std::move(ns), std::move(ms));
}

VertexSet blocked_set(const Hypergraph& h, const Labeling& g) {
  if (g.domain() != static_cast<std::size_t>(h.num_edges()))
    throw InvalidInput("labeling domain does not match the hyperedge set");
  VertexSet out;
  for (int v = 0; v < h.num_vertices(); ++v) {
    Rational sum = 0;
    for (int e : h.incident_edges(v)) sum += g[e];
    if (sum >= 1) out.push_back(v);
  }
  return out;
}

VertexSet controlled_set(const ILabeledGraph& ilg, const Labeling& g) {
  if (g.domain() != ilg.m_set().size())
    throw InvalidInput("labeling domain does not match M");
  VertexSet out;
  for (int x : ilg.n_set()) {
    Rational sum = 0;
    if (ilg.in_m(x)) sum += g[ilg.m_position(x)];
    for (int y : ilg.graph().neighbors(x))
      if (ilg.in_m(y)) sum += g[ilg.m_position(y)];
    if (sum >= 1) out.push_back(x);
  }
  return out;
}

ILabeledGraph contract_edge(const ILabeledGraph& ilg, int u, int v, std::vector<int>* old_to_new) {
  const Graph& g = ilg.graph();
  if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices() || !g.adjacent(u, v))
    throw InvalidInput("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  const int keep = std::min(u, v), drop = std::max(u, v);
  std::vector<int> map(g.num_vertices());
  for (int w = 0; w < g.num_vertices(); ++w) map[w] = w < drop ? w : (w == drop ? keep : w - 1);
  Graph out(g.num_vertices() - 1);
  for (auto [a, b] : g.edges())
    if (map[a] != map[b]) out.add_edge(map[a], map[b]);
  VertexSet ns, ms;
  for (int w = 0; w < g.num_vertices(); ++w) {
    if (w == u || w == v) continue;
    if (ilg.in_n(w)) ns.push_back(map[w]);
    if (ilg.in_m(w)) ms.push_back(map[w]);
  }
  if (ilg.in_n(u) || ilg.in_n(v)) ns.push_back(keep);
  if (ilg.in_m(u) || ilg.in_m(v)) ms.push_back(keep);
  if (old_to_new) *old_to_new = map;
  return ILabeledGraph(std::move(out), std::move(ns), std::move(ms));
}

Graph primal_graph(const Hypergraph& h) {
  Graph g(h.num_vertices());
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
  return g;
}

ILabeledGraph delete_preserving(const ILabeledGraph& ilg, const VertexSet& x_in,
                                std::vector<int>* old_to_new) {
  VertexSet x = x_in;
  normalize(x);
  const Graph& g = ilg.graph();
  if (!x.empty() && (x.front() < 0 || x.back() >= g.num_vertices()))
    throw InvalidInput("deletion set has a vertex out of range");
  for (int v : x)
    if (ilg.in_m(v))
      for (int w : g.neighbors(v))
        if (!contains(x, w))
          throw InvalidInput("M-vertex " + std::to_string(v) + " in X has neighbor " +
                             std::to_string(w) + " outside X");
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (contains(x, v)) continue;
    bool isolated = std::all_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                [&](int w) { return contains(x, w); });
    if (isolated) throw InvalidInput("vertex " + std::to_string(v) + " is isolated in G - X");
  }
  std::vector<int> map;
  Graph out = g.remove_vertices(x, &map);
  VertexSet ns, ms;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (map[v] < 0) continue;
    if (ilg.in_n(v)) ns.push_back(map[v]);
    if (ilg.in_m(v)) ms.push_back(map[v]);
  }
  if (old_to_new) *old_to_new = map;
  return ILabeledGraph(std::move(out), std::move(ns), std::move(ms));
}

Hypergraph add_universal_edge(const Hypergraph& h) {
  auto edges = h.edges();
  VertexSet all(h.num_vertices());
  for (int v = 0; v < h.num_vertices(); ++v) all[v] = v;
  edges.push_back(std::move(all));
  return Hypergraph(h.num_vertices(), std::move(edges));
}

Hypergraph hypergraph_of_graph(const Graph& g) {
  std::vector<VertexSet> edges;
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Hypergraph(g.num_vertices(), std::move(edges));
}

bool is_connected_in(const Hypergraph& h, const VertexSet& s) {
  if (s.empty()) return true;
  std::vector<bool> seen(h.num_vertices(), false);
  std::vector<int> stack{s.front()};
  seen[s.front()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int e : h.incident_edges(v))
      for (int w : h.edge(e))
        if (!seen[w] && contains(s, w)) {
          seen[w] = true;
          stack.push_back(w);
        }
  }
  return reached == s.size();
}

}  // namespace hw

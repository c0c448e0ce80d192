#pragma once

// Shared vocabulary: hypergraphs, graphs, i-labeled graphs, labelings.
//
// Vertices and hyperedges are dense integer identifiers 0..n-1 in input
// order. A VertexSet is always sorted and duplicate free.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hw/rational.hpp"

namespace hw {

using VertexSet = std::vector<int>;

// Sorts and deduplicates in place.
void normalize(VertexSet& s);
bool contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

// Simple undirected graph; no loops, parallel edges are merged.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  // Throws InvalidInput on loops or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  // Idempotent. Throws InvalidInput on a loop or bad endpoint.
  void add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const;
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Every edge once, as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  // G - X with survivors renumbered in order. old_to_new gets -1 for
  // removed vertices when provided.
  Graph remove_vertices(const VertexSet& x, std::vector<int>* old_to_new = nullptr) const;

  // Vertices within distance <= radius of v (v included).
  VertexSet ball(int v, int radius) const;

  bool is_connected() const;
  // True iff connected and acyclic.
  bool is_tree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

// Hypergraph without isolated vertices. Duplicate hyperedges are allowed.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Validates: n >= 1, every edge nonempty and in range, every vertex
  // covered. Edge vertex lists are normalized.
  Hypergraph(int n, std::vector<VertexSet> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const VertexSet& edge(int e) const { return edges_[e]; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  // Identifiers of hyperedges containing v, ascending.
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<std::vector<int>> incident_;
};

// Triple (G, N, M): N u M = V(G), N-M and M-N independent, and every
// closed neighborhood meets both N and M.
class ILabeledGraph {
 public:
  ILabeledGraph() = default;
  // Throws InvalidInput naming the first offending vertex or edge.
  ILabeledGraph(Graph g, VertexSet n_set, VertexSet m_set);

  const Graph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  bool in_n(int v) const { return in_n_[v]; }
  bool in_m(int v) const { return in_m_[v]; }
  const VertexSet& n_set() const { return n_set_; }
  const VertexSet& m_set() const { return m_set_; }

  // Index of an M-vertex within m_set(); labelings over M use this order.
  int m_position(int v) const { return m_position_[v]; }

  friend bool operator==(const ILabeledGraph& a, const ILabeledGraph& b) {
    return a.graph_ == b.graph_ && a.n_set_ == b.n_set_ && a.m_set_ == b.m_set_;
  }

 private:
  Graph graph_;
  VertexSet n_set_;
  VertexSet m_set_;
  std::vector<bool> in_n_;
  std::vector<bool> in_m_;
  std::vector<int> m_position_;
};

// Map from a domain of size d (hyperedges, or the M-vertices of an
// i-labeled graph in m_set() order) to rationals in [0,1].
class Labeling {
 public:
  Labeling() = default;
  // All-zero labeling.
  explicit Labeling(std::size_t domain) : values_(domain, Rational(0)) {}
  // Throws InvalidInput if a value is outside [0,1].
  explicit Labeling(std::vector<Rational> values);

  static Labeling binary(std::size_t domain, const VertexSet& ones);

  std::size_t domain() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  // Throws InvalidInput if value is outside [0,1].
  void set(std::size_t i, const Rational& value);

  // |gamma|, the sum of all values.
  Rational size() const;
  bool is_binary() const;
  // Indices with a nonzero value.
  VertexSet support() const;
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Rational> values_;
};

// Incidence graph as (I(H), V(H), E(H)). Vertex v keeps id v; hyperedge e
// becomes vertex n + e.
ILabeledGraph incidence_graph(const Hypergraph& h);

// Vertices v with sum over incident edges of g(e) >= 1.
VertexSet blocked_set(const Hypergraph& h, const Labeling& g);

// N-vertices x with sum over N[x] cap M of g(y) >= 1; g is indexed by
// m_position.
VertexSet controlled_set(const ILabeledGraph& ilg, const Labeling& g);

// Contracts edge {u, v}. The merged vertex takes id min(u, v); ids above
// max(u, v) shift down by one. old_to_new receives the vertex map.
ILabeledGraph contract_edge(const ILabeledGraph& ilg, int u, int v,
                            std::vector<int>* old_to_new = nullptr);

// Gaifman graph: u ~ v iff some hyperedge contains both.
Graph primal_graph(const Hypergraph& h);

// (G - X, N - X, M - X). Requires G - X without isolated vertices and
// N[v] subset of X for every v in X cap M; throws InvalidInput naming the
// offending vertex otherwise.
ILabeledGraph delete_preserving(const ILabeledGraph& ilg, const VertexSet& x,
                                std::vector<int>* old_to_new = nullptr);

// H plus one hyperedge containing every vertex (appended last).
Hypergraph add_universal_edge(const Hypergraph& h);

// Graph edges as size-2 hyperedges. Throws InvalidInput on isolated vertices.
Hypergraph hypergraph_of_graph(const Graph& g);

// A hyperedge-connected vertex set: every pair joined through hyperedges
// using only vertices of s (hyperedges themselves unrestricted).
bool is_connected_in(const Hypergraph& h, const VertexSet& s);

}  // namespace hw

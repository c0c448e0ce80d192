#pragma once

// Tree decompositions, fractional / generalized hypertree decompositions,
// exact and heuristic treewidth, the incidence-graph conversion, and the
// exact f-width oracle.

#include <optional>
#include <string>
#include <vector>

#include "hw/core.hpp"
#include "hw/elimination.hpp"
#include "hw/exec.hpp"

namespace hw {

struct TreeDecomposition {
  Graph tree;
  std::vector<VertexSet> bags;

  int num_nodes() const { return tree.num_vertices(); }
  // max |bag| - 1; -1 for a decomposition without vertices.
  int width() const;
};

// Width is the maximum of |lambda(t)| over nodes.
struct HypertreeDecomposition {
  TreeDecomposition base;
  std::vector<Labeling> lambdas;

  Rational width() const;
  bool generalized() const;
};

struct TdReport {
  bool valid = false;
  // Empty when valid; otherwise names the first violated condition.
  std::string violation;
  int node = -1;
  int vertex = -1;
  int width = -1;
};

struct HtdReport {
  bool valid = false;
  std::string violation;
  int node = -1;
  int vertex = -1;
  Rational width;
  bool generalized = false;
};

// Checks: tree shape, bag ranges, vertex coverage, edge coverage, and
// connectivity of each vertex's occurrences, in that order.
TdReport validate_td(const Hypergraph& h, const TreeDecomposition& td);
TdReport validate_td(const Graph& g, const TreeDecomposition& td);
HtdReport validate_htd(const Hypergraph& h, const HypertreeDecomposition& d);

// Tree decomposition from an elimination ordering; bags contained in a
// neighboring bag are merged away.
TreeDecomposition decomposition_from_ordering(const Graph& g, std::span<const int> order);

struct ExactLimits {
  int treewidth = 16;  // max vertices for exact_treewidth
  int fwidth = 9;      // max vertices for exact_fwidth
};

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
  std::vector<int> order;
};

// Exact treewidth by the subset DP. Throws LimitExceeded above the limit.
TreewidthResult exact_treewidth(const Graph& g, const ExactLimits& limits = {},
                                Exec exec = Exec::parallel);

// Exact treewidth by memoized branch and bound; independent of the DP.
TreewidthResult exact_treewidth_search(const Graph& g);

TreewidthResult heuristic_treewidth(const Graph& g, GreedyRule rule);

// Generalized hypertree decomposition of h from a tree decomposition of its
// incidence graph (vertex v = v, hyperedge e = n + e). Each vertex in a bag
// is blocked by its smallest-identifier hyperedge. Throws InvalidInput if
// td does not decompose the incidence graph.
HypertreeDecomposition convert_incidence_td(const Hypergraph& h, const TreeDecomposition& td);

enum class CoverKind { fractional, integral };

enum class FwidthMethod {
  automatic,    // subset DP up to 12 vertices, search above
  subset_dp,
  search,
};

struct FwidthResult {
  Rational width;
  HypertreeDecomposition decomposition;
  std::vector<int> order;
};

// Exact fhw (fractional) or ghw (integral): minimum over elimination
// orderings of the primal graph of the largest bag cover cost. Throws
// LimitExceeded above limits.fwidth vertices.
FwidthResult exact_fwidth(const Hypergraph& h, CoverKind kind, const ExactLimits& limits = {},
                          FwidthMethod method = FwidthMethod::automatic,
                          Exec exec = Exec::parallel);

// Cover cost of every vertex subset of h (mask-indexed), n <= 24.
std::vector<Rational> subset_cover_costs(const Hypergraph& h, CoverKind kind, Exec exec);

// Figure reported by sandwich_report; exact or an upper bound.
struct WidthFigure {
  Rational value;
  bool exact = false;
  std::string method;
};

struct SandwichReport {
  WidthFigure fhw;
  WidthFigure ghw;
  WidthFigure tw_incidence_plus_one;
  // The chain fhw <= ghw <= tw(I)+1 checked on whatever is exact; bounds
  // are checked for consistency only where the inequality direction allows.
  bool chain_holds = false;
  std::string failure;
};

SandwichReport sandwich_report(const Hypergraph& h, const ExactLimits& limits = {});

}  // namespace hw

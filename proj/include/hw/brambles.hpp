#pragma once

// Hyperbrambles and i-brambles: verification, influence and valency, the
// |B| / (ifl * val) order bound, exact fractional order, and the grid
// constructions used as width obstructions.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hw/core.hpp"
#include "hw/covers.hpp"
#include "hw/errors.hpp"

namespace hw {

// Hypergraph host: sets of V(H), pairwise touching and hyperedge-connected.
// i-labeled host: sets of N, pairwise i-touching and i-connected.
struct Bramble {
  std::variant<Hypergraph, ILabeledGraph> host;
  std::vector<VertexSet> sets;

  bool on_hypergraph() const { return std::holds_alternative<Hypergraph>(host); }
};

struct BrambleReport {
  bool valid = false;
  std::string violation;
  int first = -1;   // offending set index
  int second = -1;  // second set of a non-touching pair
};

BrambleReport verify_bramble(const Bramble& b);

// Both require an i-labeled host and a nonempty bramble.
int influence(const Bramble& b);
int valency(const Bramble& b);

struct OrderCertificate {
  int size = 0;
  int influence = 0;
  int valency = 0;
  Rational lower_bound;
  std::optional<Rational> exact_order;

  // Recomputes lower_bound from the integer fields and compares with
  // exact_order when present.
  bool recheck() const;
};

// Throws InvalidInput if b does not verify.
OrderCertificate order_lower_bound(const Bramble& b);

// Exact fractional order; throws LimitExceeded for more than max_sets sets.
Rational exact_order(const Bramble& b, int max_sets = 12,
                     const TransversalOptions& options = {});

// Same sets on (I(H), V(H), E(H)). Throws InvalidInput if b is not a
// verified hyperbramble.
Bramble bramble_from_hypergraph(const Bramble& b);

// ------------------------------------------------------------------ grids

// 1-based grid coordinates.
struct GridCoord {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

struct GridEdge {
  GridCoord a;
  GridCoord b;
  friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

enum class LabelScheme {
  automatic,     // bipartition unless an edge joins same-parity vertices
  bipartition,   // N = even (row + col), M = odd
  vertex_cover,  // N = V, M = odd class plus one endpoint per even-even edge
};

// Partially triangulated grid, (k,g)-gridoid, or augmented grid of span s.
struct GridSpec {
  int k = 0;
  // Cell diagonals; each joins (r,c) to (r+1,c+1) or (r,c+1) to (r+1,c).
  std::vector<GridEdge> triangulation;
  // Gridoid surplus; any non-edge pair.
  std::vector<GridEdge> additional;
  // Augmentation; both endpoints non-marginal, span-bounded.
  std::vector<GridEdge> augmentation;
  int span = 0;
  LabelScheme scheme = LabelScheme::automatic;
};

inline int grid_vertex(int k, GridCoord c) { return (c.row - 1) * k + (c.col - 1); }
inline GridCoord grid_coord(int k, int v) { return {v / k + 1, v % k + 1}; }
inline bool non_marginal(int k, GridCoord c) {
  return c.row > 1 && c.row < k && c.col > 1 && c.col < k;
}

// Throws InvalidInput if a triangulation edge is not a cell diagonal, a
// cell carries two diagonals, an edge repeats or has a bad endpoint, an
// augmentation edge touches a marginal vertex, or the span is exceeded.
void validate_grid_spec(const GridSpec& spec);

// Non-marginal augmentation neighbors of v.
int augmentation_load(const GridSpec& spec, int v);

LabelScheme resolved_scheme(const GridSpec& spec);

ILabeledGraph build_grid(const GridSpec& spec);

// {C_ij : 2 <= i,j <= k-1}, C_ij = N cap U in row i or column j, skipping
// every C_ij whose row index or column index is a coordinate of an
// additional-edge endpoint (row of the endpoint for i, column for j).
// Throws InvalidInput for k < 4 and, distinctly, BrambleEmptied.
class BrambleEmptied : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};
Bramble grid_bramble(const GridSpec& spec);

}  // namespace hw

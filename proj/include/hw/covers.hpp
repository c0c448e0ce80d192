#pragma once

// Exact minimum fractional and integral covers.
//
// A CoverSystem abstracts both hosts: "items" are the vertices to be
// blocked and "slots" are the labeled objects. For a hypergraph the slots
// are hyperedges and slot e covers the vertices of e; for an i-labeled
// graph the slots are the M-vertices (in m_set() order) and slot y covers
// the N-vertices of N[y].

#include <cstdint>
#include <optional>
#include <vector>

#include "hw/core.hpp"
#include "hw/exec.hpp"

namespace hw {

struct CoverSystem {
  int num_items = 0;
  std::vector<VertexSet> slot_items;   // per slot, the items it covers
  std::vector<VertexSet> item_slots;   // per item, the slots covering it
  std::vector<bool> coverable;         // items that may be requested

  static CoverSystem of(const Hypergraph& h);
  static CoverSystem of(const ILabeledGraph& ilg);
  int num_slots() const { return static_cast<int>(slot_items.size()); }
};

struct CoverSolution {
  Labeling labeling;
  Rational cost;
  bool integral = false;
  // Fractional solutions only: an optimal packing of the requested items
  // (y_v >= 0, sum over each slot's requested items <= 1) with total equal
  // to cost. Indexed like the request.
  VertexSet request;
  std::vector<Rational> dual;
};

// Minimum |gamma| with every item of s blocked, 0 <= gamma <= 1.
// Throws InvalidInput if s is not a subset of the coverable items.
CoverSolution fractional_cover(const CoverSystem& sys, const VertexSet& s);
CoverSolution fractional_cover(const Hypergraph& h, const VertexSet& s);
CoverSolution fractional_cover(const ILabeledGraph& ilg, const VertexSet& s);

// Minimum number of slots whose union contains s (binary labeling).
CoverSolution integral_cover(const CoverSystem& sys, const VertexSet& s);
CoverSolution integral_cover(const Hypergraph& h, const VertexSet& s);

// Re-checks a fractional solution: labeling in [0,1] blocks every
// requested item, the dual is a feasible packing, and both have value
// equal to cost.
bool certify_fractional(const CoverSystem& sys, const CoverSolution& sol);

struct TransversalOptions {
  // Search nodes explored before LimitExceeded is thrown.
  std::int64_t node_limit = 50'000'000;
  Exec exec = Exec::parallel;
};

struct TransversalResult {
  CoverSolution cover;
  VertexSet hitting_set;  // the blocked representatives
  std::int64_t nodes = 0;
};

// Minimum-size labeling blocking at least one item of every set in the
// family. Empty family costs 0. Each set must be nonempty.
TransversalResult transversal_cover(const CoverSystem& sys, const std::vector<VertexSet>& family,
                                    const TransversalOptions& options = {});

}  // namespace hw

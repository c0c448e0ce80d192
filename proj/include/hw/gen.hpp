#pragma once

// Seeded instance generators. The same arguments always give the same
// instance; randomness comes from std::mt19937_64 reduced by modulo so the
// output does not depend on the standard library's distributions.

#include <cstdint>

#include "hw/brambles.hpp"
#include "hw/core.hpp"

namespace hw {

// Every edge uv of g becomes |V(g)|+1 paths u - w - v through fresh
// vertices w, as size-2 hyperedges. Original vertices keep their ids; the
// path midpoints follow in edge order. Throws InvalidInput if g has an
// isolated vertex.
Hypergraph path_gadget(const Graph& g);

// n vertices, m hyperedges of size 1..max_arity, no isolated vertex,
// duplicate hyperedges possible. Throws InvalidInput if m * max_arity < n.
Hypergraph random_hypergraph(int n, int m, int max_arity, std::uint64_t seed);

// k x k grid with the (r,c)-(r+1,c+1) diagonal in every cell.
GridSpec triangulated_grid_spec(int k);

// k x k grid plus `extra` distinct random non-edges.
GridSpec gridoid_spec(int k, int extra, std::uint64_t seed);

// k x k grid with random augmentation edges between non-marginal
// vertices, at most `span` per vertex, added greedily from a seeded
// sequence of candidate pairs.
GridSpec augmented_grid_spec(int k, int span, std::uint64_t seed);

}  // namespace hw

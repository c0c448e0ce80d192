#pragma once

// Line-oriented text formats. Every format skips blank lines and lines
// starting with 'c'; vertex, hyperedge and node identifiers in files are
// 1-based. Parsers throw ParseError with the 1-based line and column of
// the offending token.
//
//   hypergraph   p hg <n> <m>          then m lines of vertex ids
//   graph        p edge <n> <m>        then m lines  e <u> <v>
//   i-labeled    p ilg <n> <m>         then m lines  e <u> <v>
//                                      and n lines   v <id> N|M|NM
//   td           s td <nodes> <width>  b <id> <vertex...>, t <id> <id>
//   htd          s htd <nodes> <p/q>   b lines, l <id> <edge>=<p/q>..., t lines
//   bramble      p bramble <count>     then count lines of vertex ids
//   grid spec    p grid <k>            d|a|x <r1> <c1> <r2> <c2>, s <span>,
//                                      l automatic|bipartition|vertex_cover
//   strategy     s strat <n> <m> <cost> <monotone 0|1>
//                                      x <marshals> <territory> <next>, each a
//                                      comma list or '-'

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hw/brambles.hpp"
#include "hw/core.hpp"
#include "hw/decomp.hpp"
#include "hw/games.hpp"

namespace hw {

// The header keyword of the first non-comment line ("hg", "edge", "ilg",
// "td", "htd", "bramble", "grid", "strat"); empty if there is none.
std::string detect_format(std::string_view text);

Hypergraph parse_hypergraph(std::string_view text);
std::string write_hypergraph(const Hypergraph& h);

Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

ILabeledGraph parse_ilg(std::string_view text);
std::string write_ilg(const ILabeledGraph& ilg);

// Either a hypergraph or an i-labeled graph, by header.
std::variant<Hypergraph, ILabeledGraph> parse_host(std::string_view text);

TreeDecomposition parse_td(std::string_view text);
std::string write_td(const TreeDecomposition& td);

// Labelings range over num_edges hyperedges.
HypertreeDecomposition parse_htd(std::string_view text, int num_edges);
std::string write_htd(const HypertreeDecomposition& d);

std::vector<VertexSet> parse_bramble_sets(std::string_view text);
std::string write_bramble_sets(const std::vector<VertexSet>& sets);

GridSpec parse_grid_spec(std::string_view text);
std::string write_grid_spec(const GridSpec& spec);

Strategy parse_strategy(std::string_view text, int num_vertices, int num_edges);
std::string write_strategy(const Strategy& s, int num_vertices, int num_edges);

// Whole file as a string. Throws InvalidInput if it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace hw

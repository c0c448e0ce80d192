#include "hw/io.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hw/errors.hpp"

namespace hw {

namespace {

struct Token {
  std::string_view text;
  int col = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;

  const Token& at(std::size_t i) const { return tokens[i]; }
  std::size_t size() const { return tokens.size(); }
};

struct Lexed {
  std::vector<Line> lines;
  int end_line = 1;  // one past the last physical line
};

Lexed lex(std::string_view text) {
  Lexed out;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty() && line.tokens[0].text[0] != 'c') out.lines.push_back(std::move(line));
    pos = end + 1;
  }
  out.end_line = number + 1;
  return out;
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& what) {
  throw ParseError(line.number, tok.col, what);
}

long long to_int(const Line& line, const Token& tok, long long lo, long long hi,
                 const std::string& what) {
  long long value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < lo || value > hi)
    fail(line, tok, what + " must be an integer in [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "], got '" + std::string(tok.text) + "'");
  return value;
}

void expect_size(const Line& line, std::size_t n, const std::string& what) {
  if (line.size() != n) {
    const Token& tok = line.size() > n ? line.at(n) : line.at(line.size() - 1);
    fail(line, tok, what + " takes " + std::to_string(n - 1) + " fields");
  }
}

const Line& header(const Lexed& lx, std::string_view lead, std::string_view kind,
                   std::size_t fields) {
  if (lx.lines.empty()) throw ParseError(1, 1, "missing header '" + std::string(lead) + " " +
                                                   std::string(kind) + "'");
  const Line& h = lx.lines[0];
  if (h.at(0).text != lead || h.size() < 2 || h.at(1).text != kind)
    fail(h, h.at(0), "expected header '" + std::string(lead) + " " + std::string(kind) + "'");
  expect_size(h, fields, "header");
  return h;
}

std::string join_ids(const VertexSet& s) {
  std::string out;
  for (int v : s) out += " " + std::to_string(v + 1);
  return out;
}

std::string comma_ids(const VertexSet& s) {
  if (s.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out;
}

// Edge lines "e u v" shared by the graph and i-labeled formats.
void add_edge_line(Graph& g, const Line& line) {
  expect_size(line, 3, "edge line");
  const int n = g.num_vertices();
  const int u = static_cast<int>(to_int(line, line.at(1), 1, n, "vertex")) - 1;
  const int v = static_cast<int>(to_int(line, line.at(2), 1, n, "vertex")) - 1;
  if (u == v) fail(line, line.at(2), "loop on vertex " + std::to_string(u + 1));
  g.add_edge(u, v);
}

}  // namespace

std::string detect_format(std::string_view text) {
  Lexed lx = lex(text);
  if (lx.lines.empty() || lx.lines[0].size() < 2) return "";
  return std::string(lx.lines[0].at(1).text);
}

// ------------------------------------------------------------ hypergraph

Hypergraph parse_hypergraph(std::string_view text) {
  const Lexed lx = lex(text);
  const Line& h = header(lx, "p", "hg", 4);
  const int n = static_cast<int>(to_int(h, h.at(2), 1, INT_MAX / 2, "vertex count"));
  const int m = static_cast<int>(to_int(h, h.at(3), 1, INT_MAX / 2, "hyperedge count"));
  std::vector<VertexSet> edges;
  std::vector<bool> covered(n, false);
  for (std::size_t i = 1; i < lx.lines.size(); ++i) {
    const Line& line = lx.lines[i];
    if (static_cast<int>(edges.size()) == m)
      fail(line, line.at(0), "more hyperedge lines than the header declares");
    VertexSet e;
    for (const Token& tok : line.tokens) {
      const int v = static_cast<int>(to_int(line, tok, 1, n, "vertex")) - 1;
      e.push_back(v);
      covered[v] = true;
    }
    normalize(e);
    edges.push_back(std::move(e));
  }
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(lx.end_line, 1, "expected " + std::to_string(m) + " hyperedge lines, found " +
                                         std::to_string(edges.size()));
  for (int v = 0; v < n; ++v)
    if (!covered[v]) fail(h, h.at(2), "vertex " + std::to_string(v + 1) + " is isolated");
  return Hypergraph(n, std::move(edges));
}

std::string write_hypergraph(const Hypergraph& h) {
  std::string out = "p hg " + std::to_string(h.num_vertices()) + " " +
                    std::to_string(h.num_edges()) + "\n";
  for (const auto& e : h.edges()) out += join_ids(e).substr(1) + "\n";
  return out;
}

// ----------------------------------------------------------------- graph

Graph parse_graph(std::string_view text) {
  const Lexed lx = lex(text);
  const Line& h = header(lx, "p", "edge", 4);
  const int n = static_cast<int>(to_int(h, h.at(2), 0, INT_MAX / 2, "vertex count"));
  const long long m = to_int(h, h.at(3), 0, INT_MAX / 2, "edge count");
  Graph g(n);
  long long seen = 0;
  for (std::size_t i = 1; i < lx.lines.size(); ++i) {
    const Line& line = lx.lines[i];
    if (line.at(0).text != "e") fail(line, line.at(0), "expected an edge line 'e <u> <v>'");
    if (seen == m) fail(line, line.at(0), "more edge lines than the header declares");
    add_edge_line(g, line);
    ++seen;
  }
  if (seen != m)
    throw ParseError(lx.end_line, 1, "expected " + std::to_string(m) + " edge lines, found " +
                                         std::to_string(seen));
  return g;
}

std::string write_graph(const Graph& g) {
  const auto edges = g.edges();
  std::string out = "p edge " + std::to_string(g.num_vertices()) + " " +
                    std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

// ------------------------------------------------------------- i-labeled

ILabeledGraph parse_ilg(std::string_view text) {
  const Lexed lx = lex(text);
  const Line& h = header(lx, "p", "ilg", 4);
  const int n = static_cast<int>(to_int(h, h.at(2), 1, INT_MAX / 2, "vertex count"));
  const long long m = to_int(h, h.at(3), 0, INT_MAX / 2, "edge count");
  Graph g(n);
  long long edges = 0;
  std::vector<int> label(n, 0);  // bit 1 = N, bit 2 = M
  for (std::size_t i = 1; i < lx.lines.size(); ++i) {
    const Line& line = lx.lines[i];
    if (line.at(0).text == "e") {
      if (edges == m) fail(line, line.at(0), "more edge lines than the header declares");
      add_edge_line(g, line);
      ++edges;
    } else if (line.at(0).text == "v") {
      expect_size(line, 3, "label line");
      const int v = static_cast<int>(to_int(line, line.at(1), 1, n, "vertex")) - 1;
      if (label[v]) fail(line, line.at(1), "vertex " + std::to_string(v + 1) + " labeled twice");
      const std::string_view l = line.at(2).text;
      label[v] = l == "N" ? 1 : l == "M" ? 2 : (l == "NM" || l == "MN") ? 3 : 0;
      if (!label[v]) fail(line, line.at(2), "label must be N, M or NM");
    } else {
      fail(line, line.at(0), "expected 'e' or 'v' line");
    }
  }
  if (edges != m)
    throw ParseError(lx.end_line, 1, "expected " + std::to_string(m) + " edge lines, found " +
                                         std::to_string(edges));
  VertexSet ns, ms;
  for (int v = 0; v < n; ++v) {
    if (!label[v])
      throw ParseError(lx.end_line, 1, "vertex " + std::to_string(v + 1) + " has no label");
    if (label[v] & 1) ns.push_back(v);
    if (label[v] & 2) ms.push_back(v);
  }
  try {
    return ILabeledGraph(std::move(g), std::move(ns), std::move(ms));
  } catch (const InvalidInput& e) {
    fail(h, h.at(0), e.what());
  }
}

std::string write_ilg(const ILabeledGraph& ilg) {
  const auto edges = ilg.graph().edges();
  std::string out = "p ilg " + std::to_string(ilg.num_vertices()) + " " +
                    std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  for (int v = 0; v < ilg.num_vertices(); ++v)
    out += "v " + std::to_string(v + 1) + " " + (ilg.in_n(v) ? "N" : "") +
           (ilg.in_m(v) ? "M" : "") + "\n";
  return out;
}

std::variant<Hypergraph, ILabeledGraph> parse_host(std::string_view text) {
  if (detect_format(text) == "ilg") return parse_ilg(text);
  return parse_hypergraph(text);
}

// -------------------------------------------------------- decompositions

namespace {

struct RawDecomposition {
  int nodes = 0;
  std::vector<VertexSet> bags;
  std::vector<bool> has_bag;
  Graph tree;
  std::vector<Labeling> lambdas;
};

// Shared reader for td and htd; num_edges < 0 means labeling lines are
// not allowed.
RawDecomposition parse_decomposition(std::string_view text, std::string_view kind,
                                     int num_edges) {
  const Lexed lx = lex(text);
  const Line& h = header(lx, "s", kind, 4);
  RawDecomposition d;
  d.nodes = static_cast<int>(to_int(h, h.at(2), 1, INT_MAX / 2, "node count"));
  if (kind == "td") {
    to_int(h, h.at(3), -1, INT_MAX / 2, "width");
  } else {
    try {
      parse_rational(h.at(3).text);
    } catch (const std::invalid_argument&) {
      fail(h, h.at(3), "width must be a rational p/q");
    }
  }
  d.bags.assign(d.nodes, {});
  d.has_bag.assign(d.nodes, false);
  d.tree = Graph(d.nodes);
  std::vector<bool> has_labels(d.nodes, false);
  if (num_edges >= 0) d.lambdas.assign(d.nodes, Labeling(num_edges));
  for (std::size_t i = 1; i < lx.lines.size(); ++i) {
    const Line& line = lx.lines[i];
    const std::string_view tag = line.at(0).text;
    if (tag == "b") {
      if (line.size() < 2) fail(line, line.at(0), "bag line needs a node id");
      const int id = static_cast<int>(to_int(line, line.at(1), 1, d.nodes, "node id")) - 1;
      if (d.has_bag[id]) fail(line, line.at(1), "node " + std::to_string(id + 1) + " has two bags");
      d.has_bag[id] = true;
      for (std::size_t j = 2; j < line.size(); ++j)
        d.bags[id].push_back(static_cast<int>(to_int(line, line.at(j), 1, INT_MAX / 2, "vertex")) - 1);
      normalize(d.bags[id]);
    } else if (tag == "t") {
      expect_size(line, 3, "tree line");
      const int a = static_cast<int>(to_int(line, line.at(1), 1, d.nodes, "node id")) - 1;
      const int b = static_cast<int>(to_int(line, line.at(2), 1, d.nodes, "node id")) - 1;
      if (a == b) fail(line, line.at(2), "tree edge is a loop");
      if (d.tree.adjacent(a, b)) fail(line, line.at(0), "tree edge repeated");
      d.tree.add_edge(a, b);
    } else if (tag == "l" && num_edges >= 0) {
      if (line.size() < 2) fail(line, line.at(0), "labeling line needs a node id");
      const int id = static_cast<int>(to_int(line, line.at(1), 1, d.nodes, "node id")) - 1;
      if (has_labels[id]) fail(line, line.at(1), "node " + std::to_string(id + 1) + " labeled twice");
      has_labels[id] = true;
      std::set<int> seen;
      for (std::size_t j = 2; j < line.size(); ++j) {
        const Token& tok = line.at(j);
        const auto eq = tok.text.find('=');
        if (eq == std::string_view::npos) fail(line, tok, "expected <edge>=<p/q>");
        const Token edge_tok{tok.text.substr(0, eq), tok.col};
        const int e = static_cast<int>(to_int(line, edge_tok, 1, num_edges, "hyperedge")) - 1;
        if (!seen.insert(e).second) fail(line, tok, "hyperedge labeled twice");
        Rational value;
        try {
          value = parse_rational(tok.text.substr(eq + 1));
        } catch (const std::invalid_argument&) {
          fail(line, tok, "value must be a rational p/q");
        }
        if (value < 0 || value > 1) fail(line, tok, "value must lie in [0,1]");
        d.lambdas[id].set(e, value);
      }
    } else {
      fail(line, line.at(0), num_edges >= 0 ? "expected 'b', 'l' or 't' line"
                                            : "expected 'b' or 't' line");
    }
  }
  for (int id = 0; id < d.nodes; ++id)
    if (!d.has_bag[id])
      throw ParseError(lx.end_line, 1, "node " + std::to_string(id + 1) + " has no bag line");
  return d;
}

std::string decomposition_body(const TreeDecomposition& td,
                               const std::vector<Labeling>* lambdas) {
  std::string out;
  for (int i = 0; i < td.num_nodes(); ++i) out += "b " + std::to_string(i + 1) + join_ids(td.bags[i]) + "\n";
  if (lambdas)
    for (int i = 0; i < td.num_nodes(); ++i) {
      std::string line;
      const Labeling& l = (*lambdas)[i];
      for (std::size_t e = 0; e < l.domain(); ++e)
        if (l[e] != 0) line += " " + std::to_string(e + 1) + "=" + to_string(l[e]);
      if (!line.empty()) out += "l " + std::to_string(i + 1) + line + "\n";
    }
  for (auto [a, b] : td.tree.edges()) out += "t " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  return out;
}

}  // namespace

TreeDecomposition parse_td(std::string_view text) {
  RawDecomposition d = parse_decomposition(text, "td", -1);
  return TreeDecomposition{std::move(d.tree), std::move(d.bags)};
}

std::string write_td(const TreeDecomposition& td) {
  return "s td " + std::to_string(td.num_nodes()) + " " + std::to_string(td.width()) + "\n" +
         decomposition_body(td, nullptr);
}

HypertreeDecomposition parse_htd(std::string_view text, int num_edges) {
  RawDecomposition d = parse_decomposition(text, "htd", num_edges);
  return HypertreeDecomposition{TreeDecomposition{std::move(d.tree), std::move(d.bags)},
                                std::move(d.lambdas)};
}

std::string write_htd(const HypertreeDecomposition& d) {
  return "s htd " + std::to_string(d.base.num_nodes()) + " " + to_string(d.width()) + "\n" +
         decomposition_body(d.base, &d.lambdas);
}

// -------------------------------------------------------------- brambles

std::vector<VertexSet> parse_bramble_sets(std::string_view text) {
  const Lexed lx = lex(text);
  const Line& h = header(lx, "p", "bramble", 3);
  const long long count = to_int(h, h.at(2), 0, INT_MAX / 2, "set count");
  std::vector<VertexSet> sets;
  for (std::size_t i = 1; i < lx.lines.size(); ++i) {
    const Line& line = lx.lines[i];
    if (static_cast<long long>(sets.size()) == count)
      fail(line, line.at(0), "more set lines than the header declares");
    VertexSet s;
    for (const Token& tok : line.tokens)
      s.push_back(static_cast<int>(to_int(line, tok, 1, INT_MAX / 2, "vertex")) - 1);
    normalize(s);
    sets.push_back(std::move(s));
  }
  if (static_cast<long long>(sets.size()) != count)
    throw ParseError(lx.end_line, 1, "expected " + std::to_string(count) + " set lines, found " +
                                         std::to_string(sets.size()));
  return sets;
}

std::string write_bramble_sets(const std::vector<VertexSet>& sets) {
  std::string out = "p bramble " + std::to_string(sets.size()) + "\n";
  for (const auto& s : sets) out += join_ids(s).substr(s.empty() ? 0 : 1) + "\n";
  return out;
}

// ------------------------------------------------------------- grid spec

GridSpec parse_grid_spec(std::string_view text) {
  const Lexed lx = lex(text);
  const Line& h = header(lx, "p", "grid", 3);
  GridSpec spec;
  spec.k = static_cast<int>(to_int(h, h.at(2), 2, 4096, "grid side"));
  bool span_seen = false, scheme_seen = false;
  for (std::size_t i = 1; i < lx.lines.size(); ++i) {
    const Line& line = lx.lines[i];
    const std::string_view tag = line.at(0).text;
    if (tag == "d" || tag == "a" || tag == "x") {
      expect_size(line, 5, "grid edge line");
      int c[4];
      for (int j = 0; j < 4; ++j)
        c[j] = static_cast<int>(to_int(line, line.at(j + 1), 1, spec.k, "grid coordinate"));
      GridEdge e{{c[0], c[1]}, {c[2], c[3]}};
      (tag == "d" ? spec.triangulation : tag == "a" ? spec.additional : spec.augmentation).push_back(e);
    } else if (tag == "s") {
      expect_size(line, 2, "span line");
      if (span_seen) fail(line, line.at(0), "span given twice");
      span_seen = true;
      spec.span = static_cast<int>(to_int(line, line.at(1), 0, INT_MAX / 2, "span"));
    } else if (tag == "l") {
      expect_size(line, 2, "label scheme line");
      if (scheme_seen) fail(line, line.at(0), "label scheme given twice");
      scheme_seen = true;
      const std::string_view s = line.at(1).text;
      if (s == "automatic") spec.scheme = LabelScheme::automatic;
      else if (s == "bipartition") spec.scheme = LabelScheme::bipartition;
      else if (s == "vertex_cover") spec.scheme = LabelScheme::vertex_cover;
      else fail(line, line.at(1), "scheme must be automatic, bipartition or vertex_cover");
    } else {
      fail(line, line.at(0), "expected 'd', 'a', 'x', 's' or 'l' line");
    }
  }
  return spec;
}

std::string write_grid_spec(const GridSpec& spec) {
  std::string out = "p grid " + std::to_string(spec.k) + "\n";
  auto edges = [&](char tag, const std::vector<GridEdge>& list) {
    for (const auto& e : list)
      out += std::string(1, tag) + " " + std::to_string(e.a.row) + " " + std::to_string(e.a.col) +
             " " + std::to_string(e.b.row) + " " + std::to_string(e.b.col) + "\n";
  };
  edges('d', spec.triangulation);
  edges('a', spec.additional);
  edges('x', spec.augmentation);
  if (spec.span) out += "s " + std::to_string(spec.span) + "\n";
  if (spec.scheme == LabelScheme::bipartition) out += "l bipartition\n";
  if (spec.scheme == LabelScheme::vertex_cover) out += "l vertex_cover\n";
  return out;
}

// -------------------------------------------------------------- strategy

namespace {

VertexSet parse_list(const Line& line, const Token& tok, int limit, const std::string& what) {
  VertexSet out;
  if (tok.text == "-") return out;
  std::size_t start = 0;
  while (start <= tok.text.size()) {
    std::size_t end = tok.text.find(',', start);
    if (end == std::string_view::npos) end = tok.text.size();
    const Token part{tok.text.substr(start, end - start), tok.col + static_cast<int>(start)};
    out.push_back(static_cast<int>(to_int(line, part, 1, limit, what)) - 1);
    start = end + 1;
  }
  const std::size_t before = out.size();
  normalize(out);
  if (out.size() != before) fail(line, tok, "list repeats an id");
  return out;
}

}  // namespace

Strategy parse_strategy(std::string_view text, int num_vertices, int num_edges) {
  const Lexed lx = lex(text);
  const Line& h = header(lx, "s", "strat", 6);
  if (to_int(h, h.at(2), 1, INT_MAX / 2, "vertex count") != num_vertices)
    fail(h, h.at(2), "vertex count does not match the instance");
  if (to_int(h, h.at(3), 1, INT_MAX / 2, "hyperedge count") != num_edges)
    fail(h, h.at(3), "hyperedge count does not match the instance");
  Strategy s;
  s.cost = static_cast<int>(to_int(h, h.at(4), 0, num_edges, "cost"));
  s.monotone = to_int(h, h.at(5), 0, 1, "monotone flag") == 1;
  std::map<std::pair<VertexSet, VertexSet>, VertexSet> moves;
  for (std::size_t i = 1; i < lx.lines.size(); ++i) {
    const Line& line = lx.lines[i];
    if (line.at(0).text != "x") fail(line, line.at(0), "expected a move line 'x'");
    expect_size(line, 4, "move line");
    VertexSet marshals = parse_list(line, line.at(1), num_edges, "hyperedge");
    VertexSet territory = parse_list(line, line.at(2), num_vertices, "vertex");
    VertexSet next = parse_list(line, line.at(3), num_edges, "hyperedge");
    if (!moves.emplace(std::pair{std::move(marshals), std::move(territory)}, std::move(next)).second)
      fail(line, line.at(1), "state has two moves");
  }
  for (auto& [key, next] : moves) s.moves.push_back({key.first, key.second, next});
  return s;
}

std::string write_strategy(const Strategy& s, int num_vertices, int num_edges) {
  std::string out = "s strat " + std::to_string(num_vertices) + " " + std::to_string(num_edges) +
                    " " + std::to_string(s.cost) + " " + (s.monotone ? "1" : "0") + "\n";
  for (const auto& mv : s.moves)
    out += "x " + comma_ids(mv.marshals) + " " + comma_ids(mv.territory) + " " +
           comma_ids(mv.next) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hw

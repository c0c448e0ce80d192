#include "hw/report.hpp"

#include <cstdio>
#include <json.hpp>

#include "hw/brambles.hpp"
#include "hw/errors.hpp"
#include "hw/games.hpp"
#include "hw/io.hpp"
#include "hw/planarity.hpp"

namespace hw {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json input_info(std::string_view text) {
  return Json{{"format", detect_format(text)}, {"digest", content_digest(text)}};
}

Json one_based(const std::vector<int>& ids) {
  Json out = Json::array();
  for (int v : ids) out.push_back(v + 1);
  return out;
}

Json position(int id) { return id < 0 ? Json(nullptr) : Json(id + 1); }

Json edge_list(const std::vector<std::pair<int, int>>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back(Json::array({u + 1, v + 1}));
  return out;
}

Hypergraph load_hypergraph(std::string_view text) {
  if (detect_format(text) == "edge") return hypergraph_of_graph(parse_graph(text));
  return parse_hypergraph(text);
}

Json td_json(const TdReport& r) {
  return Json{{"valid", r.valid},     {"violation", r.violation}, {"node", position(r.node)},
              {"vertex", position(r.vertex)}, {"width", r.width}};
}

Json htd_json(const HtdReport& r) {
  return Json{{"valid", r.valid},
              {"violation", r.violation},
              {"node", position(r.node)},
              {"vertex", position(r.vertex)},
              {"width", to_string(r.width)},
              {"generalized", r.generalized}};
}

Json certificate_json(const OrderCertificate& c) {
  return Json{{"size", c.size},
              {"influence", c.influence},
              {"valency", c.valency},
              {"lower_bound", to_string(c.lower_bound)},
              {"exact_order", c.exact_order ? Json(to_string(*c.exact_order)) : Json(nullptr)},
              {"recheck", c.recheck()}};
}

const char* scheme_name(LabelScheme s) {
  switch (s) {
    case LabelScheme::bipartition: return "bipartition";
    case LabelScheme::vertex_cover: return "vertex_cover";
    default: return "automatic";
  }
}

constexpr int kExactOrderMaxSets = 12;

}  // namespace

std::string content_digest(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

CommandOutput run_compute(const std::string& kind, std::string_view input,
                          std::optional<int> exact_limit) {
  if (kind != "tw" && kind != "ghw" && kind != "fhw")
    throw InvalidInput("unknown measure '" + kind + "'");
  const bool graph_input = detect_format(input) == "edge";
  Json j{{"command", "compute " + kind}, {"input", input_info(input)}};
  CommandOutput out;
  if (kind == "tw") {
    ExactLimits limits;
    if (exact_limit) limits.treewidth = *exact_limit;
    Graph g;
    if (graph_input) {
      g = parse_graph(input);
      j["measure"] = "tw(G)";
    } else {
      g = incidence_graph(parse_hypergraph(input)).graph();
      j["measure"] = "tw(I(H))";
    }
    const TreewidthResult r = exact_treewidth(g, limits);
    const TdReport check = validate_td(g, r.decomposition);
    j["vertices"] = g.num_vertices();
    j["value"] = r.width;
    j["exact"] = true;
    j["method"] = "subset-dp";
    j["order"] = one_based(r.order);
    j["witness"] = Json{{"nodes", r.decomposition.num_nodes()}, {"check", td_json(check)}};
    out.artifact = write_td(r.decomposition);
    out.exit_code = check.valid && check.width == r.width ? kExitOk : kExitFailed;
  } else {
    ExactLimits limits;
    if (exact_limit) limits.fwidth = *exact_limit;
    const Hypergraph h = load_hypergraph(input);
    const CoverKind cover = kind == "fhw" ? CoverKind::fractional : CoverKind::integral;
    const FwidthResult r = exact_fwidth(h, cover, limits);
    const HtdReport check = validate_htd(h, r.decomposition);
    j["measure"] = kind;
    j["vertices"] = h.num_vertices();
    j["hyperedges"] = h.num_edges();
    j["value"] = to_string(r.width);
    j["exact"] = true;
    j["method"] = h.num_vertices() <= 12 ? "subset-dp" : "search";
    j["order"] = one_based(r.order);
    j["witness"] = Json{{"nodes", r.decomposition.base.num_nodes()}, {"check", htd_json(check)}};
    out.artifact = write_htd(r.decomposition);
    out.exit_code = check.valid && check.width == r.width ? kExitOk : kExitFailed;
  }
  out.text = dump(j);
  return out;
}

CommandOutput run_validate(const std::string& kind, std::string_view instance,
                           std::string_view decomposition) {
  Json j{{"command", "validate " + kind},
         {"instance", input_info(instance)},
         {"decomposition", input_info(decomposition)}};
  bool valid = false;
  if (kind == "td") {
    const TreeDecomposition td = parse_td(decomposition);
    const TdReport r = detect_format(instance) == "edge" ? validate_td(parse_graph(instance), td)
                                                          : validate_td(parse_hypergraph(instance), td);
    j["result"] = td_json(r);
    valid = r.valid;
  } else if (kind == "htd") {
    const Hypergraph h = load_hypergraph(instance);
    const HtdReport r = validate_htd(h, parse_htd(decomposition, h.num_edges()));
    j["result"] = htd_json(r);
    valid = r.valid;
  } else {
    throw InvalidInput("unknown decomposition kind '" + kind + "'");
  }
  return {dump(j), valid ? kExitOk : kExitFailed, {}};
}

CommandOutput run_convert(std::string_view instance, std::string_view td_text) {
  const Hypergraph h = parse_hypergraph(instance);
  const TreeDecomposition td = parse_td(td_text);
  const TdReport input_check = validate_td(incidence_graph(h).graph(), td);
  if (!input_check.valid) {
    Json j{{"command", "convert"},
           {"instance", input_info(instance)},
           {"td", input_info(td_text)},
           {"input_check", td_json(input_check)}};
    return {dump(j), kExitFailed, {}};
  }
  const HypertreeDecomposition d = convert_incidence_td(h, td);
  const HtdReport check = validate_htd(h, d);
  if (!check.valid || !check.generalized || check.width > Rational(td.width() + 1)) {
    Json j{{"command", "convert"},
           {"instance", input_info(instance)},
           {"td", input_info(td_text)},
           {"output_check", htd_json(check)}};
    return {dump(j), kExitFailed, {}};
  }
  return {write_htd(d), kExitOk, {}};
}

CommandOutput run_certify_grid(std::string_view spec_text) {
  const GridSpec spec = parse_grid_spec(spec_text);
  validate_grid_spec(spec);
  const Bramble b = grid_bramble(spec);
  Json j{{"command", "certify grid"}, {"input", input_info(spec_text)}};
  j["grid"] = Json{{"k", spec.k},
                   {"diagonals", spec.triangulation.size()},
                   {"additional", spec.additional.size()},
                   {"augmentation", spec.augmentation.size()},
                   {"span", spec.span},
                   {"scheme", scheme_name(resolved_scheme(spec))}};
  const BrambleReport check = verify_bramble(b);
  j["bramble"] = Json{{"sets", b.sets.size()}, {"valid", check.valid}, {"violation", check.violation}};
  if (!check.valid) return {dump(j), kExitFailed, {}};
  OrderCertificate cert = order_lower_bound(b);
  if (static_cast<int>(b.sets.size()) <= kExactOrderMaxSets) cert.exact_order = exact_order(b);
  j["certificate"] = certificate_json(cert);
  return {dump(j), cert.recheck() ? kExitOk : kExitFailed, {}};
}

CommandOutput run_certify_bramble(std::string_view bramble_text, std::string_view instance) {
  Bramble b{parse_host(instance), parse_bramble_sets(bramble_text)};
  Json j{{"command", "certify bramble"},
         {"bramble", input_info(bramble_text)},
         {"instance", input_info(instance)}};
  const BrambleReport check = verify_bramble(b);
  j["verification"] = Json{{"sets", b.sets.size()},
                           {"valid", check.valid},
                           {"violation", check.violation},
                           {"first", position(check.first)},
                           {"second", position(check.second)}};
  if (!check.valid || b.sets.empty()) {
    if (b.sets.empty()) j["verification"]["violation"] = "bramble is empty";
    return {dump(j), kExitFailed, {}};
  }
  const Bramble labeled = b.on_hypergraph() ? bramble_from_hypergraph(b) : b;
  OrderCertificate cert = order_lower_bound(labeled);
  if (static_cast<int>(b.sets.size()) <= kExactOrderMaxSets) cert.exact_order = exact_order(b);
  j["certificate"] = certificate_json(cert);
  bool ok = cert.recheck();
  if (b.on_hypergraph() && cert.exact_order) {
    const Hypergraph& h = std::get<Hypergraph>(b.host);
    const ExactLimits limits;
    if (h.num_vertices() <= limits.fwidth) {
      const Rational fhw = exact_fwidth(h, CoverKind::fractional, limits).width;
      j["fhw"] = to_string(fhw);
      j["order_at_most_fhw"] = *cert.exact_order <= fhw;
      ok = ok && *cert.exact_order <= fhw;
    }
  }
  return {dump(j), ok ? kExitOk : kExitFailed, {}};
}

CommandOutput run_game_mw(std::string_view input) {
  const Hypergraph h = load_hypergraph(input);
  const int mw = marshal_width(h);
  const GameResult win = marshals_win(h, mw);
  const Strategy mono = monotonize(h, win.strategy);
  Json j{{"command", "game mw"}, {"input", input_info(input)}};
  j["vertices"] = h.num_vertices();
  j["hyperedges"] = h.num_edges();
  j["marshal_width"] = mw;
  j["states"] = win.num_states;
  j["strategy"] = Json{{"cost", win.strategy.cost},
                       {"monotone", win.strategy.monotone},
                       {"moves", win.strategy.moves.size()}};
  if (mw > 1) {
    const GameResult lose = marshals_win(h, mw - 1);
    j["escape_below"] = Json{{"marshals", mw - 1},
                             {"states", lose.escape.states.size()},
                             {"verified", check_escape(h, mw - 1, lose.escape)}};
  }
  j["monotone_cost"] = mono.cost;
  return {dump(j), kExitOk, write_strategy(win.strategy, h.num_vertices(), h.num_edges())};
}

CommandOutput run_game_extract(std::string_view input, std::optional<std::string_view> strategy) {
  const Hypergraph h = load_hypergraph(input);
  Strategy s;
  if (strategy) {
    s = parse_strategy(*strategy, h.num_vertices(), h.num_edges());
  } else {
    for (int k = 1; k <= h.num_edges(); ++k) {
      GameResult r = marshals_win(h, k, true);
      if (r.marshals_win) {
        s = std::move(r.strategy);
        break;
      }
    }
  }
  Json j{{"command", "game extract"}, {"input", input_info(input)}};
  HypertreeDecomposition d;
  try {
    d = extract_decomposition(h, s);
  } catch (const InvalidInput& e) {
    j["error"] = e.what();
    return {dump(j), kExitFailed, {}};
  }
  const HtdReport check = validate_htd(h, d);
  if (!check.valid || !check.generalized || check.width > Rational(3 * s.cost + 1)) {
    j["output_check"] = htd_json(check);
    j["cost"] = s.cost;
    return {dump(j), kExitFailed, {}};
  }
  return {write_htd(d), kExitOk, {}};
}

CommandOutput run_sandwich(std::string_view input, const ExactLimits& limits) {
  const Hypergraph h = load_hypergraph(input);
  const SandwichReport r = sandwich_report(h, limits);
  auto figure = [](const WidthFigure& f) {
    return Json{{"value", to_string(f.value)}, {"exact", f.exact}, {"method", f.method}};
  };
  Json j{{"command", "sandwich"}, {"input", input_info(input)}};
  j["vertices"] = h.num_vertices();
  j["hyperedges"] = h.num_edges();
  j["fhw"] = figure(r.fhw);
  j["ghw"] = figure(r.ghw);
  j["tw_incidence_plus_one"] = figure(r.tw_incidence_plus_one);
  j["chain"] = r.chain_holds ? "pass" : "fail";
  if (!r.chain_holds) j["failure"] = r.failure;
  const PlanarityResult p = planarity_check(incidence_graph(h).graph());
  j["incidence_planar"] = p.planar;
  if (!p.planar) j["kuratowski"] = edge_list(p.kuratowski);
  return {dump(j), r.chain_holds ? kExitOk : kExitFailed, {}};
}

CommandOutput run_planar(std::string_view input) {
  const bool graph_input = detect_format(input) == "edge";
  const Graph g = graph_input ? parse_graph(input) : incidence_graph(parse_hypergraph(input)).graph();
  const PlanarityResult p = planarity_check(g);
  Json j{{"command", "planar"}, {"input", input_info(input)}};
  j["graph"] = graph_input ? "G" : "I(H)";
  j["planar"] = p.planar;
  if (p.planar) {
    Json rot = Json::array();
    for (const auto& r : p.rotation) rot.push_back(one_based(r));
    j["rotation"] = rot;
  } else {
    j["kuratowski"] = edge_list(p.kuratowski);
  }
  return {dump(j), kExitOk, {}};
}

}  // namespace hw

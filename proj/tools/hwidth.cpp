// hwidth: width parameters, decompositions, brambles and games on the
// command line. See README.md for the file formats.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hw/brambles.hpp"
#include "hw/errors.hpp"
#include "hw/gen.hpp"
#include "hw/io.hpp"
#include "hw/report.hpp"

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hw::InvalidInput("cannot write " + path);
  out << text;
}

int emit(const hw::CommandOutput& out, const std::string& artifact_path = "") {
  std::cout << out.text;
  if (!artifact_path.empty() && !out.artifact.empty()) write_file(artifact_path, out.artifact);
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph width parameters, bramble certificates and marshal games"};
  app.require_subcommand(1);
  std::function<int()> action;

  // compute
  auto* compute = app.add_subcommand("compute", "Exact tw, ghw or fhw with a witness decomposition");
  std::string measure, input, witness_out;
  std::optional<int> exact_limit;
  compute->add_option("measure", measure, "tw, ghw or fhw")->required()->check(CLI::IsMember({"tw", "ghw", "fhw"}));
  compute->add_option("--input", input, "Hypergraph or graph file")->required();
  compute->add_option("--exact-limit", exact_limit, "Largest vertex count solved exactly");
  compute->add_option("--witness-out", witness_out, "Write the witness decomposition here");
  compute->callback([&] {
    action = [&] { return emit(hw::run_compute(measure, hw::read_text_file(input), exact_limit), witness_out); };
  });

  // validate
  auto* validate = app.add_subcommand("validate", "Check a decomposition against an instance");
  std::string dkind, instance, decomposition;
  validate->add_option("kind", dkind, "td or htd")->required()->check(CLI::IsMember({"td", "htd"}));
  validate->add_option("--instance", instance)->required();
  validate->add_option("--decomposition", decomposition)->required();
  validate->callback([&] {
    action = [&] {
      return emit(hw::run_validate(dkind, hw::read_text_file(instance), hw::read_text_file(decomposition)));
    };
  });

  // convert
  auto* convert = app.add_subcommand("convert", "Incidence-graph tree decomposition to a generalized hypertree decomposition");
  std::string td_path;
  convert->add_option("--instance", instance)->required();
  convert->add_option("--td", td_path)->required();
  convert->callback([&] {
    action = [&] { return emit(hw::run_convert(hw::read_text_file(instance), hw::read_text_file(td_path))); };
  });

  // certify
  auto* certify = app.add_subcommand("certify", "Bramble order certificate");
  std::string grid_spec, bramble;
  auto* grid_opt = certify->add_option("--grid-spec", grid_spec, "Grid specification file");
  auto* bramble_opt = certify->add_option("--bramble", bramble, "Bramble file");
  auto* inst_opt = certify->add_option("--instance", instance, "Host instance for --bramble");
  grid_opt->excludes(bramble_opt);
  bramble_opt->needs(inst_opt);
  certify->callback([&] {
    if (grid_spec.empty() && bramble.empty()) throw CLI::ValidationError("certify", "--grid-spec or --bramble is required");
    action = [&] {
      if (!grid_spec.empty()) return emit(hw::run_certify_grid(hw::read_text_file(grid_spec)));
      return emit(hw::run_certify_bramble(hw::read_text_file(bramble), hw::read_text_file(instance)));
    };
  });

  // game
  auto* game = app.add_subcommand("game", "Marshals-and-robbers game");
  std::string game_kind, strategy, strategy_out;
  game->add_option("kind", game_kind, "mw or extract")->required()->check(CLI::IsMember({"mw", "extract"}));
  game->add_option("--input", input)->required();
  game->add_option("--strategy", strategy, "Strategy file for extract");
  game->add_option("--strategy-out", strategy_out, "Write the winning strategy (mw)");
  game->callback([&] {
    action = [&] {
      const std::string text = hw::read_text_file(input);
      if (game_kind == "mw") return emit(hw::run_game_mw(text), strategy_out);
      if (strategy.empty()) return emit(hw::run_game_extract(text));
      const std::string s = hw::read_text_file(strategy);
      return emit(hw::run_game_extract(text, std::string_view(s)));
    };
  });

  // sandwich
  auto* sandwich = app.add_subcommand("sandwich", "fhw <= ghw <= tw(I)+1 with planarity of I(H)");
  sandwich->add_option("--input", input)->required();
  sandwich->callback([&] { action = [&] { return emit(hw::run_sandwich(hw::read_text_file(input))); }; });

  // planar
  auto* planar = app.add_subcommand("planar", "Planarity with an embedding or a Kuratowski subgraph");
  planar->add_option("--input", input)->required();
  planar->callback([&] { action = [&] { return emit(hw::run_planar(hw::read_text_file(input))); }; });

  // gen
  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  auto* gadget = gen->add_subcommand("gadget", "Replace each edge of a graph by |V|+1 paths of length 2");
  std::string source;
  gadget->add_option("graph", source, "Graph file")->required();
  gadget->callback([&] {
    action = [&] {
      std::cout << hw::write_hypergraph(hw::path_gadget(hw::parse_graph(hw::read_text_file(source))));
      return 0;
    };
  });
  auto* universal = gen->add_subcommand("universal", "Append a hyperedge containing every vertex");
  universal->add_option("hypergraph", source, "Hypergraph file")->required();
  universal->callback([&] {
    action = [&] {
      std::cout << hw::write_hypergraph(hw::add_universal_edge(hw::parse_hypergraph(hw::read_text_file(source))));
      return 0;
    };
  });
  auto* grid = gen->add_subcommand("grid", "i-labeled k x k grid");
  int k = 0, gridoid = -1, augment = -1;
  std::uint64_t seed = 1;
  bool triangulate = false, as_spec = false;
  grid->add_option("k", k)->required();
  auto* tri_flag = grid->add_flag("--triangulate", triangulate, "Diagonal in every cell");
  auto* gridoid_opt = grid->add_option("--gridoid", gridoid, "Number of random additional edges");
  auto* augment_opt = grid->add_option("--augment", augment, "Augmentation span");
  tri_flag->excludes(gridoid_opt)->excludes(augment_opt);
  gridoid_opt->excludes(augment_opt);
  grid->add_option("--seed", seed);
  grid->add_flag("--spec", as_spec, "Emit the grid specification instead of the labeled graph");
  grid->callback([&] {
    action = [&] {
      hw::GridSpec spec;
      spec.k = k;
      if (triangulate) spec = hw::triangulated_grid_spec(k);
      if (gridoid >= 0) spec = hw::gridoid_spec(k, gridoid, seed);
      if (augment >= 0) spec = hw::augmented_grid_spec(k, augment, seed);
      std::cout << (as_spec ? hw::write_grid_spec(spec) : hw::write_ilg(hw::build_grid(spec)));
      return 0;
    };
  });
  auto* random = gen->add_subcommand("random", "Seeded random hypergraph");
  int rn = 0, rm = 0, arity = 0;
  std::uint64_t rseed = 0;
  random->add_option("n", rn)->required();
  random->add_option("m", rm)->required();
  random->add_option("maxarity", arity)->required();
  random->add_option("seed", rseed)->required();
  random->callback([&] {
    action = [&] {
      std::cout << hw::write_hypergraph(hw::random_hypergraph(rn, rm, arity, rseed));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hw::kExitParse;
  }
  try {
    return action();
  } catch (const hw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return hw::kExitParse;
  } catch (const hw::BrambleEmptied& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hw::kExitFailed;
  } catch (const hw::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return hw::kExitParse;
  } catch (const hw::LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return hw::kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hw::kExitFailed;
  }
}

#pragma once

// Command implementations shared by the command-line tool and the
// acceptance suite. Each takes file contents, not paths, and returns the
// report (pretty-printed JSON or a decomposition file) with an exit code.
// Parse and input errors propagate as ParseError / InvalidInput, limits as
// LimitExceeded.

#include <optional>
#include <string>
#include <string_view>

#include "hw/decomp.hpp"

namespace hw {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,
  kExitParse = 2,
  kExitLimit = 3,
};

struct CommandOutput {
  std::string text;      // written to stdout
  int exit_code = kExitOk;
  std::string artifact;  // optional secondary file (witness or strategy)
};

// "fnv1a64:" followed by 16 hex digits.
std::string content_digest(std::string_view text);

// kind: "tw", "ghw" or "fhw". Graph input: tw(G); hypergraph input: tw of
// the incidence graph. Artifact: the witness decomposition file.
CommandOutput run_compute(const std::string& kind, std::string_view input,
                          std::optional<int> exact_limit = std::nullopt);

// kind: "td" or "htd". A td is checked against a graph instance or the
// hypergraph itself. Exit 1 when invalid.
CommandOutput run_validate(const std::string& kind, std::string_view instance,
                           std::string_view decomposition);

// Tree decomposition of I(H) to a generalized hypertree decomposition of H.
CommandOutput run_convert(std::string_view instance, std::string_view td);

CommandOutput run_certify_grid(std::string_view spec);
CommandOutput run_certify_bramble(std::string_view bramble, std::string_view instance);

// Artifact: the winning strategy file.
CommandOutput run_game_mw(std::string_view input);
// Without a strategy, the least-cost monotone strategy is solved for.
CommandOutput run_game_extract(std::string_view input,
                               std::optional<std::string_view> strategy = std::nullopt);

CommandOutput run_sandwich(std::string_view input, const ExactLimits& limits = {});

// Graph input, or a hypergraph (checked through its incidence graph).
CommandOutput run_planar(std::string_view input);

}  // namespace hw

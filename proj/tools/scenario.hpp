#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reslat.h"

namespace reslat_cli {

struct ScenarioEdit {
  std::int64_t start[2];
  std::int64_t end[2];
  double beta = 0.0;  // 0 = removed
};

struct ScenarioQuery {
  std::int64_t i[2];
  std::int64_t j[2];
};

struct Window {
  std::int64_t m0, n0, m1, n1;
};

/// Parsed scenario file (versioned JSON, see README for the grammar).
struct Scenario {
  rl_lattice_kind lattice = RL_LATTICE_SQUARE;
  std::vector<ScenarioEdit> edits;
  std::vector<ScenarioQuery> queries;
  bool auto_augment = true;
  std::optional<Window> current_window;
  std::string output_prefix;
};

/// Parse error with 1-based line information for diagnostics.
struct ParseError {
  std::string message;
  int line = 0;
};

/// Loads and validates a scenario file.  Throws ParseError.
Scenario load_scenario(const std::string& path);

/// Serializes a scenario back to its file form (used by the fixture
/// generator; the output round-trips through load_scenario).
std::string scenario_to_json(const Scenario& s);

}  // namespace reslat_cli

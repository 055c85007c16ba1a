#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfloc/modulation.hpp"
#include "tfloc/verify.hpp"
#include "tfloc/young.hpp"

namespace tfloc {

/// Run configuration. Parsing validates the schema and fills defaults
/// (C = 3K, M = 6K+1), so the parsed value is canonical and
/// parse(serialize(c)) == c.
struct Config {
  std::uint64_t seed = 1;
  LatticeSpec lattice = LatticeSpec::with_defaults(1, 8);
  int M = 49;
  WindowSpec window = WindowSpec::gaussian();
  YoungFunction phi = YoungFunction::eq5();
  std::optional<YoungFunction> psi;
  /// Checks to run, each fully resolved against the registry defaults.
  /// Empty means the whole registry at its defaults.
  std::vector<CheckSpec> checks;
  std::string output = "report.jsonl";
  /// 0 selects the number of available cores.
  int threads = 0;
  bool timing = false;
};

bool operator==(const Config& a, const Config& b);

Config default_config();
/// UsageError on malformed JSON, unknown keys, wrong types or invalid values.
Config parse_config(std::string_view json_text);
std::string serialize_config(const Config& c);

/// Young function from a JSON value: a name string ("power(2)", "eq5", ...)
/// or an object {"kind": "power"|"eq5"|"quasi"|"conjugate", "p"?, "base"?}.
YoungFunction young_from_json_text(std::string_view json_text);
std::string young_to_json(const YoungFunction& phi);

/// Checks the config asks for (the full registry when none are listed).
std::vector<CheckSpec> resolved_checks(const Config& c);
Environment make_environment(const Config& c);

}  // namespace tfloc

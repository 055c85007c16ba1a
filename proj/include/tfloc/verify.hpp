#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tfloc/lattice.hpp"
#include "tfloc/modulation.hpp"
#include "tfloc/rng.hpp"
#include "tfloc/young.hpp"

namespace tfloc {

/// One requested check: registered id, ensemble size, relative slack, seed.
struct CheckSpec {
  std::string id;
  int trials = 1;
  double tolerance = 1e-10;
  std::uint64_t seed = 0;

  friend bool operator==(const CheckSpec&, const CheckSpec&) = default;
};

/// Outcome of one check. worst_margin is the minimum over trials of the
/// normalised margin (RHS - LHS) / RHS, or minus the relative deviation for
/// identities; a trial violates when its margin is below -tolerance.
struct CheckResult {
  std::string id;
  int trials = 0;
  int violations = 0;
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  double elapsed = 0.0;
  std::optional<std::string> tier;
};

/// Registry entry.
struct CheckInfo {
  std::string id;
  std::string module;
  int default_trials;
  double default_tolerance;
  std::string summary;
};

/// Every registered check in a fixed order.
const std::vector<CheckInfo>& registry();
/// UsageError naming the id when it is not registered.
const CheckInfo& lookup(std::string_view id);
/// Full suite at registry defaults, all checks seeded with `seed`.
std::vector<CheckSpec> default_checks(std::uint64_t seed);

/// Lattice, grid, analysis window and Young function shared by every check.
struct Environment {
  LatticeSpec lattice = LatticeSpec::with_defaults(1, 8);
  TorusGrid torus = TorusGrid(1, 49);
  WindowSpec window = WindowSpec::gaussian();
  YoungFunction phi = YoungFunction::eq5();
  /// Worker threads for trials within a check; results do not depend on it.
  int threads = 1;
  /// Record wall-clock seconds in CheckResult::elapsed (otherwise 0).
  bool timing = false;
};

/// Runs the checks in order. UsageError for unknown ids or an inconsistent
/// environment; library errors are rethrown with the failing check id.
std::vector<CheckResult> run_suite(const std::vector<CheckSpec>& specs, const Environment& env);

/// One JSON object per result, newline-terminated, fields in the order
/// id, trials, violations, worst_margin, seed, elapsed, tier.
std::string report_line(const CheckResult& r);
std::string report_jsonl(const std::vector<CheckResult>& results);

enum class EnsembleKind { gaussian_signal, trig_symbol, indicator_symbol, rank_one_symbol };

/// "gaussian-signal", "trig-symbol", "indicator-symbol", "rank-one-symbol".
EnsembleKind parse_ensemble_kind(std::string_view name);

/// gaussian-signal: i.i.d. standard complex normals on [-K,K]^n.
/// trig-symbol: per lattice slice |m| <= 2K, random trigonometric polynomial
///   of per-axis degree K.
/// indicator-symbol: indicator of a random lattice box times a Fejer bump of
///   degree K (non-negative real).
/// rank-one-symbol: V_g u conj(V_g v) for random admissible u, v and the
///   environment window.
std::variant<Signal, PhaseSpaceField> generate_ensemble(EnsembleKind kind, const Environment& env,
                                                        std::uint64_t seed);

namespace ensemble {

Signal gaussian_signal(const LatticeSpec& spec, Rng& rng, int radius);
PhaseSpaceField trig_symbol(const LatticeSpec& spec, const TorusGrid& torus, int m_radius,
                            int degree, Rng& rng);
PhaseSpaceField indicator_symbol(const LatticeSpec& spec, const TorusGrid& torus, int m_radius,
                                 Rng& rng);
PhaseSpaceField rank_one_symbol(const Signal& u, const Signal& v, const Signal& window,
                                const TorusGrid& torus);

}  // namespace ensemble

}  // namespace tfloc

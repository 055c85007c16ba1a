#pragma once

#include <string>
#include <string_view>

#include "tfloc/lattice.hpp"
#include "tfloc/locop.hpp"
#include "tfloc/young.hpp"

namespace tfloc {

/// "%.17g"; non-finite values become "null".
std::string format_double(double x);

std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

/// {"n","K","C","values":[[re,im],...]} in lattice order.
std::string signal_to_json(const Signal& f);
Signal signal_from_json(std::string_view text);

/// {"n","K","C","m_radius","M","degree_bound","values"} in (m, j) order.
std::string field_to_json(const PhaseSpaceField& F);
PhaseSpaceField field_from_json(std::string_view text);

/// {"size","order":"row-major","values":[[re,im],...]}.
std::string kernel_to_json(const OperatorKernel& K);
/// Raw little-endian float64 (re, im interleaved, row-major) at `path` and
/// the sidecar {"size","order"} at `path + ".json"`.
void write_kernel_raw(const OperatorKernel& K, const std::string& path);

/// {"singular_values","trace":[re,im],"hs_norm","schatten":{"1":..,"inf":..}}.
std::string summary_to_json(const SpectralSummary& s);

/// Young function from its name: power(p), eq5, quasi(<name>,p),
/// conjugate(<name>).
YoungFunction parse_young(std::string_view text);

}  // namespace tfloc

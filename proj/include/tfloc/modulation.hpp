#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tfloc/lattice.hpp"
#include "tfloc/young.hpp"

namespace tfloc {

/// How an analysis window is built.
struct WindowSpec {
  enum class Kind { gaussian, kronecker, file };
  enum class Normalization { unit, none };

  Kind kind = Kind::gaussian;
  /// Gaussian width s in c e^{-pi |k|^2 / s}; <= 0 selects the default K/2.
  double width = 0.0;
  Normalization normalization = Normalization::unit;
  /// Samples for Kind::file (already loaded).
  std::optional<Signal> samples;
  std::string path;

  static WindowSpec gaussian(double width = 0.0) { return {Kind::gaussian, width}; }
  static WindowSpec kronecker() { return {Kind::kronecker, 0.0}; }
};

/// Realise a window on the lattice; result is admissible and non-zero.
Signal make_window(const WindowSpec& spec, const LatticeSpec& lattice);

/// Default symbol window on Z^n x T^n: the unit lattice Gaussian times the
/// per-axis Fejer kernel of degree floor(M/4), normalised to unit L^2 norm.
/// Lattice radius K, degree bound floor(M/4).
PhaseSpaceField default_symbol_window(const LatticeSpec& lattice, const TorusGrid& torus);

/// L^p norm of a phase-space field under counting x grid quadrature; p = inf
/// gives the maximum modulus.
double field_lp_norm(const PhaseSpaceField& F, double p);

/// ||f||_{M^p} = ||V_g f||_{L^p}.
double modulation_norm(const Signal& f, const Signal& window, const TorusGrid& torus, double p);

enum class OrliczVariant { M_Phi, M_PhiPsi, W_PhiPsi };

/// M^Phi: Luxemburg of |V_g f| over the product measure.
/// M^{Phi,Psi}: mixed_norm(V_g f, Phi, Psi).  W^{Phi,Psi}: mixed_norm_swapped.
double orlicz_modulation_norm(const Signal& f, const Signal& window, const TorusGrid& torus,
                              const YoungFunction& phi, const std::optional<YoungFunction>& psi,
                              OrliczVariant variant);

/// Same norms for signals supported beyond [-K,K]^n (e.g. operator outputs):
/// the STFT is taken over the lattice range supp f + supp g.
double modulation_norm_extended(const Signal& f, const Signal& window, const TorusGrid& torus,
                                double p);
double orlicz_modulation_norm_extended(const Signal& f, const Signal& window,
                                       const TorusGrid& torus, const YoungFunction& phi);

/// ||sigma||_{M^p(Z^n x T^n)} = || V_{G0} sigma ||_{L^p}.
double symbol_modulation_norm(const PhaseSpaceField& sigma, const PhaseSpaceField& window,
                              double p);

struct EmbeddingCertificate {
  bool holds = false;
  /// Smallest C with Psi_i(x) <= C Phi_i(x) on the grid (when holds).
  double C = 0.0;
};

/// Grid certificate for "Psi_i(x) <= C Phi_i(x) on (0, x0], i = 1, 2".
/// The grid is log-spaced over [x0 * 1e-12, x0]. holds = false when some
/// Phi_i vanishes where Psi_i does not, or when the ratio Psi_i/Phi_i keeps
/// growing towards 0 without decelerating (increase over the lower half of
/// the log range at least half the increase over the upper half).
EmbeddingCertificate embedding_condition(const std::pair<YoungFunction, YoungFunction>& phi_pair,
                                         const std::pair<YoungFunction, YoungFunction>& psi_pair,
                                         double x0, int grid = 256);

}  // namespace tfloc

#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "tfloc/lattice.hpp"

namespace tfloc {

/// Dense matrix of a localization operator on [-C,C]^n, rows and columns in
/// lattice order.
struct OperatorKernel {
  LatticeSpec spec;
  Eigen::MatrixXcd matrix;
  /// Identifiers of symbol, windows and grid the kernel was built from.
  std::string provenance;

  Signal operator*(const Signal& f) const;
  bool hermitian(double tol = 1e-12) const;
};

/// Singular values (descending), trace, Hilbert-Schmidt norm and requested
/// Schatten norms. Schatten p = infinity is keyed by +inf.
struct SpectralSummary {
  std::vector<double> singular_values;
  cplx trace;
  double hs_norm = 0.0;
  std::map<double, double> schatten;

  double s1() const { return singular_values.empty() ? 0.0 : singular_values.front(); }
  /// Schatten norm computed on demand from the singular values.
  double schatten_norm(double p) const;
};

/// L f(k) = sum_m (1/M^n) sum_j sigma(m,w_j) V_{g1} f(m,w_j) (M_{w_j} T_m g2)(k),
/// evaluated as stft_adjoint(sigma . stft(f, g1), g2).
Signal apply(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2, const Signal& f);

/// <L f, h> through the phase-space pairing
/// sum_m (1/M^n) sum_j sigma V_{g1} f conj(V_{g2} h). h may be any signal on
/// [-C,C]^n; its STFT is taken over the symbol's lattice range.
cplx weak_pairing(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2,
                  const Signal& f, const Signal& h);

/// K(k,l) = sum_m int sigma(m,w) conj(M_w T_m g1(l)) M_w T_m g2(k) dw, exact
/// when deg sigma + supp g1 + supp g2 <= M - 1.
OperatorKernel kernel(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2);

/// Kernel of the adjoint, built as kernel(conj(sigma), g2, g1).
OperatorKernel adjoint_kernel(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2);

/// Dense SVD summary. `ps` entries must lie in [1, inf].
SpectralSummary spectrum(const OperatorKernel& kernel, const std::vector<double>& ps);

/// Smallest eigenvalue of the Hermitian part (K + K^H)/2.
double min_hermitian_eigenvalue(const OperatorKernel& kernel);

/// sigma~(m, w_j) = < L(M_{w_j} T_m g), M_{w_j} T_m g > with g1 = g2 = g, on
/// the symbol's phase-space grid.
PhaseSpaceField sigma_tilde(const PhaseSpaceField& sigma, const Signal& g);

/// Constant symbol on the default phase-space range [-2K, 2K]^n.
PhaseSpaceField constant_symbol(const LatticeSpec& spec, const TorusGrid& torus, cplx value);

namespace detail {

/// Kernel of the quadrature-level operator sum_m (1/M^n) sum_j sigma(m,w_j)
/// (M_{w_j}T_m g2)(M_{w_j}T_m g1)^H without the degree check. Used for
/// symbols that are only known on the grid (e.g. positive parts).
OperatorKernel grid_kernel(const PhaseSpaceField& sigma, const Signal& g1, const Signal& g2);

}  // namespace detail

}  // namespace tfloc

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tfloc/lattice.hpp"

namespace tfloc {

/// V_g f(m, w_j) = sum_k f(k) conj(g(k - m)) e^{-2 pi i w_j . k} for
/// m in [-2K, 2K]^n. f and g must be admissible and g non-zero.
PhaseSpaceField stft(const Signal& f, const Signal& g, const TorusGrid& torus);

/// STFT of an arbitrary signal on [-C,C]^n over the lattice range
/// [-m_radius, m_radius]^n. Requires supp f + supp g to fit inside that range,
/// so the field carries every non-zero coefficient; degree_bound is the
/// support radius of f.
PhaseSpaceField stft_extended(const Signal& f, const Signal& g, const TorusGrid& torus,
                              int m_radius);

/// Synthesis operator: sum_m (1/M^n) sum_j F(m, w_j) (M_{w_j} T_m g)(k).
/// Refuses with PrecisionError when the grid does not integrate the synthesis
/// integrand exactly (degree_bound + m_radius + K > M - 1).
Signal stft_adjoint(const PhaseSpaceField& F, const Signal& g);

/// f = stft_adjoint(F, h) / <h, g>. Refuses when |<h,g>| <= 1e-12 |h| |g|.
Signal invert(const PhaseSpaceField& F, const Signal& g, const Signal& h);

/// Second-level STFT of a phase-space function F against a phase-space window
/// G:  V_G F(m, omega, xi, k) = sum_j int e^{-2 pi i j.xi} e^{-2 pi i eta.k}
///                               F(j, eta) conj(G(j - m, eta - omega)) d eta.
/// m ranges over [-(rF + rG), rF + rG]^n (the full support), omega and xi over
/// the torus grid, k over [-D, D]^n with D = deg F + deg G.
class SymbolTransform {
 public:
  SymbolTransform(int n, int m_radius, const TorusGrid& torus, int freq_radius,
                  std::string window_id);

  int dim() const { return n_; }
  const Box& m_box() const { return m_box_; }
  const Box& k_box() const { return k_box_; }
  const TorusGrid& torus() const { return torus_; }
  int freq_radius() const { return k_box_.radius(); }
  const std::string& window_id() const { return window_id_; }

  std::size_t index(std::size_t m, std::size_t omega, std::size_t xi, std::size_t k) const {
    return ((m * torus_.size() + omega) * torus_.size() + xi) * k_box_.size() + k;
  }
  cplx operator()(std::size_t m, std::size_t omega, std::size_t xi, std::size_t k) const {
    return values_[index(m, omega, xi, k)];
  }
  cplx& operator()(std::size_t m, std::size_t omega, std::size_t xi, std::size_t k) {
    return values_[index(m, omega, xi, k)];
  }
  std::span<const cplx> values() const { return values_; }

  /// L^p norm: counting measure on m and k, grid quadrature on omega and xi.
  double lp_norm(double p) const;

 private:
  int n_;
  Box m_box_;
  Box k_box_;
  TorusGrid torus_;
  std::string window_id_;
  std::vector<cplx> values_;
};

SymbolTransform stft_symbol(const PhaseSpaceField& F, const PhaseSpaceField& G,
                            std::string window_id = "symbol-window");

namespace detail {

/// V_g f through the convolution form e^{-2 pi i w.m} (f * M_w conj(g~))(m);
/// used only to cross-check the direct sum.
PhaseSpaceField stft_by_convolution(const Signal& f, const Signal& g, const TorusGrid& torus);

/// Direct-sum STFT restricted to [-m_radius, m_radius]^n without the coverage
/// check; degree_bound is the support radius of f. Entries of V_g f outside
/// the range are dropped.
PhaseSpaceField stft_on_range(const Signal& f, const Signal& g, const TorusGrid& torus,
                              int m_radius);

}  // namespace detail

}  // namespace tfloc

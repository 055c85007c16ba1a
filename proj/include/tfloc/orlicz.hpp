#pragma once

#include <span>
#include <vector>

#include "tfloc/lattice.hpp"
#include "tfloc/young.hpp"

namespace tfloc {

/// Measure behind a Luxemburg sum: the counting measure on lattice points,
/// the torus grid quadrature (1/M^n per node), or their product.
struct MeasureSpec {
  enum class Kind { counting, quadrature, product };
  Kind kind = Kind::counting;
  double weight = 1.0;  // uniform mass per point

  static MeasureSpec counting() { return {Kind::counting, 1.0}; }
  static MeasureSpec quadrature(const TorusGrid& t) { return {Kind::quadrature, t.weight()}; }
  static MeasureSpec product(const TorusGrid& t) { return {Kind::product, t.weight()}; }
};

/// Relative bracket accuracy of the Luxemburg solver.
inline constexpr double kLuxemburgEpsilon = 1e-12;

/// inf{ b > 0 : sum_i weight * Phi(values_i / b) <= 1 } for non-negative
/// values. Bisection on the non-increasing map b -> G(b); the result b*
/// satisfies G(b*(1+eps)) <= 1 <= G(b*(1-eps)) with eps = 1e-12.
double luxemburg(std::span<const double> values, const MeasureSpec& measure,
                 const YoungFunction& phi);

/// Plain L^p norm under the same measure (p = inf allowed); closed form used
/// to cross-check the power case.
double lp_norm(std::span<const double> values, const MeasureSpec& measure, double p);

/// ||F||_{L^{Phi1,Phi2}}: Luxemburg over the lattice axis (Phi1) at every torus
/// node, then over the torus (Phi2) of the resulting function.
double mixed_norm(const PhaseSpaceField& F, const YoungFunction& phi1, const YoungFunction& phi2);

/// ||F||_{L_*^{Phi1,Phi2}} = ||G||_{L^{Phi2,Phi1}(T^n x Z^n)} with G(w,m) = F(m,w):
/// Luxemburg over the torus (Phi2) at every lattice point, then over the
/// lattice (Phi1).
double mixed_norm_swapped(const PhaseSpaceField& F, const YoungFunction& phi1,
                          const YoungFunction& phi2);

/// Same norms on a raw non-negative array laid out (m, j) with m_count rows.
double mixed_norm_abs(std::span<const double> abs_values, std::size_t m_count,
                      double torus_weight, const YoungFunction& phi1, const YoungFunction& phi2);
double mixed_norm_swapped_abs(std::span<const double> abs_values, std::size_t m_count,
                              double torus_weight, const YoungFunction& phi1,
                              const YoungFunction& phi2);

/// Luxemburg norm of |F| under the product measure (the L^Phi norm on Z^n x T^n).
double orlicz_norm(const PhaseSpaceField& F, const YoungFunction& phi);

/// Group convolution on Z^n x T^n:
/// (F*G)(m,w) = sum_l int F(l,x) G(m-l, w-x) dx.
/// The torus part multiplies the grid Fourier coefficients of both operands.
/// Output lattice radius is rF + rG and must stay within C (RangeError).
PhaseSpaceField convolve_phase_space(const PhaseSpaceField& F, const PhaseSpaceField& G);

/// ||F G||_{L^1(Z^n x T^n)} under the grid quadrature.
double holder_pairing(const PhaseSpaceField& F, const PhaseSpaceField& G);

/// |values| of a field as doubles.
std::vector<double> magnitudes(std::span<const cplx> values);

}  // namespace tfloc

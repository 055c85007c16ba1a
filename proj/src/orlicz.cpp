#include "tfloc/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tfloc/error.hpp"

namespace tfloc {

std::vector<double> magnitudes(std::span<const cplx> values) {
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [](cplx v) { return std::abs(v); });
  return out;
}

double luxemburg(std::span<const double> values, const MeasureSpec& measure,
                 const YoungFunction& phi) {
  if (!(measure.weight > 0.0) || !std::isfinite(measure.weight)) {
    throw DomainError("luxemburg: measure weight must be positive and finite");
  }
  double total = 0.0;
  double peak = 0.0;
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("luxemburg: values must be finite and non-negative");
    }
    total += measure.weight * v;
    peak = std::max(peak, v);
  }
  if (peak == 0.0) return 0.0;

  auto G = [&](double b) {
    double s = 0.0;
    for (double v : values) {
      if (v != 0.0) s += measure.weight * phi(v / b);
    }
    return s;
  };

  double hi = total + peak;
  int guard = 0;
  while (G(hi) > 1.0) {
    hi *= 2.0;
    if (++guard > 2000) throw NumericError("luxemburg: could not bracket from above");
  }
  double lo = hi;
  guard = 0;
  while (G(lo) < 1.0) {
    lo *= 0.5;
    if (++guard > 2000) throw NumericError("luxemburg: could not bracket from below");
  }
  if (lo == hi) return hi;  // G(hi) == 1 exactly
  hi = std::min(hi, 2.0 * lo);

  for (int it = 0; it < 200 && hi - lo > 0.5 * kLuxemburgEpsilon * lo; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (G(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double lp_norm(std::span<const double> values, const MeasureSpec& measure, double p) {
  if (!(p >= 1.0)) throw DomainError("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double s = 0.0;
    for (double v : values) s = std::max(s, v);
    return s;
  }
  double s = 0.0;
  for (double v : values) s += std::pow(v, p);
  return std::pow(measure.weight * s, 1.0 / p);
}

double mixed_norm_abs(std::span<const double> a, std::size_t m_count, double torus_weight,
                      const YoungFunction& phi1, const YoungFunction& phi2) {
  if (m_count == 0 || a.size() % m_count != 0) throw ShapeError("mixed_norm: bad layout");
  const std::size_t t_count = a.size() / m_count;
  std::vector<double> column(m_count);
  std::vector<double> inner(t_count);
  for (std::size_t j = 0; j < t_count; ++j) {
    for (std::size_t m = 0; m < m_count; ++m) column[m] = a[m * t_count + j];
    inner[j] = luxemburg(column, MeasureSpec::counting(), phi1);
  }
  return luxemburg(inner, {MeasureSpec::Kind::quadrature, torus_weight}, phi2);
}

double mixed_norm_swapped_abs(std::span<const double> a, std::size_t m_count,
                              double torus_weight, const YoungFunction& phi1,
                              const YoungFunction& phi2) {
  if (m_count == 0 || a.size() % m_count != 0) throw ShapeError("mixed_norm: bad layout");
  const std::size_t t_count = a.size() / m_count;
  std::vector<double> inner(m_count);
  for (std::size_t m = 0; m < m_count; ++m) {
    inner[m] = luxemburg(a.subspan(m * t_count, t_count),
                         {MeasureSpec::Kind::quadrature, torus_weight}, phi2);
  }
  return luxemburg(inner, MeasureSpec::counting(), phi1);
}

double mixed_norm(const PhaseSpaceField& F, const YoungFunction& phi1,
                  const YoungFunction& phi2) {
  if (!F.finite()) throw DomainError("mixed_norm: non-finite field");
  const auto a = magnitudes(F.values());
  return mixed_norm_abs(a, F.m_box().size(), F.torus().weight(), phi1, phi2);
}

double mixed_norm_swapped(const PhaseSpaceField& F, const YoungFunction& phi1,
                          const YoungFunction& phi2) {
  if (!F.finite()) throw DomainError("mixed_norm_swapped: non-finite field");
  const auto a = magnitudes(F.values());
  return mixed_norm_swapped_abs(a, F.m_box().size(), F.torus().weight(), phi1, phi2);
}

double orlicz_norm(const PhaseSpaceField& F, const YoungFunction& phi) {
  if (!F.finite()) throw DomainError("orlicz_norm: non-finite field");
  const auto a = magnitudes(F.values());
  return luxemburg(a, MeasureSpec::product(F.torus()), phi);
}

PhaseSpaceField convolve_phase_space(const PhaseSpaceField& F, const PhaseSpaceField& G) {
  if (!(F.torus() == G.torus()) || !(F.spec() == G.spec())) {
    throw ShapeError("convolve_phase_space: operands on different grids");
  }
  const LatticeSpec& spec = F.spec();
  const TorusGrid& torus = F.torus();
  const int n = spec.n;
  const int R = F.m_radius() + G.m_radius();
  if (R > spec.C) {
    throw RangeError("convolve_phase_space: output lattice radius " + std::to_string(R) +
                     " exceeds C = " + std::to_string(spec.C));
  }
  const std::size_t T = torus.size();

  // Grid Fourier coefficients per lattice slice: c(d) = (1/T) sum_j F(j) e^{-2 pi i j.d / M},
  // d ranging over the node multi-indices (frequencies modulo M).
  auto coefficients = [&](const PhaseSpaceField& X) {
    std::vector<cplx> c(X.size());
    for (std::size_t m = 0; m < X.m_box().size(); ++m) {
      for (std::size_t d = 0; d < T; ++d) {
        auto dd = torus.node(d);
        cplx acc{};
        for (std::size_t j = 0; j < T; ++j) acc += X(m, j) * torus.root(-torus.dot(j, dd));
        c[m * T + d] = acc * torus.weight();
      }
    }
    return c;
  };
  const auto cf = coefficients(F);
  const auto cg = coefficients(G);

  // Circular convolution with weight 1/T has coefficients T * (1/T) cF cG = cF cG.
  const Box out_box(n, R);
  std::vector<cplx> co(out_box.size() * T);
  std::vector<int> mg(static_cast<std::size_t>(n));
  for (std::size_t mo = 0; mo < out_box.size(); ++mo) {
    auto m = out_box.point(mo);
    for (std::size_t lf = 0; lf < F.m_box().size(); ++lf) {
      auto l = F.m_box().point(lf);
      for (int a = 0; a < n; ++a) mg[a] = m[a] - l[a];
      if (!G.m_box().contains(mg)) continue;
      const std::size_t gi = G.m_box().index(mg);
      for (std::size_t d = 0; d < T; ++d) co[mo * T + d] += cf[lf * T + d] * cg[gi * T + d];
    }
  }

  PhaseSpaceField out(spec, torus, R, std::min(F.degree_bound(), G.degree_bound()));
  for (std::size_t mo = 0; mo < out_box.size(); ++mo) {
    for (std::size_t j = 0; j < T; ++j) {
      auto jj = torus.node(j);
      cplx acc{};
      for (std::size_t d = 0; d < T; ++d) acc += co[mo * T + d] * torus.root(torus.dot(d, jj));
      out(mo, j) = acc;
    }
  }
  return out;
}

double holder_pairing(const PhaseSpaceField& F, const PhaseSpaceField& G) {
  if (!F.same_shape(G)) throw ShapeError("holder_pairing: shape mismatch");
  double s = 0.0;
  auto fv = F.values();
  auto gv = G.values();
  for (std::size_t i = 0; i < fv.size(); ++i) s += std::abs(fv[i] * gv[i]);
  return s * F.torus().weight();
}

}  // namespace tfloc

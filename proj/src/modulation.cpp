#include "tfloc/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tfloc/error.hpp"
#include "tfloc/orlicz.hpp"
#include "tfloc/stft.hpp"

namespace tfloc {

Signal make_window(const WindowSpec& spec, const LatticeSpec& lattice) {
  Signal g(lattice);
  switch (spec.kind) {
    case WindowSpec::Kind::kronecker:
      g = delta(lattice, std::vector<int>(static_cast<std::size_t>(lattice.n), 0));
      break;
    case WindowSpec::Kind::gaussian: {
      const double s = spec.width > 0.0 ? spec.width : 0.5 * lattice.K;
      if (s <= 0.0) {
        g = delta(lattice, std::vector<int>(static_cast<std::size_t>(lattice.n), 0));
        break;
      }
      const Box sbox = lattice.support_box();
      for (std::size_t i = 0; i < sbox.size(); ++i) {
        auto k = sbox.point(i);
        double r2 = 0.0;
        for (int x : k) r2 += static_cast<double>(x) * x;
        g.ref(k) = std::exp(-std::numbers::pi * r2 / s);
      }
      break;
    }
    case WindowSpec::Kind::file:
      if (!spec.samples) throw UsageError("file window has no samples loaded");
      if (!(spec.samples->spec() == lattice)) throw ShapeError("file window lattice mismatch");
      g = *spec.samples;
      break;
  }
  if (!g.finite() || g.is_zero()) throw DomainError("window must be finite and non-zero");
  if (!g.admissible()) throw RangeError("window not supported in [-K,K]^n");
  if (spec.normalization == WindowSpec::Normalization::unit) g = (1.0 / g.norm()) * g;
  return g;
}

PhaseSpaceField default_symbol_window(const LatticeSpec& lattice, const TorusGrid& torus) {
  const Signal g = make_window(WindowSpec::gaussian(), lattice);
  const int N = torus.samples() / 4;
  const int n = lattice.n;
  // Fejer kernel F_N(eta) = sum_{|d| <= N} (1 - |d|/(N+1)) e^{2 pi i d eta}, per axis.
  std::vector<double> fejer(static_cast<std::size_t>(torus.samples()));
  for (int j = 0; j < torus.samples(); ++j) {
    double acc = 0.0;
    for (int d = -N; d <= N; ++d) {
      acc += (1.0 - std::abs(d) / (N + 1.0)) * torus.root(static_cast<long long>(d) * j).real();
    }
    fejer[j] = acc;
  }
  PhaseSpaceField G(lattice, torus, lattice.K, N);
  for (std::size_t m = 0; m < G.m_box().size(); ++m) {
    const cplx gm = g.at(G.m_box().point(m));
    for (std::size_t j = 0; j < torus.size(); ++j) {
      double f = 1.0;
      for (int a = 0; a < n; ++a) f *= fejer[torus.node(j)[a]];
      G(m, j) = gm * f;
    }
  }
  return (1.0 / G.l2_norm()) * G;
}

double field_lp_norm(const PhaseSpaceField& F, double p) {
  const auto a = magnitudes(F.values());
  return lp_norm(a, MeasureSpec::product(F.torus()), p);
}

double modulation_norm(const Signal& f, const Signal& window, const TorusGrid& torus, double p) {
  if (!(p >= 1.0)) throw DomainError("modulation_norm: p must lie in [1, inf]");
  return field_lp_norm(stft(f, window, torus), p);
}

double modulation_norm_extended(const Signal& f, const Signal& window, const TorusGrid& torus,
                                double p) {
  if (!(p >= 1.0)) throw DomainError("modulation_norm: p must lie in [1, inf]");
  const int r = f.support_radius() + window.support_radius();
  return field_lp_norm(stft_extended(f, window, torus, r), p);
}

double orlicz_modulation_norm(const Signal& f, const Signal& window, const TorusGrid& torus,
                              const YoungFunction& phi, const std::optional<YoungFunction>& psi,
                              OrliczVariant variant) {
  const PhaseSpaceField V = stft(f, window, torus);
  switch (variant) {
    case OrliczVariant::M_Phi:
      return orlicz_norm(V, phi);
    case OrliczVariant::M_PhiPsi:
      if (!psi) throw UsageError("M^{Phi,Psi} needs a second Young function");
      return mixed_norm(V, phi, *psi);
    case OrliczVariant::W_PhiPsi:
      if (!psi) throw UsageError("W^{Phi,Psi} needs a second Young function");
      return mixed_norm_swapped(V, phi, *psi);
  }
  return 0.0;
}

double orlicz_modulation_norm_extended(const Signal& f, const Signal& window,
                                       const TorusGrid& torus, const YoungFunction& phi) {
  const int r = f.support_radius() + window.support_radius();
  return orlicz_norm(stft_extended(f, window, torus, r), phi);
}

double symbol_modulation_norm(const PhaseSpaceField& sigma, const PhaseSpaceField& window,
                              double p) {
  return stft_symbol(sigma, window).lp_norm(p);
}

EmbeddingCertificate embedding_condition(const std::pair<YoungFunction, YoungFunction>& phi_pair,
                                         const std::pair<YoungFunction, YoungFunction>& psi_pair,
                                         double x0, int grid) {
  if (!(x0 > 0.0) || !std::isfinite(x0)) throw DomainError("embedding_condition: x0 must be > 0");
  if (grid < 3) throw DomainError("embedding_condition: grid too small");
  const double lo = std::log(x0 * 1e-12);
  const double hi = std::log(x0);

  EmbeddingCertificate cert{true, 0.0};
  const std::pair<const YoungFunction*, const YoungFunction*> pairs[] = {
      {&phi_pair.first, &psi_pair.first}, {&phi_pair.second, &psi_pair.second}};
  for (auto [phi, psi] : pairs) {
    // ratio[i] at x_i, i = 0 is x0 and increasing i moves towards 0
    std::vector<double> ratio(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
      const double x = i == 0 ? x0 : std::exp(hi + (lo - hi) * i / (grid - 1));
      const double a = (*phi)(x);
      const double b = (*psi)(x);
      if (a == 0.0) {
        if (b > 0.0) return {false, 0.0};
        ratio[i] = 0.0;
        continue;
      }
      ratio[i] = b / a;
    }
    const double peak = *std::max_element(ratio.begin(), ratio.end());
    const double upper = ratio[grid / 2] - ratio[0];
    const double lower = ratio[grid - 1] - ratio[grid / 2];
    if (lower > 1e-9 * std::max(1.0, peak) && lower >= 0.5 * upper) return {false, 0.0};
    cert.C = std::max(cert.C, peak);
  }
  return cert;
}

}  // namespace tfloc

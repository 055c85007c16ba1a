#include "tfloc/stft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tfloc/error.hpp"

namespace tfloc {

namespace {

struct Support {
  std::vector<std::size_t> index;  // flat lattice indices of non-zero entries
  std::vector<int> points;         // their coordinates, n per entry
};

Support nonzero_support(const Signal& f) {
  Support s;
  const Box& box = f.box();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == cplx{}) continue;
    s.index.push_back(i);
    auto p = box.point(i);
    s.points.insert(s.points.end(), p.begin(), p.end());
  }
  return s;
}

void check_window(const Signal& g) {
  if (!g.finite()) throw DomainError("window has non-finite values");
  if (g.is_zero()) throw DomainError("window must be non-zero");
  if (!g.admissible()) throw RangeError("window not supported in [-K,K]^n");
}

void check_pair(const Signal& f, const Signal& g, const TorusGrid& torus) {
  if (!(f.spec() == g.spec())) throw ShapeError("signal and window live on different lattices");
  if (torus.dim() != f.spec().n) throw ShapeError("torus dimension differs from lattice");
  if (!f.finite()) throw DomainError("signal has non-finite values");
  check_window(g);
}

// Direct evaluation over an arbitrary m-range; the caller guarantees the
// range is meaningful.
PhaseSpaceField stft_on(const Signal& f, const Signal& g, const TorusGrid& torus, int m_radius,
                        int degree_bound) {
  const int n = f.spec().n;
  PhaseSpaceField V(f.spec(), torus, m_radius, degree_bound);
  const Support sf = nonzero_support(f);
  const int kg = g.support_radius();
  const std::size_t T = torus.size();
  std::vector<int> km(static_cast<std::size_t>(n));

  for (std::size_t mi = 0; mi < V.m_box().size(); ++mi) {
    auto m = V.m_box().point(mi);
    for (std::size_t s = 0; s < sf.index.size(); ++s) {
      std::span<const int> k(sf.points.data() + s * n, static_cast<std::size_t>(n));
      bool inside = true;
      for (int a = 0; a < n; ++a) {
        km[a] = k[a] - m[a];
        if (std::abs(km[a]) > kg) inside = false;
      }
      if (!inside) continue;
      const cplx c = f[sf.index[s]] * std::conj(g.at(km));
      if (c == cplx{}) continue;
      for (std::size_t j = 0; j < T; ++j) V(mi, j) += c * torus.root(-torus.dot(j, k));
    }
  }
  return V;
}

}  // namespace

PhaseSpaceField stft(const Signal& f, const Signal& g, const TorusGrid& torus) {
  check_pair(f, g, torus);
  if (!f.admissible()) throw RangeError("stft: signal not supported in [-K,K]^n");
  const int K = f.spec().K;
  return stft_on(f, g, torus, 2 * K, K);
}

PhaseSpaceField stft_extended(const Signal& f, const Signal& g, const TorusGrid& torus,
                              int m_radius) {
  check_pair(f, g, torus);
  const int rf = f.support_radius();
  if (rf + g.support_radius() > m_radius) {
    throw RangeError("stft_extended: m_radius " + std::to_string(m_radius) +
                     " does not cover supp f + supp g");
  }
  return stft_on(f, g, torus, m_radius, rf);
}

Signal stft_adjoint(const PhaseSpaceField& F, const Signal& g) {
  const LatticeSpec& spec = F.spec();
  if (!(spec == g.spec())) throw ShapeError("stft_adjoint: field and window lattices differ");
  if (!g.admissible()) throw RangeError("stft_adjoint: window not supported in [-K,K]^n");
  if (!F.finite()) throw DomainError("stft_adjoint: non-finite field");
  const TorusGrid& torus = F.torus();
  const int kg = g.support_radius();
  const int reach = F.m_radius() + kg;
  if (F.degree_bound() + reach > torus.samples() - 1) {
    throw PrecisionError("stft_adjoint: degree " + std::to_string(F.degree_bound()) +
                         " + output radius " + std::to_string(reach) +
                         " exceeds M - 1 = " + std::to_string(torus.samples() - 1));
  }
  if (reach > spec.C) {
    throw RangeError("stft_adjoint: synthesis reaches radius " + std::to_string(reach) +
                     " beyond C = " + std::to_string(spec.C));
  }

  const int n = spec.n;
  Signal out(spec);
  const Box& box = out.box();
  const Box gbox(n, kg);
  const std::size_t T = torus.size();
  std::vector<int> k(static_cast<std::size_t>(n));

  for (std::size_t mi = 0; mi < F.m_box().size(); ++mi) {
    auto m = F.m_box().point(mi);
    for (std::size_t li = 0; li < gbox.size(); ++li) {
      auto l = gbox.point(li);
      const cplx gv = g.at(l);
      if (gv == cplx{}) continue;
      for (int a = 0; a < n; ++a) k[a] = m[a] + l[a];
      cplx acc{};
      for (std::size_t j = 0; j < T; ++j) acc += F(mi, j) * torus.root(torus.dot(j, k));
      out[box.index(k)] += acc * torus.weight() * gv;
    }
  }
  return out;
}

Signal invert(const PhaseSpaceField& F, const Signal& g, const Signal& h) {
  const cplx c = inner(h, g);
  if (!(std::abs(c) > 1e-12 * h.norm() * g.norm())) {
    throw ConditioningError("invert: <h, g> is numerically zero relative to |h| |g|");
  }
  return (1.0 / c) * stft_adjoint(F, h);
}

// SymbolTransform

SymbolTransform::SymbolTransform(int n, int m_radius, const TorusGrid& torus, int freq_radius,
                                 std::string window_id)
    : n_(n),
      m_box_(n, m_radius),
      k_box_(n, freq_radius),
      torus_(torus),
      window_id_(std::move(window_id)),
      values_(m_box_.size() * torus.size() * torus.size() * k_box_.size()) {}

double SymbolTransform::lp_norm(double p) const {
  if (!(p >= 1.0)) throw DomainError("lp_norm: p must be in [1, inf]");
  if (std::isinf(p)) {
    double s = 0.0;
    for (cplx v : values_) s = std::max(s, std::abs(v));
    return s;
  }
  double s = 0.0;
  for (cplx v : values_) s += std::pow(std::abs(v), p);
  return std::pow(s * torus_.weight() * torus_.weight(), 1.0 / p);
}

SymbolTransform stft_symbol(const PhaseSpaceField& F, const PhaseSpaceField& G,
                            std::string window_id) {
  if (!(F.torus() == G.torus()) || F.spec().n != G.spec().n) {
    throw ShapeError("stft_symbol: field and window grids differ");
  }
  if (!F.finite() || !G.finite()) throw DomainError("stft_symbol: non-finite input");
  const TorusGrid& torus = F.torus();
  const int n = F.spec().n;
  const int D = F.degree_bound() + G.degree_bound();
  if (2 * D > torus.samples() - 1) {
    throw PrecisionError("stft_symbol: degree sum " + std::to_string(D) +
                         " too large for exact coefficients with M = " +
                         std::to_string(torus.samples()));
  }
  const int R = F.m_radius() + G.m_radius();
  SymbolTransform out(n, R, torus, D, std::move(window_id));

  const std::size_t T = torus.size();
  const Box& fbox = F.m_box();
  const Box& gbox = G.m_box();
  const Box& kbox = out.k_box();

  // (1/T) e^{-2 pi i eta.k} and e^{-2 pi i j.xi}
  std::vector<cplx> eta_k(T * kbox.size());
  for (std::size_t e = 0; e < T; ++e) {
    for (std::size_t ki = 0; ki < kbox.size(); ++ki) {
      eta_k[e * kbox.size() + ki] = torus.root(-torus.dot(e, kbox.point(ki))) * torus.weight();
    }
  }
  std::vector<cplx> j_xi(fbox.size() * T);
  for (std::size_t ji = 0; ji < fbox.size(); ++ji) {
    for (std::size_t x = 0; x < T; ++x) j_xi[ji * T + x] = torus.root(-torus.dot(x, fbox.point(ji)));
  }

  std::vector<int> jm(static_cast<std::size_t>(n));
  std::vector<int> neg_omega(static_cast<std::size_t>(n));
  std::vector<std::size_t> active;
  std::vector<cplx> product(T);
  std::vector<cplx> coeff;  // active j x k

  for (std::size_t mi = 0; mi < out.m_box().size(); ++mi) {
    auto m = out.m_box().point(mi);
    for (std::size_t om = 0; om < T; ++om) {
      auto omega = torus.node(om);
      for (int a = 0; a < n; ++a) neg_omega[a] = -omega[a];
      active.clear();
      coeff.clear();
      for (std::size_t ji = 0; ji < fbox.size(); ++ji) {
        auto j = fbox.point(ji);
        for (int a = 0; a < n; ++a) jm[a] = j[a] - m[a];
        if (!gbox.contains(jm)) continue;
        const std::size_t gi = gbox.index(jm);
        bool nonzero = false;
        for (std::size_t e = 0; e < T; ++e) {
          product[e] = F(ji, e) * std::conj(G(gi, torus.shifted(e, neg_omega)));
          nonzero = nonzero || product[e] != cplx{};
        }
        if (!nonzero) continue;
        active.push_back(ji);
        for (std::size_t ki = 0; ki < kbox.size(); ++ki) {
          cplx acc{};
          for (std::size_t e = 0; e < T; ++e) acc += product[e] * eta_k[e * kbox.size() + ki];
          coeff.push_back(acc);
        }
      }
      for (std::size_t x = 0; x < T; ++x) {
        for (std::size_t ki = 0; ki < kbox.size(); ++ki) {
          cplx acc{};
          for (std::size_t a = 0; a < active.size(); ++a) {
            acc += j_xi[active[a] * T + x] * coeff[a * kbox.size() + ki];
          }
          out(mi, om, x, ki) = acc;
        }
      }
    }
  }
  return out;
}

namespace detail {

PhaseSpaceField stft_on_range(const Signal& f, const Signal& g, const TorusGrid& torus,
                              int m_radius) {
  check_pair(f, g, torus);
  return stft_on(f, g, torus, m_radius, f.support_radius());
}

PhaseSpaceField stft_by_convolution(const Signal& f, const Signal& g, const TorusGrid& torus) {
  check_pair(f, g, torus);
  if (!f.admissible()) throw RangeError("stft: signal not supported in [-K,K]^n");
  const LatticeSpec& spec = f.spec();
  const int n = spec.n;
  const int K = spec.K;
  PhaseSpaceField V(spec, torus, 2 * K, K);
  const Box fbox = spec.support_box();
  const Box hbox(n, K);
  std::vector<cplx> h(hbox.size());
  std::vector<int> tmp(static_cast<std::size_t>(n));

  for (std::size_t j = 0; j < torus.size(); ++j) {
    // h(l) = (M_w conj(g~))(l) = e^{2 pi i w.l} conj(g(-l))
    for (std::size_t li = 0; li < hbox.size(); ++li) {
      auto l = hbox.point(li);
      for (int a = 0; a < n; ++a) tmp[a] = -l[a];
      h[li] = torus.root(torus.dot(j, l)) * std::conj(g.at(tmp));
    }
    for (std::size_t mi = 0; mi < V.m_box().size(); ++mi) {
      auto m = V.m_box().point(mi);
      cplx conv{};
      for (std::size_t ki = 0; ki < fbox.size(); ++ki) {
        auto k = fbox.point(ki);
        bool inside = true;
        for (int a = 0; a < n; ++a) {
          tmp[a] = m[a] - k[a];
          if (std::abs(tmp[a]) > K) inside = false;
        }
        if (!inside) continue;
        conv += f.at(k) * h[hbox.index(tmp)];
      }
      V(mi, j) = torus.root(-torus.dot(j, m)) * conv;
    }
  }
  return V;
}

}  // namespace detail

}  // namespace tfloc

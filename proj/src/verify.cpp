#include "tfloc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <numbers>
#include <thread>

#include "tfloc/error.hpp"
#include "tfloc/io.hpp"
#include "tfloc/locop.hpp"
#include "tfloc/orlicz.hpp"
#include "tfloc/stft.hpp"

namespace tfloc {

namespace {

constexpr double kWorst = std::numeric_limits<double>::lowest();

struct Outcome {
  double margin = 0.0;
  std::vector<double> stats;
  int tier = -1;
};

struct Ctx {
  LatticeSpec spec;
  TorusGrid torus;
  Signal g;  // environment window
  YoungFunction phi;
  int K;
  int n;
  std::uint64_t seed;
  std::string id;
};

// (rhs - lhs) / rhs; zero rhs only passes with non-positive lhs
double ineq(double lhs, double rhs) {
  if (rhs > 0.0) return (rhs - lhs) / rhs;
  return lhs <= 0.0 ? 0.0 : kWorst;
}

// -deviation / scale
double dev(double deviation, double scale) {
  if (!std::isfinite(deviation)) return kWorst;
  if (scale > 0.0) return -deviation / scale;
  return deviation == 0.0 ? 0.0 : kWorst;
}

double log_uniform(Rng& rng, double lo_exp, double hi_exp) {
  return std::pow(10.0, rng.uniform(lo_exp, hi_exp));
}

std::vector<int> random_point(Rng& rng, int n, int radius) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int& x : p) x = rng.integer(-radius, radius);
  return p;
}

Signal random_window(const Ctx& c, Rng& rng) {
  Signal g = ensemble::gaussian_signal(c.spec, rng, c.K);
  return (1.0 / g.norm()) * g;
}

std::vector<double> abs_normals(Rng& rng, std::size_t count, double scale) {
  std::vector<double> v(count);
  for (double& x : v) x = std::abs(rng.normal()) * scale;
  return v;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_abs_diff(const Signal& a, const Signal& b) { return max_abs_diff(a.values(), b.values()); }

// Symbol for operator checks: trig, indicator or rank-one by trial index.
PhaseSpaceField operator_symbol(const Ctx& c, Rng& rng, int trial) {
  switch (trial % 3) {
    case 0:
      return ensemble::trig_symbol(c.spec, c.torus, 2 * c.K, c.K, rng);
    case 1:
      return ensemble::indicator_symbol(c.spec, c.torus, 2 * c.K, rng);
    default: {
      const Signal u = ensemble::gaussian_signal(c.spec, rng, c.K);
      const Signal v = ensemble::gaussian_signal(c.spec, rng, c.K);
      return ensemble::rank_one_symbol(u, v, c.g, c.torus);
    }
  }
}

// Non-negative symbol: indicator or |V_g u|^2.
PhaseSpaceField positive_symbol(const Ctx& c, Rng& rng, int trial) {
  if (trial % 2 == 0) return ensemble::indicator_symbol(c.spec, c.torus, 2 * c.K, rng);
  const Signal u = ensemble::gaussian_signal(c.spec, rng, c.K);
  PhaseSpaceField s = ensemble::rank_one_symbol(u, u, c.g, c.torus);
  for (cplx& v : s.values()) v = v.real();
  return s;
}

PhaseSpaceField map_field(const PhaseSpaceField& F, double (*f)(cplx)) {
  PhaseSpaceField r = F;
  for (cplx& v : r.values()) v = f(v);
  return r;
}

double sum_col_max(const Eigen::MatrixXcd& A) { return A.cwiseAbs().colwise().sum().maxCoeff(); }
double sum_row_max(const Eigen::MatrixXcd& A) { return A.cwiseAbs().rowwise().sum().maxCoeff(); }

double trace_norm(const OperatorKernel& K) {
  const SpectralSummary s = spectrum(K, {});
  return s.schatten_norm(1.0);
}

// ---------------------------------------------------------------- lattice

Outcome shift_unitarity(const Ctx& c, Rng& rng, int) {
  const Signal f = ensemble::gaussian_signal(c.spec, rng, c.K);
  const auto m = random_point(rng, c.n, 2 * c.K);
  std::vector<double> w(static_cast<std::size_t>(c.n));
  for (double& x : w) x = rng.uniform(-4.0, 4.0);
  const double nf = f.norm();
  const double a = std::abs(translate(f, m).norm() - nf);
  const double b = std::abs(modulate(f, w).norm() - nf);
  return {dev(std::max(a, b), nf)};
}

Outcome translate_composition(const Ctx& c, Rng& rng, int) {
  const int r = c.K / 2;
  const Signal f = ensemble::gaussian_signal(c.spec, rng, r);
  const auto a = random_point(rng, c.n, c.K - r);
  std::vector<int> b(static_cast<std::size_t>(c.n));
  std::vector<int> ab(static_cast<std::size_t>(c.n));
  for (int x = 0; x < c.n; ++x) {
    const int lo = std::max(-2 * c.K, -2 * c.K - a[x]);
    const int hi = std::min(2 * c.K, 2 * c.K - a[x]);
    b[x] = rng.integer(lo, hi);
    ab[x] = a[x] + b[x];
  }
  const Signal lhs = translate(translate(f, a), b);
  const Signal rhs = translate(f, ab);
  return {dev(max_abs_diff(lhs, rhs), f.norm())};
}

Outcome quadrature_exactness(const Ctx& c, Rng& rng, int trial) {
  const int M = c.torus.samples();
  std::vector<int> d(static_cast<std::size_t>(c.n), 0);
  if (trial > 0) {
    for (int& x : d) x = rng.integer(-(M - 1), M - 1);
  }
  cplx s{};
  for (std::size_t j = 0; j < c.torus.size(); ++j) s += c.torus.root(c.torus.dot(j, d));
  s *= c.torus.weight();
  const bool zero = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
  return {dev(std::abs(s - (zero ? 1.0 : 0.0)), 1.0)};
}

// ---------------------------------------------------------------- stft

Outcome plancherel(const Ctx& c, Rng& rng, int trial) {
  const Signal f = ensemble::gaussian_signal(c.spec, rng, c.K);
  const Signal g = trial % 2 == 0 ? c.g : ensemble::gaussian_signal(c.spec, rng, c.K);
  const double lhs = stft(f, g, c.torus).l2_norm();
  const double rhs = f.norm() * g.norm();
  return {dev(std::abs(lhs - rhs), rhs)};
}

Outcome orthogonality(const Ctx& c, Rng& rng, int) {
  const Signal f1 = ensemble::gaussian_signal(c.spec, rng, c.K);
  const Signal f2 = ensemble::gaussian_signal(c.spec, rng, c.K);
  const Signal g1 = ensemble::gaussian_signal(c.spec, rng, c.K);
  const Signal g2 = ensemble::gaussian_signal(c.spec, rng, c.K);
  const cplx lhs = inner(stft(f1, g1, c.torus), stft(f2, g2, c.torus));
  const cplx rhs = inner(f1, f2) * inner(g2, g1);
  return {dev(std::abs(lhs - rhs), f1.norm() * f2.norm() * g1.norm() * g2.norm())};
}

Outcome inversion(const Ctx& c, Rng& rng, int) {
  const Signal f = ensemble::gaussian_signal(c.spec, rng, c.K);
  const Signal g = ensemble::gaussian_signal(c.spec, rng, c.K);
  Signal h = ensemble::gaussian_signal(c.spec, rng, c.K);
  while (std::abs(inner(h, g)) < 0.1 * h.norm() * g.norm()) {
    h = h + (0.5 * h.norm() / g.norm()) * g;
  }
  const Signal r = invert(stft(f, g, c.torus), g, h);
  return {dev((r - f).norm(), f.norm())};
}

Outcome stft_covariance(const Ctx& c, Rng& rng, int) {
  const int r = c.K / 2;
  const Signal f = ensemble::gaussian_signal(c.spec, rng, r);
  const auto tau = random_point(rng, c.n, c.K - r);
  const std::size_t nu = static_cast<std::size_t>(rng.integer(0, static_cast<int>(c.torus.size()) - 1));
  const Signal shifted = gabor_atom(f, tau, c.torus, nu);
  const PhaseSpaceField A = stft(shifted, c.g, c.torus);
  const PhaseSpaceField B = stft(f, c.g, c.torus);
  std::vector<int> mt(static_cast<std::size_t>(c.n));
  std::vector<int> neg_nu(c.torus.node(nu).begin(), c.torus.node(nu).end());
  for (int& x : neg_nu) x = -x;
  double d = 0.0;
  for (std::size_t mi = 0; mi < A.m_box().size(); ++mi) {
    auto m = A.m_box().point(mi);
    for (int x = 0; x < c.n; ++x) mt[x] = m[x] - tau[x];
    const bool inside = B.m_box().contains(mt);
    for (std::size_t j = 0; j < c.torus.size(); ++j) {
      const double b = inside ? std::abs(B(B.m_box().index(mt), c.torus.shifted(j, neg_nu))) : 0.0;
      d = std::max(d, std::abs(std::abs(A(mi, j)) - b));
    }
  }
  return {dev(d, f.norm() * c.g.norm())};
}

Outcome stft_fast_path(const Ctx& c, Rng& rng, int) {
  const Signal f = ensemble::gaussian_signal(c.spec, rng, c.K);
  const Signal g = ensemble::gaussian_signal(c.spec, rng, c.K);
  const PhaseSpaceField a = stft(f, g, c.torus);
  const PhaseSpaceField b = detail::stft_by_convolution(f, g, c.torus);
  return {dev(max_abs_diff(a.values(), b.values()), f.norm() * g.norm())};
}

// ---------------------------------------------------------------- young

Outcome complementary_power2(const Ctx&, Rng& rng, int) {
  const double y = log_uniform(rng, -3.0, 3.0);
  const double exact = 0.25 * y * y;
  return {dev(std::abs(complementary(YoungFunction::power(2.0), y) - exact), exact)};
}

Outcome biconjugation(const Ctx&, Rng& rng, int trial) {
  static const YoungFunction phis[] = {YoungFunction::power(1.5), YoungFunction::eq5(),
                                       YoungFunction::power(3.0)};
  const YoungFunction& phi = phis[trial % 3];
  const double t = log_uniform(rng, -2.0, 0.5);
  const double bi = complementary(YoungFunction::conjugate(phi), t);
  return {ineq(bi, phi(t) * (1.0 + 1e-6) + 1e-9)};
}

Outcome eq5_convexity(const Ctx&, Rng&, int) {
  return {convex_on_grid(YoungFunction::eq5(), 1e-6, 10.0, 512) ? 0.0 : kWorst};
}

// ---------------------------------------------------------------- orlicz

Outcome luxemburg_power_reduction(const Ctx& c, Rng& rng, int trial) {
  static const double ps[] = {1.0, 1.5, 2.0, 3.0};
  const double p = ps[trial % 4];
  const MeasureSpec measures[] = {MeasureSpec::counting(), MeasureSpec::quadrature(c.torus),
                                  MeasureSpec::product(c.torus)};
  const MeasureSpec& mu = measures[(trial / 4) % 3];
  const auto v = abs_normals(rng, static_cast<std::size_t>(rng.integer(1, 200)),
                             log_uniform(rng, -3.0, 3.0));
  const YoungFunction phi = YoungFunction::power(p);
  const double b = luxemburg(v, mu, phi);
  const double ref = lp_norm(v, mu, p);
  auto G = [&](double s) {
    double acc = 0.0;
    for (double x : v) acc += mu.weight * phi(x / s);
    return acc;
  };
  double m = dev(std::abs(b - ref), ref);
  m = std::min(m, 1.0 - G(b * (1.0 + kLuxemburgEpsilon)));
  m = std::min(m, G(b * (1.0 - kLuxemburgEpsilon)) - 1.0);
  return {m};
}

Outcome norm_axioms(const Ctx& c, Rng& rng, int trial) {
  const YoungFunction phis[] = {YoungFunction::power(1.5), YoungFunction::eq5(),
                                YoungFunction::power(3.0), c.phi};
  const YoungFunction& phi = phis[trial % 4];
  const int r = std::max(1, c.K / 2);
  const double scale = log_uniform(rng, -2.0, 2.0);
  const PhaseSpaceField F = scale * ensemble::trig_symbol(c.spec, c.torus, r, c.K, rng);
  const PhaseSpaceField G = scale * ensemble::trig_symbol(c.spec, c.torus, r, c.K, rng);
  const cplx a = rng.complex_normal() * log_uniform(rng, -2.0, 2.0);
  PhaseSpaceField H = F;
  for (cplx& v : H.values()) v *= rng.uniform();

  const double nF = orlicz_norm(F, phi);
  const double nG = orlicz_norm(G, phi);
  double m = dev(std::abs(orlicz_norm(a * F, phi) - std::abs(a) * nF), std::abs(a) * nF);
  m = std::min(m, ineq(orlicz_norm(F + G, phi), nF + nG));
  m = std::min(m, ineq(orlicz_norm(H, phi), nF));
  return {m};
}

struct HolderPair {
  YoungFunction phi1, phi2, psi1, psi2;
  double constant;
  int tier;
};

HolderPair holder_pair(Rng& rng, int trial) {
  if (trial % 2 == 0) {
    const double p1 = rng.uniform(1.1, 5.0);
    const double p2 = rng.uniform(1.1, 5.0);
    return {YoungFunction::power(p1), YoungFunction::power(p2),
            YoungFunction::power(p1 / (p1 - 1.0)), YoungFunction::power(p2 / (p2 - 1.0)), 1.0, 1};
  }
  const YoungFunction e = YoungFunction::eq5();
  const YoungFunction psi = YoungFunction::conjugate(e);
  return {e, e, psi, psi, 2.0, 2};
}

Outcome holder_sequence(const Ctx& c, Rng& rng, int trial) {
  const HolderPair hp = holder_pair(rng, trial);
  const std::size_t len = c.spec.support_box().size();
  const auto f = abs_normals(rng, len, log_uniform(rng, -2.0, 1.0));
  const auto g = abs_normals(rng, len, log_uniform(rng, -2.0, 1.0));
  double lhs = 0.0;
  for (std::size_t i = 0; i < len; ++i) lhs += f[i] * g[i];
  const MeasureSpec mu = MeasureSpec::counting();
  const double rhs = hp.constant * luxemburg(f, mu, hp.phi1) * luxemburg(g, mu, hp.psi1);
  return {ineq(lhs, rhs), {}, hp.tier};
}

Outcome holder_mixed(const Ctx& c, Rng& rng, int trial) {
  const HolderPair hp = holder_pair(rng, trial);
  const int r = std::max(1, c.K / 2);
  const PhaseSpaceField F =
      log_uniform(rng, -2.0, 1.0) * ensemble::trig_symbol(c.spec, c.torus, r, c.K, rng);
  const PhaseSpaceField G =
      log_uniform(rng, -2.0, 1.0) * ensemble::trig_symbol(c.spec, c.torus, r, c.K, rng);
  const double lhs = holder_pairing(F, G);
  const double rhs =
      hp.constant * mixed_norm(F, hp.phi1, hp.phi2) * mixed_norm(G, hp.psi1, hp.psi2);
  return {ineq(lhs, rhs), {}, hp.tier};
}

std::pair<PhaseSpaceField, PhaseSpaceField> convolution_operands(const Ctx& c, Rng& rng) {
  return {ensemble::trig_symbol(c.spec, c.torus, c.K, rng.integer(0, c.K), rng),
          ensemble::trig_symbol(c.spec, c.torus, 2 * c.K, rng.integer(0, c.K), rng)};
}

Outcome convolution_mixed(const Ctx& c, Rng& rng, int trial) {
  const auto [F, G] = convolution_operands(c, rng);
  YoungFunction p1 = YoungFunction::eq5();
  YoungFunction p2 = YoungFunction::power(2.0);
  if (trial % 2 == 0) {
    p1 = YoungFunction::power(rng.uniform(1.0, 4.0));
    p2 = YoungFunction::power(rng.uniform(1.0, 4.0));
  }
  const double lhs = mixed_norm(convolve_phase_space(F, G), p1, p2);
  const double rhs = F.l1_norm() * mixed_norm(G, p1, p2);
  return {ineq(lhs, rhs), {}, trial % 2 == 0 ? 1 : 2};
}

Outcome convolution_orlicz(const Ctx& c, Rng& rng, int trial) {
  const auto [F, G] = convolution_operands(c, rng);
  const YoungFunction phi =
      trial % 2 == 0 ? YoungFunction::power(rng.uniform(1.0, 4.0)) : YoungFunction::eq5();
  const double lhs = orlicz_norm(convolve_phase_space(F, G), phi);
  const double rhs = F.l1_norm() * orlicz_norm(G, phi);
  return {ineq(lhs, rhs), {}, trial % 2 == 0 ? 1 : 2};
}

// ---------------------------------------------------------------- modulation

Outcome m2_identity(const Ctx& c, Rng& rng, int trial) {
  const Signal f = ensemble::gaussian_signal(c.spec, rng, c.K);
  const Signal g = trial % 2 == 0 ? c.g : random_window(c, rng);
  return {dev(std::abs(modulation_norm(f, g, c.torus, 2.0) - f.norm()), f.norm())};
}

Outcome tf_shift_invariance(const Ctx& c, Rng& rng, int trial) {
  static const double ps[] = {1.0, 2.0, 3.0, std::numeric_limits<double>::infinity()};
  const int r = c.K / 2;
  const Signal f = ensemble::gaussian_signal(c.spec, rng, r);
  const auto tau = random_point(rng, c.n, c.K - r);
  const auto nu = static_cast<std::size_t>(rng.integer(0, static_cast<int>(c.torus.size()) - 1));
  const Signal s = gabor_atom(f, tau, c.torus, nu);
  const double p = ps[trial % 4];
  const double a = modulation_norm(f, c.g, c.torus, p);
  const double b = modulation_norm(s, c.g, c.torus, p);
  const double oa = orlicz_modulation_norm(f, c.g, c.torus, c.phi, YoungFunction::power(1.5),
                                           OrliczVariant::M_PhiPsi);
  const double ob = orlicz_modulation_norm(s, c.g, c.torus, c.phi, YoungFunction::power(1.5),
                                           OrliczVariant::M_PhiPsi);
  return {std::min(dev(std::abs(a - b), a), dev(std::abs(oa - ob), oa))};
}

Outcome embedding_conditions(const Ctx&, Rng&, int trial) {
  const YoungFunction e = YoungFunction::eq5();
  const YoungFunction p15 = YoungFunction::power(1.5);
  const YoungFunction p2 = YoungFunction::power(2.0);
  const YoungFunction p3 = YoungFunction::power(3.0);
  switch (trial % 4) {
    case 0: {  // x^3 <= x^1.5 on (0, 1]
      const auto cert = embedding_condition({p15, p15}, {p3, p3}, 1.0);
      return {cert.holds ? ineq(cert.C, 1.0) : kWorst};
    }
    case 1: {  // x^2 <= (1/2)(-x^2 ln x) on (0, e^-2]
      const auto cert = embedding_condition({e, e}, {p2, p2}, std::exp(-2.0));
      return {cert.holds ? ineq(cert.C, 0.5) : kWorst};
    }
    case 2: {  // -x^2 ln x / x^2 = -ln x is unbounded
      const auto cert = embedding_condition({p2, p2}, {e, e}, std::exp(-2.0));
      return {cert.holds ? kWorst : 0.0};
    }
    default: {  // -x^2 ln x <= (2/e) x^1.5 on (0, e^-2]
      const auto cert = embedding_condition({p15, p15}, {e, e}, std::exp(-2.0));
      return {cert.holds ? ineq(cert.C, 2.0 / std::numbers::e) : kWorst};
    }
  }
}

Outcome window_robustness(const Ctx& c, Rng& rng, int) {
  WindowSpec w1 = WindowSpec::gaussian(0.5 * c.K);
  WindowSpec w2 = WindowSpec::gaussian(0.25 * c.K);
  const Signal g1 = make_window(w1, c.spec);
  const Signal g2 = make_window(w2, c.spec);
  const Signal f = ensemble::gaussian_signal(c.spec, rng, c.K);
  const double a = orlicz_modulation_norm(f, g1, c.torus, c.phi, std::nullopt, OrliczVariant::M_Phi);
  const double b = orlicz_modulation_norm(f, g2, c.torus, c.phi, std::nullopt, OrliczVariant::M_Phi);
  const double ratio = a / b;
  return {std::isfinite(ratio) && ratio > 0.0 ? 0.0 : kWorst, {ratio}};
}

Outcome symbol_plancherel(const Ctx& c, Rng& rng, int) {
  const PhaseSpaceField G = default_symbol_window(c.spec, c.torus);
  const int room = (c.torus.samples() - 1) / 2 - G.degree_bound();
  const int degree = std::max(0, std::min(c.K / 2, room));
  const PhaseSpaceField s = ensemble::trig_symbol(c.spec, c.torus, 1, degree, rng);
  const double lhs = stft_symbol(s, G).lp_norm(2.0);
  const double rhs = s.l2_norm() * G.l2_norm();
  return {dev(std::abs(lhs - rhs), rhs)};
}

// ---------------------------------------------------------------- locop

Outcome kernel_apply_consistency(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = operator_symbol(c, rng, trial);
  const Signal g1 = random_window(c, rng);
  const Signal g2 = random_window(c, rng);
  const Signal f = ensemble::gaussian_signal(c.spec, rng, c.K);
  const Signal a = apply(s, g1, g2, f);
  const Signal b = kernel(s, g1, g2) * f;
  return {dev((a - b).norm(), s.sup_norm() * f.norm())};
}

Outcome weak_pairing_consistency(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = operator_symbol(c, rng, trial);
  const Signal g1 = random_window(c, rng);
  const Signal g2 = random_window(c, rng);
  const Signal f = ensemble::gaussian_signal(c.spec, rng, c.K);
  const Signal h = ensemble::gaussian_signal(c.spec, rng, 2 * c.K);
  const cplx a = weak_pairing(s, g1, g2, f, h);
  const cplx b = inner(apply(s, g1, g2, f), h);
  return {dev(std::abs(a - b), s.sup_norm() * f.norm() * h.norm())};
}

Outcome identity_operator(const Ctx& c, Rng& rng, int trial) {
  const Signal g = trial == 0 ? c.g : random_window(c, rng);
  const OperatorKernel K = kernel(constant_symbol(c.spec, c.torus, 1.0), g, g);
  const Box& box = c.spec.box();
  double d = 0.0;
  for (std::size_t r = 0; r < box.size(); ++r) {
    if (!c.spec.support_box().contains(box.point(r))) continue;
    for (std::size_t q = 0; q < box.size(); ++q) {
      if (!c.spec.support_box().contains(box.point(q))) continue;
      const cplx want = r == q ? 1.0 : 0.0;
      d = std::max(d, std::abs(K.matrix(static_cast<Eigen::Index>(r),
                                        static_cast<Eigen::Index>(q)) - want));
    }
  }
  return {dev(d, 1.0)};
}

Outcome adjoint_identity(const Ctx& c, Rng& rng, int trial) {
  PhaseSpaceField s = operator_symbol(c, rng, trial);
  const Signal g1 = random_window(c, rng);
  const Signal g2 = random_window(c, rng);
  const OperatorKernel K = kernel(s, g1, g2);
  const OperatorKernel A = adjoint_kernel(s, g1, g2);
  const double scale = std::max(K.matrix.cwiseAbs().maxCoeff(), s.sup_norm() * 1e-300);
  double m = dev((K.matrix.adjoint() - A.matrix).cwiseAbs().maxCoeff(), scale);
  // i * indicator with g1 = g2 gives an anti-Hermitian kernel
  const PhaseSpaceField is = cplx(0.0, 1.0) * map_field(s, [](cplx v) { return std::abs(v); });
  const OperatorKernel Ki = kernel(is, g1, g1);
  m = std::min(m, dev((Ki.matrix.adjoint() + Ki.matrix).cwiseAbs().maxCoeff(),
                      std::max(Ki.matrix.cwiseAbs().maxCoeff(), 1e-300)));
  return {m};
}

Outcome hermitian_kernel(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = map_field(operator_symbol(c, rng, trial), [](cplx v) {
    return v.real();
  });
  const Signal g = random_window(c, rng);
  const OperatorKernel K = kernel(s, g, g);
  const double scale = std::max(K.matrix.cwiseAbs().maxCoeff(), 1e-300);
  double m = dev((K.matrix - K.matrix.adjoint()).cwiseAbs().maxCoeff(), scale);
  m = std::min(m, dev((adjoint_kernel(s, g, g).matrix - K.matrix).cwiseAbs().maxCoeff(), scale));
  return {m};
}

Outcome trace_identity(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = operator_symbol(c, rng, trial);
  const Signal g1 = random_window(c, rng);
  const Signal g2 = random_window(c, rng);
  const SpectralSummary sum = spectrum(kernel(s, g1, g2), {});
  const cplx want = inner(g2, g1) * s.mass();
  return {dev(std::abs(sum.trace - want), s.l1_norm() * g1.norm() * g2.norm())};
}

Outcome hs_consistency(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = operator_symbol(c, rng, trial);
  const Signal g1 = random_window(c, rng);
  const Signal g2 = random_window(c, rng);
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> ps = {1.0, 1.5, 2.0, 3.0, inf};
  const SpectralSummary sum = spectrum(kernel(s, g1, g2), ps);
  double s2 = 0.0;
  for (double v : sum.singular_values) s2 += v * v;
  const double hs2 = sum.hs_norm * sum.hs_norm;
  double m = dev(std::abs(hs2 - s2), hs2);
  m = std::min(m, dev(std::abs(sum.schatten.at(inf) - sum.s1()), sum.s1()));
  for (std::size_t i = 1; i < ps.size(); ++i) {
    m = std::min(m, ineq(sum.schatten.at(ps[i]), sum.schatten.at(ps[i - 1])));
  }
  return {m};
}

Outcome opnorm_linf_bound(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = operator_symbol(c, rng, trial);
  const Signal g1 = random_window(c, rng);
  const Signal g2 = random_window(c, rng);
  const double s1 = spectrum(kernel(s, g1, g2), {}).s1();
  return {ineq(s1, s.sup_norm() * g1.norm() * g2.norm())};
}

Outcome schur_bound(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = operator_symbol(c, rng, trial);
  const Signal g1 = random_window(c, rng);
  const Signal g2 = random_window(c, rng);
  const OperatorKernel K = kernel(s, g1, g2);
  const double s1 = spectrum(K, {}).s1();
  return {ineq(s1, std::sqrt(sum_col_max(K.matrix) * sum_row_max(K.matrix)))};
}

Outcome psd_s1_trace(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = positive_symbol(c, rng, trial);
  const Signal g = trial % 4 < 2 ? c.g : ensemble::gaussian_signal(c.spec, rng, c.K);
  const OperatorKernel K = kernel(s, g, g);
  const SpectralSummary sum = spectrum(K, {1.0});
  const double S1 = sum.schatten.at(1.0);
  const double gg = g.norm() * g.norm();
  const double want = gg * s.mass().real();
  // positivity counts as a margin relative to s1 with the same slack
  double m = min_hermitian_eigenvalue(K) / std::max(sum.s1(), 1e-300);
  m = std::min(m, dev(std::abs(S1 - sum.trace.real()) + std::abs(sum.trace.imag()), S1));
  m = std::min(m, dev(std::abs(sum.trace.real() - want), want));
  m = std::min(m, ineq(S1, s.l1_norm() * gg));
  return {m};
}

Outcome s1_general_bound(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = operator_symbol(c, rng, trial);
  const Signal g1 = random_window(c, rng);
  const Signal g2 = (1.0 + rng.uniform()) * random_window(c, rng);
  const double gmax = std::max(g1.norm(), g2.norm());
  const double S1 = trace_norm(kernel(s, g1, g2));
  double m = ineq(S1, 4.0 * s.l1_norm() * gmax * gmax);
  double (*const parts[])(cplx) = {
      [](cplx v) { return std::max(v.real(), 0.0); },
      [](cplx v) { return std::max(-v.real(), 0.0); },
      [](cplx v) { return std::max(v.imag(), 0.0); },
      [](cplx v) { return std::max(-v.imag(), 0.0); }};
  double total = 0.0;
  for (auto part : parts) {
    const PhaseSpaceField sp = map_field(s, part);
    const double Sp = trace_norm(detail::grid_kernel(sp, g1, g2));
    m = std::min(m, ineq(Sp, sp.l1_norm() * g1.norm() * g2.norm()));
    total += Sp;
  }
  m = std::min(m, ineq(S1, total));
  return {m};
}

Outcome schatten_log_convexity(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = operator_symbol(c, rng, trial);
  const Signal g1 = random_window(c, rng);
  const Signal g2 = random_window(c, rng);
  const double inf = std::numeric_limits<double>::infinity();
  const SpectralSummary sum = spectrum(kernel(s, g1, g2), {1.0, 1.5, 2.0, 3.0, inf});
  const double S1 = sum.schatten.at(1.0);
  const double Sinf = sum.schatten.at(inf);
  double m = 0.0;
  for (double p : {1.0, 1.5, 2.0, 3.0, inf}) {
    const double bound = std::isinf(p) ? Sinf : std::pow(S1, 1.0 / p) * std::pow(Sinf, 1.0 - 1.0 / p);
    m = std::min(m, ineq(sum.schatten.at(p), bound));
  }
  return {m};
}

Outcome s1_sandwich_lower(const Ctx& c, Rng& rng, int trial) {
  const PhaseSpaceField s = positive_symbol(c, rng, trial);
  const Signal g = trial % 4 < 2 ? c.g : ensemble::gaussian_signal(c.spec, rng, c.K);
  const double gg = g.norm() * g.norm();
  const double S1 = trace_norm(kernel(s, g, g));
  const PhaseSpaceField st = sigma_tilde(s, g);
  double lowest = 0.0;
  for (cplx v : st.values()) lowest = std::min(lowest, v.real());
  double m = ineq(st.l1_norm(), gg * S1);
  // sigma~ >= -1e-12 relative to the operator scale; anything below fails outright
  const double scale = s.sup_norm() * gg * gg;
  if (lowest < -1e-12 * scale) m = std::min(m, lowest / scale - 1.0);
  return {m};
}

Outcome mphi_boundedness(const Ctx& c, Rng& rng, int trial) {
  // one symbol and window pair for the whole ensemble, drawn from a fixed stream
  Rng fixed(stream_seed(c.seed, c.id + "/operator", 0));
  const PhaseSpaceField s = operator_symbol(c, fixed, 0);
  const Signal g1 = random_window(c, fixed);
  const Signal g2 = random_window(c, fixed);
  (void)trial;

  const Signal f = ensemble::gaussian_signal(c.spec, rng, c.K);
  const Signal Lf = apply(s, g1, g2, f);
  const double nf = f.norm();
  const double nl = Lf.norm();
  const double gg = g1.norm() * g2.norm();
  double m = ineq(nl, s.sup_norm() * gg * nf);
  m = std::min(m, ineq(nl, s.l2_norm() * gg * nf));
  m = std::min(m, ineq(nl, s.l1_norm() * gg * nf));

  const double a = orlicz_modulation_norm_extended(Lf, c.g, c.torus, c.phi);
  const double b = orlicz_modulation_norm(f, c.g, c.torus, c.phi, std::nullopt, OrliczVariant::M_Phi);
  const double ratio = a / b;
  if (!std::isfinite(ratio)) m = kWorst;
  // reported right-hand side with computed norms: ||sigma||_inf ||g1||_M1 ||g2||_M1
  const double rhs = s.sup_norm() * modulation_norm(g1, c.g, c.torus, 1.0) *
                     modulation_norm(g2, c.g, c.torus, 1.0);
  return {m, {ratio, rhs}};
}

// ---------------------------------------------------------------- summaries

std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::optional<std::string> tier_counts(const std::vector<Outcome>& out, const char* label) {
  std::map<int, int> counts;
  for (const auto& o : out) counts[o.tier]++;
  std::string s;
  for (auto [t, k] : counts) {
    if (!s.empty()) s += ",";
    s += std::string(label) + "-" + std::to_string(t) + ":" + std::to_string(k);
  }
  return s;
}

std::optional<std::string> holder_tiers(const std::vector<Outcome>& out) {
  return tier_counts(out, "holder-constant");
}

std::optional<std::string> convolution_tiers(const std::vector<Outcome>& out) {
  std::map<int, int> counts;
  for (const auto& o : out) counts[o.tier]++;
  std::string s;
  for (auto [t, k] : counts) {
    if (!s.empty()) s += ",";
    s += (t == 1 ? std::string("power:") : std::string("eq5:")) + std::to_string(k);
  }
  return s;
}

std::optional<std::string> robustness_summary(const std::vector<Outcome>& out) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& o : out) {
    lo = std::min(lo, o.stats[0]);
    hi = std::max(hi, o.stats[0]);
  }
  return "R=" + fmt6(std::max(hi, 1.0 / lo));
}

std::optional<std::string> mphi_summary(const std::vector<Outcome>& out) {
  double mx = 0.0;
  double mean = 0.0;
  double sq = 0.0;
  for (const auto& o : out) {
    mx = std::max(mx, o.stats[0]);
    mean += o.stats[0];
  }
  mean /= static_cast<double>(out.size());
  for (const auto& o : out) sq += (o.stats[0] - mean) * (o.stats[0] - mean);
  const double cv = std::sqrt(sq / static_cast<double>(out.size())) / mean;
  const double rhs = out.front().stats[1];
  return "ratio_max=" + fmt6(mx) + ",cv=" + fmt6(cv) + ",rhs=" + fmt6(rhs) +
         ",kappa=" + fmt6(mx / rhs);
}

using TrialFn = Outcome (*)(const Ctx&, Rng&, int);
using SummaryFn = std::optional<std::string> (*)(const std::vector<Outcome>&);

struct Check {
  CheckInfo info;
  TrialFn fn;
  SummaryFn summary = nullptr;
};

const std::vector<Check>& checks() {
  static const std::vector<Check> table = {
      {{"shift_unitarity", "lattice", 100, 1e-12, "time-frequency shifts preserve the l2 norm"},
       shift_unitarity},
      {{"translate_composition", "lattice", 100, 1e-12, "T_b T_a f = T_{a+b} f"},
       translate_composition},
      {{"quadrature_exactness", "lattice", 100, 1e-12, "grid sums of exponentials are exact"},
       quadrature_exactness},
      {{"plancherel", "stft", 100, 1e-10, "|V_g f|_L2 = |f| |g|"}, plancherel},
      {{"orthogonality", "stft", 100, 1e-10, "<V1 f1, V2 f2> = <f1,f2><g2,g1>"}, orthogonality},
      {{"inversion", "stft", 100, 1e-10, "invert(stft(f,g),g,h) = f"}, inversion},
      {{"stft_covariance", "stft", 100, 1e-12, "|V_g(M T f)| is the shifted |V_g f|"},
       stft_covariance},
      {{"stft_fast_path", "stft", 100, 1e-12, "direct sum equals convolution form"},
       stft_fast_path},
      {{"complementary_power2", "young", 100, 1e-8, "conjugate of t^2 is y^2/4"},
       complementary_power2},
      {{"biconjugation", "young", 60, 1e-9, "Phi** <= Phi"}, biconjugation},
      {{"eq5_convexity", "young", 1, 1e-12, "log-square function is convex"}, eq5_convexity},
      {{"luxemburg_power_reduction", "orlicz", 100, 1e-9,
        "power Luxemburg norm equals the p-norm and brackets 1"},
       luxemburg_power_reduction},
      {{"norm_axioms", "orlicz", 100, 1e-9, "homogeneity, triangle and monotonicity"},
       norm_axioms},
      {{"holder_sequence", "orlicz", 1000, 1e-9, "|fg|_1 <= c |f|_Phi |g|_Psi"}, holder_sequence,
       holder_tiers},
      {{"holder_mixed", "orlicz", 1000, 1e-9, "|FG|_1 <= c |F|_{Phi1,Phi2} |G|_{Psi1,Psi2}"},
       holder_mixed, holder_tiers},
      {{"convolution_mixed", "orlicz", 200, 1e-9, "|F*G|_{Phi1,Phi2} <= |F|_1 |G|_{Phi1,Phi2}"},
       convolution_mixed, convolution_tiers},
      {{"convolution_orlicz", "orlicz", 200, 1e-9, "|F*G|_Phi <= |F|_1 |G|_Phi"},
       convolution_orlicz, convolution_tiers},
      {{"m2_identity", "modulation", 100, 1e-10, "M2 norm equals the l2 norm"}, m2_identity},
      {{"tf_shift_invariance", "modulation", 100, 1e-10,
        "modulation norms invariant under grid shifts"},
       tf_shift_invariance},
      {{"embedding_conditions", "modulation", 4, 1e-9, "registered embedding certificates"},
       embedding_conditions},
      {{"window_robustness", "modulation", 100, 0.0, "M^Phi norms under two windows"},
       window_robustness, robustness_summary},
      {{"symbol_plancherel", "modulation", 4, 1e-9, "|V_G sigma|_L2 = |sigma|_L2 |G|_L2"},
       symbol_plancherel},
      {{"kernel_apply_consistency", "locop", 100, 1e-12, "kernel times f equals apply"},
       kernel_apply_consistency},
      {{"weak_pairing_consistency", "locop", 100, 1e-12, "weak pairing equals <Lf, h>"},
       weak_pairing_consistency},
      {{"identity_operator", "locop", 10, 1e-10, "unit symbol gives the identity"},
       identity_operator},
      {{"adjoint_identity", "locop", 50, 1e-12, "K(sigma,g1,g2)^H = K(conj sigma,g2,g1)"},
       adjoint_identity},
      {{"hermitian_kernel", "locop", 50, 1e-12, "real symbol with g1 = g2 is Hermitian"},
       hermitian_kernel},
      {{"trace_identity", "locop", 100, 1e-10, "trace = <g2,g1> mass(sigma)"}, trace_identity},
      {{"hs_consistency", "locop", 100, 1e-10, "HS entrywise equals singular values"},
       hs_consistency},
      {{"opnorm_linf_bound", "locop", 100, 1e-9, "s1 <= |sigma|_inf |g1| |g2|"},
       opnorm_linf_bound},
      {{"schur_bound", "locop", 100, 1e-9, "Schur test"}, schur_bound},
      {{"psd_s1_trace", "locop", 100, 1e-10, "positive symbol: PSD and S1 = trace"},
       psd_s1_trace},
      {{"s1_general_bound", "locop", 100, 1e-9, "S1 <= 4 |sigma|_L1 max|g|^2, per part"},
       s1_general_bound},
      {{"schatten_log_convexity", "locop", 100, 1e-9, "S_p <= S_1^{1/p} S_inf^{1-1/p}"},
       schatten_log_convexity},
      {{"s1_sandwich_lower", "locop", 100, 1e-9, "|sigma~|_L1 <= |g|^2 S1, sigma~ >= 0"},
       s1_sandwich_lower},
      {{"mphi_boundedness", "locop", 20, 1e-9, "l2 operator bounds; M^Phi ratio reported"},
       mphi_boundedness, mphi_summary},
  };
  return table;
}

const Check& find_check(std::string_view id) {
  for (const auto& c : checks()) {
    if (c.info.id == id) return c;
  }
  throw UsageError("unknown check id \"" + std::string(id) + "\"");
}

[[noreturn]] void rethrow_with_id(std::exception_ptr p, const std::string& id) {
  const std::string prefix = "check " + id + ": ";
  try {
    std::rethrow_exception(p);
  } catch (const PrecisionError& e) {
    throw PrecisionError(prefix + e.what());
  } catch (const NumericError& e) {
    throw NumericError(prefix + e.what());
  } catch (const ConditioningError& e) {
    throw ConditioningError(prefix + e.what());
  } catch (const UnboundedError& e) {
    throw UnboundedError(prefix + e.what());
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  } catch (const RangeError& e) {
    throw RangeError(prefix + e.what());
  } catch (const ShapeError& e) {
    throw ShapeError(prefix + e.what());
  } catch (const UsageError& e) {
    throw UsageError(prefix + e.what());
  } catch (const std::exception& e) {
    throw Error(prefix + e.what());
  }
}

CheckResult run_one(const CheckSpec& spec, const Check& check, const Environment& env,
                    const Signal& window) {
  if (spec.trials < 1) throw UsageError("check " + spec.id + ": trials must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const Ctx ctx{env.lattice, env.torus, window, env.phi, env.lattice.K, env.lattice.n,
                spec.seed, spec.id};
  std::vector<Outcome> out(static_cast<std::size_t>(spec.trials));
  std::vector<std::exception_ptr> errors(out.size());
  auto work = [&](int first, int stride) {
    for (int t = first; t < spec.trials; t += stride) {
      try {
        Rng rng(stream_seed(spec.seed, spec.id, static_cast<std::uint64_t>(t)));
        out[t] = check.fn(ctx, rng, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min(env.threads, spec.trials));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) rethrow_with_id(e, spec.id);
  }

  CheckResult r;
  r.id = spec.id;
  r.trials = spec.trials;
  r.seed = spec.seed;
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& o : out) {
    r.worst_margin = std::min(r.worst_margin, o.margin);
    if (!(o.margin >= -spec.tolerance)) ++r.violations;
  }
  r.worst_margin += 0.0;  // no "-0" in reports
  if (check.summary) r.tier = check.summary(out);
  if (env.timing) {
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return r;
}

}  // namespace

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& c : checks()) v.push_back(c.info);
    return v;
  }();
  return infos;
}

const CheckInfo& lookup(std::string_view id) { return find_check(id).info; }

std::vector<CheckSpec> default_checks(std::uint64_t seed) {
  std::vector<CheckSpec> v;
  for (const auto& c : registry()) v.push_back({c.id, c.default_trials, c.default_tolerance, seed});
  return v;
}

std::vector<CheckResult> run_suite(const std::vector<CheckSpec>& specs, const Environment& env) {
  for (const auto& s : specs) find_check(s.id);
  if (specs.empty()) return {};
  const LatticeSpec& L = env.lattice;
  if (L.K < 1) throw UsageError("verify needs K >= 1");
  if (env.torus.dim() != L.n) throw UsageError("torus dimension differs from lattice dimension");
  if (env.torus.samples() < 6 * L.K + 1) {
    throw UsageError("torus samples M = " + std::to_string(env.torus.samples()) +
                     " below 6K+1 = " + std::to_string(6 * L.K + 1));
  }
  const Signal window = make_window(env.window, L);
  std::vector<CheckResult> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(run_one(s, find_check(s.id), env, window));
  return out;
}

std::string report_line(const CheckResult& r) {
  std::string s = "{\"id\":\"" + r.id + "\",\"trials\":" + std::to_string(r.trials) +
                  ",\"violations\":" + std::to_string(r.violations) +
                  ",\"worst_margin\":" + format_double(r.worst_margin) +
                  ",\"seed\":" + std::to_string(r.seed) +
                  ",\"elapsed\":" + format_double(r.elapsed) + ",\"tier\":";
  s += r.tier ? "\"" + *r.tier + "\"" : std::string("null");
  return s + "}\n";
}

std::string report_jsonl(const std::vector<CheckResult>& results) {
  std::string s;
  for (const auto& r : results) s += report_line(r);
  return s;
}

EnsembleKind parse_ensemble_kind(std::string_view name) {
  if (name == "gaussian-signal") return EnsembleKind::gaussian_signal;
  if (name == "trig-symbol") return EnsembleKind::trig_symbol;
  if (name == "indicator-symbol") return EnsembleKind::indicator_symbol;
  if (name == "rank-one-symbol") return EnsembleKind::rank_one_symbol;
  throw UsageError("unknown ensemble kind \"" + std::string(name) + "\"");
}

std::variant<Signal, PhaseSpaceField> generate_ensemble(EnsembleKind kind, const Environment& env,
                                                        std::uint64_t seed) {
  Rng rng(seed);
  const LatticeSpec& L = env.lattice;
  switch (kind) {
    case EnsembleKind::gaussian_signal:
      return ensemble::gaussian_signal(L, rng, L.K);
    case EnsembleKind::trig_symbol:
      return ensemble::trig_symbol(L, env.torus, 2 * L.K, L.K, rng);
    case EnsembleKind::indicator_symbol:
      return ensemble::indicator_symbol(L, env.torus, 2 * L.K, rng);
    case EnsembleKind::rank_one_symbol: {
      const Signal u = ensemble::gaussian_signal(L, rng, L.K);
      const Signal v = ensemble::gaussian_signal(L, rng, L.K);
      return ensemble::rank_one_symbol(u, v, make_window(env.window, L), env.torus);
    }
  }
  throw UsageError("unknown ensemble kind");
}

namespace ensemble {

Signal gaussian_signal(const LatticeSpec& spec, Rng& rng, int radius) {
  Signal f(spec);
  const Box b(spec.n, std::min(radius, spec.C));
  for (std::size_t i = 0; i < b.size(); ++i) f.ref(b.point(i)) = rng.complex_normal();
  return f;
}

PhaseSpaceField trig_symbol(const LatticeSpec& spec, const TorusGrid& torus, int m_radius,
                            int degree, Rng& rng) {
  PhaseSpaceField s(spec, torus, m_radius, degree);
  const Box dbox(spec.n, degree);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dbox.size()));
  std::vector<cplx> coeff(dbox.size());
  for (std::size_t m = 0; m < s.m_box().size(); ++m) {
    for (cplx& c : coeff) c = rng.complex_normal() * scale;
    for (std::size_t j = 0; j < torus.size(); ++j) {
      cplx acc{};
      for (std::size_t d = 0; d < dbox.size(); ++d) {
        acc += coeff[d] * torus.root(torus.dot(j, dbox.point(d)));
      }
      s(m, j) = acc;
    }
  }
  return s;
}

PhaseSpaceField indicator_symbol(const LatticeSpec& spec, const TorusGrid& torus, int m_radius,
                                 Rng& rng) {
  const int N = spec.K;
  std::vector<double> bump(static_cast<std::size_t>(torus.samples()));
  for (int j = 0; j < torus.samples(); ++j) {
    double acc = 0.0;
    for (int d = -N; d <= N; ++d) {
      acc += (1.0 - std::abs(d) / (N + 1.0)) * torus.root(static_cast<long long>(d) * j).real();
    }
    bump[j] = std::max(acc, 0.0);
  }
  std::vector<int> lo(static_cast<std::size_t>(spec.n));
  std::vector<int> hi(static_cast<std::size_t>(spec.n));
  for (int a = 0; a < spec.n; ++a) {
    const int x = rng.integer(-m_radius, m_radius);
    const int y = rng.integer(-m_radius, m_radius);
    lo[a] = std::min(x, y);
    hi[a] = std::max(x, y);
  }
  const double height = rng.uniform(0.5, 2.0);
  PhaseSpaceField s(spec, torus, m_radius, std::min(N, torus.samples() - 1));
  for (std::size_t m = 0; m < s.m_box().size(); ++m) {
    auto p = s.m_box().point(m);
    bool inside = true;
    for (int a = 0; a < spec.n; ++a) inside = inside && p[a] >= lo[a] && p[a] <= hi[a];
    if (!inside) continue;
    for (std::size_t j = 0; j < torus.size(); ++j) {
      double f = height;
      for (int a = 0; a < spec.n; ++a) f *= bump[torus.node(j)[a]];
      s(m, j) = f;
    }
  }
  return s;
}

PhaseSpaceField rank_one_symbol(const Signal& u, const Signal& v, const Signal& window,
                                const TorusGrid& torus) {
  const PhaseSpaceField a = stft(u, window, torus);
  const PhaseSpaceField b = stft(v, window, torus);
  return a * b.conj();
}

}  // namespace ensemble

}  // namespace tfloc

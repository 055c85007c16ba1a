#include "common.hpp"
#include "tfloc/error.hpp"
#include "tfloc/locop.hpp"
#include "tfloc/stft.hpp"

using namespace tfloc;
using namespace tfloc::test;

namespace {

double max_abs(const Eigen::MatrixXcd& A) { return A.cwiseAbs().maxCoeff(); }

PhaseSpaceField random_symbol(Rng& rng) {
  return ensemble::trig_symbol(spec(), torus(), 16, 8, rng);
}

PhaseSpaceField real_part(PhaseSpaceField s) {
  for (cplx& v : s.values()) v = v.real();
  return s;
}

}  // namespace

TEST_SUITE("locop") {

TEST_CASE("unit symbol is the identity") {
  const Signal g = unit_window();
  const PhaseSpaceField one = constant_symbol(spec(), torus(), 1.0);
  Rng rng(101);
  const Signal f = random_signal(rng);
  CHECK(max_dev(apply(one, g, g, f), f) < 1e-10 * f.norm());
  const OperatorKernel K = kernel(one, g, g);
  double d = 0.0;
  for (int k = -8; k <= 8; ++k) {
    for (int l = -8; l <= 8; ++l) d = std::max(d, std::abs(K.matrix(k + 24, l + 24) - (k == l ? 1.0 : 0.0)));
  }
  CHECK(d < 1e-10);
  // atoms whose phase-space spread stays inside the symbol's range see the identity
  const PhaseSpaceField st = sigma_tilde(one, g);
  for (std::size_t j = 0; j < torus().size(); ++j) CHECK(std::abs(st(16, j) - 1.0) < 1e-10);
  const Signal kron = make_window(WindowSpec::kronecker(), spec());
  const PhaseSpaceField sk = sigma_tilde(one, kron);
  for (cplx v : sk.values()) CHECK(std::abs(v - 1.0) < 1e-10);
}

TEST_CASE("zero symbol") {
  const Signal g = unit_window();
  const PhaseSpaceField zero = constant_symbol(spec(), torus(), 0.0);
  Rng rng(103);
  CHECK(apply(zero, g, g, random_signal(rng)).is_zero());
  CHECK(max_abs(kernel(zero, g, g).matrix) == 0.0);
  const PhaseSpaceField sz = sigma_tilde(zero, g);
  for (cplx v : sz.values()) CHECK(v == cplx{});
}

TEST_CASE("delta windows give a pointwise multiplier") {
  Rng rng(107);
  const Signal d0 = delta(spec(), 0);
  const PhaseSpaceField s = random_symbol(rng);
  const Signal f = random_signal(rng);
  const Signal out = apply(s, d0, d0, f);
  for (int k = -8; k <= 8; ++k) {
    cplx mean{};
    for (std::size_t j = 0; j < torus().size(); ++j) mean += s(static_cast<std::size_t>(k + 16), j);
    mean *= torus().weight();
    CHECK(std::abs(out[k + 24] - f[k + 24] * mean) < 1e-12 * (1.0 + std::abs(f[k + 24] * mean)));
  }
}

TEST_CASE("kernel, apply and weak pairing agree") {
  Rng rng(109);
  for (int t = 0; t < 5; ++t) {
    const PhaseSpaceField s = random_symbol(rng);
    const Signal g1 = random_signal(rng);
    const Signal g2 = random_signal(rng);
    const Signal f = random_signal(rng);
    const Signal h = random_signal(rng);
    const Signal Lf = apply(s, g1, g2, f);
    const OperatorKernel K = kernel(s, g1, g2);
    CHECK(max_dev(K * f, Lf) < 1e-12 * Lf.norm());
    const cplx w = weak_pairing(s, g1, g2, f, h);
    CHECK(std::abs(w - inner(Lf, h)) < 1e-12 * Lf.norm() * h.norm());
    CHECK(std::abs(weak_pairing(s, g1, g2, f, Lf) - Lf.norm() * Lf.norm()) <
          1e-12 * Lf.norm() * Lf.norm());
  }
}

TEST_CASE("identity pairing of orthogonal signals vanishes") {
  const Signal g = unit_window();
  const PhaseSpaceField one = constant_symbol(spec(), torus(), 1.0);
  const cplx w = weak_pairing(one, g, g, delta(spec(), 1), delta(spec(), -2));
  CHECK(std::abs(w) < 1e-10);
}

TEST_CASE("adjoint identity") {
  Rng rng(113);
  for (int t = 0; t < 5; ++t) {
    const PhaseSpaceField s = random_symbol(rng);
    const Signal g1 = random_signal(rng);
    const Signal g2 = random_signal(rng);
    const OperatorKernel K = kernel(s, g1, g2);
    const OperatorKernel A = adjoint_kernel(s, g1, g2);
    CHECK(max_abs(K.matrix.adjoint() - A.matrix) <= 1e-12 * std::max(1.0, max_abs(K.matrix)));
  }
}

TEST_CASE("self-adjoint and anti-self-adjoint cases") {
  Rng rng(127);
  const Signal g = random_signal(rng);
  const PhaseSpaceField s = real_part(random_symbol(rng));
  const OperatorKernel K = kernel(s, g, g);
  CHECK(K.hermitian());
  CHECK(max_abs(adjoint_kernel(s, g, g).matrix - K.matrix) <= 1e-12 * max_abs(K.matrix));
  const OperatorKernel I = kernel(constant_symbol(spec(), torus(), cplx(0, 1)), g, g);
  CHECK(max_abs(I.matrix.adjoint() + I.matrix) <= 1e-12 * max_abs(I.matrix));
}

TEST_CASE("spectrum of simple matrices") {
  OperatorKernel I{spec(), Eigen::MatrixXcd::Identity(5, 5), "identity"};
  const SpectralSummary s = spectrum(I, {1.0, 2.0, INFINITY});
  for (double v : s.singular_values) CHECK(v == doctest::Approx(1.0));
  CHECK(s.schatten.at(1.0) == doctest::Approx(5.0));
  CHECK(s.schatten.at(2.0) == doctest::Approx(std::sqrt(5.0)));
  CHECK(s.schatten.at(INFINITY) == doctest::Approx(1.0));
  CHECK(s.trace == cplx(5.0));

  Rng rng(131);
  Eigen::VectorXcd u(6), v(6);
  for (int i = 0; i < 6; ++i) {
    u(i) = rng.complex_normal();
    v(i) = rng.complex_normal();
  }
  OperatorKernel R{spec(), u * v.adjoint(), "rank-one"};
  const SpectralSummary r = spectrum(R, {});
  CHECK(rel(r.s1(), u.norm() * v.norm()) < 1e-12);
  for (std::size_t i = 1; i < r.singular_values.size(); ++i) CHECK(r.singular_values[i] <= 1e-12 * r.s1());
  CHECK_THROWS_AS(spectrum(I, {0.5}), DomainError);
}

TEST_CASE("trace identity and positivity for non-negative symbols") {
  Rng rng(137);
  for (int t = 0; t < 4; ++t) {
    const PhaseSpaceField s = ensemble::indicator_symbol(spec(), torus(), 16, rng);
    const Signal g = t % 2 == 0 ? unit_window() : random_signal(rng);
    const OperatorKernel K = kernel(s, g, g);
    const SpectralSummary sum = spectrum(K, {1.0});
    const double want = g.norm() * g.norm() * s.mass().real();
    CHECK(rel(sum.trace.real(), want) < 1e-10);
    CHECK(rel(sum.schatten.at(1.0), want) < 1e-10);
    CHECK(min_hermitian_eigenvalue(K) >= -1e-10 * sum.s1());
    double s2 = 0.0;
    for (double v : sum.singular_values) s2 += v * v;
    CHECK(rel(sum.hs_norm * sum.hs_norm, s2) < 1e-10);
    const PhaseSpaceField st = sigma_tilde(s, g);
    for (cplx v : st.values()) CHECK(v.real() >= -1e-12 * sum.s1());
  }
}

TEST_CASE("Schatten norms are monotone and log-convex") {
  Rng rng(139);
  const OperatorKernel K = kernel(random_symbol(rng), random_signal(rng), random_signal(rng));
  const SpectralSummary s = spectrum(K, {1.0, 1.5, 2.0, 3.0, INFINITY});
  double prev = INFINITY;
  for (const auto& [p, v] : s.schatten) {
    CHECK(v <= prev * (1.0 + 1e-12));
    prev = v;
    if (std::isfinite(p)) {
      CHECK(v <= std::pow(s.schatten.at(1.0), 1.0 / p) * std::pow(s.s1(), 1.0 - 1.0 / p) * (1.0 + 1e-9));
    }
  }
  CHECK(s.schatten.at(INFINITY) == s.s1());
}

TEST_CASE("operator-norm bound") {
  Rng rng(149);
  for (int t = 0; t < 5; ++t) {
    const PhaseSpaceField s = random_symbol(rng);
    const Signal g1 = random_signal(rng);
    const Signal g2 = random_signal(rng);
    const SpectralSummary sum = spectrum(kernel(s, g1, g2), {});
    CHECK(sum.s1() <= s.sup_norm() * g1.norm() * g2.norm() * (1.0 + 1e-9));
  }
}

TEST_CASE("quadrature insufficiency is refused") {
  PhaseSpaceField s = constant_symbol(spec(), torus(), 1.0);
  s.set_degree_bound(40);
  const Signal g = unit_window();
  CHECK_THROWS_AS(kernel(s, g, g), PrecisionError);
  CHECK_THROWS_AS(apply(s, g, g, g), PrecisionError);
}

}

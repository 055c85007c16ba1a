#include <vector>

#include "common.hpp"
#include "tfloc/error.hpp"
#include "tfloc/orlicz.hpp"

using namespace tfloc;
using namespace tfloc::test;

namespace {

std::vector<double> abs_normals(Rng& rng, std::size_t len) {
  std::vector<double> v(len);
  for (double& x : v) x = std::abs(rng.normal());
  return v;
}

// Direct L^{p,q} oracle: l^p over m at every node, then L^q over the torus.
double mixed_lp(const PhaseSpaceField& F, double p, double q) {
  const std::size_t T = F.torus().size();
  double outer = 0.0;
  for (std::size_t j = 0; j < T; ++j) {
    double inner = 0.0;
    for (std::size_t m = 0; m < F.m_box().size(); ++m) inner += std::pow(std::abs(F(m, j)), p);
    outer += std::pow(std::pow(inner, 1.0 / p), q) * F.torus().weight();
  }
  return std::pow(outer, 1.0 / q);
}

PhaseSpaceField separable(const std::vector<double>& a, const std::vector<double>& b) {
  PhaseSpaceField F(spec(), torus(), static_cast<int>(a.size() / 2), 8);
  for (std::size_t m = 0; m < a.size(); ++m) {
    for (std::size_t j = 0; j < b.size(); ++j) F(m, j) = a[m] * b[j];
  }
  return F;
}

}  // namespace

TEST_SUITE("orlicz") {

TEST_CASE("luxemburg examples") {
  const MeasureSpec c = MeasureSpec::counting();
  const std::vector<double> zero(5, 0.0);
  CHECK(luxemburg(zero, c, YoungFunction::eq5()) == 0.0);
  const std::vector<double> v{3.0, 4.0};
  CHECK(rel(luxemburg(v, c, YoungFunction::power(2.0)), 5.0) < 1e-9);
  // one atom: b = 1 / Phi^{-1}(1) on the quadratic tail
  const std::vector<double> atom{1.0};
  const double b = luxemburg(atom, c, YoungFunction::eq5());
  CHECK(rel(b, 1.0 / std::sqrt(1.0 - 0.5 * std::exp(-3.0))) < 1e-10);
  CHECK(b == doctest::Approx(1.01268).epsilon(1e-5));
  const std::vector<double> bad{1.0, std::nan("")};
  CHECK_THROWS_AS(luxemburg(bad, c, YoungFunction::eq5()), DomainError);
}

TEST_CASE("luxemburg straddles the level set") {
  Rng rng(29);
  const YoungFunction e = YoungFunction::eq5();
  const MeasureSpec q = MeasureSpec::quadrature(torus());
  for (int t = 0; t < 20; ++t) {
    const auto v = abs_normals(rng, 49);
    const double b = luxemburg(v, q, e);
    auto G = [&](double s) {
      double acc = 0.0;
      for (double x : v) acc += q.weight * e(x / s);
      return acc;
    };
    CHECK(G(b * (1.0 + kLuxemburgEpsilon)) <= 1.0);
    CHECK(G(b * (1.0 - kLuxemburgEpsilon)) >= 1.0);
  }
}

TEST_CASE("power Young functions reduce to p-norms") {
  Rng rng(31);
  const MeasureSpec ms[] = {MeasureSpec::counting(), MeasureSpec::quadrature(torus()),
                            MeasureSpec::product(torus())};
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    for (const auto& mu : ms) {
      const auto v = abs_normals(rng, 37);
      CHECK(rel(luxemburg(v, mu, YoungFunction::power(p)), lp_norm(v, mu, p)) < 1e-9);
    }
  }
}

TEST_CASE("mixed norm power case against a direct oracle") {
  Rng rng(37);
  const PhaseSpaceField Z(spec(), torus(), 4, 8);
  CHECK(mixed_norm(Z, YoungFunction::eq5(), YoungFunction::power(2.0)) == 0.0);
  CHECK(mixed_norm_swapped(Z, YoungFunction::eq5(), YoungFunction::power(2.0)) == 0.0);
  for (int t = 0; t < 10; ++t) {
    const PhaseSpaceField F = ensemble::trig_symbol(spec(), torus(), 4, 8, rng);
    const double p = rng.uniform(1.0, 4.0);
    const double q = rng.uniform(1.0, 4.0);
    CHECK(rel(mixed_norm(F, YoungFunction::power(p), YoungFunction::power(q)), mixed_lp(F, p, q)) <
          1e-9);
  }
}

TEST_CASE("separable fields factor") {
  Rng rng(41);
  std::vector<double> a(9);
  for (double& x : a) x = rng.normal();
  std::vector<double> b = abs_normals(rng, 49);
  const PhaseSpaceField F = separable(a, b);
  const YoungFunction p1 = YoungFunction::eq5();
  const YoungFunction p2 = YoungFunction::power(1.5);
  std::vector<double> abs_a(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) abs_a[i] = std::abs(a[i]);
  const MeasureSpec c = MeasureSpec::counting();
  const MeasureSpec q = MeasureSpec::quadrature(torus());
  CHECK(rel(mixed_norm(F, p1, p2), luxemburg(abs_a, c, p1) * luxemburg(b, q, p2)) < 1e-9);
  // swapped: inner Phi2 over the torus, outer Phi1 over the lattice
  CHECK(rel(mixed_norm_swapped(F, p1, p2), luxemburg(abs_a, c, p1) * luxemburg(b, q, p2)) < 1e-9);
  CHECK(rel(mixed_norm_swapped(F, p2, p1), luxemburg(abs_a, c, p2) * luxemburg(b, q, p1)) < 1e-9);
}

TEST_CASE("norm axioms") {
  Rng rng(43);
  const YoungFunction e = YoungFunction::eq5();
  for (int t = 0; t < 10; ++t) {
    const PhaseSpaceField F = ensemble::trig_symbol(spec(), torus(), 4, 8, rng);
    const PhaseSpaceField G = ensemble::trig_symbol(spec(), torus(), 4, 8, rng);
    const cplx c(rng.normal(), rng.normal());
    CHECK(rel(orlicz_norm(c * F, e), std::abs(c) * orlicz_norm(F, e)) < 1e-9);
    CHECK(orlicz_norm(F + G, e) <= orlicz_norm(F, e) + orlicz_norm(G, e) + 1e-9);
    CHECK(mixed_norm(F + G, e, e) <= mixed_norm(F, e, e) + mixed_norm(G, e, e) + 1e-9);
    CHECK(orlicz_norm(F.abs(), e) <= orlicz_norm(F.abs() + G.abs(), e) + 1e-12);
  }
}

TEST_CASE("convolution with the unit slice takes torus means") {
  Rng rng(47);
  PhaseSpaceField F(spec(), torus(), 0, 0);
  for (cplx& v : F.values()) v = 1.0;
  const PhaseSpaceField G = ensemble::trig_symbol(spec(), torus(), 3, 5, rng);
  const PhaseSpaceField H = convolve_phase_space(F, G);
  REQUIRE(H.m_radius() == 3);
  for (std::size_t m = 0; m < H.m_box().size(); ++m) {
    cplx mean{};
    for (std::size_t j = 0; j < torus().size(); ++j) mean += G(m, j) * torus().weight();
    for (std::size_t j = 0; j < torus().size(); ++j) CHECK(std::abs(H(m, j) - mean) < 1e-12);
  }
}

TEST_CASE("convolution with the full Dirichlet kernel reproduces") {
  Rng rng(53);
  const TorusGrid t = torus();
  // D(x) = sum_{|d| <= 24} e^{2 pi i d x} equals M at x = 0 and 0 at other nodes
  PhaseSpaceField F(spec(), t, 0, 24);
  F(0, 0) = static_cast<double>(t.samples());
  const PhaseSpaceField G = ensemble::trig_symbol(spec(), t, 3, 8, rng);
  const PhaseSpaceField H = convolve_phase_space(F, G);
  double d = 0.0;
  for (std::size_t i = 0; i < G.size(); ++i) d = std::max(d, std::abs(H.values()[i] - G.values()[i]));
  CHECK(d < 1e-12);
  const PhaseSpaceField Z(spec(), t, 3, 8);
  const PhaseSpaceField ZG = convolve_phase_space(Z, G);
  for (cplx v : ZG.values()) CHECK(v == cplx{});
}

TEST_CASE("convolution range is checked") {
  const PhaseSpaceField A(spec(), torus(), 16, 8);
  const PhaseSpaceField B(spec(), torus(), 16, 8);
  CHECK_THROWS_AS(convolve_phase_space(A, B), RangeError);
}

TEST_CASE("holder pairing examples") {
  const TorusGrid t = torus();
  PhaseSpaceField F(spec(), t, 2, 0);
  PhaseSpaceField G(spec(), t, 2, 0);
  for (std::size_t j = 0; j < t.size(); ++j) F(2, j) = G(2, j) = 1.0;
  CHECK(rel(holder_pairing(F, G), 1.0) < 1e-14);
  CHECK(holder_pairing(F, PhaseSpaceField(spec(), t, 2, 0)) == 0.0);
  Rng rng(59);
  PhaseSpaceField H = ensemble::trig_symbol(spec(), t, 2, 4, rng);
  H = (1.0 / H.l2_norm()) * H;
  CHECK(rel(holder_pairing(H, H), 1.0) < 1e-12);
  CHECK_THROWS_AS(holder_pairing(H, PhaseSpaceField(spec(), t, 3, 4)), ShapeError);
}

TEST_CASE("Holder inequality in sequence spaces") {
  Rng rng(61);
  const YoungFunction e = YoungFunction::eq5();
  const YoungFunction psi = YoungFunction::conjugate(e);
  const MeasureSpec c = MeasureSpec::counting();
  for (int t = 0; t < 20; ++t) {
    const auto f = abs_normals(rng, 17);
    const auto g = abs_normals(rng, 17);
    double lhs = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) lhs += f[i] * g[i];
    const double p = rng.uniform(1.1, 5.0);
    const double q = p / (p - 1.0);
    CHECK(lhs <= luxemburg(f, c, YoungFunction::power(p)) *
                     luxemburg(g, c, YoungFunction::power(q)) * (1.0 + 1e-9));
    CHECK(lhs <= 2.0 * luxemburg(f, c, e) * luxemburg(g, c, psi) * (1.0 + 1e-9));
  }
}

TEST_CASE("mixed Holder inequality holds with the compounded constant") {
  // each level contributes a factor 2, so the provable constant is 4
  Rng rng(67);
  const YoungFunction e = YoungFunction::eq5();
  const YoungFunction psi = YoungFunction::conjugate(e);
  for (int t = 0; t < 5; ++t) {
    const PhaseSpaceField F = ensemble::trig_symbol(spec(), torus(), 4, 8, rng);
    const PhaseSpaceField G = ensemble::trig_symbol(spec(), torus(), 4, 8, rng);
    CHECK(holder_pairing(F, G) <= 4.0 * mixed_norm(F, e, e) * mixed_norm(G, psi, psi));
  }
}

TEST_CASE("convolution inequality") {
  Rng rng(71);
  const YoungFunction e = YoungFunction::eq5();
  const YoungFunction sq = YoungFunction::power(2.0);
  for (int t = 0; t < 5; ++t) {
    const PhaseSpaceField F = ensemble::trig_symbol(spec(), torus(), 8, 4, rng);
    const PhaseSpaceField G = ensemble::trig_symbol(spec(), torus(), 8, 4, rng);
    const PhaseSpaceField H = convolve_phase_space(F, G);
    CHECK(mixed_norm(H, e, sq) <= F.l1_norm() * mixed_norm(G, e, sq) * (1.0 + 1e-9));
    CHECK(orlicz_norm(H, e) <= F.l1_norm() * orlicz_norm(G, e) * (1.0 + 1e-9));
  }
}

}

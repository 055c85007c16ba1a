#include "common.hpp"
#include "tfloc/error.hpp"
#include "tfloc/stft.hpp"

using namespace tfloc;
using namespace tfloc::test;

namespace {

std::size_t m_index(const PhaseSpaceField& F, int m) {
  const int p[] = {m};
  return F.m_box().index(p);
}

}  // namespace

TEST_SUITE("stft") {

TEST_CASE("stft of deltas") {
  const LatticeSpec s = spec();
  const TorusGrid t = torus();
  const PhaseSpaceField V = stft(delta(s, 0), delta(s, 0), t);
  CHECK(V.m_radius() == 16);
  CHECK(V.degree_bound() == 8);
  for (std::size_t mi = 0; mi < V.m_box().size(); ++mi) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      CHECK(V(mi, j) == (V.m_box().point(mi)[0] == 0 ? cplx(1.0) : cplx(0.0)));
    }
  }
  const PhaseSpaceField W = stft(delta(s, 1), delta(s, 0), t);
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double w = static_cast<double>(t.node(j)[0]) / t.samples();
    CHECK(std::abs(W(m_index(W, 1), j) - std::polar(1.0, -2.0 * kPi * w)) < 1e-14);
    CHECK(W(m_index(W, 0), j) == cplx{});
  }
}

TEST_CASE("stft of the window against itself") {
  const Signal g = unit_window();
  const PhaseSpaceField V = stft(g, g, torus());
  CHECK(std::abs(V(m_index(V, 0), 0) - 1.0) < 1e-14);
}

TEST_CASE("zero window is refused") {
  CHECK_THROWS_AS(stft(delta(spec(), 0), Signal(spec()), torus()), DomainError);
}

TEST_CASE("adjoint examples") {
  const LatticeSpec s = spec();
  const TorusGrid t = torus();
  const Signal d0 = delta(s, 0);
  CHECK(max_dev(stft_adjoint(stft(d0, d0, t), d0), d0) < 1e-14);
  const PhaseSpaceField Z(s, t, 16, 8);
  CHECK(stft_adjoint(Z, unit_window()).is_zero());
  Rng rng(5);
  const Signal f = random_signal(rng);
  const Signal g = unit_window();
  CHECK(max_dev(stft_adjoint(stft(f, g, t), g), f) < 1e-12 * f.norm());
}

TEST_CASE("adjoint refuses an under-resolved integrand") {
  PhaseSpaceField F(spec(), torus(), 16, 8);
  F.set_degree_bound(30);
  CHECK_THROWS_AS(stft_adjoint(F, unit_window()), PrecisionError);
}

TEST_CASE("inversion examples") {
  const LatticeSpec s = spec();
  const TorusGrid t = torus();
  const Signal d0 = delta(s, 0);
  CHECK(max_dev(invert(stft(delta(s, 1), d0, t), d0, d0), delta(s, 1)) < 1e-14);
  Rng rng(7);
  const Signal f = random_signal(rng);
  const Signal g = unit_window();
  CHECK(max_dev(invert(stft(f, g, t), g, g), f) < 1e-12 * f.norm());
  const Signal h = 2.0 * g;
  CHECK(std::abs(inner(h, g) - 2.0) < 1e-14);
  CHECK(max_dev(invert(stft(f, g, t), g, h), f) < 1e-12 * f.norm());
  CHECK_THROWS_AS(invert(stft(f, d0, t), d0, delta(s, 1)), ConditioningError);
}

TEST_CASE("Plancherel and orthogonality on random data") {
  const TorusGrid t = torus();
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Signal f1 = random_signal(rng);
    const Signal f2 = random_signal(rng);
    const Signal g1 = random_signal(rng);
    const Signal g2 = random_signal(rng);
    const PhaseSpaceField A = stft(f1, g1, t);
    CHECK(rel(A.l2_norm(), f1.norm() * g1.norm()) < 1e-10);
    const cplx lhs = inner(A, stft(f2, g2, t));
    const cplx rhs = inner(f1, f2) * inner(g2, g1);
    CHECK(std::abs(lhs - rhs) < 1e-10 * f1.norm() * f2.norm() * g1.norm() * g2.norm());
  }
}

TEST_CASE("fast path agrees with the direct sum") {
  Rng rng(17);
  const Signal f = random_signal(rng);
  const Signal g = random_signal(rng);
  const PhaseSpaceField A = stft(f, g, torus());
  const PhaseSpaceField B = detail::stft_by_convolution(f, g, torus());
  double d = 0.0;
  for (std::size_t i = 0; i < A.size(); ++i) d = std::max(d, std::abs(A.values()[i] - B.values()[i]));
  CHECK(d < 1e-12 * f.norm() * g.norm());
}

TEST_CASE("extended stft covers the full support") {
  Rng rng(19);
  Signal f = random_signal(rng, 12);
  const Signal g = unit_window();
  CHECK_THROWS_AS(stft_extended(f, g, torus(), 19), RangeError);
  const PhaseSpaceField V = stft_extended(f, g, torus(), 20);
  CHECK(rel(V.l2_norm(), f.norm() * g.norm()) < 1e-10);
}

TEST_CASE("symbol transform examples") {
  const LatticeSpec s = spec();
  const TorusGrid t(1, 9);
  const PhaseSpaceField G = default_symbol_window(s, t);
  const PhaseSpaceField Z(s, t, 1, 1);
  const SymbolTransform SZ = stft_symbol(Z, G);
  for (cplx v : SZ.values()) CHECK(v == cplx{});

  // F = G = indicator of the m = 0 slice
  PhaseSpaceField F(s, t, 0, 0);
  for (cplx& v : F.values()) v = 1.0;
  const SymbolTransform S = stft_symbol(F, F);
  for (std::size_t m = 0; m < S.m_box().size(); ++m) {
    for (std::size_t om = 0; om < t.size(); ++om) {
      for (std::size_t xi = 0; xi < t.size(); ++xi) {
        for (std::size_t k = 0; k < S.k_box().size(); ++k) {
          const bool one = S.m_box().point(m)[0] == 0 && S.k_box().point(k)[0] == 0;
          CHECK(std::abs(S(m, om, xi, k) - (one ? 1.0 : 0.0)) < 1e-14);
        }
      }
    }
  }
}

TEST_CASE("symbol transform Plancherel") {
  const LatticeSpec s = LatticeSpec::with_defaults(1, 2);
  const TorusGrid t = TorusGrid::for_lattice(s);
  const PhaseSpaceField G = default_symbol_window(s, t);
  Rng rng(23);
  const PhaseSpaceField F = ensemble::trig_symbol(s, t, 1, 1, rng);
  const SymbolTransform S = stft_symbol(F, G);
  CHECK(rel(S.lp_norm(2.0), F.l2_norm() * G.l2_norm()) < 1e-9);
}

TEST_CASE("symbol transform refuses degree overflow") {
  const LatticeSpec s = spec();
  const TorusGrid t(1, 9);
  const PhaseSpaceField F(s, t, 1, 3);
  const PhaseSpaceField G(s, t, 1, 2);
  CHECK_THROWS_AS(stft_symbol(F, G), PrecisionError);
}

}

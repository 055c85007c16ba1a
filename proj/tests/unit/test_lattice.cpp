#include "common.hpp"
#include "tfloc/error.hpp"

using namespace tfloc;
using namespace tfloc::test;

TEST_SUITE("lattice") {

TEST_CASE("lattice spec defaults and validation") {
  const LatticeSpec s = spec();
  CHECK(s.C == 24);
  CHECK(s.box().size() == 49);
  CHECK(TorusGrid::for_lattice(s).samples() == 49);
  CHECK_THROWS_AS(LatticeSpec(1, 8, 23), DomainError);
  CHECK_THROWS_AS(LatticeSpec(0, 1, 3), DomainError);
}

TEST_CASE("box index is a bijection in lexicographic order") {
  const Box b(2, 2);
  REQUIRE(b.size() == 25);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index(b.point(i)) == i);
  const int first[] = {-2, -2};
  const int second[] = {-2, -1};
  CHECK(b.index(first) == 0);
  CHECK(b.index(second) == 1);
}

TEST_CASE("translate") {
  const LatticeSpec s = spec();
  const Signal d0 = delta(s, 0);
  CHECK(max_dev(translate(d0, 2), delta(s, 2)) == 0.0);
  CHECK(max_dev(translate(d0, 0), d0) == 0.0);
  const Signal f = d0 + 2.0 * delta(s, 1);
  CHECK(max_dev(translate(f, 1), delta(s, 1) + 2.0 * delta(s, 2)) == 0.0);
  CHECK_THROWS_AS(translate(d0, 17), RangeError);
}

TEST_CASE("modulate") {
  const LatticeSpec s = spec();
  CHECK(max_dev(modulate(delta(s, 3), 0.5), -1.0 * delta(s, 3)) < 1e-15);
  CHECK(max_dev(modulate(delta(s, 1), 0.25), cplx(0, 1) * delta(s, 1)) < 1e-15);
  Rng rng(3);
  const Signal f = random_signal(rng);
  CHECK(max_dev(modulate(f, 0.0), f) == 0.0);
}

TEST_CASE("gabor atom") {
  const LatticeSpec s = spec();
  CHECK(max_dev(gabor_atom(delta(s, 0), 1, 0.25), cplx(0, 1) * delta(s, 1)) < 1e-15);
  CHECK(max_dev(gabor_atom(delta(s, 0), 0, 0.0), delta(s, 0)) == 0.0);
  const Signal g = unit_window();
  CHECK(max_dev(gabor_atom(g, 0, 0.0), g) == 0.0);
}

TEST_CASE("time-frequency shifts are unitary and compose") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Signal f = random_signal(rng, 4);
    const int a = rng.integer(-4, 4);
    const int b = rng.integer(-4, 4);
    const double w = rng.uniform();
    CHECK(rel(translate(f, a).norm(), f.norm()) < 1e-12);
    CHECK(rel(modulate(f, w).norm(), f.norm()) < 1e-12);
    CHECK(max_dev(translate(translate(f, a), b), translate(f, a + b)) == 0.0);
  }
}

TEST_CASE("grid quadrature integrates exponentials of degree up to M-1") {
  const TorusGrid t = torus();
  for (int d = -(t.samples() - 1); d <= t.samples() - 1; ++d) {
    cplx acc{};
    for (std::size_t j = 0; j < t.size(); ++j) acc += t.root(static_cast<long long>(d) * t.node(j)[0]);
    acc *= t.weight();
    CHECK(std::abs(acc - (d == 0 ? cplx(1.0) : cplx(0.0))) < 1e-12);
  }
}

TEST_CASE("field degree bound is limited by the grid") {
  PhaseSpaceField F(spec(), torus(), 16, 8);
  CHECK_NOTHROW(F.set_degree_bound(48));
  CHECK_THROWS_AS(F.set_degree_bound(49), PrecisionError);
}

}

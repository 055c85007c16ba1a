#include "common.hpp"
#include "tfloc/error.hpp"
#include "tfloc/young.hpp"

using namespace tfloc;
using namespace tfloc::test;

TEST_SUITE("young") {

TEST_CASE("evaluation examples") {
  CHECK(YoungFunction::power(2.0)(3.0) == doctest::Approx(9.0));
  const YoungFunction e = YoungFunction::eq5();
  CHECK(rel(e(std::exp(-2.0)), 2.0 * std::exp(-4.0)) < 1e-14);
  CHECK(rel(e(std::exp(-2.0)), 0.036631) < 1e-5);
  // both branches meet at the switch point
  const double xs = std::exp(-1.5);
  CHECK(rel(e(xs), 1.5 * std::exp(-3.0)) < 1e-14);
  CHECK(rel(xs * xs + 0.5 * std::exp(-3.0), 1.5 * std::exp(-3.0)) < 1e-14);
  CHECK(e(0.0) == 0.0);
  CHECK_THROWS_AS(e(-1.0), DomainError);
}

TEST_CASE("complementary examples") {
  CHECK(complementary(YoungFunction::eq5(), 0.0) == 0.0);
  CHECK(rel(complementary(YoungFunction::power(2.0), 2.0), 1.0) < 1e-9);
  CHECK(rel(complementary(YoungFunction::power(3.0), 3.0), 2.0) < 1e-9);
  CHECK_THROWS_AS(complementary(YoungFunction::power(1.0), 2.0), UnboundedError);
}

TEST_CASE("complementary of the square matches y^2/4") {
  const YoungFunction sq = YoungFunction::power(2.0);
  for (double ly = -3.0; ly <= 3.0; ly += 0.25) {
    const double y = std::pow(10.0, ly);
    CHECK(rel(complementary(sq, y), y * y / 4.0) < 1e-8);
  }
}

TEST_CASE("Young's inequality holds for the numeric eq5 conjugate") {
  const YoungFunction e = YoungFunction::eq5();
  const YoungFunction psi = YoungFunction::conjugate(e);
  for (double lx = -6.0; lx <= 2.0; lx += 0.5) {
    for (double ly = -6.0; ly <= 2.0; ly += 0.5) {
      const double x = std::pow(10.0, lx);
      const double y = std::pow(10.0, ly);
      CHECK(x * y <= (e(x) + psi(y)) * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("biconjugate does not exceed the original") {
  const YoungFunction phis[] = {YoungFunction::eq5(), YoungFunction::power(1.5)};
  for (const auto& phi : phis) {
    const YoungFunction bi = YoungFunction::conjugate(YoungFunction::conjugate(phi));
    for (double lt = -2.0; lt <= 1.0; lt += 0.5) {
      const double t = std::pow(10.0, lt);
      CHECK(bi(t) <= phi(t) * (1.0 + 1e-6) + 1e-9);
    }
  }
}

TEST_CASE("delta2 probe") {
  CHECK(rel(delta2_probe(YoungFunction::power(2.0), 1.0), 4.0) < 1e-12);
  CHECK(rel(delta2_probe(YoungFunction::power(1.0), 1.0), 2.0) < 1e-12);
  // Phi(2x)/Phi(x) = 4 ln(2x)/ln(x) rises towards 4 as x -> 0
  const double r = delta2_probe(YoungFunction::eq5(), 0.1);
  CHECK(r > 4.0 * std::log(0.2) / std::log(0.1));
  CHECK(r < 4.0);
  CHECK_THROWS_AS(delta2_probe(YoungFunction::eq5(), 0.1, 8), DomainError);
}

TEST_CASE("quasi-Young functions") {
  const YoungFunction sq = YoungFunction::power(2.0);
  CHECK(YoungFunction::quasi(sq, 1.0) == sq);
  const YoungFunction lin = YoungFunction::quasi(sq, 0.5);
  const YoungFunction sq2 = YoungFunction::quasi(YoungFunction::power(4.0), 0.5);
  for (double t : {0.0, 0.3, 1.0, 7.5}) {
    CHECK(lin(t) == doctest::Approx(t));
    CHECK(sq2(t) == doctest::Approx(t * t));
  }
  CHECK_THROWS_AS(YoungFunction::quasi(sq, 0.0), DomainError);
  CHECK_THROWS_AS(YoungFunction::quasi(sq, 1.5), DomainError);
}

TEST_CASE("eq5 is convex on the probe range") {
  CHECK(convex_on_grid(YoungFunction::eq5(), 1e-6, 10.0));
  // the bare formula loses convexity past e^{-3/2}
  auto raw = [](double t) { return -t * t * std::log(t); };
  CHECK_THROWS_AS(YoungFunction::table({0.0, 0.3, 0.5, 0.7}, {0.0, raw(0.3), raw(0.5), raw(0.7)}),
                  DomainError);
}

TEST_CASE("names") {
  CHECK(YoungFunction::power(2.0).name() == "power(2)");
  CHECK(YoungFunction::eq5().name() == "eq5");
  CHECK(YoungFunction::quasi(YoungFunction::power(2.0), 0.5).name() == "quasi(power(2),0.5)");
  CHECK(YoungFunction::conjugate(YoungFunction::eq5()).name() == "conjugate(eq5)");
}

}

#include <doctest.h>

#include <gwd/coupling.hpp>
#include <gwd/gamma_tools.hpp>

#include <cmath>
#include <vector>

using namespace gwd;

namespace {

const Rational kHalf(1, 2);

std::vector<Rational> spins_up_to(const Rational& jmax) {
  std::vector<Rational> out;
  for (Rational j(0); j <= jmax; j += kHalf) out.push_back(j);
  return out;
}

double g(double z) { return std::tgamma(z); }

}  // namespace

TEST_CASE("triangle rule") {
  CHECK(triangle_ok(kHalf, kHalf, Rational(1)));
  CHECK(triangle_ok(kHalf, kHalf, Rational(0)));
  CHECK(!triangle_ok(kHalf, kHalf, Rational(2)));
  CHECK(!triangle_ok(kHalf, Rational(1), Rational(1)));  // j1+j2+j3 not integer
  CHECK(!triangle_ok(Rational(1), Rational(1), Rational(3)));
}

TEST_CASE("exact coupling coefficients: spot values") {
  CHECK(cg_exact(kHalf, kHalf, kHalf, -kHalf, Rational(1)) ==
        RadicalSum::sqrt_of(Rational(1, 2)));
  CHECK(cg_exact(kHalf, kHalf, kHalf, -kHalf, Rational(0)) ==
        RadicalSum::sqrt_of(Rational(1, 2)));
  CHECK(cg_exact(kHalf, -kHalf, kHalf, kHalf, Rational(0)) ==
        -RadicalSum::sqrt_of(Rational(1, 2)));
  CHECK(cg_exact(Rational(1), Rational(1), Rational(1), Rational(-1), Rational(0)) ==
        RadicalSum::sqrt_of(Rational(1, 3)));
  CHECK(cg_exact(Rational(1), Rational(0), Rational(1), Rational(0), Rational(2)) ==
        RadicalSum::sqrt_of(Rational(2, 3)));
  CHECK(cg_exact(Rational(3, 2), kHalf, Rational(3, 2), -kHalf, Rational(0)) ==
        RadicalSum(Rational(-1, 2)));
  // stretched aligned coefficient is exactly one
  CHECK(cg_exact(Rational(3, 2), Rational(3, 2), Rational(2), Rational(2), Rational(7, 2)) ==
        RadicalSum(Rational(1)));
  // outside the coupling rules: zero
  CHECK(cg_exact(kHalf, kHalf, kHalf, kHalf, Rational(0)).is_zero());   // m3 != 0
  CHECK(cg_exact(Rational(1), Rational(0), Rational(1), Rational(0), Rational(4)).is_zero());
}

TEST_CASE("two equal spins with zero projections cannot couple to spin one") {
  CHECK(cg_exact(Rational(1), Rational(0), Rational(1), Rational(0), Rational(1)).is_zero());
  CHECK(cg_exact(Rational(2), Rational(0), Rational(2), Rational(0), Rational(1)).is_zero());
}

TEST_CASE("exchange of the two coupled spins flips by the triangle phase") {
  for (const Rational& j1 : spins_up_to(Rational(3, 2)))
    for (const Rational& j2 : spins_up_to(Rational(3, 2)))
      for (Rational j3 = abs(j1 - j2); j3 <= j1 + j2; j3 += 1)
        for (Rational m1 = -j1; m1 <= j1; m1 += 1)
          for (Rational m2 = -j2; m2 <= j2; m2 += 1) {
            RadicalSum lhs = cg_exact(j1, m1, j2, m2, j3);
            RadicalSum rhs = cg_exact(j2, m2, j1, m1, j3);
            if (!is_integer(j1 + j2 - j3) || to_long(j1 + j2 - j3) % 2 == 0)
              CHECK((lhs - rhs).is_zero());
            else
              CHECK((lhs + rhs).is_zero());
          }
}

TEST_CASE("coupling coefficients are orthonormal rows") {
  // sum_{m1} <j1 m1, j2 m3-m1 | j3 m3><j1 m1, j2 m3-m1 | j3' m3> = delta(j3, j3')
  double worst = 0;
  for (const Rational& j1 : spins_up_to(Rational(3)))
    for (const Rational& j2 : spins_up_to(Rational(3)))
      for (Rational m3 = -(j1 + j2); m3 <= j1 + j2; m3 += 1)
        for (Rational j3a = abs(j1 - j2); j3a <= j1 + j2; j3a += 1) {
          if (abs(m3) > j3a) continue;
          for (Rational j3b = j3a; j3b <= j1 + j2; j3b += 1) {
            if (abs(m3) > j3b) continue;
            double sum = 0;
            for (Rational m1 = -j1; m1 <= j1; m1 += 1) {
              Rational m2 = m3 - m1;
              if (abs(m2) > j2) continue;
              sum += cg_value(j1, m1, j2, m2, j3a) * cg_value(j1, m1, j2, m2, j3b);
            }
            double target = (j3a == j3b) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(sum - target));
          }
        }
  CHECK(worst < 1e-12);
}

TEST_CASE("continued square restricts to the exact square on the lattice") {
  double worst = 0;
  for (const Rational& j1 : spins_up_to(Rational(2)))
    for (const Rational& j2 : spins_up_to(Rational(2)))
      for (Rational j3 = abs(j1 - j2); j3 <= j1 + j2; j3 += 1)
        for (Rational m1 = -j1; m1 <= j1; m1 += 1)
          for (Rational m2 = -j2; m2 <= j2; m2 += 1) {
            double ex = cg_value(j1, m1, j2, m2, j3);
            double ct = cg_sq_continuous(j1, to_double(m1), j2, to_double(m2), j3);
            worst = std::max(worst, std::abs(ct - ex * ex));
          }
  CHECK(worst < 1e-12);
}

TEST_CASE("continued square matches the printed closed forms off the lattice") {
  // <1/2 x, 1/2 -x | 1 0>^2 = 1 / (2 [G(3/2+x) G(3/2-x)]^2)
  for (double x : {0.17, -0.6, 1.3, 3.7, -5.45, 20.4}) {
    double oracle = 1.0 / (2.0 * std::pow(g(1.5 + x) * g(1.5 - x), 2));
    CHECK(cg_sq_continuous(kHalf, x, kHalf, -x, Rational(1)) ==
          doctest::Approx(oracle).epsilon(1e-10));
  }
  // <1/2 x, 1/2 -x | 0 0>^2 = 2 x^2 / [G(3/2+x) G(3/2-x)]^2
  for (double x : {0.3, -0.9, 2.21, -4.6}) {
    double oracle = 2.0 * x * x / std::pow(g(1.5 + x) * g(1.5 - x), 2);
    CHECK(cg_sq_continuous(kHalf, x, kHalf, -x, Rational(0)) ==
          doctest::Approx(oracle).epsilon(1e-10));
  }
  // <1/2 x, 1/2 r-x | 1 r>^2 with r = sqrt(2):
  //   G(2-r) G(2+r) / (2 G(3/2+x) G(3/2-x) G(3/2-r+x) G(3/2+r-x))
  double r = std::sqrt(2.0);
  for (double x : {0.1, 0.9, -1.4, 3.05}) {
    double oracle = g(2 - r) * g(2 + r) /
                    (2.0 * g(1.5 + x) * g(1.5 - x) * g(1.5 - r + x) * g(1.5 + r - x));
    CHECK(cg_sq_continuous(kHalf, x, kHalf, r - x, Rational(1)) ==
          doctest::Approx(oracle).epsilon(1e-10));
  }
  // <1 x, 1 -x | 0 0>^2 = (1-3x^2)^2 sin^2(pi x) / (3 pi^2 x^2 (1-x^2)^2)
  for (double x : {0.4, 1.7, -2.3, 6.6}) {
    double oracle = std::pow(1 - 3 * x * x, 2) * std::pow(std::sin(M_PI * x), 2) /
                    (3 * M_PI * M_PI * x * x * std::pow(1 - x * x, 2));
    CHECK(cg_sq_continuous(Rational(1), x, Rational(1), -x, Rational(0)) ==
          doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("signed continuation squares to the continued square where real") {
  for (double x : {0.1, 0.25, 0.45}) {
    double s = cg_continuous(kHalf, x, kHalf, -x, Rational(1));
    double sq = cg_sq_continuous(kHalf, x, kHalf, -x, Rational(1));
    CHECK(s * s == doctest::Approx(sq).epsilon(1e-12));
  }
  // outside the window the square goes negative and the signed value is
  // undefined (imaginary)
  CHECK(cg_sq_continuous(kHalf, 2.0, kHalf, std::sqrt(2.0) - 2.0, Rational(1)) < 0);
  CHECK_THROWS_AS(cg_continuous(kHalf, 2.0, kHalf, std::sqrt(2.0) - 2.0, Rational(1)),
                  std::domain_error);
}

TEST_CASE("body-frame coefficients for aligned and generic projections") {
  CHECK(internal_cg(kHalf, Scalar(1), 0) == Scalar(1));
  // k=1: n / sqrt(j(j+1)); equals 1 at the maximal projection
  CHECK(internal_cg(Rational(1), spin_magnitude(Rational(1)), 1) == Scalar(1));
  CHECK(internal_cg(kHalf, Scalar(1), 1) == Scalar::sqrt_rational(Rational(4, 3)));
  // k=2 at the maximal projection: sqrt(j(j+1) / ((j-1/2)(j+3/2)))
  CHECK(internal_cg(Rational(1), spin_magnitude(Rational(1)), 2) ==
        Scalar::sqrt_rational(Rational(8, 5)));
  // rank above 2j is out of range
  CHECK_THROWS_AS(internal_cg(kHalf, Scalar(1), 2), std::domain_error);
  CHECK_THROWS_AS(internal_cg(Rational(1), Scalar(0), 5), std::domain_error);
  // symbolic projection stays symbolic
  CHECK(internal_cg(Rational(1), Scalar::symbol(), 1).is_symbolic());
}

TEST_CASE("triple products combine external and internal couplings") {
  TripleProduct t = triple_product(Rational(1), Scalar(1), Rational(1), Rational(1),
                                   Scalar(-1), Rational(-1), Rational(0));
  CHECK(t.exact);
  CHECK(t.external == Scalar::sqrt_rational(Rational(1, 3)));
  CHECK(t.internal == Scalar::sqrt_rational(Rational(1, 3)));
  CHECK(t.ratio == Scalar(Rational(1, 3)));
  CHECK(t.value == Scalar(Rational(1, 3)));
}

TEST_CASE("pattern table and parsing") {
  CHECK(*parse_pattern("stretched-halves") == RmsPattern::HalvesToOneStretched);
  CHECK(*parse_pattern("b") == RmsPattern::HalvesToOneStretched);
  CHECK(*parse_pattern("vector-halves") == RmsPattern::HalvesToOneZero);
  CHECK(*parse_pattern("a") == RmsPattern::HalvesToOneZero);
  CHECK(*parse_pattern("scalar-halves") == RmsPattern::HalvesToZero);
  CHECK(*parse_pattern("c") == RmsPattern::HalvesToZero);
  CHECK(*parse_pattern("scalar-ones") == RmsPattern::OnesToZero);
  CHECK(*parse_pattern("d") == RmsPattern::OnesToZero);
  CHECK(!parse_pattern("nonsense").has_value());

  PatternInfo s = pattern_info(RmsPattern::HalvesToOneStretched);
  CHECK(s.j1 == kHalf);
  CHECK(s.j3 == Rational(1));
  CHECK(s.n3 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(s.center == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  PatternInfo v = pattern_info(RmsPattern::HalvesToOneZero);
  CHECK(v.n3 == 0.0);
  CHECK(v.center == 0.0);
}

TEST_CASE("quasiprobability densities agree with the direct continuation") {
  for (double x : {-3.3, -0.7, 0.0, 0.41, 1.9}) {
    CHECK(quasiprob_density(RmsPattern::HalvesToOneZero, x) ==
          doctest::Approx(cg_sq_continuous(kHalf, x, kHalf, -x, Rational(1))).epsilon(1e-12));
    CHECK(quasiprob_density(RmsPattern::HalvesToOneStretched, x) ==
          doctest::Approx(cg_sq_continuous(kHalf, x, kHalf, std::sqrt(2.0) - x, Rational(1)))
              .epsilon(1e-12));
  }
  // negative quasiprobability in the stretched tail
  CHECK(quasiprob_density(RmsPattern::HalvesToOneStretched, 2.0) < 0);
}

TEST_CASE("rms couplings integrate to one") {
  RmsResult stretched = rms_pattern(RmsPattern::HalvesToOneStretched);
  CHECK(stretched.integral == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(stretched.rms == doctest::Approx(1.0).epsilon(1e-8));
  REQUIRE(stretched.closed_form.has_value());
  CHECK(*stretched.closed_form == doctest::Approx(stretched.integral).epsilon(1e-10));

  RmsResult vector = rms_pattern(RmsPattern::HalvesToOneZero);
  CHECK(vector.integral == doctest::Approx(1.0).epsilon(1e-8));
  REQUIRE(vector.closed_form.has_value());
  CHECK(*vector.closed_form == doctest::Approx(1.0).epsilon(1e-10));

  // general stretched couplings: the orbital row 1 + 1 -> 2 and the
  // half-integer case reproduce unity as well
  RmsResult orbital = rms_stretched(Rational(1), Rational(1));
  CHECK(orbital.rms == doctest::Approx(1.0).epsilon(1e-8));
  RmsResult same = rms_stretched(kHalf, kHalf);
  CHECK(same.integral == doctest::Approx(stretched.integral).epsilon(1e-9));
  CHECK_THROWS_AS(rms_stretched(Rational(-1), Rational(1)), std::domain_error);
}

TEST_CASE("oscillatory tail areas agree with direct quadrature of the density") {
  // the area routine splits core window + series tails; cross-check one
  // pattern against plain Simpson over a wide truncated window
  double area = quasiprob_area(RmsPattern::HalvesToOneZero);
  long N = 40000;
  double lo = -60, hi = 60, h = (hi - lo) / N, sum = 0;
  for (long i = 0; i <= N; ++i) {
    double w = (i == 0 || i == N) ? 1 : (i % 2 ? 4 : 2);
    sum += w * quasiprob_density(RmsPattern::HalvesToOneZero, lo + i * h);
  }
  sum *= h / 3;
  CHECK(area == doctest::Approx(sum).epsilon(1e-6));
}

TEST_CASE("large second spin turns couplings into rotation matrix entries") {
  // finite-j2 check against the exact closed family first
  for (double m2 : {-4.0, 0.0, 3.0}) {
    double j2 = 10;
    CHECK(cg_large_j2(kHalf, kHalf, j2, m2, kHalf) ==
          doctest::Approx(std::sqrt((j2 + m2 + 1) / (2 * j2 + 1))).epsilon(1e-10));
    CHECK(cg_large_j2(kHalf, -kHalf, j2, m2, kHalf) ==
          doctest::Approx(std::sqrt((j2 - m2 + 1) / (2 * j2 + 1))).epsilon(1e-10));
    CHECK(cg_large_j2(kHalf, kHalf, j2, m2, -kHalf) ==
          doctest::Approx(std::sqrt((j2 - m2) / (2 * j2 + 1))).epsilon(1e-10));
    CHECK(cg_large_j2(kHalf, -kHalf, j2, m2, -kHalf) ==
          doctest::Approx(-std::sqrt((j2 + m2) / (2 * j2 + 1))).epsilon(1e-10));
  }

  // the extrapolated limit reproduces the reduced rotation matrix
  for (double theta : {0.4, 1.1, 2.3}) {
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    CHECK(asymptotic_rotation(kHalf, kHalf, kHalf, theta) == doctest::Approx(c).epsilon(1e-5));
    CHECK(asymptotic_rotation(kHalf, kHalf, -kHalf, theta) ==
          doctest::Approx(-s).epsilon(1e-5));
    CHECK(asymptotic_rotation(kHalf, -kHalf, kHalf, theta) == doctest::Approx(s).epsilon(1e-5));
    CHECK(asymptotic_rotation(Rational(1), Rational(0), Rational(0), theta) ==
          doctest::Approx(std::cos(theta)).epsilon(1e-5));
    CHECK(asymptotic_rotation(Rational(1), Rational(1), Rational(0), theta) ==
          doctest::Approx(-std::sin(theta) / std::sqrt(2.0)).epsilon(1e-5));
  }
  // endpoints are exact Kronecker deltas
  CHECK(asymptotic_rotation(Rational(1), Rational(1), Rational(1), 0.0) == 1.0);
  CHECK(asymptotic_rotation(Rational(1), Rational(1), Rational(0), 0.0) == 0.0);
  CHECK(asymptotic_rotation(Rational(1), Rational(1), Rational(-1), M_PI) == 1.0);
}

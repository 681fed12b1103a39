#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berezin/polynomial.hpp"
#include "berezin/rng.hpp"
#include "berezin/specfun.hpp"

#include <cmath>

using namespace berezin;
namespace sf = berezin::specfun;

namespace {

// independent monomial route: L_k^a(x) = sum_t (-1)^t C(k+a, k-t) x^t / t!
RationalPoly laguerre_from_binomials(int k, int alpha) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  for (int t = 0; t <= k; ++t) {
    Rational v(sf::binomial_general(k + alpha, k - t));
    v /= Rational(sf::factorial(static_cast<unsigned long>(t)));
    if (t % 2) v = -v;
    c[static_cast<std::size_t>(t)] = v;
  }
  return RationalPoly(c);
}

Rational gram_against_weight(const RationalPoly& p, int alpha) {
  // integral of x^alpha e^{-x} p(x)
  Rational s = 0;
  for (int t = 0; t <= p.degree(); ++t)
    s += p.coeff(t) * Rational(sf::factorial(static_cast<unsigned long>(alpha + t)));
  return s;
}

}  // namespace

TEST_CASE("laguerre spot values") {
  CHECK(sf::laguerre(0, 0, 7.3) == doctest::Approx(1.0));
  CHECK(sf::laguerre(2, 1, 0.0) == doctest::Approx(3.0));
  CHECK(sf::laguerre(2, 0, 1.0) == doctest::Approx(-0.5));
  // value at 0 is the binomial C(m+a, m)
  for (int m = 0; m <= 8; ++m)
    for (int a = 0; a <= 3; ++a)
      CHECK(sf::laguerre(m, a, 0.0) ==
            doctest::Approx(Rational(sf::binomial_general(m + a, m)).to_double()));
}

TEST_CASE("laguerre exact spot values") {
  CHECK(sf::laguerre_exact(1, 0, Rational(1)) == Rational(0));
  CHECK(sf::laguerre_exact(2, 1, Rational(0)) == Rational(3));
  // cubic at 1/2 against the independent monomial route
  Rational expected = laguerre_from_binomials(3, 0).eval(Rational(1, 2));
  CHECK(sf::laguerre_exact(3, 0, Rational(1, 2)) == expected);
  CHECK(expected == Rational(-7, 48));
}

TEST_CASE("laguerre recurrence equals monomial expansion exactly") {
  for (int a = 0; a <= 3; ++a)
    for (int k = 0; k <= 40; ++k) {
      RationalPoly mono = laguerre_from_binomials(k, a);
      for (const Rational& x : {Rational(0), Rational(1, 3), Rational(7, 2), Rational(20)})
        CHECK(sf::laguerre_exact(k, a, x) == mono.eval(x));
    }
}

TEST_CASE("laguerre float tracks the exact twin") {
  for (int k : {10, 50, 120, 200})
    for (double x : {0.5, 1.0, 10.0, 100.0}) {
      Rational xr(static_cast<long>(x * 2), 2);
      double exact = sf::laguerre_exact(k, 1, xr).to_double();
      double approx = sf::laguerre(k, 1, x);
      CHECK(std::abs(approx - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("laguerre domain errors") {
  CHECK_THROWS_AS(sf::laguerre(3, 0, -1.0), std::domain_error);
  CHECK_THROWS_AS(sf::laguerre(sf::kMaxLaguerreDegree + 1, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sf::laguerre_exact(sf::kMaxExactLaguerreDegree + 1, 0, Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sf::laguerre(3, -1, 1.0), std::invalid_argument);
}

TEST_CASE("pochhammer") {
  CHECK(sf::pochhammer(5.0, 0) == 1.0);
  CHECK(sf::pochhammer(2.0, 3) == 24.0);
  CHECK(sf::pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(sf::pochhammer(Rational(2), 3) == Rational(24));
}

TEST_CASE("binomial with out-of-range and negative indices") {
  CHECK(sf::binomial_general(4, 2) == 6);
  CHECK(sf::binomial_general(1, -1) == 0);
  CHECK(sf::binomial_general(3, 3) == 1);
  CHECK(sf::binomial_general(2, 5) == 0);
  CHECK(sf::binomial_general(-2, 3) == -4);  // (-4)(-3)(-2)/3!
}

TEST_CASE("terminating 3F2 examples") {
  CHECK(sf::hyp3f2_terminating(0, Rational(1, 2), 5, 2, 2) == Rational(1));
  CHECK(sf::hyp3f2_terminating(-1, Rational(1, 2), 3, 1, 1) == Rational(-1, 2));
}

TEST_CASE("3F2 against a from-scratch summation oracle") {
  Rng rng(314159);
  for (int trial = 0; trial < 200; ++trial) {
    int N = rng.below(8);
    Rational a1(-N);
    Rational a2(1 + rng.below(9), 1 + rng.below(4));
    Rational a3(1 + rng.below(9), 1 + rng.below(4));
    Rational b1(1 + rng.below(9), 1 + rng.below(4));
    Rational b2(1 + rng.below(9), 1 + rng.below(4));
    Rational oracle = 0;
    for (int t = 0; t <= N; ++t) {
      Rational term = sf::pochhammer(a1, t) * sf::pochhammer(a2, t) * sf::pochhammer(a3, t);
      term /= sf::pochhammer(b1, t) * sf::pochhammer(b2, t) *
              Rational(sf::factorial(static_cast<unsigned long>(t)));
      oracle += term;
    }
    CHECK(sf::hyp3f2_terminating(a1, a2, a3, b1, b2) == oracle);
  }
}

TEST_CASE("3F2 parameter validation") {
  CHECK_THROWS_AS(sf::hyp3f2_terminating(Rational(1, 2), Rational(1, 3), 2, 1, 1),
                  std::invalid_argument);
  // denominator Pochhammer hits zero before the series terminates
  CHECK_THROWS_AS(sf::hyp3f2_terminating(-3, 1, 1, -1, 2), std::invalid_argument);
}

TEST_CASE("terminating 2F1 at 1/2") {
  CHECK(sf::hyp2f1_half(0, Rational(3), Rational(7)) == Rational(1));
  CHECK(sf::hyp2f1_half(3, Rational(5), Rational(5)) == Rational(1, 8));
  CHECK(sf::hyp2f1_half(1, Rational(3), Rational(1)) == Rational(-1, 2));
  // 2F1(-k, b; b; 1/2) = 2^-k
  for (int k = 0; k <= 60; ++k)
    CHECK(sf::hyp2f1_half(k, Rational(7, 3), Rational(7, 3)) == Rational::pow2(-k));
  CHECK_THROWS_AS(sf::hyp2f1_half(3, Rational(2), Rational(-1)), std::invalid_argument);
}

TEST_CASE("2F1 at 1/2 against a from-scratch summation oracle") {
  Rng rng(271828);
  for (int trial = 0; trial < 200; ++trial) {
    int k = rng.below(30);
    Rational b(1 + rng.below(9), 1 + rng.below(4));
    Rational c(1 + rng.below(9), 1 + rng.below(4));
    Rational oracle = 0;
    for (int t = 0; t <= k; ++t) {
      Rational term = sf::pochhammer(Rational(-k), t) * sf::pochhammer(b, t);
      term /= sf::pochhammer(c, t) * Rational(sf::factorial(static_cast<unsigned long>(t)));
      term *= pow(Rational(1, 2), static_cast<unsigned long>(t));
      oracle += term;
    }
    CHECK(sf::hyp2f1_half(k, b, c) == oracle);
  }
}

TEST_CASE("2F1 series at 1/2 for non-integer first parameter") {
  // against the terminating closed form at integers
  for (int k : {0, 1, 4, 9}) {
    double series = sf::hyp2f1_half_series(static_cast<double>(-k), 4.0, 2.0);
    double exact = sf::hyp2f1_half(k, Rational(4), Rational(2)).to_double();
    CHECK(series == doctest::Approx(exact).epsilon(1e-12));
  }
  // (1-x)^{-a} degeneracy: 2F1(a, b; b; 1/2) = 2^a
  for (double a : {0.5, -1.3, 2.75})
    CHECK(sf::hyp2f1_half_series(a, 3.0, 3.0) == doctest::Approx(std::exp2(a)).epsilon(1e-13));
}

TEST_CASE("confluent polynomial case") {
  CHECK(sf::hyp1f1_poly(0, 5, 2.7) == 1.0);
  CHECK(sf::hyp1f1_poly(-1, 2, 1.0) == doctest::Approx(0.5));
  // F(-m, a+1; x) = m!/(a+1)_m L_m^a(x)
  for (int m = 0; m <= 6; ++m)
    for (int a = 0; a <= 2; ++a)
      for (double x : {0.3, 1.0, 4.2}) {
        double lhs = sf::hyp1f1_poly(-m, a + 1, x);
        double rhs = Rational(sf::factorial(static_cast<unsigned long>(m))).to_double() /
                     sf::pochhammer(static_cast<double>(a + 1), m) * sf::laguerre(m, a, x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      }
  CHECK_THROWS_AS(sf::hyp1f1_poly(1, 2, 1.0), std::invalid_argument);
}

TEST_CASE("order-shift identity is exact") {
  CHECK(sf::laguerre_shift_identity_check(1, 0, Rational(3)).pass);
  CHECK(sf::laguerre_shift_identity_check(5, 2, Rational(7, 3)).pass);
  CHECK(sf::laguerre_shift_identity_check(10, 0, Rational(0)).pass);
  CHECK_THROWS_AS(sf::laguerre_shift_identity_check(0, 0, Rational(1)), std::invalid_argument);
}

TEST_CASE("partial-sum identity is exact") {
  CHECK(sf::laguerre_partial_sum_identity_check(0, 0, Rational(5)).pass);
  CHECK(sf::laguerre_partial_sum_identity_check(1, 0, Rational(2)).pass);
  CHECK(sf::laguerre_partial_sum_identity_check(8, 1, Rational(3, 2)).pass);
}

TEST_CASE("orthogonality through exact moments") {
  for (int a = 0; a <= 3; ++a) {
    std::vector<RationalPoly> basis;
    for (int k = 0; k <= 25; ++k) basis.push_back(laguerre_from_binomials(k, a));
    for (int j = 0; j <= 25; ++j)
      for (int k = j; k <= 25; ++k) {
        Rational ip = gram_against_weight(
            basis[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(k)], a);
        if (j != k) {
          CHECK(ip == Rational(0));
        } else {
          CHECK(ip == Rational(sf::factorial(static_cast<unsigned long>(j + a)),
                               sf::factorial(static_cast<unsigned long>(j))));
        }
      }
  }
}

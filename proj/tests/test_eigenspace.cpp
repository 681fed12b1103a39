#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berezin/eigenspace.hpp"
#include "berezin/rng.hpp"

#include <cmath>
#include <numbers>

using namespace berezin;
namespace eg = berezin::eigen;

namespace {

ComplexPoint pt1(double re, double im) { return ComplexPoint{std::complex<double>(re, im)}; }

ComplexPoint ring_point(Rng& rng, int dim, double rmin, double rmax) {
  for (;;) {
    ComplexPoint p(dim);
    double ns = 0;
    for (int d = 0; d < dim; ++d) {
      double re = rng.uniform(-rmax, rmax);
      double im = rng.uniform(-rmax, rmax);
      p.c[static_cast<std::size_t>(d)] = {re, im};
      ns += re * re + im * im;
    }
    if (ns <= rmax * rmax && ns >= rmin * rmin) return p;
  }
}

}  // namespace

TEST_CASE("harmonic dimensions") {
  CHECK(eg::dim_Hpq(1, 3, 0) == 1);
  CHECK(eg::dim_Hpq(2, 1, 1) == 3);
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 6; ++q) CHECK(eg::dim_Hpq(2, p, q) == p + q + 1);
  for (int n = 1; n <= 5; ++n)
    for (int p = 0; p <= 6; ++p)
      for (int q = 0; q <= 6; ++q) {
        if (n == 1 && p != 0 && q != 0) continue;
        CHECK(eg::dim_Hpq(n, p, q) == eg::dim_Hpq_oracle(n, p, q));
      }
  CHECK_THROWS_AS(eg::dim_Hpq(1, 2, 3), std::invalid_argument);
}

TEST_CASE("printed dimension formula misses the factorials") {
  CHECK(eg::dim_Hpq_printed(2, 1, 1) == Rational(1));
  CHECK(eg::dim_Hpq_oracle(2, 1, 1) == 3);
  CHECK(eg::dim_Hpq_printed(3, 2, 1) != Rational(eg::dim_Hpq_oracle(3, 2, 1)));
}

TEST_CASE("eigenfunction construction") {
  // (n=1, m=1, p=0, q=1): conj(z)
  ComplexPoint z = pt1(0.7, -0.4);
  CHECK(std::abs(eg::eigenfunction_eval({1, 1, 0, 1}, z) - std::conj(z.c[0])) < 1e-15);
  // (n=1, m=1, p=q=0): 1 - |z|^2
  CHECK(eg::eigenfunction_eval({1, 1, 0, 0}, z).real() ==
        doctest::Approx(1.0 - z.norm_sq()).epsilon(1e-15));
  // holomorphic monomials for m = 0
  CHECK(std::abs(eg::eigenfunction_eval({1, 0, 2, 0}, z) - z.c[0] * z.c[0]) < 1e-15);
  // n = 2, q-type
  ComplexPoint z2{std::complex<double>(0.2, 0.5), std::complex<double>(-0.3, 0.1)};
  CHECK(std::abs(eg::eigenfunction_eval({2, 1, 0, 1}, z2) - std::conj(z2.c[0])) < 1e-15);
  CHECK_THROWS_AS(eg::eigenfunction_eval({1, 1, 0, 2}, z), std::invalid_argument);
  CHECK_THROWS_AS(eg::eigenfunction_eval({2, 2, 1, 1}, z2), std::invalid_argument);
}

TEST_CASE("magnetic laplacian by finite differences") {
  eg::FiniteDifferenceStencil st;
  // constants are annihilated
  auto lap1 = eg::apply_magnetic_laplacian_fd(
      [](const ComplexPoint&) { return std::complex<double>(1.0); }, pt1(0.3, 0.4), st);
  CHECK(std::abs(lap1) < 1e-10);
  // conj(z) is an eigenfunction with eigenvalue 1
  ComplexPoint z = pt1(0.5, -0.2);
  auto lap2 = eg::apply_magnetic_laplacian_fd(
      [](const ComplexPoint& w) { return std::conj(w.c[0]); }, z, st);
  CHECK(std::abs(lap2 - std::conj(z.c[0])) < 1e-10);
  // 1 - |z|^2 likewise
  auto lap3 = eg::apply_magnetic_laplacian_fd(
      [](const ComplexPoint& w) { return std::complex<double>(1.0 - w.norm_sq()); }, z, st);
  CHECK(std::abs(lap3 - std::complex<double>(1.0 - z.norm_sq())) < 1e-9);
  CHECK_THROWS_AS(eg::apply_magnetic_laplacian_fd(
                      [](const ComplexPoint&) { return std::complex<double>(0.0); }, z,
                      eg::FiniteDifferenceStencil{1e-5}),
                  std::invalid_argument);
}

TEST_CASE("eigenfunction residual panels") {
  eg::FiniteDifferenceStencil st;
  Rng rng(2718);
  {
    std::vector<ComplexPoint> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(ring_point(rng, 1, 0.1, 2.0));
    CHECK(eg::eigen_residual({1, 1, 0, 1}, pts, st).pass);
  }
  {
    std::vector<ComplexPoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(ring_point(rng, 1, 0.3, 2.0));
    CHECK(eg::eigen_residual({1, 2, 1, 0}, pts, st).pass);
  }
  {
    std::vector<ComplexPoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(ring_point(rng, 2, 0.3, 2.0));
    CHECK(eg::eigen_residual({2, 1, 0, 1}, pts, st).pass);
  }
  // full (m, p, q <= m) sweep for n in {1, 2}, m <= 3, p <= 3
  for (int n = 1; n <= 2; ++n)
    for (int m = 0; m <= 3; ++m) {
      for (int p = 0; p <= 3; ++p) {
        std::vector<ComplexPoint> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(ring_point(rng, n, 0.3, 2.0));
        CHECK(eg::eigen_residual({n, m, p, 0}, pts, st).pass);
      }
      for (int q = 1; q <= std::min(m, 3); ++q) {
        std::vector<ComplexPoint> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(ring_point(rng, n, 0.3, 2.0));
        CHECK(eg::eigen_residual({n, m, 0, q}, pts, st).pass);
      }
    }
}

TEST_CASE("kernel reproduces its eigenspace") {
  QuadratureGrid grid(1, 80);
  Rng rng(11);
  for (int p = 0; p <= 4; ++p) {
    ComplexPoint z = ring_point(rng, 1, 0.0, 1.5);
    CHECK(eg::reproducing_check({1, 0}, {1, 0, p, 0}, z, grid).pass);
  }
  CHECK(eg::reproducing_check({1, 1}, {1, 1, 0, 1}, pt1(0.4, 0.9), grid).pass);
  CHECK(eg::reproducing_check({1, 1}, {1, 1, 0, 0}, pt1(-0.7, 0.2), grid).pass);
  CHECK(eg::reproducing_check({1, 2}, {1, 2, 0, 2}, pt1(0.5, -0.5), grid).pass);
  CHECK_THROWS_AS(eg::reproducing_check({2, 1}, {2, 1, 0, 1}, pt1(0, 0), grid),
                  std::invalid_argument);
  CHECK_THROWS_AS(eg::reproducing_check({1, 1}, {1, 2, 0, 1}, pt1(0, 0), grid),
                  std::invalid_argument);
}

TEST_CASE("projection across distinct eigenspaces vanishes") {
  QuadratureGrid grid(1, 80);
  Rng rng(12);
  for (int mk = 0; mk <= 2; ++mk)
    for (int mf = 0; mf <= 2; ++mf) {
      if (mk == mf) continue;
      ComplexPoint z = ring_point(rng, 1, 0.0, 1.2);
      CHECK(eg::projector_orthogonality_check({1, mk}, {1, mf, 0, std::min(mf, 1)}, z, grid).pass);
    }
}

TEST_CASE("printed norm constant and the quadrature norm") {
  auto res = eg::gamma_norm_value(1, 1, 0, 1);
  CHECK(res.defined);
  CHECK(res.gamma == Rational(1, 2));
  CHECK(res.norm_sq == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK(res.ratio == doctest::Approx(2 * std::numbers::pi).epsilon(1e-12));

  auto pole = eg::gamma_norm_value(1, 0, 0, 0);
  CHECK_FALSE(pole.defined);
  CHECK(pole.report.status == "ok");  // flagged, not failed

  auto n2 = eg::gamma_norm_value(2, 1, 1, 0);
  CHECK(n2.defined);
  CHECK(n2.norm_sq > 0.0);
}

TEST_CASE("conjugated Schroedinger operator matches the magnetic laplacian") {
  eg::FiniteDifferenceStencil st;
  // both sides vanish on constants
  auto rep1 = eg::conjugation_check(
      1, [](const ComplexPoint&) { return std::complex<double>(1.0); }, pt1(0.3, 0.2), st);
  CHECK(rep1.pass);
  // conj(z) maps to itself on both sides
  ComplexPoint z = pt1(0.6, -0.3);
  auto rep2 = eg::conjugation_check(
      1, [](const ComplexPoint& w) { return std::conj(w.c[0]); }, z, st);
  CHECK(rep2.pass);
  CHECK(rep2.value["re"].get<double>() == doctest::Approx(z.c[0].real()).epsilon(1e-6));
  CHECK(rep2.value["im"].get<double>() == doctest::Approx(-z.c[0].imag()).epsilon(1e-6));
  // a Gaussian at several random points
  Rng rng(31);
  for (int i = 0; i < 5; ++i) {
    ComplexPoint p = ring_point(rng, 1, 0.2, 1.5);
    auto rep = eg::conjugation_check(
        1, [](const ComplexPoint& w) { return std::complex<double>(std::exp(-0.25 * w.norm_sq())); },
        p, st);
    CHECK(rep.pass);
  }
  // n = 2
  auto rep3 = eg::conjugation_check(
      2, [](const ComplexPoint& w) { return w.c[0] * std::conj(w.c[1]); },
      ComplexPoint{std::complex<double>(0.4, 0.1), std::complex<double>(-0.2, 0.3)}, st);
  CHECK(rep3.pass);
}

TEST_CASE("eigen test function wrapper") {
  auto f = eg::make_eigen_testfunction({1, 1, 0, 1});
  CHECK(f.kind == ops::TestFunction::Kind::Eigenfunction);
  ComplexPoint z = pt1(0.2, 0.9);
  CHECK(std::abs(f(z) - std::conj(z.c[0])) < 1e-15);
}

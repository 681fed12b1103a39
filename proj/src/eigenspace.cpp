#include "berezin/eigenspace.hpp"

#include "berezin/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace berezin::eigen {

namespace {

void check_index(int n, int p, int q) {
  if (n < 1 || p < 0 || q < 0) throw std::invalid_argument("harmonic index: bad parameters");
  if (p != 0 && q != 0)
    throw std::invalid_argument("harmonic index: only pq = 0 harmonics are supported");
}

double pi_pow(int p) {
  double v = 1.0;
  for (int i = 0; i < p; ++i) v *= std::numbers::pi;
  return v;
}

}  // namespace

mpz_class dim_Hpq(int n, int p, int q) {
  if (n < 1 || p < 0 || q < 0) throw std::invalid_argument("dim_Hpq: bad parameters");
  if (n == 1) {
    if (p != 0 && q != 0) throw std::invalid_argument("dim_Hpq: n = 1 requires pq = 0");
    return 1;
  }
  mpz_class num = mpz_class(p + q + n - 1) * specfun::factorial(static_cast<unsigned long>(p + n - 2)) *
                  specfun::factorial(static_cast<unsigned long>(q + n - 2));
  mpz_class den = specfun::factorial(static_cast<unsigned long>(p)) *
                  specfun::factorial(static_cast<unsigned long>(q)) *
                  specfun::factorial(static_cast<unsigned long>(n - 1)) *
                  specfun::factorial(static_cast<unsigned long>(n - 2));
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

mpz_class dim_Hpq_oracle(int n, int p, int q) {
  if (n < 1 || p < 0 || q < 0) throw std::invalid_argument("dim_Hpq_oracle: bad parameters");
  if (n == 1) return 1;
  return specfun::binomial_general(p + n - 1, p) * specfun::binomial_general(q + n - 1, q) -
         specfun::binomial_general(p + n - 2, p - 1) * specfun::binomial_general(q + n - 2, q - 1);
}

Rational dim_Hpq_printed(int n, int p, int q) {
  if (n < 2) throw std::invalid_argument("dim_Hpq_printed: printed form is for n >= 2");
  mpz_class num = mpz_class(p + q - 1) * mpz_class(p + n - 2) * mpz_class(q + n - 2);
  mpz_class den = specfun::factorial(static_cast<unsigned long>(p)) *
                  specfun::factorial(static_cast<unsigned long>(q)) *
                  specfun::factorial(static_cast<unsigned long>(n - 1)) *
                  specfun::factorial(static_cast<unsigned long>(n - 2));
  return Rational(num, den);
}

Complex eigenfunction_eval(const EigenfunctionSpec& spec, const ComplexPoint& z) {
  check_index(spec.n, spec.p, spec.q);
  if (z.n != spec.n) throw std::invalid_argument("eigenfunction_eval: dimension mismatch");
  if (spec.q > spec.m) throw std::invalid_argument("eigenfunction_eval: q must be <= m");
  double r2 = z.norm_sq();
  double confluent = specfun::hyp1f1_poly(-(spec.m - spec.q), spec.n + spec.p + spec.q, r2);
  Complex mono = 1.0;
  Complex z1 = z.c[0];
  for (int t = 0; t < spec.p; ++t) mono *= z1;
  for (int t = 0; t < spec.q; ++t) mono *= std::conj(z1);
  return confluent * mono;
}

ops::TestFunction make_eigen_testfunction(const EigenfunctionSpec& spec) {
  ops::TestFunction f;
  f.kind = ops::TestFunction::Kind::Eigenfunction;
  f.name = "eigen(m=" + std::to_string(spec.m) + ",p=" + std::to_string(spec.p) +
           ",q=" + std::to_string(spec.q) + ")";
  f.eval = [spec](const ComplexPoint& z) { return eigenfunction_eval(spec, z); };
  return f;
}

namespace {

void check_stencil(const FiniteDifferenceStencil& s) {
  if (!(s.h >= 1e-4 && s.h <= 1e-2))
    throw std::invalid_argument("stencil: h must lie in [1e-4, 1e-2]");
}

ComplexPoint shifted(const ComplexPoint& z, int axis, double delta) {
  // axis 2d   -> real part of coordinate d
  // axis 2d+1 -> imaginary part of coordinate d
  ComplexPoint out = z;
  int d = axis / 2;
  Complex c = out.c[static_cast<std::size_t>(d)];
  if (axis % 2 == 0)
    out.c[static_cast<std::size_t>(d)] = {c.real() + delta, c.imag()};
  else
    out.c[static_cast<std::size_t>(d)] = {c.real(), c.imag() + delta};
  return out;
}

}  // namespace

Complex apply_magnetic_laplacian_fd(const ScalarField& f, const ComplexPoint& z,
                                    const FiniteDifferenceStencil& stencil) {
  check_stencil(stencil);
  const double h = stencil.h;
  const Complex f0 = f(z);
  Complex acc = 0.0;
  for (int d = 0; d < z.n; ++d) {
    Complex fxp = f(shifted(z, 2 * d, h));
    Complex fxm = f(shifted(z, 2 * d, -h));
    Complex fyp = f(shifted(z, 2 * d + 1, h));
    Complex fym = f(shifted(z, 2 * d + 1, -h));
    Complex dxx = (fxp - 2.0 * f0 + fxm) / (h * h);
    Complex dyy = (fyp - 2.0 * f0 + fym) / (h * h);
    Complex dx = (fxp - fxm) / (2.0 * h);
    Complex dy = (fyp - fym) / (2.0 * h);
    // -d^2/dz dzbar = -(dxx + dyy)/4 ; zbar d/dzbar = zbar (dx + i dy)/2
    acc += -0.25 * (dxx + dyy) +
           std::conj(z.c[static_cast<std::size_t>(d)]) * 0.5 * (dx + Complex(0.0, 1.0) * dy);
  }
  return acc;
}

Report eigen_residual(const EigenfunctionSpec& spec, const std::vector<ComplexPoint>& points,
                      const FiniteDifferenceStencil& stencil) {
  ScalarField f = [spec](const ComplexPoint& z) { return eigenfunction_eval(spec, z); };
  double max_res = 0.0;
  double max_res_half = 0.0;
  FiniteDifferenceStencil half{stencil.h / 2.0};
  for (const auto& z : points) {
    Complex val = f(z);
    double scale = std::max(1.0, std::abs(val));
    Complex lap = apply_magnetic_laplacian_fd(f, z, stencil);
    max_res = std::max(max_res, std::abs(lap - static_cast<double>(spec.m) * val) / scale);
    Complex lap2 = apply_magnetic_laplacian_fd(f, z, half);
    max_res_half = std::max(max_res_half, std::abs(lap2 - static_cast<double>(spec.m) * val) / scale);
  }
  // Richardson check: an O(h^2) scheme should shrink the residual ~4x at h/2
  double order = max_res_half > 0 ? std::log2(max_res / max_res_half) : 0.0;
  Report r;
  r.check = "eigenfunction-residual";
  r.n = spec.n;
  r.m = spec.m;
  r.route = "finite-difference";
  r.inputs = {{"p", spec.p}, {"q", spec.q}, {"points", points.size()}, {"h", stencil.h}};
  r.value = {{"max_residual", max_res},
             {"max_residual_half_h", max_res_half},
             {"observed_order", order}};
  r.reference = 0.0;
  r.abs_dev = max_res;
  r.rel_dev = max_res;
  r.finish(max_res, 1e-4);
  return r;
}

namespace {

Complex kernel_projection(const KernelSpec& kspec, const EigenfunctionSpec& fspec,
                          const ComplexPoint& z, const QuadratureGrid& grid) {
  Complex sum = 0.0;
  ComplexPoint w(kspec.n);
  std::complex<double> coords[ComplexPoint::kMaxDim];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double wt = grid.node(i, coords);
    for (int d = 0; d < kspec.n; ++d) w.c[static_cast<std::size_t>(d)] = coords[d];
    sum += wt * ops::kernel_Km(kspec, z, w) * eigenfunction_eval(fspec, w);
  }
  return sum;
}

}  // namespace

Report reproducing_check(const KernelSpec& kspec, const EigenfunctionSpec& fspec,
                         const ComplexPoint& z, const QuadratureGrid& grid) {
  if (kspec.n != 1) throw std::invalid_argument("reproducing_check: only n = 1 is supported");
  if (kspec.m != fspec.m)
    throw std::invalid_argument("reproducing_check: eigenfunction must belong to the kernel's eigenspace");
  Complex projected = kernel_projection(kspec, fspec, z, grid);
  Complex expected = eigenfunction_eval(fspec, z);
  double dev = std::abs(projected - expected) / std::max(1.0, std::abs(expected));
  Report r;
  r.check = "kernel-reproduces-eigenfunction";
  r.n = kspec.n;
  r.m = kspec.m;
  r.route = "quadrature";
  r.inputs = {{"p", fspec.p}, {"q", fspec.q},
              {"z", {z.c[0].real(), z.c[0].imag()}},
              {"nodes_per_axis", grid.nodes_per_axis()}};
  r.value = {{"re", projected.real()}, {"im", projected.imag()}};
  r.reference = {{"re", expected.real()}, {"im", expected.imag()}};
  r.abs_dev = std::abs(projected - expected);
  r.rel_dev = dev;
  r.finish(dev, 1e-6);
  return r;
}

Report projector_orthogonality_check(const KernelSpec& kspec, const EigenfunctionSpec& fspec,
                                     const ComplexPoint& z, const QuadratureGrid& grid) {
  if (kspec.n != 1) throw std::invalid_argument("projector_orthogonality_check: only n = 1");
  if (kspec.m == fspec.m)
    throw std::invalid_argument("projector_orthogonality_check: needs m' != m");
  Complex projected = kernel_projection(kspec, fspec, z, grid);
  Report r;
  r.check = "cross-eigenspace-projection-vanishes";
  r.n = kspec.n;
  r.m = kspec.m;
  r.route = "quadrature";
  r.inputs = {{"m_eigenfunction", fspec.m}, {"p", fspec.p}, {"q", fspec.q},
              {"z", {z.c[0].real(), z.c[0].imag()}}};
  r.value = std::abs(projected);
  r.reference = 0.0;
  r.abs_dev = std::abs(projected);
  r.rel_dev = r.abs_dev;
  r.finish(r.abs_dev, 1e-6);
  return r;
}

GammaNormResult gamma_norm_value(int n, int m, int p, int q) {
  check_index(n, p, q);
  if (q > m) throw std::invalid_argument("gamma_norm_value: q must be <= m");
  GammaNormResult out;
  Report r;
  r.check = "gamma-norm-constant";
  r.n = n;
  r.m = m;
  r.route = "radial-quadrature";
  r.inputs = {{"p", p}, {"q", q}};
  if (m + p + q == 0) {
    out.defined = false;
    r.value = "undefined";
    r.reference = "Gamma(m+p+q) pole at m = p = q = 0";
    r.notes = "printed constant hits a Gamma pole; flagged, not evaluated";
    r.finish(0.0, 0.0);
    out.report = std::move(r);
    return out;
  }
  // gamma = (m-q)! (p+q+n-1)!/2 * Gamma(n+p+q)/Gamma(m+p+q)
  out.gamma = Rational(specfun::factorial(static_cast<unsigned long>(m - q)) *
                           specfun::factorial(static_cast<unsigned long>(p + q + n - 1)),
                       mpz_class(2)) *
              Rational(specfun::factorial(static_cast<unsigned long>(n + p + q - 1)),
                       specfun::factorial(static_cast<unsigned long>(m + p + q - 1)));

  // ||f||^2 = [angular moment of |omega_1|^{2(p+q)}] * 1/2 int F^2 s^{p+q+n-1} e^{-s} ds
  int pq = p + q;
  double angular = 2.0 * pi_pow(n) *
                   Rational(specfun::factorial(static_cast<unsigned long>(pq)),
                            specfun::factorial(static_cast<unsigned long>(pq + n - 1)))
                       .to_double();
  Rule1D rule = gauss_laguerre(64, static_cast<double>(pq + n - 1));
  double radial = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    double fs = specfun::hyp1f1_poly(-(m - q), n + pq, rule.nodes[i]);
    radial += rule.weights[i] * fs * fs;
  }
  out.norm_sq = angular * 0.5 * radial;
  out.ratio = out.norm_sq / out.gamma.to_double();
  r.value = {{"norm_sq", out.norm_sq}, {"gamma", out.gamma.to_double()}, {"ratio", out.ratio}};
  r.reference = out.gamma.str();
  r.notes = "ratio ||f||^2 / gamma reported only; the normalization convention behind gamma "
            "is not pinned down";
  r.finish(0.0, 0.0);
  out.report = std::move(r);
  return out;
}

Report conjugation_check(int n, const ScalarField& f, const ComplexPoint& z,
                         const FiniteDifferenceStencil& stencil) {
  check_stencil(stencil);
  if (z.n != n) throw std::invalid_argument("conjugation_check: dimension mismatch");
  const double h = stencil.h;

  // u = Q^{-1} f = e^{-|w|^2/2} f
  auto u = [&f](const ComplexPoint& w) { return std::exp(-0.5 * w.norm_sq()) * f(w); };

  // H u = -1/4 sum_j [ u_xx + u_yy + 2i (y_j u_x - x_j u_y) - (x_j^2 + y_j^2) u ]
  const Complex u0 = u(z);
  Complex hu = 0.0;
  for (int d = 0; d < n; ++d) {
    Complex uxp = u(shifted(z, 2 * d, h));
    Complex uxm = u(shifted(z, 2 * d, -h));
    Complex uyp = u(shifted(z, 2 * d + 1, h));
    Complex uym = u(shifted(z, 2 * d + 1, -h));
    Complex uxx = (uxp - 2.0 * u0 + uxm) / (h * h);
    Complex uyy = (uyp - 2.0 * u0 + uym) / (h * h);
    Complex ux = (uxp - uxm) / (2.0 * h);
    Complex uy = (uyp - uym) / (2.0 * h);
    double xj = z.c[static_cast<std::size_t>(d)].real();
    double yj = z.c[static_cast<std::size_t>(d)].imag();
    hu += -0.25 * (uxx + uyy + 2.0 * Complex(0.0, 1.0) * (yj * ux - xj * uy) -
                   (xj * xj + yj * yj) * u0);
  }
  Complex conjugated = std::exp(0.5 * z.norm_sq()) * (hu - 0.5 * n * u0);
  Complex direct = apply_magnetic_laplacian_fd(f, z, stencil);

  double dev = std::abs(conjugated - direct) / std::max(1.0, std::abs(direct));
  Report r;
  r.check = "schroedinger-conjugation";
  r.n = n;
  r.route = "finite-difference";
  json zj = json::array();
  for (int d = 0; d < n; ++d)
    zj.push_back({z.c[static_cast<std::size_t>(d)].real(), z.c[static_cast<std::size_t>(d)].imag()});
  r.inputs = {{"z", zj}, {"h", stencil.h}};
  r.value = {{"re", conjugated.real()}, {"im", conjugated.imag()}};
  r.reference = {{"re", direct.real()}, {"im", direct.imag()}};
  r.abs_dev = std::abs(conjugated - direct);
  r.rel_dev = dev;
  r.finish(dev, 1e-4);
  return r;
}

}  // namespace berezin::eigen

#pragma once

#include "berezin/geometry.hpp"
#include "berezin/operators.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/rational.hpp"
#include "berezin/report.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace berezin::eigen {

using Complex = std::complex<double>;

struct HarmonicIndex {
  int p = 0;
  int q = 0;
};

/// Dimension of the bidegree-(p,q) spherical harmonics on S^{2n-1}; the
/// printed closed form misses the factorials, so this is the corrected one:
/// (p+q+n-1) (p+n-2)! (q+n-2)! / (p! q! (n-1)! (n-2)!)  for n >= 2, 1 for n=1.
mpz_class dim_Hpq(int n, int p, int q);

/// Independent combinatorial count: bidegree monomials minus the image of
/// multiplication by |z|^2.
mpz_class dim_Hpq_oracle(int n, int p, int q);

/// The dimension formula exactly as printed (no factorials); kept for
/// discrepancy reporting. Returns a rational since the printed expression
/// need not be an integer.
Rational dim_Hpq_printed(int n, int p, int q);

// Eigenfunction of the magnetic Laplacian with eigenvalue m, built from the
// confluent factor and a pq = 0 monomial harmonic:
//   q = 0:  1F1(-m, n+p; |z|^2) z_1^p
//   p = 0:  1F1(-(m-q), n+q; |z|^2) conj(z_1)^q
struct EigenfunctionSpec {
  int n = 1;
  int m = 0;
  int p = 0;
  int q = 0;
};

Complex eigenfunction_eval(const EigenfunctionSpec& spec, const ComplexPoint& z);

/// Wraps an eigenfunction as a TestFunction for the operator modules.
ops::TestFunction make_eigen_testfunction(const EigenfunctionSpec& spec);

// Central second-order stencil in each of the 2n real coordinates.
struct FiniteDifferenceStencil {
  double h = 1e-3;  // must stay in [1e-4, 1e-2]
};

using ScalarField = std::function<Complex(const ComplexPoint&)>;

/// Magnetic Laplacian by finite differences:
/// sum_j [ -1/4 (d^2/dx_j^2 + d^2/dy_j^2) + conj(z_j)/2 (d/dx_j + i d/dy_j) ].
Complex apply_magnetic_laplacian_fd(const ScalarField& f, const ComplexPoint& z,
                                    const FiniteDifferenceStencil& stencil);

/// max_z |Delta f - m f| / max(1, |f|) over the points.
Report eigen_residual(const EigenfunctionSpec& spec, const std::vector<ComplexPoint>& points,
                      const FiniteDifferenceStencil& stencil);

/// Kernel reproduction of an eigenfunction of the same m (n = 1 only).
Report reproducing_check(const KernelSpec& kspec, const EigenfunctionSpec& fspec,
                         const ComplexPoint& z, const QuadratureGrid& grid);

/// Projection of an eigenfunction of A^2_{m'} through K_m, m' != m, is zero.
Report projector_orthogonality_check(const KernelSpec& kspec, const EigenfunctionSpec& fspec,
                                     const ComplexPoint& z, const QuadratureGrid& grid);

/// The printed norm constant gamma(n,m;p,q) next to the quadrature value of
/// ||f_{p,q}||^2; their ratio is reported, never asserted.
struct GammaNormResult {
  bool defined = true;  // false at the Gamma pole m + p + q = 0
  Rational gamma;
  double norm_sq = 0.0;
  double ratio = 0.0;
  Report report;
};
GammaNormResult gamma_norm_value(int n, int m, int p, int q);

/// Conjugated Schroedinger operator Q (H - n/2) Q^{-1} against the magnetic
/// Laplacian, both by finite differences.
Report conjugation_check(int n, const ScalarField& f, const ComplexPoint& z,
                         const FiniteDifferenceStencil& stencil);

}  // namespace berezin::eigen

#pragma once

#include "berezin/coeffs.hpp"
#include "berezin/geometry.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/report.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace berezin::ops {

using Complex = std::complex<double>;

/// Reproducing kernel K_m(z,w) = pi^{-n} e^{<z,w>} L_m^{n-1}(|z-w|^2).
Complex kernel_Km(const KernelSpec& spec, const ComplexPoint& z, const ComplexPoint& w);

/// Kernel of the phase-deformed transform, computed two algebraically equal
/// ways: e^{<z,w>} |K_m|^2 / (K_m(z,z) K_m(w,w)) and
/// (m!/(n)_m)^2 e^{<z,w>-|z-w|^2} (L_m^{n-1}(|z-w|^2))^2.
struct DeformedKernelValue {
  Complex via_ratio;
  Complex via_closed_form;
};
DeformedKernelValue deformed_kernel(const KernelSpec& spec, const ComplexPoint& z,
                                    const ComplexPoint& w);

// Square-integrable test inputs for the transforms. The callable carries the
// actual evaluation so eigenfunction-backed instances can be built elsewhere
// without a dependency cycle.
struct TestFunction {
  enum class Kind { Constant, PolyGauss, Eigenfunction, RandomMixture };
  Kind kind = Kind::Constant;
  std::string name = "constant";
  std::function<Complex(const ComplexPoint&)> eval;
  Complex operator()(const ComplexPoint& z) const { return eval(z); }
};

TestFunction constant_fn(Complex value);
/// P(w, conj(w)) e^{-gamma |w|^2} with a single monomial P per coordinate.
TestFunction poly_gauss_fn(int dim, const std::vector<int>& holo_powers,
                           const std::vector<int>& anti_powers, double gamma);
/// Seeded mixture of monomial x Gaussian terms (4 terms, powers <= 2).
TestFunction random_mixture(int dim, std::uint64_t seed);

/// Quadrature value of the phase-deformed transform at z.
Complex apply_deformed(const KernelSpec& spec, const TestFunction& phi, const ComplexPoint& z,
                       const QuadratureGrid& grid);

/// Same value plus a node-doubling self-consistency estimate.
struct ApplyChecked {
  Complex value;
  double grid_drift;   // |value - value_on_doubled_grid|
  bool converged;      // grid_drift <= tol
};
ApplyChecked apply_deformed_checked(const KernelSpec& spec, const TestFunction& phi,
                                    const ComplexPoint& z, const QuadratureGrid& grid, double tol);

/// Classical transform via the convolution kernel, grid re-centered at z.
Complex apply_classic(const KernelSpec& spec, const TestFunction& phi, const ComplexPoint& z,
                      const QuadratureGrid& grid);

// Truncated spectral-series data: g(k) for k = 0..K, built from an exact
// route so series checks are reproducible.
struct SpectralSeries {
  int n = 1;
  int m = 0;
  std::string route;
  std::vector<double> gk;
  double tail_estimate = 0.0;  // crude bound on the dropped tail at x <= xmax
};
SpectralSeries make_spectral_series(const coeffs::SpectralFunction& g, int K, double xmax = 9.0);

/// Smallest K whose estimated tail is below tol (decay-invariant based).
int choose_truncation(const coeffs::SpectralFunction& g, double xmax, double tol, int kcap = 400);

/// Psi_g(z,w) = pi^{-n} e^{<z,w>} sum_{k<=K} g(k) L_k^{n-1}(|z-w|^2).
/// Rejects series whose g(k) fails to decay.
Complex spectral_kernel_psi(const SpectralSeries& series, const ComplexPoint& z,
                            const ComplexPoint& w);

/// g(Delta) on an eigenfunction: the defining value g(m_eig) f(z) next to the
/// quadrature of Psi_g against f.
struct SpectralApplyResult {
  Complex expected;
  Complex quadrature;
  Report report;
};
SpectralApplyResult spectral_apply_on_eigenfunction(const SpectralSeries& series, int m_eig,
                                                    const TestFunction& f, const ComplexPoint& z,
                                                    const QuadratureGrid& grid);

/// Spectral-family kernel: 0 for lambda < 0, else
/// pi^{-n} e^{<z,w>} L_{floor(lambda)}^{n}(|z-w|^2).
Complex spectral_family_kernel(double lambda, const ComplexPoint& z, const ComplexPoint& w,
                               const KernelSpec& spec);

/// Monte Carlo check of ||B_m phi|| / ||phi|| against both printed bound
/// variants (with and without the pi^n factor).
struct NormBoundConfig {
  int samples = 100;
  std::uint64_t seed = 7;
  int inner_axis = 0;   // 0 -> default for n
  int outer_axis = 0;
};
std::vector<Report> norm_bound_montecarlo(const KernelSpec& spec, const NormBoundConfig& cfg);

/// Pointwise diamagnetic-type inequality at z:
/// |e^{-|z|^2/2} B~_m[phi](z)| <= pi^n m!/(n)_m B_m[e^{-|.|^2/2}|phi|](z).
Report diamagnetic_check(const KernelSpec& spec, const TestFunction& phi, const ComplexPoint& z,
                         const QuadratureGrid& grid);

/// Kernel-level identity check: deformed kernel vs truncated Psi_g on a
/// deterministic panel of points with |z|,|w| <= radius.
Report function_of_laplacian_identity_check(const KernelSpec& spec,
                                            coeffs::SpectralFunction::Route route, int K,
                                            int panel_points, double radius, double tol,
                                            std::uint64_t seed = 2024);

/// Tensor-grid normalization: sum of weights vs pi^n.
Report grid_sanity_report(const QuadratureGrid& grid);

/// Random z-panel constancy of the transform of 1 (it equals g(0)).
Report transform_of_one_constancy_report(const KernelSpec& spec, const QuadratureGrid& grid,
                                         int points, std::uint64_t seed);

}  // namespace berezin::ops

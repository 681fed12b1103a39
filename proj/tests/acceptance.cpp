// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Returns the number of failed criteria.

#include "berezin/coeffs.hpp"
#include "berezin/eigenspace.hpp"
#include "berezin/operators.hpp"
#include "berezin/rng.hpp"
#include "berezin/specfun.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace berezin;
namespace co = berezin::coeffs;
namespace op = berezin::ops;
namespace eg = berezin::eigen;
namespace sf = berezin::specfun;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++g_failures;
  std::printf("%s criterion-%d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

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

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(BEREZIN_CLI) + " " + args + " >/dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

const double kPi = std::numbers::pi;

}  // namespace

int main() {
  criterion(1, "exact gram-oracle / gauss2F1 route equality (n<=3, m<=4, k<=30)",
            [](std::string&) {
              for (int n = 1; n <= 3; ++n)
                for (int m = 0; m <= 4; ++m) {
                  auto a = co::h_series(n, m, 30, co::HRoute::GramOracle);
                  auto b = co::h_series(n, m, 30, co::HRoute::Gauss2F1);
                  for (int k = 0; k <= 30; ++k)
                    if (a.exact[static_cast<std::size_t>(k)] !=
                        b.exact[static_cast<std::size_t>(k)])
                      return false;
                }
              return true;
            });

  criterion(2, "calibrated series path matches pi^n (m!/(n)_m)^2 h(k) to 1e-12",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 1; n <= 3; ++n)
                for (int m = 0; m <= 4; ++m) {
                  auto cal = co::calibrate_route_a(n, m, 30);
                  if (!cal.exact_match) ok = false;
                  auto ga = co::SpectralFunction::route_a(n, m);
                  auto oracle = co::h_series(n, m, 30, co::HRoute::GramOracle);
                  for (int k = 0; k <= 30; ++k) {
                    double lhs = ga(static_cast<double>(k));
                    double rhs =
                        co::g_from_h(n, m, oracle.exact[static_cast<std::size_t>(k)]).value();
                    if (std::abs(lhs - rhs) > 1e-12 * std::max(std::abs(rhs), 1e-300)) ok = false;
                  }
                  if (n == 1 && m == 1)
                    detail = "calibrated " + cal.constant.str() + " | printed " +
                             cal.printed_headline + " vs " + cal.printed_alternate;
                }
              return ok;
            });

  criterion(3, "exact Parseval residual < 1e-16 at K=80, monotone (n<=3, m<=4)",
            [](std::string& detail) {
              bool ok = true;
              double worst = 0.0;
              for (int n = 1; n <= 3; ++n)
                for (int m = 0; m <= 4; ++m) {
                  auto rep = co::expansion_report(n, m, 80);
                  worst = std::max(worst, rep.abs_dev);
                  if (!rep.pass) ok = false;
                }
              detail = "max residual " + format_double(worst);
              return ok;
            });

  criterion(4, "deformed kernel equals truncated spectral series (route B, K=150)",
            [](std::string& detail) {
              struct Case {
                int n, m;
                double tol;
              };
              bool ok = true;
              double worst = 0.0;
              for (const Case c : {Case{1, 0, 1e-8}, Case{1, 1, 1e-6}, Case{1, 2, 1e-6},
                                   Case{2, 1, 1e-6}}) {
                auto rep = op::function_of_laplacian_identity_check(
                    {c.n, c.m}, co::SpectralFunction::Route::B, 150, 25, 1.5, c.tol);
                worst = std::max(worst, rep.rel_dev);
                if (!rep.pass) ok = false;
              }
              detail = "max rel dev " + format_double(worst);
              return ok;
            });

  criterion(5, "transform values: (pi/2)^n, pi/4, and unital classical transform",
            [](std::string&) {
              auto one = op::constant_fn(1.0);
              bool ok = true;
              {
                QuadratureGrid grid(1, 80);
                ComplexPoint z{std::complex<double>(0.9, -0.4)};
                ok = ok && std::abs(op::apply_deformed({1, 0}, one, z, grid) -
                                    std::complex<double>(kPi / 2)) < 1e-8;
                ok = ok && std::abs(op::apply_deformed({1, 1}, one, z, grid) -
                                    std::complex<double>(kPi / 4)) < 1e-8;
                for (int m = 0; m <= 2; ++m) {
                  ok = ok && std::abs(op::apply_classic({1, m}, one, z, grid) -
                                      std::complex<double>(1.0)) < 1e-8;
                  ok = ok && std::abs(co::f_m_euclid(1, m, 0.0) - 1.0) < 1e-12;
                }
              }
              {
                QuadratureGrid grid(2, 40);
                ComplexPoint z{std::complex<double>(0.4, 0.2), std::complex<double>(-0.1, 0.6)};
                ok = ok && std::abs(op::apply_deformed({2, 0}, one, z, grid) -
                                    std::complex<double>(kPi * kPi / 4)) < 1e-8;
                for (int m = 0; m <= 2; ++m) {
                  ok = ok && std::abs(op::apply_classic({2, m}, one, z, grid) -
                                      std::complex<double>(1.0)) < 1e-8;
                  ok = ok && std::abs(co::f_m_euclid(2, m, 0.0) - 1.0) < 1e-12;
                }
              }
              return ok;
            });

  criterion(6, "eigen machinery: residuals, reproduction, orthogonality, conjugation",
            [](std::string& detail) {
              bool ok = true;
              eg::FiniteDifferenceStencil st;  // h = 1e-3
              Rng rng(2026);
              double worst_res = 0.0;
              for (int n = 1; n <= 2; ++n)
                for (int m = 0; m <= 3; ++m) {
                  for (int p = 0; p <= 3; ++p) {
                    std::vector<ComplexPoint> pts;
                    for (int i = 0; i < 6; ++i) pts.push_back(ring_point(rng, n, 0.3, 2.0));
                    auto rep = eg::eigen_residual({n, m, p, 0}, pts, st);
                    worst_res = std::max(worst_res, rep.abs_dev);
                    ok = ok && rep.pass;
                  }
                  for (int q = 1; q <= std::min(m, 3); ++q) {
                    std::vector<ComplexPoint> pts;
                    for (int i = 0; i < 6; ++i) pts.push_back(ring_point(rng, n, 0.3, 2.0));
                    auto rep = eg::eigen_residual({n, m, 0, q}, pts, st);
                    worst_res = std::max(worst_res, rep.abs_dev);
                    ok = ok && rep.pass;
                  }
                }
              QuadratureGrid grid(1, 80);
              for (int m = 0; m <= 2; ++m) {
                std::vector<eg::EigenfunctionSpec> specs;
                for (int p = 0; p <= (m == 0 ? 4 : 2); ++p) specs.push_back({1, m, p, 0});
                for (int q = 1; q <= m; ++q) specs.push_back({1, m, 0, q});
                for (const auto& fs : specs)
                  ok = ok &&
                       eg::reproducing_check({1, m}, fs, ring_point(rng, 1, 0.0, 1.5), grid).pass;
              }
              for (int mk = 0; mk <= 2; ++mk)
                for (int mf = 0; mf <= 2; ++mf) {
                  if (mk == mf) continue;
                  ok = ok && eg::projector_orthogonality_check(
                                 {1, mk}, {1, mf, 0, std::min(mf, 1)},
                                 ring_point(rng, 1, 0.0, 1.2), grid)
                                 .pass;
                }
              std::vector<eg::ScalarField> fields = {
                  [](const ComplexPoint&) { return std::complex<double>(1.0); },
                  [](const ComplexPoint& w) { return std::conj(w.c[0]); },
                  [](const ComplexPoint& w) {
                    return std::complex<double>(std::exp(-0.25 * w.norm_sq()));
                  },
                  [](const ComplexPoint& w) { return w.c[0] * std::exp(-0.5 * w.norm_sq()); },
                  [](const ComplexPoint& w) { return eg::eigenfunction_eval({1, 2, 0, 1}, w); }};
              for (const auto& f : fields)
                ok = ok && eg::conjugation_check(1, f, ring_point(rng, 1, 0.2, 1.5), st).pass;
              detail = "max FD residual " + format_double(worst_res);
              return ok;
            });

  criterion(7, "diamagnetic inequality (50 seeds x 3 specs) and pi^n norm bound (100 seeds)",
            [](std::string& detail) {
              bool ok = true;
              Rng rng(777);
              for (const KernelSpec spec : {KernelSpec{1, 0}, KernelSpec{1, 1}, KernelSpec{2, 1}}) {
                QuadratureGrid grid(spec.n, spec.n == 1 ? 60 : 24);
                for (int s = 0; s < 50; ++s) {
                  auto phi = op::random_mixture(spec.n, rng.next_u64());
                  auto rep =
                      op::diamagnetic_check(spec, phi, ring_point(rng, spec.n, 0.0, 1.5), grid);
                  ok = ok && rep.pass;
                }
              }
              double worst_margin = 1e300;
              for (const KernelSpec spec : {KernelSpec{1, 0}, KernelSpec{1, 1}, KernelSpec{2, 1}}) {
                op::NormBoundConfig cfg;
                cfg.samples = 100;
                cfg.seed = 20250807;
                auto reports = op::norm_bound_montecarlo(spec, cfg);
                // reports[0] is the pi^n-inclusive variant; it must hold
                ok = ok && reports[0].pass;
                double bound = reports[0].reference["bound"].get<double>();
                double seen =
                    std::max(reports[0].value["max_ratio_random"].get<double>(),
                             reports[0].value["ratio_constant_phi"].get<double>());
                worst_margin = std::min(worst_margin, bound - seen);
              }
              detail = "min bound margin " + format_double(worst_margin);
              return ok;
            });

  criterion(8, "fitted decay bound |g(k)| <= C k^(2m+n) 2^-k up to k=80 (n<=2, m<=3)",
            [](std::string&) {
              for (int n = 1; n <= 2; ++n)
                for (int m = 0; m <= 3; ++m)
                  if (!co::decay_report(n, m, 80).pass) return false;
              return true;
            });

  criterion(9, "verify --suite all report carries the full discrepancy ledger",
            [](std::string& detail) {
              if (run_cli("verify --suite all --seed 7 --out acceptance_all_1.json") != 0) {
                detail = "verify run failed";
                return false;
              }
              auto doc = nlohmann::json::parse(slurp("acceptance_all_1.json"));
              const std::vector<std::string> required = {
                  "dimension-formula-printed-vs-oracle",
                  "laguerre-product-linearization-printed-vs-oracle",
                  "spectral-function-series-prefactor",
                  "gauss-argument-sign",
                  "operator-norm-bound-printed-variant"};
              for (const auto& name : required) {
                bool found = false;
                for (const auto& r : doc["reports"])
                  if (r["check"] == name && r["status"] == "paper-discrepancy" &&
                      !r["value"].is_null() && !r["reference"].is_null())
                    found = true;
                if (!found) {
                  detail = "missing discrepancy entry: " + name;
                  return false;
                }
              }
              return true;
            });

  criterion(10, "two runs of verify --suite all --seed 7 are byte-identical",
            [](std::string&) {
              if (run_cli("verify --suite all --seed 7 --out acceptance_all_2.json") != 0)
                return false;
              return slurp("acceptance_all_1.json") == slurp("acceptance_all_2.json");
            });

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures;
}

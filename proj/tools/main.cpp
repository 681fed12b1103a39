// Command-line front end: coefficient tables, transform application, and the
// verification suites, with deterministic JSON/CSV reports.

#include "berezin/coeffs.hpp"
#include "berezin/eigenspace.hpp"
#include "berezin/operators.hpp"
#include "berezin/rng.hpp"
#include "berezin/specfun.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace berezin;

struct Config {
  int n = 1;
  int m = 1;
  int kmax = 30;
  int K = 150;
  std::string route = "oracle";
  int grid_nodes = 0;  // 0 -> default per dimension
  double tol = 0.0;    // 0 -> per-check defaults
  std::uint64_t seed = 7;
  int samples = 0;     // 0 -> per-suite defaults
  std::string phi = "constant";
  std::string z;
  std::string format = "json";
  std::string out;
  std::string suite = "all";

  json to_json() const {
    return json{{"n", n},           {"m", m},     {"kmax", kmax},
                {"K", K},           {"route", route}, {"grid_nodes", grid_nodes},
                {"tol", tol},       {"seed", seed},   {"samples", samples},
                {"phi", phi},       {"z", z},         {"format", format}};
  }
};

int grid_axis(const Config& cfg) {
  return cfg.grid_nodes > 0 ? cfg.grid_nodes : QuadratureGrid::default_nodes_per_axis(cfg.n);
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
  f << text;
}

ComplexPoint parse_point(const std::string& s, int n) {
  ComplexPoint z(n);
  if (s.empty()) return z;
  std::vector<double> vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = std::stod(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad coordinate: " + item);
    vals.push_back(v);
  }
  if (static_cast<int>(vals.size()) != 2 * n)
    throw std::invalid_argument("--z needs exactly 2n comma-separated reals");
  for (int d = 0; d < n; ++d)
    z.c[static_cast<std::size_t>(d)] = {vals[static_cast<std::size_t>(2 * d)],
                                        vals[static_cast<std::size_t>(2 * d + 1)]};
  return z;
}

ops::TestFunction make_phi(const Config& cfg) {
  if (cfg.phi == "constant") return ops::constant_fn(1.0);
  if (cfg.phi == "zero") return ops::constant_fn(0.0);
  if (cfg.phi == "polygauss") {
    std::vector<int> holo(static_cast<std::size_t>(cfg.n), 1);
    std::vector<int> anti(static_cast<std::size_t>(cfg.n), 0);
    return ops::poly_gauss_fn(cfg.n, holo, anti, 0.5);
  }
  if (cfg.phi == "eigen")
    return eigen::make_eigen_testfunction({cfg.n, cfg.m, 0, std::min(cfg.m, 1)});
  if (cfg.phi == "random") return ops::random_mixture(cfg.n, cfg.seed);
  throw std::invalid_argument("unknown --phi kind: " + cfg.phi);
}

ComplexPoint seeded_point(Rng& rng, int dim, double rmin, double rmax) {
  for (;;) {
    ComplexPoint p(dim);
    double ns = 0.0;
    for (int d = 0; d < dim; ++d) {
      double re = rng.uniform(-rmax, rmax);
      double im = rng.uniform(-rmax, rmax);
      p.c[static_cast<std::size_t>(d)] = {re, im};
      ns += re * re + im * im;
    }
    if (ns <= rmax * rmax && ns >= rmin * rmin) return p;
  }
}

// ---------------------------------------------------------------- coeffs ---

int cmd_coeffs(const Config& cfg) {
  struct Row {
    int k;
    std::string num;
    std::string den;
    std::string route;
    double value;
  };
  std::vector<Row> rows;

  auto sig = coeffs::sigma_coeffs(cfg.n, cfg.m);
  for (int l = 0; l < static_cast<int>(sig.values.size()); ++l) {
    Rational v(sig.values[static_cast<std::size_t>(l)]);
    rows.push_back({l, v.num_str(), v.den_str(), "sigma", v.to_double()});
  }
  auto lin = coeffs::linearization_oracle(cfg.m, cfg.m, cfg.n - 1);
  for (int j = 0; j < static_cast<int>(lin.values.size()); ++j) {
    const Rational& v = lin.values[static_cast<std::size_t>(j)];
    rows.push_back({j, v.num_str(), v.den_str(), "lin-oracle", v.to_double()});
  }

  std::vector<coeffs::HRoute> hroutes;
  bool want_ga = false, want_gb = false;
  if (cfg.route == "oracle") hroutes = {coeffs::HRoute::GramOracle};
  else if (cfg.route == "quad") hroutes = {coeffs::HRoute::Quadrature};
  else if (cfg.route == "3f2") hroutes = {coeffs::HRoute::ThreeF2};
  else if (cfg.route == "2f1") hroutes = {coeffs::HRoute::Gauss2F1};
  else if (cfg.route == "a") want_ga = true;
  else if (cfg.route == "b") want_gb = true;
  else throw std::invalid_argument("unknown --route: " + cfg.route);

  for (auto route : hroutes) {
    auto series = coeffs::h_series(cfg.n, cfg.m, cfg.kmax, route);
    for (int k = 0; k <= cfg.kmax; ++k) {
      if (route == coeffs::HRoute::Quadrature) {
        rows.push_back({k, "", "", "h-quadrature", series.floating[static_cast<std::size_t>(k)]});
      } else {
        const Rational& v = series.exact[static_cast<std::size_t>(k)];
        rows.push_back(
            {k, v.num_str(), v.den_str(), "h-" + coeffs::route_name(route), v.to_double()});
      }
    }
  }
  if (want_ga || want_gb) {
    auto g = want_ga ? coeffs::SpectralFunction::route_a(cfg.n, cfg.m)
                     : coeffs::SpectralFunction::route_b(cfg.n, cfg.m);
    for (int k = 0; k <= cfg.kmax; ++k) {
      auto v = g.exact_at(k);
      rows.push_back({k, v.coeff.num_str(), v.coeff.den_str(),
                      std::string("g-route-") + (want_ga ? "a" : "b"), v.value()});
    }
  }

  if (cfg.format == "csv") {
    std::string out = "k,value_num,value_den,route,value_float\n";
    for (const auto& r : rows)
      out += std::to_string(r.k) + "," + r.num + "," + r.den + "," + r.route + "," +
             format_double(r.value) + "\n";
    write_output(cfg, out);
  } else {
    json doc;
    doc["tool"] = "berezin coeffs";
    doc["config"] = cfg.to_json();
    doc["note"] = "num/den columns of g rows hold the rational coefficient of pi^n";
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(
          json{{"k", r.k}, {"num", r.num}, {"den", r.den}, {"route", r.route}, {"value", r.value}});
    doc["rows"] = arr;
    write_output(cfg, doc.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------- verify ---

void suite_expansion(const Config& cfg, std::vector<Report>& out) {
  const int n = cfg.n, m = cfg.m;
  {
    auto a = coeffs::h_series(n, m, cfg.kmax, coeffs::HRoute::GramOracle);
    auto b = coeffs::h_series(n, m, cfg.kmax, coeffs::HRoute::Gauss2F1);
    bool equal = true;
    json va = json::array(), vb = json::array();
    for (int k = 0; k <= cfg.kmax; ++k) {
      if (a.exact[static_cast<std::size_t>(k)] != b.exact[static_cast<std::size_t>(k)])
        equal = false;
      if (k <= 6) {
        va.push_back(a.exact[static_cast<std::size_t>(k)].str());
        vb.push_back(b.exact[static_cast<std::size_t>(k)].str());
      }
    }
    Report r;
    r.check = "h-route-equality-exact";
    r.n = n;
    r.m = m;
    r.route = "gram-oracle/gauss2F1";
    r.inputs = {{"kmax", cfg.kmax}};
    r.value = vb;
    r.reference = va;
    r.notes = "exact rational equality of the Gram projection and the Gauss-function route";
    r.finish(equal ? 0.0 : 1.0, 0.0);
    out.push_back(std::move(r));
  }
  out.push_back(coeffs::h_threef2_report(n, m, std::min(cfg.kmax, 12)));
  out.push_back(coeffs::expansion_report(n, m, std::min(cfg.K, 120)));
  {
    auto cal = coeffs::calibrate_route_a(n, m, cfg.kmax);
    Report r;
    r.check = "spectral-function-series-prefactor";
    r.n = n;
    r.m = m;
    r.route = "a";
    r.inputs = {{"kmax", cal.kmax_checked}};
    r.value = {{"calibrated_constant", cal.constant.str()},
               {"calibrated_constant_float", cal.constant.value()},
               {"exact_match_to_h_oracle", cal.exact_match},
               {"oracle_nonzero_j_below_m", cal.nonzero_j_below_m}};
    r.reference = {{"printed_headline_prefactor", cal.printed_headline},
                   {"printed_alternate_prefactor", cal.printed_alternate},
                   {"printed_sum_range", "printed variants start the sum at j = m+1 and j = m-1; the oracle keeps all j = 0..2m"}};
    r.notes = "series form calibrated once against the h oracle; the printed prefactors "
              "disagree with each other and with the calibrated constant, and the oracle "
              "linearization keeps nonzero j < m terms the printed sum drops";
    bool printed_consistent = cal.printed_headline == cal.constant.str();
    r.finish(cal.exact_match ? 0.0 : 1.0, 0.0);
    if (!printed_consistent) r.mark_discrepancy();
    out.push_back(std::move(r));
  }
  {
    auto ga = coeffs::SpectralFunction::route_a(n, m);
    auto gb = coeffs::SpectralFunction::route_b(n, m);
    bool exact_equal = true;
    double max_rel = 0.0;
    for (int k = 0; k <= cfg.kmax; ++k) {
      if (ga.exact_at(k).coeff != gb.exact_at(k).coeff) exact_equal = false;
      double va = ga(k), vb = gb(k);
      max_rel = std::max(max_rel, std::abs(va - vb) / std::max(std::abs(vb), 1e-300));
    }
    Report r;
    r.check = "g-route-a-vs-b-integers";
    r.n = n;
    r.m = m;
    r.route = "a/b";
    r.inputs = {{"kmax", cfg.kmax}};
    r.value = {{"exact_equal", exact_equal}, {"max_rel_dev_float", max_rel}};
    r.reference = "route A equals route B at integer spectral points";
    r.abs_dev = max_rel;
    r.rel_dev = max_rel;
    r.finish(exact_equal && max_rel <= 1e-12 ? 0.0 : 1.0, 0.0);
    out.push_back(std::move(r));
  }
  out.push_back(coeffs::decay_report(n, m, std::max(80, 2 * m + n + 10)));
  if (m == 0) {
    bool ok = true;
    for (int k = 0; k <= cfg.kmax; ++k)
      if (coeffs::h_coeff_exact(n, 0, k, coeffs::HRoute::GramOracle) != Rational::pow2(-(n + k)))
        ok = false;
    Report r;
    r.check = "h-m0-closed-form";
    r.n = n;
    r.m = 0;
    r.route = "gram-oracle";
    r.inputs = {{"kmax", cfg.kmax}};
    r.value = ok;
    r.reference = "h(k) = 2^-(n+k)";
    r.finish(ok ? 0.0 : 1.0, 0.0);
    out.push_back(std::move(r));
  }
}

void suite_kernel(const Config& cfg, std::vector<Report>& out) {
  const KernelSpec spec{cfg.n, cfg.m};
  QuadratureGrid grid(cfg.n, grid_axis(cfg));
  out.push_back(ops::grid_sanity_report(grid));
  {
    Rng rng(cfg.seed ^ 0x51a2b3c4ULL);
    double max_dev = 0.0;
    for (int i = 0; i < 200; ++i) {
      ComplexPoint z = seeded_point(rng, cfg.n, 0.0, 2.0);
      ComplexPoint w = seeded_point(rng, cfg.n, 0.0, 2.0);
      auto kzw = ops::kernel_Km(spec, z, w);
      auto kwz = ops::kernel_Km(spec, w, z);
      max_dev =
          std::max(max_dev, std::abs(kzw - std::conj(kwz)) / std::max(std::abs(kzw), 1e-300));
    }
    Report r;
    r.check = "kernel-hermitian-symmetry";
    r.n = cfg.n;
    r.m = cfg.m;
    r.route = "closed-form";
    r.inputs = {{"pairs", 200}, {"seed", cfg.seed}};
    r.value = max_dev;
    r.reference = 0.0;
    r.abs_dev = max_dev;
    r.rel_dev = max_dev;
    r.finish(max_dev, 1e-13);
    out.push_back(std::move(r));
  }
  {
    Rng rng(cfg.seed ^ 0x77e1d2ULL);
    double max_rel = 0.0;
    for (int i = 0; i < 1000; ++i) {
      ComplexPoint z = seeded_point(rng, cfg.n, 0.0, 1.8);
      ComplexPoint w = seeded_point(rng, cfg.n, 0.0, 1.8);
      auto v = ops::deformed_kernel(spec, z, w);
      max_rel = std::max(max_rel, std::abs(v.via_ratio - v.via_closed_form) /
                                      std::max(std::abs(v.via_closed_form), 1e-300));
    }
    Report r;
    r.check = "deformed-kernel-two-forms";
    r.n = cfg.n;
    r.m = cfg.m;
    r.route = "closed-form";
    r.inputs = {{"pairs", 1000}, {"seed", cfg.seed}};
    r.value = max_rel;
    r.reference = 0.0;
    r.abs_dev = max_rel;
    r.rel_dev = max_rel;
    r.finish(max_rel, 1e-12);
    out.push_back(std::move(r));
  }
  {
    auto route = cfg.route == "a" ? coeffs::SpectralFunction::Route::A
                                  : coeffs::SpectralFunction::Route::B;
    double tol = (cfg.m == 0) ? 1e-8 : 1e-6;
    if (cfg.tol > 0) tol = cfg.tol;
    out.push_back(ops::function_of_laplacian_identity_check(spec, route, cfg.K, 25, 1.5, tol,
                                                            cfg.seed ^ 0x9e11ULL));
  }
  if (cfg.n <= 2)
    out.push_back(ops::transform_of_one_constancy_report(spec, grid, 20, cfg.seed ^ 0xabcdULL));
  {
    // spectral family: vanishes below the spectrum; the floor-step kernel
    // obeys the exact partial-sum identity
    ComplexPoint z = parse_point("0.3,0.1", 1);
    ComplexPoint w = parse_point("-0.2,0.4", 1);
    KernelSpec s1{1, cfg.m};
    bool zero_ok = ops::spectral_family_kernel(-0.5, z, w, s1) == std::complex<double>(0.0);
    auto psum = specfun::laguerre_partial_sum_identity_check(2, 0, Rational(27, 10));
    Report r;
    r.check = "spectral-family-kernel";
    r.n = 1;
    r.m = cfg.m;
    r.route = "closed-form";
    r.inputs = {{"lambda_negative", -0.5}, {"partial_sum_M", 2}};
    r.value = {{"zero_below_spectrum", zero_ok}, {"partial_sum_identity", psum.pass}};
    r.reference = "E_lambda = 0 for lambda < 0; L_M^n = sum_{k<=M} L_k^{n-1}";
    r.finish(zero_ok && psum.pass ? 0.0 : 1.0, 0.0);
    out.push_back(std::move(r));
  }
}

void suite_eigen(const Config& cfg, std::vector<Report>& out) {
  {
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
      for (int p = 0; p <= 6; ++p)
        for (int q = 0; q <= 6; ++q) {
          if (n == 1 && p != 0 && q != 0) continue;
          if (eigen::dim_Hpq(n, p, q) != eigen::dim_Hpq_oracle(n, p, q)) ok = false;
        }
    Report r;
    r.check = "harmonic-dimension-oracle-sweep";
    r.route = "combinatorial";
    r.inputs = {{"n_max", 5}, {"pq_max", 6}};
    r.value = ok;
    r.reference = "corrected closed form equals the bidegree count difference";
    r.finish(ok ? 0.0 : 1.0, 0.0);
    out.push_back(std::move(r));
  }
  {
    // the dimension formula as printed misses the factorials
    Rational printed = eigen::dim_Hpq_printed(2, 1, 1);
    mpz_class oracle = eigen::dim_Hpq_oracle(2, 1, 1);
    Report r;
    r.check = "dimension-formula-printed-vs-oracle";
    r.n = 2;
    r.route = "printed-closed-form";
    r.inputs = {{"n", 2}, {"p", 1}, {"q", 1}};
    r.value = printed.str();
    r.reference = oracle.get_str();
    r.set_deviation(printed.to_double(), Rational(oracle).to_double());
    r.notes = "printed numerator (p+q-1)(p+n-2)(q+n-2) lacks the factorials; corrected form "
              "(p+q+n-1)(p+n-2)!(q+n-2)! matches the combinatorial oracle";
    r.finish(r.abs_dev, 0.0);
    r.mark_discrepancy();
    out.push_back(std::move(r));
  }
  const int n = std::min(cfg.n, 2);
  eigen::FiniteDifferenceStencil stencil;
  {
    Rng rng(cfg.seed ^ 0x5eedULL);
    bool all_pass = true;
    double worst = 0.0;
    int count = 0;
    for (int m = 0; m <= 3; ++m) {
      for (int p = 0; p <= 3; ++p) {
        std::vector<ComplexPoint> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(seeded_point(rng, n, 0.3, 2.0));
        auto rep = eigen::eigen_residual({n, m, p, 0}, pts, stencil);
        worst = std::max(worst, rep.abs_dev);
        all_pass = all_pass && rep.pass;
        ++count;
      }
      for (int q = 1; q <= std::min(m, 3); ++q) {
        std::vector<ComplexPoint> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(seeded_point(rng, n, 0.3, 2.0));
        auto rep = eigen::eigen_residual({n, m, 0, q}, pts, stencil);
        worst = std::max(worst, rep.abs_dev);
        all_pass = all_pass && rep.pass;
        ++count;
      }
    }
    Report r;
    r.check = "eigenfunction-residual-panel";
    r.n = n;
    r.route = "finite-difference";
    r.inputs = {{"m_max", 3}, {"p_max", 3}, {"h", stencil.h}, {"seed", cfg.seed}, {"cases", count}};
    r.value = worst;
    r.reference = 0.0;
    r.abs_dev = worst;
    r.rel_dev = worst;
    r.finish(all_pass ? worst : 1.0, 1e-4);
    out.push_back(std::move(r));
  }
  {
    QuadratureGrid grid(1, 80);
    Rng rng(cfg.seed ^ 0xfeedULL);
    bool all_pass = true;
    double worst = 0.0;
    for (int m = 0; m <= 2; ++m) {
      std::vector<eigen::EigenfunctionSpec> specs;
      for (int p = 0; p <= (m == 0 ? 4 : 2); ++p) specs.push_back({1, m, p, 0});
      for (int q = 1; q <= m; ++q) specs.push_back({1, m, 0, q});
      for (const auto& fs : specs) {
        ComplexPoint z = seeded_point(rng, 1, 0.0, 1.5);
        auto rep = eigen::reproducing_check({1, m}, fs, z, grid);
        worst = std::max(worst, rep.rel_dev);
        all_pass = all_pass && rep.pass;
      }
    }
    Report r;
    r.check = "reproducing-kernel-panel";
    r.n = 1;
    r.route = "quadrature";
    r.inputs = {{"m_max", 2}, {"nodes_per_axis", 80}, {"seed", cfg.seed}};
    r.value = worst;
    r.reference = 0.0;
    r.abs_dev = worst;
    r.rel_dev = worst;
    r.finish(all_pass ? worst : 1.0, 1e-6);
    out.push_back(std::move(r));
  }
  {
    QuadratureGrid grid(1, 80);
    Rng rng(cfg.seed ^ 0xc0deULL);
    bool all_pass = true;
    double worst = 0.0;
    for (int mk = 0; mk <= 2; ++mk)
      for (int mf = 0; mf <= 2; ++mf) {
        if (mk == mf) continue;
        ComplexPoint z = seeded_point(rng, 1, 0.0, 1.2);
        auto rep =
            eigen::projector_orthogonality_check({1, mk}, {1, mf, 0, std::min(mf, 1)}, z, grid);
        worst = std::max(worst, rep.abs_dev);
        all_pass = all_pass && rep.pass;
      }
    Report r;
    r.check = "cross-eigenspace-projection-panel";
    r.n = 1;
    r.route = "quadrature";
    r.inputs = {{"m_max", 2}, {"seed", cfg.seed}};
    r.value = worst;
    r.reference = 0.0;
    r.abs_dev = worst;
    r.rel_dev = worst;
    r.finish(all_pass ? worst : 1.0, 1e-6);
    out.push_back(std::move(r));
  }
  {
    // quadrature orthogonality of distinct-(p,q) eigenfunctions of one m
    QuadratureGrid grid(1, 80);
    std::vector<eigen::EigenfunctionSpec> specs = {
        {1, 1, 0, 0}, {1, 1, 0, 1}, {1, 1, 1, 0}, {1, 1, 2, 0}, {1, 1, 3, 0}};
    double worst = 0.0;
    std::complex<double> coords[ComplexPoint::kMaxDim];
    for (std::size_t a = 0; a < specs.size(); ++a)
      for (std::size_t b = a + 1; b < specs.size(); ++b) {
        std::complex<double> ip = 0.0;
        ComplexPoint w(1);
        for (std::size_t i = 0; i < grid.size(); ++i) {
          double wt = grid.node(i, coords);
          w.c[0] = coords[0];
          ip += wt * eigen::eigenfunction_eval(specs[a], w) *
                std::conj(eigen::eigenfunction_eval(specs[b], w));
        }
        worst = std::max(worst, std::abs(ip));
      }
    Report r;
    r.check = "eigenfunction-pairwise-orthogonality";
    r.n = 1;
    r.m = 1;
    r.route = "quadrature";
    r.inputs = {{"pairs", specs.size() * (specs.size() - 1) / 2}};
    r.value = worst;
    r.reference = 0.0;
    r.abs_dev = worst;
    r.rel_dev = worst;
    r.finish(worst, 1e-8);
    out.push_back(std::move(r));
  }
  out.push_back(eigen::gamma_norm_value(1, 1, 0, 1).report);
  out.push_back(eigen::gamma_norm_value(1, 0, 0, 0).report);
  if (cfg.n >= 2) out.push_back(eigen::gamma_norm_value(2, 1, 1, 0).report);
}

void suite_normbound(const Config& cfg, std::vector<Report>& out) {
  ops::NormBoundConfig nb;
  nb.samples = cfg.samples > 0 ? cfg.samples : 100;
  nb.seed = cfg.seed;
  for (auto& r : ops::norm_bound_montecarlo({cfg.n, cfg.m}, nb)) out.push_back(std::move(r));
  if (!(cfg.n == 1 && cfg.m == 0)) {
    // anchor the printed-constant discrepancy where the constant function
    // already defeats it
    ops::NormBoundConfig nb0;
    nb0.samples = std::min(nb.samples, 20);
    nb0.seed = cfg.seed;
    for (auto& r : ops::norm_bound_montecarlo({1, 0}, nb0)) out.push_back(std::move(r));
  }
}

void suite_diamagnetic(const Config& cfg, std::vector<Report>& out) {
  const KernelSpec spec{cfg.n, cfg.m};
  QuadratureGrid grid(cfg.n, cfg.n == 1 ? 60 : (cfg.n == 2 ? 24 : 10));
  int seeds = cfg.samples > 0 ? cfg.samples : 10;
  Rng rng(cfg.seed);
  bool all_pass = true;
  double worst_margin = 1e300;
  for (int s = 0; s < seeds; ++s) {
    auto phi = ops::random_mixture(cfg.n, rng.next_u64());
    ComplexPoint z = seeded_point(rng, cfg.n, 0.0, 1.5);
    auto rep = ops::diamagnetic_check(spec, phi, z, grid);
    all_pass = all_pass && rep.pass;
    double left = rep.value.get<double>();
    double right = rep.reference.get<double>();
    worst_margin = std::min(worst_margin, right - left);
  }
  Report r;
  r.check = "diamagnetic-inequality-panel";
  r.n = cfg.n;
  r.m = cfg.m;
  r.route = "quadrature";
  r.inputs = {{"seeds", seeds}, {"seed", cfg.seed}, {"nodes_per_axis", grid.nodes_per_axis()}};
  r.value = {{"all_pass", all_pass}, {"min_margin", worst_margin}};
  r.reference = "left <= right pointwise";
  r.finish(all_pass ? 0.0 : 1.0, 0.0);
  out.push_back(std::move(r));
  {
    // adopted reading of the damping weight on the right-hand side
    Report note;
    note.check = "diamagnetic-weight-reading";
    note.n = cfg.n;
    note.m = cfg.m;
    note.route = "adopted-reading";
    note.value = "e^{-|w|^2/2}";
    note.reference = "printed e^{-|.|/2} (modulus not squared)";
    note.notes = "the derivation that yields the inequality uses the squared modulus; "
                 "implemented with e^{-|w|^2/2} and flagged";
    note.finish(0.0, 0.0);
    note.mark_discrepancy();
    out.push_back(std::move(note));
  }
}

void suite_conjugation(const Config& cfg, std::vector<Report>& out) {
  eigen::FiniteDifferenceStencil stencil;
  Rng rng(cfg.seed ^ 0x7a3bULL);
  const int n = std::min(cfg.n, 2);
  std::vector<std::pair<std::string, eigen::ScalarField>> fields;
  fields.emplace_back("constant", [](const ComplexPoint&) { return std::complex<double>(1.0); });
  fields.emplace_back("conj-coordinate",
                      [](const ComplexPoint& z) { return std::conj(z.c[0]); });
  fields.emplace_back("gaussian-quarter", [](const ComplexPoint& z) {
    return std::complex<double>(std::exp(-0.25 * z.norm_sq()));
  });
  fields.emplace_back("poly-gauss", [](const ComplexPoint& z) {
    return z.c[0] * z.c[0] * std::exp(-0.5 * z.norm_sq());
  });
  {
    eigen::EigenfunctionSpec es{n, 2, 0, 1};
    fields.emplace_back("eigenfunction-m2",
                        [es](const ComplexPoint& z) { return eigen::eigenfunction_eval(es, z); });
  }
  bool all_pass = true;
  double worst = 0.0;
  for (const auto& [name, f] : fields) {
    for (int i = 0; i < 3; ++i) {
      ComplexPoint z = seeded_point(rng, n, 0.2, 1.5);
      auto rep = eigen::conjugation_check(n, f, z, stencil);
      all_pass = all_pass && rep.pass;
      worst = std::max(worst, rep.rel_dev);
    }
  }
  Report r;
  r.check = "schroedinger-conjugation-panel";
  r.n = n;
  r.route = "finite-difference";
  r.inputs = {
      {"functions", fields.size()}, {"points_each", 3}, {"h", stencil.h}, {"seed", cfg.seed}};
  r.value = worst;
  r.reference = 0.0;
  r.abs_dev = worst;
  r.rel_dev = worst;
  r.finish(all_pass ? worst : 1.0, 1e-4);
  out.push_back(std::move(r));
}

void suite_errata_extra(const Config& cfg, std::vector<Report>& out) {
  // the printed linearization defect at desk scale
  out.push_back(coeffs::linearization_paper(1, 1, 0).report);
  out.push_back(coeffs::linearization_paper(2, 2, std::max(cfg.n - 1, 0)).report);
  {
    // pinned series-prefactor entry; the config-driven one degenerates at
    // m = 0 where the printed headline happens to coincide
    auto cal = coeffs::calibrate_route_a(1, 2, 12);
    Report r;
    r.check = "spectral-function-series-prefactor";
    r.n = 1;
    r.m = 2;
    r.route = "a";
    r.inputs = {{"kmax", cal.kmax_checked}};
    r.value = {{"calibrated_constant", cal.constant.str()},
               {"exact_match_to_h_oracle", cal.exact_match},
               {"oracle_nonzero_j_below_m", cal.nonzero_j_below_m}};
    r.reference = {{"printed_headline_prefactor", cal.printed_headline},
                   {"printed_alternate_prefactor", cal.printed_alternate}};
    r.notes = "pinned instance of the prefactor/sum-range discrepancy";
    r.finish(cal.exact_match ? 0.0 : 1.0, 0.0);
    r.mark_discrepancy();
    out.push_back(std::move(r));
  }
  {
    // sign of the Gauss-function argument: F(-k, ...) reproduces h(k),
    // F(+k, ...) does not
    const int n = 1, m = 1;
    auto sig = coeffs::sigma_coeffs(n, m);
    json plus = json::array(), minus = json::array(), oracle = json::array();
    double max_dev_plus = 0.0, max_dev_minus = 0.0;
    for (int k = 1; k <= 4; ++k) {
      double h_plus = 0.0, h_minus = 0.0;
      for (int l = 0; l <= 2 * m; ++l) {
        double tl = Rational(sig.values[static_cast<std::size_t>(l)]).to_double() *
                    std::exp2(static_cast<double>(-l)) *
                    Rational(specfun::factorial(static_cast<unsigned long>(n + l - 1)),
                             specfun::factorial(static_cast<unsigned long>(l)))
                        .to_double();
        h_plus += tl * specfun::hyp2f1_half_series(k, n + l, n);
        h_minus += tl * specfun::hyp2f1_half_series(-k, n + l, n);
      }
      double scale = std::exp2(static_cast<double>(-n)) /
                     Rational(specfun::factorial(static_cast<unsigned long>(n - 1))).to_double();
      h_plus *= scale;
      h_minus *= scale;
      double h_ref = coeffs::h_coeff_exact(n, m, k, coeffs::HRoute::GramOracle).to_double();
      plus.push_back(h_plus);
      minus.push_back(h_minus);
      oracle.push_back(h_ref);
      max_dev_plus = std::max(max_dev_plus, std::abs(h_plus - h_ref));
      max_dev_minus = std::max(max_dev_minus, std::abs(h_minus - h_ref));
    }
    Report r;
    r.check = "gauss-argument-sign";
    r.n = n;
    r.m = m;
    r.route = "gauss2F1";
    r.inputs = {{"k", {1, 2, 3, 4}}};
    r.value = {{"h_with_minus_k", minus},
               {"h_with_plus_k", plus},
               {"max_dev_minus", max_dev_minus},
               {"max_dev_plus", max_dev_plus}};
    r.reference = {{"h_oracle", oracle}};
    r.notes = "the two printed variants disagree in the sign of the first Gauss argument; "
              "only the -k argument reproduces the Fourier coefficients";
    r.finish(max_dev_minus <= 1e-12 ? 0.0 : 1.0, 0.0);
    r.mark_discrepancy();
    out.push_back(std::move(r));
  }
  {
    Report note;
    note.check = "spectral-kernel-exponent-reading";
    note.route = "adopted-reading";
    note.value = "e^{<z,w>}";
    note.reference = "printed e^{nu <z,w>} with nu otherwise naming the volume measure";
    note.notes = "the kernel exponent is read without the stray factor, consistent with the "
                 "spectral-function formula two displays earlier";
    note.finish(0.0, 0.0);
    note.mark_discrepancy();
    out.push_back(std::move(note));
  }
}

int cmd_verify(const Config& cfg) {
  std::vector<Report> reports;
  const std::string& s = cfg.suite;
  bool all = s == "all";
  if (all || s == "expansion") suite_expansion(cfg, reports);
  if (all || s == "kernel") suite_kernel(cfg, reports);
  if (all || s == "eigen") suite_eigen(cfg, reports);
  if (all || s == "normbound") suite_normbound(cfg, reports);
  if (all || s == "diamagnetic") suite_diamagnetic(cfg, reports);
  if (all || s == "conjugation") suite_conjugation(cfg, reports);
  if (all) suite_errata_extra(cfg, reports);
  if (reports.empty()) throw std::invalid_argument("unknown --suite: " + s);

  json cfgj = cfg.to_json();
  cfgj["suite"] = cfg.suite;
  if (cfg.format == "csv") {
    write_output(cfg, reports_to_csv(reports));
  } else {
    write_output(cfg, reports_document("berezin verify", cfgj, reports).dump(2) + "\n");
  }
  for (const auto& r : reports)
    if (r.status == "fail") return 1;
  return 0;
}

// ----------------------------------------------------------------- apply ---

int cmd_apply(const Config& cfg) {
  ComplexPoint z = parse_point(cfg.z, cfg.n);
  ops::TestFunction phi = make_phi(cfg);
  KernelSpec spec{cfg.n, cfg.m};
  QuadratureGrid grid(cfg.n, grid_axis(cfg));

  std::complex<double> direct;
  double drift = 0.0;
  bool converged = true;
  if (cfg.tol > 0) {
    auto checked = ops::apply_deformed_checked(spec, phi, z, grid, cfg.tol);
    direct = checked.value;
    drift = checked.grid_drift;
    converged = checked.converged;
  } else {
    direct = ops::apply_deformed(spec, phi, z, grid);
  }

  auto g = cfg.route == "a" ? coeffs::SpectralFunction::route_a(cfg.n, cfg.m)
                            : coeffs::SpectralFunction::route_b(cfg.n, cfg.m);
  auto series = ops::make_spectral_series(g, cfg.K);
  std::complex<double> spectral = 0.0;
  {
    ComplexPoint w(cfg.n);
    std::complex<double> coords[ComplexPoint::kMaxDim];
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double wt = grid.node(i, coords);
      for (int d = 0; d < cfg.n; ++d) w.c[static_cast<std::size_t>(d)] = coords[d];
      spectral += wt * ops::spectral_kernel_psi(series, z, w) * phi(w);
    }
  }

  double abs_dev = std::abs(direct - spectral);
  double rel_dev = abs_dev / std::max(std::abs(direct), 1e-300);

  std::cout << "direct     = " << format_double(direct.real()) << " + "
            << format_double(direct.imag()) << "i\n"
            << "spectral   = " << format_double(spectral.real()) << " + "
            << format_double(spectral.imag()) << "i  (K=" << cfg.K
            << ", tail<=" << format_double(series.tail_estimate) << ")\n"
            << "deviation  = " << format_double(abs_dev) << " (rel " << format_double(rel_dev)
            << ")\n";
  if (cfg.tol > 0)
    std::cout << "grid-drift = " << format_double(drift)
              << (converged ? " (converged)" : " (grid too coarse)") << "\n";

  if (!cfg.out.empty()) {
    json doc;
    doc["tool"] = "berezin apply";
    doc["config"] = cfg.to_json();
    doc["direct"] = {{"re", direct.real()}, {"im", direct.imag()}};
    doc["spectral"] = {{"re", spectral.real()}, {"im", spectral.imag()}};
    doc["abs_dev"] = abs_dev;
    doc["rel_dev"] = rel_dev;
    doc["tail_estimate"] = series.tail_estimate;
    if (cfg.tol > 0) {
      doc["grid_drift"] = drift;
      doc["grid_converged"] = converged;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
    f << doc.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and quadrature toolkit for phase-deformed magnetic Berezin transforms"};
  app.fallthrough();

  Config cfg;
  app.set_config("--config");
  app.add_option("--n", cfg.n, "complex dimension")->check(CLI::Range(1, 4));
  app.add_option("--m", cfg.m, "eigenspace index")->check(CLI::Range(0, 64));
  app.add_option("--kmax", cfg.kmax, "largest coefficient index")->check(CLI::Range(0, 4000));
  app.add_option("--K", cfg.K, "spectral series truncation")->check(CLI::Range(0, 4000));
  app.add_option("--route", cfg.route, "route: oracle|quad|3f2|2f1|a|b")
      ->check(CLI::IsMember({"oracle", "quad", "3f2", "2f1", "a", "b"}));
  app.add_option("--grid-nodes", cfg.grid_nodes, "quadrature nodes per real axis")
      ->check(CLI::Range(0, 400));
  app.add_option("--tol", cfg.tol, "tolerance override (0 = per-check defaults)");
  app.add_option("--seed", cfg.seed, "RNG seed, recorded in reports");
  app.add_option("--samples", cfg.samples, "sample count override for Monte Carlo suites")
      ->check(CLI::Range(0, 100000));
  app.add_option("--phi", cfg.phi, "test function: constant|zero|polygauss|eigen|random")
      ->check(CLI::IsMember({"constant", "zero", "polygauss", "eigen", "random"}));
  app.add_option("--z", cfg.z, "evaluation point, 2n comma-separated reals");
  app.add_option("--format", cfg.format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "output path (stdout when absent)");

  auto* c_coeffs = app.add_subcommand("coeffs", "emit coefficient tables");
  c_coeffs->fallthrough();
  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->fallthrough();
  c_verify->add_option("--suite", cfg.suite,
                       "expansion|kernel|eigen|normbound|diamagnetic|conjugation|all")
      ->check(CLI::IsMember(
          {"expansion", "kernel", "eigen", "normbound", "diamagnetic", "conjugation", "all"}));
  auto* c_apply = app.add_subcommand("apply", "apply the transforms at a point");
  c_apply->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (c_coeffs->parsed()) return cmd_coeffs(cfg);
    if (c_verify->parsed()) return cmd_verify(cfg);
    if (c_apply->parsed()) return cmd_apply(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

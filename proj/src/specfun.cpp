#include "berezin/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace berezin::specfun {

namespace detail {

double laguerre_unchecked(int degree, int order, double x) {
  if (degree == 0) return 1.0;
  double lm = 1.0;
  double l = 1.0 + order - x;
  for (int i = 1; i < degree; ++i) {
    double lp = ((2 * i + 1 + order - x) * l - (i + order) * lm) / (i + 1);
    lm = l;
    l = lp;
  }
  return l;
}

void laguerre_row(int kmax, int order, double x, double* out) {
  out[0] = 1.0;
  if (kmax == 0) return;
  out[1] = 1.0 + order - x;
  for (int i = 1; i < kmax; ++i)
    out[i + 1] = ((2 * i + 1 + order - x) * out[i] - (i + order) * out[i - 1]) / (i + 1);
}

void validate(int degree, int order, int cap) {
  if (degree < 0 || degree > cap) throw std::invalid_argument("laguerre: degree out of range");
  if (order < 0) throw std::invalid_argument("laguerre: order must be a nonnegative integer");
}

}  // namespace detail

double laguerre(int degree, int order, double x) {
  detail::validate(degree, order, kMaxLaguerreDegree);
  if (x < 0) throw std::domain_error("laguerre: negative argument");
  return detail::laguerre_unchecked(degree, order, x);
}

double laguerre(const LaguerreParams& p, double x) { return laguerre(p.degree, p.order, x); }

Rational laguerre_exact(int degree, int order, const Rational& x) {
  detail::validate(degree, order, kMaxExactLaguerreDegree);
  if (degree == 0) return 1;
  Rational lm = 1;
  Rational l = Rational(1 + order) - x;
  for (int i = 1; i < degree; ++i) {
    Rational lp = ((Rational(2 * i + 1 + order) - x) * l - Rational(i + order) * lm) / Rational(i + 1);
    lm = l;
    l = lp;
  }
  return l;
}

double pochhammer(double a, int j) {
  double r = 1.0;
  for (int t = 0; t < j; ++t) r *= a + t;
  return r;
}

Rational pochhammer(const Rational& a, int j) {
  Rational r = 1;
  for (int t = 0; t < j; ++t) r *= a + Rational(t);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class binomial_general(long a, long b) {
  if (b < 0) return 0;
  mpz_class num = 1;
  for (long i = 0; i < b; ++i) num *= mpz_class(a - b + 1 + i);
  if (num == 0) return 0;
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), factorial(b).get_mpz_t());
  return out;
}

namespace {

// Smallest termination index among nonpositive-integer parameters, or -1.
long termination_index(const Rational& a1, const Rational& a2, const Rational& a3) {
  long best = -1;
  for (const Rational* a : {&a1, &a2, &a3}) {
    if (a->is_integer() && a->sign() <= 0) {
      long cand = (-*a).to_long();
      if (best < 0 || cand < best) best = cand;
    }
  }
  return best;
}

void check_denominator(const Rational& b, long nterms) {
  // (b)_t vanishes for t >= -b + 1 when b is a nonpositive integer.
  if (b.is_integer() && b.sign() <= 0 && (-b).to_long() + 1 <= nterms)
    throw std::invalid_argument("hypergeometric: denominator Pochhammer vanishes before termination");
}

}  // namespace

Rational hyp3f2_terminating(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2) {
  long N = termination_index(a1, a2, a3);
  if (N < 0) throw std::invalid_argument("hyp3f2_terminating: no nonpositive-integer numerator parameter");
  check_denominator(b1, N);
  check_denominator(b2, N);
  Rational sum = 1;
  Rational term = 1;
  for (long t = 0; t < N; ++t) {
    Rational rt(t);
    term *= (a1 + rt) * (a2 + rt) * (a3 + rt) / ((b1 + rt) * (b2 + rt) * Rational(t + 1));
    sum += term;
  }
  return sum;
}

Rational hyp2f1_terminating(int k, const Rational& b, const Rational& c, const Rational& x) {
  if (k < 0) throw std::invalid_argument("hyp2f1_terminating: k must be >= 0");
  check_denominator(c, k);
  Rational sum = 1;
  Rational term = 1;
  for (int t = 0; t < k; ++t) {
    Rational rt(t);
    term *= (Rational(-k) + rt) * (b + rt) / ((c + rt) * Rational(t + 1)) * x;
    sum += term;
  }
  return sum;
}

Rational hyp2f1_half(int k, const Rational& b, const Rational& c) {
  return hyp2f1_terminating(k, b, c, Rational(1, 2));
}

double hyp2f1_half_series(double a, double b, double c) {
  double sum = 0.0;
  double term = 1.0;
  // Once t > -a the terms have a fixed sign and the ratio tends to 1/2.
  int sign_settle = a < 0 ? static_cast<int>(std::ceil(-a)) : 0;
  for (int t = 0; t < 100000; ++t) {
    sum += term;
    double ratio = (a + t) * (b + t) / ((c + t) * (t + 1)) * 0.5;
    term *= ratio;
    if (term == 0.0) break;
    if (t >= sign_settle) {
      double r = std::abs(ratio);
      if (r < 0.95 && std::abs(term) * r / (1.0 - r) < 1e-15) {
        sum += term;
        break;
      }
    }
  }
  return sum;
}

double hyp1f1_poly(int a_nonpos, int c, double x) {
  if (a_nonpos > 0) throw std::invalid_argument("hyp1f1_poly: first parameter must be <= 0");
  double sum = 1.0;
  double term = 1.0;
  for (int t = 0; t < -a_nonpos; ++t) {
    term *= static_cast<double>(a_nonpos + t) * x / ((c + t) * (t + 1.0));
    sum += term;
  }
  return sum;
}

Rational hyp1f1_poly_exact(int a_nonpos, int c, const Rational& x) {
  if (a_nonpos > 0) throw std::invalid_argument("hyp1f1_poly_exact: first parameter must be <= 0");
  Rational sum = 1;
  Rational term = 1;
  for (int t = 0; t < -a_nonpos; ++t) {
    term *= Rational(a_nonpos + t) * x / (Rational(c + t) * Rational(t + 1));
    sum += term;
  }
  return sum;
}

Report laguerre_shift_identity_check(int j, int alpha, const Rational& x) {
  if (j < 1) throw std::invalid_argument("laguerre_shift_identity_check: j must be >= 1");
  Rational residual =
      laguerre_exact(j, alpha, x) - laguerre_exact(j, alpha + 1, x) + laguerre_exact(j - 1, alpha + 1, x);
  Report r;
  r.check = "laguerre-shift-identity";
  r.route = "exact";
  r.inputs = {{"j", j}, {"alpha", alpha}, {"x", x.str()}};
  r.value = residual.str();
  r.reference = "0";
  r.abs_dev = std::abs(residual.to_double());
  r.rel_dev = r.abs_dev;
  r.finish(residual.is_zero() ? 0.0 : 1.0, 0.0);
  return r;
}

Report laguerre_partial_sum_identity_check(int M, int alpha, const Rational& x) {
  if (M < 0) throw std::invalid_argument("laguerre_partial_sum_identity_check: M must be >= 0");
  Rational sum = 0;
  for (int k = 0; k <= M; ++k) sum += laguerre_exact(k, alpha, x);
  Rational residual = sum - laguerre_exact(M, alpha + 1, x);
  Report r;
  r.check = "laguerre-partial-sum-identity";
  r.route = "exact";
  r.inputs = {{"M", M}, {"alpha", alpha}, {"x", x.str()}};
  r.value = residual.str();
  r.reference = "0";
  r.abs_dev = std::abs(residual.to_double());
  r.rel_dev = r.abs_dev;
  r.finish(residual.is_zero() ? 0.0 : 1.0, 0.0);
  return r;
}

}  // namespace berezin::specfun

#pragma once

#include "berezin/rational.hpp"
#include "berezin/report.hpp"

namespace berezin::specfun {

// Degree caps bounding recurrence length.
inline constexpr int kMaxLaguerreDegree = 10000;
inline constexpr int kMaxExactLaguerreDegree = 500;

struct LaguerreParams {
  int degree = 0;  // k >= 0
  int order = 0;   // alpha >= 0 (integer orders n-1 and n are the only ones used)
};

/// L_k^alpha(x) by the forward three-term recurrence. Rejects x < 0 and
/// degrees above kMaxLaguerreDegree.
double laguerre(const LaguerreParams& p, double x);
double laguerre(int degree, int order, double x);

/// Exact twin of laguerre() on rationals; degree capped at
/// kMaxExactLaguerreDegree.
Rational laguerre_exact(int degree, int order, const Rational& x);

namespace detail {
// Recurrence without the x >= 0 domain check (polynomials are entire; the
// Euclidean-spectral-function evaluation needs negative arguments).
double laguerre_unchecked(int degree, int order, double x);
// All of L_0..L_kmax at once.
void laguerre_row(int kmax, int order, double x, double* out);
}  // namespace detail

/// Rising factorial (a)_j.
double pochhammer(double a, int j);
Rational pochhammer(const Rational& a, int j);

mpz_class factorial(unsigned long n);

/// Binomial with any integer upper index: (a-b+1)_b / b! for b >= 0,
/// zero for b < 0. Out-of-range b > a >= 0 gives zero through the product.
mpz_class binomial_general(long a, long b);

/// Terminating 3F2(a1,a2,a3; b1,b2; 1). At least one numerator parameter
/// must be a nonpositive integer; termination happens at the smallest such
/// |parameter|. Throws if no parameter terminates the series or a
/// denominator Pochhammer vanishes before termination.
Rational hyp3f2_terminating(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2);

/// Terminating 2F1(-k, b; c; x) as an exact (k+1)-term sum.
Rational hyp2f1_terminating(int k, const Rational& b, const Rational& c, const Rational& x);

/// 2F1(-k, b; c; 1/2), the specialization used throughout.
Rational hyp2f1_half(int k, const Rational& b, const Rational& c);

/// Gauss series 2F1(a, b; c; 1/2) for arbitrary real a, summed until the
/// estimated absolute tail is below 1e-14 (the series converges at 1/2).
double hyp2f1_half_series(double a, double b, double c);

/// Confluent polynomial case 1F1(a, c; x) with a <= 0 integer.
double hyp1f1_poly(int a_nonpos, int c, double x);
Rational hyp1f1_poly_exact(int a_nonpos, int c, const Rational& x);

/// Exact residual of L_j^a - L_j^{a+1} + L_{j-1}^{a+1} at x; passes iff zero.
Report laguerre_shift_identity_check(int j, int alpha, const Rational& x);

/// Exact check of sum_{k<=M} L_k^a = L_M^{a+1} at x.
Report laguerre_partial_sum_identity_check(int M, int alpha, const Rational& x);

}  // namespace berezin::specfun

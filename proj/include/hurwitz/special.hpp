#pragma once

#include "hurwitz/mp.hpp"

#include <gmpxx.h>

#include <vector>

namespace hurwitz {

/// base^s for real base > 0 (DomainError otherwise).
MpComplex complex_pow(const MpReal& base, const ComplexPoint& s);

/// Gamma(s) at precision `bits`.
///
/// Re(s) < 1/2 is reflected through Gamma(s)Gamma(1-s) = pi/sin(pi s); the
/// argument is then shifted into [1/2, 3/2) and evaluated from the
/// convergent lower-incomplete-gamma series
///   gamma(w,N) = N^w e^-N sum_k N^k / (w(w+1)...(w+k)),
/// with N chosen so that the neglected Gamma(w,N) is below 2^-bits relative.
/// Throws PoleError at s in {0,-1,-2,...}.
MpComplex gamma(const ComplexPoint& s, long bits);
inline MpComplex gamma(const ComplexPoint& s) { return gamma(s, s.precision()); }
MpReal gamma(const MpReal& x, long bits);

/// Bernoulli number B_m (B_1 = -1/2), exact. m is limited by kMaxBernoulli.
const mpq_class& bernoulli_number(int m);
inline constexpr int kMaxBernoulli = 640;

/// Exact coefficients of B_m(x) in ascending powers of x.
std::vector<mpq_class> bernoulli_poly_coeffs(int m);
/// B_m(x) in exact rational arithmetic.
mpq_class bernoulli_poly(int m, const mpq_class& x);
/// B_m(x) at the precision of x (DomainError for m < 0).
MpReal bernoulli_poly(int m, const MpReal& x);

/// Digamma for real x > 0: recurrence up to a threshold, then the
/// asymptotic Bernoulli series.
MpReal digamma(const MpReal& x);

/// Binomial coefficient C(n, k) as an exact integer (0 outside 0 <= k <= n).
mpz_class binomial(long n, long k);

}  // namespace hurwitz

#pragma once

// Taylor coefficients of phi(s,a) = (s-1) zeta(s,a) about s0.
//
// With A(s) = phi(s,a) Gamma(s+k) and G(s) = Gamma(s+k),
//   a_n = (-1)^k/n! int g^(k)(t) (log t)^n t^(s0+k-1) dt   (Taylor coeffs of A)
//   c_n =        1/n! int e^-t  (log t)^n t^(s0+k-1) dt   (Taylor coeffs of G)
// and gamma_n follows from power-series division A/G:
//   gamma_n = (a_n - sum_{j=1}^{n} c_j gamma_(n-j)) / c_0.
// k = 0 for Re s0 > 0, otherwise the continuation order of s0.

#include "hurwitz/config.hpp"

#include <vector>

namespace hurwitz {

inline constexpr int kMaxLaurentOrder = 32;

struct CoeffValue {
    MpComplex value;
    MpReal err;  // absolute
};

struct LaurentExpansion {
    ComplexPoint s0;
    MpReal a;
    int order = 0;
    int k = 0;  // integration-by-parts order used for the coefficients
    std::vector<MpComplex> a_coeffs;
    std::vector<MpComplex> c_coeffs;
    std::vector<MpComplex> gamma_coeffs;
    std::vector<MpReal> a_errs;
    std::vector<MpReal> c_errs;
    std::vector<MpReal> gamma_errs;  // first-order propagated through the division
    long nodes = 0;
};

/// a_n about s0 with k = 0. Requires Re s0 > 0, a in (0,1].
CoeffValue a_coeff(int n, const ComplexPoint& s0, const ShiftParameter& a, const EvalConfig& cfg);

/// c_n = Gamma^(n)(s0)/n!. Requires Re s0 > 0.
CoeffValue c_coeff(int n, const ComplexPoint& s0, const EvalConfig& cfg);

/// All coefficients up to `order` (<= kMaxLaurentOrder) from one quadrature.
LaurentExpansion laurent_expand(const ComplexPoint& s0, const ShiftParameter& a, int order, const EvalConfig& cfg);

/// sum_n gamma_n (s - s0)^n by Horner.
MpComplex laurent_eval(const LaurentExpansion& e, const ComplexPoint& s);

/// Cauchy product sum_{j<=n} c_j gamma_(n-j) for n <= order; equals a_n.
std::vector<MpComplex> reconvolve(const LaurentExpansion& e);

/// Stieltjes-type normalization about s0 = 1:
///   zeta(s,a) = 1/(s-1) + sum_n (-1)^n gamma~_n(a) (s-1)^n / n!,
/// so gamma~_n = (-1)^n n! gamma_(n+1), with gamma_0 = 1 carried separately.
/// Values are held at precision + log2(order!) bits, which makes the
/// scaling exact and the round trip bit-for-bit.
struct BerndtCoefficients {
    MpComplex residue_term;  // gamma_0
    std::vector<MpComplex> values;
    std::vector<MpReal> errs;
};

/// Requires s0 == 1 and order >= 1.
BerndtCoefficients to_berndt(const LaurentExpansion& e);
struct GammaCoefficients {
    std::vector<MpComplex> values;
    std::vector<MpReal> errs;
};

/// Inverse of to_berndt: gamma_0..gamma_order at `bits`.
GammaCoefficients from_berndt(const BerndtCoefficients& b, long bits);

}  // namespace hurwitz

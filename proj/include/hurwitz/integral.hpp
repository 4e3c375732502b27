#pragma once

// Integral representations of phi(s,a) = (s-1) zeta(s,a):
//   phi_integral          (1/Gamma(s)) int psi(t) e^{-(a-1)t} t^(s-1) dt,  Re s > 0
//   phi_continued         ((-1)^k/Gamma(s+k)) int g^(k)(t) t^(s+k-1) dt,  Re s > -k
//   phi_shifted_integral  (1/Gamma(s)) int eta(t) e^{-at} t^(s-1) dt = (s-1)(zeta(s,a) - a^-s)
// where g(t) = psi(t) e^{-(a-1)t}. The continued form follows from k
// integrations by parts; boundary terms vanish for Re s > -k.

#include "hurwitz/config.hpp"

namespace hurwitz {

/// |Im s| above this gets extra quadrature levels and a warning.
inline constexpr double kOscillationBudget = 50.0;

/// Guard bits for an integral against t^(s-1): |Gamma(x+iy)| ~ e^{-pi|y|/2}
/// below the L1 norm of the integrand, plus 16.
long oscillation_bits(const ComplexPoint& s);

/// k = max(0, ceil(1 - Re s) + 1).
int continuation_order(const ComplexPoint& s);

EvalResult phi_integral(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg);
EvalResult phi_continued(const ComplexPoint& s, const ShiftParameter& a, int k, const EvalConfig& cfg);
EvalResult phi_shifted_integral(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg);

/// phi_integral for Re s > 0, otherwise phi_continued with the policy k.
EvalResult phi_auto(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg);

}  // namespace hurwitz

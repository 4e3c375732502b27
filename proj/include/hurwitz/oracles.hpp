#pragma once

// Independent references for zeta(s,a), used by tests, the acceptance
// suite and `--method oracle`. They share only mp-core and the quadrature
// engine with the evaluators under test.

#include "hurwitz/config.hpp"

namespace hurwitz {

struct OracleValue {
    MpComplex zeta;
    MpReal err;  // absolute
    long terms = 0;
};

/// sum_{n<M} (n+a)^-s plus the Euler-Maclaurin tail
///   (M+a)^(1-s)/(s-1) + (M+a)^-s/2 + sum_{j<=J} B_2j/(2j)! (s)_(2j-1) (M+a)^(-s-2j+1).
/// Starts at M = 50, J = 8 and escalates J, then M, until the remainder
/// bound meets cfg.target_tol relative. Requires Re s > 1.
OracleValue dirichlet_oracle(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg);

/// (1/Gamma(s)) int_0^inf e^-at / (1 - e^-t) t^(s-1) dt. Requires Re s > 1.
OracleValue classical_integral_oracle(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg);

/// zeta(-m, a) = -B_(m+1)(a) / (m+1), at the precision of a.
MpReal negative_integer_oracle(int m, const ShiftParameter& a);

}  // namespace hurwitz

#include "hurwitz/oracles.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/quadrature.hpp"
#include "hurwitz/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hurwitz {

namespace {

struct EulerMaclaurin {
    MpComplex value;
    MpReal remainder;
};

EulerMaclaurin euler_maclaurin(const MpComplex& s, const MpReal& a, long m_head, int order, long bits) {
    MpComplex head(bits);
    for (long n = 0; n < m_head; ++n) head += complex_pow(a + n, -s);
    const MpReal x = a + m_head;
    const MpComplex x_ms = complex_pow(x, -s);
    MpComplex sum = head + x_ms * x / (s - 1L) + x_ms / 2L;

    // term_j = B_2j/(2j)! (s)_(2j-1) x^(-s-2j+1)
    MpComplex rising = s;             // (s)_(2j-1)
    MpComplex xpow = x_ms / x;        // x^(-s-2j+1)
    MpReal fact = MpReal::from(2L, bits);  // (2j)!
    const MpReal inv_x2 = 1L / (x * x);
    for (int j = 1; j <= order; ++j) {
        sum += rising * xpow * MpReal::from(bernoulli_number(2 * j), bits) / fact;
        rising = rising * (s + static_cast<long>(2 * j - 1)) * (s + static_cast<long>(2 * j));
        xpow = xpow * inv_x2;
        fact = fact * static_cast<long>((2 * j + 1) * (2 * j + 2));
    }
    // |R| <= |next term| |s+2J+1| / (Re s + 2J + 1)
    const long j = order + 1;
    const MpReal next = abs(rising * xpow) * abs(MpReal::from(bernoulli_number(static_cast<int>(2 * j)), bits)) / fact;
    const MpReal factor = abs(s + static_cast<long>(2 * j - 1)) / (s.re() + static_cast<long>(2 * j - 1));
    return {sum, next * factor};
}

}  // namespace

OracleValue dirichlet_oracle(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg) {
    cfg.validate();
    a.require_half_open_unit("dirichlet_oracle");
    if (!(s.re() > 1L)) throw DomainError("dirichlet_oracle: requires Re(s) > 1");
    const long bits = cfg.precision_bits + 32;
    const MpComplex sw = s.with_precision(bits);
    const MpReal aw = a.value().with_precision(bits);
    long m_head = std::max(50L, static_cast<long>(std::ceil(abs(s).to_double())) + 10);
    const MpReal tol = cfg.target_tol.with_precision(bits);
    EulerMaclaurin em{MpComplex(bits), MpReal(bits)};
    for (int round = 0; round < 8; ++round) {
        for (int order = 8; order <= std::min(kMaxBernoulli / 2 - 2, 4 * static_cast<int>(m_head)); order += 8) {
            em = euler_maclaurin(sw, aw, m_head, order, bits);
            if (em.remainder <= tol * abs(em.value)) {
                return {em.value.with_precision(cfg.precision_bits),
                        em.remainder.with_precision(cfg.precision_bits) +
                            ldexp(abs(em.value).with_precision(cfg.precision_bits), -cfg.precision_bits),
                        m_head};
            }
        }
        m_head *= 2;
    }
    throw AccuracyError("dirichlet_oracle: Euler-Maclaurin did not reach the tolerance");
}

OracleValue classical_integral_oracle(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg) {
    cfg.validate();
    a.require_half_open_unit("classical_integral_oracle");
    if (!(s.re() > 1L)) throw DomainError("classical_integral_oracle: requires Re(s) > 1");
    const double y = std::fabs(s.im().to_double());
    const long bits = cfg.precision_bits + static_cast<long>(std::ceil(y * std::numbers::pi / (2 * std::numbers::ln2))) + 16;
    const EvalConfig w = cfg.with_precision(bits);
    const MpComplex sm1 = s.with_precision(bits) - 1L;
    const MpReal aw = a.value().with_precision(bits);
    const auto f = [&](const QuadPoint& p) {
        // e^-at / (1 - e^-t): no cancellation near t = 0
        const MpReal k = exp(-aw * p.t) / -expm1(-p.t);
        return exp(sm1 * MpComplex(p.log_t)) * k;
    };
    const QuadValue q = quad_halfline(f, {s.re().to_double() - 1.0, a.value().to_double()}, w);
    const MpComplex g = gamma(s.with_precision(bits));
    const MpComplex z = q.value / g;
    const long out = cfg.precision_bits;
    return {z.with_precision(out), (q.err / abs(g)).with_precision(out) + ldexp(abs(z).with_precision(out), -out),
            q.nodes};
}

MpReal negative_integer_oracle(int m, const ShiftParameter& a) {
    if (m < 0) throw DomainError("negative_integer_oracle: m must be >= 0");
    return -bernoulli_poly(m + 1, a.value()) / static_cast<long>(m + 1);
}

}  // namespace hurwitz

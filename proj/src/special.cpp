#include "hurwitz/special.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hurwitz {

MpComplex complex_pow(const MpReal& base, const ComplexPoint& s) {
    if (base.sign() <= 0) throw DomainError("complex_pow: base must be positive");
    return pow(base, s);
}

namespace {

bool is_nonpositive_integer(const ComplexPoint& s) {
    return s.im().is_zero() && s.re().is_integer() && s.re().sign() <= 0;
}

// Gamma(w) for 1/2 <= Re(w) < 3/2 at working precision `bits`.
MpComplex gamma_core(const MpComplex& w, long bits) {
    const double x = w.re().to_double();
    const double y = std::fabs(w.im().to_double());
    const double half_pi_y = 0.5 * std::numbers::pi * y;

    // Lower bound log|Gamma(w)| >= -pi|y|/2 - 2 on this strip; the tail
    // Gamma(w,N) is at most 2 N^(x-1) e^-N.
    double n_cut = bits * std::numbers::ln2 + half_pi_y + 8.0;
    for (int it = 0; it < 4; ++it) {
        n_cut = bits * std::numbers::ln2 + half_pi_y + 8.0 + std::max(0.0, (x - 1.0) * std::log(n_cut));
    }
    const long n_int = static_cast<long>(std::ceil(n_cut));
    const long work = bits + static_cast<long>(std::ceil(half_pi_y / std::numbers::ln2)) + 24;

    const MpComplex z = w.with_precision(work);
    const MpReal big_n = MpReal::from(n_int, work);

    MpComplex term = MpComplex(MpReal::from(1L, work)) / z;
    MpComplex sum = term;
    MpComplex denom = z;
    for (long k = 1;; ++k) {
        denom = z + k;
        term = term * big_n / denom;
        sum += term;
        if (k > n_int && abs(term).log2_abs() < abs(sum).log2_abs() - static_cast<double>(work)) break;
    }
    // N^w e^-N
    const MpComplex pref = exp(z * log(big_n) - big_n);
    return (pref * sum).with_precision(bits);
}

}  // namespace

MpComplex gamma(const ComplexPoint& s, long bits) {
    if (is_nonpositive_integer(s)) {
        throw PoleError("gamma: pole at s = " + s.re().to_string(12));
    }
    const long work = bits + 32;
    MpComplex z = s.with_precision(work);

    if (z.re() < 0.5) {
        // Reflection; 1 - z lands in Re >= 1/2.
        const MpReal pi = MpReal::pi(work);
        const MpComplex one_minus = MpComplex(MpReal::from(1L, work)) - z;
        const MpComplex g = gamma(one_minus, work);
        const MpComplex sn = sin(z * pi);
        return (MpComplex(pi) / (sn * g)).with_precision(bits);
    }

    // Shift down into [1/2, 3/2): Gamma(z) = Gamma(z-m) * prod_{j=1..m} (z-j).
    const long m = std::max(0L, static_cast<long>(std::floor(z.re().to_double() - 0.5)));
    const MpComplex w = z - m;
    MpComplex result = gamma_core(w, work);
    for (long j = 0; j < m; ++j) result *= (w + j);
    return result.with_precision(bits);
}

MpReal gamma(const MpReal& x, long bits) {
    return gamma(MpComplex(x), bits).re();
}

const mpq_class& bernoulli_number(int m) {
    // Tangent numbers by the integer recurrence of Brent and Harvey, then
    // B_2k = (-1)^(k-1) 2k T_k / (2^2k (2^2k - 1)).
    static const std::vector<mpq_class> table = [] {
        const int half = kMaxBernoulli / 2;
        std::vector<mpz_class> t(static_cast<size_t>(half) + 1);
        t[1] = 1;
        for (int k = 2; k <= half; ++k) t[k] = (k - 1) * t[k - 1];
        for (int k = 2; k <= half; ++k) {
            for (int j = k; j <= half; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
        }
        std::vector<mpq_class> b(static_cast<size_t>(kMaxBernoulli) + 1, mpq_class(0));
        b[0] = 1;
        b[1] = mpq_class(-1, 2);
        for (int k = 1; k <= half; ++k) {
            mpz_class p2k;
            mpz_ui_pow_ui(p2k.get_mpz_t(), 2, static_cast<unsigned long>(2 * k));
            mpq_class v(mpz_class(2 * k) * t[k], p2k * (p2k - 1));
            v.canonicalize();
            b[2 * k] = (k % 2 == 1) ? v : mpq_class(-v);
        }
        return b;
    }();
    if (m < 0 || m > kMaxBernoulli) {
        throw DomainError("bernoulli_number: index out of range: " + std::to_string(m));
    }
    return table[static_cast<size_t>(m)];
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::vector<mpq_class> bernoulli_poly_coeffs(int m) {
    if (m < 0) throw DomainError("bernoulli_poly: degree must be non-negative");
    // B_m(x) = sum_k C(m,k) B_k x^(m-k)
    std::vector<mpq_class> c(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        c[static_cast<size_t>(m - k)] = mpq_class(binomial(m, k)) * bernoulli_number(k);
    }
    return c;
}

mpq_class bernoulli_poly(int m, const mpq_class& x) {
    const auto c = bernoulli_poly_coeffs(m);
    mpq_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

MpReal bernoulli_poly(int m, const MpReal& x) {
    const auto c = bernoulli_poly_coeffs(m);
    // The coefficient sum cancels by up to ~m bits for x in [0,1].
    const long work = x.precision() + m + 16;
    const MpReal xw = x.with_precision(work);
    MpReal acc(work);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * xw + MpReal::from(*it, work);
    return acc.with_precision(x.precision());
}

MpReal digamma(const MpReal& x) {
    if (x.sign() <= 0) throw DomainError("digamma: argument must be positive");
    const long bits = x.precision();
    const long work = bits + 24;
    const int max_k = kMaxBernoulli / 2;

    // Threshold where the asymptotic series reaches 2^-work within max_k terms;
    // the k-th term is about 2 (2k)! / (2k (2 pi x)^2k).
    auto tail_ok = [&](double x0) {
        for (int k = 1; k <= max_k; ++k) {
            const double lg = std::log(2.0) + std::lgamma(2.0 * k + 1) - std::log(2.0 * k) -
                              2.0 * k * std::log(2.0 * std::numbers::pi * x0);
            if (lg / std::numbers::ln2 < -static_cast<double>(work)) return true;
        }
        return false;
    };
    double x0 = 0.2 * static_cast<double>(work) + 10.0;
    while (!tail_ok(x0)) x0 *= 1.5;

    MpReal z = x.with_precision(work);
    MpReal shift_sum(work);
    while (z < x0) {
        shift_sum += 1L / z;
        z += MpReal::from(1L, work);
    }
    MpReal result = log(z) - 1L / (z * 2);
    const MpReal inv_z2 = 1L / (z * z);
    MpReal zpow = inv_z2;
    for (int k = 1; k <= max_k; ++k) {
        const MpReal term = MpReal::from(bernoulli_number(2 * k), work) * zpow / (2L * k);
        result -= term;
        if (term.is_zero() || term.log2_abs() < result.log2_abs() - static_cast<double>(work)) break;
        zpow *= inv_z2;
    }
    return (result - shift_sum).with_precision(bits);
}

}  // namespace hurwitz

#include "hurwitz/laurent.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/integral.hpp"
#include "hurwitz/kernels.hpp"
#include "hurwitz/quadrature.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace hurwitz {

namespace {

void check_order(int order, const char* where) {
    if (order < 0 || order > kMaxLaurentOrder) {
        throw DomainError(std::string(where) + ": order must be in [0, " + std::to_string(kMaxLaurentOrder) + "]");
    }
}

struct CoeffTables {
    std::vector<CoeffValue> a;
    std::vector<CoeffValue> c;
    long nodes = 0;
};

// Outputs 0..order are a_n (if with_a), the rest c_n; both against
// (log t)^n / n! t^(s0+k-1).
CoeffTables integrate_coeffs(const ComplexPoint& s0, const ShiftParameter* a, int k, int order,
                             const EvalConfig& cfg) {
    cfg.validate();
    check_order(order, "laurent");
    const long bits = cfg.precision_bits;
    const long wbits = bits + oscillation_bits(s0);
    const EvalConfig w = cfg.with_precision(wbits);
    const size_t m = static_cast<size_t>(order) + 1;
    const bool with_a = a != nullptr;
    const size_t outputs = with_a ? 2 * m : m;

    std::optional<KernelEvaluator> ev;
    if (with_a) ev.emplace(*a, wbits, k);
    const MpComplex em1 = s0.with_precision(wbits) + static_cast<long>(k - 1);
    std::vector<MpReal> inv_fact(m, MpReal(wbits));
    inv_fact[0] = MpReal::from(1L, wbits);
    for (size_t n = 1; n < m; ++n) inv_fact[n] = inv_fact[n - 1] / static_cast<long>(n);

    const auto f = [&](const QuadPoint& p, std::span<MpComplex> out) {
        const MpComplex base = exp(em1 * MpComplex(p.log_t));
        const MpComplex g = with_a ? base * ev->derivative(k, p.t) : MpComplex(wbits);
        const MpComplex e = base * exp(-p.t);
        MpReal pw = MpReal::from(1L, wbits);
        for (size_t n = 0; n < m; ++n) {
            const MpReal weight = pw * inv_fact[n];
            if (with_a) {
                out[n] = g * weight;
                out[m + n] = e * weight;
            } else {
                out[n] = e * weight;
            }
            pw = pw * p.log_t;
        }
    };
    const double origin = s0.re().to_double() + k;
    const double tail = with_a ? std::min(1.0, a->value().to_double()) : 1.0;
    const QuadResult q = integrate_halfline(f, static_cast<int>(outputs), HalflineHints{origin, tail}, w);
    if (!q.converged) {
        throw AccuracyError("laurent: coefficient quadrature did not converge within " +
                            std::to_string(w.quad_levels) + " levels");
    }

    CoeffTables out;
    out.nodes = q.nodes;
    const size_t c_off = with_a ? m : 0;
    for (size_t n = 0; n < m; ++n) {
        if (with_a) {
            MpComplex v = q.values[n];
            if (k % 2 == 1) v = -v;
            const MpComplex r = v.with_precision(bits);
            out.a.push_back({r, q.errors[n].with_precision(bits) + ldexp(abs(r), -bits)});
        }
        const MpComplex r = q.values[c_off + n].with_precision(bits);
        out.c.push_back({r, q.errors[c_off + n].with_precision(bits) + ldexp(abs(r), -bits)});
    }
    return out;
}

void require_right_half(const ComplexPoint& s0, const char* where) {
    if (s0.re().sign() <= 0) throw DomainError(std::string(where) + ": requires Re(s0) > 0");
}

// ceil(log2(order!)) + 1, the bits that make scaling by n! <= order! exact
long factorial_bits(int order) {
    mpz_class f = 1;
    for (int i = 2; i <= order; ++i) f *= i;
    return static_cast<long>(mpz_sizeinbase(f.get_mpz_t(), 2)) + 1;
}

}  // namespace

CoeffValue a_coeff(int n, const ComplexPoint& s0, const ShiftParameter& a, const EvalConfig& cfg) {
    if (n < 0) throw DomainError("a_coeff: n must be >= 0");
    require_right_half(s0, "a_coeff");
    a.require_half_open_unit("a_coeff");
    return integrate_coeffs(s0, &a, 0, n, cfg).a.back();
}

CoeffValue c_coeff(int n, const ComplexPoint& s0, const EvalConfig& cfg) {
    if (n < 0) throw DomainError("c_coeff: n must be >= 0");
    require_right_half(s0, "c_coeff");
    return integrate_coeffs(s0, nullptr, 0, n, cfg).c.back();
}

LaurentExpansion laurent_expand(const ComplexPoint& s0, const ShiftParameter& a, int order, const EvalConfig& cfg) {
    check_order(order, "laurent_expand");
    a.require_half_open_unit("laurent_expand");
    const long bits = cfg.precision_bits;
    LaurentExpansion e;
    e.s0 = s0.with_precision(bits);
    e.a = a.value().with_precision(bits);
    e.order = order;
    e.k = s0.re().sign() > 0 ? 0 : continuation_order(s0);
    const CoeffTables t = integrate_coeffs(s0, &a, e.k, order, cfg);
    e.nodes = t.nodes;

    const long work = bits + 32;
    const MpComplex c0 = t.c[0].value.with_precision(work);
    if (c0.is_zero()) throw DomainError("laurent_expand: Gamma(s0+k) vanished");
    const MpReal abs_c0 = abs(c0);
    std::vector<MpComplex> g;
    for (int n = 0; n <= order; ++n) {
        const size_t un = static_cast<size_t>(n);
        MpComplex acc = t.a[un].value.with_precision(work);
        MpReal err = t.a[un].err.with_precision(work);
        for (int j = 1; j <= n; ++j) {
            const size_t uj = static_cast<size_t>(j);
            const size_t rest = static_cast<size_t>(n - j);
            acc -= t.c[uj].value * g[rest];
            err = err + abs(t.c[uj].value) * e.gamma_errs[rest] + abs(g[rest]) * t.c[uj].err;
        }
        g.push_back(acc / c0);
        err = (err + abs(g.back()) * t.c[0].err) / abs_c0;
        e.gamma_errs.push_back((err + ldexp(abs(g.back()), -bits)).with_precision(bits));
    }
    for (int n = 0; n <= order; ++n) {
        const size_t un = static_cast<size_t>(n);
        e.a_coeffs.push_back(t.a[un].value);
        e.a_errs.push_back(t.a[un].err);
        e.c_coeffs.push_back(t.c[un].value);
        e.c_errs.push_back(t.c[un].err);
        e.gamma_coeffs.push_back(g[un].with_precision(bits));
    }
    return e;
}

MpComplex laurent_eval(const LaurentExpansion& e, const ComplexPoint& s) {
    const long bits = e.s0.precision() + 16;
    const MpComplex h = s.with_precision(bits) - e.s0.with_precision(bits);
    MpComplex acc(bits);
    for (int n = e.order; n >= 0; --n) acc = acc * h + e.gamma_coeffs[static_cast<size_t>(n)];
    return acc.with_precision(e.s0.precision());
}

std::vector<MpComplex> reconvolve(const LaurentExpansion& e) {
    const long bits = e.s0.precision() + 32;
    std::vector<MpComplex> out;
    for (int n = 0; n <= e.order; ++n) {
        MpComplex acc(bits);
        for (int j = 0; j <= n; ++j) {
            acc += e.c_coeffs[static_cast<size_t>(j)] * e.gamma_coeffs[static_cast<size_t>(n - j)];
        }
        out.push_back(acc.with_precision(e.s0.precision()));
    }
    return out;
}

BerndtCoefficients to_berndt(const LaurentExpansion& e) {
    if (!(e.s0.re() == 1L) || !e.s0.im().is_zero()) {
        throw DomainError("to_berndt: the Stieltjes normalization is defined about s0 = 1");
    }
    if (e.order < 1) throw DomainError("to_berndt: order must be >= 1");
    const long bits = e.s0.precision() + factorial_bits(e.order);
    BerndtCoefficients b{e.gamma_coeffs[0], {}, {}};
    mpz_class fact = 1;
    for (int n = 0; n + 1 <= e.order; ++n) {
        if (n > 0) fact *= n;
        const MpReal f = MpReal::from(fact, bits);
        MpComplex v = e.gamma_coeffs[static_cast<size_t>(n) + 1].with_precision(bits) * f;
        if (n % 2 == 1) v = -v;
        b.values.push_back(v);
        b.errs.push_back(e.gamma_errs[static_cast<size_t>(n) + 1].with_precision(bits) * f);
    }
    return b;
}

GammaCoefficients from_berndt(const BerndtCoefficients& b, long bits) {
    GammaCoefficients g;
    g.values.push_back(b.residue_term.with_precision(bits));
    g.errs.push_back(MpReal(bits));
    mpz_class fact = 1;
    const long wide = b.values.empty() ? bits : b.values.front().precision();
    for (size_t n = 0; n < b.values.size(); ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        const MpReal f = MpReal::from(fact, wide);
        MpComplex v = b.values[n] / f;
        if (n % 2 == 1) v = -v;
        g.values.push_back(v.with_precision(bits));
        g.errs.push_back((b.errs[n] / f).with_precision(bits));
    }
    return g;
}

}  // namespace hurwitz

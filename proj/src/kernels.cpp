#include "hurwitz/kernels.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hurwitz {

namespace {

// Series/closed-form switch point.
bool below_switch(const MpReal& t) { return t < MpReal::from(0.25, 64); }

// Terms of size below |scale| 2^-(bits+8) are negligible.
bool negligible(const MpReal& term, double scale_log2, long bits) {
    return term.log2_abs() < scale_log2 - static_cast<double>(bits) - 8.0;
}

}  // namespace

KernelEvaluator::KernelEvaluator(const ShiftParameter& a, long bits, int max_order)
    : a_(a.value().with_precision(bits)), bits_(bits), max_order_(max_order) {
    a.require_closed_unit("KernelEvaluator");
    if (max_order < 0 || max_order > kMaxDerivativeOrder) {
        throw DomainError("KernelEvaluator: derivative order must be in [0, " +
                          std::to_string(kMaxDerivativeOrder) + "], got " + std::to_string(max_order));
    }
    work_ = bits + 16 + 2L * max_order;
    // |B_m(x)/m!| <~ 4 (2 pi)^-m, and (1/4)/(2 pi) ~ 2^-4.65 per term.
    const int series = std::min<int>(
        kMaxKernelSeriesTerms, static_cast<int>(std::ceil((work_ + 24.0 + 6.0 * (max_order + 1)) / 4.6)));
    const int count = std::min(kMaxBernoulli, max_order + 3 + series);
    const MpReal one_minus_a = 1L - a.value().with_precision(work_);
    MpReal fact = MpReal::from(1L, work_);
    bern_.reserve(static_cast<size_t>(count));
    bern_poly_.reserve(static_cast<size_t>(count));
    for (int m = 0; m < count; ++m) {
        if (m > 0) fact = fact * static_cast<long>(m);
        bern_.push_back(MpReal::from(bernoulli_number(m), work_) / fact);
        bern_poly_.push_back(bernoulli_poly(m, one_minus_a) / fact);
    }
}

MpReal KernelEvaluator::slope_kernel(const MpReal& c_in, const MpReal& t_in) const {
    const MpReal t = t_in.with_precision(work_);
    const MpReal c = c_in.with_precision(work_);
    if (below_switch(t)) {
        // sum_m (c B_m/m! - B_{m+1}/m!) t^m; B_{m+1}/m! = (m+1) bern_[m+1]
        MpReal sum(work_);
        MpReal pw = MpReal::from(1L, work_);
        int quiet = 0;
        const size_t last = bern_.size() - 1;
        for (size_t m = 0; m < last; ++m) {
            const MpReal coef = c * bern_[m] - bern_[m + 1] * static_cast<long>(m + 1);
            const MpReal term = coef * pw;
            sum += term;
            if (m >= 2 && negligible(term, std::max(sum.log2_abs(), -64.0), work_)) {
                if (++quiet == 2) break;
            } else {
                quiet = 0;
            }
            pw = pw * t;
        }
        return sum.with_precision(bits_);
    }
    const MpReal e = expm1(t);
    const MpReal inv = 1L / e;
    return (t * (e + 1L) * inv * inv - inv + c * t * inv).with_precision(bits_);
}

MpReal KernelEvaluator::psi(const MpReal& t) const {
    if (t.sign() < 0) throw DomainError("psi: t must be >= 0");
    return slope_kernel(a_ - 1L, t);
}

MpReal KernelEvaluator::eta(const MpReal& t) const {
    if (t.sign() < 0) throw DomainError("eta: t must be >= 0");
    return slope_kernel(a_, t);
}

std::vector<MpReal> KernelEvaluator::antiderivative_jet(const MpReal& t_in, int order) const {
    const MpReal t = t_in.with_precision(work_);
    std::vector<MpReal> f(static_cast<size_t>(order) + 1, MpReal(work_));
    if (below_switch(t)) {
        // f_j = -sum_{m>=j} B_m(1-a)/m! C(m,j) t^(m-j)
        const size_t count = bern_poly_.size();
        for (int j = 0; j <= order; ++j) {
            MpReal sum(work_);
            MpReal w = MpReal::from(1L, work_);  // C(m,j) t^(m-j)
            const double scale = bern_poly_[static_cast<size_t>(j)].log2_abs();
            int quiet = 0;
            for (size_t m = static_cast<size_t>(j); m < count; ++m) {
                const MpReal term = bern_poly_[m] * w;
                sum += term;
                const double ref = std::max(sum.log2_abs(), std::isfinite(scale) ? scale : -64.0);
                if (m > static_cast<size_t>(j) + 1 && negligible(term, ref, work_)) {
                    if (++quiet == 2) break;
                } else {
                    quiet = 0;
                }
                w = w * t * static_cast<long>(m + 1) / static_cast<long>(m + 1 - static_cast<size_t>(j));
            }
            f[static_cast<size_t>(j)] = -sum;
        }
        return f;
    }
    // F(t+h) = -(t+h) e^{-at} e^{-ah} / (1 - r e^{-h}), r = e^-t
    const size_t n = static_cast<size_t>(order) + 1;
    const MpReal a = a_.with_precision(work_);
    const MpReal r = exp(-t);
    std::vector<MpReal> ex(n, MpReal(work_)), den(n, MpReal(work_)), inv(n, MpReal(work_));
    ex[0] = MpReal::from(1L, work_);
    den[0] = -expm1(-t);
    MpReal fact = MpReal::from(1L, work_);
    for (size_t j = 1; j < n; ++j) {
        fact = fact * static_cast<long>(j);
        ex[j] = ex[j - 1] * (-a) / static_cast<long>(j);
        den[j] = (j % 2 == 0 ? -r : r) / fact;
    }
    inv[0] = 1L / den[0];
    for (size_t j = 1; j < n; ++j) {
        MpReal acc(work_);
        for (size_t i = 1; i <= j; ++i) acc += den[i] * inv[j - i];
        inv[j] = -acc * inv[0];
    }
    const MpReal pref = -exp(-a * t);
    for (size_t j = 0; j < n; ++j) {
        MpReal p(work_), p_prev(work_);
        for (size_t i = 0; i <= j; ++i) p += ex[i] * inv[j - i];
        if (j > 0) {
            for (size_t i = 0; i <= j - 1; ++i) p_prev += ex[i] * inv[j - 1 - i];
        }
        f[j] = pref * (t * p + p_prev);
    }
    return f;
}

MpReal KernelEvaluator::derivative(int k, const MpReal& t) const {
    if (k < 0) throw DomainError("integrand_derivative: k must be >= 0");
    if (k > max_order_) {
        throw DomainError("integrand_derivative: order " + std::to_string(k) + " exceeds evaluator order " +
                          std::to_string(max_order_));
    }
    if (t.sign() < 0) throw DomainError("integrand_derivative: t must be >= 0");
    if (k == 0 && !below_switch(t)) {
        const MpReal tw = t.with_precision(work_);
        return (slope_kernel(a_ - 1L, tw).with_precision(work_) * exp((1L - a_) * tw)).with_precision(bits_);
    }
    const std::vector<MpReal> f = antiderivative_jet(t, k + 1);
    MpReal fact = MpReal::from(1L, work_);
    for (long i = 2; i <= k + 1; ++i) fact = fact * i;
    return (f.back() * fact).with_precision(bits_);
}

KernelJet KernelEvaluator::jet(const MpReal& t, int order) const {
    if (order < 0 || order > max_order_) {
        throw DomainError("KernelEvaluator::jet: order out of range");
    }
    if (t.sign() < 0) throw DomainError("KernelEvaluator::jet: t must be >= 0");
    const std::vector<MpReal> f = antiderivative_jet(t, order + 1);
    KernelJet out{t, order, {}};
    for (int n = 0; n <= order; ++n) {
        out.coeffs.push_back((f[static_cast<size_t>(n) + 1] * static_cast<long>(n + 1)).with_precision(bits_));
    }
    return out;
}

MpReal psi(const MpReal& t, const ShiftParameter& a) {
    a.require_half_open_unit("psi");
    return KernelEvaluator(a, t.precision()).psi(t);
}

MpReal eta(const MpReal& t, const ShiftParameter& a) { return KernelEvaluator(a, t.precision()).eta(t); }

MpReal integrand_derivative(int k, const MpReal& t, const ShiftParameter& a) {
    if (k < 0) throw DomainError("integrand_derivative: k must be >= 0");
    a.require_half_open_unit("integrand_derivative");
    return KernelEvaluator(a, t.precision(), k).derivative(k, t);
}

IdentityCheck identity_lhs_rhs(Identity which, const MpReal& t_in, long n_terms) {
    if (t_in.sign() <= 0) throw DomainError("identity_lhs_rhs: t must be > 0");
    if (n_terms < 1) throw DomainError("identity_lhs_rhs: N must be >= 1");
    const long base = t_in.precision();
    // log2 of q^N/N, estimated at low precision
    const MpReal q_est = -expm1(-t_in.with_precision(64));
    const double log2_bound = static_cast<double>(n_terms) * q_est.log2_abs() - std::log2(static_cast<double>(n_terms));
    const long work = base + static_cast<long>(std::ceil(std::max(0.0, -log2_bound))) +
                      2 * static_cast<long>(std::ceil(std::log2(static_cast<double>(n_terms) + 1.0))) + 32;

    const MpReal t = t_in.with_precision(work);
    const MpReal e = exp(-t);
    const MpReal q = -expm1(-t);
    const long shift = which == Identity::InverseN ? 0 : 1;

    MpReal lhs = t * e / q;
    if (which == Identity::InverseNPlusOne) lhs = lhs / q - e / q;

    MpReal sum(work);
    MpReal pw = e;  // q^(n-1) e^-t
    for (long n = 1; n <= n_terms; ++n) {
        sum += pw / (n + shift);
        pw = pw * q;
    }
    const MpReal bound = pow(q, MpReal::from(n_terms, work)) / n_terms;
    return {lhs, sum, bound};
}

}  // namespace hurwitz

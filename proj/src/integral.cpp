#include "hurwitz/integral.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/kernels.hpp"
#include "hurwitz/quadrature.hpp"
#include "hurwitz/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hurwitz {

namespace {

EvalConfig working_config(const ComplexPoint& s, const EvalConfig& cfg, std::vector<std::string>& warnings) {
    EvalConfig w = cfg.with_precision(cfg.precision_bits + oscillation_bits(s));
    const double y = std::fabs(s.im().to_double());
    if (y > kOscillationBudget) {
        w.quad_levels += static_cast<int>(std::ceil(std::log2(y / kOscillationBudget))) + 1;
        warnings.push_back("|Im s| = " + std::to_string(y) + " exceeds the oscillation budget of " +
                           std::to_string(static_cast<int>(kOscillationBudget)) + "; quadrature levels raised to " +
                           std::to_string(w.quad_levels));
    }
    return w;
}

// prefactor * int f(t) t^(exponent-1) dt
EvalResult integrate_with_power(const std::function<MpReal(const MpReal&)>& kernel, const ComplexPoint& s,
                                const ComplexPoint& exponent, const MpComplex& prefactor, double tail_rate,
                                Method method, const EvalConfig& cfg) {
    EvalResult r;
    const EvalConfig w = working_config(s, cfg, r.warnings);
    const MpComplex em1 = exponent.with_precision(w.precision_bits) - 1L;
    const auto f = [&](const QuadPoint& p, std::span<MpComplex> out) {
        const MpReal k = kernel(p.t);
        out[0] = exp(em1 * MpComplex(p.log_t)) * k;
    };
    const HalflineHints hints{exponent.re().to_double(), tail_rate};
    const QuadResult q = integrate_halfline(f, 1, hints, w);

    const long bits = cfg.precision_bits;
    const MpComplex pref = prefactor.with_precision(w.precision_bits);
    r.phi = (pref * q.values[0]).with_precision(bits);
    r.err_estimate = (abs(pref) * q.errors[0]).with_precision(bits) + ldexp(abs(r.phi), -bits);
    r.method = method;
    r.terms_or_nodes = q.nodes;
    attach_zeta(r, s.with_precision(bits));
    if (!q.converged) {
        throw EvalAccuracyError(to_string(method) + ": quadrature did not converge within " +
                                    std::to_string(w.quad_levels) + " levels",
                                r);
    }
    return r;
}

}  // namespace

long oscillation_bits(const ComplexPoint& s) {
    const double y = std::fabs(s.im().to_double());
    return static_cast<long>(std::ceil(y * std::numbers::pi / (2.0 * std::numbers::ln2))) + 16;
}

int continuation_order(const ComplexPoint& s) {
    const double k = std::ceil(1.0 - s.re().to_double()) + 1.0;
    return static_cast<int>(std::max(0.0, k));
}

EvalResult phi_integral(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg) {
    cfg.validate();
    a.require_half_open_unit("phi_integral");
    if (s.re().sign() <= 0) {
        throw DomainError("phi_integral: requires Re(s) > 0 (use the continued form)");
    }
    const long wbits = cfg.precision_bits + oscillation_bits(s);
    const KernelEvaluator ev(a, wbits);
    const MpComplex inv_gamma = MpComplex(MpReal::from(1L, wbits)) / gamma(s.with_precision(wbits));
    return integrate_with_power([&ev](const MpReal& t) { return ev.derivative(0, t); }, s, s, inv_gamma,
                                a.value().to_double(), Method::Integral, cfg);
}

EvalResult phi_continued(const ComplexPoint& s, const ShiftParameter& a, int k, const EvalConfig& cfg) {
    cfg.validate();
    a.require_half_open_unit("phi_continued");
    if (k < 0 || k > kMaxDerivativeOrder) {
        throw DomainError("phi_continued: k must be in [0, " + std::to_string(kMaxDerivativeOrder) + "]");
    }
    if (!(s.re() > static_cast<long>(-k))) {
        throw DomainError("phi_continued: requires Re(s) > -k (k = " + std::to_string(k) + ")");
    }
    const long wbits = cfg.precision_bits + oscillation_bits(s);
    const KernelEvaluator ev(a, wbits, k);
    const MpComplex sk = s.with_precision(wbits) + static_cast<long>(k);
    MpComplex pref = MpComplex(MpReal::from(1L, wbits)) / gamma(sk);
    if (k % 2 == 1) pref = -pref;
    return integrate_with_power([&ev, k](const MpReal& t) { return ev.derivative(k, t); }, s, sk, pref,
                                a.value().to_double(), Method::Continued, cfg);
}

EvalResult phi_shifted_integral(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg) {
    cfg.validate();
    a.require_closed_unit("phi_shifted_integral");
    if (s.re().sign() <= 0) throw DomainError("phi_shifted_integral: requires Re(s) > 0");
    const long wbits = cfg.precision_bits + oscillation_bits(s);
    const KernelEvaluator ev(a, wbits);
    const MpReal aw = a.value().with_precision(wbits);
    const MpComplex inv_gamma = MpComplex(MpReal::from(1L, wbits)) / gamma(s.with_precision(wbits));
    // eta(t) e^{-at} decays like e^{-(a+1)t}
    return integrate_with_power([&ev, &aw](const MpReal& t) { return ev.eta(t) * exp(-aw * t); }, s, s, inv_gamma,
                                a.value().to_double() + 1.0, Method::ShiftedIntegral, cfg);
}

EvalResult phi_auto(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg) {
    if (s.re().sign() > 0) return phi_integral(s, a, cfg);
    return phi_continued(s, a, continuation_order(s), cfg);
}

}  // namespace hurwitz

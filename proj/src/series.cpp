#include "hurwitz/series.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hurwitz {

namespace {

constexpr long kFirstBlock = 64;
constexpr long kFitWindow = 16;

MpReal shift_for(const ShiftParameter& a, SeriesVariant variant, long bits) {
    const MpReal v = a.value().with_precision(bits);
    return variant == SeriesVariant::B ? v : v + 1L;
}

// 1/(n+1) + (b-1)/n
MpReal weight_for_shift(long n, const MpReal& b) {
    return 1L / MpReal::from(n + 1, b.precision()) + (b - 1L) / n;
}

EvalResult run_series(const ComplexPoint& s, const MpReal& shift, Method method, const EvalConfig& cfg,
                      SnCache* cache) {
    cfg.validate();
    if (cfg.max_terms < 2) throw DomainError("series: max_terms must be >= 2");
    SnCache local;
    SnCache& store = cache ? *cache : local;
    const long bits = cfg.precision_bits;
    const long sum_bits = bits + 32;

    EvalResult r;
    r.method = method;
    r.convergence_caveat = s.re().sign() <= 0;
    if (r.convergence_caveat) {
        r.warnings.push_back("Re(s) <= 0: no dominating tail bound; error estimate is a fitted extrapolation");
    }

    long n_cur = std::min(kFirstBlock, cfg.max_terms);
    std::vector<MpComplex> terms;
    MpComplex sum(sum_bits);
    MpReal sn_err(sum_bits);
    for (;;) {
        const std::shared_ptr<const SnTable> table = store.get(s, shift, n_cur, cfg);
        for (long n = static_cast<long>(terms.size()) + 1; n <= n_cur; ++n) {
            const SnTable::Entry& e = table->at(n);
            const MpReal w = weight_for_shift(n, shift.with_precision(sum_bits));
            const MpComplex term = e.value.with_precision(sum_bits) * w;
            sum += term;
            sn_err = sn_err + e.err * abs(w);
            terms.push_back(term);
        }
        const SeriesTail tail = series_tail(s, shift, terms);
        const MpReal tail_err = tail.has_rigorous ? max(tail.rigorous, tail.fitted) : tail.fitted;
        r.phi = sum.with_precision(bits);
        r.err_estimate = (tail_err + sn_err).with_precision(bits) + ldexp(abs(r.phi), -bits);
        r.terms_or_nodes = n_cur;
        const MpReal tol = cfg.target_tol * max(abs(r.phi), MpReal::from(1L, bits));
        if (r.err_estimate <= tol) break;
        if (n_cur >= cfg.max_terms) {
            attach_zeta(r, s.with_precision(bits));
            throw EvalAccuracyError(to_string(method) + ": tail estimate " + r.err_estimate.to_string(3) +
                                        " above target after " + std::to_string(n_cur) +
                                        " terms; the integral method reaches full precision",
                                    r);
        }
        n_cur = std::min(2 * n_cur, cfg.max_terms);
    }
    attach_zeta(r, s.with_precision(bits));
    return r;
}

}  // namespace

MpReal series_weight(long n, const MpReal& a, SeriesVariant variant) {
    if (n < 1) throw DomainError("series_weight: n must be >= 1");
    return weight_for_shift(n, variant == SeriesVariant::B ? a : a + 1L);
}

MpComplex series_term(long n, const ComplexPoint& s, const ShiftParameter& a, SeriesVariant variant,
                      const EvalConfig& cfg) {
    if (n < 1) throw DomainError("series_term: n must be >= 1");
    if (variant == SeriesVariant::B) {
        a.require_half_open_unit("series_term");
    } else {
        a.require_closed_unit("series_term");
    }
    const MpReal b = shift_for(a, variant, cfg.precision_bits);
    const SnTable table(s, b, n, cfg);
    return table.at(n).value * weight_for_shift(n, b);
}

std::vector<MpComplex> series_partial_sums(const ComplexPoint& s, const ShiftParameter& a, SeriesVariant variant,
                                           const std::vector<long>& checkpoints, const EvalConfig& cfg) {
    if (checkpoints.empty()) return {};
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) || checkpoints.front() < 1) {
        throw DomainError("series_partial_sums: checkpoints must be ascending and >= 1");
    }
    const long bits = cfg.precision_bits;
    const MpReal b = shift_for(a, variant, bits);
    const SnTable table(s, b, checkpoints.back(), cfg);
    std::vector<MpComplex> out;
    MpComplex sum(bits + 32);
    size_t next = 0;
    for (long n = 1; n <= checkpoints.back(); ++n) {
        sum += table.at(n).value.with_precision(bits + 32) * weight_for_shift(n, b.with_precision(bits + 32));
        while (next < checkpoints.size() && checkpoints[next] == n) {
            out.push_back(sum.with_precision(bits));
            ++next;
        }
    }
    return out;
}

SeriesTail series_tail(const ComplexPoint& s, const MpReal& shift, const std::vector<MpComplex>& terms) {
    const long n_terms = static_cast<long>(terms.size());
    if (n_terms < 2) throw DomainError("series_tail: need at least two terms");
    const long bits = std::max(s.precision(), shift.precision());
    SeriesTail out{MpReal(bits), MpReal(bits), false};
    const double sigma = s.re().to_double();
    const double b = shift.to_double();

    // fitted: |term_n| ~ C n^(-1-b) (log n)^(sigma-1)
    double c_fit = 0.0;
    for (long n = std::max(2L, n_terms - kFitWindow + 1); n <= n_terms; ++n) {
        const double mag = abs(terms[static_cast<size_t>(n - 1)]).to_double();
        const double ln = std::log(static_cast<double>(n));
        c_fit = std::max(c_fit, mag * std::pow(static_cast<double>(n), 1.0 + b) / std::pow(ln, sigma - 1.0));
    }
    const double big_n = static_cast<double>(n_terms);
    const double ln_n = std::log(big_n);
    const double growth = std::max(1.0, 1.0 + (sigma - 1.0) / (b * ln_n));
    out.fitted = MpReal::from(c_fit * std::pow(ln_n, sigma - 1.0) * std::pow(big_n, -b) / b * growth, bits);

    if (sigma > 0.0) {
        // |S_n| <= K_theta(n) Gamma(sigma) / ((b-theta)^sigma |Gamma(s)|), |w_n| <= (1+|b-1|)/n
        const MpReal sg = s.re().with_precision(bits);
        const MpReal g = abs(gamma(s.with_precision(bits)));
        out.rigorous = dominating_tail_bound(n_terms, sg, shift.with_precision(bits)) *
                       (abs(shift.with_precision(bits) - 1L) + 1L) / g;
        out.has_rigorous = true;
    }
    return out;
}

EvalResult phi_series(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg, SnCache* cache) {
    a.require_half_open_unit("phi_series");
    return run_series(s, shift_for(a, SeriesVariant::B, cfg.precision_bits), Method::Series, cfg, cache);
}

EvalResult phi_shifted_series(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg,
                              SnCache* cache) {
    a.require_closed_unit("phi_shifted_series");
    return run_series(s, shift_for(a, SeriesVariant::F, cfg.precision_bits), Method::ShiftedSeries, cfg, cache);
}

}  // namespace hurwitz

#include "hurwitz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hurwitz {

namespace {

struct TauRange {
    double lo;
    double hi;
};

// At tau_lo the weight x'(tau) ~ e^-tau exp(-e^-tau) is below 2^-bits; at
// tau_hi the scaled abscissa reaches X where e^-X times moderate polynomial
// factors is below 2^-bits.
TauRange tau_range(long bits) {
    const double pl = static_cast<double>(bits) * std::numbers::ln2;
    const double lo = -std::log(pl + 24.0 + std::log(pl + 24.0));
    const double x_max = 1.25 * pl + 100.0;
    const double hi = std::log(x_max) + 0.25;
    return {lo, hi};
}

struct NodeWithTau {
    double tau;
    QuadNode node;
};

std::vector<NodeWithTau> make_nodes(long bits, int level) {
    const TauRange range = tau_range(bits);
    const double h = QuadratureRule::step(level);
    std::vector<NodeWithTau> out;
    const long j_lo = static_cast<long>(std::floor(range.lo / h));
    const long j_hi = static_cast<long>(std::ceil(range.hi / h));
    for (long j = j_lo; j <= j_hi; ++j) {
        if (level > 0 && (j % 2 == 0)) continue;  // even j were introduced earlier
        const double tau = static_cast<double>(j) * h;
        // tau is an exact dyadic rational, so the MP abscissa is exact in it.
        const MpReal t = MpReal::from(tau, bits);
        const MpReal emt = exp(-t);
        const MpReal x = exp(t - emt);
        MpReal dx = x * (emt + 1L);
        out.push_back({tau, {x, std::move(dx)}});
    }
    return out;
}

}  // namespace

double QuadratureRule::step(int level) { return std::ldexp(1.0, -(level + 1)); }

std::vector<QuadNode> QuadratureRule::make_level(long bits, int level) {
    std::vector<QuadNode> out;
    for (auto& n : make_nodes(bits, level)) out.push_back(std::move(n.node));
    return out;
}

QuadratureRule::QuadratureRule(long bits, int levels) : bits_(bits) {
    if (levels < 0) throw DomainError("QuadratureRule: negative level count");
    for (int l = 0; l <= levels; ++l) levels_.push_back(make_level(bits, l));
}

QuadResult integrate_halfline(const HalflineIntegrand& f, int outputs, const HalflineHints& hints,
                              const EvalConfig& cfg, const QuadratureRule* rule) {
    if (outputs < 1) throw DomainError("integrate_halfline: need at least one output");
    if (!(hints.origin_rate > 0.0) || !(hints.tail_rate > 0.0)) {
        throw DomainError("integrate_halfline: decay rates must be positive (integrand not integrable)");
    }
    const long bits = cfg.precision_bits;
    if (rule != nullptr && rule->precision() < bits) {
        throw DomainError("integrate_halfline: rule precision below working precision");
    }
    const size_t m = static_cast<size_t>(outputs);
    const MpReal scale_near = 1L / MpReal::from(hints.origin_rate, bits);
    const MpReal scale_far = 1L / MpReal::from(hints.tail_rate, bits);
    const TauRange range = tau_range(bits);

    std::vector<MpComplex> acc(m, MpComplex(bits));
    std::vector<double> l1(m, 0.0);
    std::vector<MpComplex> prev;
    std::vector<MpComplex> out(m, MpComplex(bits));

    // Significant tau window per piece, learned from the coarse level.
    double near_lo = range.lo, near_hi = range.hi, far_lo = range.lo, far_hi = range.hi;
    double near_first = 1e300, near_last = -1e300, far_first = 1e300, far_last = -1e300;

    QuadResult result;
    result.values.assign(m, MpComplex(bits));
    result.errors.assign(m, MpReal(bits));

    const int max_level = rule ? std::min(cfg.quad_levels, rule->levels()) : cfg.quad_levels;
    for (int level = 0; level <= max_level; ++level) {
        std::vector<NodeWithTau> owned;
        std::vector<double> taus;
        const std::vector<QuadNode>* nodes = nullptr;
        std::vector<QuadNode> tmp;
        if (rule) {
            nodes = &rule->level(level);
            const double h = QuadratureRule::step(level);
            const long j_lo = static_cast<long>(std::floor(range.lo / h));
            const long j_hi = static_cast<long>(std::ceil(range.hi / h));
            for (long j = j_lo; j <= j_hi; ++j) {
                if (level > 0 && (j % 2 == 0)) continue;
                taus.push_back(static_cast<double>(j) * h);
            }
        } else {
            owned = make_nodes(bits, level);
            for (auto& n : owned) {
                taus.push_back(n.tau);
                tmp.push_back(std::move(n.node));
            }
            nodes = &tmp;
        }

        const double cutoff_log2 = -static_cast<double>(bits) - 16.0;
        for (size_t i = 0; i < nodes->size(); ++i) {
            const QuadNode& node = (*nodes)[i];
            const double tau = taus[i];

            // (0,1]: t = e^-u, dt = -t du
            if (tau >= near_lo && tau <= near_hi) {
                const MpReal u = node.x * scale_near;
                const MpReal log_t = -u;
                const MpReal t = exp(log_t);
                const MpReal jac = node.dx * scale_near * t;
                f(QuadPoint{t, log_t}, out);
                double mag = -1e300;
                for (size_t k = 0; k < m; ++k) {
                    const MpComplex w = out[k] * jac;
                    const double lg = abs(w).log2_abs();
                    mag = std::max(mag, lg);
                    if (std::isfinite(lg)) l1[k] += std::exp2(lg);
                    acc[k] += w;
                }
                if (level == 0 && mag > cutoff_log2) {
                    near_first = std::min(near_first, tau);
                    near_last = std::max(near_last, tau);
                }
                ++result.nodes;
            }
            // [1,inf): t = 1 + x
            if (tau >= far_lo && tau <= far_hi) {
                const MpReal x = node.x * scale_far;
                const MpReal t = x + 1L;
                const MpReal log_t = log1p(x);
                const MpReal jac = node.dx * scale_far;
                f(QuadPoint{t, log_t}, out);
                double mag = -1e300;
                for (size_t k = 0; k < m; ++k) {
                    const MpComplex w = out[k] * jac;
                    const double lg = abs(w).log2_abs();
                    mag = std::max(mag, lg);
                    if (std::isfinite(lg)) l1[k] += std::exp2(lg);
                    acc[k] += w;
                }
                if (level == 0 && mag > cutoff_log2) {
                    far_first = std::min(far_first, tau);
                    far_last = std::max(far_last, tau);
                }
                ++result.nodes;
            }
        }
        if (level == 0) {
            // Nodes beyond the last significant coarse node (plus a margin)
            // are skipped on finer levels.
            if (near_first <= near_last) {
                near_lo = std::max(range.lo, near_first - 1.0);
                near_hi = std::min(range.hi, near_last + 1.0);
            }
            if (far_first <= far_last) {
                far_lo = std::max(range.lo, far_first - 1.0);
                far_hi = std::min(range.hi, far_last + 1.0);
            }
        }

        const double h = QuadratureRule::step(level);
        const MpReal hm = MpReal::from(h, bits);
        std::vector<MpComplex> current(m, MpComplex(bits));
        for (size_t k = 0; k < m; ++k) current[k] = acc[k] * hm;

        result.level = level;
        if (!prev.empty()) {
            bool all_ok = true;
            for (size_t k = 0; k < m; ++k) {
                const MpReal diff = abs(current[k] - prev[k]);
                MpReal floor_err = MpReal::from(l1[k] * h, bits);
                floor_err = ldexp(floor_err, -(bits - 8));
                result.errors[k] = max(diff, floor_err);
                const MpReal tol = cfg.target_tol.with_precision(bits) * abs(current[k]) + floor_err;
                if (!(diff <= tol)) all_ok = false;
                if (!current[k].re().is_finite() || !current[k].im().is_finite()) {
                    throw DomainError("integrate_halfline: integrand produced a non-finite value");
                }
            }
            result.values = current;
            if (all_ok && level >= 3) {
                result.converged = true;
                return result;
            }
        } else {
            result.values = current;
            for (size_t k = 0; k < m; ++k) result.errors[k] = abs(current[k]);
        }
        prev = std::move(current);
    }
    return result;
}

QuadValue quad_halfline(const std::function<MpComplex(const QuadPoint&)>& f, const HalflineHints& hints,
                        const EvalConfig& cfg) {
    const auto wrapped = [&f](const QuadPoint& p, std::span<MpComplex> out) { out[0] = f(p); };
    QuadResult r = integrate_halfline(wrapped, 1, hints, cfg);
    if (!r.converged) {
        throw QuadratureAccuracyError("quad_halfline: no convergence after " + std::to_string(r.level) + " levels",
                                      r.values[0], r.errors[0]);
    }
    return {r.values[0], r.errors[0], r.nodes};
}

}  // namespace hurwitz

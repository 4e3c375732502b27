#include "hurwitz/sums.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/special.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace hurwitz {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Non-positive integer exponent -s = m >= 0 small enough for exact powers.
bool integer_power_exponent(const ComplexPoint& s, long& m) {
    if (!s.im().is_zero() || !s.re().is_integer() || s.re().sign() > 0) return false;
    if (s.re() < -4096L) return false;
    m = -s.re().to_long();
    return true;
}

// base^-s at precision `bits` (exact integer powers when s = -m).
MpComplex inverse_power(const MpReal& base, const ComplexPoint& s, bool integer_s, long m) {
    if (integer_s) return MpComplex(pow(base, m));
    return complex_pow(base, -s);
}

double log2_binomial(long n, long k) {
    return (std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
            std::lgamma(static_cast<double>(n - k) + 1.0)) /
           std::log(2.0);
}

long cancellation(double max_term_log2, const MpComplex& value, long work) {
    const double v = abs(value).log2_abs();
    if (!std::isfinite(v)) return work;
    return std::max(0L, static_cast<long>(std::ceil(max_term_log2 - v)));
}

// Rounding of an alternating sum of n terms with largest magnitude
// 2^max_term_log2 at `work` bits, then rounding to `bits`.
MpReal sum_error(double max_term_log2, long n, long work, const MpComplex& value, long bits) {
    MpReal err(bits);
    if (std::isfinite(max_term_log2)) {
        const double e = max_term_log2 + std::log2(static_cast<double>(n)) + 2.0 - static_cast<double>(work);
        err = ldexp(MpReal::from(1L, bits), static_cast<long>(std::ceil(e)));
    }
    return err + ldexp(abs(value).with_precision(bits), -bits);
}

void check_n(long n, const char* where) {
    if (n < 1) throw DomainError(std::string(where) + ": n must be >= 1");
}

}  // namespace

SnValue s_n_direct(long n, const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg) {
    check_n(n, "s_n_direct");
    a.require_half_open_unit("s_n_direct");
    const long bits = cfg.precision_bits;
    const long work = bits + n + 32;
    const MpComplex sw = s.with_precision(work);
    const MpReal aw = a.value().with_precision(work);
    long m = 0;
    const bool integer_s = integer_power_exponent(s, m);

    MpComplex sum(work);
    mpz_class binom = 1;
    double max_log2 = kNegInf;
    for (long k = 0; k < n; ++k) {
        const MpComplex term = inverse_power(aw + k, sw, integer_s, m) * MpReal::from(binom, work);
        max_log2 = std::max(max_log2, abs(term).log2_abs());
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
        binom = binom * (n - 1 - k) / (k + 1);
    }
    return {sum.with_precision(bits), sum_error(max_log2, n, work, sum, bits), cancellation(max_log2, sum, work)};
}

SnValue s_n_shifted(long n, const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg) {
    check_n(n, "s_n_shifted");
    a.require_half_open_unit("s_n_shifted");
    const long bits = cfg.precision_bits;
    const long work = bits + n + 32;
    const MpComplex sw = s.with_precision(work);
    const MpReal am1 = a.value().with_precision(work) - 1L;
    long m_pow = 0;
    const bool integer_s = integer_power_exponent(s, m_pow);

    MpComplex sum(work);
    mpz_class binom = n;  // C(n,1)
    double max_log2 = kNegInf;
    for (long m = 1; m <= n; ++m) {
        const MpComplex term = inverse_power(am1 + m, sw, integer_s, m_pow) * MpReal::from(mpz_class(binom * m), work);
        max_log2 = std::max(max_log2, abs(term).log2_abs());
        if (m % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
        binom = binom * (n - m) / (m + 1);
    }
    sum = -sum / n;
    max_log2 -= std::log2(static_cast<double>(n));
    return {sum.with_precision(bits), sum_error(max_log2, n, work, sum, bits), cancellation(max_log2, sum, work)};
}

mpq_class stirling_generalized(long n, int k, const mpq_class& a) {
    check_n(n, "stirling_generalized");
    if (k < 0) throw DomainError("stirling_generalized: k must be >= 0");
    if (n - 1 > k) return 0;  // (1-e^t)^(n-1) vanishes to order n-1 > k
    const size_t len = static_cast<size_t>(k) + 1;
    std::vector<mpq_class> fact(len);
    fact[0] = 1;
    for (size_t j = 1; j < len; ++j) fact[j] = fact[j - 1] * static_cast<long>(j);

    std::vector<mpq_class> one_minus_exp(len, mpq_class(0));
    for (size_t j = 1; j < len; ++j) one_minus_exp[j] = -1 / fact[j];

    std::vector<mpq_class> p(len, mpq_class(0));
    p[0] = 1;
    for (long r = 0; r < n - 1; ++r) {
        std::vector<mpq_class> q(len, mpq_class(0));
        for (size_t i = 0; i < len; ++i) {
            if (p[i] == 0) continue;
            for (size_t j = 1; i + j < len; ++j) q[i + j] += p[i] * one_minus_exp[j];
        }
        p = std::move(q);
    }
    mpq_class coef = 0;
    mpq_class apow = 1;  // a^j
    for (size_t j = 0; j < len; ++j) {
        coef += apow / fact[j] * p[len - 1 - j];
        apow *= a;
    }
    coef *= fact[len - 1];
    coef.canonicalize();
    return coef;
}

MpReal stirling_generalized(long n, int k, const ShiftParameter& a) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), a.value().get());
    const mpq_class v = stirling_generalized(n, k, q);
    // wide enough to hold most small exact values unrounded
    const long bits = std::max<long>(a.value().precision() + 64L * (k + 1), MpReal::kMinBits);
    return MpReal::from(v, bits);
}

MpComplex s_n_asymptotic(long n, const ComplexPoint& s, const ShiftParameter& a) {
    if (n < 3) throw DomainError("s_n_asymptotic: n must be >= 3");
    if (s.re().sign() <= 0) throw DomainError("s_n_asymptotic: requires Re(s) > 0");
    a.require_half_open_unit("s_n_asymptotic");
    const long bits = std::max(s.precision(), a.value().precision());
    const MpReal nn = MpReal::from(n, bits);
    const MpReal log_n = log(nn);
    // (log n)^(s-1) / Gamma(s): principal branch, log n > 0
    const MpComplex core = complex_pow(log_n, s.with_precision(bits) - 1L) / gamma(s.with_precision(bits));
    const MpReal av = a.value().with_precision(bits);
    if (av == 1L) return core / nn;
    return core * gamma(1L - av, bits) / pow(nn, av);
}

MpReal bound_split(const MpReal& a) {
    if (a > MpReal::from(0.5, 64)) return MpReal::from(0.5, a.precision());
    return a / 2L;
}

MpReal dominating_k_factor(long n, const MpReal& theta) {
    if (n < 1) throw DomainError("dominating_k_factor: n must be >= 1");
    if (theta.sign() <= 0) throw DomainError("dominating_k_factor: theta must be > 0");
    const MpReal x = theta / (theta + (n - 1));
    return pow(1L - x, n - 1) * pow(x, theta);
}

TruncationBound dominating_term_bound(long n, const MpReal& sigma, const ShiftParameter& a) {
    if (n < 2) throw DomainError("dominating_term_bound: n must be >= 2");
    if (sigma.sign() <= 0) throw DomainError("dominating_term_bound: sigma must be > 0");
    a.require_half_open_unit("dominating_term_bound");
    const long bits = std::max(sigma.precision(), a.value().precision());
    const MpReal av = a.value().with_precision(bits);
    const MpReal sg = sigma.with_precision(bits);
    const MpReal theta = bound_split(av);
    const MpReal bound = dominating_k_factor(n, theta) * gamma(sg, bits) / pow(av - theta, sg) / (n + 1);
    return {n, sg, av, bound};
}

MpReal dominating_tail_bound(long n_terms, const MpReal& sigma, const MpReal& a) {
    if (n_terms < 1) throw DomainError("dominating_tail_bound: N must be >= 1");
    if (sigma.sign() <= 0) throw DomainError("dominating_tail_bound: sigma must be > 0");
    if (a.sign() <= 0) throw DomainError("dominating_tail_bound: shift must be > 0");
    const long bits = std::max(sigma.precision(), a.precision());
    const MpReal theta = bound_split(a.with_precision(bits));
    const MpReal nn = MpReal::from(n_terms, bits);
    const MpReal c = gamma(sigma.with_precision(bits), bits) / pow(a.with_precision(bits) - theta, sigma) *
                     pow(theta, theta);
    const MpReal n_th = pow(nn, -theta);
    return c * (n_th / nn + n_th / theta);
}

BulkSn s_n_bulk(const ComplexPoint& s, const MpReal& shift, long n_from, long n_to, long bits) {
    if (n_from < 1 || n_to < n_from) throw DomainError("s_n_bulk: need 1 <= n_from <= n_to");
    if (shift.sign() <= 0) throw DomainError("s_n_bulk: shift must be > 0");
    const double sigma = s.re().to_double();
    const double y = s.im().to_double();
    const double b = shift.to_double();
    const double origin = sigma + static_cast<double>(n_from) - 1.0;
    if (!(origin > 0.0)) throw DomainError("s_n_bulk: requires Re(s) > 1 - n");

    BulkSn out;
    const size_t count = static_cast<size_t>(n_to - n_from + 1);
    std::complex<double> inv_gamma(0.0, 0.0);
    try {
        const MpComplex g = MpComplex(MpReal::from(1L, std::max(bits, 128L))) / gamma(s.with_precision(std::max(bits, 128L)));
        inv_gamma = {g.re().to_double(), g.im().to_double()};
    } catch (const PoleError&) {
        // 1/Gamma vanishes: every S_n with n > -s is 0
    }
    if (inv_gamma == std::complex<double>(0.0, 0.0)) {
        out.values.assign(count, MpComplex(bits));
        out.errors.assign(count, MpReal(bits));
        return out;
    }

    // Integrand (1-e^-t)^(n-1) e^-bt t^(s-1) on t = exp(tau - e^-tau).
    // Near 0 it behaves like t^(origin-1); far out like t^(sigma-1) e^-bt.
    const double tau_lo = -std::log(50.0 / origin + 1.0) - 0.5;
    double t_max = 60.0 / b;
    for (int it = 0; it < 6; ++it) t_max = (60.0 + std::max(0.0, sigma - 1.0) * std::log(t_max)) / b;
    const double tau_hi = std::log(t_max) + 0.5;
    constexpr double h = 1.0 / 64.0;
    const long j_lo = static_cast<long>(std::ceil(tau_lo / h));
    const long j_hi = static_cast<long>(std::floor(tau_hi / h));

    struct Node {
        double mag;
        double q;
        double c;
        double s;
        bool coarse;
    };
    std::vector<Node> nodes;
    for (long j = j_lo; j <= j_hi; ++j) {
        const double tau = static_cast<double>(j) * h;
        const double emt = std::exp(-tau);
        const double lt = tau - emt;
        const double t = std::exp(lt);
        const double lq = std::log(-std::expm1(-t));
        const double lw = lt + std::log1p(emt) - b * t + (sigma - 1.0) * lt;
        const double l0 = static_cast<double>(n_from - 1) * lq + lw;
        const double mag = l0 < -700.0 ? 0.0 : std::exp(l0);
        nodes.push_back({mag, std::exp(lq), std::cos(y * lt), std::sin(y * lt), j % 2 == 0});
    }

    out.values.reserve(count);
    out.errors.reserve(count);
    size_t first = 0;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (long n = n_from; n <= n_to; ++n) {
        std::complex<double> fine(0.0, 0.0), coarse(0.0, 0.0);
        double l1 = 0.0;
        while (first < nodes.size() && nodes[first].mag == 0.0) ++first;
        for (size_t j = first; j < nodes.size(); ++j) {
            Node& nd = nodes[j];
            const double m = nd.mag;
            if (m != 0.0) {
                const std::complex<double> v(m * nd.c, m * nd.s);
                fine += v;
                if (nd.coarse) coarse += v;
                l1 += m;
                nd.mag = m * nd.q;
                if (nd.mag < 1e-290) nd.mag = 0.0;
            }
        }
        fine *= h;
        coarse *= 2.0 * h;
        l1 *= h;
        const std::complex<double> value = inv_gamma * fine;
        const double err = std::abs(inv_gamma) *
                           (std::abs(fine - coarse) + 8.0 * eps * l1 * std::sqrt(static_cast<double>(nodes.size())));
        out.values.push_back(MpComplex::from(value.real(), value.imag(), bits));
        out.errors.push_back(MpReal::from(err, bits));
    }
    return out;
}

SnTable::SnTable(const ComplexPoint& s, const MpReal& shift, long n_max, const EvalConfig& cfg)
    : s_(s), shift_(shift), bits_(cfg.precision_bits) {
    if (n_max < 1) throw DomainError("SnTable: n_max must be >= 1");
    if (shift.sign() <= 0) throw DomainError("SnTable: shift must be > 0");
    const long n_exact = std::min(n_max, kExactLimit);
    const long work = bits_ + n_exact + 32;
    const MpComplex sw = s.with_precision(work);
    const MpReal bw = shift.with_precision(work);
    long m_pow = 0;
    const bool integer_s = integer_power_exponent(s, m_pow);
    const double sigma = s.re().to_double();
    const double b = shift.to_double();

    std::vector<MpComplex> v;
    std::vector<double> log2_v;
    v.reserve(static_cast<size_t>(n_exact));
    for (long k = 0; k < n_exact; ++k) {
        v.push_back(inverse_power(bw + k, sw, integer_s, m_pow));
        log2_v.push_back(-sigma * std::log2(static_cast<double>(k) + b));
    }
    entries_.reserve(static_cast<size_t>(n_max));
    double max_v = kNegInf;
    for (long m = 1; m <= n_exact; ++m) {
        max_v = std::max(max_v, log2_v[static_cast<size_t>(m - 1)]);
        const MpComplex value = v[0];
        double max_term = kNegInf;
        for (long k = 0; k < m; ++k) {
            max_term = std::max(max_term, log2_binomial(m - 1, k) + log2_v[static_cast<size_t>(k)]);
        }
        // Row j of the difference triangle is bounded by 2^j max|v|; each
        // level adds one rounding of that size.
        MpReal err(bits_);
        const double e = static_cast<double>(m - 1) + std::log2(static_cast<double>(m)) + 1.0 + max_v -
                         static_cast<double>(work);
        err = ldexp(MpReal::from(1L, bits_), static_cast<long>(std::ceil(e))) +
              ldexp(abs(value).with_precision(bits_), -bits_);
        entries_.push_back({m, value.with_precision(bits_), err, cancellation(max_term, value, work)});
        for (long k = 0; k + 1 < n_exact - m + 1; ++k) v[static_cast<size_t>(k)] -= v[static_cast<size_t>(k + 1)];
    }
    if (n_max > n_exact) {
        BulkSn bulk = s_n_bulk(s, shift, n_exact + 1, n_max, bits_);
        for (size_t i = 0; i < bulk.values.size(); ++i) {
            const long n = n_exact + 1 + static_cast<long>(i);
            // the integral form has no alternating cancellation
            entries_.push_back({n, std::move(bulk.values[i]), std::move(bulk.errors[i]), 0});
        }
    }
}

std::shared_ptr<const SnTable> SnCache::get(const ComplexPoint& s, const MpReal& shift, long n_max,
                                            const EvalConfig& cfg) {
    const int digits = static_cast<int>(cfg.precision_bits / 3 + 8);
    const Key key{s.re().to_string(digits), s.im().to_string(digits), shift.to_string(digits), cfg.precision_bits};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(key);
    if (it != tables_.end() && it->second->size() >= n_max) return it->second;
    auto table = std::make_shared<const SnTable>(s, shift, n_max, cfg);
    tables_[key] = table;
    return table;
}

size_t SnCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return tables_.size();
}

}  // namespace hurwitz

#pragma once

// Alternating binomial sums
//   S_n(s,a) = sum_{k=0}^{n-1} (-1)^k C(n-1,k) (k+a)^-s
//            = (1/Gamma(s)) int_0^inf (1-e^-t)^(n-1) e^-at t^(s-1) dt,
// so S_1 = a^-s. The sums lose about n bits to cancellation, which the
// direct evaluators absorb by working at precision + n + 32 bits.

#include "hurwitz/config.hpp"
#include "hurwitz/mp.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace hurwitz {

/// One alternating sum with its absolute error and the measured
/// cancellation: log2(max_k |C(n-1,k)(k+a)^-s|) - log2|S_n|, floored at 0.
struct SnValue {
    MpComplex value;
    MpReal err;
    long cancellation_bits = 0;
};

/// Direct binomial sum at cfg.precision_bits + n + 32 internal bits.
/// Non-positive integer s uses exact integer powers, so for dyadic a the
/// vanishing sums come out exactly 0.
SnValue s_n_direct(long n, const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg);

/// The same sum written as -(1/n) sum_{m=1}^{n} C(n,m) (-1)^m m (m+a-1)^-s.
SnValue s_n_shifted(long n, const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg);

/// S_n(-k,a) = d^k/dt^k [e^{at} (1-e^t)^(n-1)] at t = 0, in exact rationals.
mpq_class stirling_generalized(long n, int k, const mpq_class& a);
/// As above for a held in binary floating point (converted exactly).
MpReal stirling_generalized(long n, int k, const ShiftParameter& a);

/// Large-n estimate Gamma(1-a) / (n^a (log n)^(1-s) Gamma(s)) for 0<a<1,
/// and 1 / (n (log n)^(1-s) Gamma(s)) for a = 1. Integer s = k reduces
/// to Gamma(1-a) (log n)^(k-1) / (n^a (k-1)!). Requires n >= 3, Re s > 0.
MpComplex s_n_asymptotic(long n, const ComplexPoint& s, const ShiftParameter& a);

struct TruncationBound {
    long n = 0;
    MpReal sigma;
    MpReal a;
    MpReal bound;
};

/// Split exponent theta of the dominating bound: 1/2 for a > 1/2, else a/2.
MpReal bound_split(const MpReal& a);

/// K_theta(n) = max_{t>0} (1-e^-t)^(n-1) e^(-theta t)
///            = (1-x)^(n-1) x^theta with x = theta/(n-1+theta).
/// For theta = 1/2 this is (1 - 1/(2n-1))^(n-1) / sqrt(2n-1).
MpReal dominating_k_factor(long n, const MpReal& theta);

/// Bound on int (1-e^-t)^(n-1) e^-at t^(sigma-1) dt / (n+1):
/// K_theta(n) Gamma(sigma) / ((a-theta)^sigma (n+1)). n >= 2, sigma > 0.
TruncationBound dominating_term_bound(long n, const MpReal& sigma, const ShiftParameter& a);

/// Upper bound of sum_{n>N} K_theta(n) Gamma(sigma) / ((a-theta)^sigma n),
/// from K_theta(n) <= theta^theta (n-1)^-theta. Valid for any shift a > 0.
MpReal dominating_tail_bound(long n_terms, const MpReal& sigma, const MpReal& a);

/// Cached S_1..S_N at one (s, a, precision). Entries n <= exact_limit come
/// from the exact difference triangle; larger n are evaluated in bulk from
/// the integral form on a double-precision DE grid (about 1e-13 relative),
/// with an error estimate from halving the step.
class SnTable {
public:
    static constexpr long kExactLimit = 256;

    struct Entry {
        long n;
        MpComplex value;
        MpReal err;
        long cancellation_bits;
    };

    /// `shift` may be any real > 0 (shifted series use a+1).
    SnTable(const ComplexPoint& s, const MpReal& shift, long n_max, const EvalConfig& cfg);

    const ComplexPoint& s() const { return s_; }
    const MpReal& shift() const { return shift_; }
    long precision() const { return bits_; }
    long size() const { return static_cast<long>(entries_.size()); }
    /// Entry n (1-based).
    const Entry& at(long n) const { return entries_.at(static_cast<size_t>(n - 1)); }
    const std::vector<Entry>& entries() const { return entries_; }

private:
    ComplexPoint s_;
    MpReal shift_;
    long bits_;
    std::vector<Entry> entries_;
};

/// User-owned memo of tables keyed by (s, a, precision); a request for
/// more terms than cached rebuilds the entry. Thread safe.
class SnCache {
public:
    std::shared_ptr<const SnTable> get(const ComplexPoint& s, const MpReal& shift, long n_max, const EvalConfig& cfg);
    size_t size() const;

private:
    using Key = std::tuple<std::string, std::string, std::string, long>;
    mutable std::mutex mu_;
    std::map<Key, std::shared_ptr<const SnTable>> tables_;
};

/// S_n for n_from <= n <= n_to on the double-precision grid; values and
/// absolute errors are returned in parallel vectors (index n - n_from).
/// Requires Re s > 1 - n_from.
struct BulkSn {
    std::vector<MpComplex> values;
    std::vector<MpReal> errors;
};
BulkSn s_n_bulk(const ComplexPoint& s, const MpReal& shift, long n_from, long n_to, long bits);

}  // namespace hurwitz

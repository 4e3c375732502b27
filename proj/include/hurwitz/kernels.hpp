#pragma once

// Integrand kernels of the zeta representations.
//
// With B(t) = t/(e^t - 1) the kernel is psi(t) = (a-1) B(t) - B'(t), and
// psi(t) e^{-(a-1)t} = F'(t) for
//   F(t) = -t e^{(1-a)t} / (e^t - 1) = -sum_m B_m(1-a) t^m / m!.
// F(0) = -1 and F(inf) = 0, so the kernel integrates to 1 on (0, inf).
// eta is psi for the shift a+1, i.e. the kernel of zeta(s,a) - a^-s.
//
// Below t = 1/4 everything is summed from Bernoulli series (radius 2 pi);
// above, closed forms and truncated power series (jets) are used.

#include "hurwitz/config.hpp"
#include "hurwitz/mp.hpp"

#include <vector>

namespace hurwitz {

inline constexpr int kMaxDerivativeOrder = 32;
inline constexpr int kMaxKernelSeriesTerms = 256;

/// Taylor coefficients of g(t+h) = psi(t+h) e^{-(a-1)(t+h)} in h:
/// coeffs[n] = g^(n)(t) / n!.
struct KernelJet {
    MpReal t;
    int order = 0;
    std::vector<MpReal> coeffs;
};

/// Kernel evaluation for one shift at one precision. Coefficient tables are
/// built once; evaluation is const and thread safe.
class KernelEvaluator {
public:
    /// a must lie in [0,1]; `max_order` bounds derivative orders (<= 32).
    KernelEvaluator(const ShiftParameter& a, long bits, int max_order = 0);

    long precision() const { return bits_; }
    const MpReal& shift() const { return a_; }
    int max_order() const { return max_order_; }

    MpReal psi(const MpReal& t) const;
    MpReal eta(const MpReal& t) const;
    /// d^k/dt^k [psi(t) e^{-(a-1)t}], 0 <= k <= max_order.
    MpReal derivative(int k, const MpReal& t) const;
    KernelJet jet(const MpReal& t, int order) const;

private:
    // c B(t) - B'(t)
    MpReal slope_kernel(const MpReal& c, const MpReal& t) const;
    // f_j = F^(j)(t)/j! for j <= order
    std::vector<MpReal> antiderivative_jet(const MpReal& t, int order) const;

    MpReal a_;
    long bits_;
    long work_;
    int max_order_;
    std::vector<MpReal> bern_;       // B_m / m!
    std::vector<MpReal> bern_poly_;  // B_m(1-a) / m!
};

/// Free-function forms evaluated at the precision of t.
MpReal psi(const MpReal& t, const ShiftParameter& a);
MpReal eta(const MpReal& t, const ShiftParameter& a);
MpReal integrand_derivative(int k, const MpReal& t, const ShiftParameter& a);

/// The two log-series identities behind the kernel, with q = 1 - e^-t:
///   InverseN:        t e^-t / q           = sum_{n>=1} q^(n-1) e^-t / n
///   InverseNPlusOne: t e^-t / q^2 - e^-t/q = sum_{n>=1} q^(n-1) e^-t / (n+1)
enum class Identity { InverseN, InverseNPlusOne };

struct IdentityCheck {
    MpReal lhs;
    MpReal partial_rhs;  // first N terms
    MpReal tail_bound;   // q^N / N, a geometric majorant of the remainder
};

/// Internal precision is raised so that rounding stays below the tail bound.
IdentityCheck identity_lhs_rhs(Identity which, const MpReal& t, long n_terms);

}  // namespace hurwitz

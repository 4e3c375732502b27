#pragma once

#include "hurwitz/errors.hpp"
#include "hurwitz/mp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

/// Working precision, truncation limits and tolerance for one evaluation.
struct EvalConfig {
    long precision_bits = 153;  // for_digits(30)
    long max_terms = 100000;
    int quad_levels = 10;
    MpReal target_tol = MpReal::parse("1e-30", 153);

    /// Config for `digits` requested decimal digits. Internal precision is
    /// ceil(1.2*digits)+10 decimal digits; target_tol is 10^-digits.
    static EvalConfig for_digits(int digits);

    /// Requested decimal digits implied by target_tol (for formatting).
    int digits() const;

    /// Same settings at a different precision (target unchanged).
    EvalConfig with_precision(long bits) const;

    /// Throws DomainError when an invariant is broken.
    void validate() const;
};

long bits_for_digits(double digits);

/// The Hurwitz shift a. Range checks live in the operations because the
/// admissible interval differs between representations.
class ShiftParameter {
public:
    explicit ShiftParameter(MpReal a) : a_(std::move(a)) {}
    const MpReal& value() const { return a_; }

    bool in_half_open_unit() const { return a_.sign() > 0 && a_ <= 1L; }  // (0,1]
    bool in_closed_unit() const { return a_.sign() >= 0 && a_ <= 1L; }     // [0,1]

    void require_half_open_unit(const char* where) const;
    void require_closed_unit(const char* where) const;

private:
    MpReal a_;
};

enum class Method {
    Integral,          // psi-kernel integral, Re s > 0
    Continued,         // integration-by-parts continuation
    ShiftedIntegral,   // zeta(s,a) - a^-s, integral form
    Series,            // alternating-sum series
    ShiftedSeries,     // zeta(s,a) - a^-s, series form
    DirichletOracle,
    ClassicalIntegralOracle,
    BernoulliOracle,   // non-positive integer s
};

std::string to_string(Method m);

/// Value of phi(s,a) = (s-1) zeta(s,a) (or of the shifted variant
/// (s-1)(zeta(s,a) - a^-s)) together with zeta itself.
struct EvalResult {
    MpComplex phi;
    std::optional<MpComplex> zeta;  // empty at the pole s = 1
    MpReal err_estimate;            // absolute, on phi
    MpReal zeta_err;                // absolute, on zeta (0 at the pole)
    Method method = Method::Integral;
    long terms_or_nodes = 0;
    bool convergence_caveat = false;  // series used where no tail bound exists
    std::vector<std::string> warnings;

    bool pole() const { return !zeta.has_value(); }
};

/// Fills zeta = phi/(s-1) and its error, or marks the pole when s == 1.
void attach_zeta(EvalResult& r, const ComplexPoint& s);

/// Thrown when an evaluation misses its accuracy target; carries the
/// partial result with its honest error estimate.
class EvalAccuracyError : public AccuracyError {
public:
    EvalAccuracyError(const std::string& what, EvalResult partial)
        : AccuracyError(what), partial_(std::move(partial)) {}
    const EvalResult& partial() const { return partial_; }

private:
    EvalResult partial_;
};

}  // namespace hurwitz

#pragma once

// Configurable-precision real and complex arithmetic over MPFR.
//
// Every value carries its own precision. Binary operations produce a result
// at the larger of the two operand precisions; scalar operands (long,
// double) never lower it. There is no ambient/global precision.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace hurwitz {

class MpReal {
public:
    static constexpr long kMinBits = 64;

    /// Zero at the given precision (clamped to at least kMinBits).
    explicit MpReal(long bits = kMinBits);
    MpReal(const MpReal& other);
    MpReal(MpReal&& other) noexcept;
    MpReal& operator=(const MpReal& other);
    MpReal& operator=(MpReal&& other) noexcept;
    ~MpReal();

    static MpReal from(double v, long bits);
    static MpReal from(long v, long bits);
    static MpReal from(int v, long bits) { return from(static_cast<long>(v), bits); }
    static MpReal from(const mpz_class& v, long bits);
    static MpReal from(const mpq_class& v, long bits);
    /// Decimal (or any strtod-style) string; throws DomainError on garbage.
    static MpReal parse(std::string_view text, long bits);

    static MpReal pi(long bits);
    static MpReal euler_gamma(long bits);
    static MpReal log2_const(long bits);

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    /// Copy rounded (or zero-extended) to another precision.
    MpReal with_precision(long bits) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    /// log2|x| as a double; -inf for zero.
    double log2_abs() const;
    /// Significand digits in base 10, round-half-even, scientific notation.
    std::string to_string(int digits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    MpReal operator-() const;
    MpReal& operator+=(const MpReal& o);
    MpReal& operator-=(const MpReal& o);
    MpReal& operator*=(const MpReal& o);
    MpReal& operator/=(const MpReal& o);

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
    void promote_to(long bits);
};

MpReal operator+(const MpReal& x, const MpReal& y);
MpReal operator-(const MpReal& x, const MpReal& y);
MpReal operator*(const MpReal& x, const MpReal& y);
MpReal operator/(const MpReal& x, const MpReal& y);

MpReal operator+(const MpReal& x, long y);
MpReal operator-(const MpReal& x, long y);
MpReal operator-(long x, const MpReal& y);
MpReal operator*(const MpReal& x, long y);
MpReal operator/(const MpReal& x, long y);
MpReal operator/(long x, const MpReal& y);
inline MpReal operator+(long x, const MpReal& y) { return y + x; }
inline MpReal operator*(long x, const MpReal& y) { return y * x; }

MpReal operator*(const MpReal& x, double y);
inline MpReal operator*(double x, const MpReal& y) { return y * x; }

bool operator==(const MpReal& x, const MpReal& y);
std::partial_ordering operator<=>(const MpReal& x, const MpReal& y);
bool operator==(const MpReal& x, long y);
std::partial_ordering operator<=>(const MpReal& x, long y);
std::partial_ordering operator<=>(const MpReal& x, double y);

// Plain int literals forward to the long overloads.
template <std::integral I> MpReal operator+(const MpReal& x, I y) { return x + static_cast<long>(y); }
template <std::integral I> MpReal operator-(const MpReal& x, I y) { return x - static_cast<long>(y); }
template <std::integral I> MpReal operator*(const MpReal& x, I y) { return x * static_cast<long>(y); }
template <std::integral I> MpReal operator/(const MpReal& x, I y) { return x / static_cast<long>(y); }
template <std::integral I> MpReal operator+(I x, const MpReal& y) { return static_cast<long>(x) + y; }
template <std::integral I> MpReal operator-(I x, const MpReal& y) { return static_cast<long>(x) - y; }
template <std::integral I> MpReal operator*(I x, const MpReal& y) { return static_cast<long>(x) * y; }
template <std::integral I> MpReal operator/(I x, const MpReal& y) { return static_cast<long>(x) / y; }
template <std::integral I> bool operator==(const MpReal& x, I y) { return x == static_cast<long>(y); }
template <std::integral I> std::partial_ordering operator<=>(const MpReal& x, I y) {
    return x <=> static_cast<long>(y);
}

MpReal abs(const MpReal& x);
MpReal sqrt(const MpReal& x);
MpReal exp(const MpReal& x);
MpReal expm1(const MpReal& x);
MpReal log(const MpReal& x);
MpReal log1p(const MpReal& x);
MpReal pow(const MpReal& x, const MpReal& y);
MpReal pow(const MpReal& x, long n);
MpReal sin(const MpReal& x);
MpReal cos(const MpReal& x);
MpReal sinh(const MpReal& x);
MpReal cosh(const MpReal& x);
MpReal atan2(const MpReal& y, const MpReal& x);
MpReal floor(const MpReal& x);
MpReal ceil(const MpReal& x);
MpReal ldexp(const MpReal& x, long e);
MpReal max(const MpReal& x, const MpReal& y);
MpReal min(const MpReal& x, const MpReal& y);

/// Complex value with both parts at a shared precision.
class MpComplex {
public:
    explicit MpComplex(long bits = MpReal::kMinBits);
    MpComplex(MpReal re, MpReal im);
    explicit MpComplex(MpReal re);

    static MpComplex from(double re, double im, long bits);

    const MpReal& re() const { return re_; }
    const MpReal& im() const { return im_; }
    long precision() const { return re_.precision(); }
    MpComplex with_precision(long bits) const;

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    MpComplex operator-() const;
    MpComplex& operator+=(const MpComplex& o);
    MpComplex& operator-=(const MpComplex& o);
    MpComplex& operator*=(const MpComplex& o);
    MpComplex& operator*=(const MpReal& o);
    MpComplex& operator/=(const MpComplex& o);

private:
    MpReal re_;
    MpReal im_;
};

using ComplexPoint = MpComplex;

MpComplex operator+(const MpComplex& x, const MpComplex& y);
MpComplex operator-(const MpComplex& x, const MpComplex& y);
MpComplex operator*(const MpComplex& x, const MpComplex& y);
MpComplex operator/(const MpComplex& x, const MpComplex& y);
MpComplex operator+(const MpComplex& x, const MpReal& y);
MpComplex operator-(const MpComplex& x, const MpReal& y);
MpComplex operator*(const MpComplex& x, const MpReal& y);
MpComplex operator/(const MpComplex& x, const MpReal& y);
inline MpComplex operator*(const MpReal& x, const MpComplex& y) { return y * x; }
MpComplex operator+(const MpComplex& x, long y);
MpComplex operator-(const MpComplex& x, long y);
MpComplex operator*(const MpComplex& x, long y);
MpComplex operator/(const MpComplex& x, long y);

template <std::integral I> MpComplex operator+(const MpComplex& x, I y) { return x + static_cast<long>(y); }
template <std::integral I> MpComplex operator-(const MpComplex& x, I y) { return x - static_cast<long>(y); }
template <std::integral I> MpComplex operator*(const MpComplex& x, I y) { return x * static_cast<long>(y); }
template <std::integral I> MpComplex operator/(const MpComplex& x, I y) { return x / static_cast<long>(y); }

bool operator==(const MpComplex& x, const MpComplex& y);

MpReal abs(const MpComplex& z);
MpReal norm(const MpComplex& z);  // |z|^2
MpReal arg(const MpComplex& z);
MpComplex conj(const MpComplex& z);
MpComplex exp(const MpComplex& z);
/// Principal branch.
MpComplex log(const MpComplex& z);
MpComplex sin(const MpComplex& z);
MpComplex sqrt(const MpComplex& z);
/// base^exponent for a real base > 0: exp(exponent * log(base)).
MpComplex pow(const MpReal& base, const MpComplex& exponent);
MpComplex pow(const MpComplex& z, long n);

/// Real/imag formatting helpers.
std::string to_string(const MpComplex& z, int digits);

}  // namespace hurwitz

#include "hurwitz/mp.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace hurwitz {

namespace {

long clamp_bits(long bits) { return std::max(bits, MpReal::kMinBits); }

long max_prec(const MpReal& x, const MpReal& y) {
    return std::max(x.precision(), y.precision());
}

}  // namespace

MpReal::MpReal(long bits) {
    mpfr_init2(v_, clamp_bits(bits));
    mpfr_set_zero(v_, 1);
}

MpReal::MpReal(const MpReal& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

// A moved-from value keeps a null limb pointer; it may only be destroyed or
// assigned to.
MpReal::MpReal(MpReal&& other) noexcept {
    *v_ = *other.v_;
    other.v_->_mpfr_d = nullptr;
}

MpReal& MpReal::operator=(const MpReal& other) {
    if (this == &other) return *this;
    if (v_->_mpfr_d == nullptr) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
    } else if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    }
    mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
}

MpReal& MpReal::operator=(MpReal&& other) noexcept {
    if (this == &other) return *this;
    if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
    *v_ = *other.v_;
    other.v_->_mpfr_d = nullptr;
    return *this;
}

MpReal::~MpReal() {
    if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
}

void MpReal::promote_to(long bits) {
    if (bits > precision()) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

MpReal MpReal::from(double v, long bits) {
    MpReal r(bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

MpReal MpReal::from(long v, long bits) {
    MpReal r(bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

MpReal MpReal::from(const mpz_class& v, long bits) {
    MpReal r(bits);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

MpReal MpReal::from(const mpq_class& v, long bits) {
    MpReal r(bits);
    mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

MpReal MpReal::parse(std::string_view text, long bits) {
    std::string s(text);
    MpReal r(bits);
    if (s.empty()) throw DomainError("empty number");
    char* end = nullptr;
    mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (end == s.c_str() || *end != '\0') throw DomainError("not a number: '" + s + "'");
    if (!r.is_finite()) throw DomainError("non-finite value: '" + s + "'");
    return r;
}

MpReal MpReal::pi(long bits) {
    MpReal r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

MpReal MpReal::euler_gamma(long bits) {
    MpReal r(bits);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
}

MpReal MpReal::log2_const(long bits) {
    MpReal r(bits);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

MpReal MpReal::with_precision(long bits) const {
    MpReal r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

double MpReal::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

std::string MpReal::to_string(int digits) const {
    digits = std::max(digits, 1);
    if (is_zero()) return "0";
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string out;
    if (mant.front() == '-') {
        out.push_back('-');
        mant.erase(mant.begin());
    }
    // mant holds `digits` significant digits d1 d2 ...; value = 0.d1d2... * 10^exp10
    const long e = static_cast<long>(exp10) - 1;
    if (e >= -5 && e < digits) {
        if (e >= 0) {
            out += mant.substr(0, static_cast<size_t>(e + 1));
            if (static_cast<size_t>(e + 1) < mant.size()) out += "." + mant.substr(static_cast<size_t>(e + 1));
        } else {
            out += "0." + std::string(static_cast<size_t>(-e - 1), '0') + mant;
        }
    } else {
        out += mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += (e < 0 ? "e-" : "e+") + std::to_string(std::labs(e));
    }
    return out;
}

MpReal MpReal::operator-() const {
    MpReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

MpReal& MpReal::operator+=(const MpReal& o) {
    promote_to(o.precision());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

MpReal& MpReal::operator-=(const MpReal& o) {
    promote_to(o.precision());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

MpReal& MpReal::operator*=(const MpReal& o) {
    promote_to(o.precision());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

MpReal& MpReal::operator/=(const MpReal& o) {
    promote_to(o.precision());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

#define HURWITZ_BINARY(op, fn)                                  \
    MpReal operator op(const MpReal& x, const MpReal& y) {      \
        MpReal r(max_prec(x, y));                               \
        fn(r.get(), x.get(), y.get(), MPFR_RNDN);               \
        return r;                                               \
    }
HURWITZ_BINARY(+, mpfr_add)
HURWITZ_BINARY(-, mpfr_sub)
HURWITZ_BINARY(*, mpfr_mul)
HURWITZ_BINARY(/, mpfr_div)
#undef HURWITZ_BINARY

MpReal operator+(const MpReal& x, long y) {
    MpReal r(x.precision());
    mpfr_add_si(r.get(), x.get(), y, MPFR_RNDN);
    return r;
}

MpReal operator-(const MpReal& x, long y) {
    MpReal r(x.precision());
    mpfr_sub_si(r.get(), x.get(), y, MPFR_RNDN);
    return r;
}

MpReal operator-(long x, const MpReal& y) {
    MpReal r(y.precision());
    mpfr_si_sub(r.get(), x, y.get(), MPFR_RNDN);
    return r;
}

MpReal operator*(const MpReal& x, long y) {
    MpReal r(x.precision());
    mpfr_mul_si(r.get(), x.get(), y, MPFR_RNDN);
    return r;
}

MpReal operator/(const MpReal& x, long y) {
    MpReal r(x.precision());
    mpfr_div_si(r.get(), x.get(), y, MPFR_RNDN);
    return r;
}

MpReal operator/(long x, const MpReal& y) {
    MpReal r(y.precision());
    mpfr_si_div(r.get(), x, y.get(), MPFR_RNDN);
    return r;
}

MpReal operator*(const MpReal& x, double y) {
    MpReal r(x.precision());
    mpfr_mul_d(r.get(), x.get(), y, MPFR_RNDN);
    return r;
}

bool operator==(const MpReal& x, const MpReal& y) { return mpfr_equal_p(x.get(), y.get()) != 0; }

std::partial_ordering operator<=>(const MpReal& x, const MpReal& y) {
    if (mpfr_unordered_p(x.get(), y.get())) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(x.get(), y.get());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const MpReal& x, long y) { return mpfr_cmp_si(x.get(), y) == 0; }

std::partial_ordering operator<=>(const MpReal& x, long y) {
    if (mpfr_nan_p(x.get())) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(x.get(), y);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const MpReal& x, double y) {
    if (mpfr_nan_p(x.get()) || std::isnan(y)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_d(x.get(), y);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define HURWITZ_UNARY(name, fn)                      \
    MpReal name(const MpReal& x) {                   \
        MpReal r(x.precision());                     \
        fn(r.get(), x.get(), MPFR_RNDN);             \
        return r;                                    \
    }
HURWITZ_UNARY(abs, mpfr_abs)
HURWITZ_UNARY(sqrt, mpfr_sqrt)
HURWITZ_UNARY(exp, mpfr_exp)
HURWITZ_UNARY(expm1, mpfr_expm1)
HURWITZ_UNARY(log, mpfr_log)
HURWITZ_UNARY(log1p, mpfr_log1p)
HURWITZ_UNARY(sin, mpfr_sin)
HURWITZ_UNARY(cos, mpfr_cos)
HURWITZ_UNARY(sinh, mpfr_sinh)
HURWITZ_UNARY(cosh, mpfr_cosh)
#undef HURWITZ_UNARY

MpReal floor(const MpReal& x) {
    MpReal r(x.precision());
    mpfr_floor(r.get(), x.get());
    return r;
}

MpReal ceil(const MpReal& x) {
    MpReal r(x.precision());
    mpfr_ceil(r.get(), x.get());
    return r;
}

MpReal pow(const MpReal& x, const MpReal& y) {
    MpReal r(max_prec(x, y));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

MpReal pow(const MpReal& x, long n) {
    MpReal r(x.precision());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

MpReal atan2(const MpReal& y, const MpReal& x) {
    MpReal r(max_prec(x, y));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

MpReal ldexp(const MpReal& x, long e) {
    MpReal r(x.precision());
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

MpReal max(const MpReal& x, const MpReal& y) { return x < y ? y : x; }
MpReal min(const MpReal& x, const MpReal& y) { return y < x ? y : x; }

// ---------------------------------------------------------------------------
// MpComplex

MpComplex::MpComplex(long bits) : re_(bits), im_(bits) {}

MpComplex::MpComplex(MpReal re, MpReal im) : re_(std::move(re)), im_(std::move(im)) {
    const long bits = std::max(re_.precision(), im_.precision());
    if (re_.precision() != bits) re_ = re_.with_precision(bits);
    if (im_.precision() != bits) im_ = im_.with_precision(bits);
}

MpComplex::MpComplex(MpReal re) : re_(std::move(re)), im_(re_.precision()) {}

MpComplex MpComplex::from(double re, double im, long bits) {
    return {MpReal::from(re, bits), MpReal::from(im, bits)};
}

MpComplex MpComplex::with_precision(long bits) const {
    return {re_.with_precision(bits), im_.with_precision(bits)};
}

MpComplex MpComplex::operator-() const { return {-re_, -im_}; }

MpComplex& MpComplex::operator+=(const MpComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

MpComplex& MpComplex::operator-=(const MpComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

MpComplex& MpComplex::operator*=(const MpComplex& o) {
    *this = *this * o;
    return *this;
}

MpComplex& MpComplex::operator*=(const MpReal& o) {
    re_ *= o;
    im_ *= o;
    return *this;
}

MpComplex& MpComplex::operator/=(const MpComplex& o) {
    *this = *this / o;
    return *this;
}

MpComplex operator+(const MpComplex& x, const MpComplex& y) { return {x.re() + y.re(), x.im() + y.im()}; }
MpComplex operator-(const MpComplex& x, const MpComplex& y) { return {x.re() - y.re(), x.im() - y.im()}; }

MpComplex operator*(const MpComplex& x, const MpComplex& y) {
    if (y.is_real()) return x * y.re();
    if (x.is_real()) return y * x.re();
    return {x.re() * y.re() - x.im() * y.im(), x.re() * y.im() + x.im() * y.re()};
}

MpComplex operator/(const MpComplex& x, const MpComplex& y) {
    if (y.is_real()) return x / y.re();
    // Smith's scaling keeps intermediate magnitudes bounded.
    if (abs(y.re()) >= abs(y.im())) {
        const MpReal r = y.im() / y.re();
        const MpReal d = y.re() + y.im() * r;
        return {(x.re() + x.im() * r) / d, (x.im() - x.re() * r) / d};
    }
    const MpReal r = y.re() / y.im();
    const MpReal d = y.re() * r + y.im();
    return {(x.re() * r + x.im()) / d, (x.im() * r - x.re()) / d};
}

MpComplex operator+(const MpComplex& x, const MpReal& y) { return {x.re() + y, x.im()}; }
MpComplex operator-(const MpComplex& x, const MpReal& y) { return {x.re() - y, x.im()}; }
MpComplex operator*(const MpComplex& x, const MpReal& y) { return {x.re() * y, x.im() * y}; }
MpComplex operator/(const MpComplex& x, const MpReal& y) { return {x.re() / y, x.im() / y}; }
MpComplex operator+(const MpComplex& x, long y) { return {x.re() + y, x.im()}; }
MpComplex operator-(const MpComplex& x, long y) { return {x.re() - y, x.im()}; }
MpComplex operator*(const MpComplex& x, long y) { return {x.re() * y, x.im() * y}; }
MpComplex operator/(const MpComplex& x, long y) { return {x.re() / y, x.im() / y}; }

bool operator==(const MpComplex& x, const MpComplex& y) { return x.re() == y.re() && x.im() == y.im(); }

MpReal abs(const MpComplex& z) {
    MpReal r(z.precision());
    mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
    return r;
}

MpReal norm(const MpComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

MpReal arg(const MpComplex& z) { return atan2(z.im(), z.re()); }

MpComplex conj(const MpComplex& z) { return {z.re(), -z.im()}; }

MpComplex exp(const MpComplex& z) {
    const MpReal m = exp(z.re());
    if (z.im().is_zero()) return MpComplex(m);
    MpReal s(z.precision()), c(z.precision());
    mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
    return {m * c, m * s};
}

MpComplex log(const MpComplex& z) {
    if (z.is_zero()) throw DomainError("log of zero");
    return {log(abs(z)), arg(z)};
}

MpComplex sin(const MpComplex& z) {
    if (z.im().is_zero()) return MpComplex(sin(z.re()));
    MpReal s(z.precision()), c(z.precision());
    mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
    return {s * cosh(z.im()), c * sinh(z.im())};
}

MpComplex sqrt(const MpComplex& z) {
    if (z.is_zero()) return z;
    if (z.im().is_zero() && z.re().sign() > 0) return MpComplex(sqrt(z.re()));
    const MpReal r = abs(z);
    MpReal u = sqrt((r + abs(z.re())) / 2);
    if (z.re().sign() >= 0) return MpComplex(u, z.im() / (u * 2L));
    MpReal v = abs(z.im()) / (u * 2L);
    if (z.im().sign() < 0) u = -u;
    return MpComplex(v, u);
}

MpComplex pow(const MpReal& base, const MpComplex& exponent) {
    if (base.sign() <= 0) throw DomainError("complex_pow requires a positive base");
    if (base == 1L) return MpComplex(MpReal::from(1L, std::max(base.precision(), exponent.precision())));
    const MpReal lb = log(base.with_precision(std::max(base.precision(), exponent.precision())));
    return exp(exponent * lb);
}

MpComplex pow(const MpComplex& z, long n) {
    MpComplex result(MpReal::from(1L, z.precision()));
    MpComplex b = n < 0 ? MpComplex(MpReal::from(1L, z.precision())) / z : z;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (e) {
        if (e & 1UL) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

std::string to_string(const MpComplex& z, int digits) {
    std::string out = z.re().to_string(digits);
    if (z.im().is_zero()) return out;
    const std::string im = z.im().to_string(digits);
    if (im.front() == '-') {
        out += im;
    } else {
        out += "+" + im;
    }
    return out + "i";
}

}  // namespace hurwitz

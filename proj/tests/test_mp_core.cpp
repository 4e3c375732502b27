#include "doctest.h"

#include "hurwitz/config.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/special.hpp"
#include "test_util.hpp"

#include <random>

using namespace hurwitz;
using hurwitz::test::C;
using hurwitz::test::R;
using hurwitz::test::log10_diff;
using hurwitz::test::log10_rel;

namespace {
constexpr long kBits = 256;

MpReal mpfr_reference_gamma(const MpReal& x) {
    MpReal r(x.precision());
    mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
    return r;
}
}  // namespace

TEST_CASE("precision promotes to the wider operand") {
    const MpReal a = R("1.5", 80);
    const MpReal b = R("2.25", 200);
    CHECK((a + b).precision() == 200);
    CHECK((b * a).precision() == 200);
    CHECK((a * 3).precision() == 80);
    const MpComplex z(a, b);
    CHECK(z.re().precision() == 200);
    CHECK(MpReal(10).precision() == MpReal::kMinBits);
}

TEST_CASE("decimal formatting is round-half-even at the requested digits") {
    CHECK(R("1.25", 128).to_string(2) == "1.2");
    CHECK(R("1.35", 128).to_string(2) == "1.4");
    CHECK(R("-0.000123456", 128).to_string(3) == "-0.000123");
    CHECK(R("123456789", 128).to_string(3) == "1.23e+8");
    CHECK(R("0", 128).to_string(5) == "0");
    CHECK(to_string(C("1.5", "-2", 128), 3) == "1.50-2.00i");
    CHECK_THROWS_AS(MpReal::parse("1.2x", 64), DomainError);
}

TEST_CASE("complex_pow") {
    const MpComplex s = C("0.3", "4.1", kBits);
    CHECK(complex_pow(R(1, kBits), s) == MpComplex(R(1, kBits)));
    CHECK(log10_diff(complex_pow(R(4, kBits), C("0.5", kBits)), C("2", kBits)) < -70);

    // 2^(2+i) = 4 (cos log 2 + i sin log 2)
    const MpReal l2 = log(R(2, kBits));
    const MpComplex polar(cos(l2) * 4, sin(l2) * 4);
    CHECK(log10_diff(complex_pow(R(2, kBits), C("2", "1", kBits)), polar) < -70);

    CHECK_THROWS_AS(complex_pow(R(0, kBits), s), DomainError);
    CHECK_THROWS_AS(complex_pow(R(-2, kBits), s), DomainError);
}

TEST_CASE("complex_pow: exponents add") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> base(1e-3, 10.0), part(-7.0, 7.0);
    for (int i = 0; i < 50; ++i) {
        const MpReal b = MpReal::from(base(rng), kBits);
        const MpComplex s1 = MpComplex::from(part(rng), part(rng), kBits);
        const MpComplex s2 = MpComplex::from(part(rng), part(rng), kBits);
        const MpComplex lhs = complex_pow(b, s1 + s2);
        const MpComplex rhs = complex_pow(b, s1) * complex_pow(b, s2);
        CHECK(log10_rel(lhs, rhs) < -70);
    }
}

TEST_CASE("gamma: special values") {
    CHECK(log10_diff(gamma(C("1", kBits)), C("1", kBits)) < -72);
    CHECK(log10_diff(gamma(C("5", kBits)), C("24", kBits)) < -70);
    const MpComplex sqrt_pi(sqrt(MpReal::pi(kBits)));
    CHECK(log10_rel(gamma(C("0.5", kBits)), sqrt_pi) < -72);
    CHECK(log10_rel(gamma(C("-0.5", kBits)), sqrt_pi * R(-2, kBits)) < -72);
    CHECK_THROWS_AS(gamma(C("0", kBits)), PoleError);
    CHECK_THROWS_AS(gamma(C("-3", kBits)), PoleError);
}

TEST_CASE("gamma: real axis against MPFR's independent gamma") {
    for (const char* x : {"0.1", "0.75", "1.3", "2.5", "7.25", "33.5", "-0.3", "-4.7"}) {
        const MpReal xr = R(x, kBits);
        CHECK(log10_rel(gamma(MpComplex(xr)), MpComplex(mpfr_reference_gamma(xr))) < -72);
    }
}

TEST_CASE("gamma: modulus identities off the real axis") {
    const MpReal pi = MpReal::pi(kBits);
    for (const char* y : {"0.5", "3", "10", "40"}) {
        const MpReal yr = R(y, kBits);
        // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
        const MpReal lhs = norm(gamma(MpComplex(R("0.5", kBits), yr)));
        CHECK(log10_rel(MpComplex(lhs), MpComplex(pi / cosh(pi * yr))) < -70);
        // |Gamma(iy)|^2 = pi / (y sinh(pi y))
        const MpReal lhs2 = norm(gamma(MpComplex(R(0, kBits), yr)));
        CHECK(log10_rel(MpComplex(lhs2), MpComplex(pi / (yr * sinh(pi * yr)))) < -70);
    }
}

TEST_CASE("gamma: recurrence on a grid avoiding poles") {
    const long bits = 200;
    const int digits = 55;
    for (double re = -4.75; re <= 6.0; re += 0.8) {
        for (double im : {0.0, 0.4, -2.5, 9.0}) {
            const MpComplex s = MpComplex::from(re, im, bits);
            const MpComplex lhs = gamma(s + 1L);
            const MpComplex rhs = s * gamma(s);
            CHECK(log10_rel(lhs, rhs) < -(digits - 8));
        }
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == mpq_class(-1, 2));
    CHECK(bernoulli_number(2) == mpq_class(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(12) == mpq_class(-691, 2730));
    CHECK(bernoulli_number(20) == mpq_class(-174611, 330));
    // defining recurrence sum_{k<=m} C(m+1,k) B_k = 0 for m >= 1
    for (int m = 1; m <= 60; ++m) {
        mpq_class acc = 0;
        for (int k = 0; k <= m; ++k) acc += mpq_class(binomial(m + 1, k)) * bernoulli_number(k);
        CHECK(acc == 0);
    }
    CHECK_THROWS_AS(bernoulli_number(kMaxBernoulli + 1), DomainError);
}

TEST_CASE("bernoulli_poly") {
    CHECK(bernoulli_poly(0, mpq_class(3, 7)) == 1);
    CHECK(bernoulli_poly(1, mpq_class(1, 2)) == 0);
    const mpq_class a(3, 10);
    CHECK(bernoulli_poly(2, a) == a * a - a + mpq_class(1, 6));
    // sum_{k<=m} C(m+1,k) B_k(x) = (m+1) x^m
    for (int m = 0; m <= 12; ++m) {
        mpq_class acc = 0;
        for (int k = 0; k <= m; ++k) acc += mpq_class(binomial(m + 1, k)) * bernoulli_poly(k, a);
        mpq_class pw = 1;
        for (int j = 0; j < m; ++j) pw *= a;
        CHECK(acc == (m + 1) * pw);
    }
    CHECK_THROWS_AS(bernoulli_poly(-1, a), DomainError);
}

TEST_CASE("bernoulli_poly: forward difference is exact") {
    for (const mpq_class x : {mpq_class(0), mpq_class(1, 3), mpq_class(-5, 4), mpq_class(17, 2)}) {
        for (int m = 1; m <= 20; ++m) {
            mpq_class pw = 1;
            for (int j = 0; j < m - 1; ++j) pw *= x;
            CHECK(bernoulli_poly(m, x + 1) - bernoulli_poly(m, x) == m * pw);
        }
    }
}

TEST_CASE("bernoulli_poly: floating evaluation matches rationals") {
    const mpq_class x(7, 10);
    for (int m : {1, 5, 17, 40, 80}) {
        const MpReal v = bernoulli_poly(m, MpReal::from(x, kBits));
        const MpReal ref = MpReal::from(bernoulli_poly(m, x), kBits);
        CHECK(log10_rel(MpComplex(v), MpComplex(ref)) < -70);
    }
}

TEST_CASE("digamma") {
    const MpReal g = MpReal::euler_gamma(kBits);
    CHECK(log10_diff(digamma(R(1, kBits)), -g) < -72);
    CHECK(log10_diff(digamma(R(2, kBits)), 1 - g) < -72);
    CHECK(log10_diff(digamma(R("0.5", kBits)), -g - log(R(2, kBits)) * 2) < -72);
    for (const char* x : {"0.01", "0.37", "3.9", "120.5"}) {
        const MpReal xr = R(x, kBits);
        MpReal ref(kBits);
        mpfr_digamma(ref.get(), xr.get(), MPFR_RNDN);
        CHECK(log10_rel(MpComplex(digamma(xr)), MpComplex(ref)) < -70);
    }
    CHECK_THROWS_AS(digamma(R(0, kBits)), DomainError);
    CHECK_THROWS_AS(digamma(R(-1, kBits)), DomainError);
}

TEST_CASE("doubling precision moves results less than the working tolerance") {
    for (const char* re : {"0.2", "3.7", "-1.4"}) {
        const MpComplex s(R(re, 128), R("1.1", 128));
        const MpComplex lo = gamma(s);
        const MpComplex hi = gamma(s.with_precision(256));
        CHECK(log10_rel(lo.with_precision(256), hi) < -34);
        const MpReal x = abs(s.re()) + 1;
        CHECK(log10_diff(digamma(x).with_precision(256), digamma(x.with_precision(256))) < -34);
    }
}

TEST_CASE("EvalConfig") {
    const EvalConfig cfg = EvalConfig::for_digits(30);
    // ceil(1.2*30)+10 = 46 internal digits
    CHECK(cfg.precision_bits == bits_for_digits(46));
    CHECK(cfg.digits() == 30);
    CHECK_NOTHROW(cfg.validate());
    EvalConfig bad = cfg;
    bad.max_terms = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(EvalConfig::for_digits(0), DomainError);

    ShiftParameter a(R("0", 64));
    CHECK(a.in_closed_unit());
    CHECK_FALSE(a.in_half_open_unit());
    CHECK_THROWS_AS(a.require_half_open_unit("test"), DomainError);
}

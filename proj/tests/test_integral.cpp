#include "doctest.h"

#include "hurwitz/integral.hpp"
#include "hurwitz/oracles.hpp"
#include "hurwitz/special.hpp"
#include "test_util.hpp"

#include <random>

using namespace hurwitz;
using hurwitz::test::C;
using hurwitz::test::R;
using hurwitz::test::log10_rel;

namespace {
const EvalConfig kCfg = EvalConfig::for_digits(30);
const long kBits = kCfg.precision_bits;
ShiftParameter A(const char* a) { return ShiftParameter(R(a, kBits)); }
MpReal pi2() { return MpReal::pi(kBits) * MpReal::pi(kBits); }
}  // namespace

TEST_CASE("phi_integral: known values") {
    for (const char* a : {"0.2", "0.5", "1"}) {
        const EvalResult r = phi_integral(C("1", kBits), A(a), kCfg);
        CHECK(abs(r.phi - MpComplex(R(1, kBits))).to_double() < 1e-30);
        CHECK(r.pole());
    }
    const EvalResult z2 = phi_integral(C("2", kBits), A("1"), kCfg);
    REQUIRE_FALSE(z2.pole());
    CHECK(log10_rel(*z2.zeta, MpComplex(pi2() / 6L)) < -30);
    CHECK(abs(*z2.zeta - MpComplex(pi2() / 6L)) <= z2.zeta_err);
    const EvalResult h2 = phi_integral(C("2", kBits), A("0.5"), kCfg);
    CHECK(log10_rel(*h2.zeta, MpComplex(pi2() / 2L)) < -30);
    CHECK(h2.method == Method::Integral);
    CHECK(h2.terms_or_nodes > 0);
    CHECK_THROWS_AS(phi_integral(C("0", kBits), A("0.5"), kCfg), DomainError);
    CHECK_THROWS_AS(phi_integral(C("2", kBits), ShiftParameter(R(0, kBits)), kCfg), DomainError);
}

TEST_CASE("phi_continued: non-positive integers") {
    for (const char* a : {"0.3", "0.5", "0.7", "1"}) {
        const EvalResult k0 = phi_continued(C("0", kBits), A(a), 1, kCfg);
        CHECK(abs(*k0.zeta - MpComplex(negative_integer_oracle(0, A(a)))).to_double() < 1e-28);
        const EvalResult k1 = phi_continued(C("-1", kBits), A(a), 2, kCfg);
        CHECK(abs(*k1.zeta - MpComplex(negative_integer_oracle(1, A(a)))).to_double() < 1e-28);
        CHECK(abs(*k1.zeta - MpComplex(negative_integer_oracle(1, A(a)))) <= k1.zeta_err);
    }
    CHECK_THROWS_AS(phi_continued(C("-1", kBits), A("0.5"), 1, kCfg), DomainError);
    CHECK_THROWS_AS(phi_continued(C("2", kBits), A("0.5"), -1, kCfg), DomainError);
    CHECK(continuation_order(C("0", kBits)) == 2);
    CHECK(continuation_order(C("-2.5", kBits)) == 5);
    CHECK(continuation_order(C("3", kBits)) == 0);
}

TEST_CASE("phi_continued agrees with phi_integral on the overlap") {
    const EvalResult k0 = phi_continued(C("2", kBits), A("0.7"), 0, kCfg);
    const EvalResult base = phi_integral(C("2", kBits), A("0.7"), kCfg);
    CHECK(abs(k0.phi - base.phi) <= k0.err_estimate + base.err_estimate);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> re(0.05, 3.0), im(-4.0, 4.0), ad(0.1, 1.0);
    for (int i = 0; i < 4; ++i) {
        const MpComplex s = MpComplex::from(re(rng), im(rng), kBits);
        const ShiftParameter a(MpReal::from(ad(rng), kBits));
        const EvalResult ref = phi_integral(s, a, kCfg);
        for (int k : {1, 2, 3}) {
            const EvalResult c = phi_continued(s, a, k, kCfg);
            CHECK(abs(c.phi - ref.phi) <= c.err_estimate + ref.err_estimate);
        }
    }
}

TEST_CASE("phi_continued against the Dirichlet oracle left of Re s = 0") {
    // functional checks at s = -1.5 + i via the Hurwitz relation zeta(s,a) = zeta(s,a+1) + a^-s
    // and at negative integers with the Bernoulli oracle
    for (int m = 0; m <= 4; ++m) {
        const EvalResult r = phi_auto(MpComplex(R(-m, kBits)), A("0.25"), kCfg);
        CHECK(abs(*r.zeta - MpComplex(negative_integer_oracle(m, A("0.25")))) <= r.zeta_err);
    }
}

TEST_CASE("phi_integral agrees with the Dirichlet oracle") {
    for (const char* s : {"1.5", "2", "3.5"}) {
        for (const char* a : {"0.25", "0.5", "0.75", "1"}) {
            const MpComplex sv = C(s, "1.25", kBits);
            const EvalResult r = phi_integral(sv, A(a), kCfg);
            const OracleValue o = dirichlet_oracle(sv, A(a), kCfg);
            CHECK(abs(*r.zeta - o.zeta) <= max(r.zeta_err, o.err) * 2L);
        }
    }
}

TEST_CASE("phi is smooth through s = 1 and conjugate symmetric") {
    const MpReal d = R("1e-6", kBits);
    const EvalResult lo = phi_integral(MpComplex(1L - d), A("0.4"), kCfg);
    const EvalResult hi = phi_integral(MpComplex(1L + d), A("0.4"), kCfg);
    // phi'(1) = -digamma(a)
    const MpReal slope = -digamma(R("0.4", kBits));
    CHECK(abs(hi.phi - lo.phi - MpComplex(slope * d * 2L)).to_double() < 1e-4 * abs(slope).to_double() * 2e-6);
    const MpComplex s = C("0.7", "5", kBits);
    const EvalResult p = phi_integral(s, A("0.6"), kCfg);
    const EvalResult q = phi_integral(conj(s), A("0.6"), kCfg);
    CHECK(abs(p.phi - conj(q.phi)) <= p.err_estimate + q.err_estimate);
}

TEST_CASE("more quadrature levels shrink the error estimate") {
    double last = 1e300;
    for (int levels = 4; levels <= 7; ++levels) {
        EvalConfig c = kCfg;
        c.quad_levels = levels;
        c.target_tol = MpReal::parse("1e-200", kBits);  // force all levels
        double e = 0.0;
        try {
            e = phi_integral(C("1.5", "2", kBits), A("0.5"), c).err_estimate.to_double();
        } catch (const EvalAccuracyError& ex) {
            e = ex.partial().err_estimate.to_double();
        }
        CHECK(e <= last);
        last = e;
    }
}

TEST_CASE("phi_shifted_integral") {
    const EvalResult a0 = phi_shifted_integral(C("2", kBits), ShiftParameter(R(0, kBits)), kCfg);
    CHECK(abs(a0.phi - MpComplex(pi2() / 6L)).to_double() < 1e-29);
    const EvalResult a1 = phi_shifted_integral(C("2", kBits), A("1"), kCfg);
    CHECK(abs(a1.phi - MpComplex(pi2() / 6L - 1L)).to_double() < 1e-29);
    const MpComplex s = C("3", kBits);
    const EvalResult full = phi_integral(s, A("0.5"), kCfg);
    const EvalResult shifted = phi_shifted_integral(s, A("0.5"), kCfg);
    const MpComplex diff = (s - 1L) * complex_pow(R("0.5", kBits), -s);
    CHECK(abs(full.phi - shifted.phi - diff) <= full.err_estimate + shifted.err_estimate + ldexp(abs(diff), 2 - kBits));
    CHECK(shifted.method == Method::ShiftedIntegral);
    CHECK_THROWS_AS(phi_shifted_integral(C("2", kBits), ShiftParameter(R("1.5", kBits)), kCfg), DomainError);
}

TEST_CASE("large imaginary parts raise levels with a warning") {
    const MpComplex s = C("2", "60", kBits);
    const EvalResult r = phi_integral(s, A("1"), EvalConfig::for_digits(15));
    CHECK_FALSE(r.warnings.empty());
    const OracleValue o = dirichlet_oracle(s, A("1"), EvalConfig::for_digits(15));
    CHECK(abs(*r.zeta - o.zeta) <= max(r.zeta_err, o.err) * 2L);
}

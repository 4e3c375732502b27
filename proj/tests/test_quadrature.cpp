#include "doctest.h"

#include "hurwitz/quadrature.hpp"
#include "hurwitz/special.hpp"
#include "test_util.hpp"

using namespace hurwitz;
using hurwitz::test::R;
using hurwitz::test::log10_diff;

namespace {
const EvalConfig kCfg = EvalConfig::for_digits(30);
}

TEST_CASE("quad_halfline: exponential") {
    const QuadValue r = quad_halfline([](const QuadPoint& p) { return MpComplex(exp(-p.t)); }, {1.0, 1.0}, kCfg);
    CHECK(log10_diff(r.value, MpComplex(R(1, kCfg.precision_bits))) < -30);
    CHECK(r.err.to_double() < 1e-30);
}

TEST_CASE("quad_halfline: t e^-t") {
    const QuadValue r =
        quad_halfline([](const QuadPoint& p) { return MpComplex(p.t * exp(-p.t)); }, {2.0, 1.0}, kCfg);
    CHECK(log10_diff(r.value, MpComplex(R(1, kCfg.precision_bits))) < -30);
}

TEST_CASE("quad_halfline: endpoint singularity t^(-1/2) e^-t") {
    const QuadValue r = quad_halfline(
        [](const QuadPoint& p) { return MpComplex(exp(-p.t - p.log_t / 2L)); }, {0.5, 1.0}, kCfg);
    const MpReal ref = sqrt(MpReal::pi(kCfg.precision_bits));
    CHECK(log10_diff(r.value, MpComplex(ref)) < -30);
    CHECK(abs(r.value - MpComplex(ref)) <= r.err * 10L + MpReal::parse("1e-40", 64));
}

TEST_CASE("quad_halfline: oscillating t^(s-1) weight gives Gamma(s)") {
    const MpComplex s = MpComplex::from(1.5, 20.0, kCfg.precision_bits);
    const QuadValue r = quad_halfline(
        [&s](const QuadPoint& p) { return exp((s - 1L) * MpComplex(p.log_t) - MpComplex(p.t)); }, {1.5, 1.0},
        kCfg);
    CHECK(hurwitz::test::log10_rel(r.value, gamma(s)) < -28);
}

TEST_CASE("integrate_halfline: several outputs share nodes") {
    // (log t)^n e^-t t^(s-1) integrates to Gamma^(n)(s)
    const auto f = [](const QuadPoint& p, std::span<MpComplex> out) {
        const MpReal w = exp(-p.t);
        out[0] = MpComplex(w);
        out[1] = MpComplex(w * p.log_t);
    };
    const QuadResult r = integrate_halfline(f, 2, {1.0, 1.0}, kCfg);
    REQUIRE(r.converged);
    const MpReal g = MpReal::euler_gamma(kCfg.precision_bits);
    CHECK(log10_diff(r.values[0], MpComplex(R(1, kCfg.precision_bits))) < -30);
    CHECK(log10_diff(r.values[1], MpComplex(-g)) < -30);
}

TEST_CASE("errors decrease with levels and non-convergence is reported") {
    EvalConfig few = kCfg;
    few.quad_levels = 1;
    const auto f = [](const QuadPoint& p) { return MpComplex(exp(-p.t - p.log_t / 2L)); };
    CHECK_THROWS_AS(quad_halfline(f, {0.5, 1.0}, few), QuadratureAccuracyError);
    CHECK_THROWS_AS(quad_halfline(f, {0.0, 1.0}, kCfg), DomainError);

    const QuadratureRule rule(kCfg.precision_bits, 6);
    CHECK(rule.levels() == 6);
    CHECK(rule.level(2).size() > rule.level(1).size());
    const auto fv = [](const QuadPoint& p, std::span<MpComplex> out) { out[0] = MpComplex(exp(-p.t - p.log_t / 2L)); };
    double last = 1.0;
    for (int levels = 1; levels <= 4; ++levels) {
        EvalConfig c = kCfg;
        c.quad_levels = levels;
        const QuadResult r = integrate_halfline(fv, 1, {0.5, 1.0}, c, &rule);
        const double e = r.errors[0].to_double();
        CHECK(e <= last);
        last = e;
    }
}

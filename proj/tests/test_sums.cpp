#include "doctest.h"

#include "hurwitz/special.hpp"
#include "hurwitz/sums.hpp"
#include "test_util.hpp"

#include <random>

using namespace hurwitz;
using hurwitz::test::C;
using hurwitz::test::R;

namespace {
const EvalConfig kCfg = EvalConfig::for_digits(30);
const long kBits = kCfg.precision_bits;

ShiftParameter A(const char* a) { return ShiftParameter(R(a, kBits)); }

bool within(const MpComplex& x, const MpComplex& y, const MpReal& err) { return abs(x - y) <= err; }
}  // namespace

TEST_CASE("s_n_direct: small cases") {
    // a = 1: S_1 = 1^-s = 1
    const SnValue one = s_n_direct(1, C("2.5", "1", kBits), A("1"), kCfg);
    CHECK(one.value == MpComplex(R(1, kBits)));
    // general a: S_1 = a^-s
    const MpComplex s = C("2", "-1.5", kBits);
    const SnValue first = s_n_direct(1, s, A("0.3"), kCfg);
    CHECK(hurwitz::test::log10_rel(first.value, complex_pow(R("0.3", kBits), -s)) < -44);

    const SnValue two = s_n_direct(2, s, A("0.3"), kCfg);
    const MpComplex expect = complex_pow(R("0.3", kBits), -s) - complex_pow(R("1.3", kBits), -s);
    CHECK(within(two.value, expect, two.err));

    const SnValue zero = s_n_direct(3, C("0", kBits), A("0.7"), kCfg);
    CHECK(zero.value == MpComplex(R(0, kBits)));
    CHECK_THROWS_AS(s_n_direct(0, s, A("0.5"), kCfg), DomainError);
    CHECK_THROWS_AS(s_n_direct(2, s, ShiftParameter(R(0, kBits)), kCfg), DomainError);
}

TEST_CASE("s_n_shifted matches s_n_direct") {
    const MpComplex s = C("2", "3", kBits);
    for (long n : {1L, 2L, 5L, 50L}) {
        const SnValue d = s_n_direct(n, s, A("0.5"), kCfg);
        const SnValue sh = s_n_shifted(n, s, A("0.5"), kCfg);
        CHECK(within(d.value, sh.value, d.err + sh.err));
        CHECK(d.err.to_double() < 1e-40);
    }
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> part(-7.0, 7.0);
    std::uniform_int_distribution<long> nd(1, 200);
    std::uniform_int_distribution<int> ad(1, 10);
    for (int i = 0; i < 40; ++i) {
        const MpComplex sr = MpComplex::from(part(rng), part(rng), kBits);
        const ShiftParameter a(MpReal::from(ad(rng) / 10.0, kBits));
        const long n = nd(rng);
        const SnValue d = s_n_direct(n, sr, a, kCfg);
        const SnValue sh = s_n_shifted(n, sr, a, kCfg);
        CHECK(within(d.value, sh.value, d.err + sh.err));
    }
}

TEST_CASE("vanishing at non-positive integers and generalized Stirling numbers") {
    for (const char* a : {"0.25", "0.5", "1"}) {
        for (int k = 0; k <= 8; ++k) {
            const MpComplex s(R(-k, kBits));
            for (long n = k + 2; n <= k + 12; ++n) {
                CHECK(s_n_direct(n, s, A(a), kCfg).value == MpComplex(R(0, kBits)));
            }
            for (long n = 1; n <= 12; ++n) {
                const MpReal st = stirling_generalized(n, k, A(a));
                CHECK(s_n_direct(n, s, A(a), kCfg).value.re() == st.with_precision(kBits));
            }
        }
    }
    CHECK(stirling_generalized(1, 0, mpq_class(3, 10)) == 1);
    CHECK(stirling_generalized(2, 1, mpq_class(3, 10)) == -1);
    CHECK(stirling_generalized(9, 5, mpq_class(1, 3)) == 0);
    CHECK_THROWS_AS(stirling_generalized(2, -1, mpq_class(1)), DomainError);
}

TEST_CASE("cancellation bits grow with n while values stay accurate") {
    long last = -1;
    const EvalConfig hi = kCfg.with_precision(2 * kBits);
    for (long n : {10L, 40L, 80L, 160L}) {
        const SnValue v = s_n_direct(n, C("2", kBits), A("1"), kCfg);
        CHECK(v.cancellation_bits >= n / 2);
        CHECK(v.cancellation_bits > last);
        last = v.cancellation_bits;
        const SnValue ref = s_n_direct(n, C("2", 2 * kBits), A("1"), hi);
        CHECK(within(v.value.with_precision(2 * kBits), ref.value, v.err));
    }
}

TEST_CASE("s_n_asymptotic") {
    const MpComplex est = s_n_asymptotic(10000, C("2", kBits), A("1"));
    const MpReal n = R(10000, kBits);
    CHECK(hurwitz::test::log10_rel(est, MpComplex(log(n) / n)) < -40);
    const MpComplex est2 = s_n_asymptotic(10000, C("2", kBits), A("0.5"));
    const MpReal expect2 = sqrt(MpReal::pi(kBits)) * log(n) / sqrt(n);
    CHECK(hurwitz::test::log10_rel(est2, MpComplex(expect2)) < -40);
    CHECK_THROWS_AS(s_n_asymptotic(2, C("2", kBits), A("1")), DomainError);
    CHECK_THROWS_AS(s_n_asymptotic(100, C("-1", kBits), A("1")), DomainError);
    CHECK_THROWS_AS(s_n_asymptotic(100, C("0", kBits), A("1")), DomainError);
}

TEST_CASE("s_n_asymptotic: ratio at a = 1, s = 1.5, n = 1e4") {
    const MpComplex s = C("1.5", kBits);
    const SnTable table(s, R(1, kBits), 10000, kCfg);
    const MpReal ratio = abs(table.at(10000).value / s_n_asymptotic(10000, s, A("1")));
    CHECK(ratio > MpReal::from(0.5, 64));
    CHECK(ratio < 2L);
}

TEST_CASE("dominating bound") {
    const MpReal half = R("0.5", kBits);
    CHECK(hurwitz::test::log10_rel(MpComplex(dominating_k_factor(2, half)),
                                   MpComplex(R(2, kBits) / (3L * sqrt(R(3, kBits))))) < -40);
    MpReal prev = dominating_term_bound(2, R(2, kBits), A("0.9")).bound;
    MpReal total = prev;
    for (long n = 3; n <= 400; ++n) {
        const MpReal b = dominating_term_bound(n, R(2, kBits), A("0.9")).bound;
        CHECK(b < prev);
        CHECK(b.sign() > 0);
        // comparison with n^-3/2
        CHECK(b * pow(R(n, kBits), R("1.5", kBits)) < 10L);
        total = total + b;
        prev = b;
    }
    // a <= 1/2 uses theta = a/2 and still bounds the integrals
    for (const char* a : {"0.2", "0.5", "0.9"}) {
        for (long n : {2L, 10L, 300L}) {
            const SnTable table(C("2", kBits), R(a, kBits), n, kCfg);
            // S_n(2,a) = (1/Gamma(2)) int ... so |S_n|/(n+1) <= bound
            const MpReal lhs = abs(table.at(n).value) / (n + 1);
            CHECK(lhs <= dominating_term_bound(n, R(2, kBits), A(a)).bound);
        }
    }
    // tail bound dominates the explicit partial sums of term bounds
    const MpReal tail100 = dominating_tail_bound(100, R(2, kBits), R("0.9", kBits));
    MpReal partial(kBits);
    for (long n = 101; n <= 2000; ++n) {
        partial = partial + dominating_term_bound(n, R(2, kBits), A("0.9")).bound * (n + 1) / n;
    }
    CHECK(partial < tail100);
    CHECK_THROWS_AS(dominating_term_bound(1, R(2, kBits), A("0.9")), DomainError);
}

TEST_CASE("SnTable: exact triangle and bulk integral agree with direct sums") {
    const MpComplex s = C("1.5", "2", kBits);
    const SnTable t(s, R("0.75", kBits), 300, kCfg);
    REQUIRE(t.size() == 300);
    for (long n : {1L, 2L, 17L, 200L, 256L}) {
        const SnValue d = s_n_direct(n, s, A("0.75"), kCfg);
        CHECK(within(t.at(n).value, d.value, t.at(n).err + d.err));
        CHECK(t.at(n).err.to_double() < 1e-40);
    }
    for (long n : {257L, 280L, 300L}) {
        const SnValue d = s_n_direct(n, s, A("0.75"), kCfg);
        const double rel = (abs(t.at(n).value - d.value) / abs(d.value)).to_double();
        CHECK(rel < 1e-12);
        CHECK(within(t.at(n).value, d.value, t.at(n).err + d.err));
    }
    // bulk evaluator from small n against the triangle
    const BulkSn bulk = s_n_bulk(s, R("0.75", kBits), 5, 40, kBits);
    for (long n = 5; n <= 40; ++n) {
        const size_t i = static_cast<size_t>(n - 5);
        CHECK(within(bulk.values[i], t.at(n).value, bulk.errors[i] + t.at(n).err));
        CHECK(bulk.errors[i].to_double() < 1e-12);
    }
    // non-positive integer s: 1/Gamma vanishes
    const SnTable z(C("-2", kBits), R("0.5", kBits), 400, kCfg);
    CHECK(z.at(3).value.re().sign() != 0);
    CHECK(z.at(4).value == MpComplex(R(0, kBits)));
    CHECK(z.at(399).value == MpComplex(R(0, kBits)));
}

TEST_CASE("SnCache memoizes by point, shift and precision") {
    SnCache cache;
    const MpComplex s = C("2", kBits);
    auto t1 = cache.get(s, R(1, kBits), 50, kCfg);
    auto t2 = cache.get(s, R(1, kBits), 20, kCfg);
    CHECK(t1.get() == t2.get());
    auto t3 = cache.get(s, R(1, kBits), 80, kCfg);
    CHECK(t3->size() == 80);
    CHECK(cache.size() == 1);
    cache.get(s, R("0.5", kBits), 10, kCfg);
    cache.get(s, R(1, kBits), 10, kCfg.with_precision(2 * kBits));
    CHECK(cache.size() == 3);
}

#include <gtest/gtest.h>

#include <thread>

#include "fixtures.hpp"
#include "linapprox/cf.hpp"
#include "linapprox/oracle.hpp"
#include "reference.hpp"

using namespace linapprox;

namespace {

CFStream surd(long a, long b, long c, long d) { return CFStream::from_value(make_quadratic(a, b, c, d)); }
CFStream golden() { return surd(-1, 1, 2, 5); }
CFStream silver() { return surd(-1, 1, 1, 2); }

struct Surd {
    long p, q, d;  // (p + sqrt d)/q in (0, 1)
};

// Reduced surds in (0, 1), chosen by hand.
const std::vector<Surd>& surds() {
    static const std::vector<Surd> s = {
        {-1, 2, 5},  {-1, 1, 2},  {-1, 1, 3},  {-2, 1, 5},  {-2, 1, 6},  {-2, 1, 7},  {-3, 1, 10},
        {-3, 1, 11}, {-3, 1, 13}, {-3, 1, 14}, {-4, 1, 19}, {-4, 1, 21}, {-5, 1, 31}, {-6, 1, 43},
        {-1, 3, 7},  {1, 5, 13},  {-7, 1, 61}, {-8, 1, 67}, {-9, 1, 94}, {-2, 3, 13}, {-10, 1, 109},
    };
    return s;
}

} // namespace

TEST(CfEngine, DigitsMatchSurdRecurrence) {
    for (const auto& s : surds()) {
        CFStream cf = surd(s.p, 1, s.q, s.d);
        auto ref = reference::surd_cf(s.p, s.q, s.d, 40);
        EXPECT_EQ(cf.digits(40), ref) << s.p << "+sqrt(" << s.d << ")/" << s.q;
    }
}

TEST(CfEngine, SilverIsAllTwos) {
    auto d = silver().digits(25);
    for (const auto& a : d) EXPECT_EQ(a, 2);
}

TEST(CfEngine, PiFromDecimal) {
    CFStream cf = cf_expand(parse_number(fixtures::kPiMinus3_50), 3);
    EXPECT_EQ(cf.digits(3), (std::vector<BigInt>{7, 15, 1}));
}

TEST(CfEngine, RationalTerminatesNormalized) {
    CFStream half = CFStream::from_value(make_rational(1, 2));
    EXPECT_TRUE(half.is_finite());
    EXPECT_EQ(half.digits(1), std::vector<BigInt>{2});
    EXPECT_THROW(half.digit(2), InsufficientDigits);
    // [0; 2, 1] folds into [0; 3]
    CFStream folded = CFStream::from_digits({2, 1});
    EXPECT_EQ(folded.known_digits(), std::vector<BigInt>{3});
    CFStream r = CFStream::from_value(make_rational(355 - 339, 113));
    EXPECT_EQ(r.digits(*r.length()), (std::vector<BigInt>{7, 16}));
}

TEST(CfEngine, DecimalSlopeRunsOutOfPrecision) {
    CFStream cf = CFStream::from_value(parse_number("dec:0.41421356"));
    EXPECT_THROW(cf.digits(40), PrecisionExhausted);
}

TEST(CfEngine, OutOfDomainSlope) {
    EXPECT_THROW(CFStream::from_value(make_rational(3, 2)), OutOfDomain);
}

TEST(CfEngine, SilverAndGoldenDenominators) {
    auto L = convergents(silver(), 3);
    std::vector<BigInt> q, p;
    for (long k = 0; k <= 3; ++k) {
        q.push_back(at(L, k).q);
        p.push_back(at(L, k).p);
    }
    EXPECT_EQ(q, (std::vector<BigInt>{1, 2, 5, 12}));
    EXPECT_EQ(p, (std::vector<BigInt>{0, 1, 2, 5}));
    auto G = convergents(golden(), 6);
    std::vector<BigInt> fib;
    for (long k = 0; k <= 6; ++k) fib.push_back(at(G, k).q);
    EXPECT_EQ(fib, (std::vector<BigInt>{1, 1, 2, 3, 5, 8, 13}));
}

TEST(CfEngine, PiConvergents) {
    CFStream cf = cf_expand(parse_number(fixtures::kPiMinus3_50), 3);
    auto L = convergents(cf, 3);
    EXPECT_EQ(at(L, 1).p, 1);
    EXPECT_EQ(at(L, 1).q, 7);
    EXPECT_EQ(at(L, 2).p, 15);
    EXPECT_EQ(at(L, 2).q, 106);
    EXPECT_EQ(at(L, 3).p, 16);
    EXPECT_EQ(at(L, 3).q, 113);
}

TEST(CfEngine, LadderMatchesReferenceRecurrences) {
    for (const auto& s : surds()) {
        CFStream cf = surd(s.p, 1, s.q, s.d);
        auto a = reference::surd_cf(s.p, s.q, s.d, 25);
        auto qs = reference::denominators(a);
        auto ps = reference::numerators(a);
        auto L = convergents(cf, 25);
        for (long k = -1; k <= 25; ++k) {
            const auto& st = at(L, k);
            EXPECT_EQ(st.q, qs[k + 1]);
            EXPECT_EQ(st.p, ps[k + 1]);
            BigInt sgn = (k % 2 == 0) ? 1 : -1;
            if (k == -1) sgn = -1;
            EXPECT_EQ(st.q_star, sgn * st.q);
            EXPECT_EQ(st.p_star, sgn * st.p);
            EXPECT_EQ(st.parity, rho(k));
            if (k >= 0) {
                const auto& pr = at(L, k - 1);
                BigInt det = st.q * pr.p - st.p * pr.q;
                EXPECT_EQ(det, k % 2 == 0 ? 1 : -1);
            }
        }
    }
}

TEST(CfEngine, ConvergentBoundAndInterleaving) {
    std::vector<CFStream> slopes = {golden(), silver(), cf_expand(parse_number(fixtures::kPiMinus3_200), 30)};
    for (const CFStream& cf : slopes) {
        auto L = convergents(cf, 30);
        const RealValue& alpha = cf.source();
        for (long k = 1; k <= 30; ++k) {
            const auto& st = at(L, k);
            RealValue conv = make_rational(st.p, st.q);
            RealValue err = abs(alpha - conv);
            EXPECT_EQ(compare(err, make_rational(1, st.q * st.q)), -1) << k;
            EXPECT_EQ(compare(conv, alpha), k % 2 == 0 ? -1 : 1) << k;
        }
    }
}

TEST(CfEngine, ThetaSignAndNorm) {
    for (const CFStream& cf : {golden(), silver(), surd(-1, 1, 1, 3)}) {
        auto L = convergents(cf, 30);
        for (long k = 0; k <= 30; ++k) {
            const auto& st = at(L, k);
            EXPECT_EQ(sign_of(st.theta), k % 2 == 0 ? 1 : -1);
            EXPECT_TRUE(st.abs_theta.exactly_equals(abs(st.theta)));
            if (k >= 1) {
                EXPECT_EQ(compare(int_distance(st.theta), st.abs_theta), 0);
                EXPECT_TRUE(
                    st.abs_theta.exactly_equals(at(L, k - 2).abs_theta - RealValue(st.a) * at(L, k - 1).abs_theta));
            }
        }
    }
}

TEST(CfEngine, ThetaProductForm) {
    for (const auto& s : surds()) {
        CFStream cf = surd(s.p, 1, s.q, s.d);
        auto L = convergents(cf, 20);
        RealValue alpha_k = cf.source();
        RealValue prod = alpha_k;
        for (long k = 0; k <= 20; ++k) {
            RealValue expect = (k % 2 == 0) ? prod : -prod;
            EXPECT_TRUE(at(L, k).theta.exactly_equals(expect)) << k;
            alpha_k = mod1(alpha_k.reciprocal());
            prod = prod * alpha_k;
        }
    }
}

TEST(CfEngine, DigitBoundOnTheta) {
    for (const CFStream& cf : {golden(), silver(), surd(-3, 1, 1, 13)}) {
        auto L = convergents(cf, 25);
        for (long k = 1; k <= 25; ++k) {
            RealValue a = at(L, k).a;
            const RealValue& t1 = at(L, k - 1).abs_theta;
            const RealValue& t2 = at(L, k - 2).abs_theta;
            EXPECT_EQ(compare(a * t1, t2), -1);
            EXPECT_EQ(compare(t2, (a + RealValue(1)) * t1), -1);
        }
    }
}

TEST(CfEngine, DenominatorParityIdentity) {
    for (const auto& s : surds()) {
        auto a = reference::surd_cf(s.p, s.q, s.d, 20);
        auto qs = reference::denominators(a);
        for (long n = 0; n <= 20; ++n) {
            BigInt sum = 1 - rho(n);
            for (long k = 1; k <= n; ++k) sum += rho(n + k + 1) * a[k - 1] * qs[k];
            EXPECT_EQ(sum, qs[n + 1]) << n;
        }
    }
}

TEST(CfEngine, SeriesIdentitiesExact) {
    for (const CFStream& cf : {golden(), silver()})
        for (std::size_t n : {1u, 2u, 10u, 40u}) {
            auto rep = series_partials(cf, n);
            ASSERT_FALSE(rep.identities.empty());
            for (const auto& id : rep.identities) EXPECT_TRUE(identity_matches(id)) << id.name << " n=" << n;
        }
}

TEST(CfEngine, SeriesBaseCase) {
    CFStream cf = silver();
    auto L = convergents(cf, 1);
    RealValue lhs = RealValue(at(L, 1).a) * at(L, 0).abs_theta;
    RealValue rhs = RealValue(1) + cf.source() - at(L, 0).abs_theta - at(L, 1).abs_theta;
    EXPECT_TRUE(lhs.exactly_equals(rhs));
}

TEST(CfEngine, SeriesOnDigitStream) {
    auto rep = series_partials(naturals_stream(), 40);
    for (const auto& id : rep.identities) EXPECT_TRUE(identity_matches(id, 100)) << id.name;
}

TEST(CfEngine, SharedStreamAcrossThreads) {
    CFStream cf = surd(-3, 1, 1, 13);
    auto ref = reference::surd_cf(-3, 1, 13, 200);
    std::vector<std::thread> ts;
    std::vector<std::vector<BigInt>> got(4);
    for (int i = 0; i < 4; ++i) ts.emplace_back([&, i] { got[i] = cf.digits(200); });
    for (auto& t : ts) t.join();
    for (const auto& g : got) EXPECT_EQ(g, ref);
}

#include <gtest/gtest.h>

#include <set>

#include "linapprox/numeration.hpp"
#include "linapprox/oracle.hpp"
#include "reference.hpp"

using namespace linapprox;

namespace {

CFStream golden() { return CFStream::from_value(make_quadratic(-1, 1, 2, 5)); }
CFStream silver() { return CFStream::from_value(make_quadratic(-1, 1, 1, 2)); }

DigitString left(std::vector<BigInt> d) { return {std::move(d), DigitKind::LeftAdmissible}; }
DigitString right(std::vector<BigInt> d) { return {std::move(d), DigitKind::RightAdmissible}; }

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Independent enumeration: all digit vectors of length <= n under the given
// per-position bound, filtered by a predicate on the full vector.
template <class Pred>
void all_vectors(const std::vector<long>& bound, std::vector<long>& cur, std::size_t pos, Pred&& keep,
                 std::vector<std::vector<long>>& out) {
    if (pos == bound.size()) {
        if (keep(cur)) out.push_back(cur);
        return;
    }
    for (long d = 0; d <= bound[pos]; ++d) {
        cur[pos] = d;
        all_vectors(bound, cur, pos + 1, keep, out);
    }
}

} // namespace

TEST(Numeration, SpecificCountingEncodings) {
    EXPECT_EQ(encode_counting(24, silver()).digits, ints({0, 0, 0, 2}));
    EXPECT_EQ(encode_counting(7, golden()).digits, ints({0, 0, 1, 0, 1}));
    EXPECT_TRUE(encode_counting(0, silver()).digits.empty());
    EXPECT_EQ(decode_counting(left(ints({0, 1, 1})), silver()), 7);
    EXPECT_EQ(decode_counting(left({}), silver()), 0);
    EXPECT_EQ(decode_counting(left(ints({1})), silver()), 1);
}

TEST(Numeration, ValidateLeftDiagnostics) {
    auto d = validate_left(left(ints({1, 2})), silver());
    EXPECT_FALSE(d.ok);
    EXPECT_EQ(d.condition, "iii");
    EXPECT_EQ(d.index, 2u);
    d = validate_left(left(ints({2})), silver());
    EXPECT_FALSE(d.ok);
    EXPECT_EQ(d.condition, "i");
    EXPECT_TRUE(validate_left(left(ints({0, 2})), silver()).ok);
    EXPECT_FALSE(validate_left(left(ints({1, 0})), silver()).ok);
    EXPECT_THROW(decode_counting(left(ints({2})), silver()), NotAdmissible);
}

TEST(Numeration, SpecificIntegerEncodings) {
    EXPECT_EQ(encode_integer(13, silver()).digits, ints({0, 2, 0, 1, 1}));
    EXPECT_TRUE(encode_integer(0, silver()).digits.empty());
    EXPECT_EQ(encode_integer(-3, silver()).digits, ints({1, 2}));
    EXPECT_EQ(decode_integer(right(ints({2, 0, 2})), silver()), 12);
    EXPECT_EQ(decode_integer(right(ints({0, 0, 0, 2})), silver()), -24);
    EXPECT_EQ(decode_integer(right(ints({0, 1})), golden()), -1);
}

TEST(Numeration, ValidateRightModes) {
    EXPECT_FALSE(validate_right(right(ints({2, 1})), silver(), RightMode::Corrected).ok);
    EXPECT_TRUE(validate_right(right(ints({2, 1})), silver(), RightMode::AsPrinted).ok);
    EXPECT_EQ(decode_integer(right(ints({2, 1})), silver(), RightMode::AsPrinted), 0);
    auto d = validate_right(right(ints({1, 1, 1})), golden(), RightMode::Corrected);
    EXPECT_FALSE(d.ok);
    EXPECT_EQ(d.index, 1u);
}

TEST(Numeration, RangeSets) {
    CFStream cf = silver();
    EXPECT_TRUE(range_set(-1, cf).empty);
    std::vector<std::pair<long, long>> want = {{0, 0}, {0, 2}, {-4, 2}, {-4, 12}, {-28, 12}};
    for (long n = 0; n <= 4; ++n) {
        RangeSet rs = range_set(n, cf);
        EXPECT_EQ(rs.lo, want[n].first) << n;
        EXPECT_EQ(rs.hi, want[n].second) << n;
    }
}

TEST(Numeration, ZeckendorfAgainstGreedyFibonacci) {
    CFStream cf = golden();
    for (unsigned long s = 0; s <= 10000; ++s) {
        auto bits = reference::zeckendorf(s);
        std::vector<BigInt> want;
        if (!bits.empty()) {
            want.push_back(0);
            for (int b : bits) want.push_back(b);
        }
        EXPECT_EQ(encode_counting(s, cf).digits, want) << s;
    }
}

TEST(Numeration, GoldenEdgeRule) {
    DigitString one = encode_counting(1, golden());
    EXPECT_EQ(one.n(), 2u);
    EXPECT_EQ(one.digits, ints({0, 1}));
}

TEST(Numeration, RoundTripsThreeSlopes) {
    std::vector<CFStream> slopes = {golden(), silver(), naturals_stream()};
    for (const CFStream& cf : slopes) {
        for (long s = 0; s <= 10000; ++s) {
            DigitString ds = encode_counting(s, cf);
            ASSERT_TRUE(validate_left(ds, cf).ok) << s;
            ASSERT_EQ(decode_counting(ds, cf), s);
        }
        for (long t = -10000; t <= 10000; ++t) {
            DigitString ds = encode_integer(t, cf);
            ASSERT_TRUE(validate_right(ds, cf).ok) << t;
            ASSERT_EQ(decode_integer(ds, cf), t);
        }
    }
}

TEST(Numeration, IndexWindows) {
    for (const CFStream& cf : {golden(), silver(), naturals_stream()}) {
        auto a = cf.digits(30);
        auto q = reference::denominators(a);  // q[i] = q_{i-1}
        for (long s = 1; s <= 3000; ++s) {
            std::size_t n = encode_counting(s, cf).n();
            EXPECT_TRUE(q[n] <= s && s <= q[n + 1] - 1) << s;
        }
        for (long t = -3000; t <= 3000; ++t) {
            std::size_t n = encode_integer(t, cf).n();
            EXPECT_TRUE(range_set(static_cast<long>(n), cf).contains(t)) << t;
            EXPECT_FALSE(range_set(static_cast<long>(n) - 1, cf).contains(t)) << t;
        }
    }
}

TEST(Numeration, RangeSetFormula) {
    for (const CFStream& cf : {golden(), silver(), naturals_stream()}) {
        auto a = cf.digits(12);
        auto q = reference::denominators(a);
        for (long n = 0; n <= 10; ++n) {
            RangeSet rs = range_set(n, cf);
            EXPECT_EQ(rs.lo, 1 - q[n - rho(n) + 1]);
            EXPECT_EQ(rs.hi, q[n - rho(n - 1) + 1]);
        }
    }
}

TEST(Numeration, ExhaustiveCountingBijection) {
    // Markov conditions written out directly on small vectors.
    for (const CFStream& cf : {golden(), silver(), naturals_stream()}) {
        for (std::size_t n = 0; n <= 6; ++n) {
            auto a = cf.digits(n);
            std::vector<long> bound;
            for (const auto& x : a) bound.push_back(x.get_si());
            auto ok = [&](const std::vector<long>& c) {
                if (!c.empty() && c[0] > bound[0] - 1) return false;
                for (std::size_t k = 1; k < c.size(); ++k)
                    if (c[k] == bound[k] && c[k - 1] != 0) return false;
                return true;
            };
            std::vector<long> cur(n, 0);
            std::vector<std::vector<long>> found;
            all_vectors(bound, cur, 0, ok, found);
            auto q = reference::denominators(a);
            ASSERT_EQ(BigInt(found.size()), q[n + 1]);
            std::set<long> seen;
            for (const auto& c : found) {
                std::vector<BigInt> d(c.begin(), c.end());
                while (!d.empty() && d.back() == 0) d.pop_back();
                long v = decode_counting(left(d), cf).get_si();
                EXPECT_TRUE(seen.insert(v).second);
                EXPECT_GE(v, 0);
                EXPECT_LT(BigInt(v), q[n + 1]);
            }
        }
    }
}

TEST(Numeration, DotProductsIgnoreAdmissibility) {
    CFStream cf = silver();
    EXPECT_EQ(dot_q(ints({2, 1}), cf), 4);
    EXPECT_EQ(dot_q_star(ints({2, 1}), cf), 0);
}

TEST(Numeration, InsufficientDigitsOnFiniteSlope) {
    CFStream cf = CFStream::from_value(make_rational(5, 12));
    EXPECT_THROW(encode_counting(100, cf), InsufficientDigits);
    try {
        encode_integer(-1000, cf);
        FAIL();
    } catch (const InsufficientDigits& e) {
        EXPECT_GT(e.needed(), e.available());
    }
}

#pragma once

// Exact-or-enclosed real arithmetic.
//
// A RealValue is one of three tiers:
//   * BigRational   -- exact rational,
//   * QuadraticReal -- exact element (A + B*sqrt(D))/C of a real quadratic field,
//   * RefinableReal -- a recipe producing nested interval enclosures on demand.
// Arithmetic between exact values of one field stays exact; anything that
// mixes fields or touches a RefinableReal becomes a RefinableReal.  Every
// decision (floor, sign) is either exact or proven from an enclosure, and
// fails with PrecisionExhausted instead of guessing.

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linapprox/errors.hpp"

namespace linapprox {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline constexpr unsigned kStartBits = 64;
inline constexpr unsigned kDefaultMaxBits = 65536;

// ---------------------------------------------------------------------------
// integer helpers

BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt floor_of(const BigRational& x);
BigInt ceil_of(const BigRational& x);
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);
/// Number of bits of |n|; 0 for n = 0.
unsigned bit_length(const BigInt& n);
BigRational make_rational(const BigInt& num, const BigInt& den);

// ---------------------------------------------------------------------------

/// (A + B*sqrt(D)) / C with C > 0, D > 1 squarefree, B != 0 and
/// gcd(A, B, C) = 1.  Equal field elements have identical fields.
class QuadraticReal {
public:
    /// Normalizes the input: square factors of D move into B, signs and
    /// common factors are cancelled.  Throws OutOfDomain when the value is
    /// rational (B = 0 or D a perfect square) or C = 0, and when D has a
    /// cofactor that trial division up to 10^6 cannot certify squarefree.
    QuadraticReal(BigInt a, BigInt b, BigInt c, BigInt d);

    const BigInt& a() const noexcept { return a_; }
    const BigInt& b() const noexcept { return b_; }
    const BigInt& c() const noexcept { return c_; }
    const BigInt& d() const noexcept { return d_; }

    /// Exact sign from comparing A^2 with B^2 D; never zero.
    int sign() const;
    BigInt floor() const;
    std::string to_string() const;

    friend bool operator==(const QuadraticReal& x, const QuadraticReal& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

    /// Skips the squarefree reduction; D must already be squarefree and B != 0.
    static QuadraticReal from_reduced(BigInt a, BigInt b, BigInt c, BigInt d);

private:
    QuadraticReal() = default;
    void normalize_gcd();

    BigInt a_, b_, c_, d_;
};

/// Closed interval [lo, hi] with rational endpoints.
///
/// `saturated` marks enclosures that will not shrink at higher precision
/// (they come from inputs given to finite precision, or are exact points).
/// An unbounded interval stands for "no information at this precision".
struct Interval {
    BigRational lo;
    BigRational hi;
    bool bounded = true;
    bool saturated = false;

    static Interval point(const BigRational& v);
    static Interval whole(bool saturated);

    BigRational width() const { return hi - lo; }
    bool contains(const BigRational& v) const { return !bounded || (lo <= v && v <= hi); }
    bool contains(const Interval& inner) const;
};

/// A real number given by a re-entrant enclosure recipe.
///
/// The recipe maps a precision (bits) to an enclosure whose width is at most
/// 2^-bits whenever the underlying inputs allow it.  Enclosures along a
/// doubling chain are nested.
class RefinableReal {
public:
    using Recipe = std::function<Interval(unsigned bits)>;

    explicit RefinableReal(Recipe recipe, unsigned max_bits = kDefaultMaxBits);

    Interval enclose(unsigned bits) const { return (*recipe_)(bits); }
    unsigned max_bits() const noexcept { return max_bits_; }

private:
    std::shared_ptr<const Recipe> recipe_;
    unsigned max_bits_;
};

class RealValue {
public:
    using Variant = std::variant<BigRational, QuadraticReal, RefinableReal>;

    RealValue() : v_(BigRational(0)) {}
    RealValue(long v) : v_(BigRational(v)) {}
    RealValue(const BigInt& v) : v_(BigRational(v)) {}
    RealValue(const BigRational& v) : v_(v) {}
    RealValue(const QuadraticReal& v) : v_(v) {}
    RealValue(const RefinableReal& v) : v_(v) {}

    bool is_exact() const noexcept { return !is_refinable(); }
    bool is_rational() const noexcept { return std::holds_alternative<BigRational>(v_); }
    bool is_quadratic() const noexcept { return std::holds_alternative<QuadraticReal>(v_); }
    bool is_refinable() const noexcept { return std::holds_alternative<RefinableReal>(v_); }

    const BigRational& rational() const { return std::get<BigRational>(v_); }
    const QuadraticReal& quadratic() const { return std::get<QuadraticReal>(v_); }
    const RefinableReal& refinable() const { return std::get<RefinableReal>(v_); }
    const Variant& variant() const noexcept { return v_; }

    Interval enclose(unsigned bits) const;
    unsigned max_bits() const noexcept;

    /// Grammar form for exact values (`rat:`, `quad:`); "refinable" otherwise.
    std::string to_string() const;

    /// Exact structural equality; only meaningful for exact values.
    bool exactly_equals(const RealValue& other) const;

    friend RealValue operator+(const RealValue& x, const RealValue& y);
    friend RealValue operator-(const RealValue& x, const RealValue& y);
    friend RealValue operator*(const RealValue& x, const RealValue& y);
    friend RealValue operator/(const RealValue& x, const RealValue& y);
    friend RealValue operator-(const RealValue& x);

    /// Inverse; throws OutOfDomain for an exact zero.
    RealValue reciprocal() const;

private:
    Variant v_;
};

/// Builds (A + B sqrt(D))/C, collapsing to a rational when B = 0 or D is a
/// perfect square.
RealValue make_quadratic(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);

/// Refinable value with a fixed enclosure [center - radius, center + radius].
RealValue make_fixed_enclosure(const BigRational& center, const BigRational& radius,
                               unsigned max_bits = kDefaultMaxBits);

// ---------------------------------------------------------------------------
// decisions

BigInt floor_of(const RealValue& x, unsigned budget = kDefaultMaxBits);
int sign_of(const RealValue& x, unsigned budget = kDefaultMaxBits);
/// sign_of(x - y).
int compare(const RealValue& x, const RealValue& y, unsigned budget = kDefaultMaxBits);

RealValue mod1(const RealValue& x, unsigned budget = kDefaultMaxBits);
RealValue int_distance(const RealValue& x, unsigned budget = kDefaultMaxBits);
/// |x|; exact inputs decide the sign, refinable ones stay undecided.
RealValue abs(const RealValue& x, unsigned budget = kDefaultMaxBits);

/// Exact quadratic irrational with continued fraction
/// [0; prefix..., period, period, ...].
QuadraticReal periodic_cf_to_quadratic(const std::vector<BigInt>& prefix,
                                       const std::vector<BigInt>& period);

/// Exact rational [0; digits...].
BigRational finite_cf_to_rational(const std::vector<BigInt>& digits);

// ---------------------------------------------------------------------------
// constants with true refinement

RealValue pi_value();
RealValue e_value();

// ---------------------------------------------------------------------------
// text

/// Parses `rat:P/Q`, `quad:(A+B*sqrt(D))/C`, `dec:<decimal>`,
/// `cf:a1,...,am` and `cf:a1,...,am,(p1,...,pr)`.
RealValue parse_number(std::string_view text, unsigned max_bits = kDefaultMaxBits);

struct DecimalEnclosure {
    std::string value;   // midpoint rounded to the requested number of places
    std::string radius;  // "0" or an upper bound 1e-K
};

DecimalEnclosure to_decimal(const RealValue& x, unsigned places = 30);
/// "value" or "value±radius".
std::string decimal_string(const RealValue& x, unsigned places = 30);

} // namespace linapprox

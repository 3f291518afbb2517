#include "linapprox/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <regex>
#include <sstream>

namespace linapprox {

// ---------------------------------------------------------------------------
// integer helpers

BigInt floor_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw OutOfDomain("division by zero");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt floor_of(const BigRational& x) { return floor_div(x.get_num(), x.get_den()); }

BigInt ceil_of(const BigRational& x) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw OutOfDomain("square root of a negative integer");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

unsigned bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw OutOfDomain("zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

BigInt pow2(unsigned e) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

BigInt pow10(unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigRational abs_q(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

// D = f^2 * core with core squarefree.
std::pair<BigInt, BigInt> squarefree_split(BigInt d) {
    BigInt f = 1;
    BigInt core = 1;
    constexpr unsigned long kTrialLimit = 1000000;
    for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        BigInt pp(p);
        if (pp * pp > d) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
            mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) f *= p;
        if (e % 2 == 1) core *= p;
    }
    if (d > 1) {
        // Every prime factor of d exceeds the trial limit (or d is prime).
        BigInt limit = pow10(12);
        if (d <= limit) {
            core *= d;
        } else if (is_perfect_square(d)) {
            f *= isqrt(d);
        } else if (d < pow10(18)) {
            core *= d;
        } else {
            throw OutOfDomain("cannot certify that the radicand is squarefree: " + d.get_str());
        }
    }
    return {f, core};
}

Interval round_out(const Interval& iv, unsigned grid_bits) {
    if (!iv.bounded || iv.saturated) return iv;
    BigInt scale = pow2(grid_bits);
    BigInt lo = floor_of(BigRational(iv.lo * scale));
    BigInt hi = ceil_of(BigRational(iv.hi * scale));
    Interval out;
    out.lo = make_rational(lo, scale);
    out.hi = make_rational(hi, scale);
    return out;
}

Interval add_iv(const Interval& a, const Interval& b) {
    if (!a.bounded || !b.bounded) return Interval::whole(a.saturated && b.saturated);
    Interval r;
    r.lo = a.lo + b.lo;
    r.hi = a.hi + b.hi;
    r.saturated = a.saturated && b.saturated;
    return r;
}

Interval neg_iv(const Interval& a) {
    if (!a.bounded) return a;
    Interval r = a;
    r.lo = -a.hi;
    r.hi = -a.lo;
    return r;
}

Interval mul_iv(const Interval& a, const Interval& b) {
    if (!a.bounded || !b.bounded) return Interval::whole(a.saturated && b.saturated);
    BigRational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Interval r;
    r.lo = *std::min_element(c, c + 4);
    r.hi = *std::max_element(c, c + 4);
    r.saturated = a.saturated && b.saturated;
    return r;
}

// Requires 0 outside [lo, hi].
Interval recip_iv(const Interval& a) {
    Interval r;
    r.lo = 1 / a.hi;
    r.hi = 1 / a.lo;
    r.saturated = a.saturated;
    return r;
}

bool excludes_zero(const Interval& iv) { return iv.bounded && (iv.lo > 0 || iv.hi < 0); }

// Smallest e >= 0 with 2^e >= |q| (q != 0), or 0.
unsigned upper_log2(const BigRational& q) {
    BigRational a = abs_q(q);
    if (a <= 1) return 0;
    BigInt c = ceil_of(a);
    unsigned e = bit_length(c);
    return e;
}

// Smallest f >= 0 with |q| >= 2^-f for q != 0.
unsigned lower_log2_inv(const BigRational& q) {
    BigRational a = abs_q(q);
    if (a >= 1) return 0;
    BigInt c = ceil_of(BigRational(1 / a));
    return bit_length(c);
}

// Lazy probe along the fixed precision chain 64, 128, ... up to max_bits.
// The answer does not depend on the precision of the caller, which keeps
// composite enclosures nested.
class Probe {
public:
    enum class Kind { Magnitude, AwayFromZero };
    Probe(RealValue x, Kind kind) : x_(std::move(x)), kind_(kind) {}

    // Magnitude: e with |x| <= 2^e.  AwayFromZero: (p, f) with the enclosure
    // at p excluding 0 and |x| >= 2^-f.
    std::optional<std::pair<unsigned, unsigned>> get() const {
        std::call_once(once_, [this] { result_ = compute(); });
        return result_;
    }

private:
    std::optional<std::pair<unsigned, unsigned>> compute() const {
        unsigned cap = std::max(x_.max_bits(), kStartBits);
        for (unsigned p = kStartBits; p <= cap; p *= 2) {
            Interval iv = x_.enclose(p);
            if (kind_ == Kind::Magnitude) {
                if (iv.bounded) return std::make_pair(p, std::max(upper_log2(iv.lo), upper_log2(iv.hi)));
            } else if (excludes_zero(iv)) {
                return std::make_pair(p, std::max(lower_log2_inv(iv.lo), lower_log2_inv(iv.hi)));
            }
            if (iv.saturated) break;
            if (p > cap / 2) break;
        }
        return std::nullopt;
    }

    RealValue x_;
    Kind kind_;
    mutable std::once_flag once_;
    mutable std::optional<std::pair<unsigned, unsigned>> result_;
};

bool all_saturated_at_start(const RealValue& x) { return x.enclose(kStartBits).saturated; }

RealValue sum_refinable(const RealValue& x, const RealValue& y) {
    unsigned cap = std::min(x.max_bits(), y.max_bits());
    return RefinableReal(
        [x, y](unsigned bits) {
            Interval r = add_iv(x.enclose(bits + 2), y.enclose(bits + 2));
            return round_out(r, bits + 4);
        },
        cap);
}

RealValue neg_refinable(const RealValue& x) {
    return RefinableReal([x](unsigned bits) { return neg_iv(x.enclose(bits)); }, x.max_bits());
}

RealValue product_refinable(const RealValue& x, const RealValue& y) {
    unsigned cap = std::min(x.max_bits(), y.max_bits());
    auto px = std::make_shared<Probe>(x, Probe::Kind::Magnitude);
    auto py = std::make_shared<Probe>(y, Probe::Kind::Magnitude);
    return RefinableReal(
        [x, y, px, py](unsigned bits) {
            auto mx = px->get();
            auto my = py->get();
            if (!mx || !my) {
                bool sat = all_saturated_at_start(x) && all_saturated_at_start(y);
                return Interval::whole(sat);
            }
            Interval ex = x.enclose(std::max(mx->first, bits + 2 + my->second));
            Interval ey = y.enclose(std::max(my->first, bits + 2 + mx->second));
            return round_out(mul_iv(ex, ey), bits + 4);
        },
        cap);
}

RealValue reciprocal_refinable(const RealValue& y) {
    auto py = std::make_shared<Probe>(y, Probe::Kind::AwayFromZero);
    return RefinableReal(
        [y, py](unsigned bits) {
            auto nz = py->get();
            if (!nz) return Interval::whole(all_saturated_at_start(y));
            Interval ey = y.enclose(std::max(nz->first, bits + 2 + 2 * nz->second));
            return round_out(recip_iv(ey), bits + 4);
        },
        y.max_bits());
}

// |x|, min(x, 1 - x) and similar maps are monotone on pieces, so they can be
// applied endpoint-wise without deciding anything.
Interval abs_iv(const Interval& a) {
    if (!a.bounded) return a;
    Interval r = a;
    if (a.lo >= 0) return r;
    if (a.hi <= 0) return neg_iv(a);
    r.lo = 0;
    r.hi = std::max(BigRational(-a.lo), a.hi);
    return r;
}

Interval int_distance_iv(const Interval& f) {
    // f lies in [0, 1]; min(f, 1 - f) is monotone increasing then decreasing.
    Interval r = f;
    BigRational half(1, 2);
    BigRational lo_a = std::min(f.lo, BigRational(1 - f.hi));
    BigRational hi_a = (f.lo <= half && half <= f.hi) ? half : std::max(std::min(f.lo, BigRational(1 - f.lo)),
                                                                       std::min(f.hi, BigRational(1 - f.hi)));
    r.lo = lo_a;
    r.hi = hi_a;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// QuadraticReal

QuadraticReal::QuadraticReal(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_ == 0) throw OutOfDomain("quadratic denominator is zero");
    if (d_ < 0) throw OutOfDomain("negative radicand");
    if (b_ == 0 || d_ == 0) throw OutOfDomain("quadratic value is rational");
    auto [f, core] = squarefree_split(d_);
    if (core == 1) throw OutOfDomain("radicand is a perfect square");
    b_ *= f;
    d_ = core;
    normalize_gcd();
}

QuadraticReal QuadraticReal::from_reduced(BigInt a, BigInt b, BigInt c, BigInt d) {
    if (c == 0) throw OutOfDomain("quadratic denominator is zero");
    QuadraticReal q;
    q.a_ = std::move(a);
    q.b_ = std::move(b);
    q.c_ = std::move(c);
    q.d_ = std::move(d);
    q.normalize_gcd();
    return q;
}

void QuadraticReal::normalize_gcd() {
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    BigInt g = gcd(gcd(a_, b_), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

int QuadraticReal::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sa == 0 || sa == sb) return sb;
    BigInt lhs = a_ * a_;
    BigInt rhs = b_ * b_ * d_;
    return lhs > rhs ? sa : sb;
}

BigInt QuadraticReal::floor() const {
    BigInt s = isqrt(BigInt(b_ * b_ * d_));
    if (b_ > 0) return floor_div(a_ + s, c_);
    return floor_div(a_ - s - 1, c_);
}

std::string QuadraticReal::to_string() const {
    std::ostringstream os;
    BigInt mag = b_ < 0 ? BigInt(-b_) : b_;
    os << "quad:(" << a_.get_str() << (b_ < 0 ? "-" : "+") << mag.get_str() << "*sqrt("
       << d_.get_str() << "))/" << c_.get_str();
    return os.str();
}

// ---------------------------------------------------------------------------
// Interval / RefinableReal

Interval Interval::point(const BigRational& v) {
    Interval r;
    r.lo = v;
    r.hi = v;
    r.saturated = true;
    return r;
}

Interval Interval::whole(bool saturated) {
    Interval r;
    r.bounded = false;
    r.saturated = saturated;
    return r;
}

bool Interval::contains(const Interval& inner) const {
    if (!bounded) return true;
    if (!inner.bounded) return false;
    return lo <= inner.lo && inner.hi <= hi;
}

RefinableReal::RefinableReal(Recipe recipe, unsigned max_bits)
    : recipe_(std::make_shared<const Recipe>(std::move(recipe))), max_bits_(max_bits) {}

// ---------------------------------------------------------------------------
// RealValue

Interval RealValue::enclose(unsigned bits) const {
    return std::visit(
        [bits](const auto& v) -> Interval {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BigRational>) {
                return Interval::point(v);
            } else if constexpr (std::is_same_v<T, QuadraticReal>) {
                // floor(|B| sqrt(D) 2^g) from an integer square root.
                BigInt scale = pow2(bits);
                BigInt s = isqrt(BigInt(v.b() * v.b() * v.d() * scale * scale));
                BigRational lo_t = make_rational(s, scale);
                BigRational hi_t = make_rational(s + 1, scale);
                Interval r;
                if (v.b() > 0) {
                    r.lo = (v.a() + lo_t) / v.c();
                    r.hi = (v.a() + hi_t) / v.c();
                } else {
                    r.lo = (v.a() - hi_t) / v.c();
                    r.hi = (v.a() - lo_t) / v.c();
                }
                return r;
            } else {
                return v.enclose(bits);
            }
        },
        v_);
}

unsigned RealValue::max_bits() const noexcept {
    if (const auto* r = std::get_if<RefinableReal>(&v_)) return r->max_bits();
    return kDefaultMaxBits;
}

std::string RealValue::to_string() const {
    if (is_rational()) {
        const auto& q = rational();
        return "rat:" + q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    if (is_quadratic()) return quadratic().to_string();
    return "refinable";
}

bool RealValue::exactly_equals(const RealValue& other) const {
    if (is_rational() && other.is_rational()) return rational() == other.rational();
    if (is_quadratic() && other.is_quadratic()) return quadratic() == other.quadratic();
    return false;
}

RealValue make_quadratic(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    if (c == 0) throw OutOfDomain("quadratic denominator is zero");
    if (b == 0 || d == 0) return make_rational(a, c);
    if (d < 0) throw OutOfDomain("negative radicand");
    if (is_perfect_square(d)) return make_rational(a + b * isqrt(d), c);
    return QuadraticReal(a, b, c, d);
}

namespace {

// Exact field operations on canonical forms sharing D.
RealValue quad_from_canonical(BigInt a, BigInt b, BigInt c, const BigInt& d) {
    if (b == 0) return make_rational(a, c);
    return QuadraticReal::from_reduced(std::move(a), std::move(b), std::move(c), d);
}

struct Parts {
    BigInt a, b, c, d;  // d == 0 for rationals
};

Parts parts_of(const RealValue& x) {
    if (x.is_rational()) return {x.rational().get_num(), 0, x.rational().get_den(), 0};
    const auto& q = x.quadratic();
    return {q.a(), q.b(), q.c(), q.d()};
}

// Shared field of two exact values, or nullopt if they live in different fields.
std::optional<BigInt> common_field(const Parts& x, const Parts& y) {
    if (x.d == 0) return y.d;
    if (y.d == 0 || y.d == x.d) return x.d;
    return std::nullopt;
}

} // namespace

RealValue operator+(const RealValue& x, const RealValue& y) {
    if (x.is_exact() && y.is_exact()) {
        if (x.is_rational() && y.is_rational()) return BigRational(x.rational() + y.rational());
        Parts px = parts_of(x), py = parts_of(y);
        if (auto d = common_field(px, py)) {
            return quad_from_canonical(px.a * py.c + py.a * px.c, px.b * py.c + py.b * px.c, px.c * py.c, *d);
        }
    }
    return sum_refinable(x, y);
}

RealValue operator-(const RealValue& x) {
    if (x.is_rational()) return BigRational(-x.rational());
    if (x.is_quadratic()) {
        const auto& q = x.quadratic();
        return quad_from_canonical(-q.a(), -q.b(), q.c(), q.d());
    }
    return neg_refinable(x);
}

RealValue operator-(const RealValue& x, const RealValue& y) { return x + (-y); }

RealValue operator*(const RealValue& x, const RealValue& y) {
    if (x.is_exact() && y.is_exact()) {
        if (x.is_rational() && y.is_rational()) return BigRational(x.rational() * y.rational());
        Parts px = parts_of(x), py = parts_of(y);
        if (auto d = common_field(px, py)) {
            BigInt a = px.a * py.a + px.b * py.b * *d;
            BigInt b = px.a * py.b + py.a * px.b;
            return quad_from_canonical(a, b, px.c * py.c, *d);
        }
    }
    return product_refinable(x, y);
}

RealValue RealValue::reciprocal() const {
    if (is_rational()) {
        if (rational() == 0) throw OutOfDomain("division by zero");
        return BigRational(1 / rational());
    }
    if (is_quadratic()) {
        const auto& q = quadratic();
        BigInt n = q.a() * q.a() - q.b() * q.b() * q.d();
        return quad_from_canonical(q.c() * q.a(), -q.c() * q.b(), n, q.d());
    }
    return reciprocal_refinable(*this);
}

RealValue operator/(const RealValue& x, const RealValue& y) { return x * y.reciprocal(); }

RealValue make_fixed_enclosure(const BigRational& center, const BigRational& radius, unsigned max_bits) {
    BigRational r = abs_q(radius);
    BigRational lo = center - r, hi = center + r;
    return RefinableReal(
        [lo, hi](unsigned) {
            Interval iv;
            iv.lo = lo;
            iv.hi = hi;
            iv.saturated = true;
            return iv;
        },
        max_bits);
}

// ---------------------------------------------------------------------------
// decisions

namespace {

template <class Decide>
auto decide(const RealValue& x, unsigned budget, const char* what, Decide&& d) {
    unsigned cap = std::min(budget, x.max_bits());
    cap = std::max(cap, kStartBits);
    unsigned bits = kStartBits;
    for (;;) {
        Interval iv = x.enclose(bits);
        if (iv.bounded) {
            if (auto r = d(iv)) return *r;
        }
        if (iv.saturated || bits >= cap) throw PrecisionExhausted(what, bits);
        bits = bits > cap / 2 ? cap : bits * 2;
    }
}

} // namespace

BigInt floor_of(const RealValue& x, unsigned budget) {
    if (x.is_rational()) return floor_of(x.rational());
    if (x.is_quadratic()) return x.quadratic().floor();
    return decide(x, budget, "floor straddles an integer", [](const Interval& iv) -> std::optional<BigInt> {
        BigInt a = floor_of(iv.lo);
        if (a == floor_of(iv.hi)) return a;
        return std::nullopt;
    });
}

int sign_of(const RealValue& x, unsigned budget) {
    if (x.is_rational()) return sgn(x.rational());
    if (x.is_quadratic()) return x.quadratic().sign();
    return decide(x, budget, "enclosure contains zero", [](const Interval& iv) -> std::optional<int> {
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
        if (iv.lo == 0 && iv.hi == 0) return 0;
        return std::nullopt;
    });
}

int compare(const RealValue& x, const RealValue& y, unsigned budget) { return sign_of(x - y, budget); }

RealValue mod1(const RealValue& x, unsigned budget) {
    BigInt f = floor_of(x, budget);
    if (x.is_refinable()) {
        // Clamp to [0, 1] using the decided floor.
        return RefinableReal(
            [x, f](unsigned bits) {
                Interval iv = x.enclose(bits);
                if (!iv.bounded) return iv;
                iv.lo -= f;
                iv.hi -= f;
                if (iv.lo < 0) iv.lo = 0;
                if (iv.hi > 1) iv.hi = 1;
                return iv;
            },
            x.max_bits());
    }
    return x - RealValue(f);
}

RealValue int_distance(const RealValue& x, unsigned budget) {
    RealValue f = mod1(x, budget);
    if (f.is_exact()) {
        RealValue g = RealValue(1L) - f;
        return compare(f, g, budget) <= 0 ? f : g;
    }
    return RefinableReal(
        [f](unsigned bits) {
            Interval iv = f.enclose(bits);
            if (!iv.bounded) return iv;
            return int_distance_iv(iv);
        },
        f.max_bits());
}

RealValue abs(const RealValue& x, unsigned budget) {
    if (x.is_exact()) return sign_of(x, budget) < 0 ? -x : x;
    return RefinableReal([x](unsigned bits) { return abs_iv(x.enclose(bits)); }, x.max_bits());
}

// ---------------------------------------------------------------------------
// continued fractions

BigRational finite_cf_to_rational(const std::vector<BigInt>& digits) {
    BigInt p_prev = 1, p = 0, q_prev = 0, q = 1;
    for (const auto& a : digits) {
        if (a < 1) throw InvalidDigits("continued fraction digit " + a.get_str() + " < 1");
        BigInt pn = a * p + p_prev;
        BigInt qn = a * q + q_prev;
        p_prev = p;
        p = pn;
        q_prev = q;
        q = qn;
    }
    return make_rational(p, q);
}

QuadraticReal periodic_cf_to_quadratic(const std::vector<BigInt>& prefix, const std::vector<BigInt>& period) {
    if (period.empty()) throw InvalidDigits("empty period");
    for (const auto& a : prefix)
        if (a < 1) throw InvalidDigits("continued fraction digit " + a.get_str() + " < 1");
    for (const auto& a : period)
        if (a < 1) throw InvalidDigits("continued fraction digit " + a.get_str() + " < 1");

    // Period convergents of [0; period] give the fixed point y = 1/(period + y),
    // i.e. y = (p_r + p_{r-1} y)/(q_r + q_{r-1} y).
    BigInt p_prev = 1, p = 0, q_prev = 0, q = 1;
    for (const auto& a : period) {
        BigInt pn = a * p + p_prev;
        BigInt qn = a * q + q_prev;
        p_prev = p;
        p = pn;
        q_prev = q;
        q = qn;
    }
    // q_{r-1} y^2 + (q_r - p_{r-1}) y - p_r = 0, positive root.
    BigInt qa = q_prev, qb = q - p_prev, qc = -p;
    BigInt disc = qb * qb - 4 * qa * qc;
    RealValue y;
    if (qa == 0) {
        y = make_rational(-qc, qb);
    } else {
        y = make_quadratic(-qb, 1, 2 * qa, disc);
    }

    // x = (P_m + P_{m-1} y)/(Q_m + Q_{m-1} y) with the prefix convergents.
    BigInt P_prev = 1, P = 0, Q_prev = 0, Q = 1;
    for (const auto& a : prefix) {
        BigInt pn = a * P + P_prev;
        BigInt qn = a * Q + Q_prev;
        P_prev = P;
        P = pn;
        Q_prev = Q;
        Q = qn;
    }
    RealValue x = (RealValue(P) + RealValue(P_prev) * y) / (RealValue(Q) + RealValue(Q_prev) * y);
    if (!x.is_quadratic()) throw InvalidDigits("periodic expansion produced a rational value");
    return x.quadratic();
}

// ---------------------------------------------------------------------------
// constants

namespace {

// Bracket of atan(1/x) by consecutive partial sums of the alternating series,
// with enough terms that weight * (first omitted term) <= 2^-bits.
std::pair<BigRational, BigRational> atan_inv_bracket(unsigned long x, unsigned bits, unsigned long weight) {
    BigInt target = pow2(bits) * weight;
    BigInt x2 = BigInt(x) * x;
    BigRational sum = 0;
    BigInt xpow = x;  // x^{2k+1}
    unsigned long k = 0;
    for (;; ++k) {
        BigInt den = xpow * (2 * k + 1);
        BigRational term = make_rational(1, den);
        if (den >= target) {
            BigRational next = (k % 2 == 0) ? BigRational(sum + term) : BigRational(sum - term);
            return sum < next ? std::make_pair(sum, next) : std::make_pair(next, sum);
        }
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
        xpow *= x2;
    }
}

} // namespace

RealValue pi_value() {
    return RefinableReal([](unsigned bits) {
        // pi = 16 atan(1/5) - 4 atan(1/239)
        auto [a_lo, a_hi] = atan_inv_bracket(5, bits + 3, 16);
        auto [b_lo, b_hi] = atan_inv_bracket(239, bits + 3, 4);
        Interval iv;
        iv.lo = 16 * a_lo - 4 * b_hi;
        iv.hi = 16 * a_hi - 4 * b_lo;
        return round_out(iv, bits + 2);
    });
}

RealValue e_value() {
    return RefinableReal([](unsigned bits) {
        // e in [S_N, S_N + 1/(N N!)], S_N = sum_{k<=N} 1/k!.
        BigInt target = pow2(bits + 2);
        BigInt fact = 1;
        unsigned long n = 1;
        while (fact * n < target) {
            ++n;
            fact *= n;
        }
        // fact = n!
        BigInt num = 0, t = 1;
        for (unsigned long k = n; k >= 1; --k) {
            num += t;  // n!/k!
            t *= k;
        }
        num += t;  // k = 0
        Interval iv;
        iv.lo = make_rational(num, fact);
        iv.hi = iv.lo + make_rational(1, fact * n);
        return round_out(iv, bits + 2);
    });
}

// ---------------------------------------------------------------------------
// text

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

BigInt parse_int(const std::string& s, const std::string& context) {
    static const std::regex re(R"(^[+-]?\d+$)");
    std::string t = trim(s);
    if (!std::regex_match(t, re)) throw ParseError("expected an integer in " + context + ": '" + t + "'");
    if (t[0] == '+') t = t.substr(1);
    return BigInt(t, 10);
}

std::vector<BigInt> parse_digit_list(const std::string& s, const std::string& context) {
    std::vector<BigInt> out;
    std::string t = trim(s);
    if (t.empty()) return out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, context));
    return out;
}

} // namespace

RealValue parse_number(std::string_view text_in, unsigned max_bits) {
    std::string text = trim(text_in);
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("missing tag in number '" + text + "'");
    std::string tag = text.substr(0, colon);
    std::string body = trim(std::string_view(text).substr(colon + 1));

    if (tag == "rat") {
        auto slash = body.find('/');
        BigInt p = parse_int(body.substr(0, slash), text);
        BigInt q = slash == std::string::npos ? BigInt(1) : parse_int(body.substr(slash + 1), text);
        if (q == 0) throw ParseError("zero denominator in '" + text + "'");
        return make_rational(p, q);
    }
    if (tag == "quad") {
        static const std::regex re(
            R"(^\(\s*([+-]?\d+)\s*([+-])\s*(?:(\d+)\s*\*\s*)?sqrt\(\s*(\d+)\s*\)\s*\)\s*(?:/\s*([+-]?\d+))?$)");
        std::smatch m;
        if (!std::regex_match(body, m, re)) throw ParseError("malformed quadratic '" + text + "'");
        BigInt a = parse_int(m[1], text);
        BigInt b = m[3].matched ? parse_int(m[3], text) : BigInt(1);
        if (m[2] == "-") b = -b;
        BigInt d = parse_int(m[4], text);
        BigInt c = m[5].matched ? parse_int(m[5], text) : BigInt(1);
        if (c == 0) throw ParseError("zero denominator in '" + text + "'");
        try {
            return make_quadratic(a, b, c, d);
        } catch (const OutOfDomain& e) {
            throw ParseError(e.what());
        }
    }
    if (tag == "dec") {
        static const std::regex re(R"(^([+-]?)(\d*)(?:\.(\d*))?$)");
        std::smatch m;
        if (!std::regex_match(body, m, re) || (m[2].length() == 0 && m[3].length() == 0))
            throw ParseError("malformed decimal '" + text + "'");
        std::string ip = m[2].length() ? std::string(m[2]) : "0";
        std::string fp = m[3];
        BigInt num(ip + fp, 10);
        if (m[1] == "-") num = -num;
        unsigned places = static_cast<unsigned>(fp.size());
        BigInt den = pow10(places);
        return make_fixed_enclosure(make_rational(num, den), make_rational(1, den), max_bits);
    }
    if (tag == "cf") {
        auto open = body.find('(');
        try {
            if (open == std::string::npos) return finite_cf_to_rational(parse_digit_list(body, text));
            auto close = body.find(')', open);
            if (close == std::string::npos || trim(body.substr(close + 1)) != "")
                throw ParseError("malformed periodic part in '" + text + "'");
            std::string head = trim(body.substr(0, open));
            if (!head.empty()) {
                if (head.back() != ',') throw ParseError("expected ',' before period in '" + text + "'");
                head.pop_back();
            }
            auto prefix = parse_digit_list(head, text);
            auto period = parse_digit_list(body.substr(open + 1, close - open - 1), text);
            return periodic_cf_to_quadratic(prefix, period);
        } catch (const InvalidDigits& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown number tag '" + tag + "'");
}

namespace {

std::string fixed_point(const BigInt& scaled, unsigned places, bool trim_zeros) {
    bool neg = scaled < 0;
    BigInt a = neg ? BigInt(-scaled) : scaled;
    std::string digits = a.get_str();
    if (digits.size() <= places) digits = std::string(places + 1 - digits.size(), '0') + digits;
    std::string ip = digits.substr(0, digits.size() - places);
    std::string fp = digits.substr(digits.size() - places);
    if (trim_zeros)
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
    std::string out = (neg && (a != 0)) ? "-" : "";
    out += ip;
    if (!fp.empty()) out += "." + fp;
    return out;
}

} // namespace

DecimalEnclosure to_decimal(const RealValue& x, unsigned places) {
    unsigned bits = places * 10 / 3 + 16;
    Interval iv = x.enclose(bits);
    if (!iv.bounded) return {"unbounded", "inf"};
    BigInt scale = pow10(places);
    BigRational mid = (iv.lo + iv.hi) / 2;
    BigRational scaled_mid = mid * scale;
    BigInt rounded = floor_of(BigRational(scaled_mid + BigRational(1, 2)));
    BigRational err = (iv.hi - iv.lo) / 2 + abs_q(BigRational(make_rational(rounded, scale) - mid));
    if (err == 0) return {fixed_point(rounded, places, true), "0"};
    // Smallest power of ten >= err, reported as 1eK.
    int k = 0;
    BigRational p = 1;
    while (p < err) {
        p *= 10;
        ++k;
    }
    while (p / 10 >= err) {
        p /= 10;
        --k;
    }
    std::string radius = k == 0 ? "1" : "1e" + std::to_string(k);
    return {fixed_point(rounded, places, false), radius};
}

std::string decimal_string(const RealValue& x, unsigned places) {
    auto d = to_decimal(x, places);
    if (d.radius == "0") return d.value;
    return d.value + "±" + d.radius;
}

} // namespace linapprox

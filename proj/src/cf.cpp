#include "linapprox/cf.hpp"

#include <mutex>

namespace linapprox {

namespace {

enum class Mode { Exact, Enclosure, Generator };

// Memo shared by a generator stream and the recipe enclosing its slope.
struct GeneratorMemo {
    CFStream::Generator gen;
    mutable std::mutex mu;
    mutable std::vector<BigInt> digits;

    BigInt get(std::size_t k) const {
        std::lock_guard lock(mu);
        while (digits.size() < k) {
            BigInt a = gen(digits.size() + 1);
            if (a < 1) throw InvalidDigits("generated digit a_" + std::to_string(digits.size() + 1) + " = " +
                                           a.get_str());
            digits.push_back(std::move(a));
        }
        return digits[k - 1];
    }
};

BigInt pow2(unsigned e) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

// The cylinder of all numbers with prefix a_1..a_m lies between p_m/q_m and
// (p_m + p_{m-1})/(q_m + q_{m-1}); its width is 1/(q_m (q_m + q_{m-1})).
Interval cylinder_enclosure(const GeneratorMemo& memo, unsigned bits) {
    BigInt target = pow2(bits);
    BigInt p_prev = 1, p = 0, q_prev = 0, q = 1;
    for (std::size_t m = 1;; ++m) {
        BigInt a = memo.get(m);
        BigInt pn = a * p + p_prev;
        BigInt qn = a * q + q_prev;
        p_prev = p;
        p = pn;
        q_prev = q;
        q = qn;
        if (q * (q + q_prev) >= target) break;
    }
    BigRational x = make_rational(p, q);
    BigRational y = make_rational(p + p_prev, q + q_prev);
    Interval iv;
    iv.lo = x < y ? x : y;
    iv.hi = x < y ? y : x;
    return iv;
}

} // namespace

struct CFStream::State {
    Mode mode = Mode::Exact;
    RealValue source;
    unsigned budget = kDefaultMaxBits;

    mutable std::mutex mu;
    mutable std::vector<BigInt> digits;
    mutable bool finished = false;
    mutable RealValue iterate;  // alpha_{digits.size()} in exact mode
    std::shared_ptr<GeneratorMemo> memo;

    void normalize_tail() const {
        if (digits.size() >= 2 && digits.back() == 1) {
            digits.pop_back();
            digits.back() += 1;
        }
    }

    void extend_exact(std::size_t n) const {
        while (!finished && digits.size() < n) {
            if (sign_of(iterate) == 0) {
                finished = true;
                normalize_tail();
                break;
            }
            RealValue inv = iterate.reciprocal();
            BigInt a = floor_of(inv);
            iterate = inv - RealValue(a);
            digits.push_back(std::move(a));
        }
    }

    void extend_enclosure(std::size_t n) const {
        unsigned cap = std::max(std::min(budget, source.max_bits()), kStartBits);
        for (unsigned bits = kStartBits;; bits = bits > cap / 2 ? cap : bits * 2) {
            Interval iv = source.enclose(bits);
            if (iv.bounded) {
                BigRational lo = iv.lo, hi = iv.hi;
                for (std::size_t k = 0; k < n; ++k) {
                    if (lo <= 0) break;
                    BigInt a_lo = floor_of(BigRational(1 / hi));
                    BigInt a_hi = floor_of(BigRational(1 / lo));
                    if (a_lo != a_hi) break;
                    if (a_lo < 1) throw OutOfDomain("slope is not below 1");
                    if (k >= digits.size()) digits.push_back(a_lo);
                    BigRational nlo = 1 / hi - a_lo;
                    BigRational nhi = 1 / lo - a_lo;
                    lo = nlo;
                    hi = nhi;
                }
            }
            if (digits.size() >= n) return;
            if (iv.saturated || bits >= cap)
                throw PrecisionExhausted("continued fraction digit a_" + std::to_string(digits.size() + 1) +
                                             " is not determined by the slope enclosure",
                                         bits);
        }
    }

    void extend(std::size_t n) const {
        if (digits.size() >= n || finished) return;
        switch (mode) {
        case Mode::Exact:
            extend_exact(n);
            break;
        case Mode::Enclosure:
            extend_enclosure(n);
            break;
        case Mode::Generator:
            for (std::size_t k = digits.size() + 1; k <= n; ++k) digits.push_back(memo->get(k));
            break;
        }
    }
};

CFStream CFStream::from_value(const RealValue& slope, unsigned budget) {
    BigInt f = floor_of(slope, budget);
    if (f != 0) throw OutOfDomain("slope must lie in [0, 1)");
    auto s = std::make_shared<State>();
    s->source = slope;
    s->budget = budget;
    if (slope.is_exact()) {
        s->mode = Mode::Exact;
        s->iterate = slope;
    } else {
        s->mode = Mode::Enclosure;
    }
    return CFStream(std::move(s));
}

CFStream CFStream::from_digits(std::vector<BigInt> digits) {
    auto s = std::make_shared<State>();
    s->source = finite_cf_to_rational(digits);
    s->mode = Mode::Exact;
    s->digits = std::move(digits);
    s->finished = true;
    s->normalize_tail();
    return CFStream(std::move(s));
}

CFStream CFStream::from_generator(Generator gen, unsigned max_bits) {
    auto memo = std::make_shared<GeneratorMemo>();
    memo->gen = std::move(gen);
    auto s = std::make_shared<State>();
    s->mode = Mode::Generator;
    s->memo = memo;
    s->budget = max_bits;
    s->source = RefinableReal([memo](unsigned bits) { return cylinder_enclosure(*memo, bits); }, max_bits);
    return CFStream(std::move(s));
}

std::size_t CFStream::available(std::size_t n) const {
    std::lock_guard lock(s_->mu);
    s_->extend(n);
    return std::min(n, s_->digits.size());
}

BigInt CFStream::digit(std::size_t k) const {
    if (k == 0) throw OutOfDomain("continued fraction digits start at index 1");
    std::lock_guard lock(s_->mu);
    s_->extend(k);
    if (s_->digits.size() < k) throw InsufficientDigits("digit a_" + std::to_string(k), k, s_->digits.size());
    return s_->digits[k - 1];
}

std::vector<BigInt> CFStream::digits(std::size_t n) const {
    std::lock_guard lock(s_->mu);
    s_->extend(n);
    if (s_->digits.size() < n) throw InsufficientDigits("finite expansion", n, s_->digits.size());
    return {s_->digits.begin(), s_->digits.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<BigInt> CFStream::known_digits() const {
    std::lock_guard lock(s_->mu);
    return s_->digits;
}

std::optional<std::size_t> CFStream::length() const {
    std::lock_guard lock(s_->mu);
    if (s_->mode == Mode::Exact && s_->source.is_rational()) {
        // Rational expansions are short; finish them eagerly.
        while (!s_->finished) s_->extend(s_->digits.size() + 1);
    }
    if (s_->finished) return s_->digits.size();
    return std::nullopt;
}

bool CFStream::is_finite() const { return length().has_value(); }

const RealValue& CFStream::source() const { return s_->source; }

unsigned CFStream::budget() const { return s_->budget; }

CFStream cf_expand(const RealValue& slope, std::size_t max_digits, unsigned budget) {
    CFStream cf = CFStream::from_value(slope, budget);
    cf.available(max_digits);
    return cf;
}

namespace {

ConvergentState make_state(long k, BigInt a, BigInt p, BigInt q, const RealValue& alpha) {
    ConvergentState s;
    s.k = k;
    s.a = std::move(a);
    s.p = std::move(p);
    s.q = std::move(q);
    s.parity = rho(k);
    bool odd = s.parity == 1;
    s.p_star = odd ? BigInt(-s.p) : s.p;
    s.q_star = odd ? BigInt(-s.q) : s.q;
    s.theta = RealValue(s.q) * alpha - RealValue(s.p);
    s.abs_theta = odd ? -s.theta : s.theta;
    return s;
}

} // namespace

ConvergentLadder::ConvergentLadder(CFStream cf) : cf_(std::move(cf)) {
    states_.push_back(make_state(-1, 0, 1, 0, cf_.source()));
    states_.push_back(make_state(0, 0, 0, 1, cf_.source()));
}

const ConvergentState& ConvergentLadder::operator[](long k) {
    if (k < -1) throw OutOfDomain("convergent index below -1");
    while (static_cast<long>(states_.size()) - 2 < k) {
        std::size_t j = states_.size() - 1;
        std::size_t have = cf_.available(j);
        if (have < j) throw InsufficientDigits("convergent " + std::to_string(j), j, have);
        BigInt a = cf_.digit(j);
        const auto& m1 = states_[j];
        const auto& m2 = states_[j - 1];
        BigInt p = a * m1.p + m2.p;
        BigInt q = a * m1.q + m2.q;
        states_.push_back(make_state(static_cast<long>(j), std::move(a), std::move(p), std::move(q), cf_.source()));
    }
    return states_[static_cast<std::size_t>(k + 1)];
}

std::vector<ConvergentState> convergents(const CFStream& cf, std::size_t n) {
    cf.digits(n);
    ConvergentLadder L(cf);
    std::vector<ConvergentState> out;
    out.reserve(n + 2);
    for (long k = -1; k <= static_cast<long>(n); ++k) out.push_back(L[k]);
    return out;
}

SeriesReport series_partials(const CFStream& cf, std::size_t n) {
    if (n < 1) throw OutOfDomain("series index must be at least 1");
    auto L = convergents(cf, n);
    const RealValue& alpha = cf.source();
    auto T = [&](long k) -> const ConvergentState& { return at(L, k); };
    const long N = static_cast<long>(n);
    SeriesReport rep;
    rep.n = n;

    {
        RealValue abs_sum, signed_sum;
        for (long k = 1; k <= N; ++k) {
            abs_sum = abs_sum + RealValue(T(k).a) * T(k - 1).abs_theta;
            signed_sum = signed_sum + RealValue(T(k).a) * T(k - 1).theta;
        }
        rep.identities.push_back(
            {"absolute_series", abs_sum, RealValue(1L) + alpha - T(N - 1).abs_theta - T(N).abs_theta});
        rep.identities.push_back(
            {"signed_series", signed_sum, RealValue(1L) - alpha + T(N - 1).theta + T(N).theta});
    }
    {
        // sum_{k=1}^{m} a_{2k} |theta_{2k-1}| = alpha - |theta_{2m}|, 2m <= n
        RealValue s;
        long m = N / 2;
        for (long k = 1; k <= m; ++k) s = s + RealValue(T(2 * k).a) * T(2 * k - 1).abs_theta;
        rep.identities.push_back({"self_expansion", s, alpha - T(2 * m).abs_theta});
    }
    {
        // sum_{k=0}^{m} a_{2k+1} |theta_{2k}| = 1 - |theta_{2m+1}|, 2m+1 <= n
        RealValue s;
        long m = (N - 1) / 2;
        for (long k = 0; k <= m; ++k) s = s + RealValue(T(2 * k + 1).a) * T(2 * k).abs_theta;
        rep.identities.push_back({"unity_expansion", s, RealValue(1L) - T(2 * m + 1).abs_theta});
    }
    {
        // Tails from s = max(1, n/2): terms i = s, s+2, ... <= n-1.
        long s = std::max(1L, N / 2);
        RealValue abs_tail, signed_tail;
        long last = s;
        for (long i = s; i <= N - 1; i += 2) {
            abs_tail = abs_tail + RealValue(T(i + 1).a) * T(i).abs_theta;
            signed_tail = signed_tail + RealValue(T(i + 1).a) * T(i).theta;
            last = i;
        }
        if (s <= N - 1) {
            rep.identities.push_back({"parity_tail", abs_tail, T(s - 1).abs_theta - T(last + 1).abs_theta});
            rep.identities.push_back({"signed_parity_tail", signed_tail, -T(s - 1).theta + T(last + 1).theta});
        }
        RealValue tail;
        for (long k = s + 1; k <= N; ++k) tail = tail + RealValue(T(k).a) * T(k - 1).abs_theta;
        rep.identities.push_back({"absolute_tail", tail,
                                  T(s - 1).abs_theta + T(s).abs_theta - T(N - 1).abs_theta - T(N).abs_theta});
    }
    {
        // q_n = 1 - rho_n + sum_{k=1}^{n} rho_{n+k+1} a_k q_{k-1}
        BigInt s = 1 - rho(N);
        for (long k = 1; k <= N; ++k)
            if (rho(N + k + 1) == 1) s += T(k).a * T(k - 1).q;
        rep.identities.push_back({"q_parity_sum", RealValue(s), RealValue(T(N).q)});
    }
    {
        // Only for the golden section: sum_{k=0}^{n} |theta_k| = (1 + phi)(1 - |theta_n|).
        RealValue phi = make_quadratic(-1, 1, 2, 5);
        if (alpha.is_quadratic() && alpha.exactly_equals(phi)) {
            RealValue s;
            for (long k = 0; k <= N; ++k) s = s + T(k).abs_theta;
            RealValue one_plus = RealValue(1L) + phi;
            rep.identities.push_back({"golden_theta_sum", s, one_plus - one_plus * T(N).abs_theta});
        }
    }
    return rep;
}

bool identity_matches(const SeriesIdentity& id, unsigned tol_bits) {
    if (id.partial.is_exact() && id.closed_form.is_exact()) {
        return sign_of(id.partial - id.closed_form) == 0;
    }
    RealValue diff = id.partial - id.closed_form;
    Interval iv = diff.enclose(tol_bits + 8);
    if (!iv.bounded) return false;
    BigRational tol = make_rational(1, pow2(tol_bits));
    return iv.lo >= -tol && iv.hi <= tol;
}

} // namespace linapprox

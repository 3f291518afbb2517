#include "linapprox/numeration.hpp"

namespace linapprox {

std::string to_string(DigitKind kind) {
    switch (kind) {
    case DigitKind::LeftAdmissible: return "left-admissible";
    case DigitKind::RightAdmissible: return "right-admissible";
    case DigitKind::AbsExpansion: return "absolute-expansion";
    case DigitKind::AltExpansion: return "alternating-expansion";
    }
    return "unknown";
}

DenominatorLadder::DenominatorLadder(CFStream cf) : cf_(std::move(cf)), q_{0, 1} {}

void DenominatorLadder::ensure(long k) {
    while (static_cast<long>(q_.size()) - 2 < k) {
        std::size_t j = q_.size() - 1;  // next index to compute
        std::size_t have = cf_.available(j);
        if (have < j) throw InsufficientDigits("denominator q_" + std::to_string(j), j, have);
        q_.push_back(cf_.digit(j) * q_[j] + q_[j - 1]);
    }
}

const BigInt& DenominatorLadder::q(long k) {
    if (k < -1) throw OutOfDomain("denominator index below -1");
    ensure(k);
    return q_[static_cast<std::size_t>(k + 1)];
}

BigInt DenominatorLadder::q_star(long k) { return rho(k) ? BigInt(-q(k)) : q(k); }

std::size_t DenominatorLadder::first_index_above(const BigInt& value, std::size_t lo) {
    for (std::size_t n = lo;; ++n) {
        if (value < q(static_cast<long>(n))) return n;
    }
}

namespace {

Diagnostic fail(const char* cond, std::size_t k, std::string msg) {
    Diagnostic d;
    d.ok = false;
    d.condition = cond;
    d.index = k;
    d.message = std::move(msg);
    return d;
}

std::string at_k(const char* what, std::size_t k) { return std::string(what) + " at k=" + std::to_string(k); }

} // namespace

Diagnostic validate_left(const DigitString& ds, const CFStream& cf, bool require_terminal) {
    const std::size_t n = ds.n();
    if (n == 0) return {};
    auto a = cf.digits(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const BigInt& c = ds.digits[k - 1];
        if (k == 1 && (c < 0 || c > a[0] - 1)) return fail("i", 1, "c_1 must lie in [0, a_1 - 1]");
        if (c < 0 || c > a[k - 1]) return fail("ii", k, at_k("digit outside [0, a_k]", k));
        if (k >= 2 && c == a[k - 1] && ds.digits[k - 2] != 0)
            return fail("iii", k, at_k("c_k = a_k requires c_{k-1} = 0", k));
    }
    if (require_terminal && ds.digits.back() < 1) return fail("terminal", n, "final digit must be at least 1");
    return {};
}

Diagnostic validate_right(const DigitString& ds, const CFStream& cf, RightMode mode, bool require_terminal) {
    const std::size_t n = ds.n();
    if (n == 0) return {};
    auto a = cf.digits(n);
    const std::size_t last_pair = mode == RightMode::Corrected ? n - 1 : (n >= 2 ? n - 2 : 0);
    for (std::size_t k = 1; k <= n; ++k) {
        const BigInt& b = ds.digits[k - 1];
        if (b < 0 || b > a[k - 1]) return fail("i", k, at_k("digit outside [0, a_k]", k));
    }
    for (std::size_t k = 1; k <= last_pair; ++k) {
        if (ds.digits[k - 1] == a[k - 1] && ds.digits[k] != 0)
            return fail("ii", k, at_k("b_k = a_k requires b_{k+1} = 0", k));
    }
    if (require_terminal && ds.digits.back() < 1) return fail("terminal", n, "final digit must be at least 1");
    return {};
}

DigitString encode_counting(const BigInt& S, const CFStream& cf) {
    if (S < 0) throw OutOfDomain("counting numbers are nonnegative");
    DenominatorLadder L(cf);
    DigitString ds;
    ds.kind = DigitKind::LeftAdmissible;
    BigInt s = S;
    while (s >= 1) {
        // n_m: q_{n-1} <= S_m <= q_n - 1
        std::size_t n = L.first_index_above(s, 1);
        BigInt c = s / L.q(static_cast<long>(n) - 1);
        if (ds.digits.empty()) ds.digits.assign(n, 0);
        ds.digits[n - 1] = c;
        s -= c * L.q(static_cast<long>(n) - 1);
    }
    return ds;
}

BigInt dot_q(const std::vector<BigInt>& digits, const CFStream& cf) {
    DenominatorLadder L(cf);
    BigInt s = 0;
    for (std::size_t k = 1; k <= digits.size(); ++k) s += digits[k - 1] * L.q(static_cast<long>(k) - 1);
    return s;
}

BigInt dot_q_star(const std::vector<BigInt>& digits, const CFStream& cf) {
    DenominatorLadder L(cf);
    BigInt s = 0;
    for (std::size_t k = 1; k <= digits.size(); ++k) s += digits[k - 1] * L.q_star(static_cast<long>(k) - 1);
    return s;
}

BigInt decode_counting(const DigitString& ds, const CFStream& cf) {
    if (auto d = validate_left(ds, cf); !d) throw NotAdmissible(d.message);
    return dot_q(ds.digits, cf);
}

DigitString encode_integer(const BigInt& T, const CFStream& cf) {
    DenominatorLadder L(cf);
    auto chi = [](const BigInt& t) { return t <= -1 ? 1 : 0; };
    auto absv = [](const BigInt& t) { return t < 0 ? BigInt(-t) : t; };

    DigitString ds;
    ds.kind = DigitKind::RightAdmissible;
    BigInt t = T;
    bool first = true;
    while (t != 0 && t != 1) {
        // The preindex n' >= 0 with q_{n'-1} < |T_m| + chi(T_m) <= q_{n'}
        // is unique: it is the smallest n' with v <= q_{n'}.
        BigInt v = absv(t) + chi(t);
        std::size_t np = 0;
        while (v > L.q(static_cast<long>(np))) ++np;

        std::size_t n;
        BigInt b;
        bool odd_prev = rho(static_cast<long>(np) - 1) == 1;
        BigInt signed_t = odd_prev ? BigInt(-t) : t;
        if (signed_t > 0) {
            n = np;
            BigInt bp = absv(t) / L.q(static_cast<long>(n) - 1);
            BigInt r = t - bp * L.q_star(static_cast<long>(n) - 1);
            if (absv(r) + chi(r) <= L.q(static_cast<long>(n) - 2))
                b = bp;
            else
                b = bp + 1;
        } else {
            n = np + 1;
            b = 1;
        }
        if (first) {
            ds.digits.assign(n, 0);
            first = false;
        }
        if (n > ds.digits.size()) throw std::logic_error("integer system index increased");
        ds.digits[n - 1] = b;
        t -= b * L.q_star(static_cast<long>(n) - 1);
    }
    if (t == 1) {
        if (ds.digits.empty()) ds.digits.assign(1, 0);
        ds.digits[0] += 1;
    }
    return ds;
}

BigInt decode_integer(const DigitString& ds, const CFStream& cf, RightMode mode) {
    if (auto d = validate_right(ds, cf, mode); !d) throw NotAdmissible(d.message);
    return dot_q_star(ds.digits, cf);
}

RangeSet range_set(long n, const CFStream& cf) {
    RangeSet r;
    r.n = n;
    if (n < -1) throw OutOfDomain("range index below -1");
    if (n == -1) {
        r.empty = true;
        return r;
    }
    DenominatorLadder L(cf);
    r.lo = 1 - L.q(n - rho(n));
    r.hi = L.q(n - rho(n - 1));
    return r;
}

} // namespace linapprox

#include "linapprox/solver.hpp"

#include <map>

namespace linapprox {

std::string to_string(Side side) { return side == Side::Over ? "over" : "under"; }

namespace {

const std::map<Variant, std::string>& variant_names() {
    static const std::map<Variant, std::string> names = {
        {Variant::TotalUnder, "total-under"},       {Variant::TotalOver, "total-over"},
        {Variant::Forward, "forward"},              {Variant::Backward, "backward"},
        {Variant::HomPositive, "hom-positive"},     {Variant::HomNegative, "hom-negative"},
        {Variant::HomSignedOver, "hom-signed-over"}, {Variant::HomSignedUnder, "hom-signed-under"},
    };
    return names;
}

bool is_homogeneous(Variant v) {
    return v == Variant::HomPositive || v == Variant::HomNegative || v == Variant::HomSignedOver ||
           v == Variant::HomSignedUnder;
}

void require_unit_interval(const RealValue& beta, unsigned budget) {
    if (floor_of(beta, budget) != 0) throw OutOfDomain("intercept must lie in [0, 1)");
}

ApproximateTerm make_term(std::size_t n, const BigInt& A, const CFStream& cf, const RealValue& beta) {
    ApproximateTerm t = classify(A, cf, beta);
    t.n = n;
    return t;
}

SolutionSequence finish(SolutionSequence seq, const CFStream& cf) {
    check_general_solution(seq, cf);
    return seq;
}

} // namespace

std::string to_string(Variant v) { return variant_names().at(v); }

std::optional<Variant> parse_variant(const std::string& name) {
    for (const auto& [v, s] : variant_names())
        if (s == name) return v;
    return std::nullopt;
}

ApproximateTerm classify(const BigInt& m, const CFStream& cf, const RealValue& beta) {
    const unsigned budget = cf.budget();
    RealValue m_alpha = RealValue(m) * cf.source();
    ApproximateTerm t;
    t.A = m;
    t.iterate = mod1(m_alpha, budget);
    t.error = int_distance(beta - m_alpha, budget);
    RealValue offset = mod1(m_alpha - beta, budget);
    t.side = compare(offset, BigRational(1, 2), budget) < 0 ? Side::Over : Side::Under;
    return t;
}

Normality is_normal(const BigInt& m, const CFStream& cf) {
    if (m == 0) throw OutOfDomain("normality is defined for nonzero multiples");
    const unsigned budget = cf.budget();
    BigInt am = m < 0 ? BigInt(-m) : m;
    Normality out;
    out.value = RealValue(am) * int_distance(RealValue(m) * cf.source(), budget);
    out.normal = compare(out.value, RealValue(1L), budget) < 0;
    return out;
}

SolutionSequence homogeneous(const CFStream& cf, Variant variant, std::size_t n) {
    if (!is_homogeneous(variant)) throw OutOfDomain("not a homogeneous variant");
    if (n < 1) throw OutOfDomain("at least one term is required");
    ConvergentLadder L(cf);
    SolutionSequence seq;
    seq.variant = variant;
    seq.beta = RealValue();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& st = L[static_cast<long>(k)];
        BigInt A;
        switch (variant) {
        case Variant::HomPositive: A = st.q; break;
        case Variant::HomNegative: A = -st.q; break;
        case Variant::HomSignedOver: A = st.q_star; break;
        default: A = -st.q_star; break;
        }
        seq.terms.push_back(make_term(k, A, cf, seq.beta));
    }
    return finish(std::move(seq), cf);
}

namespace {

// T_n = sign * sum_{k<=n} b_k q*_{k-1} for n = 1..min(N, ell); T_0 = 0 when ell = 0.
SolutionSequence total_from_expansion(const CFStream& cf, const RealValue& beta, const RealValue& seed,
                                      Variant variant, int sign, std::size_t N) {
    ExpansionResult ex = expand_absolute(seed, cf, N);
    DenominatorLadder L(cf);
    SolutionSequence seq;
    seq.variant = variant;
    seq.beta = beta;
    seq.source_digits = ex.digits;
    if (ex.terminated()) seq.ell = ex.index;
    if (ex.terminated() && ex.index == 0) {
        seq.terms.push_back(make_term(0, 0, cf, beta));
        return finish(std::move(seq), cf);
    }
    BigInt T = 0;
    for (std::size_t k = 1; k <= ex.digits.n(); ++k) {
        T += sign * ex.digits.at(k) * L.q_star(static_cast<long>(k) - 1);
        seq.terms.push_back(make_term(k, T, cf, beta));
    }
    return finish(std::move(seq), cf);
}

// A_n = offset + sign * sum_{k<=n} c_k q_{k-1} for n = 0..min(N, ell).
SolutionSequence two_sided_from_expansion(const CFStream& cf, const RealValue& beta, const RealValue& gamma,
                                          Variant variant, int sign, std::size_t N) {
    ExpansionResult ex = expand_alternating(gamma, cf, N);
    DenominatorLadder L(cf);
    SolutionSequence seq;
    seq.variant = variant;
    seq.beta = beta;
    seq.source_digits = ex.digits;
    if (ex.terminated()) seq.ell = ex.index;
    BigInt A = sign;
    seq.terms.push_back(make_term(0, A, cf, beta));
    for (std::size_t k = 1; k <= ex.digits.n(); ++k) {
        A += sign * ex.digits.at(k) * L.q(static_cast<long>(k) - 1);
        seq.terms.push_back(make_term(k, A, cf, beta));
    }
    return finish(std::move(seq), cf);
}

} // namespace

SolutionSequence solve_total_under(const CFStream& cf, const RealValue& beta, std::size_t n) {
    require_unit_interval(beta, cf.budget());
    return total_from_expansion(cf, beta, beta, Variant::TotalUnder, 1, n);
}

SolutionSequence solve_total_over(const CFStream& cf, const RealValue& beta, std::size_t n) {
    require_unit_interval(beta, cf.budget());
    if (sign_of(beta, cf.budget()) == 0)
        throw OutOfDomain("total-over needs an intercept in (0, 1); use hom-signed-over for 0");
    return total_from_expansion(cf, beta, RealValue(1L) - beta, Variant::TotalOver, -1, n);
}

SolutionSequence solve_forward(const CFStream& cf, const RealValue& beta, std::size_t n) {
    require_unit_interval(beta, cf.budget());
    return two_sided_from_expansion(cf, beta, beta - cf.source(), Variant::Forward, 1, n);
}

SolutionSequence solve_backward(const CFStream& cf, const RealValue& beta, std::size_t n) {
    require_unit_interval(beta, cf.budget());
    RealValue hat = mod1(RealValue(1L) - beta, cf.budget());
    return two_sided_from_expansion(cf, beta, hat - cf.source(), Variant::Backward, -1, n);
}

SolutionSequence solve(const CFStream& cf, Variant variant, const RealValue& beta, std::size_t n) {
    switch (variant) {
    case Variant::TotalUnder: return solve_total_under(cf, beta, n);
    case Variant::TotalOver: return solve_total_over(cf, beta, n);
    case Variant::Forward: return solve_forward(cf, beta, n);
    case Variant::Backward: return solve_backward(cf, beta, n);
    default: return homogeneous(cf, variant, n);
    }
}

Certificate check_general_solution(SolutionSequence& seq, const CFStream& cf) {
    const unsigned budget = cf.budget();
    ConvergentLadder L(cf);
    Certificate c;
    bool terminal_seen = false;
    for (auto& t : seq.terms) {
        const long n = static_cast<long>(t.n);
        BigInt absA = t.A < 0 ? BigInt(-t.A) : t.A;
        t.bound_ok = absA <= L[n].q;
        if (!t.bound_ok) {
            c.bound = false;
            c.failed_bound.push_back(t.n);
        }
        if (seq.ell && t.n == *seq.ell) {
            t.error_ok = sign_of(t.error, budget) == 0;
            terminal_seen = true;
            c.terminal = t.error_ok;
        } else {
            t.error_ok = sign_of(t.error, budget) > 0 && compare(t.error, L[n - 1].abs_theta, budget) < 0;
            if (!t.error_ok) {
                c.error = false;
                c.failed_error.push_back(t.n);
            }
        }
    }
    if (seq.ell) {
        if (!terminal_seen) c.terminal = false;
        c.terminal_note = "exact at ell=" + std::to_string(*seq.ell);
    } else {
        c.terminal = c.error;
        c.terminal_note = "limit via |theta_{n-1}| bound";
    }
    seq.certificate = c;
    return c;
}

} // namespace linapprox

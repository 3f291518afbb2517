#include "linapprox/expansion.hpp"

namespace linapprox {

std::pair<BigInt, BigInt> absolute_linear_form(const std::vector<BigInt>& digits, ConvergentLadder& ladder) {
    BigInt Q = 0, P = 0;
    for (std::size_t k = 1; k <= digits.size(); ++k) {
        const auto& st = ladder[static_cast<long>(k) - 1];
        Q += digits[k - 1] * st.q_star;
        P += digits[k - 1] * st.p_star;
    }
    return {Q, P};
}

std::pair<BigInt, BigInt> alternating_linear_form(const std::vector<BigInt>& digits, ConvergentLadder& ladder) {
    BigInt Q = 0, P = 0;
    for (std::size_t k = 1; k <= digits.size(); ++k) {
        const auto& st = ladder[static_cast<long>(k) - 1];
        Q += digits[k - 1] * st.q;
        P += digits[k - 1] * st.p;
    }
    return {Q, P};
}

namespace {

// Residuals are kept as x - (Q alpha - P) so that refinable inputs never
// build deep recipe chains.
RealValue residual(const RealValue& x, const BigInt& Q, const BigInt& P, const RealValue& alpha) {
    return x - (RealValue(Q) * alpha - RealValue(P));
}

ExpansionResult finish(ExpansionResult r, bool terminated, std::size_t index, RealValue rem) {
    r.status = terminated ? ExpansionStatus::TerminatedExact : ExpansionStatus::Truncated;
    r.index = index;
    r.remainder = terminated ? RealValue() : std::move(rem);
    return r;
}

} // namespace

ExpansionResult expand_absolute(const RealValue& beta, const CFStream& cf, std::size_t max_digits) {
    const unsigned budget = cf.budget();
    if (floor_of(beta, budget) != 0) throw OutOfDomain("intercept must lie in [0, 1)");
    ConvergentLadder L(cf);
    const RealValue& alpha = cf.source();

    ExpansionResult res;
    res.digits.kind = DigitKind::AbsExpansion;
    BigInt Q = 0, P = 0;
    RealValue beta_k = beta;
    for (std::size_t k = 1;; ++k) {
        if (k > max_digits) {
            bool zero = beta_k.is_exact() && sign_of(beta_k) == 0;
            return finish(std::move(res), zero, max_digits, beta_k);
        }
        if (sign_of(beta_k, budget) == 0) return finish(std::move(res), true, k - 1, beta_k);
        const auto& prev = L[static_cast<long>(k) - 1];
        BigInt b = floor_of(beta_k / prev.abs_theta, budget);
        Q += b * prev.q_star;
        P += b * prev.p_star;
        res.digits.digits.push_back(std::move(b));
        beta_k = residual(beta, Q, P, alpha);
    }
}

ExpansionResult expand_alternating(const RealValue& gamma, const CFStream& cf, std::size_t max_digits) {
    const unsigned budget = cf.budget();
    const RealValue& alpha = cf.source();
    if (floor_of(gamma + alpha, budget) != 0) throw OutOfDomain("shifted intercept must lie in [-alpha, 1 - alpha)");
    ConvergentLadder L(cf);

    ExpansionResult res;
    res.digits.kind = DigitKind::AltExpansion;
    BigInt Q = 0, P = 0;
    RealValue gamma_k = gamma;
    for (std::size_t k = 1;; ++k) {
        if (k > max_digits) {
            bool zero = gamma_k.is_exact() && sign_of(gamma_k) == 0;
            return finish(std::move(res), zero, max_digits, gamma_k);
        }
        int s = sign_of(gamma_k, budget);
        if (s == 0) return finish(std::move(res), true, k - 1, gamma_k);
        const auto& prev = L[static_cast<long>(k) - 1];
        BigInt c = 0;
        if (s * sign_of(prev.theta, budget) > 0) {
            BigInt cp = floor_of(gamma_k / prev.theta, budget);
            RealValue rest = gamma_k - RealValue(cp) * prev.theta;
            const auto& cur = L[static_cast<long>(k)];
            // A tie |rest| = |theta_k| rounds up at odd k only; the other
            // choice leaves a tail <.., a_k, 0, a_{k+2}, 0, ..> on odd indices.
            int cmp = compare(abs(rest, budget), cur.abs_theta, budget);
            c = (cmp > 0 || (cmp == 0 && rho(static_cast<long>(k)) == 1)) ? BigInt(cp + 1) : cp;
        }
        Q += c * prev.q;
        P += c * prev.p;
        res.digits.digits.push_back(std::move(c));
        gamma_k = residual(gamma, Q, P, alpha);
    }
}

ExpansionResult expand_real_absolute(const RealValue& r, const CFStream& cf, std::size_t max_digits) {
    BigInt b0 = floor_of(r, cf.budget());
    ExpansionResult res = expand_absolute(r - RealValue(b0), cf, max_digits);
    res.integer_part = b0;
    return res;
}

ExpansionResult expand_real_alternating(const RealValue& r, const CFStream& cf, std::size_t max_digits) {
    BigInt f = floor_of(r + cf.source(), cf.budget());
    ExpansionResult res = expand_alternating(r - RealValue(f), cf, max_digits);
    res.integer_part = -f;
    return res;
}

Diagnostic validate_expansion(const DigitString& ds, const CFStream& cf, bool terminated) {
    switch (ds.kind) {
    case DigitKind::AbsExpansion:
    case DigitKind::RightAdmissible:
        return validate_right(ds, cf, RightMode::Corrected, terminated);
    case DigitKind::AltExpansion:
    case DigitKind::LeftAdmissible:
        return validate_left(ds, cf, terminated);
    }
    return {};
}

RealValue recover_absolute(const DigitString& ds, const CFStream& cf) {
    if (auto d = validate_right(ds, cf, RightMode::Corrected, false); !d) throw NotAdmissible(d.message);
    ConvergentLadder L(cf);
    auto [Q, P] = absolute_linear_form(ds.digits, L);
    return RealValue(Q) * cf.source() - RealValue(P);
}

RealValue recover_alternating(const DigitString& ds, const CFStream& cf) {
    if (auto d = validate_left(ds, cf, false); !d) throw NotAdmissible(d.message);
    ConvergentLadder L(cf);
    auto [Q, P] = alternating_linear_form(ds.digits, L);
    return RealValue(Q) * cf.source() - RealValue(P);
}

} // namespace linapprox

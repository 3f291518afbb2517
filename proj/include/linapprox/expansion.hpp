#pragma once

// Absolute base-alpha and alternating base-[-alpha] expansions of reals.

#include <cstddef>

#include "linapprox/numeration.hpp"

namespace linapprox {

enum class ExpansionStatus { TerminatedExact, Truncated };

struct ExpansionResult {
    DigitString digits;
    BigInt integer_part = 0;  // b_0 or c_0; 0 inside the fundamental domain
    ExpansionStatus status = ExpansionStatus::Truncated;
    /// ell for terminated expansions, the number of computed digits otherwise.
    std::size_t index = 0;
    /// beta_n resp. gamma_n; exactly 0 when terminated.
    RealValue remainder;

    bool terminated() const { return status == ExpansionStatus::TerminatedExact; }
};

/// Greedy expansion beta = sum b_k |theta_{k-1}| for beta in [0, 1).
ExpansionResult expand_absolute(const RealValue& beta, const CFStream& cf, std::size_t max_digits);

/// gamma = sum c_k theta_{k-1} for gamma in [-alpha, 1 - alpha).
ExpansionResult expand_alternating(const RealValue& gamma, const CFStream& cf, std::size_t max_digits);

/// r = b_0 + sum b_k |theta_{k-1}| with b_0 = floor(r).
ExpansionResult expand_real_absolute(const RealValue& r, const CFStream& cf, std::size_t max_digits);

/// r = c_0 theta_{-1} + sum c_k theta_{k-1} with c_0 = -floor(r + alpha).
ExpansionResult expand_real_alternating(const RealValue& r, const CFStream& cf, std::size_t max_digits);

/// Finite-prefix admissibility of an expansion string.  The tail condition
/// on infinite strings is not finitely checkable and is not evaluated.
Diagnostic validate_expansion(const DigitString& ds, const CFStream& cf, bool terminated);

/// sum b_k |theta_{k-1}|; throws NotAdmissible for a string that fails the
/// prefix conditions.
RealValue recover_absolute(const DigitString& ds, const CFStream& cf);
/// sum c_k theta_{k-1}; throws NotAdmissible likewise.
RealValue recover_alternating(const DigitString& ds, const CFStream& cf);

/// Integer coefficients (Q, P) with sum d_k |theta_{k-1}| = Q alpha - P.
std::pair<BigInt, BigInt> absolute_linear_form(const std::vector<BigInt>& digits, ConvergentLadder& ladder);
/// Integer coefficients (Q, P) with sum d_k theta_{k-1} = Q alpha - P.
std::pair<BigInt, BigInt> alternating_linear_form(const std::vector<BigInt>& digits, ConvergentLadder& ladder);

} // namespace linapprox

#pragma once

// Best linear approximates: homogeneous sequences, the four inhomogeneous
// solvers and the general-solution certificate.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linapprox/expansion.hpp"

namespace linapprox {

enum class Side { Over, Under };

enum class Variant {
    TotalUnder,
    TotalOver,
    Forward,
    Backward,
    HomPositive,
    HomNegative,
    HomSignedOver,
    HomSignedUnder
};

std::string to_string(Side side);
std::string to_string(Variant v);
/// Accepts the CLI spellings: total-under, total-over, forward, backward,
/// hom-positive, hom-negative, hom-signed-over, hom-signed-under.
std::optional<Variant> parse_variant(const std::string& name);

struct ApproximateTerm {
    std::size_t n = 0;
    BigInt A;
    RealValue iterate;  // mod1(A alpha)
    RealValue error;    // ||beta - A alpha||
    Side side = Side::Over;
    bool bound_ok = true;  // |A_n| <= q_n
    bool error_ok = true;  // 0 < error < |theta_{n-1}|, or error = 0 at ell
};

struct Certificate {
    bool bound = true;     // condition (i)
    bool error = true;     // condition (ii)
    bool terminal = true;  // condition (iii)
    std::string terminal_note;  // "exact at ell" or "limit via |theta_{n-1}| bound"
    std::vector<std::size_t> failed_bound;
    std::vector<std::size_t> failed_error;

    bool ok() const { return bound && error && terminal; }
};

struct SolutionSequence {
    Variant variant = Variant::TotalUnder;
    RealValue beta;
    std::vector<ApproximateTerm> terms;
    std::optional<std::size_t> ell;  // finite limit when the expansion terminated
    DigitString source_digits;
    Certificate certificate;
};

/// Over iff mod1(m alpha - beta) lies in [0, 1/2).
ApproximateTerm classify(const BigInt& m, const CFStream& cf, const RealValue& beta);

struct Normality {
    bool normal = false;
    RealValue value;  // |m| * ||m alpha||
};
Normality is_normal(const BigInt& m, const CFStream& cf);

/// Terms k = 0 .. n-1 of <q_k>, <-q_k>, <q*_k> or <-q*_k> (beta = 0).
SolutionSequence homogeneous(const CFStream& cf, Variant variant, std::size_t n);

SolutionSequence solve_total_under(const CFStream& cf, const RealValue& beta, std::size_t n);
/// Rejects beta = 0 with OutOfDomain; use HomSignedOver there.
SolutionSequence solve_total_over(const CFStream& cf, const RealValue& beta, std::size_t n);
SolutionSequence solve_forward(const CFStream& cf, const RealValue& beta, std::size_t n);
SolutionSequence solve_backward(const CFStream& cf, const RealValue& beta, std::size_t n);

/// Dispatches on the variant; homogeneous variants ignore beta.
SolutionSequence solve(const CFStream& cf, Variant variant, const RealValue& beta, std::size_t n);

/// Evaluates conditions (i)-(iii) and records per-term flags.
Certificate check_general_solution(SolutionSequence& seq, const CFStream& cf);

} // namespace linapprox

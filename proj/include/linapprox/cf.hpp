#pragma once

// Continued fraction digit streams and the convergent ladder built on them.

#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linapprox/numeric.hpp"

namespace linapprox {

/// Parity: 0 for even k, 1 for odd k (also for negative k).
inline int rho(long k) { return static_cast<int>(((k % 2) + 2) % 2); }

/// The digits <a_k>_{k>=1} of a slope in [0, 1).
///
/// Streams are cheap handles onto shared state.  Digits are computed on
/// demand and memoized append-only; extension is serialized by an internal
/// lock, so a stream may be shared between threads.
class CFStream {
public:
    using Generator = std::function<BigInt(std::size_t k)>;

    /// Expands an exact or refinable slope in [0, 1).  Exact slopes are
    /// expanded exactly; refinable ones emit a digit only when the whole
    /// enclosure agrees on it.  Throws OutOfDomain for slopes outside [0, 1).
    static CFStream from_value(const RealValue& slope, unsigned budget = kDefaultMaxBits);

    /// A finite stream; a terminal digit 1 is folded into its predecessor.
    static CFStream from_digits(std::vector<BigInt> digits);

    /// An infinite stream a_k = gen(k), k >= 1.  The slope is the limit of
    /// the convergents and is enclosed by consecutive cylinder brackets.
    static CFStream from_generator(Generator gen, unsigned max_bits = kDefaultMaxBits);

    /// Extends the memo to min(n, length) digits and returns that count.
    std::size_t available(std::size_t n) const;

    /// a_k for k >= 1.  Throws InsufficientDigits past the end of a finite stream.
    BigInt digit(std::size_t k) const;

    /// The first n digits.  Throws InsufficientDigits when fewer exist.
    std::vector<BigInt> digits(std::size_t n) const;

    /// Digits computed so far.
    std::vector<BigInt> known_digits() const;

    /// Length of a stream proven to be finite (after full expansion).
    std::optional<std::size_t> length() const;
    bool is_finite() const;

    /// The slope alpha.
    const RealValue& source() const;
    bool exact() const { return source().is_exact(); }
    unsigned budget() const;

private:
    struct State;
    explicit CFStream(std::shared_ptr<State> s) : s_(std::move(s)) {}
    std::shared_ptr<State> s_;
};

/// Algorithm-level entry point: expands `slope` and materializes
/// min(max_digits, length) digits.
CFStream cf_expand(const RealValue& slope, std::size_t max_digits, unsigned budget = kDefaultMaxBits);

/// Index-k bundle of the convergent ladder.
struct ConvergentState {
    long k = 0;
    BigInt a;  // a_k for k >= 1, 0 otherwise
    BigInt p, q;
    BigInt p_star, q_star;
    RealValue theta;      // q_k alpha - p_k
    RealValue abs_theta;  // (-1)^k theta_k
    int parity = 0;
};

/// Lazily extended convergent ladder; references stay valid while it lives.
class ConvergentLadder {
public:
    explicit ConvergentLadder(CFStream cf);

    /// State k >= -1.  Throws InsufficientDigits past a finite expansion.
    const ConvergentState& operator[](long k);
    const CFStream& stream() const { return cf_; }
    const RealValue& alpha() const { return cf_.source(); }

private:
    CFStream cf_;
    std::deque<ConvergentState> states_;
};

/// States for k = -1 .. n (element i holds k = i - 1).
std::vector<ConvergentState> convergents(const CFStream& cf, std::size_t n);

/// Convenience lookup into a convergents() result.
inline const ConvergentState& at(const std::vector<ConvergentState>& ladder, long k) {
    return ladder.at(static_cast<std::size_t>(k + 1));
}

struct SeriesIdentity {
    std::string name;
    RealValue partial;      // computed partial sum
    RealValue closed_form;  // right side at the same index
};

struct SeriesReport {
    std::size_t n = 0;
    std::vector<SeriesIdentity> identities;
};

/// Partial sums of the telescoping identities at index n, each paired with
/// its closed form.
SeriesReport series_partials(const CFStream& cf, std::size_t n);

/// Exact equality for exact values; otherwise |partial - closed| <= 2^-tol_bits
/// proven from an enclosure.
bool identity_matches(const SeriesIdentity& id, unsigned tol_bits = 100);

} // namespace linapprox

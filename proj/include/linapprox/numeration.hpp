#pragma once

// Base-alpha counting numbers and base-[-alpha] integers.

#include <cstddef>
#include <string>
#include <vector>

#include "linapprox/cf.hpp"

namespace linapprox {

enum class DigitKind { LeftAdmissible, RightAdmissible, AbsExpansion, AltExpansion };

std::string to_string(DigitKind kind);

/// Digits d_1..d_n stored little-endian: digits[0] = d_1 carries weight q_0.
struct DigitString {
    std::vector<BigInt> digits;
    DigitKind kind = DigitKind::LeftAdmissible;

    std::size_t n() const { return digits.size(); }
    /// d_k for 1 <= k <= n, 0 outside.
    BigInt at(std::size_t k) const { return (k >= 1 && k <= digits.size()) ? digits[k - 1] : BigInt(0); }
    friend bool operator==(const DigitString& x, const DigitString& y) {
        return x.kind == y.kind && x.digits == y.digits;
    }
};

/// Right-admissibility: the maximal-digit rule b_k = a_k => b_{k+1} = 0 is
/// checked for k <= n-1 (Corrected) or only for k <= n-2 (AsPrinted).
enum class RightMode { Corrected, AsPrinted };

struct Diagnostic {
    bool ok = true;
    std::string condition;  // "i", "ii", "iii", "terminal" or "" when ok
    std::size_t index = 0;  // offending k
    std::string message;

    explicit operator bool() const { return ok; }
};

/// Lazily grown q_k, q*_k (k >= -1) for a stream.
class DenominatorLadder {
public:
    explicit DenominatorLadder(CFStream cf);

    const BigInt& q(long k);
    BigInt q_star(long k);
    BigInt a(std::size_t k) { return cf_.digit(k); }
    /// Smallest n >= lo with value < q_n.  Throws InsufficientDigits.
    std::size_t first_index_above(const BigInt& value, std::size_t lo);
    const CFStream& stream() const { return cf_; }

private:
    void ensure(long k);
    CFStream cf_;
    std::vector<BigInt> q_;  // q_[i] = q_{i-1}
};

Diagnostic validate_left(const DigitString& ds, const CFStream& cf, bool require_terminal = true);
Diagnostic validate_right(const DigitString& ds, const CFStream& cf, RightMode mode = RightMode::Corrected,
                          bool require_terminal = true);

DigitString encode_counting(const BigInt& S, const CFStream& cf);
BigInt decode_counting(const DigitString& ds, const CFStream& cf);

DigitString encode_integer(const BigInt& T, const CFStream& cf);
BigInt decode_integer(const DigitString& ds, const CFStream& cf, RightMode mode = RightMode::Corrected);

/// sum d_k q_{k-1} and sum d_k q*_{k-1} without admissibility checks.
BigInt dot_q(const std::vector<BigInt>& digits, const CFStream& cf);
BigInt dot_q_star(const std::vector<BigInt>& digits, const CFStream& cf);

/// I_n^* = [1 - q_{n - rho_n}, q_{n - rho_{n-1}}]; empty for n = -1.
struct RangeSet {
    long n = 0;
    BigInt lo, hi;
    bool empty = false;

    bool contains(const BigInt& t) const { return !empty && lo <= t && t <= hi; }
    BigInt size() const { return empty ? BigInt(0) : BigInt(hi - lo + 1); }
};

RangeSet range_set(long n, const CFStream& cf);

} // namespace linapprox

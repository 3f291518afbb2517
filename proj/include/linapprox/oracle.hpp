#pragma once

// Brute-force ground truth: exhaustive searches, enumerations of admissible
// strings, and audits of the library against them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linapprox/solver.hpp"

namespace linapprox {

/// Side constraint for brute_best.  Under keeps m with mod1(m alpha) <= beta
/// and ranks by beta - mod1(m alpha); Over keeps the complement and ranks by
/// mod1(m alpha) - beta; TwoSided ranks every m by ||beta - m alpha||.
enum class SearchSide { TwoSided, Under, Over };

/// The minimizer over [lo, hi], ties broken by smaller |m| then positive m.
/// Empty when no m in range satisfies the side constraint.
std::optional<BigInt> brute_best(const CFStream& cf, const RealValue& beta, const BigInt& lo, const BigInt& hi,
                                 SearchSide side = SearchSide::TwoSided);

/// First m in [lo, hi] (ascending) with ||beta - m alpha|| < threshold.
std::optional<BigInt> first_below(const CFStream& cf, const RealValue& beta, const RealValue& threshold,
                                  const BigInt& lo, const BigInt& hi);

/// Every admissible string of index <= max_index, once each, in lexicographic
/// order of the zero-padded most-significant-first digits.  Left and
/// AltExpansion use the counting conditions, Right and AbsExpansion the
/// integer conditions under `mode`.
std::vector<DigitString> enumerate_admissible(const CFStream& cf, DigitKind kind, std::size_t max_index,
                                              RightMode mode = RightMode::Corrected);

struct SampleSlope {
    std::string name;
    CFStream cf;
};

/// golden, silver and sqrt(3)-1 as exact quadratic slopes.
std::vector<SampleSlope> sample_slopes();
/// a_k = k.
CFStream naturals_stream(unsigned max_bits = kDefaultMaxBits);
/// a_k = k-th nonzero decimal digit of pi (3, 1, 4, 1, 5, 9, 2, 6, ...).
CFStream pi_digit_stream(unsigned max_bits = kDefaultMaxBits);

enum class Verdict { Confirmed, CounterexampleFound };
std::string to_string(Verdict v);

struct Witness {
    std::string input;
    std::string expected;
    std::string actual;
};

struct AuditReport {
    std::string claim;
    std::string parameters;
    Verdict verdict = Verdict::Confirmed;
    /// Known paper typos and overstated claims are expected to produce counterexamples.
    Verdict expected = Verdict::Confirmed;
    std::vector<Witness> witnesses;

    bool failed() const { return verdict != expected; }
};

enum class Suite { Tables, Bijection, Minimality, Normality, Series, Solutions, All };
std::optional<Suite> parse_suite(const std::string& name);
std::string to_string(Suite s);

/// Printed silver tables, most-significant digit first, typos kept.
struct PrintedRow {
    long value;
    std::vector<int> msd_digits;
};
const std::vector<PrintedRow>& printed_counting_table();
const std::vector<PrintedRow>& printed_integer_table();
/// Printed I_n^* bounds for n = 1..4 as (lo, hi).
const std::vector<std::pair<long, long>>& printed_range_sets();

// Individual audits.
AuditReport audit_counting_table();
AuditReport audit_integer_table();
AuditReport audit_range_sets();
AuditReport audit_bijection(const std::string& name, const CFStream& cf, std::size_t max_index);
AuditReport audit_bijection_as_printed(const CFStream& cf, std::size_t max_index);
AuditReport audit_minimality(const std::string& name, const CFStream& cf, std::size_t max_n, std::size_t samples,
                             unsigned seed);
AuditReport audit_denominator_normality(const std::string& name, const CFStream& cf, std::size_t max_k);
AuditReport audit_normality_converse(const std::string& name, const CFStream& cf, long max_m);
AuditReport audit_series(const std::string& name, const CFStream& cf, std::size_t n);
/// Generic intercepts 1/3, 1/2, sqrt(7)-2 for every solver plus the exact hits.
AuditReport audit_solutions(const std::string& name, const CFStream& cf, std::size_t n);
/// Intercepts in Z + Z alpha whose expansions never terminate; the
/// construction only reaches error <= |theta_{n-1}| there.
AuditReport audit_lattice_solutions(const std::string& name, const CFStream& cf, std::size_t n);

/// Deterministic: the same suite always produces the same reports.
std::vector<AuditReport> audit(Suite suite);

} // namespace linapprox

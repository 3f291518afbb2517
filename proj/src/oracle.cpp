#include "linapprox/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace linapprox {

namespace {

enum class Status { Infeasible, Undecided, Feasible };

struct Gap {
    Status status = Status::Undecided;
    BigRational lo, hi;
};

BigInt babs(const BigInt& m) { return m < 0 ? BigInt(-m) : m; }

// Encloses the ranking quantity of m from enclosures of alpha and beta.
Gap eval_interval(const BigInt& m, const Interval& A, const Interval& B, SearchSide side) {
    Gap g;
    if (!A.bounded || !B.bounded) return g;
    BigRational xl = m >= 0 ? BigRational(B.lo - m * A.hi) : BigRational(B.lo - m * A.lo);
    BigRational xh = m >= 0 ? BigRational(B.hi - m * A.lo) : BigRational(B.hi - m * A.hi);
    BigInt k = floor_of(xl);
    if (floor_of(xh) != k) return g;
    BigRational fl = xl - k, fh = xh - k;
    const BigRational half(1, 2);
    switch (side) {
    case SearchSide::TwoSided: {
        auto d = [](const BigRational& f) { return f < BigRational(1, 2) ? f : BigRational(1 - f); };
        g.lo = std::min(d(fl), d(fh));
        g.hi = (fl <= half && half <= fh) ? half : std::max(d(fl), d(fh));
        g.status = Status::Feasible;
        return g;
    }
    case SearchSide::Under:
        if (fh <= B.lo) {
            g.status = Status::Feasible;
            g.lo = fl;
            g.hi = fh;
        } else if (fl > B.hi) {
            g.status = Status::Infeasible;
        }
        return g;
    case SearchSide::Over:
        if (fl > B.hi) {
            g.status = Status::Feasible;
            g.lo = 1 - fh;
            g.hi = 1 - fl;
        } else if (fh <= B.lo) {
            g.status = Status::Infeasible;
        }
        return g;
    }
    return g;
}

// Exact ranking quantity, or nullopt when m violates the side constraint.
std::optional<RealValue> eval_exact(const BigInt& m, const CFStream& cf, const RealValue& beta, SearchSide side) {
    const unsigned budget = cf.budget();
    RealValue x = beta - RealValue(m) * cf.source();
    if (side == SearchSide::TwoSided) return int_distance(x, budget);
    RealValue frac = mod1(x, budget);
    bool under = compare(frac, beta, budget) <= 0;
    if (side == SearchSide::Under) return under ? std::optional<RealValue>(frac) : std::nullopt;
    return under ? std::nullopt : std::optional<RealValue>(RealValue(1L) - frac);
}

bool tie_less(const BigInt& x, const BigInt& y) {
    BigInt ax = babs(x), ay = babs(y);
    if (ax != ay) return ax < ay;
    return x > y;
}

unsigned start_bits(const BigInt& lo, const BigInt& hi) {
    return kStartBits + std::max(bit_length(babs(lo)), bit_length(babs(hi)));
}

unsigned refine_cap(const CFStream& cf, const RealValue& beta) {
    return std::min({cf.source().max_bits(), beta.max_bits(), 4096u});
}

} // namespace

std::optional<BigInt> brute_best(const CFStream& cf, const RealValue& beta, const BigInt& lo, const BigInt& hi,
                                 SearchSide side) {
    if (hi < lo) return std::nullopt;
    unsigned bits = start_bits(lo, hi);
    const unsigned cap = refine_cap(cf, beta);

    Interval A = cf.source().enclose(bits), B = beta.enclose(bits);
    std::optional<BigRational> U;
    for (BigInt m = lo; m <= hi; ++m) {
        Gap g = eval_interval(m, A, B, side);
        if (g.status == Status::Feasible && (!U || g.hi < *U)) U = g.hi;
    }
    std::vector<BigInt> cands;
    for (BigInt m = lo; m <= hi; ++m) {
        Gap g = eval_interval(m, A, B, side);
        if (g.status == Status::Undecided || (g.status == Status::Feasible && g.lo <= *U)) cands.push_back(m);
    }

    while (cands.size() > 1 && bits < cap) {
        bits = std::min(cap, bits * 2);
        A = cf.source().enclose(bits);
        B = beta.enclose(bits);
        std::vector<Gap> gaps;
        std::optional<BigRational> V;
        for (const auto& m : cands) {
            gaps.push_back(eval_interval(m, A, B, side));
            const Gap& g = gaps.back();
            if (g.status == Status::Feasible && (!V || g.hi < *V)) V = g.hi;
        }
        std::vector<BigInt> next;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const Gap& g = gaps[i];
            if (g.status == Status::Undecided || (g.status == Status::Feasible && V && g.lo <= *V))
                next.push_back(cands[i]);
        }
        cands = std::move(next);
    }

    std::optional<BigInt> best;
    std::optional<RealValue> best_gap;
    for (const auto& m : cands) {
        auto g = eval_exact(m, cf, beta, side);
        if (!g) continue;
        int c = best_gap ? compare(*g, *best_gap, cf.budget()) : -1;
        if (c < 0 || (c == 0 && tie_less(m, *best))) {
            best = m;
            best_gap = std::move(g);
        }
    }
    return best;
}

std::optional<BigInt> first_below(const CFStream& cf, const RealValue& beta, const RealValue& threshold,
                                  const BigInt& lo, const BigInt& hi) {
    const unsigned bits = start_bits(lo, hi);
    Interval A = cf.source().enclose(bits), B = beta.enclose(bits), T = threshold.enclose(bits);
    for (BigInt m = lo; m <= hi; ++m) {
        Gap g = eval_interval(m, A, B, SearchSide::TwoSided);
        if (g.status == Status::Feasible && T.bounded) {
            if (g.hi < T.lo) return m;
            if (g.lo >= T.hi) continue;
        }
        if (compare(*eval_exact(m, cf, beta, SearchSide::TwoSided), threshold, cf.budget()) < 0) return m;
    }
    return std::nullopt;
}

std::vector<DigitString> enumerate_admissible(const CFStream& cf, DigitKind kind, std::size_t max_index,
                                              RightMode mode) {
    const bool left = kind == DigitKind::LeftAdmissible || kind == DigitKind::AltExpansion;
    const bool prune_pairs = left || mode == RightMode::Corrected;
    const auto a = cf.digits(max_index);
    std::vector<DigitString> out;
    std::vector<BigInt> padded(max_index, 0);

    // Fill positions max_index..1, ascending digits at each level.
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == 0) {
            DigitString ds;
            ds.kind = kind;
            std::size_t n = max_index;
            while (n > 0 && padded[n - 1] == 0) --n;
            ds.digits.assign(padded.begin(), padded.begin() + static_cast<long>(n));
            Diagnostic d = left ? validate_left(ds, cf) : validate_right(ds, cf, mode);
            if (d) out.push_back(std::move(ds));
            return;
        }
        BigInt top = a[k - 1];
        if (left && k == 1) top -= 1;
        for (BigInt d = 0; d <= top; ++d) {
            if (prune_pairs && k < max_index) {
                const BigInt& above = padded[k];
                if (left && above == a[k] && d != 0) break;
                if (!left && d == a[k - 1] && above != 0) break;
            }
            padded[k - 1] = d;
            self(self, k - 1);
        }
        padded[k - 1] = 0;
    };
    rec(rec, max_index);
    return out;
}

std::vector<SampleSlope> sample_slopes() {
    return {
        {"golden", CFStream::from_value(make_quadratic(-1, 1, 2, 5))},
        {"silver", CFStream::from_value(make_quadratic(-1, 1, 1, 2))},
        {"sqrt3-1", CFStream::from_value(make_quadratic(-1, 1, 1, 3))},
    };
}

CFStream naturals_stream(unsigned max_bits) {
    return CFStream::from_generator([](std::size_t k) { return BigInt(static_cast<unsigned long>(k)); }, max_bits);
}

CFStream pi_digit_stream(unsigned max_bits) {
    static const std::string digits = [] {
        const std::string raw =
            "31415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";
        std::string s;
        for (char c : raw)
            if (c != '0') s.push_back(c);
        return s;
    }();
    return CFStream::from_generator(
        [](std::size_t k) -> BigInt {
            if (k < 1 || k > digits.size()) throw InsufficientDigits("pi digit", k, digits.size());
            return BigInt(digits[k - 1] - '0');
        },
        max_bits);
}

std::string to_string(Verdict v) { return v == Verdict::Confirmed ? "Confirmed" : "CounterexampleFound"; }

namespace {

const std::map<Suite, std::string>& suite_names() {
    static const std::map<Suite, std::string> names = {
        {Suite::Tables, "tables"},         {Suite::Bijection, "bijection"}, {Suite::Minimality, "minimality"},
        {Suite::Normality, "normality"},   {Suite::Series, "series"},       {Suite::Solutions, "solutions"},
        {Suite::All, "all"},
    };
    return names;
}

std::string show(const std::vector<BigInt>& digits) {
    std::string s = "<";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) s += ",";
        s += digits[i].get_str();
    }
    return s + ">";
}

std::string show_msd(const std::vector<BigInt>& digits) {
    std::string s;
    for (std::size_t i = digits.size(); i-- > 0;) {
        s += digits[i].get_str();
        if (i) s += " ";
    }
    return s;
}

std::vector<BigInt> from_msd(const std::vector<int>& msd) {
    std::vector<BigInt> v;
    for (auto it = msd.rbegin(); it != msd.rend(); ++it) v.emplace_back(*it);
    return v;
}

CFStream silver() { return CFStream::from_value(make_quadratic(-1, 1, 1, 2)); }

void conclude(AuditReport& r) {
    r.verdict = r.witnesses.empty() ? Verdict::Confirmed : Verdict::CounterexampleFound;
}

} // namespace

std::optional<Suite> parse_suite(const std::string& name) {
    for (const auto& [s, n] : suite_names())
        if (n == name) return s;
    return std::nullopt;
}

std::string to_string(Suite s) { return suite_names().at(s); }

const std::vector<PrintedRow>& printed_counting_table() {
    static const std::vector<PrintedRow> rows = {
        {1, {0, 0, 0, 1}},  {2, {0, 0, 1, 0}},  {3, {0, 0, 1, 1}},  {4, {0, 0, 2, 0}},  {5, {0, 1, 0, 0}},
        {6, {0, 1, 0, 1}},  {7, {0, 1, 1, 0}},  {8, {0, 1, 1, 1}},  {9, {0, 1, 2, 0}},  {10, {0, 2, 0, 0}},
        {11, {0, 2, 0, 1}}, {12, {1, 0, 0, 0}}, {13, {1, 0, 0, 1}}, {14, {1, 0, 1, 0}}, {15, {1, 0, 1, 1}},
        {16, {1, 0, 2, 0}}, {17, {1, 1, 0, 0}}, {18, {1, 1, 0, 1}}, {19, {1, 1, 1, 0}}, {20, {1, 1, 1, 1}},
        {21, {1, 1, 2, 0}}, {22, {1, 2, 0, 0}}, {23, {1, 2, 0, 1}}, {24, {2, 0, 0, 0}},
    };
    return rows;
}

const std::vector<PrintedRow>& printed_integer_table() {
    static const std::vector<PrintedRow> rows = {
        {1, {0, 0, 1}},
        {2, {0, 0, 2}},
        {3, {1, 1, 0}},
        {4, {1, 1, 1}},
        {5, {1, 0, 0}},
        {6, {1, 0, 1}},
        {7, {1, 0, 2}},
        {8, {2, 1, 0}},
        {9, {2, 1, 1}},
        {10, {2, 0, 0}},
        {11, {2, 0, 1}},
        {12, {2, 0, 2}},
        {13, {1, 1, 0, 2, 0}},
        {14, {1, 1, 0, 2, 1}},
        {15, {1, 1, 0, 1, 0}},
        {16, {1, 1, 0, 1, 1}},
        {17, {1, 1, 0, 0, 0}},
        {18, {1, 1, 0, 0, 1}},
        {19, {1, 1, 0, 0, 2}},
        {20, {1, 1, 1, 1, 0}},
        {21, {1, 1, 1, 1, 1}},
        {22, {1, 1, 1, 0, 0}},
        {23, {1, 1, 1, 0, 1}},
        {24, {1, 1, 1, 0, 2}},
        {-1, {0, 0, 1, 1}},
        {-2, {0, 0, 1, 0}},
        {-3, {0, 0, 2, 1}},
        {-4, {0, 0, 2, 0}},
        {-5, {1, 1, 0, 2}},
        {-6, {1, 1, 0, 1}},
        {-7, {1, 1, 0, 0}},
        {-8, {1, 1, 1, 1}},
        {-9, {1, 1, 1, 0}},
        {-10, {1, 0, 0, 2}},
        {-11, {1, 0, 0, 1}},
        {-12, {1, 0, 0, 0}},
        {-13, {1, 0, 1, 1}},
        {-14, {1, 0, 1, 0}},
        {-15, {1, 0, 2, 1}},
        {-16, {1, 0, 2, 0}},
        {-17, {2, 1, 0, 2}},
        {-18, {2, 1, 0, 1}},
        {-19, {2, 1, 0, 0}},
        {-20, {2, 1, 1, 1}},
        {-21, {2, 1, 0, 2}},
        {-22, {2, 0, 0, 2}},
        {-23, {2, 0, 0, 1}},
        {-24, {2, 0, 0, 0}},
    };
    return rows;
}

const std::vector<std::pair<long, long>>& printed_range_sets() {
    static const std::vector<std::pair<long, long>> sets = {{0, 2}, {-4, 2}, {-4, 12}, {-29, 12}};
    return sets;
}

namespace {

template <class Encode>
void compare_table(AuditReport& r, const std::vector<PrintedRow>& rows, Encode encode, const CFStream& cf) {
    for (const auto& row : rows) {
        std::vector<BigInt> printed = from_msd(row.msd_digits);
        std::vector<BigInt> ours = encode(BigInt(row.value)).digits;
        if (ours.size() > printed.size()) {
            r.witnesses.push_back({std::to_string(row.value), show_msd(printed), show_msd(ours)});
            continue;
        }
        ours.resize(printed.size(), 0);
        if (ours != printed) {
            r.witnesses.push_back({std::to_string(row.value),
                                   show_msd(printed) + " (decodes to " + dot_q_star(printed, cf).get_str() + ")",
                                   show_msd(ours)});
        }
    }
}

} // namespace

AuditReport audit_counting_table() {
    AuditReport r;
    r.claim = "table.counting";
    r.parameters = "silver, S=1..24";
    CFStream cf = silver();
    compare_table(r, printed_counting_table(), [&](const BigInt& s) { return encode_counting(s, cf); }, cf);
    conclude(r);
    return r;
}

AuditReport audit_integer_table() {
    AuditReport r;
    r.claim = "table.integer";
    r.parameters = "silver, T=-24..24";
    r.expected = Verdict::CounterexampleFound;  // row T=-21
    CFStream cf = silver();
    compare_table(r, printed_integer_table(), [&](const BigInt& t) { return encode_integer(t, cf); }, cf);
    conclude(r);
    return r;
}

AuditReport audit_range_sets() {
    AuditReport r;
    r.claim = "table.range-sets";
    r.parameters = "silver, n=1..4";
    r.expected = Verdict::CounterexampleFound;  // printed lower bound of I_4^*
    CFStream cf = silver();
    const auto& printed = printed_range_sets();
    for (std::size_t i = 0; i < printed.size(); ++i) {
        long n = static_cast<long>(i) + 1;
        RangeSet rs = range_set(n, cf);
        auto [plo, phi] = printed[i];
        if (rs.lo != plo || rs.hi != phi) {
            r.witnesses.push_back({"I_" + std::to_string(n) + "^*",
                                   "[" + std::to_string(plo) + ", " + std::to_string(phi) + "]",
                                   "[" + rs.lo.get_str() + ", " + rs.hi.get_str() + "]"});
        }
    }
    conclude(r);
    return r;
}

AuditReport audit_bijection(const std::string& name, const CFStream& cf, std::size_t max_index) {
    AuditReport r;
    r.claim = "bijection";
    r.parameters = name + ", n<=" + std::to_string(max_index);
    auto left = enumerate_admissible(cf, DigitKind::LeftAdmissible, max_index);
    auto right = enumerate_admissible(cf, DigitKind::RightAdmissible, max_index);
    DenominatorLadder L(cf);

    for (std::size_t n = 0; n <= max_index; ++n) {
        std::set<BigInt> values;
        std::size_t count = 0;
        for (const auto& ds : left) {
            if (ds.n() > n) continue;
            ++count;
            BigInt v = decode_counting(ds, cf);
            values.insert(v);
            if (n == max_index && !(encode_counting(v, cf) == ds))
                r.witnesses.push_back({"left " + show(ds.digits), "round trip", show(encode_counting(v, cf).digits)});
        }
        const BigInt& qn = L.q(static_cast<long>(n));
        bool onto = values.size() == count && (values.empty() || (*values.begin() == 0 && *values.rbegin() == qn - 1));
        if (BigInt(static_cast<unsigned long>(count)) != qn || !onto)
            r.witnesses.push_back({"left n=" + std::to_string(n), "q_n=" + qn.get_str() + " distinct values",
                                   std::to_string(count) + " strings, " + std::to_string(values.size()) + " values"});

        RangeSet rs = range_set(static_cast<long>(n), cf);
        values.clear();
        count = 0;
        for (const auto& ds : right) {
            if (ds.n() > n) continue;
            ++count;
            BigInt v = decode_integer(ds, cf);
            values.insert(v);
            if (n == max_index && !(encode_integer(v, cf) == ds))
                r.witnesses.push_back({"right " + show(ds.digits), "round trip", show(encode_integer(v, cf).digits)});
        }
        onto = values.size() == count && !values.empty() && *values.begin() == rs.lo && *values.rbegin() == rs.hi;
        if (BigInt(static_cast<unsigned long>(count)) != rs.size() || !onto)
            r.witnesses.push_back({"right n=" + std::to_string(n), "|I_n^*|=" + rs.size().get_str(),
                                   std::to_string(count) + " strings, " + std::to_string(values.size()) + " values"});
    }
    conclude(r);
    return r;
}

AuditReport audit_bijection_as_printed(const CFStream& cf, std::size_t max_index) {
    AuditReport r;
    r.claim = "bijection.as-printed";
    r.parameters = "n<=" + std::to_string(max_index);
    r.expected = Verdict::CounterexampleFound;  // <2,1> and the empty string both give 0
    auto strings = enumerate_admissible(cf, DigitKind::RightAdmissible, max_index, RightMode::AsPrinted);
    std::stable_sort(strings.begin(), strings.end(),
                     [](const DigitString& x, const DigitString& y) { return x.n() < y.n(); });
    std::map<BigInt, std::vector<BigInt>> seen;
    for (const auto& ds : strings) {
        BigInt v = dot_q_star(ds.digits, cf);
        auto [it, fresh] = seen.emplace(v, ds.digits);
        if (!fresh && r.witnesses.size() < 8)
            r.witnesses.push_back({show(ds.digits), show(it->second) + " -> " + v.get_str(), v.get_str()});
    }
    conclude(r);
    return r;
}

AuditReport audit_minimality(const std::string& name, const CFStream& cf, std::size_t max_n, std::size_t samples,
                             unsigned seed) {
    AuditReport r;
    r.claim = "minimality.total-under";
    r.parameters = name + ", n<=" + std::to_string(max_n) + ", " + std::to_string(samples) + " intercepts, seed " +
                   std::to_string(seed);
    std::mt19937 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        unsigned den = 2 + rng() % 996;
        unsigned num = rng() % den;
        RealValue beta(make_rational(num, den));
        SolutionSequence seq = solve_total_under(cf, beta, max_n);
        for (const auto& t : seq.terms) {
            RangeSet rs = range_set(static_cast<long>(t.n), cf);
            auto best = brute_best(cf, beta, rs.lo, rs.hi, SearchSide::Under);
            if (!best || *best != t.A)
                r.witnesses.push_back({"beta=" + beta.to_string() + ", n=" + std::to_string(t.n),
                                       best ? best->get_str() : "none", t.A.get_str()});
        }
    }
    conclude(r);
    return r;
}

AuditReport audit_denominator_normality(const std::string& name, const CFStream& cf, std::size_t max_k) {
    AuditReport r;
    r.claim = "normality.denominators";
    r.parameters = name + ", k<=" + std::to_string(max_k);
    DenominatorLadder L(cf);
    for (std::size_t k = 0; k <= max_k; ++k) {
        Normality nm = is_normal(L.q(static_cast<long>(k)), cf);
        if (!nm.normal)
            r.witnesses.push_back({"q_" + std::to_string(k), "< 1", decimal_string(nm.value, 12)});
    }
    conclude(r);
    return r;
}

AuditReport audit_normality_converse(const std::string& name, const CFStream& cf, long max_m) {
    AuditReport r;
    r.claim = "normality.converse";
    r.parameters = name + ", 1<=m<=" + std::to_string(max_m);
    r.expected = Verdict::CounterexampleFound;  // m = 3 on silver
    DenominatorLadder L(cf);
    std::set<BigInt> qs;
    for (long k = 0; L.q(k) <= max_m; ++k) qs.insert(L.q(k));
    for (long m = 1; m <= max_m; ++m) {
        if (qs.count(BigInt(m))) continue;
        Normality nm = is_normal(BigInt(m), cf);
        if (nm.normal)
            r.witnesses.push_back({"m=" + std::to_string(m), "not normal", decimal_string(nm.value, 12)});
    }
    conclude(r);
    return r;
}

AuditReport audit_series(const std::string& name, const CFStream& cf, std::size_t n) {
    AuditReport r;
    r.claim = "series";
    r.parameters = name + ", n=" + std::to_string(n);
    SeriesReport rep = series_partials(cf, n);
    for (const auto& id : rep.identities) {
        if (!identity_matches(id))
            r.witnesses.push_back({id.name, decimal_string(id.closed_form, 40), decimal_string(id.partial, 40)});
    }
    conclude(r);
    return r;
}

namespace {

using Case = std::pair<Variant, RealValue>;

void certify_cases(AuditReport& r, const CFStream& cf, std::size_t n, const std::vector<Case>& cases) {
    ConvergentLadder L(cf);
    for (const auto& [v, beta] : cases) {
        SolutionSequence seq = solve(cf, v, beta, n);
        const Certificate& c = seq.certificate;
        if (c.ok()) continue;
        std::ostringstream os;
        os << "bound=" << c.bound << " error=" << c.error << " terminal=" << c.terminal;
        if (!c.failed_error.empty()) {
            std::size_t k = c.failed_error.front();
            os << "; first failing n=" << k;
            if (compare(seq.terms[k].error, L[static_cast<long>(k) - 1].abs_theta, cf.budget()) == 0)
                os << " with error = |theta_{n-1}|";
        }
        r.witnesses.push_back({to_string(v) + " beta=" + beta.to_string(), "certified", os.str()});
    }
}

} // namespace

AuditReport audit_solutions(const std::string& name, const CFStream& cf, std::size_t n) {
    AuditReport r;
    r.claim = "solutions.certificate";
    r.parameters = name + ", n=" + std::to_string(n);
    const RealValue& alpha = cf.source();
    const RealValue two_alpha = mod1(RealValue(2L) * alpha);
    std::vector<Case> cases;
    for (const RealValue& beta :
         {RealValue(make_rational(1, 3)), RealValue(make_rational(1, 2)), make_quadratic(-2, 1, 1, 7)}) {
        for (Variant v : {Variant::TotalUnder, Variant::TotalOver, Variant::Forward, Variant::Backward})
            cases.emplace_back(v, beta);
    }
    for (Variant v : {Variant::TotalUnder, Variant::TotalOver, Variant::Forward}) {
        cases.emplace_back(v, alpha);
        cases.emplace_back(v, two_alpha);
    }
    certify_cases(r, cf, n, cases);
    conclude(r);
    return r;
}

AuditReport audit_lattice_solutions(const std::string& name, const CFStream& cf, std::size_t n) {
    AuditReport r;
    r.claim = "solutions.lattice-intercepts";
    r.parameters = name + ", n=" + std::to_string(n);
    r.expected = Verdict::CounterexampleFound;  // error reaches |theta_{n-1}| on an infinite tail
    const RealValue& alpha = cf.source();
    certify_cases(r, cf, n,
                  {{Variant::Backward, alpha},
                   {Variant::Backward, mod1(RealValue(2L) * alpha)},
                   {Variant::Forward, RealValue(1L) - alpha}});
    conclude(r);
    return r;
}

std::vector<AuditReport> audit(Suite suite) {
    std::vector<AuditReport> out;
    auto want = [&](Suite s) { return suite == Suite::All || suite == s; };
    const auto slopes = sample_slopes();
    if (want(Suite::Tables)) {
        out.push_back(audit_counting_table());
        out.push_back(audit_integer_table());
        out.push_back(audit_range_sets());
    }
    if (want(Suite::Bijection)) {
        out.push_back(audit_bijection("golden", slopes[0].cf, 7));
        out.push_back(audit_bijection("silver", slopes[1].cf, 7));
        out.push_back(audit_bijection("pi-digits", pi_digit_stream(), 7));
        out.push_back(audit_bijection_as_printed(slopes[1].cf, 7));
    }
    if (want(Suite::Minimality)) {
        out.push_back(audit_minimality("golden", slopes[0].cf, 6, 10, 1));
        out.push_back(audit_minimality("silver", slopes[1].cf, 6, 10, 2));
    }
    if (want(Suite::Normality)) {
        for (const auto& s : slopes) out.push_back(audit_denominator_normality(s.name, s.cf, 30));
        out.push_back(audit_normality_converse("silver", slopes[1].cf, 100));
    }
    if (want(Suite::Series)) {
        out.push_back(audit_series("golden", slopes[0].cf, 40));
        out.push_back(audit_series("silver", slopes[1].cf, 40));
        out.push_back(audit_series("naturals", naturals_stream(), 40));
    }
    if (want(Suite::Solutions)) {
        for (const auto& s : slopes) out.push_back(audit_solutions(s.name, s.cf, 30));
        for (const auto& s : slopes) out.push_back(audit_lattice_solutions(s.name, s.cf, 30));
    }
    return out;
}

} // namespace linapprox

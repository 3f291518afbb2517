#include "linapprox/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linapprox/oracle.hpp"

namespace linapprox::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string slope;
    std::string intercept;
    std::string gamma;
    std::string value;
    std::string from, to;
    std::string digit_string;
    std::string m;
    std::string variant = "total-under";
    std::string mode = "corrected";
    std::string suite = "all";
    std::string output = "json";
    std::size_t digits = 10;
    std::size_t terms = 10;
    long n = 0;
    bool all = false;
    bool msd = false;
    bool certify = false;
    unsigned places = 30;
    unsigned max_bits = kDefaultMaxBits;
};

unsigned default_max_bits() {
    if (const char* env = std::getenv("LINAPPROX_MAX_BITS")) {
        try {
            unsigned long v = std::stoul(env);
            if (v >= kStartBits) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return kDefaultMaxBits;
}

BigInt parse_int(const std::string& s, const char* what) {
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    bool ok = !t.empty();
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!(std::isdigit(static_cast<unsigned char>(t[i])) || (i == 0 && t[i] == '-' && t.size() > 1))) ok = false;
    if (!ok) throw ParseError(std::string(what) + ": expected an integer, got '" + s + "'");
    return BigInt(t, 10);
}

// Bare integers and fractions read as rat:, bare decimals as dec:.
RealValue parse_real(const std::string& s, unsigned max_bits) {
    if (s.find(':') != std::string::npos) return parse_number(s, max_bits);
    bool dotted = s.find('.') != std::string::npos;
    return parse_number((dotted ? "dec:" : "rat:") + s, max_bits);
}

std::vector<BigInt> parse_digit_string(const std::string& s, bool msd) {
    std::vector<BigInt> out;
    std::string t;
    for (char c : s)
        if (c != '<' && c != '>' && c != ' ') t.push_back(c);
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_int(item, "digit string"));
    }
    if (msd) std::reverse(out.begin(), out.end());
    return out;
}

bool named_slope(const std::string& s) {
    return s == "golden" || s == "silver" || s == "naturals" || s == "pi-digits";
}

CFStream make_slope(const Options& o) {
    if (o.slope.empty()) throw ParseError("--slope is required");
    if (o.slope == "golden") return sample_slopes()[0].cf;
    if (o.slope == "silver") return sample_slopes()[1].cf;
    if (o.slope == "naturals") return naturals_stream(o.max_bits);
    if (o.slope == "pi-digits") return pi_digit_stream(o.max_bits);
    RealValue x = parse_real(o.slope, o.max_bits);
    return CFStream::from_value(mod1(x, o.max_bits), o.max_bits);
}

BigInt integer_part(const Options& o) {
    if (named_slope(o.slope)) return 0;
    return floor_of(parse_real(o.slope, o.max_bits), o.max_bits);
}

RealValue make_intercept(const Options& o) {
    if (o.intercept.empty()) throw ParseError("--intercept is required");
    return mod1(parse_real(o.intercept, o.max_bits), o.max_bits);
}

Json real_json(const RealValue& x, unsigned places) {
    DecimalEnclosure d = to_decimal(x, places);
    Json j;
    j["decimal"] = d.value;
    j["radius"] = d.radius;
    if (x.is_exact()) j["exact"] = x.to_string();
    return j;
}

Json digits_json(const std::vector<BigInt>& digits) {
    Json a = Json::array();
    for (const auto& d : digits) a.push_back(d.get_str());
    return a;
}

Json digit_string_json(const DigitString& ds) {
    Json j;
    j["kind"] = to_string(ds.kind);
    j["order"] = "little-endian";
    j["index"] = std::to_string(ds.n());
    j["digits"] = digits_json(ds.digits);
    return j;
}

std::string angle(const std::vector<BigInt>& digits) {
    std::string s = "<";
    for (std::size_t i = 0; i < digits.size(); ++i) s += (i ? "," : "") + digits[i].get_str();
    return s + ">";
}

// Numeration rows, most significant digit first, padded to a common width.
void print_rows(std::ostream& out, const char* label, char digit, const std::vector<std::pair<BigInt, DigitString>>& rows) {
    std::size_t width = 1;
    for (const auto& [v, ds] : rows) width = std::max(width, ds.n());
    std::size_t vw = std::string(label).size();
    for (const auto& [v, ds] : rows) vw = std::max(vw, v.get_str().size());
    out << std::setw(static_cast<int>(vw)) << label << " |";
    for (std::size_t k = width; k >= 1; --k) out << ' ' << digit << k;
    out << '\n';
    for (const auto& [v, ds] : rows) {
        out << std::setw(static_cast<int>(vw)) << v.get_str() << " |";
        for (std::size_t k = width; k >= 1; --k) {
            std::string d = ds.at(k).get_str();
            out << ' ' << std::setw(static_cast<int>(1 + std::to_string(k).size())) << d;
        }
        out << '\n';
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

RightMode parse_mode(const std::string& m) { return m == "as-printed" ? RightMode::AsPrinted : RightMode::Corrected; }

std::vector<BigInt> value_range(const Options& o) {
    if (!o.value.empty()) return {parse_int(o.value, "--value")};
    if (o.from.empty() || o.to.empty()) throw ParseError("give --value or both --from and --to");
    BigInt lo = parse_int(o.from, "--from"), hi = parse_int(o.to, "--to");
    if (hi < lo) throw ParseError("--from exceeds --to");
    if (hi - lo > 100000) throw ParseError("at most 100001 values per call");
    std::vector<BigInt> v;
    for (BigInt x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

int cmd_cf(const Options& o, std::ostream& out) {
    CFStream cf = make_slope(o);
    BigInt a0 = integer_part(o);
    std::size_t have = cf.available(o.digits);
    auto digits = cf.digits(have);
    if (o.output == "table") {
        out << "a_0 = " << a0.get_str() << '\n' << angle(digits) << '\n';
        return kOk;
    }
    Json j;
    j["command"] = "cf";
    j["slope"] = o.slope;
    j["integer_part"] = a0.get_str();
    j["digits"] = digits_json(digits);
    j["finite"] = cf.is_finite();
    emit(out, j);
    return kOk;
}

int cmd_convergents(const Options& o, std::ostream& out) {
    CFStream cf = make_slope(o);
    BigInt a0 = integer_part(o);
    std::size_t have = cf.available(o.digits);
    auto ladder = convergents(cf, have);
    Json rows = Json::array();
    if (o.output == "table") out << "k | a_k | p_k/q_k | a_0 + p_k/q_k | theta_k\n";
    for (long k = 0; k <= static_cast<long>(have); ++k) {
        const auto& st = at(ladder, k);
        BigInt full = st.p + a0 * st.q;
        if (o.output == "table") {
            out << k << " | " << st.a.get_str() << " | " << st.p.get_str() << '/' << st.q.get_str() << " | "
                << full.get_str() << '/' << st.q.get_str() << " | " << decimal_string(st.theta, 20) << '\n';
            continue;
        }
        Json r;
        r["k"] = std::to_string(k);
        r["a"] = st.a.get_str();
        r["p"] = st.p.get_str();
        r["q"] = st.q.get_str();
        r["with_integer_part"] = full.get_str() + "/" + st.q.get_str();
        r["theta"] = real_json(st.theta, o.places);
        rows.push_back(r);
    }
    if (o.output == "table") return kOk;
    Json j;
    j["command"] = "convergents";
    j["slope"] = o.slope;
    j["integer_part"] = a0.get_str();
    j["convergents"] = rows;
    emit(out, j);
    return kOk;
}

int cmd_series(const Options& o, std::ostream& out) {
    CFStream cf = make_slope(o);
    if (o.n < 1) throw OutOfDomain("--n must be at least 1");
    SeriesReport rep = series_partials(cf, static_cast<std::size_t>(o.n));
    Json ids = Json::array();
    for (const auto& id : rep.identities) {
        bool ok = identity_matches(id);
        if (o.output == "table") {
            out << std::left << std::setw(20) << id.name << std::right << ' ' << decimal_string(id.partial, 25)
                << "  " << decimal_string(id.closed_form, 25) << "  " << (ok ? "match" : "MISMATCH") << '\n';
            continue;
        }
        Json r;
        r["name"] = id.name;
        r["partial"] = real_json(id.partial, o.places);
        r["closed_form"] = real_json(id.closed_form, o.places);
        r["match"] = ok;
        ids.push_back(r);
    }
    if (o.output == "table") return kOk;
    Json j;
    j["command"] = "series";
    j["slope"] = o.slope;
    j["n"] = std::to_string(rep.n);
    j["identities"] = ids;
    emit(out, j);
    return kOk;
}

int cmd_encode(const Options& o, std::ostream& out, bool integer) {
    CFStream cf = make_slope(o);
    std::vector<std::pair<BigInt, DigitString>> rows;
    for (const auto& v : value_range(o)) rows.emplace_back(v, integer ? encode_integer(v, cf) : encode_counting(v, cf));
    if (o.output == "table") {
        print_rows(out, integer ? "T" : "S", integer ? 'b' : 'c', rows);
        return kOk;
    }
    Json arr = Json::array();
    for (const auto& [v, ds] : rows) {
        Json r;
        r["value"] = v.get_str();
        Json d = digit_string_json(ds);
        for (auto& [k, x] : d.items()) r[k] = x;
        arr.push_back(r);
    }
    Json j;
    j["command"] = integer ? "encode-int" : "encode";
    j["slope"] = o.slope;
    j["representations"] = arr;
    emit(out, j);
    return kOk;
}

int cmd_decode(const Options& o, std::ostream& out, bool integer) {
    CFStream cf = make_slope(o);
    DigitString ds;
    ds.kind = integer ? DigitKind::RightAdmissible : DigitKind::LeftAdmissible;
    ds.digits = parse_digit_string(o.digit_string, o.msd);
    BigInt v = integer ? decode_integer(ds, cf, parse_mode(o.mode)) : decode_counting(ds, cf);
    if (o.output == "table") {
        out << angle(ds.digits) << " -> " << v.get_str() << '\n';
        return kOk;
    }
    Json j;
    j["command"] = integer ? "decode-int" : "decode";
    j["slope"] = o.slope;
    j["string"] = digit_string_json(ds);
    if (integer) j["mode"] = o.mode;
    j["value"] = v.get_str();
    emit(out, j);
    return kOk;
}

int cmd_range(const Options& o, std::ostream& out) {
    CFStream cf = make_slope(o);
    Json arr = Json::array();
    for (long n = o.all ? -1 : o.n; n <= o.n; ++n) {
        RangeSet rs = range_set(n, cf);
        if (o.output == "table") {
            out << "I_" << n << "^* = ";
            if (rs.empty)
                out << "{}\n";
            else
                out << '[' << rs.lo.get_str() << ", " << rs.hi.get_str() << "] (" << rs.size().get_str()
                    << (rs.size() == 1 ? " integer)\n" : " integers)\n");
            continue;
        }
        Json r;
        r["n"] = std::to_string(n);
        r["empty"] = rs.empty;
        if (!rs.empty) {
            r["lo"] = rs.lo.get_str();
            r["hi"] = rs.hi.get_str();
        }
        r["size"] = rs.size().get_str();
        arr.push_back(r);
    }
    if (o.output == "table") return kOk;
    Json j;
    j["command"] = "range";
    j["slope"] = o.slope;
    j["ranges"] = arr;
    emit(out, j);
    return kOk;
}

Json expansion_json(const ExpansionResult& ex, const CFStream& cf, bool alternating, unsigned places) {
    ConvergentLadder L(cf);
    auto [Q, P] = alternating ? alternating_linear_form(ex.digits.digits, L) : absolute_linear_form(ex.digits.digits, L);
    Json j;
    j["integer_part"] = ex.integer_part.get_str();
    j["expansion"] = digit_string_json(ex.digits);
    j["terminated"] = ex.terminated();
    if (ex.terminated()) j["ell"] = std::to_string(ex.index);
    j["partial_sum"] = real_json(RealValue(Q) * cf.source() - RealValue(P), places);
    j["remainder"] = real_json(ex.remainder, places);
    return j;
}

int cmd_expand(const Options& o, std::ostream& out, bool alternating, bool real) {
    CFStream cf = make_slope(o);
    ExpansionResult ex;
    std::string input;
    if (real) {
        if (o.value.empty()) throw ParseError("--value is required");
        input = o.value;
        RealValue r = parse_real(o.value, o.max_bits);
        ex = alternating ? expand_real_alternating(r, cf, o.digits) : expand_real_absolute(r, cf, o.digits);
    } else if (alternating) {
        RealValue gamma;
        if (!o.gamma.empty()) {
            input = o.gamma;
            gamma = parse_real(o.gamma, o.max_bits);
        } else {
            input = o.intercept;
            gamma = make_intercept(o) - cf.source();
        }
        ex = expand_alternating(gamma, cf, o.digits);
    } else {
        input = o.intercept;
        ex = expand_absolute(make_intercept(o), cf, o.digits);
    }
    if (o.output == "table") {
        if (real) out << (alternating ? "c_0 = " : "b_0 = ") << ex.integer_part.get_str() << '\n';
        out << angle(ex.digits.digits) << (ex.terminated() ? " (terminated, ell = " + std::to_string(ex.index) + ")"
                                                            : " (truncated)")
            << '\n';
        return kOk;
    }
    Json j;
    j["command"] = real ? (alternating ? "expand-real-alt" : "expand-real-abs") : (alternating ? "expand-alt" : "expand-abs");
    j["slope"] = o.slope;
    j["input"] = input;
    Json body = expansion_json(ex, cf, alternating, o.places);
    for (auto& [k, v] : body.items()) j[k] = v;
    emit(out, j);
    return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
    CFStream cf = make_slope(o);
    auto v = parse_variant(o.variant);
    if (!v) throw ParseError("unknown variant '" + o.variant + "'");
    bool hom = *v == Variant::HomPositive || *v == Variant::HomNegative || *v == Variant::HomSignedOver ||
               *v == Variant::HomSignedUnder;
    RealValue beta = hom ? RealValue() : make_intercept(o);
    SolutionSequence seq = solve(cf, *v, beta, o.terms);
    const Certificate& c = seq.certificate;
    if (o.output == "table") {
        out << "n | A_n | side | error\n";
        for (const auto& t : seq.terms)
            out << t.n << " | " << t.A.get_str() << " | " << to_string(t.side) << " | " << decimal_string(t.error, 20)
                << (o.certify && !(t.bound_ok && t.error_ok) ? "  (fails)" : "") << '\n';
        if (o.certify) out << "certificate: " << (c.ok() ? "pass" : "fail") << " (" << c.terminal_note << ")\n";
        return kOk;
    }
    Json terms = Json::array();
    for (const auto& t : seq.terms) {
        Json r;
        r["n"] = std::to_string(t.n);
        r["A"] = t.A.get_str();
        r["side"] = to_string(t.side);
        r["iterate"] = real_json(t.iterate, o.places);
        r["error"] = real_json(t.error, o.places);
        if (o.certify) {
            r["bound_ok"] = t.bound_ok;
            r["error_ok"] = t.error_ok;
        }
        terms.push_back(r);
    }
    Json j;
    j["command"] = "solve";
    j["variant"] = to_string(*v);
    j["slope"] = o.slope;
    if (!hom) j["intercept"] = real_json(beta, o.places);
    if (seq.ell) j["ell"] = std::to_string(*seq.ell);
    if (!hom) j["source_digits"] = digit_string_json(seq.source_digits);
    j["terms"] = terms;
    if (o.certify) {
        Json cj;
        cj["bound"] = c.bound;
        cj["error"] = c.error;
        cj["terminal"] = c.terminal;
        cj["terminal_note"] = c.terminal_note;
        Json fb = Json::array(), fe = Json::array();
        for (auto n : c.failed_bound) fb.push_back(std::to_string(n));
        for (auto n : c.failed_error) fe.push_back(std::to_string(n));
        cj["failed_bound"] = fb;
        cj["failed_error"] = fe;
        cj["ok"] = c.ok();
        j["certificate"] = cj;
    }
    emit(out, j);
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    CFStream cf = make_slope(o);
    BigInt m = parse_int(o.m, "--m");
    RealValue beta = o.intercept.empty() ? RealValue() : make_intercept(o);
    ApproximateTerm t = classify(m, cf, beta);
    std::optional<Normality> nm;
    if (m != 0) nm = is_normal(m, cf);
    if (o.output == "table") {
        out << "m = " << m.get_str() << ": " << to_string(t.side) << ", error " << decimal_string(t.error, 20);
        if (nm) out << ", |m|*||m alpha|| = " << decimal_string(nm->value, 20) << (nm->normal ? " (normal)" : "");
        out << '\n';
        return kOk;
    }
    Json j;
    j["command"] = "classify";
    j["slope"] = o.slope;
    j["m"] = m.get_str();
    j["intercept"] = real_json(beta, o.places);
    j["side"] = to_string(t.side);
    j["iterate"] = real_json(t.iterate, o.places);
    j["error"] = real_json(t.error, o.places);
    if (nm) {
        j["normal"] = nm->normal;
        j["normality_value"] = real_json(nm->value, o.places);
    }
    emit(out, j);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    auto suite = parse_suite(o.suite);
    if (!suite) throw ParseError("unknown suite '" + o.suite + "'");
    auto reports = audit(*suite);
    bool failed = false;
    Json arr = Json::array();
    for (const auto& r : reports) {
        failed = failed || r.failed();
        if (o.output == "table") {
            out << (r.failed() ? "FAIL " : "ok   ") << r.claim << " [" << r.parameters << "] " << to_string(r.verdict)
                << (r.expected == Verdict::CounterexampleFound ? " (expected)" : "") << '\n';
            for (const auto& w : r.witnesses)
                out << "     " << w.input << ": expected " << w.expected << ", got " << w.actual << '\n';
            continue;
        }
        Json j;
        j["claim"] = r.claim;
        j["parameters"] = r.parameters;
        j["verdict"] = to_string(r.verdict);
        j["expected"] = to_string(r.expected);
        Json ws = Json::array();
        for (const auto& w : r.witnesses) ws.push_back({{"input", w.input}, {"expected", w.expected}, {"actual", w.actual}});
        j["witnesses"] = ws;
        arr.push_back(j);
    }
    if (o.output != "table") {
        Json j;
        j["command"] = "verify";
        j["suite"] = o.suite;
        j["reports"] = arr;
        j["ok"] = !failed;
        emit(out, j);
    }
    return failed ? kVerifyFailed : kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    o.max_bits = default_max_bits();

    CLI::App app{"Irrational-base numeration, expansions and best linear approximates", "linapprox"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Expand all help");

    auto common = [&](CLI::App* sc, bool slope = true) {
        if (slope) sc->add_option("--slope", o.slope, "slope: rat:, quad:, dec:, cf:, golden, silver, naturals, pi-digits")->required();
        sc->add_option("--max-bits", o.max_bits, "precision cap in bits (env LINAPPROX_MAX_BITS)")
            ->check(CLI::Range(static_cast<unsigned>(kStartBits), 1u << 24));
        sc->add_option("--output", o.output, "json or table")->check(CLI::IsMember({"json", "table"}));
        sc->add_option("--places", o.places, "decimal places for real outputs")->check(CLI::Range(1u, 10000u));
    };

    auto* cf = app.add_subcommand("cf", "continued fraction digits of the slope");
    common(cf);
    cf->add_option("--digits", o.digits, "number of digits");

    auto* conv = app.add_subcommand("convergents", "convergents p_k/q_k and theta_k");
    common(conv);
    conv->add_option("--digits", o.digits, "largest k");

    auto* series = app.add_subcommand("series", "telescoping series identities at index n");
    common(series);
    series->add_option("--n", o.n, "index")->required();

    auto* enc = app.add_subcommand("encode", "base-alpha representation of counting numbers");
    auto* enci = app.add_subcommand("encode-int", "base-[-alpha] representation of integers");
    for (auto* sc : {enc, enci}) {
        common(sc);
        sc->add_option("--value", o.value, "number to encode");
        sc->add_option("--from", o.from, "first value of a table");
        sc->add_option("--to", o.to, "last value of a table");
    }

    auto* dec = app.add_subcommand("decode", "recover a counting number from a left-admissible string");
    auto* deci = app.add_subcommand("decode-int", "recover an integer from a right-admissible string");
    for (auto* sc : {dec, deci}) {
        common(sc);
        sc->add_option("--string", o.digit_string, "comma separated digits d_1,d_2,... (little-endian)")->required();
        sc->add_flag("--msd", o.msd, "read --string most significant digit first");
    }
    deci->add_option("--mode", o.mode, "corrected or as-printed")->check(CLI::IsMember({"corrected", "as-printed"}));

    auto* range = app.add_subcommand("range", "the integer window I_n^*");
    common(range);
    range->add_option("--n", o.n, "index")->required();
    range->add_flag("--all", o.all, "list every index from -1 to n");

    auto* xa = app.add_subcommand("expand-abs", "absolute base-alpha expansion of an intercept");
    common(xa);
    xa->add_option("--intercept", o.intercept, "intercept (reduced mod 1)")->required();
    xa->add_option("--digits", o.digits, "maximal number of digits");

    auto* xl = app.add_subcommand("expand-alt", "alternating base-[-alpha] expansion");
    common(xl);
    auto* gopt = xl->add_option("--gamma", o.gamma, "shifted intercept in [-alpha, 1 - alpha)");
    auto* iopt = xl->add_option("--intercept", o.intercept, "intercept beta; expands mod1(beta) - alpha");
    gopt->excludes(iopt);
    xl->add_option("--digits", o.digits, "maximal number of digits");

    auto* xra = app.add_subcommand("expand-real-abs", "absolute expansion of any real");
    auto* xrl = app.add_subcommand("expand-real-alt", "alternating expansion of any real");
    for (auto* sc : {xra, xrl}) {
        common(sc);
        sc->add_option("--value", o.value, "real number")->required();
        sc->add_option("--digits", o.digits, "maximal number of digits");
    }

    auto* solve_cmd = app.add_subcommand("solve", "solution sequences of the approximation problems");
    common(solve_cmd);
    solve_cmd->add_option("--variant", o.variant,
                          "total-under, total-over, forward, backward, hom-positive, hom-negative, "
                          "hom-signed-over, hom-signed-under");
    solve_cmd->add_option("--intercept", o.intercept, "intercept (reduced mod 1)");
    solve_cmd->add_option("--terms", o.terms, "number of terms");
    solve_cmd->add_flag("--certify", o.certify, "evaluate the general-solution conditions");

    auto* cls = app.add_subcommand("classify", "over/under side, error and normality of one multiple");
    common(cls);
    cls->add_option("--m", o.m, "multiple")->required();
    cls->add_option("--intercept", o.intercept, "intercept (reduced mod 1, default 0)");

    auto* ver = app.add_subcommand("verify", "run the brute-force audits");
    common(ver, false);
    ver->add_option("--suite", o.suite, "tables, bijection, minimality, normality, series, solutions, all");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*cf) return cmd_cf(o, out);
        if (*conv) return cmd_convergents(o, out);
        if (*series) return cmd_series(o, out);
        if (*enc) return cmd_encode(o, out, false);
        if (*enci) return cmd_encode(o, out, true);
        if (*dec) return cmd_decode(o, out, false);
        if (*deci) return cmd_decode(o, out, true);
        if (*range) return cmd_range(o, out);
        if (*xa) return cmd_expand(o, out, false, false);
        if (*xl) return cmd_expand(o, out, true, false);
        if (*xra) return cmd_expand(o, out, false, true);
        if (*xrl) return cmd_expand(o, out, true, true);
        if (*solve_cmd) return cmd_solve(o, out);
        if (*cls) return cmd_classify(o, out);
        if (*ver) return cmd_verify(o, out);
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kParse;
    } catch (const PrecisionExhausted& e) {
        err << e.what() << '\n';
        return kPrecision;
    } catch (const InsufficientDigits& e) {
        err << e.what() << '\n';
        return kPrecision;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kDomain;
    }
    return kParse;
}

} // namespace linapprox::cli

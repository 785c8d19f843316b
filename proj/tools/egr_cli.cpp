// Command-line front end: good-D scans, existence decisions, witness
// construction, reduction verification, and family counting.
//
// Exit codes: 0 decided (yes or no) / output produced, 2 input error,
// 3 unknown verdict, 4 internal fault.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "egr/arith.hpp"
#include "egr/construct.hpp"
#include "egr/curve_io.hpp"
#include "egr/curves.hpp"
#include "egr/density.hpp"
#include "egr/reduction.hpp"
#include "egr/setzer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitFault = 4;

int fail_input(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitInput;
}

// "123", "-42", with optional scientific tail "1e6" (base * 10^exp, exact).
mpz_class parse_integer(const std::string& s) {
    auto epos = s.find_first_of("eE");
    try {
        if (epos == std::string::npos) return mpz_class(s);
        mpz_class base(s.substr(0, epos));
        mpz_class exp(s.substr(epos + 1));
        if (exp < 0 || exp > 64) throw std::invalid_argument("exponent out of range");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, exp.get_ui());
        return base * scale;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("'" + s + "' is not an integer");
    }
}

std::uint64_t parse_count_bound(const std::string& s) {
    mpz_class v = parse_integer(s);
    if (v < 10) throw std::invalid_argument("bound must be at least 10");
    if (!v.fits_ulong_p()) throw std::invalid_argument("bound too large");
    return static_cast<std::uint64_t>(v.get_ui());
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\', out += c;
        else if (c == '\n') out += "\\n";
        else out += c;
    }
    return out;
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

// Writes payload to --out when given, else stdout.  Returns false on an
// unwritable path.
bool emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return true;
    }
    std::ofstream f(out_path);
    if (!f) return false;
    f << payload;
    return bool(f.flush());
}

struct Options {
    std::string a_max_raw = "10000";
    unsigned retry_cap = 8;
    std::string format = "text";
    std::string out_path;
};

// ---- good-d ---------------------------------------------------------------

std::string render_good_d(const egr::GoodDTable& table, const std::string& format) {
    if (format == "csv") return egr::good_d_csv(table);
    std::ostringstream os;
    if (format == "json") {
        os << "[";
        bool first = true;
        for (const auto& [D, recs] : table)
            for (const egr::GoodDRecord& r : recs) {
                os << (first ? "" : ",") << "\n  {\"A\": " << r.A << ", \"D\": " << D
                   << ", \"t\": " << r.t << ", \"d1\": " << r.d1 << ", \"d2\": " << r.d2
                   << ", \"epsilon\": " << r.eps << "}";
                first = false;
            }
        os << "\n]\n";
        return os.str();
    }
    for (const auto& [D, recs] : table)
        for (const egr::GoodDRecord& r : recs)
            os << "D=" << D << "  A=" << r.A << "  t=" << r.t << "  d1=" << r.d1
               << "  d2=" << r.d2 << "  eps=" << (r.eps > 0 ? "+1" : "-1") << "\n";
    return os.str();
}

int cmd_good_d(const Options& opt) {
    mpz_class a_max = parse_integer(opt.a_max_raw);
    if (a_max < 1) return fail_input("--a-max must be a positive integer");
    egr::GoodDTable table = egr::scan_good_d(a_max);
    if (!emit(render_good_d(table, opt.format), opt.out_path))
        return fail_input("cannot write '" + opt.out_path + "'");
    return kExitOk;
}

// ---- decide / construct ----------------------------------------------------

const char* status_str(egr::EgrStatus s) {
    switch (s) {
        case egr::EgrStatus::yes: return "YES";
        case egr::EgrStatus::no: return "NO";
        default: return "UNKNOWN";
    }
}

struct Decision {
    egr::EgrVerdict verdict;
    std::optional<egr::WitnessCurve> witness;  // rich pipeline record when yes
    std::vector<egr::LocalReduction> rows;     // local reductions of the witness
};

Decision run_decide(const mpz_class& m, const mpz_class& a_max, unsigned retry_cap) {
    egr::GoodDTable table = egr::scan_good_d(a_max);
    Decision d;
    auto builder = [&](const egr::GoodDRecord& rec, const mpz_class& q) {
        d.witness = egr::construct_witness(m, rec, q, nullptr, nullptr, retry_cap);
        return d.witness->curve;
    };
    d.verdict = egr::decide(m, table, builder);
    if (d.witness) {
        auto [ok, rows] = egr::verify_egr(d.witness->curve);
        if (!ok) throw std::logic_error("constructed witness failed verification");
        d.rows = std::move(rows);
    }
    return d;
}

std::string render_decision(const mpz_class& m, const Decision& d, const std::string& format,
                            bool with_curve) {
    const egr::EgrVerdict& v = d.verdict;
    std::ostringstream os;
    if (format == "json") {
        os << "{\"m\": " << m << ", \"status\": \"" << status_str(v.status) << "\"";
        if (d.witness) {
            const egr::WitnessCurve& w = *d.witness;
            os << ", \"witness\": {\"D\": " << w.alpha.field().m() / d.verdict.witness->q
               << ", \"q\": " << v.witness->q << ", \"A\": " << w.A << ", \"u\": \""
               << json_escape(w.u.str()) << "\", \"j\": \"" << json_escape(w.curve.j().str())
               << "\", \"curve\": \"" << json_escape(egr::curve_to_text(w.curve)) << "\"}";
        }
        os << ", \"failures\": [";
        for (size_t i = 0; i < v.failures.size(); i++)
            os << (i ? ", " : "") << "\"" << json_escape(v.failures[i].str()) << "\"";
        os << "], \"unresolved\": [";
        for (size_t i = 0; i < v.unresolved.size(); i++)
            os << (i ? ", " : "") << v.unresolved[i];
        os << "]}\n";
        return os.str();
    }
    if (format == "csv") {
        os << "m,status,D,q,A,u\n" << m << "," << status_str(v.status) << ",";
        if (d.witness)
            os << d.witness->curve.field().m() / v.witness->q << "," << v.witness->q << ","
               << d.witness->A << "," << d.witness->u.str();
        else
            os << ",,,";
        os << "\n";
        return os.str();
    }
    os << "m = " << m << ": " << status_str(v.status) << "\n";
    if (d.witness) {
        const egr::WitnessCurve& w = *d.witness;
        os << "  D = " << w.curve.field().m() / v.witness->q << "  q = " << v.witness->q
           << "  A = " << w.A << "\n";
        os << "  alpha = " << w.alpha.str() << "  (norm " << w.alpha.norm() << ")\n";
        os << "  beta = " << w.beta.str() << "  (n = " << w.n << ")\n";
        os << "  u = " << w.u.str() << "\n";
        os << "  j = " << w.curve.j().str() << "\n";
        if (with_curve) os << "  curve: " << w.curve.str() << "\n";
        if (d.rows.empty())
            os << "  unit discriminant: good reduction everywhere\n";
        else
            for (const egr::LocalReduction& r : d.rows) os << "  " << r.str() << "\n";
    }
    for (const egr::ConditionReport& r : v.failures) os << "  fail " << r.str() << "\n";
    for (const mpz_class& D : v.unresolved)
        os << "  unresolved: D = " << D << " passes all conditions but is outside the scanned"
           << " good-D table\n";
    return os.str();
}

// Shared validation: squarefree m outside {0, 1}, or an input-error exit.
std::optional<mpz_class> parse_field_arg(const std::string& raw) {
    mpz_class m = parse_integer(raw);
    if (m == 0 || m == 1) return std::nullopt;
    if (egr::squarefree_part(m).second != 1) return std::nullopt;
    return m;
}

int cmd_decide(const std::string& m_raw, const Options& opt) {
    auto m = parse_field_arg(m_raw);
    if (!m) return fail_input("m must be a square-free integer other than 0 and 1");
    mpz_class a_max = parse_integer(opt.a_max_raw);
    if (a_max < 1) return fail_input("--a-max must be a positive integer");
    Decision d = run_decide(*m, a_max, opt.retry_cap);
    if (!emit(render_decision(*m, d, opt.format, true), opt.out_path))
        return fail_input("cannot write '" + opt.out_path + "'");
    return d.verdict.status == egr::EgrStatus::unknown ? kExitUnknown : kExitOk;
}

int cmd_construct(const std::string& m_raw, const Options& opt) {
    auto m = parse_field_arg(m_raw);
    if (!m) return fail_input("m must be a square-free integer other than 0 and 1");
    mpz_class a_max = parse_integer(opt.a_max_raw);
    if (a_max < 1) return fail_input("--a-max must be a positive integer");
    Decision d = run_decide(*m, a_max, opt.retry_cap);
    if (d.verdict.status != egr::EgrStatus::yes) {
        // no curve to emit; report the verdict on stdout regardless of --out
        std::cout << render_decision(*m, d, opt.format, false);
        return d.verdict.status == egr::EgrStatus::unknown ? kExitUnknown : kExitOk;
    }
    // --out receives the machine-readable curve file; stdout keeps the report
    std::cout << render_decision(*m, d, opt.format, true);
    if (!opt.out_path.empty()) {
        if (!emit(egr::curve_to_text(d.witness->curve), opt.out_path))
            return fail_input("cannot write '" + opt.out_path + "'");
    }
    return kExitOk;
}

// ---- verify -----------------------------------------------------------------

std::string render_verification(bool ok, const std::vector<egr::LocalReduction>& rows,
                                const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << "{\"egr\": " << (ok ? "true" : "false") << ", \"local\": [";
        for (size_t i = 0; i < rows.size(); i++)
            os << (i ? ", " : "") << "{\"prime\": \"" << json_escape(rows[i].prime.str())
               << "\", \"type\": \"" << egr::kodaira_str(rows[i].kodaira, rows[i].n)
               << "\", \"n\": " << rows[i].n << ", \"v_min\": " << rows[i].v_min_delta << "}";
        os << "]}\n";
        return os.str();
    }
    if (format == "csv") {
        os << "prime,type,n,v_min\n";
        for (const egr::LocalReduction& r : rows)
            os << "\"" << r.prime.str() << "\"," << egr::kodaira_str(r.kodaira, r.n) << ","
               << r.n << "," << r.v_min_delta << "\n";
        return os.str();
    }
    os << "EGR: " << (ok ? "true" : "false") << "\n";
    if (rows.empty())
        os << "unit discriminant: good reduction everywhere\n";
    else
        os << egr::render_report(rows);
    return os.str();
}

int cmd_verify(const std::string& path, const Options& opt) {
    std::ifstream f(path);
    if (!f) return fail_input("cannot open '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    std::optional<egr::CurveModel> E;
    try {
        E = egr::curve_from_text(buf.str());
    } catch (const std::invalid_argument& e) {
        return fail_input("parse: " + std::string(e.what()));
    }
    auto [ok, rows] = egr::verify_egr(*E);
    if (!emit(render_verification(ok, rows, opt.format), opt.out_path))
        return fail_input("cannot write '" + opt.out_path + "'");
    return kExitOk;
}

// ---- count ------------------------------------------------------------------

std::string render_count(const egr::CountReport& rep, const std::string& format) {
    if (format == "csv") return egr::count_csv(rep);
    std::ostringstream os;
    if (format == "json") {
        os << "{\"family\": \"" << json_escape(rep.label) << "\", \"alpha\": "
           << fmt_double(rep.alpha) << ", \"rows\": [";
        for (size_t i = 0; i < rep.grid.size(); i++)
            os << (i ? ", " : "") << "{\"X\": " << rep.grid[i] << ", \"count\": "
               << rep.counts[i] << ", \"normalized\": " << fmt_double(rep.normalized[i]) << "}";
        os << "]}\n";
        return os.str();
    }
    os << rep.label << "  (alpha = " << fmt_double(rep.alpha) << ")\n" << egr::count_csv(rep);
    return os.str();
}

int cmd_count(const std::string& target, const std::string& x_raw, const Options& opt) {
    std::uint64_t X = 0;
    try {
        X = parse_count_bound(x_raw);
    } catch (const std::invalid_argument& e) {
        return fail_input(std::string("x_max: ") + e.what());
    }
    egr::CountReport rep;
    if (target == "R") {
        rep = egr::aggregate_RX(X);
    } else if (target == "I") {
        rep = egr::aggregate_IX(X);
    } else {
        mpz_class D = parse_integer(target);
        if (D == 0 || D == 1 || D == -1 || egr::squarefree_part(D).second != 1)
            return fail_input("D must be a square-free integer outside {0, 1, -1}, or R / I");
        rep = egr::count_family(egr::family_for(D), X);
    }
    if (!emit(render_count(rep, opt.format), opt.out_path))
        return fail_input("cannot write '" + opt.out_path + "'");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "elliptic curves with everywhere good reduction and rational j-invariant\n"
        "over quadratic fields Q(sqrt(m)): classification, construction, verification"};
    app.require_subcommand(1);

    Options opt;
    std::string m_raw, target_raw, x_raw, curve_path;

    auto add_common = [&](CLI::App* sub, bool with_a_max) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out_path, "write the output to a file");
        if (with_a_max)
            sub->add_option("--a-max", opt.a_max_raw, "good-D scan bound on |A|")
                ->capture_default_str();
    };

    CLI::App* sc_good = app.add_subcommand("good-d", "table of good D with |A| <= a-max");
    add_common(sc_good, true);

    CLI::App* sc_decide =
        app.add_subcommand("decide", "does Q(sqrt(m)) carry an EGR curve with rational j?");
    sc_decide->add_option("m", m_raw, "square-free integer, not 0 or 1")->required();
    add_common(sc_decide, true);
    sc_decide->add_option("--retry-cap", opt.retry_cap, "conic solutions tried per candidate")
        ->capture_default_str();

    CLI::App* sc_construct =
        app.add_subcommand("construct", "build and verify a witness curve over Q(sqrt(m))");
    sc_construct->add_option("m", m_raw, "square-free integer, not 0 or 1")->required();
    add_common(sc_construct, true);
    sc_construct->add_option("--retry-cap", opt.retry_cap, "conic solutions tried per candidate")
        ->capture_default_str();

    CLI::App* sc_verify =
        app.add_subcommand("verify", "everywhere-good-reduction report for a curve file");
    sc_verify->add_option("curve-file", curve_path, "path to a curve file")->required();
    add_common(sc_verify, false);

    CLI::App* sc_count =
        app.add_subcommand("count", "sieve a density family: D, or aggregate R / I");
    sc_count->add_option("family", target_raw, "good D, or R (real) / I (imaginary)")->required();
    sc_count->add_option("x_max", x_raw, "count bound, e.g. 1e6");
    add_common(sc_count, false);
    std::string x_flag;
    sc_count->add_option("--x-max", x_flag, "count bound (alternative to the positional)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (sc_good->parsed()) return cmd_good_d(opt);
        if (sc_decide->parsed()) return cmd_decide(m_raw, opt);
        if (sc_construct->parsed()) return cmd_construct(m_raw, opt);
        if (sc_verify->parsed()) return cmd_verify(curve_path, opt);
        if (sc_count->parsed()) {
            if (x_raw.empty() && x_flag.empty())
                return fail_input("count needs a bound: positional x_max or --x-max");
            return cmd_count(target_raw, x_raw.empty() ? x_flag : x_raw, opt);
        }
        return fail_input("no subcommand");
    } catch (const std::invalid_argument& e) {
        return fail_input(e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal fault: " << e.what() << "\n";
        return kExitFault;
    }
}

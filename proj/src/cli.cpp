#include "hurwitz/cli.hpp"

#include "hurwitz/integral.hpp"
#include "hurwitz/kernels.hpp"
#include "hurwitz/laurent.hpp"
#include "hurwitz/oracles.hpp"
#include "hurwitz/report.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/special.hpp"
#include "hurwitz/sums.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>

namespace hurwitz::cli {

namespace {

using nlohmann::json;

struct Outcome {
    Report report;
    int code = kExitOk;
};

int default_digits() {
    const char* env = std::getenv(kDigitsEnv);
    if (env == nullptr || *env == '\0') return 30;
    char* end = nullptr;
    const long d = std::strtol(env, &end, 10);
    if (*end != '\0' || d < 1 || d > 10000) {
        throw DomainError(std::string(kDigitsEnv) + " must be a positive integer, got '" + env + "'");
    }
    return static_cast<int>(d);
}

// Decimal inputs carry guard bits beyond the working precision, so their
// representation error stays below the reported rounding error.
constexpr long kInputGuardBits = 64;

// "RE" or "RE,IM"
ComplexPoint parse_point(const std::string& text, long bits) {
    bits += kInputGuardBits;
    const size_t comma = text.find(',');
    if (comma == std::string::npos) return MpComplex(MpReal::parse(text, bits));
    if (text.find(',', comma + 1) != std::string::npos) throw DomainError("expected RE[,IM], got '" + text + "'");
    return {MpReal::parse(text.substr(0, comma), bits), MpReal::parse(text.substr(comma + 1), bits)};
}

EvalConfig make_config(int digits, std::optional<long> max_terms, const std::string& tol) {
    EvalConfig cfg = EvalConfig::for_digits(digits);
    if (max_terms) cfg.max_terms = *max_terms;
    if (!tol.empty()) cfg.target_tol = MpReal::parse(tol, cfg.precision_bits);
    cfg.validate();
    return cfg;
}

json error_cell(const MpReal& e) { return real_cell(e, 3); }

// ---- eval ----

struct EvalArgs {
    std::string s, a, method = "auto", tol;
    std::optional<int> k;
    std::optional<long> max_terms;
};

EvalResult oracle_result(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg) {
    EvalResult r;
    const long bits = cfg.precision_bits;
    if (s.im().is_zero() && s.re().is_integer() && s.re() <= 0L) {
        const int m = static_cast<int>(-s.re().to_double());
        r.method = Method::BernoulliOracle;
        r.zeta = MpComplex(negative_integer_oracle(m, ShiftParameter(a.value().with_precision(bits))));
        r.zeta_err = ldexp(abs(*r.zeta), -bits);
    } else if (s.re() > 1L) {
        const OracleValue o = dirichlet_oracle(s, a, cfg);
        r.method = Method::DirichletOracle;
        r.zeta = o.zeta;
        r.zeta_err = o.err;
        r.terms_or_nodes = o.terms;
    } else {
        throw DomainError("oracle: requires Re(s) > 1 or s a non-positive integer");
    }
    const MpComplex sm1 = s - 1L;
    r.phi = *r.zeta * sm1;
    r.err_estimate = r.zeta_err * abs(sm1);
    return r;
}

EvalResult run_method(const EvalArgs& args, const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg) {
    const std::string& m = args.method;
    if (m == "auto") return phi_auto(s, a, cfg);
    if (m == "integral") return phi_integral(s, a, cfg);
    if (m == "continued") return phi_continued(s, a, args.k.value_or(continuation_order(s)), cfg);
    if (m == "shifted-integral") return phi_shifted_integral(s, a, cfg);
    if (m == "series") return phi_series(s, a, cfg);
    if (m == "shifted-series") return phi_shifted_series(s, a, cfg);
    if (m == "oracle") return oracle_result(s, a, cfg);
    throw DomainError("unknown method '" + m + "'");
}

json eval_row(const EvalResult& r, bool shifted, int digits) {
    json row;
    row["quantity"] = shifted ? "zeta(s,a)-a^-s" : "zeta(s,a)";
    row["method"] = to_string(r.method);
    row["pole"] = r.pole();
    row["zeta"] = r.zeta ? complex_cell(*r.zeta, digits) : json();
    row["zeta_err"] = r.zeta ? error_cell(r.zeta_err) : json();
    row["phi"] = complex_cell(r.phi, digits);
    row["phi_err"] = error_cell(r.err_estimate);
    row["terms_or_nodes"] = r.terms_or_nodes;
    row["convergence_caveat"] = r.convergence_caveat;
    row["warnings"] = r.warnings;
    return row;
}

Outcome cmd_eval(const EvalArgs& args, int digits) {
    Outcome o;
    o.report.command = "eval";
    o.report.columns = {"quantity", "method",         "pole",           "zeta",    "zeta_err", "phi",
                        "phi_err",  "terms_or_nodes", "convergence_caveat", "warnings"};
    const EvalConfig cfg = make_config(digits, args.max_terms, args.tol);
    const long bits = cfg.precision_bits;
    const ComplexPoint s = parse_point(args.s, bits);
    const ShiftParameter a(MpReal::parse(args.a, bits + kInputGuardBits));
    o.report.inputs = {{"s", complex_cell(s, digits)},
                       {"a", real_cell(a.value(), digits)},
                       {"method", args.method},
                       {"digits", digits},
                       {"max_terms", cfg.max_terms},
                       {"target_tol", real_cell(cfg.target_tol, 3)}};
    if (args.k) o.report.inputs["k"] = *args.k;
    const bool shifted = args.method.rfind("shifted", 0) == 0;
    try {
        o.report.rows.push_back(eval_row(run_method(args, s, a, cfg), shifted, digits));
    } catch (const EvalAccuracyError& e) {
        o.report.rows.push_back(eval_row(e.partial(), shifted, digits));
        o.report.errors.push_back(e.what());
        o.code = kExitAccuracy;
    }
    return o;
}

// ---- laurent ----

struct LaurentArgs {
    std::string s0, a;
    int order = 0;
    bool berndt = false;
};

Outcome cmd_laurent(const LaurentArgs& args, int digits) {
    Outcome o;
    o.report.command = "laurent";
    const EvalConfig cfg = EvalConfig::for_digits(digits);
    const long bits = cfg.precision_bits;
    const ComplexPoint s0 = parse_point(args.s0, bits);
    const ShiftParameter a(MpReal::parse(args.a, bits + kInputGuardBits));
    o.report.inputs = {{"s0", complex_cell(s0, digits)},
                       {"a", real_cell(a.value(), digits)},
                       {"order", args.order},
                       {"digits", digits},
                       {"normalization", args.berndt ? "berndt" : "taylor"}};
    if (args.berndt && args.order < 1) throw DomainError("laurent: the Berndt normalization needs order >= 1");
    const LaurentExpansion e = laurent_expand(s0, a, args.order, cfg);
    o.report.inputs["k"] = e.k;
    if (args.berndt) {
        const BerndtCoefficients b = to_berndt(e);
        o.report.columns = {"n", "gamma_tilde_n", "err"};
        for (size_t n = 0; n < b.values.size(); ++n) {
            o.report.rows.push_back(json{{"n", n},
                                         {"gamma_tilde_n", complex_cell(b.values[n], digits)},
                                         {"err", error_cell(b.errs[n])}});
        }
        return o;
    }
    o.report.columns = {"n", "a_n", "a_err", "c_n", "c_err", "gamma_n", "gamma_err"};
    for (size_t n = 0; n < e.gamma_coeffs.size(); ++n) {
        o.report.rows.push_back(json{{"n", n},
                                     {"a_n", complex_cell(e.a_coeffs[n], digits)},
                                     {"a_err", error_cell(e.a_errs[n])},
                                     {"c_n", complex_cell(e.c_coeffs[n], digits)},
                                     {"c_err", error_cell(e.c_errs[n])},
                                     {"gamma_n", complex_cell(e.gamma_coeffs[n], digits)},
                                     {"gamma_err", error_cell(e.gamma_errs[n])}});
    }
    return o;
}

// ---- check ----

struct CheckRow {
    std::string suite;
    std::string property;
    bool pass;
    std::string detail;
};

// |x - y| <= bound plus 16 ulps of the larger side
bool within(const MpComplex& x, const MpComplex& y, const MpReal& bound) {
    const MpReal slack = ldexp(max(abs(x), abs(y)), 4 - x.precision());
    return abs(x - y) <= bound + slack;
}

std::string diff_detail(const MpComplex& x, const MpComplex& y, const MpReal& bound) {
    return "|diff|=" + abs(x - y).to_string(3) + " bound=" + bound.to_string(3);
}

void suite_identities(const EvalConfig& cfg, std::vector<CheckRow>& rows) {
    const long bits = cfg.precision_bits;
    for (const char* t : {"0.01", "0.1", "1", "5", "20"}) {
        for (long n : {10L, 100L, 1000L}) {
            for (Identity id : {Identity::InverseN, Identity::InverseNPlusOne}) {
                const IdentityCheck c = identity_lhs_rhs(id, MpReal::parse(t, bits), n);
                const bool ok = abs(c.lhs - c.partial_rhs) <= c.tail_bound;
                const std::string name = std::string(id == Identity::InverseN ? "inverse-n" : "inverse-n-plus-one") +
                                         " t=" + t + " N=" + std::to_string(n);
                rows.push_back({"identities", name, ok,
                                "|lhs-rhs|=" + abs(c.lhs - c.partial_rhs).to_string(3) +
                                    " tail=" + c.tail_bound.to_string(3)});
            }
        }
    }
}

void suite_sums(const EvalConfig& cfg, std::vector<CheckRow>& rows) {
    const long bits = cfg.precision_bits;
    for (const char* a : {"0.25", "0.5", "1"}) {
        const ShiftParameter sa(MpReal::parse(a, bits));
        bool ok = true;
        long count = 0;
        for (int k = 0; k <= 8; ++k) {
            for (long n = k + 2; n <= k + 6; ++n) {
                ok = ok && s_n_direct(n, MpComplex(MpReal::from(-k, bits)), sa, cfg).value.is_zero();
                ++count;
            }
        }
        rows.push_back({"sums", std::string("vanishing S_n(-k,a) n>=k+2 k<=8 a=") + a, ok,
                        std::to_string(count) + " sums exactly zero"});

        bool st_ok = true;
        for (long n = 1; n <= 12; ++n) {
            for (int k = 0; k <= 8; ++k) {
                const SnValue d = s_n_direct(n, MpComplex(MpReal::from(-k, bits)), sa, cfg);
                const MpReal st = stirling_generalized(n, k, sa);
                st_ok = st_ok && within(d.value, MpComplex(st), d.err);
            }
        }
        rows.push_back({"sums", std::string("stirling equals direct n<=12 k<=8 a=") + a, st_ok, "exact rationals"});
    }
    const std::vector<std::pair<MpComplex, const char*>> points = {
        {MpComplex::from(2.0, 0.0, bits), "0.5"},
        {MpComplex::from(0.5, 3.0, bits), "0.75"},
        {MpComplex::from(-1.5, 0.5, bits), "1"},
        {MpComplex::from(3.25, -2.0, bits), "0.3"}};
    for (const auto& [s, a] : points) {
        const ShiftParameter sa(MpReal::parse(a, bits));
        bool ok = true;
        MpReal worst(bits);
        for (long n : {1L, 2L, 5L, 20L, 60L, 150L}) {
            const SnValue d = s_n_direct(n, s, sa, cfg);
            const SnValue h = s_n_shifted(n, s, sa, cfg);
            ok = ok && within(d.value, h.value, d.err + h.err);
            worst = max(worst, abs(d.value - h.value));
        }
        rows.push_back({"sums", "direct equals shifted s=" + to_string(s, 6) + " a=" + a, ok,
                        "max|diff|=" + worst.to_string(3)});
    }
}

EvalResult settle(const std::function<EvalResult()>& run) {
    try {
        return run();
    } catch (const EvalAccuracyError& e) {
        return e.partial();
    }
}

void suite_agreement(const EvalConfig& cfg, std::vector<CheckRow>& rows) {
    const long bits = cfg.precision_bits;
    const std::vector<MpComplex> right = {MpComplex::from(2.0, 0.0, bits), MpComplex::from(3.0, 0.0, bits),
                                          MpComplex::from(1.5, 1.0, bits), MpComplex::from(4.0, 0.0, bits)};
    for (const MpComplex& s : right) {
        for (const char* a : {"0.3", "0.5", "1"}) {
            const ShiftParameter sa(MpReal::parse(a, bits));
            const EvalResult i = phi_integral(s, sa, cfg);
            const OracleValue d = dirichlet_oracle(s, sa, cfg);
            rows.push_back({"agreement", "integral vs dirichlet oracle s=" + to_string(s, 6) + " a=" + a,
                            within(*i.zeta, d.zeta, i.zeta_err + d.err), diff_detail(*i.zeta, d.zeta, i.zeta_err + d.err)});
        }
    }
    EvalConfig series_cfg = cfg;
    series_cfg.target_tol = MpReal::parse("1e-3", bits);
    series_cfg.max_terms = 10000;
    for (const MpComplex& s : {MpComplex::from(1.5, 0.0, bits), MpComplex::from(2.0, 0.0, bits),
                               MpComplex::from(0.5, 3.0, bits)}) {
        for (const char* a : {"0.75", "1"}) {
            const ShiftParameter sa(MpReal::parse(a, bits));
            const EvalResult sr = settle([&] { return phi_series(s, sa, series_cfg); });
            const EvalResult ir = phi_integral(s, sa, cfg);
            const MpReal bound = sr.err_estimate + ir.err_estimate;
            rows.push_back({"agreement", "series vs integral s=" + to_string(s, 6) + " a=" + a,
                            within(sr.phi, ir.phi, bound), diff_detail(sr.phi, ir.phi, bound)});
        }
    }
    for (int m : {0, 1, 2}) {
        for (const char* a : {"0.3", "1"}) {
            const ShiftParameter sa(MpReal::parse(a, bits));
            const ComplexPoint s(MpReal::from(-m, bits));
            const EvalResult c = phi_continued(s, sa, continuation_order(s), cfg);
            const MpComplex b(negative_integer_oracle(m, sa));
            rows.push_back({"agreement", "continued vs bernoulli oracle s=" + std::to_string(-m) + " a=" + a,
                            within(*c.zeta, b, c.zeta_err), diff_detail(*c.zeta, b, c.zeta_err)});
        }
    }
    for (const MpComplex& s : {MpComplex::from(2.0, 0.0, bits), MpComplex::from(1.5, 1.0, bits)}) {
        const ShiftParameter sa(MpReal::parse("0.3", bits));
        const EvalResult p = phi_integral(s, sa, cfg);
        const EvalResult q = phi_shifted_integral(s, sa, cfg);
        const MpComplex expect = (s - 1L) * complex_pow(sa.value(), -s);
        const MpReal bound = p.err_estimate + q.err_estimate;
        rows.push_back({"agreement", "integral minus shifted integral s=" + to_string(s, 6) + " a=0.3",
                        within(p.phi - q.phi, expect, bound), diff_detail(p.phi - q.phi, expect, bound)});
    }
}

Outcome cmd_check(const std::string& suite, int digits) {
    Outcome o;
    o.report.command = "check";
    o.report.inputs = {{"suite", suite}, {"digits", digits}};
    o.report.columns = {"suite", "property", "pass", "detail"};
    const EvalConfig cfg = EvalConfig::for_digits(digits);
    std::vector<CheckRow> rows;
    const bool all = suite == "all";
    if (all || suite == "identities") suite_identities(cfg, rows);
    if (all || suite == "sums") suite_sums(cfg, rows);
    if (all || suite == "agreement") suite_agreement(cfg, rows);
    for (const CheckRow& r : rows) {
        o.report.rows.push_back(
            json{{"suite", r.suite}, {"property", r.property}, {"pass", r.pass}, {"detail", r.detail}});
        if (!r.pass) {
            o.report.errors.push_back("failed: " + r.suite + ": " + r.property);
            o.code = kExitAccuracy;
        }
    }
    return o;
}

// ---- sn ----

struct SnArgs {
    std::string s, a;
    long n_max = 10;
    bool with_asymptotic = false;
};

Outcome cmd_sn(const SnArgs& args, int digits) {
    Outcome o;
    o.report.command = "sn";
    const EvalConfig cfg = EvalConfig::for_digits(digits);
    const long bits = cfg.precision_bits;
    const ComplexPoint s = parse_point(args.s, bits);
    const ShiftParameter a(MpReal::parse(args.a, bits + kInputGuardBits));
    a.require_half_open_unit("sn");
    if (args.n_max < 1) throw DomainError("sn: --n-max must be >= 1");
    o.report.inputs = {{"s", complex_cell(s, digits)},
                       {"a", real_cell(a.value(), digits)},
                       {"n_max", args.n_max},
                       {"digits", digits},
                       {"with_asymptotic", args.with_asymptotic}};
    o.report.columns = {"n", "source", "s_n", "s_n_err", "s_n_shifted", "s_n_shifted_err"};
    if (args.with_asymptotic) {
        o.report.columns.push_back("asymptotic");
        o.report.columns.push_back("ratio");
    }
    std::optional<SnTable> table;
    if (args.n_max > SnTable::kExactLimit) table.emplace(s, a.value(), args.n_max, cfg);
    const bool asymptotic_ok = s.re().sign() > 0;
    for (long n = 1; n <= args.n_max; ++n) {
        json row;
        row["n"] = n;
        MpComplex value;
        if (n <= SnTable::kExactLimit) {
            const SnValue d = s_n_direct(n, s, a, cfg);
            const SnValue h = s_n_shifted(n, s, a, cfg);
            value = d.value;
            row["source"] = "direct";
            row["s_n"] = complex_cell(d.value, digits);
            row["s_n_err"] = error_cell(d.err);
            row["s_n_shifted"] = complex_cell(h.value, digits);
            row["s_n_shifted_err"] = error_cell(h.err);
        } else {
            const SnTable::Entry& e = table->at(n);
            value = e.value;
            row["source"] = "integral";
            row["s_n"] = complex_cell(e.value, digits);
            row["s_n_err"] = error_cell(e.err);
            row["s_n_shifted"] = json();
            row["s_n_shifted_err"] = json();
        }
        if (args.with_asymptotic) {
            if (asymptotic_ok && n >= 3) {
                const MpComplex est = s_n_asymptotic(n, s, a);
                row["asymptotic"] = complex_cell(est, digits);
                row["ratio"] = real_cell(abs(value / est), 6);
            } else {
                row["asymptotic"] = json();
                row["ratio"] = json();
            }
        }
        o.report.rows.push_back(std::move(row));
    }
    return o;
}

void add_common(CLI::App* cmd, std::string& format, std::optional<int>& digits) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--digits", digits, "Requested decimal digits")->check(CLI::Range(1, 10000));
}

void emit(const Outcome& o, Format f, std::ostream& out, std::ostream& err) {
    out << o.report.render(f, kVersion);
    if (f != Format::Json) {
        for (const std::string& e : o.report.errors) err << "error: " << e << "\n";
    }
}

// CLI11 reads "-2" as a value only in some positions; bind values of the
// point-valued options explicitly.
std::vector<std::string> join_point_values(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& x = args[i];
        if ((x == "--s" || x == "--s0" || x == "--a") && i + 1 < args.size()) {
            out.push_back(x + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hurwitz zeta function: integral, series and Laurent coefficients", "hurwitz"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string format = "text";
    std::optional<int> digits;

    EvalArgs ev;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate zeta(s,a) and phi(s,a) = (s-1) zeta(s,a)");
    eval->add_option("--s", ev.s, "RE[,IM]")->required();
    eval->add_option("--a", ev.a, "Shift a")->required();
    eval->add_option("--method", ev.method, "Evaluation method")
        ->check(CLI::IsMember({"auto", "integral", "series", "continued", "shifted-integral", "shifted-series",
                               "oracle"}));
    eval->add_option("--k", ev.k, "Integration-by-parts order for --method continued")
        ->check(CLI::Range(0, kMaxDerivativeOrder));
    eval->add_option("--max-terms", ev.max_terms, "Series term budget")->check(CLI::Range(2L, 100000000L));
    eval->add_option("--tol", ev.tol, "Target relative tolerance (default 10^-digits)");
    add_common(eval, format, digits);

    LaurentArgs la;
    CLI::App* laurent = app.add_subcommand("laurent", "Taylor coefficients of (s-1) zeta(s,a) about s0");
    laurent->add_option("--s0", la.s0, "RE[,IM]")->required();
    laurent->add_option("--a", la.a, "Shift a")->required();
    laurent->add_option("--order", la.order, "Highest coefficient index")
        ->required()
        ->check(CLI::Range(0, kMaxLaurentOrder));
    laurent->add_flag("--berndt-normalization", la.berndt,
                      "Emit gamma~_n with zeta(s,a) = 1/(s-1) + sum (-1)^n gamma~_n (s-1)^n / n! (s0 = 1)");
    add_common(laurent, format, digits);

    std::string suite = "all";
    CLI::App* check = app.add_subcommand("check", "Run identity, sum and agreement checks");
    check->add_option("--suite", suite, "Suite")->check(CLI::IsMember({"identities", "sums", "agreement", "all"}));
    add_common(check, format, digits);

    SnArgs sa;
    CLI::App* sn = app.add_subcommand("sn", "Tabulate the alternating sums S_n(s,a)");
    sn->add_option("--n-max", sa.n_max, "Last n")->required()->check(CLI::Range(1L, 10000000L));
    sn->add_option("--s", sa.s, "RE[,IM]")->required();
    sn->add_option("--a", sa.a, "Shift a")->required();
    sn->add_flag("--with-asymptotic", sa.with_asymptotic, "Add the large-n estimate and |S_n/estimate|");
    add_common(sn, format, digits);

    std::vector<std::string> args = join_point_values(raw_args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Format fmt = parse_format(format);
    std::string command = "eval";
    for (CLI::App* sub : {eval, laurent, check, sn}) {
        if (sub->parsed()) command = sub->get_name();
    }
    try {
        const int d = digits ? *digits : default_digits();
        Outcome o;
        if (eval->parsed()) o = cmd_eval(ev, d);
        if (laurent->parsed()) o = cmd_laurent(la, d);
        if (check->parsed()) o = cmd_check(suite, d);
        if (sn->parsed()) o = cmd_sn(sa, d);
        emit(o, fmt, out, err);
        return o.code;
    } catch (const AccuracyError& e) {
        Outcome o;
        o.report.command = command;
        o.report.errors.push_back(e.what());
        o.code = kExitAccuracy;
        if (fmt == Format::Json) emit(o, fmt, out, err);
        else err << "error: " << e.what() << "\n";
        return o.code;
    } catch (const Error& e) {
        Outcome o;
        o.report.command = command;
        o.report.errors.push_back(e.what());
        if (fmt == Format::Json) emit(o, fmt, out, err);
        else err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace hurwitz::cli

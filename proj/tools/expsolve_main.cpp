// expsolve: command-line front end for the exponential-equation solvers,
// power-tower evaluators, exact Diophantine procedures, and the
// arithmetic-nature classifier.
//
// Exit codes: 0 success, 2 domain/numeric errors, 3 parse or usage errors,
// 1 anything unexpected.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "expsolve/expsolve.hpp"

using json = nlohmann::ordered_json;
using namespace expsolve;

namespace {

struct Options {
    long precision = 128;
    long digits = 6;
    std::string format = "text";
    bool assume_schanuel = false;

    Precision prec() const { return Precision(precision); }
    bool record() const { return format == "record"; }
    ClassifyOptions classify() const { return {assume_schanuel}; }
};

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stol(v);
    } catch (...) {
        return fallback;
    }
}

std::string env_str(const char* name, std::string fallback) {
    const char* v = std::getenv(name);
    return (v && *v) ? std::string(v) : fallback;
}

// One flat record per invocation; text mode prints "key: value" lines from
// the same strings, so the two formats cannot disagree on a numeric value.
struct Record {
    json j = json::object();
    std::vector<std::string> lines;

    void put(const std::string& key, const std::string& value) {
        j[key] = value;
        lines.push_back(key + ": " + value);
    }
    void put(const std::string& key, const char* value) { put(key, std::string(value)); }
    void put(const std::string& key, long value) {
        j[key] = value;
        lines.push_back(key + ": " + std::to_string(value));
    }
    void put(const std::string& key, bool value) {
        j[key] = value;
        lines.push_back(key + ": " + (value ? "true" : "false"));
    }
    void note(const std::string& line) { lines.push_back(line); }

    void emit(const Options& opt) const {
        if (opt.record()) {
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
        }
    }
};

std::string join_rules(const std::vector<std::string_view>& rules) {
    std::string out;
    for (const auto& r : rules) {
        if (!out.empty()) out += ",";
        out += std::string(r);
    }
    return out;
}

std::string witness_list(const std::vector<NumberExpr>& ws) {
    std::string out;
    for (const auto& w : ws) {
        if (!out.empty()) out += " ";
        out += to_string(w);
    }
    return out;
}

void put_verdict(Record& rec, const std::string& prefix, const Verdict& v) {
    rec.put(prefix + "_verdict", std::string(nature_name(v.nature)));
    rec.put(prefix + "_rules", join_rules(v.rules));
    if (v.exact) rec.put(prefix + "_exact", to_string(*v.exact));
    if (!v.witnesses.empty() && !v.exact) rec.put(prefix + "_witness", witness_list(v.witnesses));
}

void put_common(Record& rec, const std::string& command, const Options& opt) {
    rec.put("command", command);
    rec.put("precision_bits", opt.precision);
    rec.put("digits", opt.digits);
    rec.put("status", "ok");
}

std::string fmt(const Real& x, const Options& opt) { return to_string(x, opt.digits); }

// Plain decimal for plot tables (no ellipsis marker, gnuplot-parseable).
std::string fmt_plain(const Real& x, long digits) {
    char buf[128];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", static_cast<int>(digits), x.raw());
    return std::string(buf);
}

int cmd_solve_xx(const std::string& expr_text, const Options& opt) {
    Precision p = opt.prec();
    NumberExpr A = parse_expr(expr_text);
    Record rec;
    put_common(rec, "solve-xx", opt);
    rec.put("input", expr_text);
    rec.put("input_canonical", to_string(A));
    rec.put("input_value", fmt(eval(A, p.working()), opt));

    XxClassification cls = classify_xx_solutions(A, p);
    if (cls.domain) {
        rec.put("count", 0L);
        put_verdict(rec, "domain", *cls.domain);
        rec.note("no real solution: x^x >= e^(-1/e) = " +
                 to_string(const_at(Constant::e_to_minus_inv_e, p.bits), 7) + " for all x > 0");
        rec.emit(opt);
        return 0;
    }

    XxSolutions sol = solve_x_pow_x(A, p);
    rec.put("count", static_cast<long>(sol.count));
    if (sol.degenerate) rec.put("degenerate", true);
    auto verdict_for = [&](XxBranch b) -> const Verdict* {
        for (const auto& [br, v] : cls.roots)
            if (br == b) return &v;
        return nullptr;
    };
    if (sol.lower) {
        rec.put("root_lower", fmt(*sol.lower, opt));
        if (const Verdict* v = verdict_for(XxBranch::lower)) put_verdict(rec, "root_lower", *v);
    }
    if (sol.upper) {
        rec.put("root_upper", fmt(*sol.upper, opt));
        if (const Verdict* v = verdict_for(XxBranch::upper)) put_verdict(rec, "root_upper", *v);
    }
    rec.emit(opt);
    return 0;
}

int cmd_curve(const std::optional<std::string>& expr_text, const std::optional<std::string>& t_text,
              const Options& opt) {
    Precision p = opt.prec();
    Record rec;
    put_common(rec, "curve", opt);

    if (t_text) {
        Rational t = parse_rational(*t_text);
        rec.put("t", to_string(t));
        CurveAtT cat = classify_curve_at_t(t);
        Real tv = Real::of(t, p.working());
        Real x = x_of_t(tv, p), y = y_of_t(tv, p);
        rec.put("x_exact", to_string(cat.x_exact));
        rec.put("y_exact", to_string(cat.y_exact));
        rec.put("x", fmt(x, opt));
        rec.put("y", fmt(y, opt));
        rec.put("value", fmt(pow(with_prec(x, p.working()), with_prec(y, p.working())), opt));
        put_verdict(rec, "coordinates", cat.coordinates);
        put_verdict(rec, "value", cat.value);
        rec.emit(opt);
        return 0;
    }

    NumberExpr A = parse_expr(*expr_text);
    rec.put("input", *expr_text);
    rec.put("input_canonical", to_string(A));
    rec.put("input_value", fmt(eval(A, p.working()), opt));
    CurveSolution sol = solve_curve(A, p);  // throws with the e^e citation when A <= e^e
    rec.put("t", fmt(sol.t, opt));
    rec.put("x", fmt(sol.x, opt));
    rec.put("y", fmt(sol.y, opt));
    put_verdict(rec, "pair", classify_curve_pair(A, p, opt.classify()));
    rec.emit(opt);
    return 0;
}

void put_tower_value(Record& rec, const TowerValue& tv, const Options& opt) {
    const char* mode = tv.mode == TowerMode::converged_h      ? "converged"
                       : tv.mode == TowerMode::split_odd_even ? "split-odd-even"
                                                              : "out-of-domain";
    rec.put("mode", std::string(mode));
    rec.put("method", tv.method == TowerMethod::fixed_point ? "fixed-point" : "iteration");
    rec.put("iterations", tv.iterations);
    if (tv.boundary) rec.put("boundary", true);
    if (tv.h) rec.put("h", fmt(*tv.h, opt));
    if (tv.mode == TowerMode::split_odd_even) {
        rec.put("h_odd", fmt(*tv.h_odd, opt));
        rec.put("h_even", fmt(*tv.h_even, opt));
    }
}

int cmd_tower(const std::string& expr_text, bool odd_even, const std::string& method_name,
              bool inverse_power, const Options& opt) {
    Precision p = opt.prec();
    TowerMethod method =
        method_name == "iteration" ? TowerMethod::iteration : TowerMethod::fixed_point;
    Record rec;
    put_common(rec, "tower", opt);
    rec.put("input", expr_text);
    NumberExpr x = parse_expr(expr_text);
    rec.put("input_canonical", to_string(x));

    if (inverse_power) {
        // Input names B; the tower is evaluated at T = 1/B^B, where h(T) = 1/B.
        TowerInversePower tip = classify_tower_inverse_power(x, p);
        rec.put("tower_argument", fmt(tip.t_value, opt));
        put_verdict(rec, "tower_argument", tip.input_nature);
        TowerValue tv = tower_h(tip.t_value, p, method);
        put_tower_value(rec, tv, opt);
        put_verdict(rec, "h", tip.h_verdict);
        rec.emit(opt);
        return 0;
    }

    rec.put("input_value", fmt(eval(x, p.working()), opt));
    TowerValue tv = odd_even ? tower_odd_even(x, p, method) : tower_h(x, p, method);
    put_tower_value(rec, tv, opt);

    if (tv.mode == TowerMode::out_of_domain) {
        Verdict v{Nature::out_of_domain, {"tower-domain"}, {}, {}};
        put_verdict(rec, "h", v);
        rec.note("the tower converges only for e^-e = " +
                 to_string(const_at(Constant::e_to_minus_e, p.bits), 7) + " <= x <= e^(1/e) = " +
                 to_string(const_at(Constant::e_to_inv_e, p.bits), 7));
        rec.emit(opt);
        return 0;
    }

    if (tv.mode == TowerMode::split_odd_even) {
        if (auto* q = std::get_if<Rat>(&x)) {
            OddEvenVerdicts ov = classify_tower_odd_even(q->q, p, opt.classify());
            put_verdict(rec, "h_odd", ov.odd);
            put_verdict(rec, "h_even", ov.even);
            if (ov.pair) put_verdict(rec, "pair", *ov.pair);
        }
    } else {
        put_verdict(rec, "h", classify_tower(x, p));
    }
    rec.emit(opt);
    return 0;
}

int cmd_rational(const std::string& sub, const std::string& arg, const Options& opt) {
    Record rec;
    put_common(rec, "rational " + sub, opt);
    rec.put("input", arg);
    if (sub == "qq") {
        Rational Q = parse_rational(arg);
        QQNature n = qq_nature(Q);
        const char* tag = n.tag == QQTag::RationalValue  ? "rational"
                          : n.tag == QQTag::IrrationalReal ? "irrational-real"
                                                           : "non-real";
        rec.put("tag", std::string(tag));
        if (n.value) rec.put("value", to_string(*n.value));
    } else if (sub == "curvepoint") {
        Rational n = parse_rational(arg);
        if (!is_integer(n) || n < 1) throw domain_error("curvepoint: n must be a positive integer");
        auto [x, y] = curve_rational_point(num(n).convert_to<unsigned long>());
        rec.put("x", to_string(x));
        rec.put("y", to_string(y));
    } else {  // towerfix
        Rational Q = parse_rational(arg);
        std::vector<Rational> sols = tower_fix_rational_solutions(Q);
        rec.put("count", static_cast<long>(sols.size()));
        std::string joined;
        for (const auto& s : sols) {
            if (!joined.empty()) joined += " ";
            joined += to_string(s);
        }
        rec.put("solutions", joined);
    }
    rec.emit(opt);
    return 0;
}

int cmd_classify(const std::string& expr_text, bool inverse_power, const Options& opt) {
    Precision p = opt.prec();
    Record rec;
    put_common(rec, "classify", opt);
    rec.put("input", expr_text);
    NumberExpr x = parse_expr(expr_text);
    rec.put("input_canonical", to_string(x));

    Verdict v;
    if (inverse_power) {
        TowerInversePower tip = classify_tower_inverse_power(x, p);
        rec.put("tower_argument", fmt(tip.t_value, opt));
        rec.put("value", fmt(g_inverse(tip.t_value, GBranch::lower, p), opt));
        v = tip.h_verdict;
    } else {
        rec.put("value", fmt(eval(x, p.working()), opt));
        v = self_nature(x);
    }
    put_verdict(rec, "nature", v);
    if (!opt.record()) {
        rec.note("citations:");
        for (const auto& id : v.rules)
            if (auto info = find_rule(id)) rec.note("  " + std::string(id) + ": " + std::string(info->statement));
    }
    rec.emit(opt);
    return 0;
}

int cmd_plotdata(int figure, long resolution, const std::optional<std::string>& min_s,
                 const std::optional<std::string>& max_s, const Options& opt) {
    Precision p = opt.prec();
    const long w = p.working();
    const long dg = std::max<long>(opt.digits, 6);
    auto val = [&](const Real& x) { return fmt_plain(x, dg); };

    auto range = [&](double lo_default, double hi_default) {
        Real lo = min_s ? Real::parse(*min_s, w) : Real::parse(std::to_string(lo_default), w);
        Real hi = max_s ? Real::parse(*max_s, w) : Real::parse(std::to_string(hi_default), w);
        if (!(lo < hi)) throw domain_error("plotdata: need min < max");
        return std::pair{lo, hi};
    };
    auto sample = [&](const Real& lo, const Real& hi, long i) {
        return lo + (hi - lo) * Real::of(i, w) / (resolution - 1);
    };

    std::vector<std::string> header;
    std::vector<std::string> rows;
    switch (figure) {
        case 1: {  // y = x^x
            auto [lo, hi] = range(0.02, 1.6);
            header = {"x", "x^x"};
            for (long i = 0; i < resolution; ++i) {
                Real x = sample(lo, hi, i);
                rows.push_back(val(x) + " " + val(pow(x, x)));
            }
            break;
        }
        case 2: {  // the nontrivial branch of x^y = y^x, both orientations
            auto [tlo, thi] = range(0.02, 50.0);
            header = {"x", "y"};
            std::vector<std::pair<std::string, std::string>> branch;
            for (long i = 0; i < resolution; ++i) {
                Real t = sample(tlo, thi, i);
                branch.emplace_back(val(x_of_t(t, p)), val(y_of_t(t, p)));
            }
            for (auto it = branch.rbegin(); it != branch.rend(); ++it)
                rows.push_back(it->first + " " + it->second);
            rows.push_back("");
            for (const auto& [x, y] : branch) rows.push_back(y + " " + x);
            break;
        }
        case 3: {  // x(t) and y(t)
            auto [tlo, thi] = range(0.05, 8.0);
            header = {"t", "x(t)", "y(t)"};
            for (long i = 0; i < resolution; ++i) {
                Real t = sample(tlo, thi, i);
                rows.push_back(val(t) + " " + val(x_of_t(t, p)) + " " + val(y_of_t(t, p)));
            }
            break;
        }
        case 4: {  // z(t) = x(t)^y(t), decreasing to e^e
            auto [tlo, thi] = range(0.05, 8.0);
            header = {"t", "z(t)"};
            for (long i = 0; i < resolution; ++i) {
                Real t = with_prec(sample(tlo, thi, i), w);
                Real z = exp(y_of_t(t, p) * t * log1p(Real::of(1L, w) / t));
                rows.push_back(val(t) + " " + val(z));
            }
            break;
        }
        case 5: {  // v = g(u) = u^(1/u), maximum at u = e
            auto [lo, hi] = range(0.2, 8.0);
            header = {"u", "g(u)"};
            for (long i = 0; i < resolution; ++i) {
                Real u = sample(lo, hi, i);
                rows.push_back(val(u) + " " + val(g(u, p)));
            }
            break;
        }
        case 6: {  // y = h(x) on the convergence interval
            Real dlo = const_at(Constant::e_to_minus_e, w);
            Real dhi = const_at(Constant::e_to_inv_e, w);
            Real lo = min_s ? Real::parse(*min_s, w) : dlo;
            Real hi = max_s ? Real::parse(*max_s, w) : dhi;
            if (lo < dlo) lo = dlo;
            if (hi > dhi) hi = dhi;
            header = {"x", "h(x)"};
            for (long i = 0; i < resolution; ++i) {
                Real x = sample(lo, hi, i);
                TowerValue tv = tower_h(x, p);
                rows.push_back(val(x) + " " + val(*tv.h));
            }
            break;
        }
        default:
            throw domain_error("plotdata: figure must be 1..6");
    }

    std::string head = "#";
    for (const auto& h : header) head += " " + h;
    if (opt.record()) {
        json j = json::object();
        j["command"] = "plotdata";
        j["figure"] = figure;
        j["resolution"] = resolution;
        j["columns"] = head.substr(2);
        j["rows"] = static_cast<long>(rows.size());
        std::string table = head;
        for (const auto& r : rows) table += "\n" + r;
        j["table"] = table;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << head << "\n";
        for (const auto& r : rows) std::cout << r << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    opt.precision = env_long("EXPSOLVE_PRECISION", 128);
    opt.digits = env_long("EXPSOLVE_DIGITS", 6);
    opt.format = env_str("EXPSOLVE_FORMAT", "text");
    opt.assume_schanuel = env_long("EXPSOLVE_ASSUME_SCHANUEL", 0) != 0;

    CLI::App app{"exponential-equation solvers, power towers, and arithmetic-nature verdicts"};
    app.fallthrough();  // global flags may follow the subcommand
    app.require_subcommand(1);
    app.add_option("--precision", opt.precision, "working precision in bits (>= 32)")
        ->check(CLI::Range(32L, 65536L));
    app.add_option("--digits", opt.digits, "printed significant digits")->check(CLI::Range(1L, 65536L));
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "record"}));
    app.add_flag("--assume-schanuel", opt.assume_schanuel,
                 "conditionally strengthen pair verdicts under Schanuel's conjecture");

    std::string expr_text, t_text, sub, arg, method = "fixed-point";
    bool odd_even = false, inverse_power = false;
    int figure = 0;
    long resolution = 200;
    std::optional<std::string> min_s, max_s;

    CLI::App* c_xx = app.add_subcommand("solve-xx", "solve x^x = A and classify the roots");
    c_xx->add_option("expr", expr_text, "A as an expression")->required();

    CLI::App* c_curve = app.add_subcommand("curve", "solve x^y = y^x = A with 1 < x < e < y");
    c_curve->add_option("expr", expr_text, "A as an expression");
    CLI::Option* t_opt = c_curve->add_option("--t", t_text, "evaluate the exact point at rational t");

    CLI::App* c_tower = app.add_subcommand("tower", "evaluate the infinite power tower at x");
    c_tower->add_option("expr", expr_text, "x as an expression")->required();
    c_tower->add_flag("--odd-even", odd_even, "report the odd/even tower pair");
    c_tower->add_option("--method", method, "fixed-point (default) or iteration")
        ->check(CLI::IsMember({"fixed-point", "iteration"}));
    c_tower->add_flag("--inverse-power", inverse_power,
                      "treat the input as B and evaluate the tower at 1/B^B");

    CLI::App* c_rat = app.add_subcommand("rational", "exact Diophantine procedures");
    c_rat->add_option("sub", sub, "qq | curvepoint | towerfix")
        ->required()
        ->check(CLI::IsMember({"qq", "curvepoint", "towerfix"}));
    c_rat->add_option("arg", arg, "rational argument")->required();

    CLI::App* c_cls = app.add_subcommand("classify", "arithmetic nature of an expression");
    c_cls->add_option("expr", expr_text, "expression")->required();
    c_cls->add_flag("--inverse-power", inverse_power,
                    "classify the tower value at 1/B^B for the given B");

    CLI::App* c_plot = app.add_subcommand("plotdata", "emit gnuplot-ready samples of the curves");
    c_plot->add_option("figure", figure, "1 x^x | 2 x^y=y^x | 3 x(t),y(t) | 4 z(t) | 5 g | 6 h")
        ->required()
        ->check(CLI::Range(1, 6));
    c_plot->add_option("--resolution", resolution, "number of samples")->check(CLI::Range(2L, 100000L));
    c_plot->add_option("--min", [&min_s](const std::vector<std::string>& v) { min_s = v[0]; return true; },
                       "range lower end");
    c_plot->add_option("--max", [&max_s](const std::vector<std::string>& v) { max_s = v[0]; return true; },
                       "range upper end");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    // --digits is bounded by what the precision can honestly show.
    long digit_cap = static_cast<long>(static_cast<double>(opt.precision) * 0.30103);
    if (opt.digits > digit_cap) opt.digits = digit_cap;

    auto fail = [&](const std::string& kind, const std::string& msg, int code) {
        if (opt.record()) {
            json j = json::object();
            j["command"] = app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name();
            j["status"] = kind;
            j["error"] = msg;
            std::cout << j.dump() << "\n";
        }
        std::cerr << "error: " << msg << "\n";
        return code;
    };

    try {
        if (c_xx->parsed()) return cmd_solve_xx(expr_text, opt);
        if (c_curve->parsed()) {
            bool has_expr = c_curve->count("expr") > 0;
            bool has_t = t_opt->count() > 0;
            if (has_expr == has_t)
                throw parse_error("curve: give exactly one of an expression or --t");
            return cmd_curve(has_expr ? std::optional(expr_text) : std::nullopt,
                             has_t ? std::optional(t_text) : std::nullopt, opt);
        }
        if (c_tower->parsed()) return cmd_tower(expr_text, odd_even, method, inverse_power, opt);
        if (c_rat->parsed()) return cmd_rational(sub, arg, opt);
        if (c_cls->parsed()) return cmd_classify(expr_text, inverse_power, opt);
        if (c_plot->parsed()) return cmd_plotdata(figure, resolution, min_s, max_s, opt);
        return 3;
    } catch (const parse_error& e) {
        return fail("parse-error", e.what(), 3);
    } catch (const domain_error& e) {
        return fail("domain-error", e.what(), 2);
    } catch (const numeric_error& e) {
        return fail("numeric-error", e.what(), 2);
    } catch (const std::exception& e) {
        return fail("internal-error", e.what(), 1);
    }
}

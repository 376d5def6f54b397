#include "cli.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cdalg/io.hpp"
#include "cdalg/kernels.hpp"
#include "cdalg/poly.hpp"
#include "cdalg/structure.hpp"
#include "cdalg/suite.hpp"
#include "cdalg/transcendental.hpp"

namespace cd::cli {

namespace {

enum class Format { json, csv, plain };

struct Config {
    int level = 2;
    std::uint64_t seed = 1;
    int trials = 200;
    Format format = Format::json;
    double tol_angular = kDefaultAngularTol;
    double tol_rank = 1e-10;
    double tol_residual = 1e-8;
    double tol_search = 0.0;
};

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::NoConvergence:
        case ErrorKind::AmbiguousWinding:
            return kNumeric;
        case ErrorKind::ZeroElement:
        case ErrorKind::NoPrincipalDirection:
        case ErrorKind::NotInSlice:
        case ErrorKind::OffSlice:
        case ErrorKind::NotPure:
        case ErrorKind::Overflow:
        case ErrorKind::OriginOnPath:
        case ErrorKind::OpenCurve:
            return kDomain;
        default:
            return kUsage;
    }
}

std::string join(std::span<const double> v, const char* sep, std::string (*fmt)(double)) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += fmt(v[i]);
    }
    return s;
}

std::string render_element(const Element& x, Format f) {
    switch (f) {
        case Format::json: return io::element_to_json(x);
        case Format::csv: return join(x.coeffs(), ",", io::format_exact);
        case Format::plain: return join(x.coeffs(), " ", io::format_short);
    }
    return {};
}

std::string render_number(double v, Format f) {
    return f == Format::plain ? io::format_short(v) : io::format_exact(v);
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

Element parse_elem_arg(const std::string& arg) { return io::parse_element(io::read_argument(arg)); }

// An explicit --level must agree with the level carried by the JSON input.
void check_level(std::optional<int> want, int got) {
    if (want && *want != got)
        throw Error(ErrorKind::LevelMismatch,
                    "--level " + std::to_string(*want) + " but input has level " + std::to_string(got));
}

// "e<i>" shorthand or a JSON element.
Element parse_direction(const std::string& arg, int level) {
    if (arg.size() >= 2 && arg[0] == 'e' && std::isdigit(static_cast<unsigned char>(arg[1]))) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(arg.substr(1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad basis shorthand " + arg);
        }
        return Element::basis(level, idx);
    }
    return parse_elem_arg(arg);
}

void print_checks(std::ostream& out, const std::vector<suite::CheckResult>& checks, Format f, bool json_array) {
    if (f == Format::json) {
        if (!json_array) return;
        out << "[";
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const auto& c = checks[i];
            if (i) out << ",";
            out << "{\"name\":" << json_string(c.name) << ",\"passed\":" << json_bool(c.passed)
                << ",\"max_residual\":" << io::format_exact(c.max_residual)
                << ",\"tolerance\":" << io::format_exact(c.tolerance) << "}";
        }
        out << "]";
        return;
    }
    for (const auto& c : checks) {
        if (f == Format::csv)
            out << c.name << "," << (c.passed ? "pass" : "FAIL") << "," << io::format_exact(c.max_residual) << ","
                << io::format_exact(c.tolerance) << "\n";
        else
            out << (c.passed ? "PASS " : "FAIL ") << c.name << "  max_residual=" << io::format_short(c.max_residual)
                << "  tol=" << io::format_short(c.tolerance) << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cayley-Dickson algebra toolkit: arithmetic, exp/log/roots, structure probes, root finding"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};
    auto* level_opt = app.add_option("--level", cfg.level, "Algebra level n (A_n has 2^n coefficients)")
                          ->check(CLI::Range(0, max_level()));
    app.add_option("--seed", cfg.seed, "Seed for randomized commands");
    app.add_option("--trials", cfg.trials, "Trials per randomized check")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--tol.angular", cfg.tol_angular, "C-dependence angle tolerance (radians)")->check(CLI::PositiveNumber);
    app.add_option("--tol.rank", cfg.tol_rank, "Rank/nullspace pivot tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tol.residual", cfg.tol_residual, "Complex root residual factor")->check(CLI::PositiveNumber);
    app.add_option("--tol.search", cfg.tol_search, "Root-search residual tolerance (0: 1e-8*scale)")
        ->check(CLI::NonNegativeNumber);

    // table
    auto* table = app.add_subcommand("table", "Multiplication table of basis elements (level <= 6)");

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate an arithmetic operation or a complex polynomial");
    std::string op = "mul", ex, ey, ez, epoly;
    int ek = 2;
    eval->add_option("--op", op,
                     "mul|add|sub|conj|inv|norm|inner|pow|commutator|associator|cdep|centralizer|poly")
        ->check(CLI::IsMember({"mul", "add", "sub", "conj", "inv", "norm", "inner", "pow", "commutator",
                               "associator", "cdep", "centralizer", "poly"}));
    eval->add_option("--x,--elem", ex, "First operand (JSON element or @file)");
    eval->add_option("--y", ey, "Second operand");
    eval->add_option("--z", ez, "Third operand");
    eval->add_option("--k", ek, "Exponent for pow");
    eval->add_option("--poly", epoly, "Complex polynomial JSON (op=poly)");

    // exp
    auto* expc = app.add_subcommand("exp", "Exponential map");
    std::string exp_elem;
    expc->add_option("--elem", exp_elem, "Element JSON or @file")->required();

    // log
    auto* logc = app.add_subcommand("log", "Principal logarithm");
    std::string log_elem, log_dir;
    logc->add_option("--elem", log_elem, "Element JSON or @file")->required();
    logc->add_option("--dir,--fallback", log_dir, "Fallback direction for negative reals (e<i> or JSON)");

    // root
    auto* rootc = app.add_subcommand("root", "Principal k-th root, or all roots of a complex polynomial");
    std::string root_elem, root_dir, root_poly;
    int root_k = 2;
    bool root_literal = false;
    rootc->add_option("--elem", root_elem, "Element JSON or @file");
    rootc->add_option("--k", root_k, "Root order")->check(CLI::PositiveNumber);
    rootc->add_option("--dir,--fallback", root_dir, "Fallback direction for negative reals");
    rootc->add_flag("--literal", root_literal, "Use |x|^{1/k} exp(a/k) with a = Im(x) instead of the polar root");
    rootc->add_option("--poly", root_poly, "Complex polynomial JSON or @file; prints all roots");

    // zerodiv
    auto* zd = app.add_subcommand("zerodiv", "Search two-term basis elements for a zero-divisor pair");

    // props
    auto* props = app.add_subcommand("props", "Law profile plus the invariant suite at one level");

    // winding
    auto* wind = app.add_subcommand("winding", "Winding number of x -> x^k on a complex slice");
    int wk = 1, wsamples = 1024;
    std::string wdir = "e1";
    wind->add_option("--k", wk, "Power (nonzero)")->required();
    wind->add_option("--dir,--direction", wdir, "Slice direction: e<i> or JSON element");
    wind->add_option("--samples", wsamples, "Samples on the unit circle (>= 64)");

    // rootsearch
    auto* rs = app.add_subcommand("rootsearch", "Multistart root search for a generalized polynomial");
    std::string rs_fixture, rs_poly, rs_probe;
    int rs_iters = 60, rs_starts = 0;
    rs->add_option("--fixture", rs_fixture, "Generalized polynomial JSON (term list) or @file");
    rs->add_option("--poly", rs_poly, "Complex polynomial JSON; searched through its generalized form");
    rs->add_option("--probe-commutator", rs_probe, "Negative control x -> [a,x] + e0 for direction a");
    rs->add_option("--budget", rs_iters, "Gauss-Newton iterations per start")->check(CLI::PositiveNumber);
    rs->add_option("--starts", rs_starts, "Starts per radius (0: 8*2^n)")->check(CLI::NonNegativeNumber);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const Format f = cfg.format;
    const std::optional<int> explicit_level =
        level_opt->count() > 0 ? std::optional<int>(cfg.level) : std::nullopt;
    auto elem = [&](const std::string& arg) {
        Element x = parse_elem_arg(arg);
        check_level(explicit_level, x.level());
        return x;
    };
    try {
        if (table->parsed()) {
            if (cfg.level > 6) {
                err << "error: table rendering supports level <= 6\n";
                return kUsage;
            }
            const std::size_t d = std::size_t{1} << cfg.level;
            auto cell = [&](std::size_t i, std::size_t j) {
                const int s = kernels::basis_sign(cfg.level, i, j);
                return std::string(s < 0 ? "-" : "") + "e" + std::to_string(i ^ j);
            };
            if (f == Format::json) {
                out << "{\"level\":" << cfg.level << ",\"table\":[";
                for (std::size_t i = 0; i < d; ++i) {
                    out << (i ? ",[" : "[");
                    for (std::size_t j = 0; j < d; ++j) out << (j ? "," : "") << json_string(cell(i, j));
                    out << "]";
                }
                out << "]}\n";
            } else {
                const char* sep = f == Format::csv ? "," : " ";
                for (std::size_t i = 0; i < d; ++i) {
                    for (std::size_t j = 0; j < d; ++j) {
                        std::string c = cell(i, j);
                        if (f == Format::plain) c.insert(0, 5 - std::min<std::size_t>(5, c.size()), ' ');
                        out << (j ? sep : "") << c;
                    }
                    out << "\n";
                }
            }
            return kOk;
        }

        if (eval->parsed()) {
            if (op == "poly") {
                if (epoly.empty() || ex.empty()) throw Error(ErrorKind::InvalidArgument, "op=poly needs --poly and --x");
                const auto p = io::parse_complex_polynomial(io::read_argument(epoly));
                out << render_element(poly::eval_complex_poly(p, elem(ex)), f) << "\n";
                return kOk;
            }
            if (ex.empty()) throw Error(ErrorKind::InvalidArgument, "missing --x");
            const Element x = elem(ex);
            auto need = [&](const std::string& s, const char* name) {
                if (s.empty()) throw Error(ErrorKind::InvalidArgument, std::string("missing ") + name);
                return elem(s);
            };
            if (op == "norm") {
                out << (f == Format::json ? "{\"value\":" + io::format_exact(norm(x)) + "}" : render_number(norm(x), f)) << "\n";
                return kOk;
            }
            if (op == "inner") {
                const double v = inner(x, need(ey, "--y"));
                out << (f == Format::json ? "{\"value\":" + io::format_exact(v) + "}" : render_number(v, f)) << "\n";
                return kOk;
            }
            if (op == "cdep") {
                const auto rep = is_c_dependent(x, need(ey, "--y"), cfg.tol_angular);
                if (f == Format::json)
                    out << "{\"dependent\":" << json_bool(rep.dependent)
                        << ",\"margin\":" << io::format_exact(rep.margin) << "}\n";
                else
                    out << (rep.dependent ? "true" : "false") << (f == Format::csv ? "," : " ")
                        << render_number(rep.margin, f) << "\n";
                return kOk;
            }
            if (op == "centralizer") {
                const auto rep = centralizer_report(x, cfg.tol_rank);
                if (f == Format::json)
                    out << "{\"level\":" << rep.level << ",\"centralizer_dim\":" << rep.centralizer_dim
                        << ",\"kernel_dim\":" << rep.kernel_dim
                        << ",\"decomposition_ok\":" << json_bool(rep.decomposition_ok) << "}\n";
                else
                    out << rep.centralizer_dim << (f == Format::csv ? "," : " ") << rep.kernel_dim << "\n";
                return kOk;
            }
            Element r;
            if (op == "mul") r = x * need(ey, "--y");
            else if (op == "add") r = x + need(ey, "--y");
            else if (op == "sub") r = x - need(ey, "--y");
            else if (op == "conj") r = conjugate(x);
            else if (op == "inv") r = inverse(x);
            else if (op == "pow") r = power_int(x, ek);
            else if (op == "commutator") r = commutator(x, need(ey, "--y"));
            else r = associator(x, need(ey, "--y"), need(ez, "--z"));
            out << render_element(r, f) << "\n";
            return kOk;
        }

        if (expc->parsed()) {
            out << render_element(cd::exp(elem(exp_elem)), f) << "\n";
            return kOk;
        }

        if (logc->parsed()) {
            const Element x = elem(log_elem);
            std::optional<Element> fb;
            if (!log_dir.empty()) fb = parse_direction(log_dir, x.level());
            out << render_element(log_principal(x, fb), f) << "\n";
            return kOk;
        }

        if (rootc->parsed()) {
            if (!root_poly.empty()) {
                const auto p = io::parse_complex_polynomial(io::read_argument(root_poly));
                poly::RootOptions ro;
                ro.residual_factor = cfg.tol_residual;
                const auto roots = poly::roots_complex_poly(p, ro);
                if (f == Format::json) {
                    out << "{\"degree\":" << p.degree() << ",\"roots\":[";
                    for (std::size_t i = 0; i < roots.size(); ++i)
                        out << (i ? "," : "") << io::element_to_json(roots[i]);
                    out << "]}\n";
                } else {
                    for (const auto& r : roots) out << render_element(r, f) << "\n";
                }
                return kOk;
            }
            if (root_elem.empty()) throw Error(ErrorKind::InvalidArgument, "root needs --elem or --poly");
            const Element x = elem(root_elem);
            if (root_literal) {
                out << render_element(k_root_literal(x, root_k), f) << "\n";
                return kOk;
            }
            std::optional<Element> fb;
            if (!root_dir.empty()) fb = parse_direction(root_dir, x.level());
            out << render_element(k_root(x, root_k, fb), f) << "\n";
            return kOk;
        }

        if (zd->parsed()) {
            const auto pair = find_zero_divisor_pair(cfg.level);
            if (f == Format::json) {
                out << "{\"level\":" << cfg.level << ",\"found\":" << json_bool(pair.has_value());
                if (pair)
                    out << ",\"u\":" << io::element_to_json(pair->u) << ",\"v\":" << io::element_to_json(pair->v)
                        << ",\"product_norm\":" << io::format_exact(pair->product_norm);
                out << "}\n";
            } else if (!pair) {
                out << "not found\n";
            } else {
                const char* sep = f == Format::csv ? "," : ": ";
                out << "u" << sep << render_element(pair->u, f) << "\n"
                    << "v" << sep << render_element(pair->v, f) << "\n"
                    << "product_norm" << sep << render_number(pair->product_norm, f) << "\n";
            }
            return kOk;
        }

        if (props->parsed()) {
            const LawProfile prof = law_profile(cfg.level, cfg.trials, cfg.seed);
            std::vector<suite::CheckResult> checks = suite::classify(prof);
            const auto inv = suite::run_invariants(cfg.level, cfg.trials, cfg.seed);
            checks.insert(checks.end(), inv.begin(), inv.end());
            bool all = true;
            for (const auto& c : checks) all = all && c.passed;
            if (f == Format::json) {
                out << "{\"level\":" << cfg.level << ",\"trials\":" << cfg.trials << ",\"seed\":" << cfg.seed
                    << ",\"profile\":[";
                for (std::size_t i = 0; i < prof.laws.size(); ++i) {
                    const auto& l = prof.laws[i];
                    out << (i ? "," : "") << "{\"law\":" << json_string(l.name)
                        << ",\"verdict\":" << json_string(to_string(l.verdict))
                        << ",\"max_residual\":" << io::format_exact(l.max_residual) << "}";
                }
                out << "],\"checks\":";
                print_checks(out, checks, f, true);
                out << ",\"passed\":" << json_bool(all) << "}\n";
            } else {
                for (const auto& l : prof.laws) {
                    if (f == Format::csv)
                        out << "law," << l.name << "," << to_string(l.verdict) << "," << io::format_exact(l.max_residual) << "\n";
                    else
                        out << l.name << ": " << to_string(l.verdict) << " (max residual " << io::format_short(l.max_residual) << ")\n";
                }
                print_checks(out, checks, f, false);
                if (f == Format::plain) out << (all ? "all checks passed\n" : "some checks FAILED\n");
            }
            return all ? kOk : kPropertyFailure;
        }

        if (wind->parsed()) {
            const auto slice = poly::ComplexSlice::from_direction(parse_direction(wdir, cfg.level));
            const int w = poly::power_map_winding(wk, slice, wsamples);
            if (f == Format::json)
                out << "{\"level\":" << slice.level() << ",\"k\":" << wk << ",\"samples\":" << wsamples
                    << ",\"winding\":" << w << "}\n";
            else if (f == Format::csv)
                out << wk << "," << w << "\n";
            else
                out << w << "\n";
            return kOk;
        }

        if (rs->parsed()) {
            poly::SearchOptions so;
            so.seed = cfg.seed;
            so.max_iterations = rs_iters;
            so.starts_per_radius = rs_starts;
            so.tolerance = cfg.tol_search;
            poly::SearchResult res;
            int level = 0;
            if (!rs_fixture.empty()) {
                const auto p = io::parse_generalized_polynomial(io::read_argument(rs_fixture));
                level = p.level;
                res = poly::root_search_generalized(p, so);
            } else if (!rs_poly.empty()) {
                const auto p = poly::to_generalized(io::parse_complex_polynomial(io::read_argument(rs_poly)));
                level = p.level;
                res = poly::root_search_generalized(p, so);
            } else if (!rs_probe.empty()) {
                const Element a = parse_direction(rs_probe, cfg.level);
                level = a.level();
                res = poly::root_search(poly::commutator_probe(a), level, 1.0, so);
            } else {
                throw Error(ErrorKind::InvalidArgument, "rootsearch needs --fixture, --poly or --probe-commutator");
            }
            if (f == Format::json) {
                out << "{\"level\":" << level << ",\"found\":" << json_bool(res.found);
                if (res.found) out << ",\"root\":" << io::element_to_json(res.root);
                out << ",\"residual\":" << io::format_exact(res.residual)
                    << ",\"best_residual\":" << io::format_exact(res.best_residual)
                    << ",\"starts_used\":" << res.starts_used << ",\"iterations\":" << res.iterations << "}\n";
            } else {
                const char* sep = f == Format::csv ? "," : ": ";
                out << "found" << sep << (res.found ? "true" : "false") << "\n";
                if (res.found) out << "root" << sep << render_element(res.root, f) << "\n";
                out << "best_residual" << sep << render_number(res.best_residual, f) << "\n";
            }
            return res.found ? kOk : kNumeric;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return kUsage;
}

}  // namespace cd::cli

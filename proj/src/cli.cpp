// Command line front end. Subcommands map one to one onto the library
// entry points; every object crossing the process boundary uses the JSON
// schemas from serialize.hpp. Route selectors that compute an object twice
// exit 4 with a counterexample dump when the routes disagree, since that
// means a library invariant is broken, not that the input was bad.

#include "keypoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "keypoly/serialize.hpp"
#include "keypoly/verify.hpp"

namespace keypoly::cli {

namespace {

// Argument level problems (exit 2), distinct from validation of parsed
// objects (exit 3).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& name) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw usage_error("cannot parse '" + item + "' in " + name +
                              " as an integer");
        }
    }
    if (out.empty()) throw usage_error(name + " must list at least one integer");
    return out;
}

void emit_error(std::ostream& err, const std::string& type, const std::string& message) {
    json j;
    j["error"] = type;
    j["message"] = message;
    err << j.dump() << "\n";
}

// Options shared by the subcommands that build a shape and permutations from
// flags rather than reading a tableau.
struct ShapeArgs {
    std::string lambda_text;
    std::string zeta_text;
    std::string pi_text;
    std::string sigma_text;
    int n = 0;
};

void add_shape_options(CLI::App* cmd, ShapeArgs& sa, bool with_sigma) {
    auto* lam = cmd->add_option("--lambda", sa.lambda_text,
                                "shape as comma separated parts, e.g. 4,4,3,3,2,1,1");
    auto* zet = cmd->add_option("--zeta", sa.zeta_text,
                                "shape as comma separated column lengths, e.g. 7,5,4,2");
    lam->excludes(zet);
    zet->excludes(lam);
    cmd->add_option("--n", sa.n, "ambient rank; inferred from --pi or the shape if omitted")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--pi", sa.pi_text, "permutation as comma separated values");
    if (with_sigma)
        cmd->add_option("--sigma", sa.sigma_text,
                        "left bound permutation as comma separated values");
}

int resolve_rank(const ShapeArgs& sa) {
    if (sa.n > 0) return sa.n;
    if (!sa.pi_text.empty())
        return static_cast<int>(parse_int_list(sa.pi_text, "--pi").size());
    if (!sa.lambda_text.empty())
        return static_cast<int>(parse_int_list(sa.lambda_text, "--lambda").size());
    if (!sa.zeta_text.empty())
        return parse_int_list(sa.zeta_text, "--zeta").front();
    throw usage_error("cannot infer the rank: give --n, --pi, --lambda or --zeta");
}

Partition resolve_shape(const ShapeArgs& sa, int n) {
    if (!sa.lambda_text.empty())
        return Partition(n, parse_int_list(sa.lambda_text, "--lambda"));
    if (!sa.zeta_text.empty())
        return from_column_lengths(n, parse_int_list(sa.zeta_text, "--zeta"));
    throw usage_error("a shape is required: give --lambda or --zeta");
}

Permutation resolve_perm(const std::string& text, const char* name, int n) {
    if (text.empty()) throw usage_error(std::string(name) + " is required");
    const Permutation p(parse_int_list(text, name));
    if (p.n() != n)
        throw validation_error(std::string(name) + " has rank " + std::to_string(p.n()) +
                               " but the computation uses rank " + std::to_string(n));
    return p;
}

Tableau read_tableau(const std::string& path, std::istream& in) {
    json j;
    if (path.empty() || path == "-") {
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw validation_error(std::string("malformed JSON input: ") + e.what());
        }
    } else {
        std::ifstream file(path);
        if (!file) throw validation_error("cannot open " + path);
        try {
            j = json::parse(file);
        } catch (const json::exception& e) {
            throw validation_error("malformed JSON in " + path + ": " + e.what());
        }
    }
    return tableau_from_json(j);
}

void print_tableau(std::ostream& out, const Tableau& t, const std::string& format) {
    if (format == "json")
        out << to_json(t).dump() << "\n";
    else
        out << render(t);
}

void print_poly(std::ostream& out, const Polynomial& p, const std::string& format) {
    if (format == "json")
        out << to_json(p).dump() << "\n";
    else
        out << p.to_text() << "\n";
}

// Counterexample dump for route disagreements: writes the schema
// {context, lambda, n, pi, sigma?, tableau?, monomial?, expected, actual}
// to err and returns the bug sentinel exit code.
struct Counterexample {
    std::string context;
    Partition lambda;
    Permutation pi;
    std::optional<Permutation> sigma;
    std::optional<Tableau> tableau;
    std::optional<std::vector<int>> monomial;
    json expected;
    json actual;

    Counterexample(std::string ctx, Partition l, Permutation p)
        : context(std::move(ctx)), lambda(std::move(l)), pi(std::move(p)) {}
};

int dump_counterexample(std::ostream& err, const Counterexample& ce) {
    json j;
    j["context"] = ce.context;
    j["lambda"] = to_json(ce.lambda);
    j["n"] = ce.lambda.n();
    j["pi"] = to_json(ce.pi);
    if (ce.sigma) j["sigma"] = to_json(*ce.sigma);
    if (ce.tableau) j["tableau"] = to_json(*ce.tableau);
    if (ce.monomial) j["monomial"] = *ce.monomial;
    j["expected"] = ce.expected;
    j["actual"] = ce.actual;
    err << j.dump() << "\n";
    return 4;
}

// First exponent vector on which the polynomials differ, for the dump.
std::optional<std::vector<int>> first_diff(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const GradedLex less;
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && less(ia->first, ib->first)))
            return ia->first;
        if (ia == a.terms().end() || less(ib->first, ia->first)) return ib->first;
        if (ia->second != ib->second) return ia->first;
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

struct KeyArgs {
    ShapeArgs shape;
    std::string format = "text";
};

int run_key(const KeyArgs& a, std::ostream& out) {
    const int n = resolve_rank(a.shape);
    const Partition lambda = resolve_shape(a.shape, n);
    const Permutation pi = resolve_perm(a.shape.pi_text, "--pi", n);
    print_tableau(out, make_key(lambda, pi), a.format);
    return 0;
}

struct ScanArgs {
    std::string file = "-";
    std::string format = "text";
    bool paths = false;
};

int run_scan(const ScanArgs& a, bool right, std::istream& in, std::ostream& out) {
    const Tableau t = read_tableau(a.file, in);
    const ScanResult res = right ? right_scan(t) : left_scan(t);
    if (a.format == "json") {
        if (a.paths) {
            json j;
            j["scan"] = to_json(res.scan);
            json paths = json::array();
            for (int jcol = 1; jcol <= t.shape().num_columns(); ++jcol)
                for (int i = 1; i <= t.shape().column_length(jcol); ++i)
                    paths.push_back(to_json(res.path(jcol, i)));
            j["paths"] = paths;
            out << j.dump() << "\n";
        } else {
            out << to_json(res.scan).dump() << "\n";
        }
        return 0;
    }
    out << render(res.scan);
    if (a.paths) {
        for (int jcol = 1; jcol <= t.shape().num_columns(); ++jcol)
            for (int i = 1; i <= t.shape().column_length(jcol); ++i) {
                const ScanPath& p = res.path(jcol, i);
                out << "path (" << jcol << "," << i << "):";
                for (int v : p.values) out << " " << v;
                out << " -> " << p.terminal() << "\n";
            }
    }
    return 0;
}

struct PolyArgs {
    ShapeArgs shape;
    std::string format = "text";
    std::string route = "operator";
    bool tableaux = false;
    bool count = false;
    long long max_frames = 1000000;
};

void add_poly_options(CLI::App* cmd, PolyArgs& a) {
    add_shape_options(cmd, a.shape, false);
    cmd->add_option("--format", a.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--route", a.route,
                    "operator, tableaux or both; both verifies the routes agree")
        ->check(CLI::IsMember({"operator", "tableaux", "both"}));
    cmd->add_flag("--tableaux", a.tableaux,
                  "stream the tableaux as JSON lines instead of the polynomial");
    cmd->add_flag("--count", a.count, "print only the number of tableaux");
    cmd->add_option("--max-frames", a.max_frames, "generator frame cap")
        ->check(CLI::PositiveNumber);
}

int run_poly(const PolyArgs& a, bool exact, std::ostream& out, std::ostream& err) {
    const int n = resolve_rank(a.shape);
    const Partition lambda = resolve_shape(a.shape, n);
    const Permutation pi = resolve_perm(a.shape.pi_text, "--pi", n);
    const GenLimits limits{static_cast<std::size_t>(a.max_frames)};
    const char* what = exact ? "atom" : "demazure";

    if (a.tableaux || a.count) {
        std::vector<Tableau> gen = exact ? generate_atom_tableaux(lambda, pi, limits)
                                         : generate_demazure_tableaux(lambda, pi, limits);
        if (a.route == "both") {
            std::vector<Tableau> oracle = filter_oracle(
                lambda, pi,
                exact ? FilterKind::right_exact : FilterKind::right_bounded);
            std::vector<Tableau> sorted = gen;
            std::sort(sorted.begin(), sorted.end());
            std::sort(oracle.begin(), oracle.end());
            if (sorted != oracle) {
                Counterexample ce{std::string(what) + " tableau routes disagree",
                                  lambda, pi};
                std::vector<Tableau> diff;
                std::set_symmetric_difference(sorted.begin(), sorted.end(),
                                              oracle.begin(), oracle.end(),
                                              std::back_inserter(diff));
                if (!diff.empty()) ce.tableau = diff.front();
                ce.expected = json(oracle.size());
                ce.actual = json(sorted.size());
                return dump_counterexample(err, ce);
            }
        }
        if (a.count) {
            out << gen.size() << "\n";
            return 0;
        }
        if (gen.empty()) err << "note: the " << what << " is empty for this permutation\n";
        for (const Tableau& t : gen) out << to_json(t).dump() << "\n";
        return 0;
    }

    std::optional<Polynomial> by_op, by_tab;
    if (a.route != "tableaux")
        by_op = exact ? atom_poly(lambda, pi) : demazure_poly(lambda, pi);
    if (a.route != "operator")
        by_tab = exact ? atom_poly_tableaux(lambda, pi, limits)
                       : demazure_poly_tableaux(lambda, pi, limits);
    if (by_op && by_tab && !(*by_op == *by_tab)) {
        Counterexample ce{std::string(what) + " polynomial routes disagree", lambda, pi};
        ce.monomial = first_diff(*by_op, *by_tab);
        ce.expected = to_json(*by_op);
        ce.actual = to_json(*by_tab);
        return dump_counterexample(err, ce);
    }
    print_poly(out, by_op ? *by_op : *by_tab, a.format);
    return 0;
}

struct IntervalArgs {
    ShapeArgs shape;
    std::string format = "text";
    std::string route = "scan";
    std::string form = "bounded";
    bool tableaux = false;
    bool count = false;
};

int run_interval(const IntervalArgs& a, std::ostream& out, std::ostream& err) {
    const int n = resolve_rank(a.shape);
    const Partition lambda = resolve_shape(a.shape, n);
    const Permutation pi = resolve_perm(a.shape.pi_text, "--pi", n);
    const Permutation sigma = resolve_perm(a.shape.sigma_text, "--sigma", n);
    const bool exact = a.form == "exact";

    if (a.tableaux || a.count) {
        auto member = [&](const Tableau& t, Route route) {
            return exact ? is_exact_demazure(t, pi, route) && is_left_exact(t, sigma, route)
                         : is_demazure(t, pi, route) && is_left_bounded(t, sigma, route);
        };
        std::vector<Tableau> picked;
        std::optional<Counterexample> bad;
        for_each_tableau(lambda, [&](const Tableau& t) {
            if (bad) return;
            if (a.route == "both") {
                const bool d = member(t, Route::direct);
                const bool c = member(t, Route::cellwise);
                if (d != c) {
                    Counterexample ce{"interval membership routes disagree", lambda, pi};
                    ce.sigma = sigma;
                    ce.tableau = t;
                    ce.expected = json(d);
                    ce.actual = json(c);
                    bad = std::move(ce);
                    return;
                }
                if (d) picked.push_back(t);
            } else {
                const Route route = a.route == "cellwise" ? Route::cellwise : Route::direct;
                if (member(t, route)) picked.push_back(t);
            }
        });
        if (bad) return dump_counterexample(err, *bad);
        if (a.count) {
            out << picked.size() << "\n";
            return 0;
        }
        for (const Tableau& t : picked) out << to_json(t).dump() << "\n";
        return 0;
    }

    auto compute = [&](IntervalRoute route) {
        return exact ? interval_poly_exact(lambda, sigma, pi, route)
                     : interval_poly_bounded(lambda, sigma, pi, route);
    };
    if (a.route == "both") {
        const Polynomial by_scan = compute(IntervalRoute::scan);
        const Polynomial by_cell = compute(IntervalRoute::cellwise);
        if (!(by_scan == by_cell)) {
            Counterexample ce{"interval polynomial routes disagree", lambda, pi};
            ce.sigma = sigma;
            ce.monomial = first_diff(by_scan, by_cell);
            ce.expected = to_json(by_scan);
            ce.actual = to_json(by_cell);
            return dump_counterexample(err, ce);
        }
        print_poly(out, by_scan, a.format);
        return 0;
    }
    print_poly(out, compute(a.route == "cellwise" ? IntervalRoute::cellwise
                                                  : IntervalRoute::scan),
               a.format);
    return 0;
}

struct SetsArgs {
    std::string file = "-";
    std::string kind;
    std::string cell_text;
    std::string pi_text;
    std::string sigma_text;
    std::string format = "json";
};

int run_sets(const SetsArgs& a, std::istream& in, std::ostream& out) {
    const Tableau t = read_tableau(a.file, in);
    const std::vector<int> cell = parse_int_list(a.cell_text, "--cell");
    if (cell.size() != 2)
        throw usage_error("--cell takes a column,row pair, e.g. --cell 2,3");
    const int l = cell[0], k = cell[1];
    const bool left = a.kind == "F" || a.kind == "G";
    if (left && a.sigma_text.empty())
        throw usage_error("set kind " + a.kind + " needs --sigma");
    if (!left && a.pi_text.empty())
        throw usage_error("set kind " + a.kind + " needs --pi");
    const Permutation perm =
        resolve_perm(left ? a.sigma_text : a.pi_text, left ? "--sigma" : "--pi", t.n());
    ConditionSet s;
    if (a.kind == "A") s = a_set(t, perm, l, k);
    else if (a.kind == "B") s = b_set(t, perm, l, k);
    else if (a.kind == "C") s = c_set(t, perm, l, k);
    else if (a.kind == "F") s = f_set(t, perm, l, k);
    else s = g_set(t, perm, l, k);
    if (a.format == "json") {
        out << to_json(s).dump() << "\n";
    } else {
        out << a.kind << "(" << l << "," << k << ") = {";
        for (std::size_t i = 0; i < s.values.size(); ++i)
            out << (i ? "," : "") << s.values[i];
        out << "}\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    VerifyOptions opts;
    double time_cap = 0.0;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
    long long total_cases = 0;
    double total_seconds = 0.0;
    int failed = 0, count = 0;
    run_suite(a.suite, a.opts, [&](const CheckResult& r) {
        ++count;
        total_cases += r.cases;
        total_seconds += r.seconds;
        char line[160];
        std::snprintf(line, sizeof(line), "%s %-20s cases=%-8lld %.2fs",
                      r.pass ? "PASS" : "FAIL", r.name.c_str(), r.cases, r.seconds);
        out << line << "\n";
        if (!r.pass) {
            ++failed;
            out << "  first failure: " << r.detail << "\n";
        }
    });
    out << "passed " << (count - failed) << "/" << count << " checks, " << total_cases
        << " cases, " << static_cast<long long>(total_seconds * 100) / 100.0 << "s\n";
    if (a.time_cap > 0 && total_seconds > a.time_cap) {
        out << "time cap of " << a.time_cap << "s exceeded\n";
        return 1;
    }
    return failed == 0 ? 0 : 1;
}

struct RenderArgs {
    std::string file = "-";
};

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"keys, scans, Demazure characters and atoms of semistandard tableaux",
                 "keypoly"};
    app.require_subcommand(1);

    KeyArgs key_args;
    auto* key_cmd = app.add_subcommand("key", "build the key tableau of a permutation");
    add_shape_options(key_cmd, key_args.shape, false);
    key_cmd->add_option("--format", key_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    ScanArgs rkey_args, lkey_args;
    auto* rkey_cmd = app.add_subcommand("rkey", "right scan of a tableau (file or stdin)");
    auto* lkey_cmd = app.add_subcommand("lkey", "left scan of a tableau (file or stdin)");
    auto add_scan_options = [](CLI::App* cmd, ScanArgs& sa) {
        cmd->add_option("file", sa.file, "tableau JSON file, - for stdin");
        cmd->add_option("--format", sa.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--paths", sa.paths, "include the scanning paths");
    };
    add_scan_options(rkey_cmd, rkey_args);
    add_scan_options(lkey_cmd, lkey_args);

    PolyArgs demazure_args, atom_args;
    auto* demazure_cmd =
        app.add_subcommand("demazure", "key polynomial (Demazure character)");
    add_poly_options(demazure_cmd, demazure_args);
    auto* atom_cmd = app.add_subcommand("atom", "Demazure atom");
    add_poly_options(atom_cmd, atom_args);

    IntervalArgs interval_args;
    auto* interval_cmd = app.add_subcommand(
        "interval", "content sum over tableaux between a left and a right key bound");
    add_shape_options(interval_cmd, interval_args.shape, true);
    interval_cmd->add_option("--format", interval_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    interval_cmd
        ->add_option("--route", interval_args.route,
                     "scan, cellwise or both; both verifies the routes agree")
        ->check(CLI::IsMember({"scan", "cellwise", "both"}));
    interval_cmd
        ->add_option("--form", interval_args.form,
                     "bounded keeps M >= key(sigma) and S <= key(pi); exact keeps equality")
        ->check(CLI::IsMember({"bounded", "exact"}));
    interval_cmd->add_flag("--tableaux", interval_args.tableaux,
                           "stream the tableaux as JSON lines instead of the polynomial");
    interval_cmd->add_flag("--count", interval_args.count,
                           "print only the number of tableaux");

    SetsArgs sets_args;
    auto* sets_cmd =
        app.add_subcommand("sets", "cellwise condition set at one cell of a tableau");
    sets_cmd->add_option("file", sets_args.file, "tableau JSON file, - for stdin");
    sets_cmd->add_option("--kind", sets_args.kind, "A, B, C, F or G")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "F", "G"}));
    sets_cmd->add_option("--cell", sets_args.cell_text, "column,row of the cell, e.g. 2,3")
        ->required();
    sets_cmd->add_option("--pi", sets_args.pi_text, "permutation for kinds A, B, C");
    sets_cmd->add_option("--sigma", sets_args.sigma_text, "permutation for kinds F, G");
    sets_cmd->add_option("--format", sets_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", verify_args.suite, "suite name, default all")
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--n", verify_args.opts.n_max, "ambient rank bound")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-cells", verify_args.opts.max_cells, "cell bound for shapes")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--samples", verify_args.opts.samples,
                           "random polynomials for the algebra checks");
    verify_cmd->add_option("--seed", verify_args.opts.seed, "random seed");
    verify_cmd->add_option("--jobs", verify_args.opts.jobs,
                           "worker threads, 0 for hardware concurrency");
    verify_cmd->add_option("--time-cap", verify_args.time_cap,
                           "fail if the suite takes longer than this many seconds");

    RenderArgs render_args;
    auto* render_cmd = app.add_subcommand("render", "ASCII picture of a tableau");
    render_cmd->add_option("file", render_args.file, "tableau JSON file, - for stdin");

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("keypoly");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        emit_error(err, "parse", e.what());
        return 2;
    }

    try {
        if (key_cmd->parsed()) return run_key(key_args, out);
        if (rkey_cmd->parsed()) return run_scan(rkey_args, true, in, out);
        if (lkey_cmd->parsed()) return run_scan(lkey_args, false, in, out);
        if (demazure_cmd->parsed()) return run_poly(demazure_args, false, out, err);
        if (atom_cmd->parsed()) return run_poly(atom_args, true, out, err);
        if (interval_cmd->parsed()) return run_interval(interval_args, out, err);
        if (sets_cmd->parsed()) return run_sets(sets_args, in, out);
        if (verify_cmd->parsed()) return run_verify(verify_args, out);
        if (render_cmd->parsed()) {
            out << render(read_tableau(render_args.file, in));
            return 0;
        }
        emit_error(err, "parse", "no subcommand given");
        return 2;
    } catch (const usage_error& e) {
        emit_error(err, "parse", e.what());
        return 2;
    } catch (const internal_error& e) {
        emit_error(err, "internal", e.what());
        return 4;
    } catch (const limit_error& e) {
        emit_error(err, "limit", e.what());
        return 3;
    } catch (const validation_error& e) {
        emit_error(err, "validation", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error(err, "internal", e.what());
        return 4;
    }
}

} // namespace keypoly::cli

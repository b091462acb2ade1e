// mop - evaluate, tabulate and verify multiple orthogonal polynomials of the
// Hahn family and its limit families.
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
// error, 3 parameter pole or invalid index, 4 I/O failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mop/verify.hpp"

namespace {

using namespace mop;

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

struct Options {
    std::string family = "hahn";
    std::string kind = "type2";
    int comp = 1;
    long n1 = -1, n2 = -1;
    std::string params_csv;
    std::vector<std::string> xs;
    std::string mode = "exact";
    unsigned precision_bits = 256;
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 1;
    long max_order = 4;
    long draws = 200;
    std::string sequence = "100,1000,10000";
    std::string route;
    std::string suite;
    std::string from, to, step;
    long kmax = 20;
    std::string config;
};

unsigned env_precision_bits() {
    if (const char* env = std::getenv("MOP_PRECISION_BITS")) {
        try {
            const long v = std::stol(env);
            if (v >= 64) return static_cast<unsigned>(v);
        } catch (...) {
        }
        throw usage_error("MOP_PRECISION_BITS must be an integer >= 64");
    }
    return 256;
}

// Tracks CLI option handles so a JSON config file can fill in anything the
// command line left unset (explicit flags win).
struct OptionTable {
    std::vector<std::pair<std::string, CLI::Option*>> bound;
    std::map<std::string, std::function<void(const nlohmann::json&)>> setters;

    template <class T>
    void add(CLI::App* cmd, const std::string& name, T& target, const std::string& help) {
        CLI::Option* opt = cmd->add_option("--" + name, target, help);
        bound.emplace_back(name, opt);
        setters[name] = [&target](const nlohmann::json& v) {
            if constexpr (std::is_same_v<T, std::string>) {
                target = v.is_string() ? v.get<std::string>() : v.dump();
            } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
                target.clear();
                for (const auto& e : v) target.push_back(e.is_string() ? e.get<std::string>() : e.dump());
            } else {
                target = v.get<T>();
            }
        };
    }

    void apply_config(const std::string& path) {
        if (path.empty()) return;
        std::ifstream in(path);
        if (!in) throw io_error("cannot read config file '" + path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw usage_error(std::string("bad config JSON: ") + e.what());
        }
        if (!j.is_object()) throw usage_error("config JSON must be an object of flag values");
        // a flag may be registered on several subcommands against the same
        // variable; an explicit occurrence anywhere wins over the file
        std::map<std::string, bool> seen;
        for (const auto& [name, opt] : bound) seen[name] = seen[name] || opt->count() > 0;
        for (const auto& [name, was_seen] : seen) {
            if (was_seen) continue;
            if (auto it = j.find(name); it != j.end()) setters.at(name)(*it);
        }
    }
};

std::map<std::string, Rat> parse_param_csv(const std::string& csv) {
    std::map<std::string, Rat> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw usage_error("bad --params entry '" + item + "' (want name=value)");
        out[item.substr(0, eq)] = parse_rat(item.substr(eq + 1));
    }
    return out;
}

std::vector<long> parse_long_csv(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_long(parse_rat(item)));
    return out;
}

hahn::Params hahn_from_map(const std::map<std::string, Rat>& kv) {
    auto get = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw usage_error(std::string("missing hahn parameter '") + key + "'");
        return it->second;
    };
    hahn::Params p{get("alpha1"), get("alpha2"), get("beta"), to_long(get("N"))};
    hahn::validate(p);
    return p;
}

unsigned float_digits() {
    return static_cast<unsigned>(precision_bits() * 0.3010299956639812);
}

std::string fmt_float(const Real& x) { return x.str(float_digits()); }

// ---------------------------------------------------------------------------
// Table writer: CSV (comma, LF) or JSON, to --out or stdout.

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void write_table(const Table& t, const std::string& format, const std::string& out_path) {
    std::ostringstream body;
    if (format == "csv") {
        for (std::size_t i = 0; i < t.columns.size(); ++i) body << (i ? "," : "") << t.columns[i];
        body << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) body << (i ? "," : "") << row[i];
            body << "\n";
        }
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["columns"] = t.columns;
        j["rows"] = t.rows;
        body << j.dump(2) << "\n";
    } else {
        throw usage_error("unknown format '" + format + "' (want csv or json)");
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw io_error("cannot open output file '" + out_path + "'");
        out << body.str();
        if (!out) throw io_error("write failed for '" + out_path + "'");
    }
}

// ---------------------------------------------------------------------------
// Shared polynomial selection.

struct Selection {
    bool is_hahn = false;
    std::optional<hahn::Params> hp;
    std::optional<families::FamilyParams> fp;
    Kind kind = Kind::type2;
    MultiIndex idx;
};

Selection make_selection(const Options& o) {
    Selection sel;
    if (o.n1 < 0 || o.n2 < 0) throw usage_error("--n1 and --n2 are required (nonnegative integers)");
    if (o.comp != 1 && o.comp != 2) throw usage_error("--a must be 1 or 2");
    sel.idx = {o.n1, o.n2};
    if (o.kind == "type1")
        sel.kind = Kind::type1;
    else if (o.kind == "type2")
        sel.kind = Kind::type2;
    else
        throw usage_error("--kind must be type1 or type2");
    const auto kv = parse_param_csv(o.params_csv);
    if (o.family == "hahn") {
        sel.is_hahn = true;
        sel.hp = hahn_from_map(kv);
    } else {
        const auto it = families::family_names().find(o.family);
        if (it == families::family_names().end()) throw usage_error("unknown family '" + o.family + "'");
        sel.fp = families::make_params(it->second, kv);
    }
    return sel;
}

bool exact_available(const Selection& sel) {
    if (sel.is_hahn || sel.kind == Kind::type2) return true;
    return families::id_of(*sel.fp) == families::FamilyId::Kravchuk;
}

// Exact coefficient table (Pochhammer or monomial basis, per family).
std::vector<Rat> exact_coeffs(const Selection& sel, int comp) {
    if (sel.is_hahn) {
        if (sel.kind == Kind::type2) return hahn::type2(sel.idx, *sel.hp).coeffs;
        const auto pair = hahn::type1(sel.idx, *sel.hp);
        return (comp == 1 ? pair.q1 : pair.q2).coeffs;
    }
    if (sel.kind == Kind::type2)
        return std::visit([](const auto& p) { return p.coeffs; }, families::type2(sel.idx, *sel.fp));
    const auto pair = families::type1_core(sel.idx, *sel.fp);  // Kravchuk: prefactor is 1
    return std::visit([&](const auto& pr) { return (comp == 1 ? pr.q1 : pr.q2).coeffs; }, pair);
}

Rat eval_exact(const Selection& sel, int comp, const Rat& x) {
    if (sel.is_hahn) {
        if (sel.kind == Kind::type2) return poly_eval(hahn::type2(sel.idx, *sel.hp), x);
        const auto pair = hahn::type1(sel.idx, *sel.hp);
        return poly_eval(comp == 1 ? pair.q1 : pair.q2, x);
    }
    if (sel.kind == Kind::type2)
        return std::visit([&](const auto& p) { return poly_eval(p, x); }, families::type2(sel.idx, *sel.fp));
    const auto pair = families::type1_core(sel.idx, *sel.fp);
    return std::visit([&](const auto& pr) { return poly_eval(comp == 1 ? pr.q1 : pr.q2, x); }, pair);
}

Real eval_float(const Selection& sel, int comp, const Real& x) {
    if (sel.is_hahn) {
        if (sel.kind == Kind::type2) return poly_eval(hahn::type2(sel.idx, *sel.hp), x);
        const auto pair = hahn::type1(sel.idx, *sel.hp);
        return poly_eval(comp == 1 ? pair.q1 : pair.q2, x);
    }
    if (sel.kind == Kind::type2) return families::type2_value_float(sel.idx, x, *sel.fp);
    return families::type1_value_float(sel.idx, comp, x, *sel.fp);
}

// ---------------------------------------------------------------------------
// Commands.

int cmd_eval(const Options& o) {
    const auto sel = make_selection(o);
    if (o.xs.empty()) throw usage_error("eval needs at least one --x point");
    const bool exact = (o.mode == "exact");
    if (o.mode != "exact" && o.mode != "float") throw usage_error("--mode must be exact or float");
    if (exact && !exact_available(sel))
        throw usage_error("type I values of this family carry a transcendental prefactor; use --mode float");
    for (const auto& xs : o.xs) {
        const Rat x = parse_rat(xs);
        if (exact)
            std::cout << eval_exact(sel, o.comp, x).str() << "\n";
        else
            std::cout << fmt_float(eval_float(sel, o.comp, to_real(x))) << "\n";
    }
    return 0;
}

int cmd_coeffs(const Options& o) {
    const auto sel = make_selection(o);
    const bool exact = (o.mode == "exact");
    if (exact && !exact_available(sel))
        throw usage_error("type I coefficients of this family carry a transcendental prefactor; use --mode float");
    Table t;
    if (exact) {
        t.columns = {"index", "coefficient"};
        const auto coeffs = exact_coeffs(sel, o.comp);
        for (std::size_t l = 0; l < coeffs.size(); ++l) t.rows.push_back({std::to_string(l), coeffs[l].str()});
    } else {
        t.columns = {"index", "coefficient", "precision_bits"};
        std::vector<Real> coeffs;
        if (sel.is_hahn || sel.kind == Kind::type2) {
            for (const auto& c : exact_coeffs(sel, o.comp)) coeffs.push_back(to_real(c));
        } else {
            const Real pref = families::type1_prefactor_float(sel.idx, o.comp, *sel.fp);
            const auto pair = families::type1_core(sel.idx, *sel.fp);
            std::visit(
                [&](const auto& pr) {
                    for (const auto& c : (o.comp == 1 ? pr.q1 : pr.q2).coeffs) coeffs.push_back(pref * to_real(c));
                },
                pair);
        }
        for (std::size_t l = 0; l < coeffs.size(); ++l)
            t.rows.push_back({std::to_string(l), fmt_float(coeffs[l]), std::to_string(precision_bits())});
    }
    write_table(t, o.format, o.out);
    return 0;
}

int cmd_weights(const Options& o) {
    const auto kv = parse_param_csv(o.params_csv);
    if (o.comp != 1 && o.comp != 2) throw usage_error("--a must be 1 or 2");
    Table t;
    if (o.family == "hahn") {
        const auto hp = hahn_from_map(kv);
        t.columns = {"k", "weight"};
        for (long k = 0; k <= hp.big_n; ++k) t.rows.push_back({std::to_string(k), hahn::weight(k, o.comp, hp).str()});
    } else {
        const auto it = families::family_names().find(o.family);
        if (it == families::family_names().end()) throw usage_error("unknown family '" + o.family + "'");
        const auto fp = families::make_params(it->second, kv);
        const auto id = families::id_of(fp);
        if (families::is_discrete(id)) {
            long last = o.kmax;
            if (const auto* kp = std::get_if<families::krav::Params>(&fp)) last = kp->big_n;
            t.columns = {"k", "weight"};
            for (long k = 0; k <= last; ++k)
                t.rows.push_back({std::to_string(k), families::weight_exact(k, o.comp, fp).str()});
        } else {
            if (o.xs.empty()) throw usage_error("continuous weights need --x points");
            t.columns = {"x", "weight", "precision_bits"};
            for (const auto& xs : o.xs) {
                const Rat x = parse_rat(xs);
                t.rows.push_back({x.str(), fmt_float(families::weight_float(to_real(x), o.comp, fp)),
                                  std::to_string(precision_bits())});
            }
        }
    }
    write_table(t, o.format, o.out);
    return 0;
}

int cmd_verify(const Options& o) {
    verify::SuiteConfig cfg;
    cfg.suite = o.suite;
    cfg.family = o.family;
    cfg.max_order = o.max_order;
    cfg.precision_bits = o.precision_bits;
    cfg.seed = o.seed;
    cfg.draws = o.draws;
    cfg.sequence = parse_long_csv(o.sequence);
    const auto kv = parse_param_csv(o.params_csv);
    if (!kv.empty()) {
        if (o.family == "hahn") {
            cfg.hahn_params = hahn_from_map(kv);
        } else {
            const auto it = families::family_names().find(o.family);
            if (it == families::family_names().end()) throw usage_error("unknown family '" + o.family + "'");
            cfg.family_params = families::make_params(it->second, kv);
        }
    }
    const auto report = verify::run_suite(cfg);
    std::cout << "suite " << report.suite << " (family " << cfg.family << ", max order " << cfg.max_order
              << ", seed " << cfg.seed << ", " << cfg.precision_bits << "-bit floats)\n";
    std::cout << "  pass " << report.n_pass << ", fail " << report.n_fail << ", skipped " << report.n_skipped
              << "\n";
    for (const auto& c : report.cases)
        if (c.status == "fail") std::cout << "  FAIL " << c.id << " residual " << c.residual << "\n";
    if (!o.out.empty()) {
        std::ofstream out(o.out, std::ios::binary);
        if (!out) throw io_error("cannot open output file '" + o.out + "'");
        out << verify::report_json(report).dump(2) << "\n";
        if (!out) throw io_error("write failed for '" + o.out + "'");
    }
    return report.ok() ? 0 : 1;
}

int cmd_limits(const Options& o) {
    const auto rit = limits::route_names().find(o.route);
    if (rit == limits::route_names().end()) throw usage_error("unknown route '" + o.route + "'");
    const auto route = rit->second;
    if (o.n1 < 0 || o.n2 < 0) throw usage_error("--n1 and --n2 are required");
    const Kind kind = (o.kind == "type1") ? Kind::type1 : Kind::type2;
    const auto kv = parse_param_csv(o.params_csv);
    const auto target = kv.empty() ? verify::default_family_params(limits::route_target(route))
                                   : families::make_params(limits::route_target(route), kv);
    Table t;
    t.columns = {"limit_param", "residual", "precision_bits"};
    for (long tv : parse_long_csv(o.sequence)) {
        const Real r =
            limits::limit_residual(route, {o.n1, o.n2}, Real(tv), target, kind, limits::default_eval_points(route));
        t.rows.push_back({std::to_string(tv), fmt_float(r), std::to_string(precision_bits())});
    }
    write_table(t, o.format, o.out);
    return 0;
}

int cmd_table(const Options& o) {
    const auto sel = make_selection(o);
    if (o.from.empty() || o.to.empty()) throw usage_error("table needs --from and --to");
    const Rat from = parse_rat(o.from), to = parse_rat(o.to);
    const Rat step = o.step.empty() ? Rat(1) : parse_rat(o.step);
    if (!(step > 0) || to < from) throw usage_error("table needs --to >= --from and positive --step");
    const bool exact = (o.mode == "exact");
    if (exact && !exact_available(sel))
        throw usage_error("type I values of this family carry a transcendental prefactor; use --mode float");
    Table t;
    t.columns = exact ? std::vector<std::string>{"x", "value"}
                      : std::vector<std::string>{"x", "value", "precision_bits"};
    for (Rat x = from; x <= to; x += step) {
        if (exact)
            t.rows.push_back({x.str(), eval_exact(sel, o.comp, x).str()});
        else
            t.rows.push_back({x.str(), fmt_float(eval_float(sel, o.comp, to_real(x))), std::to_string(precision_bits())});
    }
    write_table(t, o.format, o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    try {
        o.precision_bits = env_precision_bits();
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"multiple orthogonal polynomials of the Hahn family: evaluation, tables, verification"};
    app.set_version_flag("--version", MOP_VERSION);
    app.require_subcommand(1);

    OptionTable reg;
    auto add_common = [&](CLI::App* cmd) {
        reg.add(cmd, "family", o.family, "hahn | jacobi-pineiro | meixner1 | meixner2 | kravchuk | laguerre1 | laguerre2 | charlier");
        reg.add(cmd, "kind", o.kind, "type1 | type2");
        reg.add(cmd, "a", o.comp, "type I component / weight index (1 or 2)");
        reg.add(cmd, "n1", o.n1, "first index");
        reg.add(cmd, "n2", o.n2, "second index");
        reg.add(cmd, "params", o.params_csv, "family parameters, name=value[,name=value...]");
        reg.add(cmd, "mode", o.mode, "exact | float");
        reg.add(cmd, "precision-bits", o.precision_bits, "float mantissa bits (>= 64; env MOP_PRECISION_BITS)");
        reg.add(cmd, "format", o.format, "csv | json");
        reg.add(cmd, "out", o.out, "output file (default stdout)");
        reg.add(cmd, "seed", o.seed, "seed for sampled suites");
        reg.add(cmd, "config", o.config, "JSON config file supplying any flag (flags override)");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a polynomial at points");
    add_common(eval);
    eval->add_option("--x", o.xs, "evaluation point (repeatable, rational p/q)");

    CLI::App* coeffs = app.add_subcommand("coeffs", "tabulate polynomial coefficients");
    add_common(coeffs);

    CLI::App* weights = app.add_subcommand("weights", "tabulate weight values on the support");
    add_common(weights);
    weights->add_option("--x", o.xs, "points for continuous weights (repeatable)");
    reg.add(weights, "kmax", o.kmax, "last k for infinite discrete supports");

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    add_common(ver);
    ver->add_option("suite", o.suite, "orthogonality|biorthogonality|recurrence|identities|limits|oracle|all")
        ->required();
    reg.add(ver, "max-order", o.max_order, "index bound (n1+n2)");
    reg.add(ver, "draws", o.draws, "draws per identity");
    reg.add(ver, "sequence", o.sequence, "limit parameter sequence, comma separated");

    CLI::App* lim = app.add_subcommand("limits", "limit-route residual table");
    add_common(lim);
    reg.add(lim, "route", o.route, "hahn-jp|hahn-meixner1|hahn-meixner2|hahn-kravchuk|jp-laguerre1|meixner2-laguerre1|meixner1-laguerre2|meixner1-charlier|kravchuk-charlier");
    reg.add(lim, "sequence", o.sequence, "limit parameter sequence, comma separated");

    CLI::App* tab = app.add_subcommand("table", "tabulate polynomial values over a range");
    add_common(tab);
    reg.add(tab, "from", o.from, "range start (rational)");
    reg.add(tab, "to", o.to, "range end (rational)");
    reg.add(tab, "step", o.step, "range step (rational, default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        reg.apply_config(o.config);
        if (o.precision_bits < 64) throw usage_error("--precision-bits must be at least 64");
        set_precision_bits(o.precision_bits);

        if (eval->parsed()) return cmd_eval(o);
        if (coeffs->parsed()) return cmd_coeffs(o);
        if (weights->parsed()) return cmd_weights(o);
        if (ver->parsed()) return cmd_verify(o);
        if (lim->parsed()) return cmd_limits(o);
        if (tab->parsed()) return cmd_table(o);
        throw usage_error("no command given");
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const index_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const pole_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const singular_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "mjets/app/scenarios.hpp"

using namespace mjets;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string system;
    std::string system_file;
    std::vector<std::string> family;
    int degree = 0;
    int order = 1;
    unsigned j = 3;
    unsigned cap = kDefaultOrderCap;
    std::string apply;
    std::vector<std::string> assume;
    std::vector<std::string> sub;
    std::string json_path;

    // solve
    std::vector<std::string> unknowns;
    std::vector<unsigned> orders;
    bool rank = false;

    // verify
    std::vector<std::string> set;
    std::int64_t seed = -1;
    bool two_cycle = false;
    std::vector<double> eps{1e-2};
    std::vector<double> radii;
    std::string grid;
    double tol = 1e-14;
    bool line_integral = false;
    bool profile = false;
    bool slopes = false;
    std::string csv_path;

    std::string target;
    bool list = false;
};

// "3gamma" -> "3*gamma"; parameter names never start with a digit.
std::string implicit_products(const std::string& s) {
    static const std::regex digit_letter("([0-9])([A-Za-z])");
    return std::regex_replace(s, digit_letter, "$1*$2");
}

Rational parse_number(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("not a rational number: '" + text + "'");
    }
}

std::pair<std::string, std::string> split_assignment(const std::string& s) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected name=value, got '" + s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

struct Setup {
    PerturbedSystem base;     // catalog system with family values, no perturbation
    PerturbedSystem system;   // with perturbations, script applied
    Script script;
    Bindings family;
};

PerturbedSystem load_base(const Options& o, const Bindings& family) {
    if (!o.system.empty()) {
        try {
            return catalog(o.system, family);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    PerturbedSystem base = load_system_file(o.system_file);
    return family.empty() ? base : base.bind_family(family);
}

// A side condition linear in a family parameter with constant coefficient,
// e.g. alpha + 3*gamma = 0, is applied as alpha = -3*gamma.
bool solve_family(const ParamPoly& z, const std::vector<std::string>& free, Bindings& family) {
    for (const std::string& name : free) {
        const Param p(name);
        if (family.contains(p) || z.degree(p) != 1) continue;
        const ParamPoly c = z.coefficient(p, 1);
        if (!c.is_constant() || c.is_zero()) continue;
        const ParamPoly value = -z.coefficient(p, 0) * ParamPoly(Rational(1) / c.constant_term());
        for (auto& [q, v] : family) v = v.substitute({{p, value}});
        family.emplace(p, value);
        return true;
    }
    return false;
}

Setup build(const Options& o, bool second_order) {
    Setup s;
    for (const std::string& f : o.family) {
        const auto [name, value] = split_assignment(f);
        s.family.emplace(Param(name), ParamPoly(parse_number(value)));
    }
    if (o.system.empty() == o.system_file.empty()) throw UsageError("give exactly one of --system and --system-file");
    int degree = o.degree;
    if (degree == 0) degree = o.system == "CR1" ? 3 : 2;
    s.base = load_base(o, s.family);

    std::string text;
    if (!o.apply.empty()) {
        std::ifstream in(o.apply);
        if (!in) throw UsageError("cannot read script '" + o.apply + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    for (const std::string& a : o.sub) text += "\n" + implicit_products(a);
    for (const std::string& a : o.assume) text += "\nassume " + implicit_products(a);
    std::vector<Param> known = perturbation_params(1, degree);
    if (second_order) {
        for (Param p : perturbation_params(2, degree)) known.push_back(p);
    }
    const std::vector<std::string> free = s.base.free_family();
    for (const std::string& f : free) known.emplace_back(f);
    s.script = parse_script(text, s.base.definitions, known);

    bool rebound = false;
    std::vector<ParamPoly> zero;
    for (const ParamPoly& z : s.script.assumptions.zero) {
        const ParamPoly reduced = z.substitute(s.family);
        if (solve_family(reduced, free, s.family)) {
            rebound = true;
        } else if (!reduced.is_zero()) {
            zero.push_back(reduced);
        }
    }
    if (rebound) s.base = load_base(o, s.family);
    s.script.assumptions.zero = zero;
    for (ParamPoly& n : s.script.assumptions.nonzero) n = n.substitute(s.family);

    s.system = s.base;
    if (!s.system.Z1) s.system = generic_perturbation(s.system, 1, degree);
    if (second_order && !s.system.Z2) s.system = generic_perturbation(s.system, 2, degree);
    Substitution sub = s.script.substitution;
    for (auto& [p, v] : sub.bindings) v = v.substitute(s.family);
    s.system = sub.apply(s.system);
    return s;
}

json jet_json(const Jet& jet) {
    json coeffs = json::array();
    for (unsigned k = 1; k <= jet.j(); ++k) coeffs.push_back({{"k", k}, {"poly", jet[k].to_string()}});
    return {{"i", jet.order}, {"j", jet.j()}, {"coefficients", coeffs}};
}

json bindings_json(const Bindings& b) {
    json out = json::object();
    for (const auto& [p, v] : b) out[p.name()] = v.to_string();
    return out;
}

json substitution_json(const Substitution& s) {
    json out = json::array();
    for (const auto& [p, v] : s.bindings) out.push_back({{"param", p.name()}, {"value", v.to_string()}});
    return out;
}

json report_base(const Setup& s) {
    return {{"system", s.base.name},
            {"bindings", bindings_json(s.family)},
            {"substitutions", substitution_json(s.script.substitution)},
            {"provenance", json::array()}};
}

void write_json(const Options& o, const json& report) {
    if (o.json_path.empty()) return;
    if (o.json_path == "-") {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream out(o.json_path);
    if (!out) throw UsageError("cannot write '" + o.json_path + "'");
    out << report.dump(2) << '\n';
}

void print_jet(const Jet& jet) {
    for (unsigned k = 1; k <= jet.j(); ++k) std::cout << "m" << jet.order << "," << k << " = " << jet[k] << '\n';
}

Jet compute_jet(const Setup& s, int order, unsigned j, unsigned cap) {
    JetOptions opt;
    opt.cap = cap;
    if (order == 1) return averaging_jet(s.system, 1, j, opt);
    return averaging_jets(s.system, j, opt).second;
}

int cmd_jet(const Options& o) {
    if (o.order != 1 && o.order != 2) throw UsageError("--order must be 1 or 2");
    if (o.j == 0 || o.j > o.cap) throw UsageError("--j must be in 1.." + std::to_string(o.cap));
    const Setup s = build(o, o.order == 2);
    const Jet jet = compute_jet(s, o.order, o.j, o.cap);
    std::cout << "system " << s.base.name << ", order " << o.order << ", j = " << o.j << '\n';
    print_jet(jet);
    json report = report_base(s);
    report["jet"] = jet_json(jet);
    write_json(o, report);
    return kOk;
}

int cmd_solve(const Options& o) {
    if (o.j == 0 || o.j > o.cap) throw UsageError("--j must be in 1.." + std::to_string(o.cap));
    const Setup s = build(o, o.order == 2);
    const Jet jet = compute_jet(s, o.order, o.j, o.cap);
    json report = report_base(s);
    report["jet"] = jet_json(jet);
    int code = kOk;
    if (!o.unknowns.empty()) {
        std::vector<Param> unknowns;
        for (const auto& u : o.unknowns) unknowns.emplace_back(u);
        std::vector<unsigned> orders = o.orders;
        if (orders.empty()) {
            for (unsigned k = 1; k <= o.j && orders.size() < unknowns.size(); k += 2) orders.push_back(k);
        }
        for (unsigned k : orders) {
            if (k == 0 || k > o.j) throw UsageError("--orders entries must be in 1..j");
        }
        if (orders.size() != unknowns.size()) throw UsageError("need as many --orders as --unknowns");
        try {
            const SolveResult r = solve_vanishing(jet, orders, unknowns, s.script.assumptions);
            std::cout << "solution (determinant " << r.determinant << "):\n";
            for (const auto& [p, v] : r.substitution.bindings) std::cout << "  " << p.name() << " = " << v << '\n';
            report["solution"] = {{"determinant", r.determinant.to_string()},
                                  {"bindings", substitution_json(r.substitution)}};
        } catch (const SolveObstruction& e) {
            std::cout << "obstruction: " << e.what() << "\n  determinant = " << e.determinant << '\n';
            report["solution"] = {{"obstruction", e.what()}, {"determinant", e.determinant.to_string()}};
            code = kFail;
        }
    }
    if (o.rank || o.unknowns.empty()) {
        std::vector<unsigned> odd;
        for (unsigned k = 1; k <= o.j; k += 2) {
            if (!jet[k].is_zero()) odd.push_back(k);
        }
        if (odd.empty()) {
            std::cout << "rank 0 (jet vanishes)\n";
            report["rank"] = {{"rank", 0}, {"cycle_bound", 0}};
        } else {
            const RankReport r = generic_rank(jet, odd);
            std::cout << "rank " << r.rank << " of " << r.rows << " rows in " << r.cols << " parameters ("
                      << r.stable_points << "/" << r.tried_points << " random points agree) -> at least "
                      << r.cycle_bound << " limit cycles\n";
            json witness = json::object();
            for (const auto& [p, v] : r.witness) witness[p.name()] = v.to_string();
            report["rank"] = {{"rank", r.rank},
                              {"rows", r.rows},
                              {"cols", r.cols},
                              {"cycle_bound", r.cycle_bound},
                              {"stable_points", r.stable_points},
                              {"tried_points", r.tried_points},
                              {"witness", witness}};
        }
    }
    write_json(o, report);
    return code;
}

std::vector<long double> parse_grid(const std::string& g) {
    std::vector<std::string> parts;
    std::stringstream ss(g);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("--grid expects start:stop:step");
    const long double a = std::stold(parts[0]), b = std::stold(parts[1]), h = std::stold(parts[2]);
    if (!(h > 0) || !(b >= a) || !(a > 0)) throw UsageError("--grid needs 0 < start <= stop and step > 0");
    std::vector<long double> out;
    for (long double r = a; r <= b + h * 1e-9L; r += h) out.push_back(r);
    return out;
}

json order_json(const OrderReport& rep) {
    json fits = json::array();
    for (const auto& f : rep.fits) {
        json res = json::array();
        for (long double x : f.residuals) res.push_back(static_cast<double>(x));
        fits.push_back({{"r", static_cast<double>(f.r)},
                        {"slope", static_cast<double>(f.slope)},
                        {"inconclusive", f.inconclusive},
                        {"residuals", res}});
    }
    return {{"expected", static_cast<double>(rep.expected)}, {"agrees", rep.agrees}, {"fits", fits}};
}

int cmd_verify(const Options& o) {
    if (!o.line_integral && !o.profile && !o.slopes) throw UsageError("choose --line-integral, --profile or --slopes");
    if (o.tol < 1e-16) throw UsageError("--tol below 1e-16 is not supported");
    Setup s;
    NumericBinding b;
    std::vector<long double> predicted;
    std::vector<long double> grid;
    if (o.two_cycle) {
        if (o.system.empty()) throw UsageError("--two-cycle needs --system LV or S4");
        TwoCyclePoint pt;
        try {
            pt = two_cycle_point(o.system);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        s.base = catalog(o.system);
        s.system = pt.system;
        b.values = pt.values;
        predicted = pt.predicted;
        grid = pt.grid;
    } else {
        s = build(o, true);
        const int degree = o.degree ? o.degree : (o.system == "CR1" ? 3 : 2);
        std::mt19937_64 rng(static_cast<std::uint64_t>(std::max<std::int64_t>(o.seed, 0)));
        std::uniform_real_distribution<double> u(-1, 1);
        for (int ord : {1, 2}) {
            for (Param p : perturbation_params(ord, degree)) b.values[p] = o.seed >= 0 ? u(rng) : 0;
        }
    }
    for (const std::string& a : o.set) {
        const auto [name, value] = split_assignment(a);
        b.values[Param(name)] = std::stold(value);
    }
    for (const auto& [p, v] : s.family) b.values[p] = v.evaluate({});
    b.abs_tol = b.rel_tol = o.tol;
    if (!o.grid.empty()) grid = parse_grid(o.grid);

    json report = report_base(s);
    json numeric = {{"profiles", json::array()}, {"slopes", json::array()}, {"counts", json::array()}};
    std::cout.precision(10);
    int code = kOk;

    if (o.line_integral) {
        if (o.radii.empty()) throw UsageError("--line-integral needs --radii");
        json li = json::array();
        for (double r : o.radii) {
            try {
                const long double v = melnikov_line_integral(s.system, b.values, r, o.tol);
                std::cout << "line integral at r = " << r << ": " << static_cast<double>(v) << '\n';
                li.push_back({{"r", r}, {"value", static_cast<double>(v)}});
            } catch (const IntegrationFailure& e) {
                std::cout << "line integral at r = " << r << ": failed (" << e.what() << ")\n";
                li.push_back({{"r", r}, {"error", e.what()}});
                code = kFail;
            }
        }
        numeric["line_integrals"] = li;
    }
    if (o.profile) {
        if (grid.empty()) throw UsageError("--profile needs --grid");
        for (double e : o.eps) {
            b.eps = e;
            const DisplacementProfile prof = displacement_profile(s.system, b, grid);
            const CycleCount cc = count_cycles(
                prof, [&](long double x) { return return_map(s.system, b, x).r1 - x; }, 1e-7L);
            std::cout << "eps = " << e << ": " << cc.count << " certified sign changes";
            for (long double x : cc.radii) std::cout << ' ' << static_cast<double>(x);
            if (!cc.uncertain.empty()) std::cout << " (" << cc.uncertain.size() << " uncertain)";
            if (!predicted.empty()) {
                std::cout << "; predicted";
                for (long double x : predicted) std::cout << ' ' << static_cast<double>(x);
            }
            std::cout << '\n';
            std::ostringstream csv;
            write_csv(csv, prof);
            if (!o.csv_path.empty()) {
                std::ofstream out(o.csv_path + (o.eps.size() > 1 ? "." + std::to_string(&e - o.eps.data()) : ""));
                out << csv.str();
            } else if (o.json_path.empty()) {
                std::cout << csv.str();
            }
            json rows = json::array();
            for (std::size_t i = 0; i < prof.r.size(); ++i) {
                rows.push_back({{"r", static_cast<double>(prof.r[i])},
                                {"d", static_cast<double>(prof.d[i])},
                                {"err", static_cast<double>(prof.err[i])},
                                {"flag", prof.flag[i]}});
            }
            numeric["profiles"].push_back({{"eps", e}, {"rows", rows}});
            json radii = json::array();
            for (long double x : cc.radii) radii.push_back(static_cast<double>(x));
            numeric["counts"].push_back({{"eps", e}, {"count", cc.count}, {"radii", radii},
                                         {"uncertain", cc.uncertain.size()}});
        }
    }
    if (o.slopes) {
        if (o.radii.empty() || o.eps.size() < 2) throw UsageError("--slopes needs --radii and at least two --eps");
        const JetPair jp = averaging_jets(s.system, 9);
        // Under vanishing conditions the first jet is zero and the residual
        // of eps M1 + eps^2 M2/2 is O(eps^3).
        const bool second = jp.first.substitute({}).is_zero();
        std::vector<long double> eps(o.eps.begin(), o.eps.end()), radii(o.radii.begin(), o.radii.end());
        const OrderReport rep = second ? epsilon_order_check(s.system, b, eps, radii, &jp.first, &jp.second, 3, 0.3L)
                                       : epsilon_order_check(s.system, b, eps, radii, &jp.first, nullptr, 2, 0.2L);
        for (const auto& f : rep.fits) {
            std::cout << "r = " << static_cast<double>(f.r) << ": slope " << static_cast<double>(f.slope)
                      << (f.inconclusive ? " (below noise floor)" : "") << '\n';
        }
        std::cout << "expected " << static_cast<double>(rep.expected) << ": " << (rep.agrees ? "agrees" : "disagrees")
                  << '\n';
        numeric["slopes"].push_back(order_json(rep));
        if (!rep.agrees) code = kFail;
    }
    report["numeric"] = numeric;
    write_json(o, report);
    return code;
}

const char* outcome_label(Outcome o) {
    switch (o) {
        case Outcome::pass:
            return "PASS";
        case Outcome::deviation:
            return "FAIL (documented deviation)";
        case Outcome::fail:
            return "FAIL";
    }
    return "?";
}

int cmd_reproduce(const Options& o) {
    if (o.list) {
        for (const Scenario& s : scenarios()) std::cout << s.criterion << "  " << s.id << "  " << s.title << '\n';
        return kOk;
    }
    if (o.target.empty()) throw UsageError("reproduce needs a target id (see --list)");
    const Scenario* sc = nullptr;
    try {
        sc = &find_scenario(o.target);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const ScenarioResult r = run_scenario(*sc);
    std::cout << r.id << ": " << outcome_label(r.outcome()) << "  " << r.title << '\n';
    json checks = json::array();
    for (const Check& c : r.checks) {
        std::cout << "  [" << (c.ok ? "ok" : (c.deviation.empty() ? "FAIL" : "deviation")) << "] " << c.name;
        if (!c.ok && !c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << '\n';
        if (!c.ok && !c.deviation.empty()) std::cout << "      " << c.deviation << '\n';
        json cj = {{"name", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        if (!c.deviation.empty()) cj["deviation"] = c.deviation;
        checks.push_back(cj);
    }
    for (const std::string& n : r.notes) std::cout << "  " << n << '\n';
    const json report = {{"target", r.id},
                         {"criterion", r.criterion},
                         {"outcome", outcome_label(r.outcome())},
                         {"checks", checks},
                         {"notes", r.notes},
                         {"provenance", json::array({r.id})}};
    write_json(o, report);
    return r.outcome() == Outcome::pass ? kOk : kFail;
}

int cmd_catalog(const Options& o) {
    if (o.system.empty()) {
        for (const std::string& n : catalog_names()) {
            const PerturbedSystem s = catalog(n);
            std::cout << n;
            if (!s.family.empty()) {
                std::cout << " (";
                for (std::size_t i = 0; i < s.family.size(); ++i) std::cout << (i ? ", " : "") << s.family[i];
                std::cout << ")";
            }
            std::cout << '\n';
        }
        return kOk;
    }
    Setup s;
    Options copy = o;
    copy.apply.clear();
    copy.assume.clear();
    copy.sub.clear();
    s = build(copy, false);
    const PerturbedSystem& z = s.base;
    std::cout << "system " << z.name << '\n';
    std::cout << "P = " << z.Z.P.to_string() << '\n';
    std::cout << "Q = " << z.Z.Q.to_string() << '\n';
    if (z.H) std::cout << "H = " << z.H->to_string() << '\n';
    if (z.R) std::cout << "R = " << z.R->to_string() << '\n';
    for (const auto& [name, v] : z.definitions) std::cout << name << " = " << v << '\n';
    if (!o.system.empty()) {
        try {
            const Substitution c = vanishing_conditions(o.system);
            std::cout << "vanishing conditions:\n";
            for (const auto& [p, v] : c.bindings) std::cout << "  " << p.name() << " = " << v << '\n';
        } catch (const std::invalid_argument&) {
        }
    }
    json report = report_base(s);
    report["P"] = z.Z.P.to_string();
    report["Q"] = z.Z.Q.to_string();
    if (z.H) report["H"] = z.H->to_string();
    if (z.R) report["R"] = z.R->to_string();
    write_json(o, report);
    return kOk;
}

void system_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--system", o.system, "Catalog system (LV, H, CR1, S1..S4)");
    cmd->add_option("--system-file", o.system_file, "System definition file");
    cmd->add_option("--family", o.family, "Family parameter value, e.g. alpha=1/3");
    cmd->add_option("--degree", o.degree, "Perturbation degree (default 2, 3 for CR1)");
    cmd->add_option("--apply", o.apply, "Substitution/assumption script");
    cmd->add_option("--sub", o.sub, "Binding applied after the script, e.g. 'a110=-b101'");
    cmd->add_option("--assume", o.assume, "Side condition, e.g. 'd != 0' or 'alpha+3gamma=0'");
    cmd->add_option("--json", o.json_path, "Write a JSON report ('-' for stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Averaging-function jets for perturbed planar centers"};
    app.require_subcommand(1);
    Options o;

    auto* jet = app.add_subcommand("jet", "Print the j-jet of the order-i averaging function");
    system_options(jet, o);
    jet->add_option("--order", o.order, "Averaging order (1 or 2)");
    jet->add_option("--j", o.j, "Jet order");
    jet->add_option("--cap", o.cap, "Largest allowed jet order");

    auto* solve = app.add_subcommand("solve", "Solve vanishing conditions and report ranks");
    system_options(solve, o);
    solve->add_option("--order", o.order, "Averaging order (1 or 2)");
    solve->add_option("--j", o.j, "Jet order");
    solve->add_option("--cap", o.cap, "Largest allowed jet order");
    solve->add_option("--unknowns", o.unknowns, "Parameters to solve for")->delimiter(',');
    solve->add_option("--orders", o.orders, "Coefficients m_k to annihilate (default: the first odd ones)")
        ->delimiter(',');
    solve->add_flag("--rank", o.rank, "Also report the generic rank of the odd coefficients");

    auto* verify = app.add_subcommand("verify", "Numeric checks: line integrals, profiles, eps-order slopes");
    system_options(verify, o);
    verify->add_option("--set", o.set, "Numeric parameter value, e.g. a110=1");
    verify->add_option("--random", o.seed, "Fill the perturbation parameters from this seed");
    verify->add_flag("--two-cycle", o.two_cycle, "Use the constructed two-cycle point (LV or S4)");
    verify->add_option("--eps", o.eps, "Perturbation sizes")->delimiter(',');
    verify->add_option("--radii", o.radii, "Radii for line integrals and slopes")->delimiter(',');
    verify->add_option("--grid", o.grid, "Profile grid start:stop:step");
    verify->add_option("--tol", o.tol, "Integration tolerance");
    verify->add_flag("--line-integral", o.line_integral, "Line integral of (Q1 dx - P1 dy)/R");
    verify->add_flag("--profile", o.profile, "Displacement profile and cycle count");
    verify->add_flag("--slopes", o.slopes, "Residual slope against eps");
    verify->add_option("--csv", o.csv_path, "Write the profile as CSV");

    auto* reproduce = app.add_subcommand("reproduce", "Run a registered reproduction target");
    reproduce->add_option("target", o.target, "Target id");
    reproduce->add_flag("--list", o.list, "List the targets");
    reproduce->add_option("--json", o.json_path, "Write a JSON report ('-' for stdout)");

    auto* cat = app.add_subcommand("catalog", "List catalog systems or show one");
    cat->add_option("--system", o.system, "System to show");
    cat->add_option("--family", o.family, "Family parameter value");
    cat->add_option("--json", o.json_path, "Write a JSON report ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (jet->parsed()) return cmd_jet(o);
        if (solve->parsed()) return cmd_solve(o);
        if (verify->parsed()) return cmd_verify(o);
        if (reproduce->parsed()) return cmd_reproduce(o);
        return cmd_catalog(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
}

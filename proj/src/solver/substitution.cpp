#include "mjets/solver/substitution.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mjets {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Solves p = 0 for a parameter that occurs linearly with a unit coefficient,
// preferring the canonically smallest such parameter.
std::pair<Param, ParamPoly> solve_linear_unit(const ParamPoly& p) {
    for (Param v : p.variables()) {
        if (v.is_pi() || p.degree(v) != 1) continue;
        const ParamPoly c = p.coefficient(v, 1);
        if (!c.is_unit()) continue;
        const ParamPoly rest = p.coefficient(v, 0);
        if (auto q = (-rest).divide_exact(c)) return {v, *q};
    }
    throw std::invalid_argument("cannot solve '" + p.to_string() + " = 0' for a parameter with unit coefficient");
}

}  // namespace

std::vector<std::pair<Param, ParamPoly>> Assumptions::zero_bindings() const {
    std::vector<std::pair<Param, ParamPoly>> out;
    for (ParamPoly z : zero) {
        for (const auto& [p, v] : out) z = z.substitute({{p, v}});
        if (z.is_zero()) continue;
        auto b = solve_linear_unit(z);
        for (auto& [p, v] : out) v = v.substitute({{b.first, b.second}});
        out.push_back(std::move(b));
    }
    return out;
}

void Substitution::validate() const {
    std::set<Param> seen;
    for (std::size_t i = 0; i < bindings.size(); ++i) {
        const Param p = bindings[i].first;
        if (!seen.insert(p).second) throw std::invalid_argument("parameter '" + p.name() + "' bound twice");
        for (std::size_t j = i; j < bindings.size(); ++j) {
            if (bindings[j].second.contains(p)) {
                throw std::invalid_argument("substitution is not triangular: '" + p.name() +
                                            "' occurs in the value of '" + bindings[j].first.name() + "'");
            }
        }
    }
}

void Substitution::append(Param p, ParamPoly value) { bindings.emplace_back(p, std::move(value)); }

void Substitution::append(const Substitution& o) {
    for (const auto& b : o.bindings) bindings.push_back(b);
    for (const auto& a : o.assumptions) assumptions.push_back(a);
}

ParamPoly Substitution::apply(const ParamPoly& p) const {
    ParamPoly out = p;
    for (const auto& [k, v] : bindings) {
        if (out.contains(k)) out = out.substitute({{k, v}});
    }
    return out;
}

Jet Substitution::apply(const Jet& j) const {
    Jet out = j;
    for (auto& c : out.m) c = apply(c);
    return out;
}

PerturbedSystem Substitution::apply(const PerturbedSystem& s) const {
    PerturbedSystem out = s;
    for (const auto& [k, v] : bindings) out = out.apply({{k, v}});
    return out;
}

Bindings Substitution::composed() const {
    Bindings out;
    for (const auto& [k, v] : bindings) {
        for (auto& [_, w] : out) {
            if (w.contains(k)) w = w.substitute({{k, v}});
        }
        if (!out.count(k)) out.emplace(k, v);
    }
    return out;
}

std::string Substitution::to_string() const {
    std::ostringstream os;
    for (const auto& [k, v] : bindings) os << k.name() << " = " << v << "\n";
    for (const auto& a : assumptions) os << "assume " << a << " != 0\n";
    return os.str();
}

Script parse_script(std::string_view text, const std::map<std::string, ParamPoly>& definitions,
                    const std::vector<Param>& known) {
    Script out;
    out.definitions = definitions;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };
    auto poly = [&](const std::string& src) {
        ParamPoly p;
        try {
            p = ParamPoly::parse(src);
        } catch (const std::exception& e) {
            fail(e.what());
        }
        Bindings defs;
        for (const auto& [name, v] : out.definitions) {
            if (p.contains(Param(name))) defs.emplace(Param(name), v);
        }
        if (!defs.empty()) p = p.substitute(defs);
        if (!known.empty()) {
            for (Param v : p.variables()) {
                if (v.is_pi() || v.kind() == ParamKind::auxiliary) continue;
                if (std::find(known.begin(), known.end(), v) == known.end()) {
                    fail("undeclared parameter '" + v.name() + "'");
                }
            }
        }
        return p;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t.rfind("assume ", 0) == 0) {
            const std::string body = trim(t.substr(7));
            if (auto ne = body.find("!="); ne != std::string::npos) {
                const ParamPoly p = poly(body.substr(0, ne)) - poly(body.substr(ne + 2));
                if (p.is_zero()) fail("assumption is identically false");
                out.assumptions.nonzero.push_back(p);
                out.substitution.assumptions.push_back(p);
            } else if (auto eq = body.find('='); eq != std::string::npos) {
                out.assumptions.zero.push_back(poly(body.substr(0, eq)) - poly(body.substr(eq + 1)));
            } else {
                fail("expected 'assume <expr> != 0' or 'assume <expr> = 0'");
            }
            continue;
        }
        if (t.rfind("let ", 0) == 0) {
            const std::string body = trim(t.substr(4));
            const auto eq = body.find('=');
            if (eq == std::string::npos) fail("expected 'let <name> = <expr>'");
            const std::string name = trim(body.substr(0, eq));
            if (name.empty()) fail("missing name");
            out.definitions[name] = poly(body.substr(eq + 1));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) fail("expected '<param> = <expr>'");
        const std::string lhs = trim(t.substr(0, eq));
        const ParamPoly l = poly(lhs);
        const auto vars = l.variables();
        if (vars.size() != 1 || l != ParamPoly(vars[0]) || vars[0].is_pi()) fail("left side must be a parameter");
        out.substitution.append(vars[0], poly(t.substr(eq + 1)));
    }
    try {
        out.substitution.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("script: ") + e.what());
    }
    return out;
}

Script load_script(const std::string& path, const std::map<std::string, ParamPoly>& definitions,
                   const std::vector<Param>& known) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open script '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return parse_script(ss.str(), definitions, known);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace mjets

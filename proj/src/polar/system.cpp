#include "mjets/polar/system.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mjets {

namespace {

const ParamPoly kZero;

Param px() {
    static const Param p("x");
    return p;
}
Param py() {
    static const Param p("y");
    return p;
}

Expr to_expr(const ParamPoly& p) { return parse_expr(p.to_string()); }

Expr bind_expr(const Expr& e, const Bindings& values) {
    std::map<std::string, Expr> images;
    for (const auto& [k, v] : values) images.emplace(k.name(), to_expr(v));
    return e.substitute([&](const std::string& n) -> const Expr* {
        auto it = images.find(n);
        return it == images.end() ? nullptr : &it->second;
    });
}

PlanarField bind_field(const PlanarField& f, const Bindings& b) { return {f.P.substitute(b), f.Q.substitute(b)}; }

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace

PlanarPoly PlanarPoly::from_poly(const ParamPoly& p) {
    PlanarPoly r;
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        const auto k = static_cast<unsigned>(m.extract(px()));
        const auto l = static_cast<unsigned>(m.extract(py()));
        r.add(k, l, ParamPoly(m, t.coef));
    }
    return r;
}

const ParamPoly& PlanarPoly::coeff(unsigned k, unsigned l) const {
    auto it = c_.find({k, l});
    return it == c_.end() ? kZero : it->second;
}

void PlanarPoly::add(unsigned k, unsigned l, const ParamPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = c_.try_emplace({k, l}, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) c_.erase(it);
    }
}

unsigned PlanarPoly::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : c_) d = std::max(d, e.first + e.second);
    return d;
}

PlanarPoly PlanarPoly::substitute(const Bindings& b) const {
    PlanarPoly r;
    for (const auto& [e, c] : c_) r.add(e.first, e.second, c.substitute(b));
    return r;
}

ParamPoly PlanarPoly::to_poly() const {
    ParamPoly s;
    for (const auto& [e, c] : c_) s += c * ParamPoly(Monomial(px(), e.first) * Monomial(py(), e.second), Rational(1));
    return s;
}

void PerturbedSystem::validate() const {
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) throw std::invalid_argument("system '" + name + "': " + what);
    };
    require(Z.P.coeff(0, 0).is_zero() && Z.Q.coeff(0, 0).is_zero(), "unperturbed field has a constant term");
    require(Z.P.coeff(1, 0).is_zero() && Z.P.coeff(0, 1) == ParamPoly(-1) && Z.Q.coeff(1, 0) == ParamPoly(1) &&
                Z.Q.coeff(0, 1).is_zero(),
            "linear part must be exactly (-y, x)");
    for (const auto* f : {Z1 ? &*Z1 : nullptr, Z2 ? &*Z2 : nullptr}) {
        if (f) require(f->P.coeff(0, 0).is_zero() && f->Q.coeff(0, 0).is_zero(), "perturbation has a constant term");
    }
}

PerturbedSystem PerturbedSystem::bind_family(const Bindings& values) const {
    PerturbedSystem s = *this;
    if (values.empty()) return s;
    s.Z = bind_field(Z, values);
    if (Z1) s.Z1 = bind_field(*Z1, values);
    if (Z2) s.Z2 = bind_field(*Z2, values);
    if (H) s.H = bind_expr(*H, values);
    if (R) s.R = bind_expr(*R, values);
    for (const auto& [k, v] : values) s.family_values[k] = v;
    for (auto& [name, def] : s.definitions) def = def.substitute(values);
    return s;
}

PerturbedSystem PerturbedSystem::apply(const Bindings& conditions) const {
    PerturbedSystem s = *this;
    if (Z1) s.Z1 = bind_field(*Z1, conditions);
    if (Z2) s.Z2 = bind_field(*Z2, conditions);
    return s;
}

std::vector<std::string> PerturbedSystem::free_family() const {
    std::vector<std::string> out;
    for (const auto& f : family) {
        if (!family_values.count(Param(f))) out.push_back(f);
    }
    return out;
}

std::vector<std::string> catalog_names() { return {"LV", "H", "CR1", "S1", "S2", "S3", "S4"}; }

PerturbedSystem catalog(std::string_view name, const Bindings& family) {
    struct Entry {
        const char* P;
        const char* Q;
        const char* H;
        const char* R;
        std::vector<std::string> family;
    };
    static const std::map<std::string, Entry, std::less<>> entries = {
        {"LV", {"-y*(1+x)", "x*(1+y)", "x + y - ln((x+1)*(y+1))", "(x+1)*(y+1)", {}}},
        {"H",
         {"-y - alpha/2*x^2 - beta*x*y - 3*gamma/2*y^2", "x + 3*delta/2*x^2 + alpha*x*y + beta/2*y^2",
          "(x^2 + y^2 + delta*x^3 + alpha*x^2*y + beta*x*y^2 + gamma*y^3)/2", "1",
          {"alpha", "beta", "gamma", "delta"}}},
        {"CR1",
         {"-y*(1 - 2*alpha*x - 2*x^2)", "x + alpha*(y^2 - x^2) + 2*x*y^2", "(x^2 + y^2)/(1 - 2*x*(alpha + x))",
          "(1 - 2*x*(alpha + x))^2/2", {"alpha"}}},
        {"S1", {"-y + x^2 - y^2", "x*(1 + 2*y)", "(x^2 + y^2)/(1 + 2*y)", "(1 + 2*y)^2/2", {}}},
        {"S2", {"-y + x^2", "x*(1 + y)", "(x^2 + y^2)/(1 + y)^2", "(1 + y)^3/2", {}}},
        {"S3",
         {"-y - 4/3*x^2", "x*(1 - 16/3*y)", "(16*x^4 - 24*x^2*y + 9*x^2 + 9*y^2)/(3 - 16*y)",
          "(16*y - 3)^2/(6*(32*x^2 - 24*y + 9))", {}}},
        {"S4",
         {"-y + 16/3*x^2 - 4/3*y^2", "x*(1 + 8/3*y)", "(9*x^2 + (3 + 4*y)^2*y^2)/(3 + 8*y)^4", "(3 + 8*y)^5/54",
          {}}},
    };
    auto it = entries.find(name);
    if (it == entries.end()) throw std::invalid_argument("unknown catalog system '" + std::string(name) + "'");
    const Entry& e = it->second;
    PerturbedSystem s;
    s.name = it->first;
    s.Z = {PlanarPoly::parse(e.P), PlanarPoly::parse(e.Q)};
    s.H = parse_expr(e.H);
    s.R = parse_expr(e.R);
    s.family = e.family;
    if (s.name == "H") {
        s.definitions["d"] = ParamPoly::parse(
            "alpha^3*beta - alpha*beta^3 + 6*alpha^2*beta*gamma - 2*beta^3*gamma + 9*alpha*beta*gamma^2"
            " + 2*alpha^3*delta - 6*alpha*beta^2*delta + 9*alpha^2*gamma*delta - 9*beta^2*gamma*delta"
            " - 27*gamma^3*delta - 9*alpha*beta*delta^2 + 27*gamma*delta^3");
    }
    Bindings used;
    for (const auto& [k, v] : family) {
        if (std::find(e.family.begin(), e.family.end(), k.name()) == e.family.end()) {
            throw std::invalid_argument("system '" + s.name + "' has no family parameter '" + k.name() + "'");
        }
        used[k] = v;
    }
    return s.bind_family(used);
}

std::vector<Param> perturbation_params(int order, int degree) {
    std::vector<Param> out;
    for (char slot : {'a', 'b'}) {
        for (int d = 1; d <= degree; ++d) {
            for (int k = d; k >= 0; --k) out.push_back(Param::perturbation(slot, order, k, d - k));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PerturbedSystem generic_perturbation(PerturbedSystem s, int order, int degree) {
    if (order != 1 && order != 2) throw std::invalid_argument("perturbation order must be 1 or 2");
    if (degree < 1 || degree > 9) throw std::invalid_argument("perturbation degree must be in 1..9");
    PlanarField f;
    for (int d = 1; d <= degree; ++d) {
        for (int k = 0; k <= d; ++k) {
            const auto uk = static_cast<unsigned>(k);
            const auto ul = static_cast<unsigned>(d - k);
            f.P.add(uk, ul, ParamPoly(Param::perturbation('a', order, k, d - k)));
            f.Q.add(uk, ul, ParamPoly(Param::perturbation('b', order, k, d - k)));
        }
    }
    (order == 1 ? s.Z1 : s.Z2) = std::move(f);
    return s;
}

PerturbedSystem parse_system(std::string_view text, std::string name) {
    PerturbedSystem s;
    s.name = std::move(name);
    std::optional<unsigned> degree;
    std::map<std::string, std::pair<PlanarPoly, int>> polys;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        try {
            if (key == "degree") {
                degree = static_cast<unsigned>(std::stoul(value));
            } else if (key == "name") {
                s.name = value;
            } else if (key == "params") {
                std::string v = value;
                std::erase(v, '[');
                std::erase(v, ']');
                std::istringstream ps(v);
                std::string item;
                while (std::getline(ps, item, ',')) {
                    item = trim(item);
                    if (!item.empty()) {
                        (void)Param(item);
                        s.family.push_back(item);
                    }
                }
            } else if (key == "P" || key == "Q" || key == "P1" || key == "Q1" || key == "P2" || key == "Q2") {
                if (polys.count(key)) fail("duplicate key '" + key + "'");
                polys[key] = {PlanarPoly::parse(value), lineno};
            } else if (key == "H") {
                s.H = parse_expr(value);
            } else if (key == "R") {
                s.R = parse_expr(value);
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const ParseError& e) {
            fail(e.what());
        } catch (const std::domain_error& e) {
            fail(e.what());
        } catch (const std::logic_error& e) {
            if (std::string(e.what()).rfind("line ", 0) == 0) throw;
            fail(e.what());
        }
    }
    lineno = 0;
    if (!polys.count("P") || !polys.count("Q")) fail("both P and Q are required");
    auto get = [&](const std::string& k) { return polys.count(k) ? polys[k].first : PlanarPoly(); };
    for (const auto& [key, pl] : polys) {
        lineno = pl.second;
        if (degree && pl.first.degree() > *degree) fail(key + " exceeds the declared degree");
        for (const auto& [e, c] : pl.first.coefficients()) {
            for (Param p : c.variables()) {
                const bool declared = std::find(s.family.begin(), s.family.end(), p.name()) != s.family.end();
                if (!declared && p.kind() != ParamKind::perturbation && !p.is_pi()) {
                    fail(key + " uses undeclared parameter '" + p.name() + "'");
                }
            }
        }
    }
    s.Z = {get("P"), get("Q")};
    if (polys.count("P1") || polys.count("Q1")) s.Z1 = PlanarField{get("P1"), get("Q1")};
    if (polys.count("P2") || polys.count("Q2")) s.Z2 = PlanarField{get("P2"), get("Q2")};
    lineno = polys["P"].second;
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return s;
}

PerturbedSystem load_system_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open system file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    std::string stem = path.substr(path.find_last_of('/') + 1);
    if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.erase(dot);
    return parse_system(ss.str(), stem);
}

}  // namespace mjets

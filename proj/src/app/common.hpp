#pragma once

#include <chrono>
#include <sstream>
#include <string>

#include "mjets/app/scenarios.hpp"

namespace mjets::detail {

inline ParamPoly P(const std::string& s) { return ParamPoly::parse(s); }

inline Jet first_jet(const std::string& name, unsigned j, const Substitution& cond = {}, int degree = 2,
                     const Bindings& family = {}) {
    return averaging_jet(cond.apply(generic_perturbation(catalog(name, family), 1, degree)), 1, j);
}

inline Check exact(const std::string& name, const ParamPoly& got, const ParamPoly& want, std::string deviation = {}) {
    Check c{name, got == want, {}, std::move(deviation)};
    if (!c.ok) c.detail = "got " + got.to_string() + ", expected " + want.to_string();
    return c;
}

inline Check holds(const std::string& name, bool ok, std::string detail = {}) {
    return Check{name, ok, std::move(detail), {}};
}

/// 1 / (c pi^k).
inline ParamPoly unit_inverse(const ParamPoly& u) {
    const Term& t = u.terms()[0];
    return ParamPoly(Monomial().divide(t.mono), Rational(1) / t.coef);
}

inline std::string fmt(long double v, int precision = 6) {
    std::ostringstream os;
    os.precision(precision);
    os << static_cast<double>(v);
    return os.str();
}

inline std::vector<unsigned> odd_orders(unsigned j) {
    std::vector<unsigned> out;
    for (unsigned k = 1; k <= j; k += 2) out.push_back(k);
    return out;
}

/// LV: b110 and b102 rewritten through A3, A4 before m2,1 = A1, m2,3 = A2
/// are solved in a210, b202.
Substitution lv_reparam_pre();
const std::vector<ReparamTarget>& lv_targets();

void first_order_scenarios(std::vector<Scenario>& out);
void second_order_scenarios(std::vector<Scenario>& out);
void numeric_scenarios(std::vector<Scenario>& out);

}  // namespace mjets::detail

#include <doctest.h>

#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "mjets/averaging/jet.hpp"

using namespace mjets;

namespace {

ParamPoly P(const char* s) { return ParamPoly::parse(s); }

Jet first_jet(const char* name, unsigned j, const Bindings& cond = {}, unsigned degree = 2) {
    return averaging_jet(generic_perturbation(catalog(name), 1, static_cast<int>(degree)).apply(cond), 1, j);
}

}  // namespace

TEST_CASE("catalog systems") {
    const auto lv = catalog("LV");
    CHECK(lv.Z.P == PlanarPoly::parse("-y*(1+x)"));
    CHECK(lv.Z.Q == PlanarPoly::parse("x*(1+y)"));
    CHECK(catalog("S2").Z.P == PlanarPoly::parse("-y + x^2"));
    const auto cr = catalog("CR1", {{Param("alpha"), ParamPoly()}});
    CHECK(cr.Z.P == PlanarPoly::parse("-y*(1 - 2*x^2)"));
    CHECK(cr.Z.Q == PlanarPoly::parse("x + 2*x*y^2"));
    CHECK(catalog("CR1").free_family() == std::vector<std::string>{"alpha"});
    CHECK_THROWS_AS((void)catalog("S9"), std::invalid_argument);

    CHECK(perturbation_params(1, 2).size() == 10);
    const auto cr3 = perturbation_params(1, 3);
    CHECK(cr3.size() == 18);
    CHECK(std::find(cr3.begin(), cr3.end(), Param("a130")) != cr3.end());
    CHECK(std::find(cr3.begin(), cr3.end(), Param("b121")) != cr3.end());
    CHECK(perturbation_params(1, 1).size() == 4);
}

TEST_CASE("first integrals reproduce the fields") {
    NumericBindings fam{{Param("alpha"), 0.3L}, {Param("beta"), -0.7L}, {Param("gamma"), 0.2L}, {Param("delta"), 0.5L}};
    for (const auto& name : catalog_names()) {
        const auto s = catalog(name);
        CHECK_NOTHROW(s.validate());
        REQUIRE(s.H);
        REQUIRE(s.R);
        const Expr Hx = s.H->diff("x"), Hy = s.H->diff("y");
        for (auto [x, y] : {std::pair{0.1L, -0.05L}, std::pair{-0.07L, 0.12L}, std::pair{0.02L, 0.03L}}) {
            NumericBindings v = fam;
            v[Param("x")] = x;
            v[Param("y")] = y;
            auto look = [&](const std::string& n) { return v.at(Param(n)); };
            const long double R = s.R->eval(look);
            CHECK(std::fabs(static_cast<double>(-R * Hy.eval(look) - s.Z.P.to_poly().evaluate(v))) < 1e-10);
            CHECK(std::fabs(static_cast<double>(R * Hx.eval(look) - s.Z.Q.to_poly().evaluate(v))) < 1e-10);
        }
    }
}

TEST_CASE("system file parsing") {
    const auto s = parse_system("name = toy\nparams = [alpha]\nP = -y + alpha*x^2\nQ = x\nP1 = a110*x\n");
    CHECK(s.name == "toy");
    CHECK(s.Z1.has_value());
    CHECK_THROWS_WITH_AS((void)parse_system("P = -y + x^2\nQ = x + kappa*y^2\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_system("P = -2*y\nQ = x\n"), doctest::Contains("line 1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_system("P = -y\nQ = x +\n"), doctest::Contains("line 2"), std::invalid_argument);
}

TEST_CASE("center check: l0,k vanishes at 2 pi") {
    for (const auto& name : catalog_names()) {
        const unsigned j = name == "H" ? 7 : 9;
        const FlowJet L0 = flow_jet_0(to_polar(catalog(name), j), j);
        CHECK(L0[1] == QuasiTrigPoly(ParamPoly(1)));
        for (unsigned k = 2; k <= j; ++k) {
            CHECK(L0[k].eval_2pi().is_zero());
            CHECK(L0[k].at_zero().is_zero());
        }
    }
    const PerturbedSystem linear{"linear", {PlanarPoly::parse("-y"), PlanarPoly::parse("x")}};
    const FlowJet L0 = flow_jet_0(to_polar(linear, 6), 6);
    for (unsigned k = 2; k <= 6; ++k) CHECK(L0[k].is_zero());
}

TEST_CASE("LV l0,2 against the numeric polar flow") {
    const FlowJet L0 = flow_jet_0(to_polar(catalog("LV"), 3), 3);
    using state = std::array<double, 1>;
    auto rhs = [](const state& r, state& drdt, double th) {
        const double c = std::cos(th), s = std::sin(th);
        drdt[0] = r[0] * r[0] * c * s * (s - c) / (1 + r[0] * c * s * (c + s));
    };
    for (double r0 : {0.01, 0.02, 0.04}) {
        state r{r0};
        const double th = 2.3;
        boost::numeric::odeint::integrate_adaptive(
            boost::numeric::odeint::make_controlled<boost::numeric::odeint::runge_kutta_dopri5<state>>(1e-14, 1e-14), rhs,
            r, 0.0, th, 1e-3);
        const double predicted = r0 + static_cast<double>(L0[2].evaluate(th, {})) * r0 * r0;
        CHECK(std::fabs(r[0] - predicted) < 2.0 * r0 * r0 * r0);
    }
}

TEST_CASE("first-order jets match the displayed coefficients") {
    const Jet lv = first_jet("LV", 3);
    CHECK(lv[1] == P("pi*(a110 + b101)"));
    // Engine sign; the printed m1,3 has the opposite overall sign.
    CHECK(lv[3] == -P("pi/8*(2*a120 + 2*a102 - a110 + 2*b120 + 2*b102 - b101)"));

    const Jet s4 = first_jet("S4", 5, {{Param("a110"), P("-b101")}});
    CHECK(s4[3] == P("pi*(9*a111 - 12*b102 - 40*b101 - 30*b120)/9"));
    CHECK(s4[5] == P("40*pi*(21*a111 - 48*b102 - 40*b101 - 60*b120)/81"));

    const Jet h = first_jet("H", 5, {{Param("a110"), P("-b101")}});
    CHECK(h[3] == P("-pi/8*((alpha + 3*gamma)*(a111 + 2*b102) + (beta + 3*delta)*(b111 + 2*a120))"));
    CHECK(h[5] ==
          P("-pi/128*((39*alpha*delta^2 + 27*gamma*delta^2 + 30*alpha*beta*delta + 30*beta*gamma*delta + 5*alpha^3"
            " + 15*alpha^2*gamma + 15*alpha*beta^2 + 35*alpha*gamma^2 + 35*beta^2*gamma + 105*gamma^3)*(a111 + 2*b102)"
            " + (117*delta^3 + 39*beta*delta^2 + 35*alpha^2*delta + 30*alpha*gamma*delta + 15*beta^2*delta"
            " + 15*gamma^2*delta + 15*alpha^2*beta + 30*alpha*beta*gamma + 5*beta^3 + 35*beta*gamma^2)*(b111 + 2*a120))"));

    const Jet cr = first_jet("CR1", 7, {{Param("a110"), P("-b101")}}, 3);
    CHECK(cr[3] == P("pi/4*(3*a130 + a112 + 4*alpha*a120 + 4*alpha*a102 + 3*b103 - 8*(alpha^2 + 1)*b101 + b121)"));
    CHECK(cr[5] == P("pi/4*((3*alpha^2 + 1)*a130 + (alpha^2 + 1)*a112 + 4*alpha^3*a120 + 4*alpha^3*a102"
                     " + (3*alpha^2 - 1)*b103 - 8*alpha^2*(alpha^2 + 1)*b101 + (alpha^2 - 1)*b121)"));
    CHECK(cr[7] == P("pi/16*((12*alpha^4 + 28*alpha^2 + 3)*a130 + (4*alpha^4 + 28*alpha^2 + 5)*a112"
                     " + 16*alpha^5*a120 + 16*alpha^5*a102 + (12*alpha^4 - 28*alpha^2 - 5)*b103"
                     " - 32*alpha^4*(alpha^2 + 1)*b101 + (4*alpha^4 - 28*alpha^2 - 3)*b121)"));
}

TEST_CASE("jets are additive in the perturbation and vanish without one") {
    const auto lv = catalog("LV");
    PerturbedSystem a = lv, b = lv, ab = lv;
    a.Z1 = PlanarField{PlanarPoly::parse("a110*x + 2*x*y"), PlanarPoly::parse("b120*x^2")};
    b.Z1 = PlanarField{PlanarPoly::parse("y^2 - a101*y"), PlanarPoly::parse("3*x")};
    ab.Z1 = PlanarField{PlanarPoly::parse("a110*x + 2*x*y + y^2 - a101*y"), PlanarPoly::parse("b120*x^2 + 3*x")};
    const Jet ja = averaging_jet(a, 1, 7), jb = averaging_jet(b, 1, 7), jab = averaging_jet(ab, 1, 7);
    for (unsigned k = 1; k <= 7; ++k) CHECK(jab[k] == ja[k] + jb[k]);

    PerturbedSystem zero = lv;
    zero.Z1 = PlanarField{};
    zero.Z2 = PlanarField{};
    const JetPair jp = averaging_jets(zero, 5);
    CHECK(jp.first.is_zero());
    CHECK(jp.second.is_zero());
    CHECK_THROWS_AS((void)averaging_jet(lv, 2, 3), std::invalid_argument);
}

TEST_CASE("second order: S4 and CR1 reparametrized values") {
    // Without first-order terms the second-order jet is the first-order jet
    // of Z2, doubled by the eps^2/2 normalization.
    auto s = generic_perturbation(catalog("S4"), 2, 2);
    s.Z1 = PlanarField{};
    const Jet m2 = averaging_jets(s, 5).second;
    const Jet m1 = averaging_jet(generic_perturbation(catalog("S4"), 1, 2), 1, 5);
    Bindings rename;
    for (Param p : perturbation_params(1, 2)) {
        rename.emplace(p, ParamPoly(Param::perturbation(p.info().slot, 2, p.info().xexp, p.info().yexp)));
    }
    for (unsigned k = 1; k <= 5; ++k) CHECK(m2[k] == m1[k].substitute(rename) * Rational(2));
}

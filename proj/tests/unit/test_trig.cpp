#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mjets/polar/polar_form.hpp"
#include "mjets/trig/rseries.hpp"

using namespace mjets;

namespace {

ParamPoly P(const char* s) { return ParamPoly::parse(s); }
const FourierPoly kCos = FourierPoly::cos(1);
const FourierPoly kSin = FourierPoly::sin(1);

}  // namespace

TEST_CASE("product to sum") {
    CHECK(kCos * kCos == FourierPoly(ParamPoly(Rational(1, 2))) + FourierPoly::cos(2, Rational(1, 2)));
    CHECK(kCos * kSin == FourierPoly::sin(2, Rational(1, 2)));
    const QuasiTrigPoly tc = QuasiTrigPoly::theta(1) * QuasiTrigPoly(kCos);
    CHECK(trig_mul(tc, kSin) == QuasiTrigPoly::theta(1) * QuasiTrigPoly(FourierPoly::sin(2, Rational(1, 2))));
    CHECK(FourierPoly::sin(3) * FourierPoly::sin(5) ==
          FourierPoly::cos(2, Rational(1, 2)) - FourierPoly::cos(8, Rational(1, 2)));
}

TEST_CASE("antiderivative") {
    CHECK(antiderivative(kCos) == QuasiTrigPoly(kSin));
    const QuasiTrigPoly cos2 = QuasiTrigPoly(kCos * kCos);
    const QuasiTrigPoly expect =
        QuasiTrigPoly::theta(1) * QuasiTrigPoly(ParamPoly(Rational(1, 2))) + QuasiTrigPoly(FourierPoly::sin(2, Rational(1, 4)));
    CHECK(antiderivative(cos2) == expect);
    const QuasiTrigPoly tc = QuasiTrigPoly::theta(1) * QuasiTrigPoly(kCos);
    CHECK(antiderivative(tc) ==
          QuasiTrigPoly::theta(1) * QuasiTrigPoly(kSin) + QuasiTrigPoly(kCos) - QuasiTrigPoly(ParamPoly(1)));
    // derivative inverts antiderivative on a mixed element
    const QuasiTrigPoly u = QuasiTrigPoly::theta(2) * QuasiTrigPoly(FourierPoly::sin(3, P("a110")) + FourierPoly(P("b101"))) +
                            QuasiTrigPoly(FourierPoly::cos(2, P("pi")));
    CHECK(antiderivative(u).derivative() == u);
    CHECK(antiderivative(u).at_zero().is_zero());
}

TEST_CASE("evaluation at 2 pi") {
    CHECK(eval_2pi(QuasiTrigPoly(kSin)).is_zero());
    CHECK(eval_2pi(antiderivative(QuasiTrigPoly(kCos * kCos))) == P("pi"));
    CHECK(eval_2pi(QuasiTrigPoly::theta(2) * QuasiTrigPoly(kCos)) == P("4*pi^2"));
    const QuasiTrigPoly u = QuasiTrigPoly::theta(1) * QuasiTrigPoly(FourierPoly::sin(2, P("a110")) + kCos);
    CHECK(u.evaluate(2 * std::numbers::pi_v<long double>, {{Param("a110"), 3.0L}}) ==
          doctest::Approx(static_cast<double>(eval_2pi(u).evaluate({{Param("a110"), 3.0L}}))));
}

TEST_CASE("series composition and d/dr") {
    RSeries id(3);
    id.coeff(1) = ParamPoly(1);
    RSeries L(3);
    L.coeff(1) = ParamPoly(1);
    L.coeff(2) = QuasiTrigPoly(kCos);
    L.coeff(3) = QuasiTrigPoly(kSin);
    CHECK(id.compose(L) == L);

    RSeries F(3);
    F.coeff(2) = ParamPoly(1);
    RSeries l2(3);
    l2.coeff(1) = ParamPoly(1);
    l2.coeff(2) = P("c2");
    const RSeries c = F.compose(l2);
    CHECK(c[2] == QuasiTrigPoly(ParamPoly(1)));
    CHECK(c[3] == QuasiTrigPoly(P("2*c2")));

    RSeries q(2);
    q.coeff(2) = QuasiTrigPoly(kCos);
    CHECK(q.d_dr()[1] == QuasiTrigPoly(FourierPoly::cos(1, 2)));
    RSeries k(2);
    k.coeff(0) = P("a110");
    CHECK(k.d_dr()[0].is_zero());
    CHECK(k.d_dr()[1].is_zero());
}

TEST_CASE("LV composition against a numeric Taylor oracle") {
    const auto lv = generic_perturbation(catalog("LV"), 1, 2);
    const PolarForm pf = to_polar(lv, 3);
    RSeries L0(3, true);
    L0.coeff(1) = ParamPoly(1);
    // l_{0,2} from the unperturbed flow: integral of the r^2 coefficient of F0
    L0.coeff(2) = antiderivative(pf.F0[2]);
    const RSeries comp = pf.F1.compose(L0);
    NumericBindings v;
    const char* names[] = {"a110", "a101", "a120", "a111", "a102", "b110", "b101", "b120", "b111", "b102"};
    double x = 0.3;
    for (const char* n : names) v[Param(n)] = (x = -x * 1.37 + 0.11);
    for (long double th : {0.3L, 1.7L, 4.1L}) {
        for (long double r : {1e-2L, 5e-3L}) {
            const long double Lr = L0.evaluate(th, r, v);
            const long double direct = pf.F1.evaluate(th, Lr, v);
            const long double series = comp.evaluate(th, r, v);
            CHECK(std::fabs(static_cast<double>(direct - series)) < 50 * std::pow(static_cast<double>(r), 4));
        }
    }
}

TEST_CASE("LV d/dr F0 against finite differences") {
    const PolarForm pf = to_polar(catalog("LV"), 4);
    const RSeries d = pf.F0.d_dr();
    auto exact = [](long double th, long double r) {
        const long double c = std::cos(th), s = std::sin(th);
        return r * r * c * s * (s - c) / (1 + r * c * s * (c + s));
    };
    for (long double th : {0.4L, 2.2L, 5.0L}) {
        const long double r = 1e-2L, h = 1e-6L;
        const long double fd = (exact(th, r + h) - exact(th, r - h)) / (2 * h);
        CHECK(std::fabs(static_cast<double>(fd - d.evaluate(th, r, {}))) < 1e-7);
    }
}

TEST_CASE("polar form of the LV field") {
    const PolarForm pf = to_polar(catalog("LV"), 4);
    const FourierPoly cs = kCos * kSin;
    CHECK(pf.f0[0] == QuasiTrigPoly(cs * (kSin - kCos)));
    CHECK(pf.g0[0] == QuasiTrigPoly(cs * (kCos + kSin)));
    CHECK(to_polar(PerturbedSystem{"linear", {PlanarPoly::parse("-y"), PlanarPoly::parse("x")}}, 5).F0 == RSeries(5, true));

    const PolarForm p1 = to_polar(generic_perturbation(catalog("LV"), 1, 2), 3);
    CHECK(eval_2pi(antiderivative(p1.F1[1])) == P("pi*a110 + pi*b101"));
    CHECK_THROWS_AS((void)to_polar(catalog("LV"), 18), std::out_of_range);
}

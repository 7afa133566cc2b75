#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "mjets/numeric/numeric.hpp"
#include "mjets/solver/substitution.hpp"

using namespace mjets;

namespace {

NumericBindings zeros(int degree) {
    NumericBindings v;
    for (Param p : perturbation_params(1, degree)) v[p] = 0;
    return v;
}

NumericBindings random_values(const std::vector<Param>& ps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    NumericBindings v;
    for (Param p : ps) v[p] = u(rng);
    return v;
}

}  // namespace

TEST_CASE("return map of an unperturbed center is the identity") {
    for (const char* name : {"LV", "S1", "S2", "S3", "S4", "H", "CR1"}) {
        CAPTURE(name);
        Bindings fam;
        for (const auto& f : catalog(name).family) fam[Param(f)] = ParamPoly(Rational(1, 5));
        NumericBinding b;
        const ReturnResult r = return_map(catalog(name, fam), b, 0.1L);
        CHECK(std::fabs(static_cast<double>(r.r1 - 0.1L)) < 1e-10);
    }
    NumericBinding b;
    CHECK(std::fabs(static_cast<double>(return_map(catalog("S2"), b, 0.5L).r1 - 0.5L)) < 1e-10);
}

TEST_CASE("LV return map with a110 = 1") {
    NumericBinding b;
    b.values = zeros(2);
    b.values[Param("a110")] = 1;
    b.eps = 1e-3L;
    const ReturnResult r = return_map(generic_perturbation(catalog("LV"), 1, 2), b, 0.1L);
    // Reference from an independent integration at tolerance 1e-13.
    CHECK(std::fabs(static_cast<double>(r.r1 - 0.1L) - 3.25576e-4) < 5e-9);
    CHECK(r.error < 1e-12L);
    // Leading order: eps (pi r + pi r^3/8)
    const long double lead = 1e-3L * std::numbers::pi_v<long double> * (0.1L + 0.001L / 8);
    CHECK(std::fabs(static_cast<double>((r.r1 - 0.1L) - lead)) < 2e-5);
}

TEST_CASE("non-return and tolerance errors") {
    NumericBinding b;
    CHECK_THROWS_AS((void)return_map(catalog("S4"), b, 0.3L), IntegrationFailure);
    b.abs_tol = 1e-20L;
    CHECK_THROWS_AS((void)return_map(catalog("LV"), b, 0.1L), std::invalid_argument);
}

TEST_CASE("integration is reversible and converges") {
    const auto s = generic_perturbation(catalog("LV"), 1, 2);
    NumericBinding b;
    b.values = random_values(perturbation_params(1, 2), 7);
    b.eps = 1e-2L;
    const ReturnResult tight = return_map(s, b, 0.2L);
    NumericBinding half = b;
    half.abs_tol = half.rel_tol = 5e-15L;
    const ReturnResult tighter = return_map(s, half, 0.2L);
    CHECK(std::fabs(static_cast<double>(tight.r1 - tighter.r1)) <= std::max(1e-15, 10 * static_cast<double>(tight.error)));

    // Reversed field: x -> x, t -> -t maps the flow to its inverse, which is
    // the flow of (-P, -Q) run clockwise; reflect y to keep the section.
    PerturbedSystem rev = s;
    auto flip = [](const PlanarPoly& p, bool negate) {
        PlanarPoly out;
        for (const auto& [e, c] : p.coefficients()) {
            const bool odd = e.second % 2 == 1;
            out.add(e.first, e.second, (odd != negate) ? -c : c);
        }
        return out;
    };
    // (x, y) -> (x, -y) with t -> -t: P(x,-y) -> -P, Q(x,-y) stays.
    rev.Z = {flip(s.Z.P, true), flip(s.Z.Q, false)};
    rev.Z1 = PlanarField{flip(s.Z1->P, true), flip(s.Z1->Q, false)};
    const ReturnResult back = return_map(rev, b, tight.r1);
    CHECK(std::fabs(static_cast<double>(back.r1 - 0.2L)) < 1e-12);
}

TEST_CASE("Melnikov line integral") {
    CHECK(std::fabs(static_cast<double>(melnikov_line_integral(catalog("LV"), {}, 0.3L))) < 1e-12);

    const auto lv = generic_perturbation(catalog("LV"), 1, 2);
    NumericBindings v = random_values(perturbation_params(1, 2), 11);
    v[Param("a110")] = -v[Param("b101")];
    v[Param("a102")] = -v[Param("b102")] - v[Param("a120")] - v[Param("b120")];
    for (long double r : {0.3L, 0.6L}) CHECK(std::fabs(static_cast<double>(melnikov_line_integral(lv, v, r))) < 1e-8);

    // a110 = 1 only: same sign pattern as the jet prediction, opposite
    // orientation convention.
    NumericBindings one = zeros(2);
    one[Param("a110")] = 1;
    const Jet m1 = averaging_jet(lv, 1, 9);
    for (long double r : {0.05L, 0.1L, 0.2L}) {
        const long double I = melnikov_line_integral(lv, one, r);
        const long double J = m1.evaluate(r, one);
        CHECK(I != 0);
        CHECK(-I / J > 0);
    }
}

TEST_CASE("order fit harness") {
    const std::vector<long double> eps{1e-2L, 3e-3L, 1e-3L};
    const auto sq = epsilon_order_fit([](long double r, long double e) { return r * e * e; }, eps, {0.1L, 0.2L}, 2, 0.01L,
                                      0);
    CHECK(sq.agrees);
    const auto flat = epsilon_order_fit([](long double, long double) { return 1e-6L; }, eps, {0.1L}, 0, 0.01L, 0);
    CHECK(flat.fits[0].slope == doctest::Approx(0).epsilon(1e-12));
    const auto noise = epsilon_order_fit([](long double, long double) { return 1e-20L; }, eps, {0.1L}, 0, 1, 1e-15L);
    CHECK(noise.fits[0].inconclusive);
    CHECK(!noise.agrees);
}

TEST_CASE("profiles and cycle counting") {
    DisplacementProfile p;
    p.r = {0.1L, 0.2L, 0.3L, 0.4L};
    p.d = {1e-6L, 2e-6L, 3e-6L, 4e-6L};
    p.err = {1e-12L, 1e-12L, 1e-12L, 1e-12L};
    p.flag = {"ok", "ok", "ok", "ok"};
    CHECK(count_cycles(p).count == 0);

    p.d = {1e-6L, -2e-6L, -1e-13L, 4e-6L};
    p.sign_changes = {0, 2};
    const CycleCount c = count_cycles(p, [](long double r) { return (r - 0.25L) * (r - 0.15L); });
    CHECK(c.count == 1);
    CHECK(c.uncertain == std::vector<std::size_t>{2});
    CHECK(static_cast<double>(c.radii[0]) == doctest::Approx(0.15).epsilon(1e-6));

    NumericBinding b;
    const DisplacementProfile s4 = displacement_profile(catalog("S4"), b, {0.05L, 0.1L, 0.15L, 0.3L, 0.4L});
    CHECK(s4.r.size() == 4);
    CHECK(s4.flag.back() != "ok");
    std::ostringstream os;
    write_csv(os, s4);
    CHECK(os.str().rfind("r,d,err,flag\n", 0) == 0);
    CHECK_THROWS_AS((void)displacement_profile(catalog("S4"), b, {0.1L, 0.05L}), std::invalid_argument);
}

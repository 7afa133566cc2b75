#include <doctest.h>

#include "mjets/solver/solver.hpp"

using namespace mjets;

namespace {

ParamPoly P(const char* s) { return ParamPoly::parse(s); }

Jet first_jet(const char* name, unsigned j, const Bindings& cond = {}, int degree = 2) {
    return averaging_jet(generic_perturbation(catalog(name), 1, degree).apply(cond), 1, j);
}

Bindings as_map(const Substitution& s) { return s.composed(); }

}  // namespace

TEST_CASE("determinant and rank") {
    CHECK(determinant({{P("a"), P("b")}, {P("c"), P("d")}}) == P("a*d - b*c"));
    CHECK(determinant({{P("0"), P("1")}, {P("1"), P("0")}}) == P("-1"));
    CHECK(determinant({{P("x"), P("y"), P("1")}, {P("x^2"), P("y^2"), P("1")}, {P("1"), P("1"), P("1")}}) ==
          P("x*y^2 - x^2*y - y^2 + x^2 + y - x"));
    CHECK(determinant({}) == P("1"));
    CHECK(symbolic_rank({{P("a"), P("b")}, {P("2*a"), P("2*b")}}) == 1);
    CHECK(symbolic_rank({{P("0"), P("a"), P("b")}, {P("0"), P("c"), P("d")}}) == 2);
}

TEST_CASE("LV: solving m1,1 = m1,3 = 0 gives the vanishing conditions") {
    const Jet j = first_jet("LV", 3);
    const SolveResult r = solve_vanishing(j, {1, 3}, {Param("a110"), Param("a102")});
    const Bindings b = as_map(r.substitution);
    CHECK(b.at(Param("a110")) == P("-b101"));
    CHECK(b.at(Param("a102")) == P("-b102 - a120 - b120"));
    CHECK(r.substitution.apply(j).is_zero());
}

TEST_CASE("H: determinant 5 pi^2 d/512 and the d != 0 branch") {
    const auto h = catalog("H");
    const ParamPoly d = h.definitions.at("d");
    const Jet j = first_jet("H", 5, {{Param("a110"), P("-b101")}});
    const std::vector<Param> unknowns{Param("a111"), Param("b111")};

    const ParamPoly::LinearForm row = j[3].collect_linear(unknowns);
    CHECK(row.coefficients[0] == P("-pi*(alpha + 3*gamma)/8"));
    CHECK(row.coefficients[1] == P("-pi*(beta + 3*delta)/8"));
    CHECK(row.remainder == P("-pi/8*(2*(alpha + 3*gamma)*b102 + 2*(beta + 3*delta)*a120)"));
    CHECK(P("17").collect_linear(unknowns).remainder == P("17"));

    CHECK_THROWS_AS((void)solve_vanishing(j, {3, 5}, unknowns), SolveObstruction);
    try {
        (void)solve_vanishing(j, {3, 5}, unknowns);
    } catch (const SolveObstruction& e) {
        CHECK(e.determinant == P("5*pi^2/512") * d);
    }
    Assumptions dn;
    dn.nonzero.push_back(d);
    const SolveResult r = solve_vanishing(j, {3, 5}, unknowns, dn);
    CHECK(r.determinant == P("5*pi^2/512") * d);
    const Bindings b = as_map(r.substitution);
    CHECK(b.at(Param("a111")) == P("-2*b102"));
    CHECK(b.at(Param("b111")) == P("-2*a120"));

    // Degenerate branch: the 2x2 matrix is zero.
    Assumptions deg;
    deg.zero = {P("alpha + 3*gamma"), P("beta + 3*delta")};
    CHECK_THROWS_WITH_AS((void)solve_vanishing(j, {3, 5}, unknowns, deg), doctest::Contains("vanishes identically"),
                         SolveObstruction);
}

TEST_CASE("CR1: the unique solution of m1,3 = m1,5 = m1,7 = 0") {
    const Jet j = first_jet("CR1", 7, {{Param("a110"), P("-b101")}}, 3);
    const SolveResult r = solve_vanishing(j, {3, 5, 7}, {Param("a130"), Param("a112"), Param("b103")});
    CHECK(r.determinant.is_unit());
    const Bindings b = as_map(r.substitution);
    CHECK(b.at(Param("a130")) == P("b121"));
    const ParamPoly rhs = P("-alpha*(a120 + a102) + 2*(alpha^2 + 1)*b101 - b121");
    CHECK(b.at(Param("a112")) == rhs);
    CHECK(b.at(Param("b103")) == rhs);
    CHECK(r.substitution.apply(j).is_zero());
}

TEST_CASE("solver errors") {
    Jet j;
    j.order = 1;
    j.m = {ParamPoly(), P("a*b + c"), P("a + b")};
    CHECK_THROWS_AS((void)solve_vanishing(j, {1, 2}, {Param("a"), Param("b")}), std::domain_error);
    j.m = {ParamPoly(), P("x*a + b"), P("a + b")};
    CHECK_THROWS_WITH_AS((void)solve_vanishing(j, {1, 2}, {Param("a"), Param("b")}),
                         doctest::Contains("not invertible"), SolveObstruction);
    CHECK_THROWS_AS((void)solve_vanishing(j, {1}, {Param("a"), Param("b")}), std::invalid_argument);
}

TEST_CASE("generic rank and cycle bounds") {
    struct Case {
        const char* name;
        unsigned j;
        int degree;
        unsigned rank;
    };
    for (const Case& c : {Case{"LV", 3, 2, 2}, Case{"S2", 5, 2, 3}, Case{"S3", 5, 2, 3}, Case{"S4", 5, 2, 3},
                          Case{"CR1", 7, 3, 4}, Case{"H", 5, 2, 3}}) {
        CAPTURE(c.name);
        const Jet jet = first_jet(c.name, c.j, {}, c.degree);
        std::vector<unsigned> odd;
        for (unsigned k = 1; k <= c.j; k += 2) odd.push_back(k);
        const RankReport rep = generic_rank(jet, odd);
        CHECK(rep.rank == c.rank);
        CHECK(rep.cycle_bound == c.rank - 1);
        CHECK(rep.stable_points == rep.tried_points);
        CHECK(rep.tried_points == 20);
        CHECK(!rep.witness.empty());
    }
}

TEST_CASE("reparametrization round trip") {
    Jet j;
    j.order = 2;
    j.m = {ParamPoly(), P("2*pi*a + b^2"), P("b + 3*a*c"), P("pi^2*c + a*b")};
    const std::vector<ReparamTarget> t{{1, Param("A1"), ParamPoly(1), Param("a")},
                                       {3, Param("A2"), P("pi"), Param("c")}};
    const Reparametrization r = reparametrize(j, t);
    CHECK(r.jet[1] == P("A1"));
    CHECK(r.jet[3] == P("pi*A2"));
    CHECK(r.inverse.apply(r.jet) == j);
    CHECK(reparametrize(j, {}).jet == j);
    CHECK_THROWS_AS((void)reparametrize(j, {{2, Param("A1"), ParamPoly(1), Param("a")}}), std::domain_error);
}

TEST_CASE("transversality probe") {
    Jet j;
    j.order = 2;
    j.m = {ParamPoly(), P("A1"), P("A2"), P("A5*A6")};
    CHECK(transversality_probe(j, {}, {1, 2}, {Param("A1"), Param("A2")}) == P("1"));
    CHECK(transversality_probe(j, {{Param("A5"), P("0")}, {Param("A6"), P("0")}}, {1, 3}, {Param("A1"), Param("A5")})
              .is_zero());
    CHECK(transversality_probe(j, {}, {1, 2}, {Param("A1"), Param("A9")}).is_zero());
    Assumptions a;
    a.nonzero.push_back(P("A6"));
    CHECK_THROWS_AS((void)transversality_probe(j, {{Param("A6"), P("0")}}, {1, 3}, {Param("A1"), Param("A5")}, a),
                    std::domain_error);
}

TEST_CASE("scripts") {
    const Script s = parse_script("# H branch\na110 = -b101\nlet e = alpha + 3*gamma\nassume e != 0\nassume beta = 0\n");
    REQUIRE(s.substitution.bindings.size() == 1);
    CHECK(s.substitution.bindings[0].second == P("-b101"));
    CHECK(s.assumptions.nonzero.at(0) == P("alpha + 3*gamma"));
    CHECK(s.assumptions.zero.at(0) == P("beta"));
    CHECK_THROWS_WITH_AS((void)parse_script("a110 = -b101\n2*a110 = 3\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_script("a110 = b101\nb101 = a110\n"), doctest::Contains("triangular"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_script("a110 = zeta\n", {}, perturbation_params(1, 2)),
                         doctest::Contains("undeclared"), std::invalid_argument);
    const Script d = parse_script("assume d != 0\n", catalog("H").definitions);
    CHECK(d.assumptions.nonzero.at(0) == catalog("H").definitions.at("d"));
}

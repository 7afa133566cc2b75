#include <chrono>
#include <cmath>

#include "common.hpp"

namespace mjets::detail {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void lv_first_order(ScenarioResult& r) {
    const Jet j = first_jet("LV", 3);
    const ParamPoly shown = P("pi/8*(2*a120 + 2*a102 - a110 + 2*b120 + 2*b102 - b101)");
    r.checks.push_back(exact("m1,1 = pi(a110 + b101)", j[1], P("pi*(a110 + b101)")));
    r.checks.push_back(exact("m1,3 equals the displayed value", j[3], shown,
                             "the displayed m1,3 has the wrong overall sign; the return map confirms the engine"));
    r.checks.push_back(exact("m1,3 equals minus the displayed value", j[3], -shown));

    // Only a120 = 1: d/eps must follow the engine jet, not the displayed one.
    const auto lv = generic_perturbation(catalog("LV"), 1, 2);
    const Jet j7 = averaging_jet(lv, 1, 7);
    NumericBinding b;
    for (Param p : perturbation_params(1, 2)) b.values[p] = 0;
    b.values[Param("a120")] = 1;
    b.eps = 1e-4L;
    b.abs_tol = b.rel_tol = 1e-16L;
    for (long double rad : {0.05L, 0.1L}) {
        const long double d = (return_map(lv, b, rad).r1 - rad) / b.eps;
        const long double jet = j7.evaluate(rad, b.values);
        const long double displayed = shown.evaluate(b.values) * rad * rad * rad;
        r.checks.push_back(holds("return map at r = " + fmt(rad) + " follows the engine jet",
                                 std::fabs(d - jet) <= 0.01L * std::fabs(jet) && (d < 0) != (displayed < 0),
                                 "d/eps = " + fmt(d) + ", jet " + fmt(jet) + ", displayed " + fmt(displayed)));
    }

    const SolveResult sol = solve_vanishing(j, {1, 3}, {Param("a110"), Param("a102")});
    const Bindings c = sol.substitution.composed();
    r.checks.push_back(exact("solution a110", c.at(Param("a110")), P("-b101")));
    r.checks.push_back(exact("solution a102", c.at(Param("a102")), P("-b102 - a120 - b120")));
    r.checks.push_back(holds("3-jet vanishes under the conditions", sol.substitution.apply(j).is_zero()));
    const Jet after1 = first_jet("LV", 3, [] {
        Substitution s;
        s.append(Param("a110"), P("-b101"));
        return s;
    }());
    r.checks.push_back(holds("m1,1 = 0 does not force m1,3 = 0", after1[1].is_zero() && !after1[3].is_zero()));
    r.notes.push_back("m1,1 = " + j[1].to_string());
    r.notes.push_back("m1,3 = " + j[3].to_string());
}

void h_first_order(ScenarioResult& r) {
    const auto h = catalog("H");
    const ParamPoly d = h.definitions.at("d");
    Substitution pre;
    pre.append(Param("a110"), P("-b101"));
    const Jet j = first_jet("H", 5, pre);
    r.checks.push_back(
        exact("m1,3", j[3], P("-pi/8*((alpha + 3*gamma)*(a111 + 2*b102) + (beta + 3*delta)*(b111 + 2*a120))")));
    r.checks.push_back(exact(
        "m1,5", j[5],
        P("-pi/128*((39*alpha*delta^2 + 27*gamma*delta^2 + 30*alpha*beta*delta + 30*beta*gamma*delta + 5*alpha^3"
          " + 15*alpha^2*gamma + 15*alpha*beta^2 + 35*alpha*gamma^2 + 35*beta^2*gamma + 105*gamma^3)*(a111 + 2*b102)"
          " + (117*delta^3 + 39*beta*delta^2 + 35*alpha^2*delta + 30*alpha*gamma*delta + 15*beta^2*delta"
          " + 15*gamma^2*delta + 15*alpha^2*beta + 30*alpha*beta*gamma + 5*beta^3 + 35*beta*gamma^2)*(b111 + 2*a120))")));
    r.checks.push_back(exact("d", d,
                             P("alpha^3*beta - alpha*beta^3 + 6*alpha^2*beta*gamma - 2*beta^3*gamma + 9*alpha*beta*gamma^2"
                               " + 2*alpha^3*delta - 6*alpha*beta^2*delta + 9*alpha^2*gamma*delta - 9*beta^2*gamma*delta"
                               " - 27*gamma^3*delta - 9*alpha*beta*delta^2 + 27*gamma*delta^3")));
    const std::vector<Param> unknowns{Param("a111"), Param("b111")};
    const LinearSystem ls = linear_system(j, {3, 5}, unknowns);
    r.checks.push_back(exact("determinant of the (m1,3, m1,5) system", determinant(ls.matrix), P("5*pi^2/512") * d));

    bool blocked = false;
    try {
        (void)solve_vanishing(j, {3, 5}, unknowns);
    } catch (const SolveObstruction&) {
        blocked = true;
    }
    r.checks.push_back(holds("solve without assumptions reports the obstruction", blocked));
    Assumptions dn;
    dn.nonzero.push_back(d);
    const SolveResult sol = solve_vanishing(j, {3, 5}, unknowns, dn);
    const Bindings c = sol.substitution.composed();
    r.checks.push_back(exact("d != 0 branch: a111", c.at(Param("a111")), P("-2*b102")));
    r.checks.push_back(exact("d != 0 branch: b111", c.at(Param("b111")), P("-2*a120")));
    r.checks.push_back(holds("5-jet vanishes on the d != 0 branch", sol.substitution.apply(j).is_zero()));
    r.notes.push_back("determinant = " + determinant(ls.matrix).to_string());
}

void cr1_first_order(ScenarioResult& r) {
    Substitution pre;
    pre.append(Param("a110"), P("-b101"));
    const Jet j = first_jet("CR1", 7, pre, 3);
    r.checks.push_back(
        exact("m1,3", j[3], P("pi/4*(3*a130 + a112 + 4*alpha*a120 + 4*alpha*a102 + 3*b103 - 8*(alpha^2 + 1)*b101 + b121)")));
    r.checks.push_back(exact("m1,5", j[5],
                             P("pi/4*((3*alpha^2 + 1)*a130 + (alpha^2 + 1)*a112 + 4*alpha^3*a120 + 4*alpha^3*a102"
                               " + (3*alpha^2 - 1)*b103 - 8*alpha^2*(alpha^2 + 1)*b101 + (alpha^2 - 1)*b121)")));
    r.checks.push_back(exact("m1,7", j[7],
                             P("pi/16*((12*alpha^4 + 28*alpha^2 + 3)*a130 + (4*alpha^4 + 28*alpha^2 + 5)*a112"
                               " + 16*alpha^5*a120 + 16*alpha^5*a102 + (12*alpha^4 - 28*alpha^2 - 5)*b103"
                               " - 32*alpha^4*(alpha^2 + 1)*b101 + (4*alpha^4 - 28*alpha^2 - 3)*b121)")));
    const SolveResult sol = solve_vanishing(j, {3, 5, 7}, {Param("a130"), Param("a112"), Param("b103")});
    r.checks.push_back(holds("unique solution (unit determinant)", sol.determinant.is_unit(),
                             "determinant " + sol.determinant.to_string()));
    const Bindings c = sol.substitution.composed();
    const ParamPoly rhs = P("-alpha*(a120 + a102) + 2*(alpha^2 + 1)*b101 - b121");
    r.checks.push_back(exact("a130", c.at(Param("a130")), P("b121")));
    r.checks.push_back(exact("a112", c.at(Param("a112")), rhs));
    r.checks.push_back(exact("b103", c.at(Param("b103")), rhs));
    r.checks.push_back(holds("7-jet vanishes under the conditions", sol.substitution.apply(j).is_zero()));

    const Jet full = first_jet("CR1", 7, {}, 3);
    const RankReport rank = generic_rank(full, {1, 3, 5, 7});
    const RankReport rank5 = generic_rank(full, {1, 3, 5});
    r.checks.push_back(holds("rank 4, bound 3", rank.rank == 4 && rank.cycle_bound == 3,
                             "rank " + std::to_string(rank.rank)));
    r.checks.push_back(holds("m1,7 is independent of m1,1..m1,5", rank5.rank == 3));
    r.notes.push_back("rank " + std::to_string(rank.rank) + " -> at least " + std::to_string(rank.cycle_bound) +
                      " limit cycles");
}

void isochronous_first_order(ScenarioResult& r) {
    Substitution pre;
    pre.append(Param("a110"), P("-b101"));
    const Jet s4 = first_jet("S4", 5, pre);
    r.checks.push_back(exact("S4 m1,3", s4[3], P("pi*(9*a111 - 12*b102 - 40*b101 - 30*b120)/9")));
    r.checks.push_back(exact("S4 m1,5", s4[5], P("40*pi*(21*a111 - 48*b102 - 40*b101 - 60*b120)/81")));

    struct Case {
        const char* name;
        unsigned j;
        unsigned bound;
        bool check_conditions;
    };
    for (const Case& c : {Case{"LV", 3, 1, true}, Case{"S1", 3, 1, true}, Case{"S2", 5, 2, true},
                          Case{"S3", 5, 2, true}, Case{"S4", 5, 2, true}, Case{"H", 5, 2, true}}) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::string name = c.name;
        const Jet jet = first_jet(name, c.j);
        if (c.check_conditions) {
            const Substitution cond = vanishing_conditions(name);
            r.checks.push_back(holds(name + ": " + std::to_string(c.j) + "-jet vanishes under the conditions",
                                     cond.apply(jet).is_zero()));
            const RankReport lower = generic_rank(jet, odd_orders(c.j - 2));
            const RankReport all = generic_rank(jet, odd_orders(c.j));
            r.checks.push_back(holds(name + ": conditions are necessary (rank = number of conditions)",
                                     all.rank == cond.bindings.size(), "rank " + std::to_string(all.rank)));
            r.checks.push_back(holds(name + ": the " + std::to_string(c.j - 2) + "-jet does not force the " +
                                         std::to_string(c.j) + "-jet",
                                     lower.rank < all.rank));
        }
        const RankReport rank = generic_rank(jet, odd_orders(c.j));
        r.checks.push_back(holds(name + ": cycle bound " + std::to_string(c.bound), rank.cycle_bound == c.bound,
                                 "rank " + std::to_string(rank.rank)));
        r.notes.push_back(name + ": rank " + std::to_string(rank.rank) + " -> bound " +
                          std::to_string(rank.cycle_bound));
        const double t = seconds_since(t0);
        r.checks.push_back(holds(name + " within 60 s", t <= 60, fmt(t, 3) + " s"));
    }
}

void even_coefficients(ScenarioResult& r) {
    for (const std::string& name : catalog_names()) {
        const int degree = name == "CR1" ? 3 : 2;
        const Jet jet = first_jet(name, 7, vanishing_conditions(name), degree);
        for (unsigned k : {2u, 4u, 6u}) {
            r.checks.push_back(holds(name + " m1," + std::to_string(k) + " = 0", jet[k].is_zero(),
                                     jet[k].to_string()));
        }
        r.notes.push_back(name + ": 7-jet " + (jet.is_zero() ? "vanishes" : "does not vanish") +
                          " under its conditions");
    }
}

}  // namespace

void first_order_scenarios(std::vector<Scenario>& out) {
    out.push_back({"th-lh1-LV", 1, "LV first-order 3-jet and its vanishing conditions", 5, lv_first_order});
    out.push_back({"msHc-H", 2, "H first-order 5-jet, determinant 5 pi^2 d/512", 60, h_first_order});
    out.push_back({"CR-CR1", 3, "CR1 first-order 7-jet, unique conditions, rank 4", 120, cr1_first_order});
    out.push_back({"isochronous-first-order", 4, "S1-S4 first-order jets and rank bounds", 360,
                   isochronous_first_order});
    out.push_back({"even-coefficients", 5, "even first-order coefficients vanish under the conditions", 600,
                   even_coefficients});
}

}  // namespace mjets::detail

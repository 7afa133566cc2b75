#include <algorithm>
#include <chrono>

#include "common.hpp"

namespace mjets {

using detail::P;

Outcome ScenarioResult::outcome() const {
    bool deviation = false;
    for (const Check& c : checks) {
        if (c.ok) continue;
        if (c.deviation.empty()) return Outcome::fail;
        deviation = true;
    }
    if (checks.empty()) return Outcome::fail;
    return deviation ? Outcome::deviation : Outcome::pass;
}

const std::vector<Scenario>& scenarios() {
    static const std::vector<Scenario> all = [] {
        std::vector<Scenario> out;
        detail::first_order_scenarios(out);
        detail::second_order_scenarios(out);
        detail::numeric_scenarios(out);
        std::stable_sort(out.begin(), out.end(),
                         [](const Scenario& a, const Scenario& b) { return a.criterion < b.criterion; });
        return out;
    }();
    return all;
}

const Scenario& find_scenario(const std::string& id) {
    for (const Scenario& s : scenarios()) {
        if (s.id == id) return s;
    }
    throw std::invalid_argument("unknown reproduction target '" + id + "'");
}

ScenarioResult run_scenario(const Scenario& s) {
    ScenarioResult r;
    r.id = s.id;
    r.criterion = s.criterion;
    r.title = s.title;
    r.budget_seconds = s.budget_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        s.run(r);
    } catch (const std::exception& e) {
        r.checks.push_back(detail::holds("completed", false, e.what()));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.checks.push_back(detail::holds("within " + detail::fmt(s.budget_seconds, 4) + " s", r.seconds <= s.budget_seconds,
                                     "took " + detail::fmt(r.seconds, 4) + " s"));
    return r;
}

Substitution vanishing_conditions(const std::string& system) {
    Substitution s;
    auto add = [&s](const char* p, const char* v) { s.append(Param(p), P(v)); };
    if (system == "LV") {
        add("a110", "-b101");
        add("a102", "-b102 - a120 - b120");
    } else if (system == "S1") {
        add("a110", "-b101");
        add("b101", "(b102 + b120)/2");
    } else if (system == "S2") {
        add("a110", "-b101");
        add("b102", "a111");
        add("b120", "0");
    } else if (system == "S3") {
        add("a110", "-b101");
        add("b101", "-(3*b102 + 4*b120)/16");
        add("a111", "-b102/2");
    } else if (system == "S4") {
        add("a110", "-b101");
        add("a111", "8*b101 + 4*b120");
        add("b102", "8/3*b101 + 1/2*b120");
    } else if (system == "H") {
        add("a110", "-b101");
        add("a111", "-2*b102");
        add("b111", "-2*a120");
    } else if (system == "CR1") {
        add("a110", "-b101");
        add("a130", "b121");
        add("a112", "-alpha*(a120 + a102) + 2*(alpha^2 + 1)*b101 - b121");
        add("b103", "-alpha*(a120 + a102) + 2*(alpha^2 + 1)*b101 - b121");
    } else {
        throw std::invalid_argument("no vanishing conditions for '" + system + "'");
    }
    s.provenance = system + " first-order vanishing conditions";
    return s;
}

}  // namespace mjets

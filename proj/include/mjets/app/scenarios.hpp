#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mjets/numeric/numeric.hpp"
#include "mjets/solver/solver.hpp"

namespace mjets {

/// One comparison inside a scenario. A check marked `deviation` compares
/// against a published value known to be misprinted; its failure is reported
/// but does not count as a regression as long as every other check passes.
struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
    std::string deviation;
};

enum class Outcome { pass, deviation, fail };

struct ScenarioResult {
    std::string id;
    unsigned criterion = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;
    double budget_seconds = 0;
    /// Free-form lines for the report (relations, counts, radii).
    std::vector<std::string> notes;

    [[nodiscard]] Outcome outcome() const;
};

struct Scenario {
    std::string id;
    unsigned criterion = 0;
    std::string title;
    double budget_seconds = 0;
    std::function<void(ScenarioResult&)> run;
};

/// Registered reproduction targets, in criterion order.
const std::vector<Scenario>& scenarios();
/// Throws std::invalid_argument for an unknown id.
const Scenario& find_scenario(const std::string& id);
/// Runs the scenario, timing it against its budget. Exceptions thrown by the
/// scenario become failed checks.
ScenarioResult run_scenario(const Scenario& s);

/// Condition sets that annihilate the first-order averaging function for
/// the catalog systems (H on its d != 0 branch), as substitutions in the
/// degree-2 (degree-3 for CR1) first-order parameters.
Substitution vanishing_conditions(const std::string& system);

/// A second-order parameter point whose M2 7-jet has two prescribed simple
/// zeros, for LV or S4.
struct TwoCyclePoint {
    PerturbedSystem system;
    NumericBindings values;
    /// The prescribed zeros of the jet polynomial.
    std::vector<long double> predicted;
    /// Distinct zeros of the jet polynomial in (0, window], by a Sturm
    /// sequence over Q.
    unsigned zeros_in_window = 0;
    bool simple = false;
    long double window = 0;
    /// The 7-jet at the point, up to a factor pi^k.
    std::vector<Rational> jet_polynomial;
    /// Profile grid, offset from the prescribed zeros.
    std::vector<long double> grid;
};

TwoCyclePoint two_cycle_point(const std::string& system);

}  // namespace mjets

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mjets/averaging/jet.hpp"

namespace mjets {

/// Side conditions for the solver: polynomials declared nonzero (usable as
/// divisors) and polynomials declared zero (eliminated before solving).
/// pi is always nonzero.
struct Assumptions {
    std::vector<ParamPoly> nonzero;
    std::vector<ParamPoly> zero;

    [[nodiscard]] bool empty() const { return nonzero.empty() && zero.empty(); }
    /// Bindings that realize the `zero` list: each equation is solved for
    /// a parameter it contains linearly with a unit coefficient.
    /// Throws std::invalid_argument when no such parameter exists.
    [[nodiscard]] std::vector<std::pair<Param, ParamPoly>> zero_bindings() const;
};

/// Ordered parameter bindings, applied one after another. Triangular: a
/// bound parameter never occurs in a later right-hand side.
struct Substitution {
    std::vector<std::pair<Param, ParamPoly>> bindings;
    std::string provenance;
    std::vector<ParamPoly> assumptions;

    /// Throws std::invalid_argument unless bound parameters are distinct and
    /// the bindings are triangular.
    void validate() const;
    void append(Param p, ParamPoly value);
    void append(const Substitution& o);

    [[nodiscard]] ParamPoly apply(const ParamPoly& p) const;
    [[nodiscard]] Jet apply(const Jet& j) const;
    [[nodiscard]] PerturbedSystem apply(const PerturbedSystem& s) const;
    /// The composed bindings as one simultaneous map.
    [[nodiscard]] Bindings composed() const;
    [[nodiscard]] bool empty() const { return bindings.empty(); }
    [[nodiscard]] std::string to_string() const;
};

/// Statements of an assumption/substitution script, one per line:
///   a110 = -b101          binding
///   let d = alpha*beta    named quantity
///   assume d != 0         nonvanishing side condition
///   assume alpha + 3*gamma = 0
/// `#` starts a comment. Definitions may be referenced by later lines and
/// are expanded everywhere.
struct Script {
    Substitution substitution;
    Assumptions assumptions;
    std::map<std::string, ParamPoly> definitions;
};

/// Errors are std::invalid_argument carrying the 1-based line number.
/// `known` lists the names a script may refer to; empty disables the check.
Script parse_script(std::string_view text, const std::map<std::string, ParamPoly>& definitions = {},
                    const std::vector<Param>& known = {});
Script load_script(const std::string& path, const std::map<std::string, ParamPoly>& definitions = {},
                   const std::vector<Param>& known = {});

}  // namespace mjets

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mjets/solver/substitution.hpp"

namespace mjets {

using PolyMatrix = std::vector<std::vector<ParamPoly>>;

/// Fraction-free (Bareiss) determinant of a square matrix.
ParamPoly determinant(PolyMatrix m);
/// Rank over the fraction field of the entries' parameters.
unsigned symbolic_rank(PolyMatrix m);

/// The coefficient matrix of a linear solve is singular or not invertible
/// under the assumptions. `determinant` is the obstructing determinant.
class SolveObstruction : public std::runtime_error {
public:
    SolveObstruction(const std::string& what, ParamPoly det) : std::runtime_error(what), determinant(std::move(det)) {}
    ParamPoly determinant;
};

struct LinearSystem {
    PolyMatrix matrix;             // rows: selected coefficients, columns: unknowns
    std::vector<ParamPoly> rhs;    // matrix * unknowns = rhs
};

/// Rows m_{i,k} (k in `orders`) split as matrix * unknowns - rhs. Throws
/// std::domain_error when some coefficient is nonlinear in the unknowns.
LinearSystem linear_system(const Jet& jet, const std::vector<unsigned>& orders, const std::vector<Param>& unknowns);

struct SolveResult {
    Substitution substitution;
    ParamPoly determinant;
};

/// Solves m_{i,k} = 0 for k in `orders` in the unknowns (as many as orders).
/// The `zero` assumptions are substituted first and lead the returned
/// substitution. Division is by units (c pi^e) and by products of the
/// declared nonzero polynomials only. Throws std::domain_error for a
/// nonlinear coefficient and SolveObstruction when the determinant vanishes
/// or is not invertible, or when the solution is not polynomial.
SolveResult solve_vanishing(const Jet& jet, const std::vector<unsigned>& orders, const std::vector<Param>& unknowns,
                            const Assumptions& assumptions = {});

struct ReparamTarget {
    unsigned k = 0;
    Param aux;                  // new parameter A
    ParamPoly scale{1};         // m_k = scale * A
    Param solve_for;
};

struct Reparametrization {
    Jet jet;
    /// Forward bindings: the pre-applied rewritings, then one per target.
    Substitution forward;
    /// Bindings expressing the A's back in the original parameters; applying
    /// them to `jet` recovers the input jet.
    Substitution inverse;
};

/// Applies `pre` (auxiliary rewritings), then solves m_k = scale * A for each
/// target in turn. Throws std::domain_error when m_k is not linear in the
/// solve-for parameter or its coefficient is not a unit.
Reparametrization reparametrize(const Jet& jet, const std::vector<ReparamTarget>& targets,
                                const Substitution& pre = {});

struct RankReport {
    unsigned rows = 0;
    unsigned cols = 0;
    unsigned rank = 0;
    /// Rational point for the remaining symbols (pi included) where the
    /// evaluated matrix has rank `rank`.
    std::map<Param, Rational> witness;
    /// Random points (fixed seed) that reproduced the rank.
    unsigned stable_points = 0;
    unsigned tried_points = 0;
    /// rank - 1 (0 when rank is 0).
    unsigned cycle_bound = 0;
};

/// Rank of the coefficient matrix of the selected m_k in `free_params`
/// (all perturbation parameters of the jet when empty).
RankReport generic_rank(const Jet& jet, const std::vector<unsigned>& orders, std::vector<Param> free_params = {},
                        unsigned random_points = 20, std::uint64_t seed = 1);

/// Jacobian determinant of (m_k)_{k in orders} with respect to `variables`,
/// evaluated at `point`. Throws std::invalid_argument unless square, and
/// std::domain_error when a declared nonzero polynomial vanishes at the point.
ParamPoly transversality_probe(const Jet& jet, const Bindings& point, const std::vector<unsigned>& orders,
                               const std::vector<Param>& variables, const Assumptions& assumptions = {});

}  // namespace mjets

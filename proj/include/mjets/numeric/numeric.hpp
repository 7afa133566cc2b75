#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mjets/averaging/jet.hpp"

namespace mjets {

/// Parameter values and integration settings for one numeric evaluation.
/// The section is {y = 0, x > 0}.
struct NumericBinding {
    NumericBindings values;
    long double eps = 0;
    long double abs_tol = 1e-14L;
    long double rel_tol = 1e-14L;
    /// Orbits must return within this many turns.
    unsigned max_windings = 2;
    /// Re-run at 10x looser tolerance to estimate the error.
    bool estimate_error = true;
};

/// Orbit left the annulus, failed to return, or the step size collapsed.
class IntegrationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// x' = P + eps P1 + eps^2 P2, y' = Q + eps Q1 + eps^2 Q2 with the
/// parameters evaluated once; cheap to call from the integrator.
class NumericField {
public:
    NumericField(const PerturbedSystem& s, const NumericBindings& values, long double eps);
    /// Unperturbed part only.
    static NumericField unperturbed(const PerturbedSystem& s, const NumericBindings& values);
    /// The order-1 perturbation alone.
    static NumericField first_order(const PerturbedSystem& s, const NumericBindings& values);

    void operator()(long double x, long double y, long double& dx, long double& dy) const;

private:
    struct Mono {
        unsigned k, l;
        long double p, q;
    };
    NumericField() = default;
    void add(const PlanarField& f, const NumericBindings& values, long double scale);
    std::vector<Mono> monos_;
};

struct ReturnResult {
    long double r1 = 0;
    long double time = 0;
    /// |r1(tol) - r1(10 tol)| when requested, else 0.
    long double error = 0;
};

/// First return of the orbit through (r0, 0) to the positive x-axis,
/// integrating counterclockwise in Cartesian coordinates with an embedded
/// Runge-Kutta-Fehlberg 7(8) pair. The crossing is located by Newton
/// iteration on the step length from the last accepted state.
ReturnResult return_map(const PerturbedSystem& s, const NumericBinding& b, long double r0);

/// Line integral of (Q1 dx - P1 dy)/R over the unperturbed orbit through
/// (r, 0). Requires H and R on the system.
long double melnikov_line_integral(const PerturbedSystem& s, const NumericBindings& values, long double r,
                                   long double tol = 1e-14L);

/// eps M1(r) + eps^2 M2(r)/2 from first and second order jets; either may
/// be absent.
long double predicted_displacement(const Jet* first, const Jet* second, const NumericBindings& values,
                                   long double r, long double eps);

struct SlopeFit {
    long double r = 0;
    std::vector<long double> residuals;
    long double slope = 0;
    /// Some residual was below the noise floor.
    bool inconclusive = false;
};

struct OrderReport {
    std::vector<long double> eps;
    std::vector<SlopeFit> fits;
    long double expected = 0;
    long double tolerance = 0;
    /// Every conclusive fit within tolerance of the expected slope, and at
    /// least one conclusive fit.
    bool agrees = false;
};

/// Least-squares slope of log|residual| against log eps, per radius.
/// `residual(r, eps)` is the numeric minus the predicted displacement.
OrderReport epsilon_order_fit(const std::function<long double(long double, long double)>& residual,
                              const std::vector<long double>& eps, const std::vector<long double>& radii,
                              long double expected, long double tolerance, long double noise_floor);

/// Residual of the numeric displacement against the jets.
OrderReport epsilon_order_check(const PerturbedSystem& s, const NumericBinding& base, const std::vector<long double>& eps,
                                const std::vector<long double>& radii, const Jet* first, const Jet* second,
                                long double expected, long double tolerance);

struct DisplacementProfile {
    std::vector<long double> r;
    std::vector<long double> d;
    std::vector<long double> err;
    /// "ok", or the failure that ended the annulus.
    std::vector<std::string> flag;
    /// Indices i with a sign change between r[i] and r[i+1].
    std::vector<std::size_t> sign_changes;
};

/// d(r, eps) on an increasing grid; stops at the first orbit that fails to
/// return (recorded with its flag).
DisplacementProfile displacement_profile(const PerturbedSystem& s, const NumericBinding& b,
                                         const std::vector<long double>& grid);

void write_csv(std::ostream& os, const DisplacementProfile& p);

struct CycleCount {
    unsigned count = 0;
    std::vector<long double> radii;
    /// Sign changes not counted because an endpoint is within its error bar.
    std::vector<std::size_t> uncertain;
};

/// Certified sign changes of the profile. With `refine`, each root is
/// bisected to `root_tol` on the displacement function.
CycleCount count_cycles(const DisplacementProfile& p,
                        const std::function<long double(long double)>& refine = {}, long double root_tol = 1e-7L);

}  // namespace mjets

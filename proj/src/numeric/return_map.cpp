#include <array>
#include <cfloat>
#include <cmath>
#include <map>
#include <numbers>

#include <boost/numeric/odeint.hpp>

#include "mjets/numeric/numeric.hpp"

namespace mjets {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<long double, 3>;  // x, y, accumulated integral
using Stepper = odeint::runge_kutta_fehlberg78<State, long double, State, long double>;
using Rhs = std::function<void(const State&, State&, long double)>;

constexpr long double kTwoPi = 2 * std::numbers::pi_v<long double>;

void check_tolerances(long double abs_tol, long double rel_tol) {
    if (!(abs_tol >= 100 * LDBL_EPSILON) || !(rel_tol >= 100 * LDBL_EPSILON)) {
        throw std::invalid_argument("integration tolerances must be at least 100 machine epsilons");
    }
}

// Integrates from `start` until the first counterclockwise crossing of
// {y = 0, x > 0} after at least half a turn. Returns the state at the
// crossing and sets `t_out`.
State integrate_to_section(const Rhs& rhs, State start, long double abs_tol, long double rel_tol,
                           unsigned max_windings, long double& t_out) {
    auto controlled = odeint::make_controlled(abs_tol, rel_tol, Stepper());
    Stepper single;
    State st = start;
    long double t = 0, dt = 1e-2L, angle = 0;
    unsigned rejected = 0;
    for (;;) {
        const State prev = st;
        const long double tprev = t;
        if (controlled.try_step(rhs, st, t, dt) == odeint::fail) {
            if (dt < 1e-15L * (1 + std::fabs(t)) || ++rejected > 100000) {
                throw IntegrationFailure("step size underflow at x = " + std::to_string(static_cast<double>(st[0])) +
                                         ", y = " + std::to_string(static_cast<double>(st[1])));
            }
            continue;
        }
        if (!std::isfinite(st[0]) || !std::isfinite(st[1]) || std::fabs(st[0]) + std::fabs(st[1]) > 1e6L) {
            throw IntegrationFailure("orbit escaped");
        }
        long double da = std::atan2(st[1], st[0]) - std::atan2(prev[1], prev[0]);
        if (da > std::numbers::pi_v<long double>) da -= kTwoPi;
        if (da < -std::numbers::pi_v<long double>) da += kTwoPi;
        angle += da;
        if (angle < -kTwoPi || angle > kTwoPi * max_windings) {
            throw IntegrationFailure("no return to the section within " + std::to_string(max_windings) + " turns");
        }
        if (prev[1] < 0 && st[1] >= 0 && st[0] > 0 && angle > std::numbers::pi_v<long double>) {
            long double h = (t - tprev) * prev[1] / (prev[1] - st[1]);
            State s = prev;
            for (int it = 0; it < 60; ++it) {
                s = prev;
                single.do_step(rhs, s, tprev, h);
                State ds{};
                rhs(s, ds, tprev + h);
                if (ds[1] == 0) break;
                const long double step = s[1] / ds[1];
                h -= step;
                if (std::fabs(step) <= 1e-3L * abs_tol * (1 + std::fabs(h))) {
                    s = prev;
                    single.do_step(rhs, s, tprev, h);
                    break;
                }
            }
            t_out = tprev + h;
            return s;
        }
    }
}

std::map<std::string, long double> by_name(const NumericBindings& values) {
    std::map<std::string, long double> out;
    for (const auto& [p, v] : values) out[p.name()] = v;
    return out;
}

}  // namespace

NumericField::NumericField(const PerturbedSystem& s, const NumericBindings& values, long double eps) {
    add(s.Z, values, 1);
    if (eps != 0 && s.Z1) add(*s.Z1, values, eps);
    if (eps != 0 && s.Z2) add(*s.Z2, values, eps * eps);
}

NumericField NumericField::unperturbed(const PerturbedSystem& s, const NumericBindings& values) {
    NumericField f;
    f.add(s.Z, values, 1);
    return f;
}

NumericField NumericField::first_order(const PerturbedSystem& s, const NumericBindings& values) {
    NumericField f;
    if (s.Z1) f.add(*s.Z1, values, 1);
    return f;
}

void NumericField::add(const PlanarField& f, const NumericBindings& values, long double scale) {
    auto put = [&](const PlanarPoly& p, bool is_p) {
        for (const auto& [e, c] : p.coefficients()) {
            const long double v = scale * c.evaluate(values);
            auto it = std::find_if(monos_.begin(), monos_.end(),
                                   [&](const Mono& m) { return m.k == e.first && m.l == e.second; });
            if (it == monos_.end()) it = monos_.insert(monos_.end(), Mono{e.first, e.second, 0, 0});
            (is_p ? it->p : it->q) += v;
        }
    };
    put(f.P, true);
    put(f.Q, false);
}

void NumericField::operator()(long double x, long double y, long double& dx, long double& dy) const {
    dx = dy = 0;
    for (const Mono& m : monos_) {
        long double w = 1;
        for (unsigned i = 0; i < m.k; ++i) w *= x;
        for (unsigned i = 0; i < m.l; ++i) w *= y;
        dx += m.p * w;
        dy += m.q * w;
    }
}

ReturnResult return_map(const PerturbedSystem& s, const NumericBinding& b, long double r0) {
    check_tolerances(b.abs_tol, b.rel_tol);
    if (!(r0 > 0)) throw std::invalid_argument("return_map needs r0 > 0");
    const NumericField f(s, b.values, b.eps);
    const Rhs rhs = [&f](const State& st, State& d, long double) {
        f(st[0], st[1], d[0], d[1]);
        d[2] = 0;
    };
    ReturnResult out;
    const State hit = integrate_to_section(rhs, {r0, 0, 0}, b.abs_tol, b.rel_tol, b.max_windings, out.time);
    out.r1 = hit[0];
    if (b.estimate_error) {
        long double t2 = 0;
        const State loose = integrate_to_section(rhs, {r0, 0, 0}, 10 * b.abs_tol, 10 * b.rel_tol, b.max_windings, t2);
        out.error = std::fabs(loose[0] - out.r1);
    }
    return out;
}

long double melnikov_line_integral(const PerturbedSystem& s, const NumericBindings& values, long double r,
                                   long double tol) {
    check_tolerances(tol, tol);
    if (!s.H || !s.R) throw std::invalid_argument("system '" + s.name + "' has no first integral data");
    const NumericField z = NumericField::unperturbed(s, values);
    const NumericField z1 = NumericField::first_order(s, values);
    auto env = by_name(values);
    const Expr R = *s.R;
    const Rhs rhs = [&](const State& st, State& d, long double) {
        z(st[0], st[1], d[0], d[1]);
        long double p1 = 0, q1 = 0;
        z1(st[0], st[1], p1, q1);
        env["x"] = st[0];
        env["y"] = st[1];
        const long double rv = R.eval([&](const std::string& n) {
            auto it = env.find(n);
            if (it == env.end()) throw std::out_of_range("no value for '" + n + "'");
            return it->second;
        });
        if (std::fabs(rv) < 1e-12L) throw IntegrationFailure("R vanishes on the orbit");
        d[2] = (q1 * d[0] - p1 * d[1]) / rv;
    };
    long double t = 0;
    const State hit = integrate_to_section(rhs, {r, 0, 0}, tol, tol, 2, t);
    if (std::fabs(hit[0] - r) > 1e-9L * std::max<long double>(1, r)) {
        throw IntegrationFailure("unperturbed orbit through r = " + std::to_string(static_cast<double>(r)) +
                                 " does not close");
    }
    return hit[2];
}

}  // namespace mjets

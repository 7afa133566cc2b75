#include <cmath>
#include <iomanip>

#include "mjets/numeric/numeric.hpp"

namespace mjets {

long double predicted_displacement(const Jet* first, const Jet* second, const NumericBindings& values, long double r,
                                   long double eps) {
    long double d = 0;
    if (first) d += eps * first->evaluate(r, values);
    if (second) d += eps * eps / 2 * second->evaluate(r, values);
    return d;
}

namespace {

void settle(OrderReport& rep) {
    bool any = false, ok = true;
    for (const auto& f : rep.fits) {
        if (f.inconclusive) continue;
        any = true;
        if (std::fabs(f.slope - rep.expected) > rep.tolerance) ok = false;
    }
    rep.agrees = any && ok;
}

}  // namespace

OrderReport epsilon_order_fit(const std::function<long double(long double, long double)>& residual,
                              const std::vector<long double>& eps, const std::vector<long double>& radii,
                              long double expected, long double tolerance, long double noise_floor) {
    if (eps.size() < 2) throw std::invalid_argument("an order fit needs at least two eps values");
    OrderReport rep;
    rep.eps = eps;
    rep.expected = expected;
    rep.tolerance = tolerance;
    for (long double r : radii) {
        SlopeFit fit;
        fit.r = r;
        long double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (long double e : eps) {
            const long double res = residual(r, e);
            fit.residuals.push_back(res);
            if (std::fabs(res) <= noise_floor) fit.inconclusive = true;
            const long double lx = std::log(e), ly = std::log(std::fabs(res));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        const auto n = static_cast<long double>(eps.size());
        fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        rep.fits.push_back(std::move(fit));
    }
    settle(rep);
    return rep;
}

OrderReport epsilon_order_check(const PerturbedSystem& s, const NumericBinding& base, const std::vector<long double>& eps,
                                const std::vector<long double>& radii, const Jet* first, const Jet* second,
                                long double expected, long double tolerance) {
    long double worst_err = 0;
    auto residual = [&](long double r, long double e) {
        NumericBinding b = base;
        b.eps = e;
        const ReturnResult rr = return_map(s, b, r);
        worst_err = std::max(worst_err, rr.error);
        return (rr.r1 - r) - predicted_displacement(first, second, b.values, r, e);
    };
    OrderReport rep = epsilon_order_fit(residual, eps, radii, expected, tolerance, 100 * base.abs_tol);
    // Residuals within ten integration error estimates are noise as well.
    for (auto& f : rep.fits) {
        for (long double res : f.residuals) {
            if (std::fabs(res) <= 10 * worst_err) f.inconclusive = true;
        }
    }
    settle(rep);
    return rep;
}

DisplacementProfile displacement_profile(const PerturbedSystem& s, const NumericBinding& b,
                                         const std::vector<long double>& grid) {
    DisplacementProfile p;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0 && !(grid[i] > grid[i - 1])) throw std::invalid_argument("r-grid must be strictly increasing");
        try {
            const ReturnResult rr = return_map(s, b, grid[i]);
            p.r.push_back(grid[i]);
            p.d.push_back(rr.r1 - grid[i]);
            p.err.push_back(rr.error);
            p.flag.emplace_back("ok");
        } catch (const IntegrationFailure& e) {
            p.r.push_back(grid[i]);
            p.d.push_back(std::nanl(""));
            p.err.push_back(std::nanl(""));
            p.flag.emplace_back(e.what());
            break;
        }
    }
    for (std::size_t i = 0; i + 1 < p.r.size(); ++i) {
        if (p.flag[i] == "ok" && p.flag[i + 1] == "ok" && ((p.d[i] < 0) != (p.d[i + 1] < 0))) {
            p.sign_changes.push_back(i);
        }
    }
    return p;
}

void write_csv(std::ostream& os, const DisplacementProfile& p) {
    os << "r,d,err,flag\n";
    os << std::setprecision(17);
    for (std::size_t i = 0; i < p.r.size(); ++i) {
        std::string flag = p.flag[i];
        for (char& c : flag) {
            if (c == ',' || c == '\n') c = ' ';
        }
        os << static_cast<double>(p.r[i]) << ',' << static_cast<double>(p.d[i]) << ',' << static_cast<double>(p.err[i])
           << ',' << flag << '\n';
    }
}

CycleCount count_cycles(const DisplacementProfile& p, const std::function<long double(long double)>& refine,
                        long double root_tol) {
    CycleCount out;
    for (std::size_t i : p.sign_changes) {
        const bool certain = std::fabs(p.d[i]) > 3 * p.err[i] && std::fabs(p.d[i + 1]) > 3 * p.err[i + 1];
        if (!certain) {
            out.uncertain.push_back(i);
            continue;
        }
        long double a = p.r[i], b = p.r[i + 1];
        long double root = a + (b - a) * p.d[i] / (p.d[i] - p.d[i + 1]);
        if (refine) {
            long double fa = p.d[i];
            while (b - a > root_tol) {
                const long double m = (a + b) / 2;
                const long double fm = refine(m);
                if ((fm < 0) == (fa < 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            root = (a + b) / 2;
        }
        ++out.count;
        out.radii.push_back(root);
    }
    return out;
}

}  // namespace mjets

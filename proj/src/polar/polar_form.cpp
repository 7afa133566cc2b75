#include "mjets/polar/polar_form.hpp"

#include <map>
#include <stdexcept>

namespace mjets {

namespace {

struct Expansion {
    RSeries N;
    RSeries D;
};

// N = c P + s Q and D = (c Q - s P)/r as exact polynomials in r.
Expansion expand_field(const PlanarField& f) {
    const unsigned deg = std::max(std::max(f.P.degree(), f.Q.degree()), 1u);
    Expansion e{RSeries(deg), RSeries(deg - 1)};
    for (const auto& [ex, c] : f.P.coefficients()) {
        const auto [a, b] = ex;
        e.N.coeff(a + b) += QuasiTrigPoly(trig_monomial(a + 1, b).scaled(c));
        if (a + b >= 1) e.D.coeff(a + b - 1) -= QuasiTrigPoly(trig_monomial(a, b + 1).scaled(c));
    }
    for (const auto& [ex, c] : f.Q.coefficients()) {
        const auto [a, b] = ex;
        e.N.coeff(a + b) += QuasiTrigPoly(trig_monomial(a, b + 1).scaled(c));
        if (a + b >= 1) e.D.coeff(a + b - 1) += QuasiTrigPoly(trig_monomial(a + 1, b).scaled(c));
    }
    return e;
}

RSeries reciprocal(const RSeries& d, unsigned order) {
    RSeries inv(order, true);
    inv.coeff(0) = QuasiTrigPoly(ParamPoly(1));
    for (unsigned k = 1; k <= order; ++k) {
        QuasiTrigAccumulator acc;
        for (unsigned i = 1; i <= k && i <= d.order(); ++i) acc.add_product(d[i], inv[k - i]);
        inv.coeff(k) = -acc.finish();
    }
    bool finite = true;
    for (unsigned i = 1; i <= d.order(); ++i) finite = finite && d[i].is_zero();
    inv.set_truncated(!finite);
    return inv;
}

}  // namespace

FourierPoly trig_monomial(unsigned a, unsigned b) {
    thread_local std::map<std::pair<unsigned, unsigned>, FourierPoly> cache;
    auto key = std::make_pair(a, b);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    FourierPoly r;
    if (a == 0 && b == 0) {
        r = FourierPoly(ParamPoly(1));
    } else if (a > 0) {
        r = trig_monomial(a - 1, b) * FourierPoly::cos(1);
    } else {
        r = trig_monomial(a, b - 1) * FourierPoly::sin(1);
    }
    cache.emplace(key, r);
    return r;
}

PolarForm to_polar(const PerturbedSystem& s, unsigned order, unsigned cap) {
    s.validate();
    if (order < 1) throw std::invalid_argument("to_polar: order must be at least 1");
    if (order > cap) {
        throw std::out_of_range("to_polar: order " + std::to_string(order) + " exceeds the configured cap " +
                                std::to_string(cap));
    }
    const Expansion e0 = expand_field(s.Z);
    if (!(e0.D[0] == QuasiTrigPoly(ParamPoly(1)))) throw std::logic_error("to_polar: angular speed is not 1 at r = 0");

    PolarForm pf;
    pf.order = order;
    const RSeries inv = reciprocal(e0.D, order);
    pf.F0 = e0.N * inv;
    pf.F0 = pf.F0.truncate(order);

    const unsigned n0 = e0.N.order();
    pf.f0 = RSeries(n0 >= 2 ? n0 - 2 : 0);
    for (unsigned k = 2; k <= n0; ++k) pf.f0.coeff(k - 2) = e0.N[k];
    pf.g0 = RSeries(e0.D.order() >= 1 ? e0.D.order() - 1 : 0);
    for (unsigned k = 1; k <= e0.D.order(); ++k) pf.g0.coeff(k - 1) = e0.D[k];

    pf.F1 = RSeries(order);
    pf.F2 = RSeries(order);
    std::optional<Expansion> e1;
    if (s.Z1) {
        e1 = expand_field(*s.Z1);
        pf.F1 = ((e1->N - pf.F0 * e1->D) * inv).truncate(order);
    }
    if (s.Z2) {
        const Expansion e2 = expand_field(*s.Z2);
        RSeries num = e2.N - pf.F0 * e2.D;
        if (e1) num -= pf.F1 * e1->D;
        pf.F2 = (num * inv).truncate(order);
    }
    return pf;
}

}  // namespace mjets

#include "mjets/solver/solver.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mjets {

namespace {

ParamPoly exact_quotient(const ParamPoly& a, const ParamPoly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw std::logic_error("inexact fraction-free elimination step");
    return *q;
}

// Strips declared-nonzero factors; invertible when what is left is a unit.
bool invertible(const ParamPoly& det, const std::vector<ParamPoly>& nonzero) {
    ParamPoly q = det;
    bool progress = true;
    while (!q.is_unit() && progress) {
        progress = false;
        for (const auto& f : nonzero) {
            if (f.is_constant()) continue;
            if (auto r = q.divide_exact(f)) {
                q = *r;
                progress = true;
            }
        }
    }
    return q.is_unit();
}

Rational evaluate_exact(const ParamPoly& p, const std::map<Param, Rational>& point) {
    Rational sum(0);
    for (const Term& t : p.terms()) {
        Rational v = t.coef;
        for (int i = 0; i < t.mono.size(); ++i) {
            const Param var = Param::from_id(t.mono.var(i));
            const auto it = point.find(var);
            if (it == point.end()) throw std::out_of_range("no value for '" + var.name() + "'");
            const int e = t.mono.exp(i);
            Rational base = e < 0 ? Rational(1) / it->second : it->second;
            for (int k = 0; k < std::abs(e); ++k) v *= base;
        }
        sum += v;
    }
    return sum;
}

unsigned rational_rank(std::vector<std::vector<Rational>> m) {
    unsigned rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            const Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::string order_list(const Jet& jet, const std::vector<unsigned>& orders) {
    std::string s;
    for (unsigned k : orders) {
        if (!s.empty()) s += ", ";
        s += "m" + std::to_string(jet.order) + "," + std::to_string(k);
    }
    return s;
}

}  // namespace

ParamPoly determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    }
    if (n == 0) return ParamPoly(1);
    bool negate = false;
    ParamPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return ParamPoly();
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = ParamPoly();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

unsigned symbolic_rank(PolyMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    unsigned rank = 0;
    ParamPoly prev(1);
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = exact_quotient(m[rank][c] * m[i][j] - m[i][c] * m[rank][j], prev);
            }
            m[i][c] = ParamPoly();
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

LinearSystem linear_system(const Jet& jet, const std::vector<unsigned>& orders, const std::vector<Param>& unknowns) {
    LinearSystem ls;
    for (unsigned k : orders) {
        if (k == 0 || k > jet.j()) throw std::invalid_argument("coefficient index " + std::to_string(k) + " outside the jet");
        ParamPoly::LinearForm f;
        try {
            f = jet[k].collect_linear(unknowns);
        } catch (const std::domain_error& e) {
            throw std::domain_error("m" + std::to_string(jet.order) + "," + std::to_string(k) + ": " + e.what());
        }
        ls.matrix.push_back(std::move(f.coefficients));
        ls.rhs.push_back(-f.remainder);
    }
    return ls;
}

SolveResult solve_vanishing(const Jet& jet, const std::vector<unsigned>& orders, const std::vector<Param>& unknowns,
                            const Assumptions& assumptions) {
    if (orders.size() != unknowns.size()) {
        throw std::invalid_argument("need as many unknowns as selected coefficients");
    }
    SolveResult out;
    Substitution& sub = out.substitution;
    for (auto& b : assumptions.zero_bindings()) sub.append(b.first, b.second);
    std::vector<ParamPoly> nonzero;
    for (const auto& p : assumptions.nonzero) {
        ParamPoly q = sub.apply(p);
        if (q.is_zero()) throw std::invalid_argument("assumption '" + p.to_string() + " != 0' contradicts the zero assumptions");
        nonzero.push_back(std::move(q));
    }
    for (Param u : unknowns) {
        for (const auto& [p, _] : sub.bindings) {
            if (p == u) throw std::invalid_argument("unknown '" + u.name() + "' is fixed by an assumption");
        }
    }
    const Jet reduced = sub.apply(jet);
    const LinearSystem ls = linear_system(reduced, orders, unknowns);
    out.determinant = determinant(ls.matrix);
    if (out.determinant.is_zero()) {
        throw SolveObstruction("the coefficient determinant of " + order_list(jet, orders) +
                                   " vanishes identically under the assumptions",
                               out.determinant);
    }
    if (!invertible(out.determinant, nonzero)) {
        throw SolveObstruction("the coefficient determinant " + out.determinant.to_string() +
                                   " is not invertible under the assumptions",
                               out.determinant);
    }
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
        PolyMatrix mi = ls.matrix;
        for (std::size_t r = 0; r < mi.size(); ++r) mi[r][i] = ls.rhs[r];
        auto q = determinant(std::move(mi)).divide_exact(out.determinant);
        if (!q) {
            throw SolveObstruction("the solution for '" + unknowns[i].name() + "' is not polynomial (denominator " +
                                       out.determinant.to_string() + ")",
                                   out.determinant);
        }
        sub.append(unknowns[i], std::move(*q));
    }
    sub.provenance = order_list(jet, orders) + " = 0";
    sub.assumptions = nonzero;
    sub.validate();
    return out;
}

Reparametrization reparametrize(const Jet& jet, const std::vector<ReparamTarget>& targets, const Substitution& pre) {
    Reparametrization out;
    out.forward = pre;
    out.jet = pre.apply(jet);

    std::set<Param> present;
    for (const auto& c : jet.m) {
        for (Param p : c.variables()) present.insert(p);
    }
    std::vector<std::pair<Param, ParamPoly>> pre_inverse;
    for (const auto& [p, e] : pre.bindings) {
        for (Param a : e.variables()) {
            if (a.kind() != ParamKind::auxiliary || present.count(a) || e.degree(a) != 1) continue;
            const ParamPoly c = e.coefficient(a, 1);
            if (!c.is_unit()) continue;
            pre_inverse.emplace_back(a, *(ParamPoly(p) - e.coefficient(a, 0)).divide_exact(c));
            present.insert(a);
            break;
        }
    }

    std::vector<std::pair<Param, ParamPoly>> target_inverse;
    for (const auto& t : targets) {
        if (t.k == 0 || t.k > out.jet.j()) throw std::invalid_argument("target index outside the jet");
        if (!t.scale.is_unit()) throw std::invalid_argument("target scale must be a unit");
        const ParamPoly& m = out.jet[t.k];
        const std::string where = "m" + std::to_string(jet.order) + "," + std::to_string(t.k);
        if (m.degree(t.solve_for) != 1) throw std::domain_error(where + " is not linear in '" + t.solve_for.name() + "'");
        const ParamPoly c = m.coefficient(t.solve_for, 1);
        if (!c.is_unit()) {
            throw std::domain_error(where + ": coefficient " + c.to_string() + " of '" + t.solve_for.name() +
                                    "' is not invertible");
        }
        const ParamPoly rest = m.coefficient(t.solve_for, 0);
        ParamPoly value = *(t.scale * ParamPoly(t.aux) - rest).divide_exact(c);
        target_inverse.emplace_back(t.aux, *(c * ParamPoly(t.solve_for) + rest).divide_exact(t.scale));
        out.jet = out.jet.substitute({{t.solve_for, value}});
        out.forward.append(t.solve_for, std::move(value));
    }
    for (auto it = target_inverse.rbegin(); it != target_inverse.rend(); ++it) out.inverse.append(it->first, it->second);
    for (auto it = pre_inverse.rbegin(); it != pre_inverse.rend(); ++it) out.inverse.append(it->first, it->second);
    out.forward.provenance = "reparametrization";
    out.inverse.provenance = "inverse reparametrization";
    return out;
}

RankReport generic_rank(const Jet& jet, const std::vector<unsigned>& orders, std::vector<Param> free_params,
                        unsigned random_points, std::uint64_t seed) {
    if (free_params.empty()) {
        std::set<Param> ps;
        for (unsigned k : orders) {
            if (k == 0 || k > jet.j()) throw std::invalid_argument("coefficient index outside the jet");
            for (Param p : jet[k].variables()) {
                if (p.kind() == ParamKind::perturbation) ps.insert(p);
            }
        }
        free_params.assign(ps.begin(), ps.end());
    }
    const LinearSystem ls = linear_system(jet, orders, free_params);
    RankReport rep;
    rep.rows = static_cast<unsigned>(orders.size());
    rep.cols = static_cast<unsigned>(free_params.size());
    rep.rank = symbolic_rank(ls.matrix);
    rep.cycle_bound = rep.rank ? rep.rank - 1 : 0;

    std::set<Param> others;
    for (const auto& row : ls.matrix) {
        for (const auto& e : row) {
            for (Param p : e.variables()) others.insert(p);
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    auto random_point = [&] {
        std::map<Param, Rational> pt;
        for (Param p : others) {
            int n = 0;
            while (n == 0) n = num(rng);
            pt.emplace(p, Rational(n, den(rng)));
        }
        return pt;
    };
    auto rank_at = [&](const std::map<Param, Rational>& pt) {
        std::vector<std::vector<Rational>> m;
        for (const auto& row : ls.matrix) {
            auto& r = m.emplace_back();
            for (const auto& e : row) r.push_back(evaluate_exact(e, pt));
        }
        return rational_rank(std::move(m));
    };
    bool have_witness = false;
    for (unsigned i = 0; i < random_points || (!have_witness && i < random_points + 100); ++i) {
        const auto pt = random_point();
        const bool hit = rank_at(pt) == rep.rank;
        if (i < random_points) {
            ++rep.tried_points;
            if (hit) ++rep.stable_points;
        }
        if (hit && !have_witness) {
            rep.witness = pt;
            have_witness = true;
        }
    }
    if (!have_witness) throw std::logic_error("no rational witness attains the generic rank");
    return rep;
}

ParamPoly transversality_probe(const Jet& jet, const Bindings& point, const std::vector<unsigned>& orders,
                               const std::vector<Param>& variables, const Assumptions& assumptions) {
    if (orders.size() != variables.size()) throw std::invalid_argument("the coefficient map must be square");
    for (const auto& a : assumptions.nonzero) {
        if (a.substitute(point).is_zero()) {
            throw std::domain_error("point violates the assumption '" + a.to_string() + " != 0'");
        }
    }
    PolyMatrix jac;
    for (unsigned k : orders) {
        if (k == 0 || k > jet.j()) throw std::invalid_argument("coefficient index outside the jet");
        auto& row = jac.emplace_back();
        for (Param v : variables) row.push_back(jet[k].derivative(v).substitute(point));
    }
    return determinant(std::move(jac));
}

}  // namespace mjets

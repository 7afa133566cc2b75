#include "mjets/symbolic/param_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mjets/symbolic/expr.hpp"

namespace mjets {

namespace {

bool term_less(const Term& a, const Term& b) { return a.mono < b.mono; }

}  // namespace

ParamPoly::ParamPoly(Rational c) {
    if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
}

ParamPoly::ParamPoly(Param p) { terms_.push_back({Monomial(p, 1), Rational(1)}); }

ParamPoly::ParamPoly(const Monomial& m, Rational c) {
    if (!c.is_zero()) terms_.push_back({m, std::move(c)});
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    ParamPoly r;
    r.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
            r.terms_.back().coef += t.coef;
            if (r.terms_.back().coef.is_zero()) r.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

ParamPoly ParamPoly::parse(std::string_view text) { return parse_expr(text).to_poly(); }

Rational ParamPoly::constant_term() const {
    if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coef;
    return Rational(0);
}

bool ParamPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const Monomial& m = terms_[0].mono;
    const int n = m.size();
    if (n == 0) return true;
    return n == 1 && Param::from_id(m.var(0)).is_pi();
}

unsigned ParamPoly::degree(Param p) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<unsigned>(std::max(0, t.mono.degree(p))));
    return d;
}

unsigned ParamPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

unsigned ParamPoly::degree_in(std::span<const Param> ps) const {
    unsigned d = 0;
    for (const auto& t : terms_) {
        unsigned s = 0;
        for (Param p : ps) s += static_cast<unsigned>(std::max(0, t.mono.degree(p)));
        d = std::max(d, s);
    }
    return d;
}

std::vector<Param> ParamPoly::variables() const {
    std::set<std::uint16_t> ids;
    for (const auto& t : terms_) {
        for (int i = 0; i < t.mono.size(); ++i) ids.insert(t.mono.var(i));
    }
    std::vector<Param> out;
    out.reserve(ids.size());
    for (auto id : ids) out.push_back(Param::from_id(id));
    std::sort(out.begin(), out.end());
    return out;
}

ParamPoly ParamPoly::coefficient(Param p, unsigned k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        if (m.extract(p) == static_cast<int>(k)) out.push_back({m, t.coef});
    }
    return from_terms(std::move(out));
}

ParamPoly ParamPoly::derivative(Param p) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        const int e = m.extract(p);
        if (e == 0) continue;
        out.push_back({m * Monomial(p, e - 1), t.coef * Rational(static_cast<std::int64_t>(e))});
    }
    return from_terms(std::move(out));
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        if (i->mono == j->mono) {
            Rational c = std::move(i->coef);
            c += j->coef;
            if (!c.is_zero()) out.push_back({i->mono, std::move(c)});
            ++i;
            ++j;
        } else if (i->mono < j->mono) {
            out.push_back(std::move(*i++));
        } else {
            out.push_back(*j++);
        }
    }
    for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
    for (; j != o.terms_.end(); ++j) out.push_back(*j);
    terms_ = std::move(out);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else if (!c.is_one()) {
        for (auto& t : terms_) t.coef *= c;
    }
    return *this;
}

ParamPoly ParamPoly::mul_monomial(const Monomial& m, const Rational& c) const {
    ParamPoly r;
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;  // monomial order is multiplicative, so r stays sorted
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return ParamPoly();
    if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coef);
    if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coef);
    PolyAccumulator acc;
    acc.add_product(a, b);
    return acc.finish();
}

ParamPoly ParamPoly::pow(unsigned n) const {
    ParamPoly result(1);
    ParamPoly base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& d) const {
    if (d.is_zero()) throw std::domain_error("ParamPoly::divide_exact: division by zero");
    if (is_zero()) return ParamPoly();
    const Term& lead = d.terms_.back();
    if (d.terms_.size() == 1) {
        ParamPoly q;
        q.terms_.reserve(terms_.size());
        const Rational inv = Rational(1) / lead.coef;
        for (const auto& t : terms_) {
            if (!t.mono.divisible_by(lead.mono, true)) return std::nullopt;
            q.terms_.push_back({t.mono.divide(lead.mono), t.coef * inv});
        }
        return q;
    }
    ParamPoly rem = *this;
    std::vector<Term> quotient;
    while (!rem.is_zero()) {
        const Term& lt = rem.terms_.back();
        if (!lt.mono.divisible_by(lead.mono)) return std::nullopt;
        Monomial qm = lt.mono.divide(lead.mono);
        Rational qc = lt.coef / lead.coef;
        rem -= d.mul_monomial(qm, qc);
        quotient.push_back({qm, std::move(qc)});
    }
    return from_terms(std::move(quotient));
}

std::vector<Param> binding_cycle(const Bindings& b) {
    // Self-bindings (x -> f(x)) are allowed; longer cycles are not.
    std::map<Param, std::vector<Param>> edges;
    for (const auto& [k, v] : b) {
        for (Param p : v.variables()) {
            if (p != k && b.count(p)) edges[k].push_back(p);
        }
    }
    std::map<Param, int> state;  // 0 new, 1 on stack, 2 done
    std::vector<Param> stack;
    std::vector<Param> cycle;
    std::function<bool(Param)> dfs = [&](Param u) {
        state[u] = 1;
        stack.push_back(u);
        for (Param w : edges[u]) {
            if (state[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                return true;
            }
            if (state[w] == 0 && dfs(w)) return true;
        }
        stack.pop_back();
        state[u] = 2;
        return false;
    };
    for (const auto& [k, v] : b) {
        if (state[k] == 0 && dfs(k)) break;
    }
    return cycle;
}

ParamPoly ParamPoly::substitute(const Bindings& b) const {
    if (b.empty() || is_zero()) return *this;
    for (const auto& [k, v] : b) {
        if (k.is_pi()) throw std::invalid_argument("substitute: pi cannot be bound");
    }
    if (auto cyc = binding_cycle(b); !cyc.empty()) {
        std::string msg = "substitute: cyclic bindings:";
        for (Param p : cyc) msg += " " + p.name();
        throw std::invalid_argument(msg);
    }
    // Group terms by their bound part so each distinct product of images is
    // formed once.
    std::map<std::vector<std::pair<std::uint16_t, unsigned>>, std::vector<Term>> groups;
    for (const auto& t : terms_) {
        Monomial free = t.mono;
        std::vector<std::pair<std::uint16_t, unsigned>> bound;
        for (int i = 0; i < t.mono.size(); ++i) {
            const Param p = Param::from_id(t.mono.var(i));
            if (b.count(p)) {
                bound.emplace_back(p.id(), static_cast<unsigned>(t.mono.exp(i)));
                free.extract(p);
            }
        }
        groups[bound].push_back({free, t.coef});
    }
    std::map<std::pair<std::uint16_t, unsigned>, ParamPoly> power_cache;
    auto power = [&](std::uint16_t id, unsigned e) -> const ParamPoly& {
        auto key = std::make_pair(id, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        ParamPoly v = b.at(Param::from_id(id)).pow(e);
        return power_cache.emplace(key, std::move(v)).first->second;
    };
    PolyAccumulator acc;
    for (auto& [bound, cofactor_terms] : groups) {
        ParamPoly cofactor = from_terms(std::move(cofactor_terms));
        ParamPoly image(1);
        for (const auto& [id, e] : bound) image = image * power(id, e);
        acc.add_product(cofactor, image);
    }
    return acc.finish();
}

ParamPoly::LinearForm ParamPoly::collect_linear(std::span<const Param> unknowns) const {
    LinearForm out;
    std::vector<std::vector<Term>> coeff_terms(unknowns.size());
    std::vector<Term> rem;
    for (const auto& t : terms_) {
        int hit = -1;
        unsigned deg = 0;
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const auto e = static_cast<unsigned>(std::max(0, t.mono.degree(unknowns[u])));
            if (e > 0) {
                deg += e;
                hit = static_cast<int>(u);
            }
        }
        if (deg == 0) {
            rem.push_back(t);
        } else if (deg == 1) {
            Monomial m = t.mono;
            m.extract(unknowns[static_cast<std::size_t>(hit)]);
            coeff_terms[static_cast<std::size_t>(hit)].push_back({m, t.coef});
        } else {
            throw std::domain_error("collect_linear: polynomial is nonlinear in the unknowns");
        }
    }
    out.coefficients.reserve(unknowns.size());
    for (auto& ct : coeff_terms) out.coefficients.push_back(from_terms(std::move(ct)));
    out.remainder = from_terms(std::move(rem));
    return out;
}

long double ParamPoly::evaluate(const NumericBindings& values) const {
    long double sum = 0;
    for (const auto& t : terms_) {
        long double v = t.coef.to_long_double();
        for (int i = 0; i < t.mono.size(); ++i) {
            const Param p = Param::from_id(t.mono.var(i));
            long double x;
            if (auto it = values.find(p); it != values.end()) {
                x = it->second;
            } else if (p.is_pi()) {
                x = std::numbers::pi_v<long double>;
            } else {
                throw std::out_of_range("evaluate: unbound parameter '" + p.name() + "'");
            }
            v *= std::pow(x, static_cast<long double>(t.mono.exp(i)));
        }
        sum += v;
    }
    return sum;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    using Key = std::vector<std::pair<Param, int>>;
    std::vector<std::pair<Key, const Term*>> keyed;
    keyed.reserve(terms_.size());
    for (const auto& t : terms_) {
        Key k;
        for (int i = 0; i < t.mono.size(); ++i) k.emplace_back(Param::from_id(t.mono.var(i)), t.mono.exp(i));
        std::sort(k.begin(), k.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        keyed.emplace_back(std::move(k), &t);
    }
    auto key_less = [](const Key& a, const Key& b) {
        if (a.empty() != b.empty()) return b.empty();  // constant term last
        const std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].first != b[i].first) return a[i].first < b[i].first;
            if (a[i].second != b[i].second) return a[i].second > b[i].second;
        }
        return a.size() < b.size();
    };
    std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) { return key_less(x.first, y.first); });

    std::ostringstream os;
    bool first = true;
    for (const auto& [key, term] : keyed) {
        Rational c = term->coef;
        const bool negative = c.sign() < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (!c.is_one() || key.empty()) {
            os << c.to_string();
            need_star = true;
        }
        for (const auto& [p, e] : key) {
            if (need_star) os << '*';
            os << p.name();
            if (e != 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

void PolyAccumulator::add(const ParamPoly& p) {
    for (const auto& t : p.terms_) map_[t.mono] += t.coef;
}

void PolyAccumulator::add_scaled(const ParamPoly& p, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& t : p.terms_) map_[t.mono].add_mul(t.coef, c);
}

void PolyAccumulator::add_product(const ParamPoly& a, const ParamPoly& b) {
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) map_[ta.mono * tb.mono].add_mul(ta.coef, tb.coef);
    }
}

void PolyAccumulator::add_product(const ParamPoly& a, const ParamPoly& b, const Rational& c) {
    if (c.is_one()) {
        add_product(a, b);
        return;
    }
    if (c.is_zero()) return;
    const ParamPoly& small = a.size() <= b.size() ? a : b;
    const ParamPoly& large = a.size() <= b.size() ? b : a;
    for (const auto& ts : small.terms_) {
        const Rational sc = ts.coef * c;
        for (const auto& tl : large.terms_) map_[ts.mono * tl.mono].add_mul(sc, tl.coef);
    }
}

ParamPoly PolyAccumulator::finish(const Rational& scale) {
    ParamPoly r;
    r.terms_.reserve(map_.size());
    for (auto& [m, c] : map_) {
        if (c.is_zero()) continue;
        if (!scale.is_one()) c *= scale;
        r.terms_.push_back({m, std::move(c)});
    }
    map_.clear();
    std::sort(r.terms_.begin(), r.terms_.end(), term_less);
    return r;
}

}  // namespace mjets

#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "mjets/symbolic/monomial.hpp"
#include "mjets/symbolic/rational.hpp"

namespace mjets {

struct Term {
    Monomial mono;
    Rational coef;
};

class ParamPoly;

using Bindings = std::map<Param, ParamPoly>;
using NumericBindings = std::unordered_map<Param, long double>;

/// Exact sparse multivariate polynomial over Q in interned parameters.
///
/// Terms are kept sorted by the monomial order with no zero coefficients, so
/// equality is structural. Values are immutable in practice: every operation
/// returns a fresh polynomial and shares nothing.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(Rational c);  // NOLINT(google-explicit-constructor)
    ParamPoly(std::int64_t c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    ParamPoly(int c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    ParamPoly(Param p);  // NOLINT(google-explicit-constructor)
    ParamPoly(const Monomial& m, Rational c);

    static ParamPoly var(std::string_view name) { return ParamPoly(Param(name)); }
    static ParamPoly pi() { return ParamPoly(Param::pi()); }
    /// Builds from unsorted terms, combining duplicates.
    static ParamPoly from_terms(std::vector<Term> terms);
    /// Parses the textual grammar used by the CLI (`3/8*pi*a110*b102 - b101^2`).
    static ParamPoly parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] std::span<const Term> terms() const { return terms_; }

    /// Single term `c * pi^k` with c != 0: the only divisors the solvers may
    /// always invert.
    [[nodiscard]] bool is_unit() const;

    [[nodiscard]] unsigned degree(Param p) const;
    [[nodiscard]] unsigned total_degree() const;
    /// Largest total degree in the given parameters over all terms.
    [[nodiscard]] unsigned degree_in(std::span<const Param> ps) const;
    [[nodiscard]] std::vector<Param> variables() const;
    [[nodiscard]] bool contains(Param p) const { return degree(p) > 0; }

    /// Coefficient of p^k, as a polynomial in the remaining parameters.
    [[nodiscard]] ParamPoly coefficient(Param p, unsigned k) const;
    [[nodiscard]] ParamPoly derivative(Param p) const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    ParamPoly& operator*=(const Rational& c);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
    friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }

    [[nodiscard]] ParamPoly pow(unsigned n) const;
    [[nodiscard]] ParamPoly mul_monomial(const Monomial& m, const Rational& c) const;

    /// Exact quotient if `d` divides this polynomial, otherwise nullopt.
    [[nodiscard]] std::optional<ParamPoly> divide_exact(const ParamPoly& d) const;

    /// Simultaneous substitution. Throws std::invalid_argument on cyclic
    /// bindings or when `pi` is bound.
    [[nodiscard]] ParamPoly substitute(const Bindings& b) const;

    /// Splits into sum(coeff_u * u) + remainder for the given unknowns.
    /// Throws std::domain_error if some term is nonlinear in the unknowns.
    struct LinearForm;
    [[nodiscard]] LinearForm collect_linear(std::span<const Param> unknowns) const;

    /// Floating evaluation; `pi` defaults to its numeric value when unbound.
    /// Throws std::out_of_range for any other unbound parameter.
    [[nodiscard]] long double evaluate(const NumericBindings& values) const;

    /// Canonical text, independent of interning order.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b);

private:
    friend class PolyAccumulator;
    std::vector<Term> terms_;
};

struct ParamPoly::LinearForm {
    std::vector<ParamPoly> coefficients;
    ParamPoly remainder;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

/// Hash-based sum of products; the kernel behind multiplication and the
/// trigonometric product expansion.
class PolyAccumulator {
public:
    void add(const ParamPoly& p);
    void add_scaled(const ParamPoly& p, const Rational& c);
    /// this += c * a * b
    void add_product(const ParamPoly& a, const ParamPoly& b, const Rational& c);
    void add_product(const ParamPoly& a, const ParamPoly& b);
    [[nodiscard]] bool empty() const { return map_.empty(); }
    [[nodiscard]] ParamPoly finish(const Rational& scale = Rational(1));

private:
    absl::flat_hash_map<Monomial, Rational> map_;
};

/// Parameters bound in `b` that also appear in some right-hand side, in a
/// cycle; empty when the bindings are acyclic.
std::vector<Param> binding_cycle(const Bindings& b);

}  // namespace mjets

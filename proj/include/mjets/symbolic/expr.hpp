#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mjets/symbolic/param_poly.hpp"
#include "mjets/symbolic/rational.hpp"

namespace mjets {

/// Expression tree for the textual grammar shared by polynomials, scripts and
/// the closed-form first integrals:
///
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := ('-'|'+') unary | power
///   power  := atom ('^' unary)?
///   atom   := number | ident | ident '(' expr ')' | '(' expr ')'
///
/// Numbers are integers or decimals (`0.25` is read as the exact 1/4).
/// Recognized functions: ln, log (natural), exp, sqrt.
class Expr {
public:
    enum class Op { number, variable, add, sub, mul, div, pow, neg, call };

    Expr() = default;
    static Expr number(Rational q);
    static Expr variable(std::string name);

    [[nodiscard]] Op op() const { return node_->op; }
    [[nodiscard]] bool valid() const { return node_ != nullptr; }

    /// Exact conversion; throws std::domain_error for functions, division by
    /// a non-constant, or non-integer / negative exponents.
    [[nodiscard]] ParamPoly to_poly() const;

    using Lookup = std::function<long double(const std::string&)>;
    [[nodiscard]] long double eval(const Lookup& lookup) const;

    /// Symbolic partial derivative.
    [[nodiscard]] Expr diff(const std::string& var) const;

    /// Replaces variables by expressions (simultaneous).
    [[nodiscard]] Expr substitute(const std::function<const Expr*(const std::string&)>& image) const;

    [[nodiscard]] std::vector<std::string> variables() const;
    [[nodiscard]] std::string to_string() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr pow(const Expr& a, const Expr& b);
    static Expr call(std::string fn, const Expr& arg);

private:
    struct Node {
        Op op = Op::number;
        Rational value;
        std::string name;  // variable or function name
        std::vector<Expr> kids;
    };
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Expr make(Op op, std::vector<Expr> kids, std::string name = {});

    std::shared_ptr<const Node> node_;
};

/// Parse error with the 0-based column of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what + " at column " + std::to_string(column + 1)), column_(column) {}
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

Expr parse_expr(std::string_view text);

}  // namespace mjets

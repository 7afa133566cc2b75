#include "mjets/symbolic/expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace mjets {

Expr Expr::make(Op op, std::vector<Expr> kids, std::string name) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->kids = std::move(kids);
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::number(Rational q) {
    auto n = std::make_shared<Node>();
    n->op = Op::number;
    n->value = std::move(q);
    return Expr(std::move(n));
}

Expr Expr::variable(std::string name) { return make(Op::variable, {}, std::move(name)); }

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::add, {a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::sub, {a, b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::mul, {a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::div, {a, b}); }
Expr operator-(const Expr& a) { return Expr::make(Expr::Op::neg, {a}); }
Expr pow(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::pow, {a, b}); }

Expr Expr::call(std::string fn, const Expr& arg) {
    if (fn != "ln" && fn != "log" && fn != "exp" && fn != "sqrt") {
        throw std::invalid_argument("unknown function '" + fn + "'");
    }
    if (fn == "log") fn = "ln";
    return make(Op::call, {arg}, std::move(fn));
}

ParamPoly Expr::to_poly() const {
    const Node& n = *node_;
    switch (n.op) {
        case Op::number:
            return ParamPoly(n.value);
        case Op::variable:
            return ParamPoly(Param(n.name));
        case Op::add:
            return n.kids[0].to_poly() + n.kids[1].to_poly();
        case Op::sub:
            return n.kids[0].to_poly() - n.kids[1].to_poly();
        case Op::mul:
            return n.kids[0].to_poly() * n.kids[1].to_poly();
        case Op::neg:
            return -n.kids[0].to_poly();
        case Op::div: {
            const ParamPoly den = n.kids[1].to_poly();
            if (!den.is_unit()) throw std::domain_error("division by a non-unit in polynomial expression");
            const Term& t = den.terms()[0];
            return n.kids[0].to_poly() * ParamPoly(Monomial().divide(t.mono), Rational(1) / t.coef);
        }
        case Op::pow: {
            const ParamPoly e = n.kids[1].to_poly();
            if (!e.is_constant()) throw std::domain_error("non-constant exponent in polynomial expression");
            const Rational q = e.constant_term();
            if (!q.is_integer() || q > Rational(4096) || q < Rational(-4096)) {
                throw std::domain_error("exponent must be a small integer");
            }
            ParamPoly base = n.kids[0].to_poly();
            if (q.sign() < 0) {
                if (!base.is_unit()) throw std::domain_error("negative exponent of a non-unit");
                const Term& t = base.terms()[0];
                base = ParamPoly(Monomial().divide(t.mono), Rational(1) / t.coef);
            }
            return base.pow(static_cast<unsigned>(std::fabs(q.to_double())));
        }
        case Op::call:
            throw std::domain_error("function '" + n.name + "' is not polynomial");
    }
    return {};
}

long double Expr::eval(const Lookup& lookup) const {
    const Node& n = *node_;
    switch (n.op) {
        case Op::number:
            return n.value.to_long_double();
        case Op::variable:
            if (n.name == "pi") return std::numbers::pi_v<long double>;
            return lookup(n.name);
        case Op::add:
            return n.kids[0].eval(lookup) + n.kids[1].eval(lookup);
        case Op::sub:
            return n.kids[0].eval(lookup) - n.kids[1].eval(lookup);
        case Op::mul:
            return n.kids[0].eval(lookup) * n.kids[1].eval(lookup);
        case Op::div:
            return n.kids[0].eval(lookup) / n.kids[1].eval(lookup);
        case Op::neg:
            return -n.kids[0].eval(lookup);
        case Op::pow: {
            const long double b = n.kids[0].eval(lookup);
            if (n.kids[1].op() == Op::number && n.kids[1].node_->value.is_integer()) {
                const long double e = n.kids[1].node_->value.to_long_double();
                if (std::fabs(e) <= 64) {
                    long double r = 1;
                    for (int i = 0; i < static_cast<int>(std::fabs(e)); ++i) r *= b;
                    return e < 0 ? 1 / r : r;
                }
            }
            return std::pow(b, n.kids[1].eval(lookup));
        }
        case Op::call: {
            const long double a = n.kids[0].eval(lookup);
            if (n.name == "ln") return std::log(a);
            if (n.name == "exp") return std::exp(a);
            return std::sqrt(a);
        }
    }
    return 0;
}

Expr Expr::diff(const std::string& var) const {
    const Node& n = *node_;
    const Expr zero = number(Rational(0));
    switch (n.op) {
        case Op::number:
            return zero;
        case Op::variable:
            return number(Rational(n.name == var ? 1 : 0));
        case Op::add:
            return n.kids[0].diff(var) + n.kids[1].diff(var);
        case Op::sub:
            return n.kids[0].diff(var) - n.kids[1].diff(var);
        case Op::neg:
            return -n.kids[0].diff(var);
        case Op::mul:
            return n.kids[0].diff(var) * n.kids[1] + n.kids[0] * n.kids[1].diff(var);
        case Op::div:
            return (n.kids[0].diff(var) * n.kids[1] - n.kids[0] * n.kids[1].diff(var)) /
                   pow(n.kids[1], number(Rational(2)));
        case Op::pow: {
            const Expr& b = n.kids[0];
            const Expr& e = n.kids[1];
            if (e.variables().empty()) {
                return e * pow(b, e - number(Rational(1))) * b.diff(var);
            }
            // d(b^e) = b^e (e' ln b + e b'/b)
            return *this * (e.diff(var) * call("ln", b) + e * b.diff(var) / b);
        }
        case Op::call: {
            const Expr& a = n.kids[0];
            if (n.name == "ln") return a.diff(var) / a;
            if (n.name == "exp") return *this * a.diff(var);
            return a.diff(var) / (number(Rational(2)) * *this);
        }
    }
    return zero;
}

Expr Expr::substitute(const std::function<const Expr*(const std::string&)>& image) const {
    const Node& n = *node_;
    if (n.op == Op::number) return *this;
    if (n.op == Op::variable) {
        const Expr* e = image(n.name);
        return e ? *e : *this;
    }
    std::vector<Expr> kids;
    kids.reserve(n.kids.size());
    for (const auto& k : n.kids) kids.push_back(k.substitute(image));
    return make(n.op, std::move(kids), n.name);
}

std::vector<std::string> Expr::variables() const {
    std::set<std::string> out;
    std::function<void(const Expr&)> walk = [&](const Expr& e) {
        if (e.node_->op == Op::variable && e.node_->name != "pi") out.insert(e.node_->name);
        for (const auto& k : e.node_->kids) walk(k);
    };
    walk(*this);
    return {out.begin(), out.end()};
}

std::string Expr::to_string() const {
    const Node& n = *node_;
    auto wrap = [](const Expr& e) {
        const Op o = e.op();
        if (o == Op::number) {
            const std::string s = e.node_->value.to_string();
            return (s.find('/') != std::string::npos || s[0] == '-') ? "(" + s + ")" : s;
        }
        if (o == Op::variable || o == Op::call) return e.to_string();
        return "(" + e.to_string() + ")";
    };
    switch (n.op) {
        case Op::number:
            return n.value.to_string();
        case Op::variable:
            return n.name;
        case Op::add:
            return n.kids[0].to_string() + " + " + wrap(n.kids[1]);
        case Op::sub:
            return n.kids[0].to_string() + " - " + wrap(n.kids[1]);
        case Op::mul:
            return wrap(n.kids[0]) + "*" + wrap(n.kids[1]);
        case Op::div:
            return wrap(n.kids[0]) + "/" + wrap(n.kids[1]);
        case Op::neg:
            return "-" + wrap(n.kids[0]);
        case Op::pow:
            return wrap(n.kids[0]) + "^" + wrap(n.kids[1]);
        case Op::call:
            return n.name + "(" + n.kids[0].to_string() + ")";
    }
    return {};
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Expr parse() {
        Expr e = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr expr() {
        Expr e = term();
        for (;;) {
            if (accept('+')) {
                e = e + term();
            } else if (accept('-')) {
                e = e - term();
            } else {
                return e;
            }
        }
    }

    Expr term() {
        Expr e = unary();
        for (;;) {
            if (accept('*')) {
                e = e * unary();
            } else if (accept('/')) {
                e = e / unary();
            } else {
                return e;
            }
        }
    }

    Expr unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Expr power() {
        Expr b = atom();
        if (accept('^')) return pow(b, unary());
        return b;
    }

    Expr atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            skip();
            if (pos_ < s_.size() && s_[pos_] == '(') {
                ++pos_;
                Expr arg = expr();
                if (!accept(')')) throw ParseError("expected ')'", pos_);
                try {
                    return Expr::call(name, arg);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what(), start);
                }
            }
            return Expr::variable(std::move(name));
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    Expr number() {
        const std::size_t start = pos_;
        std::string digits;
        int frac = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                digits += s_[pos_++];
                ++frac;
            }
        }
        if (digits.empty()) throw ParseError("malformed number", start);
        long exp10 = -frac;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            int sign = 1;
            if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) sign = s_[p++] == '-' ? -1 : 1;
            if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
                long e = 0;
                while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
                    e = e * 10 + (s_[p++] - '0');
                    if (e > 4000) throw ParseError("exponent too large", start);
                }
                exp10 += sign * e;
                pos_ = p;
            }
        }
        mpz_class n(digits, 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
        mpq_class q = exp10 >= 0 ? mpq_class(n * scale) : mpq_class(n, scale);
        q.canonicalize();
        return Expr::number(Rational(q));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace mjets

#pragma once

#include <vector>

#include "mjets/trig/quasi_trig.hpp"

namespace mjets {

/// Truncated power series sum_{k=0..order} c_k(theta) r^k.
///
/// `truncated` records whether some operation dropped nonzero terms beyond
/// `order`; a series built from exact data with nothing dropped is exact.
class RSeries {
public:
    explicit RSeries(unsigned order = 0, bool truncated = false);

    [[nodiscard]] unsigned order() const { return order_; }
    [[nodiscard]] bool truncated() const { return truncated_; }
    void set_truncated(bool t) { truncated_ = t; }

    [[nodiscard]] const QuasiTrigPoly& operator[](unsigned k) const;
    QuasiTrigPoly& coeff(unsigned k);
    /// Drops orders above `order`.
    [[nodiscard]] RSeries truncate(unsigned order) const;

    RSeries& operator+=(const RSeries& o);
    RSeries& operator-=(const RSeries& o);
    friend RSeries operator+(RSeries a, const RSeries& b) { return a += b; }
    friend RSeries operator-(RSeries a, const RSeries& b) { return a -= b; }
    friend RSeries operator*(const RSeries& a, const RSeries& b);
    [[nodiscard]] RSeries scaled(const Rational& c) const;

    /// Formal d/dr, one order lower.
    [[nodiscard]] RSeries d_dr() const;
    /// F(theta, L(theta, r)); L must have zero constant term.
    [[nodiscard]] RSeries compose(const RSeries& L) const;
    [[nodiscard]] RSeries substitute(const Bindings& b) const;
    [[nodiscard]] long double evaluate(long double theta, long double r, const NumericBindings& values) const;

    friend bool operator==(const RSeries& a, const RSeries& b);

private:
    unsigned order_;
    bool truncated_;
    std::vector<QuasiTrigPoly> c_;
};

inline RSeries series_compose(const RSeries& F, const RSeries& L) { return F.compose(L); }
inline RSeries series_d_dr(const RSeries& F) { return F.d_dr(); }

}  // namespace mjets

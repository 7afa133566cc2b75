#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mjets/symbolic/param_poly.hpp"

namespace mjets {

/// Trigonometric polynomial sum_k (c_k cos k theta + s_k sin k theta) with
/// ParamPoly coefficients. Harmonic 0 carries only the constant (cosine)
/// mode. Trailing zero harmonics are trimmed, so equality is structural.
class FourierPoly {
public:
    FourierPoly() = default;
    FourierPoly(ParamPoly constant);  // NOLINT(google-explicit-constructor)

    static FourierPoly cos(unsigned k, ParamPoly coef = ParamPoly(1));
    static FourierPoly sin(unsigned k, ParamPoly coef = ParamPoly(1));

    [[nodiscard]] bool is_zero() const { return cos_.empty(); }
    /// One past the highest harmonic present.
    [[nodiscard]] unsigned harmonics() const { return static_cast<unsigned>(cos_.size()); }
    [[nodiscard]] const ParamPoly& cos_coef(unsigned k) const;
    [[nodiscard]] const ParamPoly& sin_coef(unsigned k) const;
    /// Constant mode.
    [[nodiscard]] const ParamPoly& mean() const { return cos_coef(0); }

    void add_cos(unsigned k, const ParamPoly& p);
    void add_sin(unsigned k, const ParamPoly& p);

    FourierPoly& operator+=(const FourierPoly& o);
    FourierPoly& operator-=(const FourierPoly& o);
    FourierPoly& operator*=(const Rational& c);
    FourierPoly operator-() const;
    friend FourierPoly operator+(FourierPoly a, const FourierPoly& b) { return a += b; }
    friend FourierPoly operator-(FourierPoly a, const FourierPoly& b) { return a -= b; }
    friend FourierPoly operator*(FourierPoly a, const Rational& c) { return a *= c; }
    /// Product, re-expanded with the product-to-sum identities.
    friend FourierPoly operator*(const FourierPoly& a, const FourierPoly& b);
    /// Multiplies every coefficient by a polynomial.
    [[nodiscard]] FourierPoly scaled(const ParamPoly& p) const;

    [[nodiscard]] FourierPoly derivative() const;
    /// Value at theta = 0, which is also the value at every multiple of 2 pi.
    [[nodiscard]] ParamPoly at_zero() const;
    [[nodiscard]] long double evaluate(long double theta, const NumericBindings& values) const;

    [[nodiscard]] FourierPoly substitute(const Bindings& b) const;
    /// Total number of polynomial terms over all modes.
    [[nodiscard]] std::size_t term_count() const;

    friend bool operator==(const FourierPoly& a, const FourierPoly& b) = default;

    [[nodiscard]] std::string to_string() const;

private:
    friend class FourierAccumulator;
    void ensure(unsigned k);
    void trim();

    std::vector<ParamPoly> cos_;
    std::vector<ParamPoly> sin_;  // sin_[0] is always zero
};

/// Sums of Fourier products into fixed output modes; every contribution is
/// doubled internally so the half factors of product-to-sum stay integral
/// until finish().
class FourierAccumulator {
public:
    /// this += a * b
    void add_product(const FourierPoly& a, const FourierPoly& b);
    void add(const FourierPoly& a);
    [[nodiscard]] FourierPoly finish();

private:
    void grow(unsigned k);
    std::vector<PolyAccumulator> cos_;
    std::vector<PolyAccumulator> sin_;
};

std::ostream& operator<<(std::ostream& os, const FourierPoly& f);

}  // namespace mjets

#pragma once

#include <string>
#include <vector>

#include "mjets/trig/fourier.hpp"

namespace mjets {

/// Quasi-trigonometric polynomial sum_p theta^p * layer_p(theta).
class QuasiTrigPoly {
public:
    QuasiTrigPoly() = default;
    QuasiTrigPoly(FourierPoly f);  // NOLINT(google-explicit-constructor)
    QuasiTrigPoly(ParamPoly c) : QuasiTrigPoly(FourierPoly(std::move(c))) {}  // NOLINT(google-explicit-constructor)

    /// theta^p
    static QuasiTrigPoly theta(unsigned p);

    [[nodiscard]] bool is_zero() const { return layers_.empty(); }
    /// One past the highest theta power.
    [[nodiscard]] unsigned layers() const { return static_cast<unsigned>(layers_.size()); }
    [[nodiscard]] const FourierPoly& layer(unsigned p) const;
    void add_to_layer(unsigned p, const FourierPoly& f);

    QuasiTrigPoly& operator+=(const QuasiTrigPoly& o);
    QuasiTrigPoly& operator-=(const QuasiTrigPoly& o);
    QuasiTrigPoly& operator*=(const Rational& c);
    QuasiTrigPoly operator-() const;
    friend QuasiTrigPoly operator+(QuasiTrigPoly a, const QuasiTrigPoly& b) { return a += b; }
    friend QuasiTrigPoly operator-(QuasiTrigPoly a, const QuasiTrigPoly& b) { return a -= b; }
    friend QuasiTrigPoly operator*(QuasiTrigPoly a, const Rational& c) { return a *= c; }
    friend QuasiTrigPoly operator*(const QuasiTrigPoly& a, const QuasiTrigPoly& b);
    [[nodiscard]] QuasiTrigPoly scaled(const ParamPoly& p) const;

    /// d/dtheta
    [[nodiscard]] QuasiTrigPoly derivative() const;
    /// The antiderivative V with V(0) = 0.
    [[nodiscard]] QuasiTrigPoly antiderivative() const;
    [[nodiscard]] ParamPoly at_zero() const;
    /// Exact value at theta = 2 pi with pi kept symbolic.
    [[nodiscard]] ParamPoly eval_2pi() const;
    [[nodiscard]] long double evaluate(long double theta, const NumericBindings& values) const;

    [[nodiscard]] QuasiTrigPoly substitute(const Bindings& b) const;
    [[nodiscard]] std::size_t term_count() const;

    friend bool operator==(const QuasiTrigPoly& a, const QuasiTrigPoly& b) = default;
    [[nodiscard]] std::string to_string() const;

private:
    friend class QuasiTrigAccumulator;
    void trim();
    std::vector<FourierPoly> layers_;
};

/// Sum of quasi-trigonometric products.
class QuasiTrigAccumulator {
public:
    void add_product(const QuasiTrigPoly& a, const QuasiTrigPoly& b);
    void add(const QuasiTrigPoly& a);
    [[nodiscard]] QuasiTrigPoly finish();

private:
    std::vector<FourierAccumulator> layers_;
};

/// Convenience: integrates and evaluates at 2 pi.
ParamPoly eval_2pi(const QuasiTrigPoly& u);
QuasiTrigPoly antiderivative(const QuasiTrigPoly& u);
QuasiTrigPoly trig_mul(const QuasiTrigPoly& a, const QuasiTrigPoly& b);

}  // namespace mjets

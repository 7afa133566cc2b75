#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mjets/symbolic/expr.hpp"
#include "mjets/symbolic/param_poly.hpp"

namespace mjets {

/// Polynomial sum c_{kl} x^k y^l with ParamPoly coefficients.
class PlanarPoly {
public:
    using Exponent = std::pair<unsigned, unsigned>;

    PlanarPoly() = default;
    /// Splits a polynomial in the parameters `x`, `y` by their exponents.
    static PlanarPoly from_poly(const ParamPoly& p);
    static PlanarPoly parse(std::string_view text) { return from_poly(ParamPoly::parse(text)); }

    [[nodiscard]] const std::map<Exponent, ParamPoly>& coefficients() const { return c_; }
    [[nodiscard]] const ParamPoly& coeff(unsigned k, unsigned l) const;
    void add(unsigned k, unsigned l, const ParamPoly& p);
    [[nodiscard]] unsigned degree() const;
    [[nodiscard]] bool is_zero() const { return c_.empty(); }

    [[nodiscard]] PlanarPoly substitute(const Bindings& b) const;
    [[nodiscard]] ParamPoly to_poly() const;
    [[nodiscard]] std::string to_string() const { return to_poly().to_string(); }

    friend bool operator==(const PlanarPoly& a, const PlanarPoly& b) { return a.c_ == b.c_; }

private:
    std::map<Exponent, ParamPoly> c_;
};

struct PlanarField {
    PlanarPoly P;
    PlanarPoly Q;
};

/// Unperturbed field plus optional perturbations of order 1 and 2, with the
/// first integral H and integrating factor R as expressions in x, y.
struct PerturbedSystem {
    std::string name;
    PlanarField Z;
    std::optional<PlanarField> Z1;
    std::optional<PlanarField> Z2;
    std::optional<Expr> H;
    std::optional<Expr> R;
    /// Family parameters the system depends on (alpha, ...).
    std::vector<std::string> family;
    /// Values already substituted for family parameters.
    Bindings family_values;
    /// Named quantities usable in assumptions (`d` for H).
    std::map<std::string, ParamPoly> definitions;

    /// Throws std::invalid_argument unless the linear part is exactly
    /// (-y, x) and there are no constant terms.
    void validate() const;
    /// Substitutes family parameters in the fields and in H, R.
    [[nodiscard]] PerturbedSystem bind_family(const Bindings& values) const;
    /// Substitutes perturbation parameters (condition sets).
    [[nodiscard]] PerturbedSystem apply(const Bindings& conditions) const;
    /// Family parameters still symbolic.
    [[nodiscard]] std::vector<std::string> free_family() const;
};

std::vector<std::string> catalog_names();

/// One of LV, H, CR1, S1, S2, S3, S4. Throws std::invalid_argument for
/// other names. Family parameters missing from `family` stay symbolic.
PerturbedSystem catalog(std::string_view name, const Bindings& family = {});

/// Attaches P_i = sum a_{ikl} x^k y^l, Q_i = sum b_{ikl} x^k y^l over
/// 1 <= k + l <= degree.
PerturbedSystem generic_perturbation(PerturbedSystem s, int order, int degree);

/// Parameters a_{ikl}, b_{ikl} of a generic perturbation, in canonical order.
std::vector<Param> perturbation_params(int order, int degree);

/// Parses the `key = value` system-definition format. Errors carry the
/// 1-based line number.
PerturbedSystem parse_system(std::string_view text, std::string name = "custom");
PerturbedSystem load_system_file(const std::string& path);

}  // namespace mjets

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace mjets {

enum class ParamKind : std::uint8_t {
    transcendental_pi,
    family,
    auxiliary,
    perturbation,
};

/// Descriptor of an interned parameter name.
///
/// Perturbation parameters follow the naming `a<i><k><l>` / `b<i><k><l>`:
/// coefficient of x^k y^l in P_i (slot a) or Q_i (slot b). Auxiliary
/// parameters are `A<k>`. `pi` is the formal transcendental. Everything else
/// is a family parameter (alpha, beta, ...).
struct ParamInfo {
    std::string name;
    ParamKind kind = ParamKind::family;
    int order = 0;   // perturbation order i
    int xexp = 0;    // k
    int yexp = 0;    // l
    char slot = 0;   // 'a' or 'b'
    int aux_index = 0;
};

/// Interned parameter handle. Cheap to copy; the canonical ordering compares
/// by (kind, structured fields, name) and is independent of interning order.
class Param {
public:
    Param() = default;
    explicit Param(std::string_view name);

    static Param pi() { return Param("pi"); }
    static Param perturbation(char slot, int order, int k, int l);
    static Param auxiliary(int k);
    static Param from_id(std::uint16_t id) {
        Param p;
        p.id_ = id;
        return p;
    }

    [[nodiscard]] std::uint16_t id() const { return id_; }
    [[nodiscard]] bool valid() const { return id_ != 0; }
    [[nodiscard]] const ParamInfo& info() const;
    [[nodiscard]] const std::string& name() const { return info().name; }
    [[nodiscard]] ParamKind kind() const { return info().kind; }
    [[nodiscard]] bool is_pi() const { return kind() == ParamKind::transcendental_pi; }

    friend bool operator==(Param a, Param b) { return a.id_ == b.id_; }
    /// Canonical (print) order.
    friend std::strong_ordering operator<=>(Param a, Param b);

private:
    std::uint16_t id_ = 0;
};

/// Canonical rank of a parameter id; smaller ranks print first.
int canonical_compare(std::uint16_t a, std::uint16_t b);

/// Parses a name into its structured descriptor without interning it.
ParamInfo classify_param_name(std::string_view name);

}  // namespace mjets

template <>
struct std::hash<mjets::Param> {
    std::size_t operator()(mjets::Param p) const noexcept { return p.id(); }
};

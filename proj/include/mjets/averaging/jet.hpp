#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mjets/polar/polar_form.hpp"
#include "mjets/trig/quasi_trig.hpp"

namespace mjets {

/// Coefficient functions l_{i,k}(theta), k = 1..j, of the r-expansion of
/// the order-i flow term. The order-1 term is dL/d eps and the order-2 term
/// is d^2L/d eps^2 (both at eps = 0), so the displacement is
/// eps M1 + eps^2 M2 / 2 + O(eps^3).
struct FlowJet {
    int order = 0;
    std::vector<QuasiTrigPoly> l;  // l[0] unused

    [[nodiscard]] unsigned j() const { return l.empty() ? 0 : static_cast<unsigned>(l.size() - 1); }
    [[nodiscard]] const QuasiTrigPoly& operator[](unsigned k) const { return l.at(k); }
};

/// m_{i,k}, k = 1..j: the j-jet of the order-i averaging function.
struct Jet {
    int order = 0;
    std::vector<ParamPoly> m;  // m[0] unused

    [[nodiscard]] unsigned j() const { return m.empty() ? 0 : static_cast<unsigned>(m.size() - 1); }
    [[nodiscard]] const ParamPoly& operator[](unsigned k) const { return m.at(k); }
    [[nodiscard]] Jet substitute(const Bindings& b) const;
    [[nodiscard]] bool is_zero() const;
    /// sum m_k r^k at a numeric point.
    [[nodiscard]] long double evaluate(long double r, const NumericBindings& values) const;

    friend bool operator==(const Jet& a, const Jet& b) = default;
};

struct JetOptions {
    unsigned cap = kDefaultOrderCap;
    /// Receives one line of sparsity statistics per computed order.
    std::function<void(const std::string&)> log;
};

FlowJet flow_jet_0(const PolarForm& polar, unsigned j, const JetOptions& opt = {});
FlowJet flow_jet_1(const PolarForm& polar, const FlowJet& L0, unsigned j, const JetOptions& opt = {});
FlowJet flow_jet_2(const PolarForm& polar, const FlowJet& L0, const FlowJet& L1, unsigned j,
                   const JetOptions& opt = {});

/// l_{i,k}(2 pi) for k = 1..j.
Jet jet_at_2pi(const FlowJet& L);

/// to_polar + flow jets + evaluation at 2 pi. Order 2 requires the
/// second-order perturbation Z2 or the first-order data Z1 to be attached.
Jet averaging_jet(const PerturbedSystem& s, int i, unsigned j, const JetOptions& opt = {});

/// Both jets from one pass (the second-order recursion needs the first).
struct JetPair {
    Jet first;
    Jet second;
};
JetPair averaging_jets(const PerturbedSystem& s, unsigned j, const JetOptions& opt = {});

}  // namespace mjets

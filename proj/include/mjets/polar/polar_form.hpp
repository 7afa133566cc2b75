#pragma once

#include "mjets/polar/system.hpp"
#include "mjets/trig/rseries.hpp"

namespace mjets {

/// dr/dtheta = F0 + eps F1 + eps^2 F2, each expanded in r to `order`.
///
/// With N = c Pdot + s Qdot = N0 + eps N1 + eps^2 N2 and
/// D = (c Qdot - s Pdot)/r = D0 + eps D1 + eps^2 D2:
///   F0 = N0/D0, F1 = (N1 - F0 D1)/D0, F2 = (N2 - F1 D1 - F0 D2)/D0,
/// with 1/D0 inverted as a geometric series. f0 = N0/r^2 and
/// g0 = (D0 - 1)/r are kept exactly (they are polynomial in r).
struct PolarForm {
    unsigned order = 0;
    RSeries F0;
    RSeries F1;
    RSeries F2;
    RSeries f0;
    RSeries g0;
    int eta1 = 2;
    int eta2 = 3;
};

inline constexpr unsigned kDefaultOrderCap = 17;

/// Throws std::invalid_argument when the system fails validation and
/// std::out_of_range when `order` exceeds `cap`.
PolarForm to_polar(const PerturbedSystem& s, unsigned order, unsigned cap = kDefaultOrderCap);

/// c^a s^b in the Fourier basis.
FourierPoly trig_monomial(unsigned a, unsigned b);

}  // namespace mjets

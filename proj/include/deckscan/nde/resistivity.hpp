#pragma once

#include "deckscan/errors.hpp"

namespace deckscan::nde {

/// Raw four-electrode reading: current through the outer pair, potential
/// across the inner pair, electrodes spaced a apart.
struct ERReading {
    double volts = 0.0;
    double amps = 0.0;
    double spacing_m = 0.05;
};

struct ERResult {
    double resistivity_ohm_m = 0.0;
    bool flagged = false;  // non-physical (negative) reading
};

/// Wenner relation rho = 2*pi*a*V/I.
ERResult er_resistivity(const ERReading& reading);

}  // namespace deckscan::nde

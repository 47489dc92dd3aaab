#include "deckscan/nde/resistivity.hpp"

#include <cmath>

#include "deckscan/geometry.hpp"

namespace deckscan::nde {

ERResult er_resistivity(const ERReading& reading) {
    if (reading.amps == 0.0) throw invalid_input_error("er_resistivity: zero current");
    if (!(reading.spacing_m > 0.0))
        throw invalid_input_error("er_resistivity: spacing must be positive");
    if (!std::isfinite(reading.volts) || !std::isfinite(reading.amps))
        throw invalid_input_error("er_resistivity: non-finite reading");
    ERResult r;
    r.resistivity_ohm_m = 2.0 * kPi * reading.spacing_m * reading.volts / reading.amps;
    r.flagged = r.resistivity_ohm_m < 0.0;
    return r;
}

}  // namespace deckscan::nde

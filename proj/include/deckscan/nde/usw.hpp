#pragma once

#include <vector>

#include "deckscan/nde/signal.hpp"

namespace deckscan::nde {

/// Two surface-wave receivers a fixed distance apart.
struct ReceiverPair {
    TimeSignal a;  // nearer the impact
    TimeSignal b;  // farther, lags a
    double spacing_m = 0.1;
};

/// Per-frequency phase velocity C(f) = 2*pi*f*d / dphi(f) with dphi the
/// unwrapped cross-spectrum phase lag of b behind a.
struct BandPoint {
    double f_hz = 0.0;
    double phase_rad = 0.0;
    double velocity_mps = 0.0;
    double coherence = 1.0;
    bool flagged = false;  // low coherence or vanishing phase
};

struct USWParams {
    double f_lo_hz = 10e3;
    double f_hi_hz = 30e3;
    double min_coherence = 0.9;
};

std::vector<BandPoint> usw_phase_velocity(const TimeSignal& a, const TimeSignal& b,
                                          double spacing_m, const USWParams& params);

/// Mean velocity over the unflagged band points.
double usw_mean_velocity(const std::vector<BandPoint>& points);

/// Young's modulus from the surface-wave velocity through the shear
/// velocity: Cs = Cr*(1+nu)/(0.87+1.12*nu), E = 2*rho*(1+nu)*Cs^2.
double usw_modulus(double c_r_mps, double density_kgpm3, double poisson);

inline constexpr double kPaPerKsi = 6.894757e6;

}  // namespace deckscan::nde

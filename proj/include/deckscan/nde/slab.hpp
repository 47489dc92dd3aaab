#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deckscan/geometry.hpp"
#include "deckscan/nde/resistivity.hpp"
#include "deckscan/nde/usw.hpp"

namespace deckscan::nde {

/// Plan-view defect rectangle in the deck frame, half-open [x0,x1) x [y0,y1).
struct SlabDefect {
    enum class Kind { delamination, modulus, corrosion };
    Kind kind = Kind::delamination;
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
    double depth_m = 0.0;             // delamination depth below the surface
    double modulus_multiplier = 1.0;  // reduced-modulus regions

    bool contains(double x, double y) const { return x >= x0 && x < x1 && y >= y0 && y < y1; }
};

/// Ground-truth deck used to synthesize station records for validation.
struct SlabModel {
    double length_m = 0.0;
    double width_m = 0.0;
    double thickness_m = 0.2;
    double sound_rho_ohm_m = 450.0;
    double corroded_rho_ohm_m = 80.0;
    std::vector<SlabDefect> defects;

    struct CellState {
        double thickness_m = 0.2;
        double delam_depth_m = 0.0;  // 0: none
        double modulus_multiplier = 1.0;
        bool corroded = false;
        double rho_ohm_m = 450.0;
    };

    CellState query(double x, double y) const;
    void validate() const;
};

/// The stock validation layout: shallow/intermediate/deep delaminations
/// (0.05/0.10/0.17 m), two reduced-modulus patches, two salted corrosion
/// patches; the big defects span several measurement stations, one
/// shallow defect is deliberately smaller than the station lattice.
SlabModel default_validation_slab(double length_m, double width_m);

/// Physics configuration shared by the signal generator and analyzers.
struct NdePhysics {
    double cp_mps = 4000.0;
    double density_kgpm3 = 2400.0;
    double poisson = 0.2;
    double beta1 = 0.95;
    double usw_spacing_m = 0.1;
    double er_spacing_m = 0.05;
    double er_current_a = 1.0e-3;
    double sample_rate_hz = 200e3;
    int ie_samples = 2048;
    int usw_samples = 2048;
    double snr_db = 20.0;
    double flexural_fraction = 0.25;    // synthetic flexural peak at this * f_full
    double shallow_threshold_m = 0.07;  // delams shallower than this ring flexural

    double rayleigh_velocity_mps() const;
    double f_fullthickness_hz(double thickness_m) const { return beta1 * cp_mps / thickness_m; }
};

struct StationSignals {
    TimeSignal ie;
    ReceiverPair usw;
    ERReading er;
};

/// Synthetic sensor payloads for one station: a damped thickness-stretch
/// (plus flexural, for shallow delaminations) impact response, a pure
/// delayed receiver pair at the cell's surface-wave speed, and a Wenner
/// reading consistent with the cell's resistivity.
StationSignals synth_station_signals(const SlabModel& slab, const Vec2& position,
                                     const NdePhysics& physics, std::uint64_t seed);

void save_slab(const SlabModel& slab, const std::string& path);
SlabModel load_slab(const std::string& path);

}  // namespace deckscan::nde

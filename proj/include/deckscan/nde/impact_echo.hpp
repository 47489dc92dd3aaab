#pragma once

#include "deckscan/nde/signal.hpp"

namespace deckscan::nde {

enum class Condition { good = 0, fair = 1, poor = 2, serious = 3 };

const char* condition_name(Condition c);

/// Reflector depth from the thickness-stretch resonance: H = b1*Cp/f.
/// b1 is the Poisson-ratio correction; values outside the normal
/// concrete range [0.945, 0.957] flag the result instead of failing.
struct DepthResult {
    double depth_m = 0.0;
    bool beta1_warning = false;
};

DepthResult ie_depth(double f_ie_hz, double cp_mps, double beta1);

/// Frequency-ratio classification bands. The dominant response sitting
/// in the low-frequency flexural band marks a wide/shallow delamination
/// (serious); upward shifts of the stretch peak grade fair/poor.
struct IEClassBands {
    double good_lo = 0.9;
    double good_hi = 1.1;
    double fair_hi = 1.5;           // (good_hi, fair_hi] -> fair, above -> poor
    double low_fair_lo = 0.8;       // [low_fair_lo, good_lo) -> fair (incipient shift down)
    double flexural_fraction = 0.4; // dominant below this * f_full -> serious
};

Condition ie_classify(double f_dominant_hz, double f_fullthickness_hz, const IEClassBands& bands);

struct IEAnalysisParams {
    double cp_mps = 4000.0;
    double beta1 = 0.95;
    double thickness_m = 0.2;       // design slab thickness -> full-thickness frequency
    IEClassBands bands;
    double f_search_min_hz = 500.0; // below this is impact rumble, not structure

    double f_fullthickness_hz() const { return beta1 * cp_mps / thickness_m; }
};

struct IEResult {
    double f_ie_hz = 0.0;   // thickness-stretch peak used for depth
    double depth_m = 0.0;
    Condition condition = Condition::good;
    bool beta1_warning = false;
};

/// Spectrum peak search and classification for one impact record: the
/// global dominant peak decides flexural (serious) responses; the peak
/// in the stretch band above the full-thickness resonance inverts to a
/// reflector depth.
IEResult analyze_ie(const TimeSignal& sig, const IEAnalysisParams& params);

}  // namespace deckscan::nde

#include "deckscan/nde/impact_echo.hpp"

#include <cmath>

namespace deckscan::nde {

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::good: return "good";
        case Condition::fair: return "fair";
        case Condition::poor: return "poor";
        case Condition::serious: return "serious";
    }
    return "unknown";
}

DepthResult ie_depth(double f_ie_hz, double cp_mps, double beta1) {
    if (!(f_ie_hz > 0.0)) throw invalid_input_error("ie_depth: frequency must be positive");
    if (!(cp_mps > 0.0)) throw invalid_input_error("ie_depth: P-wave velocity must be positive");
    if (!(beta1 > 0.0)) throw invalid_input_error("ie_depth: beta1 must be positive");
    DepthResult r;
    r.depth_m = beta1 * cp_mps / f_ie_hz;
    r.beta1_warning = beta1 < 0.945 || beta1 > 0.957;
    return r;
}

Condition ie_classify(double f_dominant_hz, double f_fullthickness_hz,
                      const IEClassBands& bands) {
    if (!(f_fullthickness_hz > 0.0))
        throw invalid_input_error("ie_classify: full-thickness frequency must be positive");
    if (f_dominant_hz < bands.flexural_fraction * f_fullthickness_hz) return Condition::serious;
    const double r = f_dominant_hz / f_fullthickness_hz;
    if (r >= bands.good_lo && r <= bands.good_hi) return Condition::good;
    if (r > bands.good_hi && r <= bands.fair_hi) return Condition::fair;
    if (r > bands.fair_hi) return Condition::poor;
    if (r >= bands.low_fair_lo) return Condition::fair;
    return Condition::poor;
}

IEResult analyze_ie(const TimeSignal& sig, const IEAnalysisParams& params) {
    const AmplitudeSpectrum spec = amplitude_spectrum(sig, Window::hann);
    const double f_full = params.f_fullthickness_hz();
    const double f_max = 0.45 * sig.sample_rate_hz;

    const double f_dom = dominant_frequency(spec, params.f_search_min_hz, f_max);

    IEResult result;
    if (f_dom < params.bands.flexural_fraction * f_full) {
        result.condition = Condition::serious;
        result.f_ie_hz = f_dom;
    } else {
        // Depth comes from the stretch peak at or above the
        // full-thickness resonance.
        result.f_ie_hz = dominant_frequency(spec, 0.6 * f_full, f_max);
        result.condition = ie_classify(result.f_ie_hz, f_full, params.bands);
    }
    const DepthResult d = ie_depth(result.f_ie_hz, params.cp_mps, params.beta1);
    result.depth_m = d.depth_m;
    result.beta1_warning = d.beta1_warning;
    return result;
}

}  // namespace deckscan::nde

#pragma once

#include "deckscan/errors.hpp"
#include "deckscan/geometry.hpp"

namespace deckscan::mission {

// US-survey-unit defaults: curbs keep 1 ft of standoff, each scan covers
// a 6 ft swath, contact measurements happen every 2 ft.
inline constexpr double kFoot = 0.3048;

/// Rectangular deck in a local frame: x runs along the deck length,
/// y across its width. Curbs bound the two long (y) sides.
struct DeckSpec {
    double length = 200.0 * kFoot;
    double width = 20.0 * kFoot;
    double curb_offset = kFoot;          // lateral standoff from each curb
    double scan_width = 6.0 * kFoot;     // swath covered per pass
    Vec2 origin{0.0, 0.0};               // world position of the (0,0) corner

    double surveyable_width() const { return width - 2.0 * curb_offset; }

    void validate() const {
        if (!(length > 0.0) || !(width > 0.0))
            throw invalid_input_error("DeckSpec: dimensions must be positive");
        if (!(curb_offset >= 0.0))
            throw invalid_input_error("DeckSpec: curb offset must be nonnegative");
        if (!(scan_width > 0.0))
            throw invalid_input_error("DeckSpec: scan width must be positive");
        if (!(2.0 * curb_offset < width))
            throw planning_error("DeckSpec: curbs leave no surveyable width");
    }
};

}  // namespace deckscan::mission

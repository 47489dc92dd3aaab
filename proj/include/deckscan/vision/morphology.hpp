#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "deckscan/vision/gradient.hpp"
#include "deckscan/vision/image.hpp"

namespace deckscan::vision {

/// Threshold from the between-class-variance criterion on a 256-bin
/// histogram of the gradient magnitudes.
double otsu_threshold(const Grid<double>& magnitude);

/// Pixels with magnitude strictly above tau; tau = nullopt selects the
/// automatic threshold.
Mask threshold_crack_pixels(const GradientField& field, std::optional<double> tau);

/// One simultaneous cleanup pass over the 3x3 neighborhoods: isolated
/// set pixels are cleared, unset pixels whose set-neighbor fraction
/// exceeds majority_fraction are filled.
Mask morphological_clean(const Mask& mask, double majority_fraction = 5.0 / 8.0);

/// 8-connected component labels, 0 for background. Returns the label
/// grid and the number of components.
std::pair<Grid<int>, int> label_components(const Mask& mask);

/// Clears every 8-connected component smaller than min_pixels.
Mask remove_small_components(const Mask& mask, int min_pixels);

/// Sets every background pixel not 4-connected to the border: pinholes
/// inside detected bands otherwise turn the skeleton into loops.
Mask fill_holes(const Mask& mask);

/// Zhang-Suen thinning to a 1-px-wide 8-connected skeleton.
Mask skeletonize(const Mask& mask);

/// Removes endpoint branches shorter than max_spur_px that terminate at
/// a junction; thinning staircase artifacts go, real crack arms stay.
Mask prune_spurs(const Mask& skeleton, int max_spur_px);

}  // namespace deckscan::vision

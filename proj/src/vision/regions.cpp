#include "deckscan/vision/regions.hpp"

#include <cmath>
#include <limits>

#include "deckscan/vision/morphology.hpp"

namespace deckscan::vision {

std::vector<CrackRegion> extract_regions(const Mask& mask) {
    const auto [labels, count] = label_components(mask);
    std::vector<CrackRegion> regions(count);
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x) {
            const int l = labels.at(x, y);
            if (!l) continue;
            CrackRegion& r = regions[l - 1];
            r.pixels.push_back({x, y});
            r.centroid_x += x;
            r.centroid_y += y;
            ++r.area;
        }
    for (auto& r : regions) {
        r.centroid_x /= r.area;
        r.centroid_y /= r.area;
    }
    return regions;
}

double region_distance(const CrackRegion& a, const CrackRegion& b) {
    return std::hypot(a.centroid_x - b.centroid_x, a.centroid_y - b.centroid_y);
}

std::vector<CrackRegion> remove_noise_by_region(const std::vector<CrackRegion>& regions,
                                                const DenoiseParams& params) {
    if (!(params.t_d_px > 0.0) || !(params.t_a_px > 0.0))
        throw invalid_input_error("remove_noise_by_region: thresholds must be positive");
    std::vector<CrackRegion> kept;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        bool remove = false;
        if (regions[i].area < params.t_a_px && regions.size() > 1) {
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < regions.size(); ++j)
                if (j != i) nearest = std::min(nearest, region_distance(regions[i], regions[j]));
            remove = nearest < params.t_d_px;
        }
        if (!remove) kept.push_back(regions[i]);
    }
    return kept;
}

Mask regions_to_mask(const std::vector<CrackRegion>& regions, int width, int height) {
    Mask out(width, height);
    for (const auto& r : regions)
        for (const auto& p : r.pixels) out.at(p.x, p.y) = 1;
    return out;
}

}  // namespace deckscan::vision

#include "deckscan/vision/pipeline.hpp"

#include "deckscan/vision/morphology.hpp"

namespace deckscan::vision {

CrackDetection detect_cracks(const GrayImage& img, const CrackVisionParams& params) {
    const auto responses = directional_gradients(img, params.rotation_consistent_kernels);
    const GradientField field = gradient_magnitude_orientation(responses);

    Mask mask = threshold_crack_pixels(field, params.fixed_tau);
    for (int pass = 0; pass < params.clean_passes; ++pass)
        mask = morphological_clean(mask, params.majority_fraction);
    mask = fill_holes(mask);

    // Linking happens on the thinned chains; the bridges feed back into
    // the mask so later stages see linked cracks as one component.
    const Mask skeleton = prune_spurs(skeletonize(mask), params.max_spur_px);
    std::vector<CrackPath> paths = extract_paths(skeleton);
    paths = link_cracks(std::move(paths), params.linking);
    for (const auto& p : paths)
        for (const auto& px : p.pixels) mask.at(px.x, px.y) = 1;

    mask = remove_small_components(mask, params.min_component_pixels);
    const auto regions = remove_noise_by_region(extract_regions(mask), params.denoise);
    mask = regions_to_mask(regions, mask.width, mask.height);

    // Re-derive the final chains from the denoised mask; bridges stitched
    // above keep linked cracks in one chain.
    std::vector<CrackPath> final_paths = extract_paths(prune_spurs(skeletonize(mask), params.max_spur_px));
    final_paths = link_cracks(std::move(final_paths), params.linking);
    measure_paths(final_paths, mask, img.scale_m_per_px, params.simplify_tolerance_px,
                  params.width_sample_step_px);

    return {std::move(mask), std::move(final_paths)};
}

PixelScore score_detection(const Mask& detected, const Mask& truth) {
    if (detected.width != truth.width || detected.height != truth.height)
        throw invalid_input_error("score_detection: size mismatch");
    PixelScore s;
    for (std::size_t i = 0; i < detected.size(); ++i) {
        const bool d = detected.data[i] != 0;
        const bool t = truth.data[i] != 0;
        s.detected += d;
        s.actual += t;
        s.true_positives += (d && t);
    }
    s.precision = s.detected ? static_cast<double>(s.true_positives) / s.detected : 1.0;
    s.recall = s.actual ? static_cast<double>(s.true_positives) / s.actual : 1.0;
    return s;
}

}  // namespace deckscan::vision

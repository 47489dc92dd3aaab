#include "deckscan/vision/corpus.hpp"

#include <algorithm>
#include <cmath>

#include "deckscan/rng.hpp"
#include "deckscan/vision/stats.hpp"

namespace deckscan::vision {

namespace {

// Stamp the soft crack profile around one polyline: darkening is
// depth * exp(-d^2 / 2 sigma^2) of the distance to the nearest segment,
// max-blended across strokes.
void stamp_polyline(Grid<double>& darkening, const std::vector<Vec2>& pts, double depth,
                    double sigma) {
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    for (std::size_t s = 1; s < pts.size(); ++s) {
        const Vec2 a = pts[s - 1];
        const Vec2 b = pts[s];
        const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x))) - radius);
        const int x1 = std::min(darkening.width - 1,
                                static_cast<int>(std::ceil(std::max(a.x, b.x))) + radius);
        const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y))) - radius);
        const int y1 = std::min(darkening.height - 1,
                                static_cast<int>(std::ceil(std::max(a.y, b.y))) + radius);
        const Vec2 ab = b - a;
        const double len2 = ab.norm2();
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                const Vec2 p{static_cast<double>(x), static_cast<double>(y)};
                double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
                const double d2 = (p - (a + ab * t)).norm2();
                const double v = depth * std::exp(-d2 / (2.0 * sigma * sigma));
                darkening.at(x, y) = std::max(darkening.at(x, y), v);
            }
        }
    }
}

}  // namespace

CorpusImage make_corpus_image(const CorpusParams& params, int index) {
    if (params.width < 16 || params.height < 16)
        throw invalid_input_error("make_corpus_image: image too small");
    Rng rng(Rng::derive_seed(params.seed, static_cast<std::uint64_t>(index)));

    CorpusImage out;
    out.image.scale_m_per_px = params.scale_m_per_px;
    out.image.intensity = Grid<double>(params.width, params.height);
    out.truth = Mask(params.width, params.height);

    // Background: tilted plane plus grain.
    const double gx = rng.uniform(-1.0, 1.0) * params.background_gradient / params.width;
    const double gy = rng.uniform(-1.0, 1.0) * params.background_gradient / params.height;
    for (int y = 0; y < params.height; ++y)
        for (int x = 0; x < params.width; ++x)
            out.image.intensity.at(x, y) =
                params.background_level + gx * x + gy * y + rng.gauss(params.texture_sigma);

    // Cracks: meandering polylines with a soft dark profile.
    const int n_cracks = rng.uniform_int(params.min_cracks, params.max_cracks);
    Grid<double> darkening(params.width, params.height, 0.0);
    Grid<double> depth_map(params.width, params.height, 0.0);
    const double margin = 12.0;
    for (int c = 0; c < n_cracks; ++c) {
        const double depth = rng.uniform(params.crack_depth_min, params.crack_depth_max);
        const double sigma = rng.uniform(params.crack_sigma_min_px, params.crack_sigma_max_px);
        std::vector<Vec2> pts;
        for (int attempt = 0; attempt < 24 && polyline_length(pts) < 60.0; ++attempt) {
            pts.clear();
            Vec2 p{rng.uniform(margin, params.width - margin),
                   rng.uniform(margin, params.height - margin)};
            double angle = rng.uniform(0.0, 2.0 * kPi);
            pts.push_back(p);
            const int segments = rng.uniform_int(4, 8);
            for (int s = 0; s < segments; ++s) {
                const double step = rng.uniform(35.0, 70.0);
                const Vec2 q{p.x + step * std::cos(angle), p.y + step * std::sin(angle)};
                // Strokes end at the frame margin rather than folding back
                // over their own ink, so the drawn length stays the truth.
                if (q.x < margin || q.x > params.width - margin || q.y < margin ||
                    q.y > params.height - margin)
                    break;
                pts.push_back(q);
                p = q;
                angle += rng.uniform(-0.5, 0.5);
            }
        }
        if (pts.size() < 2) continue;

        Grid<double> one(params.width, params.height, 0.0);
        stamp_polyline(one, pts, depth, sigma);
        for (std::size_t i = 0; i < one.size(); ++i) {
            if (one.data[i] > darkening.data[i]) {
                darkening.data[i] = one.data[i];
                depth_map.data[i] = depth;
            }
        }
        out.total_length_px += polyline_length(pts);
        out.polylines.push_back(std::move(pts));
    }
    for (std::size_t i = 0; i < darkening.size(); ++i) {
        out.image.intensity.data[i] -= darkening.data[i];
        if (depth_map.data[i] > 0.0 &&
            darkening.data[i] >= params.truth_fraction * depth_map.data[i])
            out.truth.data[i] = 1;
    }

    // Salt and pepper speckle.
    for (std::size_t i = 0; i < out.image.intensity.size(); ++i) {
        const double u = rng.uniform();
        if (u < params.salt_pepper_fraction)
            out.image.intensity.data[i] = rng.uniform(params.pepper_min, params.pepper_max);
        else if (u > 1.0 - params.salt_pepper_fraction)
            out.image.intensity.data[i] = rng.uniform(235.0, 255.0);
    }

    for (auto& v : out.image.intensity.data) v = std::clamp(v, 0.0, 255.0);
    return out;
}

}  // namespace deckscan::vision

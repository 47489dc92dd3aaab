#include "deckscan/vision/morphology.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace deckscan::vision {

double otsu_threshold(const Grid<double>& magnitude) {
    if (magnitude.empty()) throw invalid_input_error("otsu_threshold: empty grid");
    const double maxv = *std::max_element(magnitude.data.begin(), magnitude.data.end());
    if (maxv <= 0.0) return 0.0;

    // Robust noise floor: when crack pixels are a sliver of the image,
    // the between-class criterion collapses into the texture
    // distribution. The median magnitude tracks the texture scale and is
    // immune to the crack mass, so the threshold never drops below a
    // multiple of it.
    std::vector<double> sorted = magnitude.data;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double noise_floor = 3.5 * sorted[sorted.size() / 2];

    constexpr int kBins = 256;
    std::array<long, kBins> hist{};
    const double to_bin = (kBins - 1) / maxv;
    for (double v : magnitude.data)
        ++hist[static_cast<int>(std::clamp(v, 0.0, maxv) * to_bin)];

    const double total = static_cast<double>(magnitude.size());
    double sum_all = 0.0;
    for (int i = 0; i < kBins; ++i) sum_all += static_cast<double>(i) * hist[i];

    double best_var = -1.0;
    int best_bin = 0;
    double w0 = 0.0, sum0 = 0.0;
    for (int i = 0; i < kBins; ++i) {
        w0 += hist[i];
        if (w0 == 0.0) continue;
        const double w1 = total - w0;
        if (w1 == 0.0) break;
        sum0 += static_cast<double>(i) * hist[i];
        const double mu0 = sum0 / w0;
        const double mu1 = (sum_all - sum0) / w1;
        const double between = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (between > best_var) {
            best_var = between;
            best_bin = i;
        }
    }
    return std::max((best_bin + 0.5) / to_bin, noise_floor);
}

Mask threshold_crack_pixels(const GradientField& field, std::optional<double> tau) {
    const double t = tau ? *tau : otsu_threshold(field.magnitude);
    if (!(t >= 0.0) && tau) throw invalid_input_error("threshold_crack_pixels: negative tau");
    Mask out(field.magnitude.width, field.magnitude.height);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.data[i] = field.magnitude.data[i] > t ? 1 : 0;
    return out;
}

namespace {

inline int set_neighbors(const Mask& m, int x, int y) {
    int n = 0;
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const int xx = x + dx, yy = y + dy;
            if (m.in_bounds(xx, yy) && m.at(xx, yy)) ++n;
        }
    return n;
}

}  // namespace

Mask morphological_clean(const Mask& mask, double majority_fraction) {
    if (mask.empty()) throw invalid_input_error("morphological_clean: empty mask");
    Mask out = mask;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            const int n = set_neighbors(mask, x, y);
            if (mask.at(x, y)) {
                if (n == 0) out.at(x, y) = 0;
            } else {
                if (n > majority_fraction * 8.0) out.at(x, y) = 1;
            }
        }
    }
    return out;
}

std::pair<Grid<int>, int> label_components(const Mask& mask) {
    Grid<int> labels(mask.width, mask.height, 0);
    int next = 0;
    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.at(x, y) || labels.at(x, y)) continue;
            ++next;
            stack.push_back({x, y});
            labels.at(x, y) = next;
            while (!stack.empty()) {
                const auto [cx, cy] = stack.back();
                stack.pop_back();
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int xx = cx + dx, yy = cy + dy;
                        if ((dx || dy) && mask.in_bounds(xx, yy) && mask.at(xx, yy) &&
                            !labels.at(xx, yy)) {
                            labels.at(xx, yy) = next;
                            stack.push_back({xx, yy});
                        }
                    }
            }
        }
    }
    return {std::move(labels), next};
}

Mask remove_small_components(const Mask& mask, int min_pixels) {
    if (min_pixels < 1) throw invalid_input_error("remove_small_components: min_pixels < 1");
    const auto [labels, count] = label_components(mask);
    std::vector<int> area(static_cast<std::size_t>(count) + 1, 0);
    for (int v : labels.data) ++area[v];
    Mask out(mask.width, mask.height);
    for (std::size_t i = 0; i < mask.size(); ++i)
        out.data[i] = (labels.data[i] && area[labels.data[i]] >= min_pixels) ? 1 : 0;
    return out;
}

namespace {

// Zhang-Suen helpers: p2..p9 clockwise starting north.
inline void neighbors9(const Mask& m, int x, int y, int p[9]) {
    auto v = [&](int xx, int yy) { return (m.in_bounds(xx, yy) && m.at(xx, yy)) ? 1 : 0; };
    p[0] = v(x, y);
    p[1] = v(x, y - 1);
    p[2] = v(x + 1, y - 1);
    p[3] = v(x + 1, y);
    p[4] = v(x + 1, y + 1);
    p[5] = v(x, y + 1);
    p[6] = v(x - 1, y + 1);
    p[7] = v(x - 1, y);
    p[8] = v(x - 1, y - 1);
}

}  // namespace

Mask fill_holes(const Mask& mask) {
    Grid<std::uint8_t> outside(mask.width, mask.height, 0);
    std::vector<std::pair<int, int>> stack;
    auto seed = [&](int x, int y) {
        if (!mask.at(x, y) && !outside.at(x, y)) {
            outside.at(x, y) = 1;
            stack.push_back({x, y});
        }
    };
    for (int x = 0; x < mask.width; ++x) {
        seed(x, 0);
        seed(x, mask.height - 1);
    }
    for (int y = 0; y < mask.height; ++y) {
        seed(0, y);
        seed(mask.width - 1, y);
    }
    constexpr int dx4[] = {1, -1, 0, 0};
    constexpr int dy4[] = {0, 0, 1, -1};
    while (!stack.empty()) {
        const auto [x, y] = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
            const int xx = x + dx4[k], yy = y + dy4[k];
            if (mask.in_bounds(xx, yy) && !mask.at(xx, yy) && !outside.at(xx, yy)) {
                outside.at(xx, yy) = 1;
                stack.push_back({xx, yy});
            }
        }
    }
    Mask out = mask;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!out.data[i] && !outside.data[i]) out.data[i] = 1;
    return out;
}

Mask prune_spurs(const Mask& skeleton, int max_spur_px) {
    Mask out = skeleton;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < out.height; ++y) {
            for (int x = 0; x < out.width; ++x) {
                if (!out.at(x, y) || set_neighbors(out, x, y) != 1) continue;
                // Walk inward from the endpoint.
                std::vector<std::pair<int, int>> walk{{x, y}};
                int cx = x, cy = y, px = -1, py = -1;
                bool junction = false;
                while (static_cast<int>(walk.size()) <= max_spur_px) {
                    int nx = -1, ny = -1, n = 0;
                    for (int dy = -1; dy <= 1; ++dy)
                        for (int dx = -1; dx <= 1; ++dx) {
                            const int xx = cx + dx, yy = cy + dy;
                            if ((dx || dy) && out.in_bounds(xx, yy) && out.at(xx, yy) &&
                                !(xx == px && yy == py)) {
                                ++n;
                                nx = xx;
                                ny = yy;
                            }
                        }
                    if (n == 0) break;      // isolated stub
                    if (n > 1) {            // reached a junction
                        junction = true;
                        break;
                    }
                    px = cx;
                    py = cy;
                    cx = nx;
                    cy = ny;
                    walk.push_back({cx, cy});
                }
                if (junction && static_cast<int>(walk.size()) <= max_spur_px) {
                    walk.pop_back();  // the junction pixel stays with the main chain
                    for (const auto& [wx, wy] : walk) out.at(wx, wy) = 0;
                    changed = true;
                }
            }
        }
    }
    return out;
}

Mask skeletonize(const Mask& mask) {
    Mask skel = mask;
    std::vector<std::pair<int, int>> to_clear;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            to_clear.clear();
            for (int y = 0; y < skel.height; ++y) {
                for (int x = 0; x < skel.width; ++x) {
                    if (!skel.at(x, y)) continue;
                    int p[9];
                    neighbors9(skel, x, y, p);
                    const int b = p[1] + p[2] + p[3] + p[4] + p[5] + p[6] + p[7] + p[8];
                    if (b < 2 || b > 6) continue;
                    int a = 0;
                    for (int i = 1; i <= 8; ++i) {
                        const int cur = p[i];
                        const int nxt = p[i == 8 ? 1 : i + 1];
                        if (cur == 0 && nxt == 1) ++a;
                    }
                    if (a != 1) continue;
                    if (pass == 0) {
                        if (p[1] * p[3] * p[5] != 0) continue;
                        if (p[3] * p[5] * p[7] != 0) continue;
                    } else {
                        if (p[1] * p[3] * p[7] != 0) continue;
                        if (p[1] * p[5] * p[7] != 0) continue;
                    }
                    to_clear.push_back({x, y});
                }
            }
            for (const auto& [x, y] : to_clear) skel.at(x, y) = 0;
            changed = changed || !to_clear.empty();
        }
    }
    return skel;
}

}  // namespace deckscan::vision

#include "deckscan/vision/linking.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "deckscan/vision/morphology.hpp"

namespace deckscan::vision {

namespace {

// Longest shortest-path walk through one component: BFS from an
// arbitrary pixel finds one extremity, BFS again finds the far end and
// the chain between them.
std::vector<PixelCoord> longest_walk(const Grid<int>& labels, int label, PixelCoord seed,
                                     Grid<int>& scratch) {
    auto bfs = [&](PixelCoord start, bool build_parents,
                   std::vector<int>* parents) -> PixelCoord {
        std::queue<PixelCoord> q;
        q.push(start);
        scratch.at(start.x, start.y) = 1;
        std::vector<PixelCoord> visited{start};
        PixelCoord far = start;
        while (!q.empty()) {
            const PixelCoord c = q.front();
            q.pop();
            far = c;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (!dx && !dy) continue;
                    const int xx = c.x + dx, yy = c.y + dy;
                    if (!labels.in_bounds(xx, yy) || labels.at(xx, yy) != label ||
                        scratch.at(xx, yy))
                        continue;
                    scratch.at(xx, yy) = 1;
                    if (build_parents)
                        (*parents)[static_cast<std::size_t>(yy) * labels.width + xx] =
                            c.y * labels.width + c.x;
                    q.push({xx, yy});
                    visited.push_back({xx, yy});
                }
        }
        for (const auto& v : visited) scratch.at(v.x, v.y) = 0;
        return far;
    };

    const PixelCoord a = bfs(seed, false, nullptr);
    std::vector<int> parents(labels.size(), -1);
    const PixelCoord b = bfs(a, true, &parents);

    std::vector<PixelCoord> chain;
    PixelCoord cur = b;
    while (!(cur == a)) {
        chain.push_back(cur);
        const int p = parents[static_cast<std::size_t>(cur.y) * labels.width + cur.x];
        if (p < 0) break;
        cur = {p % labels.width, p / labels.width};
    }
    chain.push_back(a);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace

std::vector<CrackPath> extract_paths(const Mask& skeleton) {
    // Components are peeled into chains: take the longest walk, remove
    // its pixels, and repeat on what remains so branches of crossing
    // cracks keep their length instead of vanishing into one diameter.
    constexpr std::size_t kMinRemnant = 5;
    Mask work = skeleton;
    std::vector<CrackPath> paths;
    bool first_round = true;
    while (true) {
        const auto [labels, count] = label_components(work);
        if (count == 0) break;
        std::vector<PixelCoord> seeds(static_cast<std::size_t>(count) + 1, {-1, -1});
        std::vector<int> area(static_cast<std::size_t>(count) + 1, 0);
        for (int y = 0; y < work.height; ++y)
            for (int x = 0; x < work.width; ++x) {
                const int l = labels.at(x, y);
                if (!l) continue;
                ++area[l];
                if (seeds[l].x < 0) seeds[l] = {x, y};
            }

        Grid<int> scratch(work.width, work.height, 0);
        bool any = false;
        for (int l = 1; l <= count; ++l) {
            if (!first_round && static_cast<std::size_t>(area[l]) < kMinRemnant) continue;
            CrackPath p;
            p.pixels = longest_walk(labels, l, seeds[l], scratch);
            if (!first_round && p.pixels.size() < kMinRemnant) continue;
            for (const auto& px : p.pixels) work.at(px.x, px.y) = 0;
            paths.push_back(std::move(p));
            any = true;
        }
        if (!any) break;
        first_round = false;
    }
    return paths;
}

double link_cost(const Vec2& endpoint_j, const Vec2& endpoint_i, double k_p, double k_d) {
    if (!endpoint_j.finite() || !endpoint_i.finite())
        throw invalid_input_error("link_cost: non-finite endpoint");
    return k_p * (endpoint_i - endpoint_j).norm() + k_d;
}

std::vector<PixelCoord> bresenham_bridge(PixelCoord a, PixelCoord b) {
    std::vector<PixelCoord> out;
    int x = a.x, y = a.y;
    const int dx = std::abs(b.x - a.x), dy = -std::abs(b.y - a.y);
    const int sx = a.x < b.x ? 1 : -1, sy = a.y < b.y ? 1 : -1;
    int err = dx + dy;
    while (true) {
        if (!(x == a.x && y == a.y) && !(x == b.x && y == b.y)) out.push_back({x, y});
        if (x == b.x && y == b.y) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y += sy;
        }
    }
    return out;
}

namespace {

struct Candidate {
    double cost = 0.0;
    std::size_t j = 0, i = 0;  // paths
    int ej = 0, ei = 0;        // endpoint selector: 0 front, 1 back
};

Vec2 endpoint_of(const CrackPath& p, int which) {
    const PixelCoord c = which == 0 ? p.front() : p.back();
    return {static_cast<double>(c.x), static_cast<double>(c.y)};
}

}  // namespace

std::vector<CrackPath> link_cracks(std::vector<CrackPath> paths, const LinkingParams& params) {
    if (params.window_px <= 0)
        throw invalid_input_error("link_cracks: window must be positive");
    const double half_window = params.window_px / 2.0;

    bool merged = true;
    while (merged) {
        merged = false;
        Candidate best;
        bool have = false;
        for (std::size_t j = 0; j < paths.size(); ++j) {
            for (int ej = 0; ej < 2; ++ej) {
                const Vec2 pj = endpoint_of(paths[j], ej);
                for (std::size_t i = 0; i < paths.size(); ++i) {
                    if (i == j) continue;
                    for (int ei = 0; ei < 2; ++ei) {
                        const Vec2 pi = endpoint_of(paths[i], ei);
                        if (std::abs(pi.x - pj.x) > half_window ||
                            std::abs(pi.y - pj.y) > half_window)
                            continue;
                        if ((pi - pj).norm() > params.max_link_distance_px) continue;
                        const double cost = link_cost(pj, pi, params.k_p, params.k_d);
                        Candidate c{cost, j, i, ej, ei};
                        const bool better =
                            !have || c.cost < best.cost ||
                            (c.cost == best.cost &&
                             std::tie(c.j, c.i, c.ej, c.ei) <
                                 std::tie(best.j, best.i, best.ej, best.ei));
                        if (better) {
                            best = c;
                            have = true;
                        }
                    }
                }
            }
        }
        if (!have) break;

        CrackPath& a = paths[best.j];
        CrackPath& b = paths[best.i];
        // Orient so the chosen endpoints meet: a ends at its endpoint,
        // b starts at its.
        if (best.ej == 0) std::reverse(a.pixels.begin(), a.pixels.end());
        if (best.ei == 1) std::reverse(b.pixels.begin(), b.pixels.end());
        const auto bridge = bresenham_bridge(a.back(), b.front());
        a.pixels.insert(a.pixels.end(), bridge.begin(), bridge.end());
        a.pixels.insert(a.pixels.end(), b.pixels.begin(), b.pixels.end());
        paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(best.i));
        merged = true;
    }
    return paths;
}

}  // namespace deckscan::vision

#include "deckscan/nde/condition_map.hpp"

#include <algorithm>
#include <cmath>

#include "deckscan/vision/image.hpp"

namespace deckscan::nde {

const char* map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::delamination: return "delamination";
        case MapKind::modulus: return "modulus";
        case MapKind::resistivity: return "resistivity";
    }
    return "unknown";
}

Condition classify_value(MapKind kind, double value, const MapBands& bands) {
    switch (kind) {
        case MapKind::delamination: {
            if (value < 0.5) return Condition::good;
            if (value < 1.5) return Condition::fair;
            if (value < 2.5) return Condition::poor;
            return Condition::serious;
        }
        case MapKind::modulus: {
            if (value < bands.modulus_serious_below_pa) return Condition::serious;
            if (value > bands.modulus_good_above_pa) return Condition::good;
            const double mid =
                0.5 * (bands.modulus_serious_below_pa + bands.modulus_good_above_pa);
            return value < mid ? Condition::poor : Condition::fair;
        }
        case MapKind::resistivity: {
            if (value < bands.rho_high_risk_below) return Condition::serious;
            if (value < bands.rho_moderate_below) return Condition::fair;
            return Condition::good;
        }
    }
    return Condition::good;
}

ConditionGrid grid_condition_map(const std::vector<MapRecord>& records, MapKind kind,
                                 const GridParams& params, const Vec2& origin, double extent_x,
                                 double extent_y) {
    if (records.empty()) throw invalid_input_error("grid_condition_map: no records");
    if (!(params.cell_size_m > 0.0))
        throw invalid_input_error("grid_condition_map: cell size must be positive");
    if (!(extent_x > 0.0) || !(extent_y > 0.0))
        throw invalid_input_error("grid_condition_map: extent must be positive");

    ConditionGrid grid;
    grid.kind = kind;
    grid.cell_size_m = params.cell_size_m;
    grid.origin = origin;
    grid.nx = std::max(1, static_cast<int>(std::ceil(extent_x / params.cell_size_m - 1e-9)));
    grid.ny = std::max(1, static_cast<int>(std::ceil(extent_y / params.cell_size_m - 1e-9)));
    grid.cells.assign(static_cast<std::size_t>(grid.nx) * grid.ny, {});

    // Mean of the records landing in each cell.
    std::vector<double> sum(grid.cells.size(), 0.0);
    std::vector<int> count(grid.cells.size(), 0);
    for (const auto& r : records) {
        const int ix = static_cast<int>(std::floor((r.position.x - origin.x) / grid.cell_size_m));
        const int iy = static_cast<int>(std::floor((r.position.y - origin.y) / grid.cell_size_m));
        if (ix < 0 || ix >= grid.nx || iy < 0 || iy >= grid.ny) continue;
        const std::size_t i = static_cast<std::size_t>(iy) * grid.nx + ix;
        sum[i] += r.value;
        ++count[i];
    }
    struct DataCell {
        Vec2 center;
        double value;
    };
    std::vector<DataCell> data;
    for (int iy = 0; iy < grid.ny; ++iy)
        for (int ix = 0; ix < grid.nx; ++ix) {
            const std::size_t i = static_cast<std::size_t>(iy) * grid.nx + ix;
            if (count[i] == 0) continue;
            ConditionCell& c = grid.at(ix, iy);
            c.value = sum[i] / count[i];
            c.has_data = true;
            data.push_back({grid.cell_center(ix, iy), c.value});
        }

    // Inverse-distance fill for near-data holes.
    for (int iy = 0; iy < grid.ny; ++iy)
        for (int ix = 0; ix < grid.nx; ++ix) {
            ConditionCell& c = grid.at(ix, iy);
            if (c.has_data) continue;
            const Vec2 center = grid.cell_center(ix, iy);
            double wsum = 0.0, vsum = 0.0;
            for (const auto& d : data) {
                const double dist = (d.center - center).norm();
                if (dist > params.max_gap_m) continue;
                const double w = 1.0 / std::pow(std::max(dist, 1e-6), params.idw_power);
                wsum += w;
                vsum += w * d.value;
            }
            if (wsum > 0.0) {
                c.value = vsum / wsum;
                c.has_data = true;
                c.interpolated = true;
            }
        }

    for (auto& c : grid.cells)
        if (c.has_data) c.cls = classify_value(kind, c.value, params.bands);
    return grid;
}

void write_condition_heatmap(const ConditionGrid& grid, const std::string& path,
                             int px_per_cell) {
    const int px = std::max(1, px_per_cell);
    const int w = grid.nx * px;
    const int h = grid.ny * px;
    vision::Grid<std::uint8_t> r(w, h, 150), g(w, h, 150), b(w, h, 150);
    for (int iy = 0; iy < grid.ny; ++iy)
        for (int ix = 0; ix < grid.nx; ++ix) {
            const ConditionCell& c = grid.at(ix, iy);
            std::uint8_t cr = 150, cg = 150, cb = 150;  // no data: gray
            if (c.has_data) {
                switch (c.cls) {
                    case Condition::good: cr = 50, cg = 120, cb = 210; break;
                    case Condition::fair: cr = 90, cg = 190, cb = 110; break;
                    case Condition::poor: cr = 240, cg = 200, cb = 50; break;
                    case Condition::serious: cr = 220, cg = 40, cb = 40; break;
                }
            }
            // Raster rows run top-down; the deck's y axis runs up.
            const int row0 = (grid.ny - 1 - iy) * px;
            for (int dy = 0; dy < px; ++dy)
                for (int dx = 0; dx < px; ++dx) {
                    r.at(ix * px + dx, row0 + dy) = cr;
                    g.at(ix * px + dx, row0 + dy) = cg;
                    b.at(ix * px + dx, row0 + dy) = cb;
                }
        }
    vision::write_ppm(path, r, g, b);
}

}  // namespace deckscan::nde

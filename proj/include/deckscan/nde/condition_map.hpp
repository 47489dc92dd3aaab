#pragma once

#include <string>
#include <vector>

#include "deckscan/geometry.hpp"
#include "deckscan/nde/impact_echo.hpp"

namespace deckscan::nde {

enum class MapKind { delamination, modulus, resistivity };

const char* map_kind_name(MapKind k);

/// Class thresholds per map kind. Delamination severity is the numeric
/// condition score (good 0 .. serious 3); modulus and resistivity class
/// on their physical values.
struct MapBands {
    // modulus, Pa: anchored to the 2000/6000 ksi field range
    double modulus_serious_below_pa = 13.8e9;
    double modulus_good_above_pa = 27.6e9;
    // resistivity, ohm-m
    double rho_high_risk_below = 120.0;
    double rho_moderate_below = 240.0;
};

Condition classify_value(MapKind kind, double value, const MapBands& bands);

/// Severity score used as the delamination map value.
inline double condition_score(Condition c) { return static_cast<double>(static_cast<int>(c)); }

struct MapRecord {
    Vec2 position;
    double value = 0.0;  // severity score / modulus Pa / resistivity ohm-m
};

struct ConditionCell {
    double value = 0.0;
    Condition cls = Condition::good;
    bool has_data = false;      // measured or interpolated
    bool interpolated = false;
};

struct ConditionGrid {
    MapKind kind = MapKind::delamination;
    double cell_size_m = 0.6096;
    Vec2 origin;  // lower-left corner of cell (0,0)
    int nx = 0, ny = 0;
    std::vector<ConditionCell> cells;

    ConditionCell& at(int ix, int iy) { return cells[static_cast<std::size_t>(iy) * nx + ix]; }
    const ConditionCell& at(int ix, int iy) const {
        return cells[static_cast<std::size_t>(iy) * nx + ix];
    }
    Vec2 cell_center(int ix, int iy) const {
        return {origin.x + (ix + 0.5) * cell_size_m, origin.y + (iy + 0.5) * cell_size_m};
    }
};

struct GridParams {
    double cell_size_m = 0.6096;
    double max_gap_m = 1.25;   // reach of inverse-distance fill
    double idw_power = 2.0;
    MapBands bands;
};

/// Bins records to cells (mean value per cell), fills empty cells within
/// max_gap of data by inverse-distance weighting, and classes each cell.
/// Cells farther from any data stay flagged as no-data.
ConditionGrid grid_condition_map(const std::vector<MapRecord>& records, MapKind kind,
                                 const GridParams& params, const Vec2& origin, double extent_x,
                                 double extent_y);

/// Hot/cold raster: red for serious through blue for good, gray for
/// no-data cells.
void write_condition_heatmap(const ConditionGrid& grid, const std::string& path,
                             int px_per_cell = 8);

}  // namespace deckscan::nde

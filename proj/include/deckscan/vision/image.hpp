#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deckscan/errors.hpp"

namespace deckscan::vision {

template <typename T>
struct Grid {
    int width = 0;
    int height = 0;
    std::vector<T> data;

    Grid() = default;
    Grid(int w, int h, T fill = T{})
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    T& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    const T& at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    std::size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }
};

using Mask = Grid<std::uint8_t>;

/// 8-bit-range grayscale raster with a physical scale.
struct GrayImage {
    Grid<double> intensity;                 // values in [0, 255]
    double scale_m_per_px = 1.0e-3;

    int width() const { return intensity.width; }
    int height() const { return intensity.height; }
};

inline int count_set(const Mask& m) {
    int n = 0;
    for (auto v : m.data) n += (v != 0);
    return n;
}

/// Reads PGM (P2/P5) or PPM (P3/P6); color inputs are converted via the
/// 0.299/0.587/0.114 luminance weights.
GrayImage read_pnm(const std::string& path, double scale_m_per_px = 1.0e-3);

void write_pgm(const std::string& path, const Grid<double>& img);
void write_pgm(const std::string& path, const Mask& mask);

/// 24-bit RGB writer used for heatmaps and overlays.
void write_ppm(const std::string& path, const Grid<std::uint8_t>& r,
               const Grid<std::uint8_t>& g, const Grid<std::uint8_t>& b);

}  // namespace deckscan::vision

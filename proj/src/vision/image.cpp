#include "deckscan/vision/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace deckscan::vision {

namespace {

// Next whitespace-separated token, skipping '#' comment lines.
std::string next_token(std::istream& in) {
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        return tok;
    }
    throw io_error("pnm: truncated header");
}

int next_int(std::istream& in) { return std::stoi(next_token(in)); }

}  // namespace

GrayImage read_pnm(const std::string& path, double scale_m_per_px) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("pnm: cannot open " + path);
    const std::string magic = next_token(in);
    const bool ascii = (magic == "P2" || magic == "P3");
    const bool color = (magic == "P3" || magic == "P6");
    if (magic != "P2" && magic != "P3" && magic != "P5" && magic != "P6")
        throw io_error("pnm: unsupported format " + magic + " in " + path);

    const int w = next_int(in);
    const int h = next_int(in);
    const int maxval = next_int(in);
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 65535)
        throw io_error("pnm: bad dimensions in " + path);

    const int channels = color ? 3 : 1;
    std::vector<double> raw(static_cast<std::size_t>(w) * h * channels);
    if (ascii) {
        for (auto& v : raw) v = next_int(in);
    } else {
        in.get();  // single whitespace after maxval
        if (maxval < 256) {
            std::vector<std::uint8_t> buf(raw.size());
            in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
            if (!in) throw io_error("pnm: truncated pixel data in " + path);
            std::copy(buf.begin(), buf.end(), raw.begin());
        } else {
            std::vector<std::uint8_t> buf(raw.size() * 2);
            in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
            if (!in) throw io_error("pnm: truncated pixel data in " + path);
            for (std::size_t i = 0; i < raw.size(); ++i)
                raw[i] = buf[2 * i] * 256.0 + buf[2 * i + 1];
        }
    }

    GrayImage img;
    img.scale_m_per_px = scale_m_per_px;
    img.intensity = Grid<double>(w, h);
    const double norm = 255.0 / maxval;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = (static_cast<std::size_t>(y) * w + x) * channels;
            double v = color ? 0.299 * raw[i] + 0.587 * raw[i + 1] + 0.114 * raw[i + 2] : raw[i];
            img.intensity.at(x, y) = v * norm;
        }
    }
    return img;
}

void write_pgm(const std::string& path, const Grid<double>& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("pnm: cannot write " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::vector<std::uint8_t> buf(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
        buf[i] = static_cast<std::uint8_t>(std::clamp(std::lround(img.data[i]), 0L, 255L));
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

void write_pgm(const std::string& path, const Mask& mask) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("pnm: cannot write " + path);
    out << "P5\n" << mask.width << " " << mask.height << "\n255\n";
    std::vector<std::uint8_t> buf(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) buf[i] = mask.data[i] ? 255 : 0;
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

void write_ppm(const std::string& path, const Grid<std::uint8_t>& r,
               const Grid<std::uint8_t>& g, const Grid<std::uint8_t>& b) {
    if (r.width != g.width || r.width != b.width || r.height != g.height ||
        r.height != b.height)
        throw invalid_input_error("ppm: channel dimensions differ");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("pnm: cannot write " + path);
    out << "P6\n" << r.width << " " << r.height << "\n255\n";
    std::vector<std::uint8_t> buf(r.size() * 3);
    for (std::size_t i = 0; i < r.size(); ++i) {
        buf[3 * i] = r.data[i];
        buf[3 * i + 1] = g.data[i];
        buf[3 * i + 2] = b.data[i];
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

}  // namespace deckscan::vision

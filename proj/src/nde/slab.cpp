#include "deckscan/nde/slab.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "deckscan/rng.hpp"

namespace deckscan::nde {

namespace {
constexpr double kStationSpacing = 0.6096;  // 2 ft lattice the surveys use
constexpr double kDepthTol = 1e-9;
const double kAllowedDepths[] = {0.05, 0.10, 0.17};
}  // namespace

SlabModel::CellState SlabModel::query(double x, double y) const {
    if (x < 0.0 || x > length_m || y < 0.0 || y > width_m)
        throw out_of_bounds_error("SlabModel: point outside the slab");
    CellState c;
    c.thickness_m = thickness_m;
    c.rho_ohm_m = sound_rho_ohm_m;
    for (const auto& d : defects) {
        if (!d.contains(x, y)) continue;
        switch (d.kind) {
            case SlabDefect::Kind::delamination: c.delam_depth_m = d.depth_m; break;
            case SlabDefect::Kind::modulus: c.modulus_multiplier = d.modulus_multiplier; break;
            case SlabDefect::Kind::corrosion:
                c.corroded = true;
                c.rho_ohm_m = corroded_rho_ohm_m;
                break;
        }
    }
    return c;
}

void SlabModel::validate() const {
    if (!(length_m > 0.0) || !(width_m > 0.0) || !(thickness_m > 0.0))
        throw invalid_input_error("SlabModel: dimensions must be positive");
    for (const auto& d : defects) {
        if (!(d.x0 < d.x1) || !(d.y0 < d.y1))
            throw invalid_input_error("SlabModel: degenerate defect rectangle");
        if (d.kind == SlabDefect::Kind::delamination) {
            bool ok = false;
            for (double allowed : kAllowedDepths)
                ok = ok || std::abs(d.depth_m - allowed) < kDepthTol;
            if (!ok)
                throw invalid_input_error(
                    "SlabModel: delamination depth must be one of 0.05, 0.10, 0.17 m");
        }
        if (d.kind == SlabDefect::Kind::modulus &&
            (!(d.modulus_multiplier > 0.0) || d.modulus_multiplier > 1.0))
            throw invalid_input_error("SlabModel: modulus multiplier must lie in (0, 1]");
    }
}

SlabModel default_validation_slab(double length_m, double width_m) {
    SlabModel slab;
    slab.length_m = length_m;
    slab.width_m = width_m;

    const double s = kStationSpacing;
    const int n = static_cast<int>(std::floor(length_m / s + 1e-9));
    // Rectangle edges on the half-lattice so measurement stations land
    // strictly inside or outside, never on an edge.
    auto xb = [&](double frac, int extra) {
        const int idx = static_cast<int>(std::round(frac * n)) + extra;
        return (idx - 0.5) * s;
    };
    auto add = [&](SlabDefect::Kind kind, double fx, int span, double fy0, double fy1,
                   double depth, double mult) {
        SlabDefect d;
        d.kind = kind;
        d.x0 = xb(fx, 0);
        d.x1 = xb(fx, span + 1);
        d.y0 = fy0 * width_m;
        d.y1 = fy1 * width_m;
        d.depth_m = depth;
        d.modulus_multiplier = mult;
        slab.defects.push_back(d);
    };

    // Shallow, intermediate and deep delaminations spanning several
    // stations on two adjacent passes.
    add(SlabDefect::Kind::delamination, 0.10, 5, 0.15, 0.55, 0.05, 1.0);
    add(SlabDefect::Kind::delamination, 0.25, 5, 0.45, 0.85, 0.10, 1.0);
    add(SlabDefect::Kind::delamination, 0.40, 5, 0.15, 0.55, 0.17, 1.0);
    // A shallow delamination smaller than the station lattice; surveys
    // at the standard spacing are expected to miss it.
    {
        SlabDefect d;
        d.kind = SlabDefect::Kind::delamination;
        d.x0 = xb(0.33, 0) + 0.15;
        d.x1 = d.x0 + 0.3;
        d.y0 = 0.30 * width_m + 0.1;
        d.y1 = d.y0 + 0.3;
        d.depth_m = 0.05;
        slab.defects.push_back(d);
    }
    // Reduced-modulus patches.
    add(SlabDefect::Kind::modulus, 0.55, 7, 0.15, 0.85, 0.0, 0.5);
    add(SlabDefect::Kind::modulus, 0.70, 5, 0.45, 0.85, 0.0, 0.7);
    // Salted (corroding) regions.
    add(SlabDefect::Kind::corrosion, 0.82, 6, 0.15, 0.55, 0.0, 1.0);
    add(SlabDefect::Kind::corrosion, 0.92, 4, 0.70, 0.95, 0.0, 1.0);

    slab.validate();
    return slab;
}

double NdePhysics::rayleigh_velocity_mps() const {
    const double c_s = cp_mps * std::sqrt((1.0 - 2.0 * poisson) / (2.0 * (1.0 - poisson)));
    return c_s * (0.87 + 1.12 * poisson) / (1.0 + poisson);
}

namespace {

void add_noise(std::vector<double>& samples, double snr_db, Rng& rng) {
    double rms = 0.0;
    for (double v : samples) rms += v * v;
    rms = std::sqrt(rms / static_cast<double>(samples.size()));
    const double sigma = rms / std::pow(10.0, snr_db / 20.0);
    for (double& v : samples) v += rng.gauss(sigma);
}

}  // namespace

StationSignals synth_station_signals(const SlabModel& slab, const Vec2& position,
                                     const NdePhysics& physics, std::uint64_t seed) {
    const SlabModel::CellState cell = slab.query(position.x, position.y);
    Rng rng(seed);

    StationSignals out;
    const double fs = physics.sample_rate_hz;
    const double f_full = physics.f_fullthickness_hz(cell.thickness_m);

    // Impact response: damped resonances of the thickness-stretch mode,
    // moved up by a reflector, plus a dominant low flexural mode for
    // shallow delaminations.
    struct Mode {
        double f, amp, zeta;
    };
    std::vector<Mode> modes;
    if (cell.delam_depth_m > 0.0) {
        const double f_d = physics.beta1 * physics.cp_mps / cell.delam_depth_m;
        if (cell.delam_depth_m < physics.shallow_threshold_m) {
            modes.push_back({physics.flexural_fraction * f_full, 1.3, 0.03});
            modes.push_back({f_d, 0.6, 0.02});
        } else {
            modes.push_back({f_d, 1.0, 0.02});
        }
    } else {
        modes.push_back({f_full, 1.0, 0.02});
    }
    out.ie.sample_rate_hz = fs;
    out.ie.channel = "ie";
    out.ie.samples.resize(static_cast<std::size_t>(physics.ie_samples), 0.0);
    // Pre-trigger buffer: the impact sits mid-record so an analysis
    // window does not taper the transient away.
    const double t_impact = 0.5 * static_cast<double>(physics.ie_samples) / fs;
    for (std::size_t i = 0; i < out.ie.samples.size(); ++i) {
        const double t = static_cast<double>(i) / fs - t_impact;
        if (t < 0.0) continue;
        double v = 0.0;
        for (const auto& m : modes)
            v += m.amp * std::exp(-m.zeta * 2.0 * kPi * m.f * t) * std::sin(2.0 * kPi * m.f * t);
        out.ie.samples[i] = v;
    }
    add_noise(out.ie.samples, physics.snr_db, rng);

    // Receiver pair: one Gabor wavelet, the far receiver delayed by the
    // cell's surface-wave travel time. Velocity scales with sqrt of the
    // modulus multiplier.
    const double velocity = physics.rayleigh_velocity_mps() * std::sqrt(cell.modulus_multiplier);
    const double tau = physics.usw_spacing_m / velocity;
    const double f_c = 20e3;
    const double sigma_t = 25e-6;
    const double t0 = 1.0e-3;
    auto gabor = [&](double t) {
        const double u = t - t0;
        return std::exp(-u * u / (2.0 * sigma_t * sigma_t)) * std::sin(2.0 * kPi * f_c * u);
    };
    out.usw.spacing_m = physics.usw_spacing_m;
    out.usw.a.sample_rate_hz = fs;
    out.usw.a.channel = "usw_near";
    out.usw.b.sample_rate_hz = fs;
    out.usw.b.channel = "usw_far";
    out.usw.a.samples.resize(static_cast<std::size_t>(physics.usw_samples));
    out.usw.b.samples.resize(static_cast<std::size_t>(physics.usw_samples));
    for (std::size_t i = 0; i < out.usw.a.samples.size(); ++i) {
        const double t = static_cast<double>(i) / fs;
        out.usw.a.samples[i] = gabor(t);
        out.usw.b.samples[i] = gabor(t - tau);
    }
    add_noise(out.usw.a.samples, physics.snr_db, rng);
    add_noise(out.usw.b.samples, physics.snr_db, rng);

    // Wenner reading consistent with the cell's resistivity.
    out.er.spacing_m = physics.er_spacing_m;
    out.er.amps = physics.er_current_a;
    out.er.volts = cell.rho_ohm_m * physics.er_current_a / (2.0 * kPi * physics.er_spacing_m);

    return out;
}

void save_slab(const SlabModel& slab, const std::string& path) {
    nlohmann::json j;
    j["length_m"] = slab.length_m;
    j["width_m"] = slab.width_m;
    j["thickness_m"] = slab.thickness_m;
    j["sound_rho_ohm_m"] = slab.sound_rho_ohm_m;
    j["corroded_rho_ohm_m"] = slab.corroded_rho_ohm_m;
    j["defects"] = nlohmann::json::array();
    for (const auto& d : slab.defects) {
        nlohmann::json jd;
        jd["kind"] = d.kind == SlabDefect::Kind::delamination ? "delamination"
                     : d.kind == SlabDefect::Kind::modulus    ? "modulus"
                                                              : "corrosion";
        jd["rect_m"] = {d.x0, d.y0, d.x1, d.y1};
        if (d.kind == SlabDefect::Kind::delamination) jd["depth_m"] = d.depth_m;
        if (d.kind == SlabDefect::Kind::modulus)
            jd["modulus_multiplier"] = d.modulus_multiplier;
        j["defects"].push_back(jd);
    }
    std::ofstream out(path);
    if (!out) throw io_error("save_slab: cannot write " + path);
    out << j.dump(2) << "\n";
}

SlabModel load_slab(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("load_slab: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("load_slab: parse failure in " + path + ": " + e.what());
    }
    SlabModel slab;
    try {
        slab.length_m = j.at("length_m").get<double>();
        slab.width_m = j.at("width_m").get<double>();
        slab.thickness_m = j.at("thickness_m").get<double>();
        slab.sound_rho_ohm_m = j.at("sound_rho_ohm_m").get<double>();
        slab.corroded_rho_ohm_m = j.at("corroded_rho_ohm_m").get<double>();
        for (const auto& jd : j.at("defects")) {
            SlabDefect d;
            const std::string kind = jd.at("kind").get<std::string>();
            d.kind = kind == "delamination" ? SlabDefect::Kind::delamination
                     : kind == "modulus"    ? SlabDefect::Kind::modulus
                                            : SlabDefect::Kind::corrosion;
            const auto rect = jd.at("rect_m");
            d.x0 = rect.at(0).get<double>();
            d.y0 = rect.at(1).get<double>();
            d.x1 = rect.at(2).get<double>();
            d.y1 = rect.at(3).get<double>();
            if (jd.contains("depth_m")) d.depth_m = jd.at("depth_m").get<double>();
            if (jd.contains("modulus_multiplier"))
                d.modulus_multiplier = jd.at("modulus_multiplier").get<double>();
            slab.defects.push_back(d);
        }
    } catch (const nlohmann::json::exception& e) {
        throw io_error("load_slab: missing field in " + path + ": " + e.what());
    }
    slab.validate();
    return slab;
}

}  // namespace deckscan::nde

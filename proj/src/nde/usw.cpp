#include "deckscan/nde/usw.hpp"

#include <algorithm>
#include <cmath>

#include "deckscan/geometry.hpp"

namespace deckscan::nde {

namespace {

// Welch magnitude-squared coherence on a fixed segment grid; returns
// the per-bin coherence and the bin width.
struct WelchCoherence {
    std::vector<double> gamma2;
    double bin_hz = 0.0;

    double at(double f) const {
        if (gamma2.empty()) return 1.0;
        const std::size_t k = std::min(
            gamma2.size() - 1,
            static_cast<std::size_t>(std::max(0.0, std::round(f / bin_hz))));
        return gamma2[k];
    }
};

WelchCoherence welch_coherence(const TimeSignal& a, const TimeSignal& b) {
    const std::size_t n = std::min(a.samples.size(), b.samples.size());
    std::size_t seg = next_pow2(n / 6);
    seg = std::clamp<std::size_t>(seg, 64, 1024);
    if (seg > n) seg = next_pow2(n) / 2;

    const std::size_t hop = seg / 2;
    std::vector<double> sxx(seg / 2 + 1, 0.0), syy(seg / 2 + 1, 0.0);
    std::vector<std::complex<double>> sxy(seg / 2 + 1, {0.0, 0.0});
    int count = 0;
    std::vector<std::complex<double>> fa(seg), fb(seg);
    for (std::size_t start = 0; start + seg <= n; start += hop) {
        for (std::size_t i = 0; i < seg; ++i) {
            const double w = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                                   static_cast<double>(seg - 1)));
            fa[i] = {a.samples[start + i] * w, 0.0};
            fb[i] = {b.samples[start + i] * w, 0.0};
        }
        fft_radix2(fa);
        fft_radix2(fb);
        for (std::size_t k = 0; k < sxx.size(); ++k) {
            sxx[k] += std::norm(fa[k]);
            syy[k] += std::norm(fb[k]);
            sxy[k] += fa[k] * std::conj(fb[k]);
        }
        ++count;
    }
    WelchCoherence out;
    out.bin_hz = a.sample_rate_hz / static_cast<double>(seg);
    out.gamma2.resize(sxx.size(), 0.0);
    if (count < 2) {
        // A single segment always reports unit coherence; treat as such.
        std::fill(out.gamma2.begin(), out.gamma2.end(), 1.0);
        return out;
    }
    for (std::size_t k = 0; k < sxx.size(); ++k) {
        const double denom = sxx[k] * syy[k];
        out.gamma2[k] = denom > 0.0 ? std::norm(sxy[k]) / denom : 0.0;
    }
    return out;
}

// Coarse in-band group delay of b behind a: the cross-spectrum is
// band-passed and inverse-transformed, and the correlation peak gives
// the lag. Per-band anchoring matters for dispersive pairs, where each
// band travels with its own delay.
double coarse_band_delay_s(const std::vector<std::complex<double>>& fa,
                           const std::vector<std::complex<double>>& fb, std::size_t k_lo,
                           std::size_t k_hi, double sample_rate_hz) {
    const std::size_t n = fa.size();
    std::vector<std::complex<double>> cross(n, {0.0, 0.0});
    // conj(A)*B puts the correlation peak of "b lags a by m" at +m.
    for (std::size_t k = k_lo; k <= k_hi && k <= n / 2; ++k) {
        cross[k] = std::conj(fa[k]) * fb[k];
        if (k > 0 && k < n / 2) cross[n - k] = std::conj(cross[k]);
    }
    // Inverse transform via conjugation.
    for (auto& v : cross) v = std::conj(v);
    fft_radix2(cross);
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t m = 0; m < n; ++m) {
        const double mag = std::abs(cross[m]);
        if (mag > best_mag) {
            best_mag = mag;
            best = m;
        }
    }
    const long lag = best <= n / 2 ? static_cast<long>(best)
                                   : static_cast<long>(best) - static_cast<long>(n);
    return static_cast<double>(lag) / sample_rate_hz;
}

}  // namespace

std::vector<BandPoint> usw_phase_velocity(const TimeSignal& a, const TimeSignal& b,
                                          double spacing_m, const USWParams& params) {
    a.validate();
    b.validate();
    if (a.sample_rate_hz != b.sample_rate_hz)
        throw invalid_input_error("usw_phase_velocity: sample rates differ");
    if (!(spacing_m > 0.0))
        throw invalid_input_error("usw_phase_velocity: spacing must be positive");
    if (!(params.f_lo_hz > 0.0) || !(params.f_lo_hz < params.f_hi_hz))
        throw invalid_input_error("usw_phase_velocity: bad band");

    const std::size_t padded = next_pow2(std::max(a.samples.size(), b.samples.size()));
    std::vector<std::complex<double>> fa(padded, {0.0, 0.0}), fb(padded, {0.0, 0.0});
    for (std::size_t i = 0; i < a.samples.size(); ++i) fa[i] = {a.samples[i], 0.0};
    for (std::size_t i = 0; i < b.samples.size(); ++i) fb[i] = {b.samples[i], 0.0};
    fft_radix2(fa);
    fft_radix2(fb);

    const double bin = a.sample_rate_hz / static_cast<double>(padded);
    const std::size_t k_lo = static_cast<std::size_t>(std::ceil(params.f_lo_hz / bin));
    const std::size_t k_hi = std::min(padded / 2,
                                      static_cast<std::size_t>(std::floor(params.f_hi_hz / bin)));
    if (k_lo > k_hi) throw invalid_input_error("usw_phase_velocity: band holds no bins");

    // Raw cross-spectrum phase (positive = b lags a), unwrapped along
    // the band.
    std::vector<double> phase(k_hi - k_lo + 1);
    for (std::size_t k = k_lo; k <= k_hi; ++k)
        phase[k - k_lo] = std::arg(fa[k] * std::conj(fb[k]));
    for (std::size_t i = 1; i < phase.size(); ++i) {
        double d = phase[i] - phase[i - 1];
        while (d > kPi) {
            phase[i] -= 2.0 * kPi;
            d = phase[i] - phase[i - 1];
        }
        while (d < -kPi) {
            phase[i] += 2.0 * kPi;
            d = phase[i] - phase[i - 1];
        }
    }

    // The band's absolute 2*pi offset is unobservable from the band
    // alone; anchor it with the in-band cross-correlation delay.
    const double tau0 = coarse_band_delay_s(fa, fb, k_lo, k_hi, a.sample_rate_hz);
    const double target = 2.0 * kPi * (static_cast<double>(k_lo) * bin) * tau0;
    const double offset = 2.0 * kPi * std::round((target - phase[0]) / (2.0 * kPi));
    for (double& p : phase) p += offset;

    const WelchCoherence coh = welch_coherence(a, b);

    std::vector<BandPoint> points;
    points.reserve(phase.size());
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        BandPoint pt;
        pt.f_hz = static_cast<double>(k) * bin;
        pt.phase_rad = phase[k - k_lo];
        pt.coherence = coh.at(pt.f_hz);
        if (std::abs(pt.phase_rad) < 1e-9 || pt.coherence < params.min_coherence) {
            pt.flagged = true;
            pt.velocity_mps = 0.0;
        } else {
            pt.velocity_mps = 2.0 * kPi * pt.f_hz * spacing_m / pt.phase_rad;
            pt.flagged = !(pt.velocity_mps > 0.0) || !std::isfinite(pt.velocity_mps);
        }
        points.push_back(pt);
    }
    return points;
}

double usw_mean_velocity(const std::vector<BandPoint>& points) {
    double sum = 0.0;
    int n = 0;
    for (const auto& p : points)
        if (!p.flagged) {
            sum += p.velocity_mps;
            ++n;
        }
    if (n == 0) throw invalid_input_error("usw_mean_velocity: no usable band points");
    return sum / n;
}

double usw_modulus(double c_r_mps, double density_kgpm3, double poisson) {
    if (!(poisson > 0.0) || !(poisson < 0.5))
        throw invalid_input_error("usw_modulus: Poisson ratio must lie in (0, 0.5)");
    if (!(density_kgpm3 > 0.0) || !(c_r_mps > 0.0))
        throw invalid_input_error("usw_modulus: density and velocity must be positive");
    const double c_s = c_r_mps * (1.0 + poisson) / (0.87 + 1.12 * poisson);
    return 2.0 * density_kgpm3 * (1.0 + poisson) * c_s * c_s;
}

}  // namespace deckscan::nde

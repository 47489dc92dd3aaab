#include "deckscan/nde/signal.hpp"

#include <cmath>

#include "deckscan/geometry.hpp"

namespace deckscan::nde {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft_radix2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw invalid_input_error("fft_radix2: length must be a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * kPi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

AmplitudeSpectrum amplitude_spectrum(const TimeSignal& sig, Window window) {
    sig.validate();
    const std::size_t n = sig.samples.size();
    const std::size_t padded = next_pow2(n);

    std::vector<std::complex<double>> buf(padded, {0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        double w = 1.0;
        if (window == Window::hann)
            w = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                      static_cast<double>(n - 1)));
        buf[i] = {sig.samples[i] * w, 0.0};
    }
    fft_radix2(buf);

    AmplitudeSpectrum spec;
    spec.bin_hz = sig.sample_rate_hz / static_cast<double>(padded);
    spec.magnitude.resize(padded / 2 + 1);
    for (std::size_t k = 0; k < spec.magnitude.size(); ++k) spec.magnitude[k] = std::abs(buf[k]);
    return spec;
}

double dominant_frequency(const AmplitudeSpectrum& spec, double f_lo, double f_hi) {
    if (spec.magnitude.empty() || !(spec.bin_hz > 0.0))
        throw invalid_input_error("dominant_frequency: empty spectrum");
    if (!(f_lo <= f_hi) || f_hi < 0.0 || f_lo > spec.max_frequency())
        throw invalid_input_error("dominant_frequency: empty band");

    const std::size_t k_lo =
        static_cast<std::size_t>(std::max(0.0, std::ceil(f_lo / spec.bin_hz - 1e-9)));
    const std::size_t k_hi = std::min(
        spec.magnitude.size() - 1,
        static_cast<std::size_t>(std::max(0.0, std::floor(f_hi / spec.bin_hz + 1e-9))));
    if (k_lo > k_hi) throw invalid_input_error("dominant_frequency: band holds no bins");

    std::size_t best = k_lo;
    for (std::size_t k = k_lo; k <= k_hi; ++k)
        if (spec.magnitude[k] > spec.magnitude[best]) best = k;

    double refined = static_cast<double>(best);
    if (best > 0 && best + 1 < spec.magnitude.size()) {
        const double m0 = spec.magnitude[best - 1];
        const double m1 = spec.magnitude[best];
        const double m2 = spec.magnitude[best + 1];
        const double denom = m0 - 2.0 * m1 + m2;
        if (denom < 0.0) {
            const double delta = 0.5 * (m0 - m2) / denom;
            if (std::abs(delta) <= 0.5) refined += delta;
        }
    }
    return refined * spec.bin_hz;
}

}  // namespace deckscan::nde

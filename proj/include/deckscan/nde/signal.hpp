#pragma once

#include <complex>
#include <string>
#include <vector>

#include "deckscan/errors.hpp"

namespace deckscan::nde {

struct TimeSignal {
    double sample_rate_hz = 0.0;
    std::vector<double> samples;
    std::string channel;

    void validate() const {
        if (!(sample_rate_hz > 0.0))
            throw invalid_input_error("TimeSignal: sample rate must be positive");
        if (samples.size() < 64)
            throw invalid_input_error("TimeSignal: need at least 64 samples");
    }
};

/// One-sided magnitude spectrum; bin k sits at k * bin_hz with
/// bin_hz = sample_rate / transform_length.
struct AmplitudeSpectrum {
    double bin_hz = 0.0;
    std::vector<double> magnitude;

    double frequency(std::size_t k) const { return static_cast<double>(k) * bin_hz; }
    double max_frequency() const { return frequency(magnitude.size() - 1); }
};

enum class Window { none, hann };

/// In-place radix-2 FFT; the size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a);

std::size_t next_pow2(std::size_t n);

/// Magnitude spectrum of the (optionally Hann-windowed) signal,
/// zero-padded to a power of two.
AmplitudeSpectrum amplitude_spectrum(const TimeSignal& sig, Window window);

/// Frequency of the largest magnitude within [f_lo, f_hi], refined by
/// three-point parabolic interpolation around the peak bin.
double dominant_frequency(const AmplitudeSpectrum& spec, double f_lo, double f_hi);

}  // namespace deckscan::nde

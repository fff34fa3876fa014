#include "finkin/gait.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <future>

#include "finkin/error.hpp"
#include "finkin/synthesis.hpp"
#include "finkin/units.hpp"

namespace finkin::gait {

namespace {

std::string cell_label(double frequency_hz, double amplitude) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "f=%gHz amp=%gdeg", frequency_hz, units::rad_to_deg(amplitude));
    return buf;
}

SweepSeries run_cell(const SweepGrid& grid, std::size_t index, double frequency_hz,
                     double amplitude) {
    SweepSeries series;
    series.index = index;
    series.frequency_hz = frequency_hz;
    series.amplitude = amplitude;
    series.label = cell_label(frequency_hz, amplitude);

    const double omega = units::hz_to_rad_per_s(frequency_hz);
    // L_max = 2 L1 is the peak-to-peak crank throw; the S_CY amplitude the
    // designer inverts is L1 cos(φ/2).
    const double h_max = 0.5 * grid.lateral_amplitude * std::cos(0.5 * grid.phase);
    synthesis::DesignSpec spec;
    spec.targets = {.h_max = h_max, .theta_max = amplitude, .omega = omega, .phase = grid.phase};
    try {
        series.mechanism = synthesis::design_mechanism(spec);
    } catch (const Error& e) {
        series.error = e.what();
        return series;
    }

    const std::size_t n = grid.samples_per_period * grid.n_periods;
    const double dt = 1.0 / (frequency_hz * static_cast<double>(grid.samples_per_period));
    series.samples.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        series.samples.push_back(
            linkage::closed_form(*series.mechanism, static_cast<double>(j) * dt, omega));
    }
    return series;
}

}  // namespace

void SweepGrid::validate() const {
    if (frequencies_hz.empty()) throw DomainError("sweep grid has no frequencies");
    if (amplitudes.empty()) throw DomainError("sweep grid has no amplitudes");
    for (double f : frequencies_hz) {
        if (!(f > 0.0) || !std::isfinite(f)) throw DomainError("sweep frequencies must be positive");
    }
    for (double amp : amplitudes) {
        if (!(amp > 0.0 && amp < units::kPi / 2.0)) {
            throw DomainError("sweep amplitudes must lie in (0, pi/2)");
        }
    }
    if (!(lateral_amplitude > 0.0)) throw DomainError("lateral amplitude must be positive");
    if (samples_per_period < 16) throw DomainError("need at least 16 samples per period");
    if (n_periods < 1) throw DomainError("need at least one period");
}

std::vector<SweepSeries> run_sweep(const SweepGrid& grid) {
    grid.validate();

    std::vector<std::future<SweepSeries>> pending;
    pending.reserve(grid.frequencies_hz.size() * grid.amplitudes.size());
    std::size_t index = 0;
    for (double f : grid.frequencies_hz) {
        for (double amp : grid.amplitudes) {
            pending.push_back(std::async(std::launch::async, run_cell, std::cref(grid), index++, f, amp));
        }
    }

    std::vector<SweepSeries> out;
    out.reserve(pending.size());
    for (auto& fut : pending) out.push_back(fut.get());
    return out;
}

std::vector<ReferencePoint> reference_data() {
    return {
        {ParameterKind::AmplitudeSweep, units::deg_to_rad(75.0), 0.09,
         "peak steady speed at 75 deg swing amplitude; 0.02 m lateral amplitude, 90 deg phase, 1 Hz"},
        {ParameterKind::FrequencySweep, 1.5, 0.065,
         "peak steady speed near 1.5 Hz; 0.02 m lateral amplitude, 45 deg swing amplitude, 90 deg phase"},
    };
}

const char* to_string(ParameterKind kind) {
    switch (kind) {
        case ParameterKind::AmplitudeSweep:
            return "amplitude_sweep";
        case ParameterKind::FrequencySweep:
            return "frequency_sweep";
    }
    return "unknown";
}

double strouhal_estimate(double frequency_hz, double peak_to_peak_excursion, double speed) {
    if (!(speed > 0.0)) throw DomainError("Strouhal number needs a positive swimming speed");
    return frequency_hz * peak_to_peak_excursion / speed;
}

}  // namespace finkin::gait

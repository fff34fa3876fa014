#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finkin/linkage.hpp"

namespace finkin::gait {

/// Cartesian grid of gait cells. Each (frequency, amplitude) pair gets its own
/// synthesised mechanism with the shared phase and lateral amplitude.
struct SweepGrid {
    std::vector<double> frequencies_hz;
    std::vector<double> amplitudes;     // commanded θ_max per cell, rad
    double phase = 0.0;                 // crank phase φ, rad
    double lateral_amplitude = 0.0;     // peak-to-peak lateral displacement L_max = 2 L1, m
    std::size_t samples_per_period = 64;
    std::size_t n_periods = 1;

    void validate() const;
};

struct SweepSeries {
    std::size_t index = 0;  // frequency-major cell index
    double frequency_hz = 0.0;
    double amplitude = 0.0;  // rad
    std::string label;
    std::optional<linkage::MechanismParams> mechanism;
    std::vector<linkage::TailState> samples;
    std::string error;  // set when the cell is infeasible; samples are then empty

    bool ok() const { return error.empty(); }
};

enum class ParameterKind { AmplitudeSweep, FrequencySweep };

struct ReferencePoint {
    ParameterKind kind;
    double parameter_value;  // rad for amplitude sweeps, Hz for frequency sweeps
    double speed;            // m/s
    std::string source_note;
};

/// Evaluates every cell (concurrently) and returns the series in grid order.
/// Infeasible cells carry an error message instead of samples.
std::vector<SweepSeries> run_sweep(const SweepGrid& grid);

/// The two measured swimming speeds reported for the prototype.
std::vector<ReferencePoint> reference_data();

const char* to_string(ParameterKind kind);

/// St = f A / U.
double strouhal_estimate(double frequency_hz, double peak_to_peak_excursion, double speed);

}  // namespace finkin::gait

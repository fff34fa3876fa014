#pragma once

#include <cstddef>
#include <vector>

namespace finkin::bodywave {

/// Travelling-wave model of a carangiform midline,
///   y(x, t) = A(x) sin(k x + ω t),  A(x) = c1 + c2 x + c3 x²,  k = 2π/λ.
/// x runs from the head (0) to the tail (body_length).
struct BodyWaveParams {
    double c1 = 0.0;                 // m
    double c2 = 0.0;                 // dimensionless
    double c3 = 0.0;                 // 1/m
    double wavelength = 1.0;         // m
    double angular_frequency = 1.0;  // rad/s
    double body_length = 1.0;        // m

    /// Throws DomainError unless λ, ω, body_length > 0 and A(x) ≥ 0 on [0, body_length].
    void validate() const;

    double wave_number() const;
    double period() const;
};

/// Fish body wave coefficients measured on live carangiform fish.
/// body_length is not part of that data set and must be supplied.
BodyWaveParams carangiform_reference(double body_length);

/// Ideal tail motion: H(t) = H_max sin(ωt), θ(t) = θ_max sin(ωt + φ).
struct TailTargets {
    double h_max = 0.0;      // m
    double theta_max = 0.0;  // rad, in (0, π/2)
    double omega = 0.0;      // rad/s
    double phase = 0.0;      // rad, lead of θ over H

    void validate() const;
};

struct TailTargetSample {
    double h;      // m
    double theta;  // rad
};

struct MidlineSample {
    double x;  // m
    double t;  // s
    double y;  // m
};

double amplitude_envelope(const BodyWaveParams& p, double x);
double midline(const BodyWaveParams& p, double x, double t);

// ∂y/∂x, evaluated analytically.
double midline_slope(const BodyWaveParams& p, double x, double t);

/// Uniform grid over x ∈ [0, body_length] (n_x points, both ends included)
/// and t ∈ [0, T) (n_t points). Samples are ordered time slice by time slice.
std::vector<MidlineSample> sample_midline(const BodyWaveParams& p, std::size_t n_x,
                                          std::size_t n_t);

TailTargetSample tail_targets_of(const TailTargets& targets, double t);

/// Reads ideal tail targets off a body wave: H_max is the envelope at the
/// peduncle, θ_max the largest midline slope angle at the tail tip, and the
/// phase is the lead of that slope angle over the peduncle displacement.
TailTargets derive_tail_targets(const BodyWaveParams& p, double x_peduncle);

}  // namespace finkin::bodywave

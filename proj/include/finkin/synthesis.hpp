#pragma once

#include <cstddef>
#include <span>

#include "finkin/bodywave.hpp"
#include "finkin/linkage.hpp"

namespace finkin::synthesis {

struct DesignSpec {
    bodywave::TailTargets targets;
    // m = n. It has no kinematic effect in the cruising configuration; it only
    // sets how far the swing arms sit from the sliders.
    double chute_link_length = 0.030;  // m
};

/// y ≈ amplitude sin(ω t + phase) + offset.
struct SinusoidFit {
    double amplitude = 0.0;
    double phase = 0.0;  // rad, in (-π, π]
    double offset = 0.0;
    double rms_residual = 0.0;
};

struct FitReport {
    double rms_theta = 0.0;            // rad
    double rms_scy = 0.0;              // m
    double theta_amplitude_fit = 0.0;  // rad
    double scy_amplitude_fit = 0.0;    // m
    // Lead of the fin heading over S_CY, in (-π, π]. The heading is -θ: arm b
    // points along (cos θ, -sin θ), so a CCW-positive fin angle is -θ.
    double phase_lead_fit = 0.0;
};

/// Inverts the S_CY amplitude L1 cos(φ/2) = H_max and the peak swing
/// sin θ_max = (L1 / a) sin(φ/2). φ is taken from spec.targets.phase.
/// Throws InfeasibleError when no valid mechanism results.
linkage::MechanismParams design_mechanism(const DesignSpec& spec);

/// Peak swing angle asin((L1 / a) sin(φ/2)) of a cruising mechanism.
double theta_max_of(const linkage::MechanismParams& p);

/// Peak S_CY excursion L1 cos(φ/2) of a cruising mechanism.
double h_max_of(const linkage::MechanismParams& p);

/// Linear least squares of samples onto {sin ωt, cos ωt, 1} at known ω.
SinusoidFit fit_fixed_frequency(std::span<const double> t, std::span<const double> y, double omega);

/// Fits θ(t) and S_CY(t) of the closed form over one period
/// (n_samples uniform times in [0, T)).
FitReport fit_sinusoid(const linkage::MechanismParams& p, double omega, std::size_t n_samples);

}  // namespace finkin::synthesis

#include "finkin/bodywave.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "finkin/error.hpp"
#include "finkin/units.hpp"

namespace finkin::bodywave {

namespace {

void require_in_body(const BodyWaveParams& p, double x) {
    if (!(x >= 0.0 && x <= p.body_length)) {
        throw DomainError("x = " + std::to_string(x) + " m lies outside the body [0, " +
                          std::to_string(p.body_length) + "] m");
    }
}

double envelope_unchecked(const BodyWaveParams& p, double x) {
    return p.c1 + x * (p.c2 + x * p.c3);
}

double envelope_derivative(const BodyWaveParams& p, double x) { return p.c2 + 2.0 * p.c3 * x; }

}  // namespace

void BodyWaveParams::validate() const {
    if (!(wavelength > 0.0)) throw DomainError("wavelength must be positive");
    if (!(angular_frequency > 0.0)) throw DomainError("angular frequency must be positive");
    if (!(body_length > 0.0)) throw DomainError("body length must be positive");
    if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) {
        throw DomainError("envelope coefficients must be finite");
    }

    // A quadratic attains its minimum over an interval at an endpoint or at the vertex.
    double lowest = std::min(envelope_unchecked(*this, 0.0), envelope_unchecked(*this, body_length));
    if (c3 != 0.0) {
        const double vertex = -c2 / (2.0 * c3);
        if (vertex > 0.0 && vertex < body_length) {
            lowest = std::min(lowest, envelope_unchecked(*this, vertex));
        }
    }
    if (lowest < 0.0) {
        throw DomainError("amplitude envelope is negative inside the body (min A(x) = " +
                          std::to_string(lowest) + " m)");
    }
}

double BodyWaveParams::wave_number() const { return units::kTwoPi / wavelength; }

double BodyWaveParams::period() const { return units::kTwoPi / angular_frequency; }

BodyWaveParams carangiform_reference(double body_length) {
    return BodyWaveParams{.c1 = 0.02,
                          .c2 = 0.08,
                          .c3 = 0.16,
                          .wavelength = 0.95,
                          .angular_frequency = units::kTwoPi,
                          .body_length = body_length};
}

void TailTargets::validate() const {
    if (!(h_max > 0.0)) throw DomainError("H_max must be positive");
    if (!(theta_max > 0.0 && theta_max < units::kPi / 2.0)) {
        throw DomainError("theta_max must lie in (0, pi/2)");
    }
    if (!(omega > 0.0)) throw DomainError("omega must be positive");
    if (!std::isfinite(phase)) throw DomainError("phase must be finite");
}

double amplitude_envelope(const BodyWaveParams& p, double x) {
    require_in_body(p, x);
    return envelope_unchecked(p, x);
}

double midline(const BodyWaveParams& p, double x, double t) {
    return amplitude_envelope(p, x) * std::sin(p.wave_number() * x + p.angular_frequency * t);
}

double midline_slope(const BodyWaveParams& p, double x, double t) {
    require_in_body(p, x);
    const double k = p.wave_number();
    const double arg = k * x + p.angular_frequency * t;
    return envelope_derivative(p, x) * std::sin(arg) + envelope_unchecked(p, x) * k * std::cos(arg);
}

std::vector<MidlineSample> sample_midline(const BodyWaveParams& p, std::size_t n_x,
                                          std::size_t n_t) {
    if (n_x < 2) throw DomainError("sample_midline needs at least 2 points along the body");
    if (n_t < 1) throw DomainError("sample_midline needs at least 1 time slice");
    p.validate();

    const double dx = p.body_length / static_cast<double>(n_x - 1);
    const double dt = p.period() / static_cast<double>(n_t);
    std::vector<MidlineSample> out;
    out.reserve(n_x * n_t);
    for (std::size_t j = 0; j < n_t; ++j) {
        const double t = static_cast<double>(j) * dt;
        for (std::size_t i = 0; i < n_x; ++i) {
            // Pin the last abscissa to body_length so rounding never leaves the domain.
            const double x = (i + 1 == n_x) ? p.body_length : static_cast<double>(i) * dx;
            out.push_back({x, t, midline(p, x, t)});
        }
    }
    return out;
}

TailTargetSample tail_targets_of(const TailTargets& targets, double t) {
    const double wt = targets.omega * t;
    return {targets.h_max * std::sin(wt), targets.theta_max * std::sin(wt + targets.phase)};
}

TailTargets derive_tail_targets(const BodyWaveParams& p, double x_peduncle) {
    p.validate();
    const double h_max = amplitude_envelope(p, x_peduncle);

    // Slope at the tail tip: A'(L) sin(kL + ωt) + A(L) k cos(kL + ωt) = R sin(ωt + kL + β).
    const double k = p.wave_number();
    const double tip = p.body_length;
    const double sin_coeff = envelope_derivative(p, tip);
    const double cos_coeff = envelope_unchecked(p, tip) * k;
    const double slope_amplitude = std::hypot(sin_coeff, cos_coeff);
    const double slope_phase = k * tip + std::atan2(cos_coeff, sin_coeff);

    TailTargets targets{.h_max = h_max,
                        .theta_max = std::atan(slope_amplitude),
                        .omega = p.angular_frequency,
                        .phase = units::wrap_two_pi(slope_phase - k * x_peduncle)};
    targets.validate();
    return targets;
}

}  // namespace finkin::bodywave

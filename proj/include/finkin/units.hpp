#pragma once

#include <cmath>
#include <numbers>

// Everything inside the library is SI (m, rad, s). These helpers are for the
// boundary only: CLI flags, reports and tests that quote millimetres/degrees.
namespace finkin::units {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }
constexpr double mm_to_m(double mm) { return mm * 1e-3; }
constexpr double m_to_mm(double m) { return m * 1e3; }
constexpr double hz_to_rad_per_s(double hz) { return kTwoPi * hz; }

// Wraps an angle into [0, 2π).
inline double wrap_two_pi(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r >= kTwoPi ? 0.0 : r;
}

// Wraps an angle into (-π, π].
inline double wrap_pi(double angle) {
    double r = wrap_two_pi(angle);
    return r > kPi ? r - kTwoPi : r;
}

}  // namespace finkin::units

#pragma once

#include <cstddef>
#include <vector>

// Composite linkage that turns one motor rotation into coupled caudal-peduncle
// translation and caudal-fin rotation.
//
// Two cranks of radii L1, L2 share the motor shaft and sit φ apart. Each crank
// pin drives a slotted linkage along Y, so the linkage ends A and B translate
// by S_A = L1 cos(ωt) and S_B = L2 cos(ωt + φ). Linkage m ends in pin A at
// X = m, linkage n in pin B at X = n. Swing arm b hangs from A and swing arm a
// from B; the two arms meet at the pivot C:
//
//   C = A + b (cos θ, -sin θ) = B + a (cos θ_b, sin θ_b)
//
// so S_CX = b cos θ, S_CY = S_A - b sin θ, and θ > 0 whenever S_A > S_B.
// Closure m + b = n + a lets the arms fold flat (θ = θ_b = 0) when S_A = S_B.
// For m = n, a = b both arms turn through the same angle (θ_b = θ) and the
// relations reduce to
//   a cos θ = b cos θ + m - n,  S_A - S_B = a sin θ + b sin θ.
namespace finkin::linkage {

// Smallest link length accepted by MechanismParams::validate (1 nm).
inline constexpr double kMinLinkLength = 1e-9;

struct MechanismParams {
    double l1 = 0.0;      // crank 1, m
    double l2 = 0.0;      // crank 2, m
    double m_link = 0.0;  // linkage ending in pin A, m
    double n_link = 0.0;  // linkage ending in pin B, m
    double a_arm = 0.0;   // arm from B to C, m
    double b_arm = 0.0;   // arm from A to C, m
    double phase = 0.0;   // angle between the cranks, rad

    /// L1 = L2, m = n, a = b: the cruising configuration.
    static MechanismParams symmetric(double crank, double arm, double phase, double chute_link);

    /// Throws DomainError on non-positive lengths, phase outside (0, π), a
    /// closure violation or L1 sin(φ/2) > a.
    void validate() const;

    bool is_symmetric() const;
};

/// Reference prototype dimensions (L1 = L2 = 22.36 mm, a = b = 22.81 mm, φ = 90°)
/// with the given chute linkage length; the table does not fix m = n.
MechanismParams reference_prototype(double chute_link = 0.030);

struct SliderState {
    double s_a = 0.0;          // m
    double s_b = 0.0;          // m
    double crank_angle = 0.0;  // rad

    double delta() const { return s_a - s_b; }
};

struct TailState {
    double theta = 0.0;    // swing angle of arm b (and of the fin), rad
    double theta_b = 0.0;  // swing angle of arm a; equals theta for symmetric mechanisms
    double s_cy = 0.0;     // m
    double s_cx = 0.0;     // m
    double t = 0.0;        // s; set by closed_form, 0 for slider-driven solves
};

struct TailRate {
    double dtheta_dt = 0.0;  // rad/s
    double ds_cy_dt = 0.0;   // m/s
};

struct PathPoint {
    double t = 0.0;  // s
    double x = 0.0;  // m
    double y = 0.0;  // m
};

// Residuals of the assembly relations for a solved state, all in m.
struct AssemblyResiduals {
    double arm_x = 0.0;  // a cos θ_b - b cos θ - (m - n)
    double arm_y = 0.0;  // S_A - S_B - b sin θ - a sin θ_b
    double s_cy = 0.0;   // S_CY - (S_A - b sin θ)
    double s_cx = 0.0;   // S_CX - b cos θ

    double max_abs() const;
};

bool check_closure(const MechanismParams& p);

SliderState slider_positions(const MechanismParams& p, double crank_angle);

/// Any mechanism satisfying closure. Throws UnreachableError when the arms
/// cannot meet for this slider state.
TailState solve_general(const MechanismParams& p, const SliderState& s);

/// m = n (hence a = b) only; PreconditionError otherwise.
TailState solve_symmetric(const MechanismParams& p, const SliderState& s);

/// Closed form for the cruising configuration, driven at crank angle ω t.
TailState closed_form(const MechanismParams& p, double t, double omega);

/// Exact time derivative of closed_form. SingularError at full deflection
/// when L1 sin(φ/2) = a.
TailRate tail_velocity(const MechanismParams& p, double t, double omega);

/// Time derivative for the general solver, by implicit differentiation of the
/// arm-assembly constraint.
TailRate general_velocity(const MechanismParams& p, double t, double omega);

AssemblyResiduals assembly_residuals(const MechanismParams& p, const SliderState& s,
                                     const TailState& state);

/// n_samples points of one crank revolution, t = i T / (n_samples - 1), so the
/// first and last samples coincide. The traced point sits probe_distance from
/// pin A along arm b; a negative value (default) selects the pivot C itself.
std::vector<PathPoint> trace_path(const MechanismParams& p, double omega, std::size_t n_samples,
                                  double probe_distance = -1.0);

/// Number of proper (transverse) crossings between non-adjacent segments of a
/// closed polyline whose last point repeats the first. Segments meeting at
/// less than about 0.6° count as overlapping, not crossing.
std::size_t count_transverse_crossings(const std::vector<PathPoint>& path);

}  // namespace finkin::linkage

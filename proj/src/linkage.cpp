#include "finkin/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "finkin/error.hpp"
#include "finkin/units.hpp"

namespace finkin::linkage {

namespace {

// Slider offsets below this are treated as the folded pose S_A = S_B.
constexpr double kFoldedPose = 1e-12;
// Slack on |arcsin argument| <= 1 before a pose is declared unreachable.
constexpr double kArcsinSlack = 1e-12;

bool nearly_equal(double x, double y) {
    return std::abs(x - y) <= 1e-12 * std::max({std::abs(x), std::abs(y), 1e-300});
}

double checked_arcsin(double arg, const char* what) {
    if (!std::isfinite(arg) || std::abs(arg) > 1.0 + kArcsinSlack) {
        throw UnreachableError(std::string(what) + ": arms cannot meet (arcsin argument " +
                               std::to_string(arg) + ")");
    }
    return std::asin(std::clamp(arg, -1.0, 1.0));
}

void require_closure(const MechanismParams& p) {
    if (!check_closure(p)) {
        throw PreconditionError("closure m + b = n + a is violated");
    }
}

void require_symmetric(const MechanismParams& p) {
    if (!p.is_symmetric()) {
        throw PreconditionError(
            "closed form needs L1 = L2, m = n and a = b; use the general solver instead");
    }
    p.validate();
}

void require_valid_omega(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("omega must be positive and finite");
    }
}

// sin θ scale factor of the closed form: θ = asin(k sin(ωt + φ/2)).
double swing_gain(const MechanismParams& p) {
    return p.l1 / p.a_arm * std::sin(0.5 * p.phase);
}

double orientation(const PathPoint& a, const PathPoint& b, const PathPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

constexpr double kMinCrossingSine = 1e-2;

bool segments_cross(const PathPoint& a, const PathPoint& b, const PathPoint& c,
                    const PathPoint& d) {
    if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
        std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y)) {
        return false;
    }
    // A path running back over itself meets at grazing angles; that is not a crossing.
    const double ux = b.x - a.x, uy = b.y - a.y, vx = d.x - c.x, vy = d.y - c.y;
    if (std::abs(ux * vy - uy * vx) <= kMinCrossingSine * std::hypot(ux, uy) * std::hypot(vx, vy)) {
        return false;
    }
    const double o1 = orientation(a, b, c);
    const double o2 = orientation(a, b, d);
    const double o3 = orientation(c, d, a);
    const double o4 = orientation(c, d, b);
    return ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0)) &&
           ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0));
}

}  // namespace

MechanismParams MechanismParams::symmetric(double crank, double arm, double phase,
                                           double chute_link) {
    return MechanismParams{.l1 = crank,
                           .l2 = crank,
                           .m_link = chute_link,
                           .n_link = chute_link,
                           .a_arm = arm,
                           .b_arm = arm,
                           .phase = phase};
}

void MechanismParams::validate() const {
    const double lengths[] = {l1, l2, m_link, n_link, a_arm, b_arm};
    for (double len : lengths) {
        if (!std::isfinite(len) || len < kMinLinkLength) {
            throw DomainError("link lengths must be finite and at least 1 nm (got " +
                              std::to_string(len) + " m)");
        }
    }
    if (!(phase > 0.0 && phase < units::kPi)) {
        throw DomainError("crank phase must lie in (0, pi)");
    }
    if (!check_closure(*this)) {
        throw DomainError("closure m + b = n + a is violated");
    }
    if (l1 * std::sin(0.5 * phase) > a_arm) {
        throw DomainError("unreachable: L1 sin(phi/2) exceeds the driving arm length");
    }
}

bool MechanismParams::is_symmetric() const {
    return nearly_equal(l1, l2) && nearly_equal(m_link, n_link) && nearly_equal(a_arm, b_arm);
}

MechanismParams reference_prototype(double chute_link) {
    return MechanismParams::symmetric(units::mm_to_m(22.36), units::mm_to_m(22.81),
                                      units::deg_to_rad(90.0), chute_link);
}

double AssemblyResiduals::max_abs() const {
    return std::max({std::abs(arm_x), std::abs(arm_y), std::abs(s_cy), std::abs(s_cx)});
}

bool check_closure(const MechanismParams& p) {
    const double lhs = p.m_link + p.b_arm;
    const double rhs = p.n_link + p.a_arm;
    return std::abs(lhs - rhs) <= 1e-9 * std::max(lhs, 1.0);
}

SliderState slider_positions(const MechanismParams& p, double crank_angle) {
    require_closure(p);
    // The printed S_B line lacks its cosine; S_B = L2 cos(ωt + φ) is the reading
    // consistent with the closed form.
    return SliderState{.s_a = p.l1 * std::cos(crank_angle),
                       .s_b = p.l2 * std::cos(crank_angle + p.phase),
                       .crank_angle = crank_angle};
}

TailState solve_general(const MechanismParams& p, const SliderState& s) {
    require_closure(p);
    const double a = p.a_arm;
    const double b = p.b_arm;
    const double offset = p.m_link - p.n_link;
    const double ds = s.delta();

    TailState out;
    if (std::abs(ds) < kFoldedPose) {
        // Under closure the arms fold flat when the sliders line up.
        out.theta = 0.0;
        out.theta_b = 0.0;
    } else {
        // ΔS sin θ - δ cos θ = (ΔS² + b² + δ² - a²) / 2b. The radius carries the
        // sign of ΔS so that δ = 0 reproduces the symmetric solution on both sides
        // of the folded pose and the branch stays continuous through it.
        const double radius = std::copysign(std::hypot(ds, offset), ds);
        const double rhs = (ds * ds + b * b + offset * offset - a * a) / (2.0 * b);
        out.theta = std::atan(offset / ds) + checked_arcsin(rhs / radius, "general solver");
        out.theta_b = std::atan2(ds - b * std::sin(out.theta), offset + b * std::cos(out.theta));
    }
    out.s_cy = s.s_a - b * std::sin(out.theta);
    out.s_cx = b * std::cos(out.theta);
    return out;
}

TailState solve_symmetric(const MechanismParams& p, const SliderState& s) {
    if (!nearly_equal(p.m_link, p.n_link)) {
        throw PreconditionError("symmetric solver needs m = n");
    }
    require_closure(p);
    const double a = p.a_arm;
    const double b = p.b_arm;
    const double ds = s.delta();

    TailState out;
    if (std::abs(ds) < kFoldedPose) {
        if (!nearly_equal(a, b)) {
            throw UnreachableError("symmetric solver: S_A = S_B with a != b");
        }
        out.theta = 0.0;
        out.s_cy = s.s_a;
    } else {
        const double numerator = ds * ds + b * b - a * a;
        out.theta = checked_arcsin(numerator / (2.0 * b * ds), "symmetric solver");
        out.s_cy = s.s_a - numerator / (2.0 * ds);
    }
    out.theta_b = out.theta;
    out.s_cx = b * std::cos(out.theta);
    return out;
}

TailState closed_form(const MechanismParams& p, double t, double omega) {
    require_symmetric(p);
    require_valid_omega(omega);
    const double wt = omega * t;
    TailState out;
    out.theta = checked_arcsin(swing_gain(p) * std::sin(wt + 0.5 * p.phase), "closed form");
    out.theta_b = out.theta;
    out.s_cy = 0.5 * p.l1 * (std::cos(wt + p.phase) + std::cos(wt));
    out.s_cx = p.b_arm * std::cos(out.theta);
    out.t = t;
    return out;
}

TailRate tail_velocity(const MechanismParams& p, double t, double omega) {
    require_symmetric(p);
    require_valid_omega(omega);
    const double wt = omega * t;
    const double u = wt + 0.5 * p.phase;
    const double gain = swing_gain(p);
    const double g = gain * std::sin(u);
    const double slope = gain * omega * std::cos(u);

    TailRate rate;
    const double root = 1.0 - g * g;
    if (root > 0.0) {
        rate.dtheta_dt = slope / std::sqrt(root);
    } else if (slope != 0.0) {
        throw SingularError("swing rate is unbounded at full deflection");
    }
    rate.ds_cy_dt = -0.5 * p.l1 * omega * (std::sin(wt + p.phase) + std::sin(wt));
    return rate;
}

TailRate general_velocity(const MechanismParams& p, double t, double omega) {
    require_valid_omega(omega);
    const double wt = omega * t;
    const SliderState s = slider_positions(p, wt);
    const TailState state = solve_general(p, s);
    const double a = p.a_arm;
    const double b = p.b_arm;
    const double offset = p.m_link - p.n_link;
    const double ds = s.delta();
    const double ds_dt = omega * (-p.l1 * std::sin(wt) + p.l2 * std::sin(wt + p.phase));

    // F(θ, ΔS) = ΔS sin θ - δ cos θ - (ΔS² + b² + δ² - a²) / 2b = 0.
    double dtheta_dds = 0.0;
    if (std::abs(ds) < kFoldedPose) {
        // Folded pose: both partials vanish; the branch slope is the limit below.
        dtheta_dds = 1.0 / (std::sqrt(b) * (std::sqrt(a) + std::sqrt(b)));
    } else {
        const double f_theta = ds * std::cos(state.theta) + offset * std::sin(state.theta);
        const double f_ds = std::sin(state.theta) - ds / b;
        if (std::abs(f_theta) < 1e-15) {
            throw SingularError("general solver: swing rate is unbounded at this pose");
        }
        dtheta_dds = -f_ds / f_theta;
    }

    TailRate rate;
    rate.dtheta_dt = dtheta_dds * ds_dt;
    rate.ds_cy_dt = -omega * p.l1 * std::sin(wt) - b * std::cos(state.theta) * rate.dtheta_dt;
    return rate;
}

AssemblyResiduals assembly_residuals(const MechanismParams& p, const SliderState& s,
                                     const TailState& state) {
    const double a = p.a_arm;
    const double b = p.b_arm;
    AssemblyResiduals r;
    r.arm_x = a * std::cos(state.theta_b) - b * std::cos(state.theta) - (p.m_link - p.n_link);
    r.arm_y = s.delta() - b * std::sin(state.theta) - a * std::sin(state.theta_b);
    r.s_cy = state.s_cy - (s.s_a - b * std::sin(state.theta));
    r.s_cx = state.s_cx - b * std::cos(state.theta);
    return r;
}

std::vector<PathPoint> trace_path(const MechanismParams& p, double omega, std::size_t n_samples,
                                  double probe_distance) {
    if (n_samples < 8) throw DomainError("trace_path needs at least 8 samples");
    require_symmetric(p);
    require_valid_omega(omega);

    const double probe = probe_distance < 0.0 ? p.b_arm : probe_distance;
    const double period = units::kTwoPi / omega;
    std::vector<PathPoint> path;
    path.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double t = (i + 1 == n_samples)
                             ? period
                             : period * static_cast<double>(i) / static_cast<double>(n_samples - 1);
        const TailState st = closed_form(p, t, omega);
        const double sin_theta = std::sin(st.theta);
        path.push_back({t, probe * std::cos(st.theta), st.s_cy + (p.b_arm - probe) * sin_theta});
    }
    return path;
}

std::size_t count_transverse_crossings(const std::vector<PathPoint>& path) {
    if (path.size() < 4) return 0;
    const std::size_t segments = path.size() - 1;
    std::size_t count = 0;
    for (std::size_t i = 0; i < segments; ++i) {
        for (std::size_t j = i + 2; j < segments; ++j) {
            // First and last segments share the closing vertex.
            if (i == 0 && j == segments - 1) continue;
            if (segments_cross(path[i], path[i + 1], path[j], path[j + 1])) ++count;
        }
    }
    return count;
}

}  // namespace finkin::linkage

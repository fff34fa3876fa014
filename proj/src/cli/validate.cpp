#include "cli/validate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "finkin/error.hpp"
#include "finkin/synthesis.hpp"
#include "finkin/units.hpp"

namespace finkin::cli {

namespace {

constexpr int kGrid = 10000;
constexpr double kOmega = units::kTwoPi;

// Runs a check body that yields the measured value; exceptions become failures.
CheckResult measure(std::string name, double tolerance, const std::function<double()>& body) {
    CheckResult r;
    r.name = std::move(name);
    r.tolerance = tolerance;
    try {
        r.value = body();
        r.passed = std::isfinite(r.value) && r.value <= tolerance;
    } catch (const std::exception& e) {
        r.value = std::numeric_limits<double>::quiet_NaN();
        r.passed = false;
        r.note = e.what();
    }
    return r;
}

double crank_angle(int i) { return units::kTwoPi * i / kGrid; }

}  // namespace

std::vector<CheckResult> run_consistency_suite(const linkage::MechanismParams& p) {
    using namespace linkage;
    std::vector<CheckResult> out;

    out.push_back(measure("closure", 1e-9, [&] {
        const double gap = std::abs((p.m_link + p.b_arm) - (p.n_link + p.a_arm));
        return gap / std::max(p.m_link + p.b_arm, 1.0);
    }));
    out.push_back(measure("symmetry", 1e-12, [&] {
        const double scale = std::max({p.l1, p.m_link, p.a_arm});
        return std::max({std::abs(p.l1 - p.l2), std::abs(p.m_link - p.n_link),
                         std::abs(p.a_arm - p.b_arm)}) /
               scale;
    }));
    out.push_back(measure("parameters_valid", 0.0, [&] {
        p.validate();
        return 0.0;
    }));

    out.push_back(measure("general_vs_symmetric", 1e-12, [&] {
        double worst = 0.0;
        for (int i = 0; i < kGrid; ++i) {
            const auto s = slider_positions(p, crank_angle(i));
            const auto g = solve_general(p, s);
            const auto y = solve_symmetric(p, s);
            worst = std::max({worst, std::abs(g.theta - y.theta), std::abs(g.s_cy - y.s_cy)});
        }
        return worst;
    }));
    out.push_back(measure("symmetric_vs_closed_form", 1e-12, [&] {
        double worst = 0.0;
        for (int i = 0; i < kGrid; ++i) {
            const double t = crank_angle(i) / kOmega;
            const auto y = solve_symmetric(p, slider_positions(p, kOmega * t));
            const auto c = closed_form(p, t, kOmega);
            worst = std::max({worst, std::abs(y.theta - c.theta), std::abs(y.s_cy - c.s_cy)});
        }
        return worst;
    }));
    out.push_back(measure("assembly_residuals", 1e-9, [&] {
        double worst = 0.0;
        for (int i = 0; i < kGrid; ++i) {
            const double t = crank_angle(i) / kOmega;
            const auto s = slider_positions(p, kOmega * t);
            worst = std::max({worst, assembly_residuals(p, s, solve_general(p, s)).max_abs(),
                              assembly_residuals(p, s, solve_symmetric(p, s)).max_abs(),
                              assembly_residuals(p, s, closed_form(p, t, kOmega)).max_abs()});
        }
        return worst;
    }));
    out.push_back(measure("rates_vs_finite_difference", 1e-6, [&] {
        // Relative error, with an absolute floor of 1e-8 where the rate crosses zero.
        const double h = 1e-6;
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double t = (i + 0.5) / 100.0;
            const auto rate = tail_velocity(p, t, kOmega);
            const auto hi = closed_form(p, t + h, kOmega);
            const auto lo = closed_form(p, t - h, kOmega);
            const double fd[] = {(hi.theta - lo.theta) / (2 * h), (hi.s_cy - lo.s_cy) / (2 * h)};
            const double exact[] = {rate.dtheta_dt, rate.ds_cy_dt};
            for (int k = 0; k < 2; ++k) {
                const double err = std::abs(exact[k] - fd[k]);
                worst = std::max(worst, err <= 1e-8 ? 0.0 : err / std::abs(exact[k]));
            }
        }
        return worst;
    }));
    out.push_back(measure("design_round_trip", 1e-12, [&] {
        synthesis::DesignSpec spec;
        spec.targets = {.h_max = synthesis::h_max_of(p),
                        .theta_max = synthesis::theta_max_of(p),
                        .omega = kOmega,
                        .phase = p.phase};
        spec.chute_link_length = p.m_link;
        const auto back = synthesis::design_mechanism(spec);
        return std::max(std::abs(back.l1 - p.l1) / p.l1, std::abs(back.a_arm - p.a_arm) / p.a_arm);
    }));

    // Fixed reference design, independent of the mechanism under test.
    out.push_back(measure("reference_design_mm", 0.01, [] {
        synthesis::DesignSpec spec;
        spec.targets = {.h_max = units::mm_to_m(15.81),
                        .theta_max = units::deg_to_rad(43.88),
                        .omega = kOmega,
                        .phase = units::deg_to_rad(90.0)};
        const auto d = synthesis::design_mechanism(spec);
        return std::max(std::abs(units::m_to_mm(d.l1) - 22.36),
                        std::abs(units::m_to_mm(d.a_arm) - 22.81));
    }));
    out.push_back(measure("reference_theta_max_deg", 0.01, [] {
        return std::abs(units::rad_to_deg(synthesis::theta_max_of(reference_prototype())) - 43.88);
    }));
    return out;
}

}  // namespace finkin::cli

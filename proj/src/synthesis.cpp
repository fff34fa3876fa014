#include "finkin/synthesis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "finkin/error.hpp"
#include "finkin/units.hpp"

namespace finkin::synthesis {

using linkage::MechanismParams;

linkage::MechanismParams design_mechanism(const DesignSpec& spec) {
    spec.targets.validate();
    const double phase = spec.targets.phase;
    if (!(phase > 0.0 && phase < units::kPi)) {
        throw DomainError("crank phase must lie in (0, pi)");
    }
    if (!(spec.chute_link_length > 0.0)) {
        throw DomainError("chute link length must be positive");
    }

    const double half = 0.5 * phase;
    const double crank = spec.targets.h_max / std::cos(half);
    const double arm = crank * std::sin(half) / std::sin(spec.targets.theta_max);
    const MechanismParams p =
        MechanismParams::symmetric(crank, arm, phase, spec.chute_link_length);
    try {
        p.validate();
    } catch (const DomainError& e) {
        throw InfeasibleError(std::string("no mechanism realises these targets: ") + e.what());
    }
    return p;
}

double theta_max_of(const MechanismParams& p) {
    if (!p.is_symmetric()) {
        throw PreconditionError("theta_max_of needs L1 = L2, m = n and a = b");
    }
    p.validate();
    return std::asin(std::min(1.0, p.l1 / p.a_arm * std::sin(0.5 * p.phase)));
}

double h_max_of(const MechanismParams& p) {
    if (!p.is_symmetric()) {
        throw PreconditionError("h_max_of needs L1 = L2, m = n and a = b");
    }
    p.validate();
    return p.l1 * std::cos(0.5 * p.phase);
}

SinusoidFit fit_fixed_frequency(std::span<const double> t, std::span<const double> y,
                                double omega) {
    if (t.size() != y.size()) throw DomainError("fit: sample arrays differ in length");
    if (t.size() < 3) throw DomainError("fit: need at least 3 samples");

    const auto n = static_cast<Eigen::Index>(t.size());
    Eigen::MatrixXd design(n, 3);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double wt = omega * t[static_cast<std::size_t>(i)];
        design(i, 0) = std::sin(wt);
        design(i, 1) = std::cos(wt);
        design(i, 2) = 1.0;
        rhs(i) = y[static_cast<std::size_t>(i)];
    }
    const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
    const Eigen::VectorXd residual = rhs - design * coef;

    // A sin(ωt + ψ) = A cos ψ sin ωt + A sin ψ cos ωt.
    SinusoidFit fit;
    fit.amplitude = std::hypot(coef(0), coef(1));
    fit.phase = fit.amplitude > 0.0 ? std::atan2(coef(1), coef(0)) : 0.0;
    fit.offset = coef(2);
    fit.rms_residual = std::sqrt(residual.squaredNorm() / static_cast<double>(n));
    return fit;
}

FitReport fit_sinusoid(const MechanismParams& p, double omega, std::size_t n_samples) {
    if (n_samples < 32) throw DomainError("fit_sinusoid needs at least 32 samples");
    const double period = units::kTwoPi / omega;
    std::vector<double> times(n_samples), heading(n_samples), scy(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        times[i] = period * static_cast<double>(i) / static_cast<double>(n_samples);
        const linkage::TailState st = linkage::closed_form(p, times[i], omega);
        heading[i] = -st.theta;
        scy[i] = st.s_cy;
    }
    const SinusoidFit theta_fit = fit_fixed_frequency(times, heading, omega);
    const SinusoidFit scy_fit = fit_fixed_frequency(times, scy, omega);

    FitReport report;
    report.rms_theta = theta_fit.rms_residual;
    report.rms_scy = scy_fit.rms_residual;
    report.theta_amplitude_fit = theta_fit.amplitude;
    report.scy_amplitude_fit = scy_fit.amplitude;
    report.phase_lead_fit = units::wrap_pi(theta_fit.phase - scy_fit.phase);
    return report;
}

}  // namespace finkin::synthesis

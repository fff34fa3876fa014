#include <cmath>
#include <optional>
#include <random>

#include "doctest.h"
#include "finkin/error.hpp"
#include "finkin/linkage.hpp"
#include "finkin/units.hpp"

using namespace finkin;
using namespace finkin::linkage;
using finkin::units::deg_to_rad;
using finkin::units::kPi;
using finkin::units::kTwoPi;
using finkin::units::mm_to_m;

namespace {

MechanismParams asymmetric() {
    return MechanismParams{.l1 = mm_to_m(22.36),
                           .l2 = mm_to_m(22.36),
                           .m_link = mm_to_m(24.0),
                           .n_link = mm_to_m(22.0),
                           .a_arm = mm_to_m(24.81),
                           .b_arm = mm_to_m(22.81),
                           .phase = deg_to_rad(90.0)};
}

// Pivot C as the intersection of the circle of radius b about pin A = (m, S_A)
// and the circle of radius a about pin B = (n, S_B), taking the root on the
// far side of the pins (the one that folds flat at S_A = S_B). Returns θ of arm b.
struct CircleSolution {
    double theta;
    double s_cy;
    double tolerance;  // the root is ill-conditioned near tangency
};

std::optional<CircleSolution> two_circle(const MechanismParams& p, double s_a, double s_b) {
    const double ax = p.m_link, ay = s_a, bx = p.n_link, by = s_b;
    const double dx = bx - ax, dy = by - ay;
    const double d = std::hypot(dx, dy);
    const double along = (p.b_arm * p.b_arm - p.a_arm * p.a_arm + d * d) / (2.0 * d);
    const double h2 = p.b_arm * p.b_arm - along * along;
    if (h2 < 0.0) return std::nullopt;
    const double h = std::sqrt(h2);
    const double mx = ax + along * dx / d, my = ay + along * dy / d;
    const double c1x = mx - h * dy / d, c1y = my + h * dx / d;
    const double c2x = mx + h * dy / d, c2y = my - h * dx / d;
    const bool first = c1x >= c2x;
    const double cx = first ? c1x : c2x, cy = first ? c1y : c2y;
    const double tol = h2 < 1e-10 * p.b_arm * p.b_arm ? 1e-6 : 1e-9;
    return CircleSolution{std::atan2(ay - cy, cx - ax), cy, tol};
}

}  // namespace

TEST_CASE("check_closure") {
    auto sym = MechanismParams::symmetric(0.02, 0.03, 1.0, 0.04);
    CHECK(check_closure(sym));

    MechanismParams p = sym;
    p.m_link = mm_to_m(10);
    p.n_link = mm_to_m(12);
    p.a_arm = mm_to_m(24);
    p.b_arm = mm_to_m(26);
    CHECK(check_closure(p));
    p.b_arm = mm_to_m(25);
    CHECK_FALSE(check_closure(p));
}

TEST_CASE("mechanism validation") {
    const auto ref = reference_prototype();
    CHECK_NOTHROW(ref.validate());
    CHECK(ref.is_symmetric());

    auto bad = ref;
    bad.phase = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = ref;
    bad.phase = kPi;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = ref;
    bad.l2 = -1e-3;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = ref;
    bad.b_arm += 1e-4;  // breaks closure
    CHECK_THROWS_AS(bad.validate(), DomainError);
    // L1 sin(φ/2) > a
    bad = MechanismParams::symmetric(0.05, 0.03, deg_to_rad(120.0), 0.03);
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("slider_positions") {
    const auto p = reference_prototype();
    const auto s0 = slider_positions(p, 0.0);
    CHECK(s0.s_a == doctest::Approx(mm_to_m(22.36)).epsilon(1e-15));
    CHECK(std::abs(s0.s_b) < 1e-17);

    const auto s1 = slider_positions(p, kPi / 2.0);
    CHECK(std::abs(s1.s_a) < 1e-17);
    CHECK(s1.s_b == doctest::Approx(-mm_to_m(22.36)).epsilon(1e-15));

    for (double angle = -7.0; angle < 7.0; angle += 0.31) {
        const auto a = slider_positions(p, angle);
        const auto b = slider_positions(p, angle + kTwoPi);
        CHECK(std::abs(a.s_a - b.s_a) < 1e-15);
        CHECK(std::abs(a.s_b - b.s_b) < 1e-15);
        CHECK(std::abs(a.s_a) <= p.l1);
        CHECK(std::abs(a.s_b) <= p.l2);
    }

    auto broken = p;
    broken.a_arm += 1e-3;
    CHECK_THROWS_AS(slider_positions(broken, 0.0), PreconditionError);
}

TEST_CASE("symmetric solver") {
    const auto p = reference_prototype();
    const auto st = solve_symmetric(p, slider_positions(p, 0.0));
    CHECK(units::rad_to_deg(st.theta) == doctest::Approx(29.35).epsilon(5e-5));
    CHECK(st.theta == doctest::Approx(std::asin(22.36 / 45.62)).epsilon(1e-14));
    CHECK(st.s_cy == doctest::Approx(mm_to_m(11.18)).epsilon(1e-14));

    // Crank angle -φ/2 lines the sliders up.
    const auto folded = solve_symmetric(p, slider_positions(p, -p.phase / 2.0));
    CHECK(std::abs(folded.theta) < 1e-12);

    const SliderState exact{.s_a = 0.004, .s_b = 0.004, .crank_angle = 0.0};
    const auto limit = solve_symmetric(p, exact);
    CHECK(limit.theta == 0.0);
    CHECK(limit.s_cy == 0.004);
    CHECK(limit.s_cx == p.b_arm);

    CHECK_THROWS_AS(solve_symmetric(asymmetric(), slider_positions(asymmetric(), 0.0)),
                    PreconditionError);
}

TEST_CASE("general solver agrees with the symmetric solver at m = n") {
    const auto p = reference_prototype();
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < 1000; ++i) {
        const auto s = slider_positions(p, angle(rng));
        const auto g = solve_general(p, s);
        const auto y = solve_symmetric(p, s);
        CHECK(std::abs(g.theta - y.theta) < 1e-12);
        CHECK(std::abs(g.s_cy - y.s_cy) < 1e-12);
        CHECK(std::abs(g.theta_b - g.theta) < 1e-12);
    }
}

TEST_CASE("general solver matches a two-circle intersection") {
    const auto p = asymmetric();
    REQUIRE(check_closure(p));

    const auto st = solve_general(p, slider_positions(p, 0.0));
    // Frozen from tests/oracles/compute_oracles.py.
    CHECK(st.theta == doctest::Approx(0.4997400214446516).epsilon(1e-12));
    CHECK(st.s_cy == doctest::Approx(0.01142950799581492).epsilon(1e-12));

    int compared = 0;
    for (int i = 0; i < 720; ++i) {
        const double angle = -kPi + kTwoPi * i / 720.0;
        const auto s = slider_positions(p, angle);
        const auto oracle = two_circle(p, s.s_a, s.s_b);
        if (!oracle) {
            CHECK_THROWS_AS(solve_general(p, s), UnreachableError);
            continue;
        }
        const auto g = solve_general(p, s);
        CHECK(std::abs(g.theta - oracle->theta) < oracle->tolerance);
        CHECK(std::abs(g.s_cy - oracle->s_cy) < oracle->tolerance);
        CHECK(assembly_residuals(p, s, g).max_abs() < 1e-9);
        ++compared;
    }
    CHECK(compared > 600);
}

TEST_CASE("general solver is continuous through the folded pose") {
    for (double offset_mm : {-2.0, 0.0, 3.0}) {
        const double b = mm_to_m(22.81);
        MechanismParams p{.l1 = mm_to_m(22.36),
                          .l2 = mm_to_m(22.36),
                          .m_link = mm_to_m(30.0 + offset_mm),
                          .n_link = mm_to_m(30.0),
                          .a_arm = b + mm_to_m(offset_mm),
                          .b_arm = b,
                          .phase = deg_to_rad(90.0)};
        const double fold = -p.phase / 2.0;
        for (double eps : {1e-3, 1e-6, 1e-9}) {
            const auto lo = solve_general(p, slider_positions(p, fold - eps));
            const auto hi = solve_general(p, slider_positions(p, fold + eps));
            CHECK(std::abs(lo.theta) < 100 * eps);
            CHECK(std::abs(hi.theta) < 100 * eps);
        }
    }
}

TEST_CASE("assembly residuals of every solver") {
    const auto p = reference_prototype();
    const double omega = kTwoPi;
    for (int i = 0; i < 2000; ++i) {
        const double t = i / 2000.0;
        const auto s = slider_positions(p, omega * t);
        CHECK(assembly_residuals(p, s, solve_general(p, s)).max_abs() < 1e-9);
        CHECK(assembly_residuals(p, s, solve_symmetric(p, s)).max_abs() < 1e-9);
        CHECK(assembly_residuals(p, s, closed_form(p, t, omega)).max_abs() < 1e-9);
    }
}

TEST_CASE("closed form") {
    const auto p = reference_prototype();
    const double omega = kTwoPi;
    // ωt + φ/2 = π/2
    const auto peak = closed_form(p, (kPi / 2.0 - p.phase / 2.0) / omega, omega);
    CHECK(units::rad_to_deg(peak.theta) == doctest::Approx(43.88).epsilon(0.01 / 43.88));

    // ωt = -φ/2
    const auto extreme = closed_form(p, -p.phase / 2.0 / omega, omega);
    CHECK(extreme.s_cy == doctest::Approx(p.l1 * std::cos(p.phase / 2.0)).epsilon(1e-14));
    CHECK(units::m_to_mm(extreme.s_cy) == doctest::Approx(15.81).epsilon(0.01 / 15.81));

    // Aligned cranks produce no swing; φ = 0 is outside the valid range, so
    // approach it.
    auto aligned = MechanismParams::symmetric(0.02, 0.03, 1e-12, 0.03);
    for (double t = 0.0; t < 1.0; t += 0.1) CHECK(std::abs(closed_form(aligned, t, omega).theta) < 1e-12);

    const double gain = p.l1 / p.a_arm * std::sin(p.phase / 2.0);
    for (double t = -0.5; t < 1.5; t += 0.0371) {
        const auto st = closed_form(p, t, omega);
        CHECK(std::abs(st.theta) <= std::asin(gain) + 1e-15);
        CHECK(std::abs(st.s_cy - p.l1 * std::cos(p.phase / 2) * std::cos(omega * t + p.phase / 2)) <
              1e-12);
        const auto later = closed_form(p, t + 1.0, omega);
        CHECK(std::abs(later.theta - st.theta) < 1e-12);
        CHECK(st.s_cx > 0.0);
    }

    CHECK_THROWS_AS(closed_form(asymmetric(), 0.0, omega), PreconditionError);
    CHECK_THROWS_AS(closed_form(p, 0.0, 0.0), DomainError);
}

TEST_CASE("closed form ignores the chute linkage length") {
    const double omega = kTwoPi;
    const auto a = reference_prototype(0.010);
    const auto b = reference_prototype(0.030);
    const auto c = reference_prototype(0.100);
    for (int i = 0; i < 500; ++i) {
        const double t = i / 500.0;
        const auto sa = closed_form(a, t, omega), sb = closed_form(b, t, omega),
                   sc = closed_form(c, t, omega);
        CHECK(sa.theta == sb.theta);
        CHECK(sb.theta == sc.theta);
        CHECK(sa.s_cy == sc.s_cy);
        CHECK(sa.s_cx == sc.s_cx);
    }
}

TEST_CASE("tail velocity") {
    const auto p = reference_prototype();
    const double omega = kTwoPi;
    const auto at_peak = tail_velocity(p, (kPi / 2.0 - p.phase / 2.0) / omega, omega);
    CHECK(std::abs(at_peak.dtheta_dt) < 1e-12);
    const auto at_scy_peak = tail_velocity(p, -p.phase / 2.0 / omega, omega);
    CHECK(std::abs(at_scy_peak.ds_cy_dt) < 1e-15);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> time(0.0, 1.0);
    const double h = 1e-6;
    for (int i = 0; i < 100; ++i) {
        const double t = time(rng);
        const auto rate = tail_velocity(p, t, omega);
        const double fd_theta =
            (closed_form(p, t + h, omega).theta - closed_form(p, t - h, omega).theta) / (2 * h);
        const double fd_scy =
            (closed_form(p, t + h, omega).s_cy - closed_form(p, t - h, omega).s_cy) / (2 * h);
        CHECK(std::abs(rate.dtheta_dt - fd_theta) <= 1e-6 * std::abs(rate.dtheta_dt) + 1e-8);
        CHECK(std::abs(rate.ds_cy_dt - fd_scy) <= 1e-6 * std::abs(rate.ds_cy_dt) + 1e-8);
    }

    // L1 sin(φ/2) = a: the arm goes fully sideways and the swing rate blows up.
    const auto edge = MechanismParams::symmetric(0.02, 0.02 * std::sin(0.5), 1.0, 0.03);
    const double t_edge = (kPi / 2.0 - 0.5) / omega;
    CHECK_THROWS_AS(tail_velocity(edge, t_edge, omega), SingularError);
}

TEST_CASE("general velocity matches finite differences") {
    const double omega = kTwoPi;
    for (const auto& p : {asymmetric(), reference_prototype()}) {
        const double h = 1e-7;
        for (int i = 0; i < 200; ++i) {
            const double t = (i + 0.5) / 200.0;
            double fd_theta = 0.0, fd_scy = 0.0;
            try {
                const auto hi = solve_general(p, slider_positions(p, omega * (t + h)));
                const auto lo = solve_general(p, slider_positions(p, omega * (t - h)));
                fd_theta = (hi.theta - lo.theta) / (2 * h);
                fd_scy = (hi.s_cy - lo.s_cy) / (2 * h);
            } catch (const UnreachableError&) {
                continue;
            }
            const auto rate = general_velocity(p, t, omega);
            CHECK(std::abs(rate.dtheta_dt - fd_theta) <= 1e-5 * std::abs(rate.dtheta_dt) + 1e-6);
            CHECK(std::abs(rate.ds_cy_dt - fd_scy) <= 1e-5 * std::abs(rate.ds_cy_dt) + 1e-8);
        }
        // At the folded pose the symmetric mechanism swings at ΔS'/(2b).
        const double fold_t = -p.phase / 2.0 / omega;
        const auto at_fold = general_velocity(p, fold_t, omega);
        // The pose is a bifurcation, so a tiny step loses too many digits.
        const double fd = (solve_general(p, slider_positions(p, omega * (fold_t + 1e-5))).theta -
                           solve_general(p, slider_positions(p, omega * (fold_t - 1e-5))).theta) /
                          2e-5;
        CHECK(at_fold.dtheta_dt == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("trace_path") {
    const auto p = reference_prototype();
    const double omega = kTwoPi;
    const auto path = trace_path(p, omega, 256);
    REQUIRE(path.size() == 256);
    CHECK(std::hypot(path.front().x - path.back().x, path.front().y - path.back().y) < 1e-9);
    for (const auto& pt : path) {
        const auto st = closed_form(p, pt.t, omega);
        CHECK(pt.x == st.s_cx);
        CHECK(pt.y == st.s_cy);
    }

    // Near-aligned cranks: θ ≈ 0, so S_CX stays at b.
    const auto flat = trace_path(MechanismParams::symmetric(0.02, 0.03, 1e-6, 0.03), omega, 64);
    for (const auto& pt : flat) CHECK(std::abs(pt.x - 0.03) < 1e-12);

    CHECK_THROWS_AS(trace_path(p, omega, 7), DomainError);
    CHECK_THROWS_AS(trace_path(asymmetric(), omega, 64), PreconditionError);
}

TEST_CASE("pivot C retraces a single arc; points past C trace a figure eight") {
    const auto p = reference_prototype();
    const double omega = kTwoPi;
    // P(u) = P(-u) with u = ωt + φ/2: mirrored crank angles land on the same point.
    for (double u = 0.05; u < kPi; u += 0.1) {
        const auto fwd = closed_form(p, (u - p.phase / 2) / omega, omega);
        const auto back = closed_form(p, (-u - p.phase / 2) / omega, omega);
        CHECK(std::abs(fwd.s_cx - back.s_cx) < 1e-15);
        CHECK(std::abs(fwd.s_cy - back.s_cy) < 1e-15);
    }
    CHECK(count_transverse_crossings(trace_path(p, omega, 4096)) == 0);
    const auto fin_tip = trace_path(p, omega, 4096, 2.0 * p.b_arm);
    CHECK(count_transverse_crossings(fin_tip) == 1);
}

TEST_CASE("count_transverse_crossings on simple shapes") {
    auto closed = [](std::vector<PathPoint> pts) {
        pts.push_back(pts.front());
        return pts;
    };
    // Square: none.
    CHECK(count_transverse_crossings(closed({{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}})) == 0);
    // Bow tie: one.
    CHECK(count_transverse_crossings(closed({{0, 0, 0}, {0, 1, 1}, {0, 1, 0}, {0, 0, 1}})) == 1);
    // Lissajous 1:2 figure eight.
    std::vector<PathPoint> eight;
    for (int i = 0; i < 400; ++i) {
        const double s = kTwoPi * (i + 0.37) / 400.0;
        eight.push_back({s, std::sin(s), std::sin(2 * s)});
    }
    CHECK(count_transverse_crossings(closed(eight)) == 1);
}

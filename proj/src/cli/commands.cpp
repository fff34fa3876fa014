#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli/output.hpp"
#include "cli/svg.hpp"
#include "cli/validate.hpp"
#include "finkin/bodywave.hpp"
#include "finkin/error.hpp"
#include "finkin/gait.hpp"
#include "finkin/linkage.hpp"
#include "finkin/synthesis.hpp"
#include "finkin/units.hpp"

namespace finkin::cli {

namespace {

using nlohmann::json;
using namespace finkin::units;

enum class Format { Csv, Json, Svg };

struct Common {
    std::string out_path;
    std::string format = "csv";
    bool si = false;

    Format parsed_format() const {
        if (format == "csv") return Format::Csv;
        if (format == "json") return Format::Json;
        return Format::Svg;
    }
    double length(double v) const { return si ? v : mm_to_m(v); }
    double angle(double v) const { return si ? v : deg_to_rad(v); }
};

// Mechanism flags. Unset values fall back to the reference prototype (m = n =
// 30 mm); L2, n and b default to L1, m and a.
struct MechanismFlags {
    std::optional<double> l1, l2, m, n, a, b, phi;

    linkage::MechanismParams build(const Common& c) const {
        const auto pick = [](const std::optional<double>& v, double reference, auto convert) {
            return v ? convert(*v) : reference;
        };
        const auto len = [&c](double v) { return c.length(v); };
        const auto ang = [&c](double v) { return c.angle(v); };
        const auto ref = linkage::reference_prototype(mm_to_m(30.0));
        const double crank = pick(l1, ref.l1, len);
        const double chute = pick(m, ref.m_link, len);
        const double arm = pick(a, ref.a_arm, len);
        return linkage::MechanismParams{.l1 = crank,
                                        .l2 = pick(l2, crank, len),
                                        .m_link = chute,
                                        .n_link = pick(n, chute, len),
                                        .a_arm = arm,
                                        .b_arm = pick(b, arm, len),
                                        .phase = pick(phi, ref.phase, ang)};
    }
};

void add_common(CLI::App* cmd, Common& c, bool with_format, const std::string& formats) {
    cmd->add_option("--out", c.out_path, "Output file (stdout when omitted)");
    if (with_format) {
        cmd->add_option("--format", c.format, "Output format")
            ->check(CLI::IsMember(CLI::detail::split(formats, ',')));
    }
    cmd->add_flag("--si", c.si, "Lengths in m and angles in rad instead of mm and degrees");
}

void add_mechanism(CLI::App* cmd, MechanismFlags& f) {
    cmd->add_option("--l1-mm", f.l1, "Crank 1 length (default 22.36)");
    cmd->add_option("--l2-mm", f.l2, "Crank 2 length (default: L1)");
    cmd->add_option("--m-mm", f.m, "Chute linkage m (default 30)");
    cmd->add_option("--n-mm", f.n, "Chute linkage n (default: m)");
    cmd->add_option("--a-mm", f.a, "Swing arm a (default 22.81)");
    cmd->add_option("--b-mm", f.b, "Swing arm b (default: a)");
    cmd->add_option("--phi-deg", f.phi, "Crank phase angle (default 90)");
}

json mechanism_json(const linkage::MechanismParams& p) {
    return {{"l1_m", p.l1},       {"l2_m", p.l2},       {"m_m", p.m_link}, {"n_m", p.n_link},
            {"a_m", p.a_arm},     {"b_m", p.b_arm},     {"phi_rad", p.phase}};
}

json envelope(const json& params, json series, const std::vector<std::string>& args) {
    return {{"params", params}, {"series", std::move(series)}, {"meta", meta_block(args)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

struct WaveArgs {
    Common common;
    double c1 = 0.02, c2 = 0.08, c3 = 0.16, wavelength = 0.95, omega = kTwoPi;
    double body_length = 0.0;
    std::size_t n_x = 100, n_t = 8;
};

std::string cmd_wave(const WaveArgs& w, const std::vector<std::string>& args) {
    const bodywave::BodyWaveParams p{.c1 = w.c1,
                                     .c2 = w.c2,
                                     .c3 = w.c3,
                                     .wavelength = w.wavelength,
                                     .angular_frequency = w.omega,
                                     .body_length = w.body_length};
    p.validate();
    const auto samples = bodywave::sample_midline(p, w.n_x, w.n_t);

    switch (w.common.parsed_format()) {
        case Format::Csv: {
            CsvWriter csv({"x_m", "t_s", "y_m"});
            for (const auto& s : samples) csv.row({s.x, s.t, s.y});
            return csv.str();
        }
        case Format::Json: {
            json series = json::array();
            for (const auto& s : samples) {
                series.push_back({{"x_m", s.x},
                                  {"t_s", s.t},
                                  {"y_m", s.y},
                                  {"envelope_m", bodywave::amplitude_envelope(p, s.x)}});
            }
            const json params{{"c1_m", p.c1},
                              {"c2", p.c2},
                              {"c3_per_m", p.c3},
                              {"wavelength_m", p.wavelength},
                              {"omega_rad_s", p.angular_frequency},
                              {"body_length_m", p.body_length},
                              {"n_x", w.n_x},
                              {"n_t", w.n_t}};
            return dump(envelope(params, std::move(series), args));
        }
        case Format::Svg: {
            PlotPanel panel{.title = "Body wave midline and amplitude envelope",
                            .x_label = "x (m)",
                            .y_label = "y (m)",
                            .series = {},
                            .equal_aspect = false};
            for (std::size_t j = 0; j < w.n_t; ++j) {
                PlotSeries s;
                char name[48];
                std::snprintf(name, sizeof name, "t = %.4g s", samples[j * w.n_x].t);
                s.name = name;
                for (std::size_t i = 0; i < w.n_x; ++i) {
                    s.x.push_back(samples[j * w.n_x + i].x);
                    s.y.push_back(samples[j * w.n_x + i].y);
                }
                panel.series.push_back(std::move(s));
            }
            PlotSeries upper{.name = "+A(x)", .x = {}, .y = {}, .dashed = true};
            PlotSeries lower{.name = "-A(x)", .x = {}, .y = {}, .dashed = true};
            for (std::size_t i = 0; i < w.n_x; ++i) {
                const double x = samples[i].x;
                const double amp = bodywave::amplitude_envelope(p, x);
                upper.x.push_back(x);
                upper.y.push_back(amp);
                lower.x.push_back(x);
                lower.y.push_back(-amp);
            }
            panel.series.push_back(std::move(upper));
            panel.series.push_back(std::move(lower));
            SvgFigure fig(800, 420);
            fig.add_panel(std::move(panel));
            return fig.render();
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
    Common common;
    MechanismFlags mech;
    double freq_hz = 1.0;
    double duration_s = 1.0;
    double dt_s = 0.001;
    bool general = false;
};

std::string cmd_simulate(const SimulateArgs& a, const std::vector<std::string>& args) {
    const auto p = a.mech.build(a.common);
    if (!(a.dt_s > 0.0)) throw DomainError("--dt-s must be positive");
    if (!(a.duration_s >= 0.0)) throw DomainError("--duration-s must be non-negative");
    if (!(a.freq_hz > 0.0)) throw DomainError("--freq-hz must be positive");
    const double omega = hz_to_rad_per_s(a.freq_hz);
    if (a.general) {
        if (!linkage::check_closure(p)) throw PreconditionError("closure m + b = n + a is violated");
    } else {
        if (!p.is_symmetric()) {
            throw PreconditionError(
                "mechanism is not symmetric (L1 = L2, m = n, a = b); pass --general to use the "
                "general solver");
        }
        p.validate();
    }

    const auto rows = static_cast<std::size_t>(std::floor(a.duration_s / a.dt_s + 1e-9)) + 1;
    struct Row {
        linkage::TailState state;
        linkage::TailRate rate;
    };
    std::vector<Row> series;
    series.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const double t = static_cast<double>(i) * a.dt_s;
        Row r;
        if (a.general) {
            r.state = linkage::solve_general(p, linkage::slider_positions(p, omega * t));
            r.state.t = t;
            r.rate = linkage::general_velocity(p, t, omega);
        } else {
            r.state = linkage::closed_form(p, t, omega);
            r.rate = linkage::tail_velocity(p, t, omega);
        }
        series.push_back(r);
    }

    switch (a.common.parsed_format()) {
        case Format::Csv: {
            CsvWriter csv({"t_s", "theta_rad", "s_cy_m", "s_cx_m", "dtheta_dt", "ds_cy_dt"});
            for (const auto& r : series) {
                csv.row({r.state.t, r.state.theta, r.state.s_cy, r.state.s_cx, r.rate.dtheta_dt,
                         r.rate.ds_cy_dt});
            }
            return csv.str();
        }
        case Format::Json: {
            json out = json::array();
            for (const auto& r : series) {
                out.push_back({{"t_s", r.state.t},
                               {"theta_rad", r.state.theta},
                               {"s_cy_m", r.state.s_cy},
                               {"s_cx_m", r.state.s_cx},
                               {"dtheta_dt", r.rate.dtheta_dt},
                               {"ds_cy_dt", r.rate.ds_cy_dt}});
            }
            json params = mechanism_json(p);
            params["omega_rad_s"] = omega;
            params["solver"] = a.general ? "general" : "closed_form";
            return dump(envelope(params, std::move(out), args));
        }
        case Format::Svg: {
            PlotSeries theta{.name = "theta", .x = {}, .y = {}, .dashed = false};
            PlotSeries scy{.name = "S_CY", .x = {}, .y = {}, .dashed = false};
            for (const auto& r : series) {
                theta.x.push_back(r.state.t);
                theta.y.push_back(rad_to_deg(r.state.theta));
                scy.x.push_back(r.state.t);
                scy.y.push_back(m_to_mm(r.state.s_cy));
            }
            SvgFigure fig(800, 320);
            fig.add_panel({.title = "Lateral displacement of C",
                           .x_label = "t (s)",
                           .y_label = "S_CY (mm)",
                           .series = {std::move(scy)},
                           .equal_aspect = false});
            fig.add_panel({.title = "Caudal fin swing angle",
                           .x_label = "t (s)",
                           .y_label = "theta (deg)",
                           .series = {std::move(theta)},
                           .equal_aspect = false});
            return fig.render();
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

struct DesignArgs {
    Common common;
    double theta_max = 0.0;
    double h_max = 0.0;
    double phi = 90.0;
    double chute = 30.0;
};

std::string cmd_design(const DesignArgs& d, const std::vector<std::string>& args) {
    synthesis::DesignSpec spec;
    spec.targets = {.h_max = d.common.length(d.h_max),
                    .theta_max = d.common.angle(d.theta_max),
                    .omega = kTwoPi,
                    .phase = d.common.angle(d.phi)};
    spec.chute_link_length = d.common.length(d.chute);
    const auto p = synthesis::design_mechanism(spec);

    json params = mechanism_json(p);
    params["l1_mm"] = m_to_mm(p.l1);
    params["l2_mm"] = m_to_mm(p.l2);
    params["m_mm"] = m_to_mm(p.m_link);
    params["n_mm"] = m_to_mm(p.n_link);
    params["a_mm"] = m_to_mm(p.a_arm);
    params["b_mm"] = m_to_mm(p.b_arm);
    params["phi_deg"] = rad_to_deg(p.phase);

    const double theta_back = synthesis::theta_max_of(p);
    const double h_back = synthesis::h_max_of(p);
    json doc = envelope(params, json::array(), args);
    doc["targets"] = {{"theta_max_rad", spec.targets.theta_max},
                      {"h_max_m", spec.targets.h_max},
                      {"phi_rad", spec.targets.phase},
                      {"chute_link_m", spec.chute_link_length}};
    doc["verification"] = {{"theta_max_rad", theta_back},
                           {"theta_max_deg", rad_to_deg(theta_back)},
                           {"h_max_m", h_back},
                           {"h_max_mm", m_to_mm(h_back)},
                           {"closure", linkage::check_closure(p)},
                           {"theta_max_error_rad", std::abs(theta_back - spec.targets.theta_max)},
                           {"h_max_error_m", std::abs(h_back - spec.targets.h_max)}};
    return dump(doc);
}

// ---------------------------------------------------------------------------

struct PathArgs {
    Common common;
    MechanismFlags mech;
    double freq_hz = 1.0;
    std::size_t samples = 512;
    std::optional<double> probe;
};

std::string cmd_path(const PathArgs& a, const std::vector<std::string>& args) {
    const auto p = a.mech.build(a.common);
    if (!(a.freq_hz > 0.0)) throw DomainError("--freq-hz must be positive");
    const double omega = hz_to_rad_per_s(a.freq_hz);
    const double probe = a.probe ? a.common.length(*a.probe) : -1.0;
    if (a.probe && !(probe >= 0.0)) throw DomainError("--probe-mm must be non-negative");
    const auto path = linkage::trace_path(p, omega, a.samples, probe);

    switch (a.common.parsed_format()) {
        case Format::Csv: {
            CsvWriter csv({"t_s", "s_cx_m", "s_cy_m"});
            for (const auto& pt : path) csv.row({pt.t, pt.x, pt.y});
            return csv.str();
        }
        case Format::Json: {
            json series = json::array();
            for (const auto& pt : path) series.push_back({{"t_s", pt.t}, {"s_cx_m", pt.x}, {"s_cy_m", pt.y}});
            json params = mechanism_json(p);
            params["omega_rad_s"] = omega;
            params["probe_m"] = a.probe ? probe : p.b_arm;
            params["transverse_crossings"] = linkage::count_transverse_crossings(path);
            return dump(envelope(params, std::move(series), args));
        }
        case Format::Svg: {
            PlotSeries s{.name = "traced point", .x = {}, .y = {}, .dashed = false};
            for (const auto& pt : path) {
                s.x.push_back(m_to_mm(pt.x));
                s.y.push_back(m_to_mm(pt.y));
            }
            SvgFigure fig(640, 640);
            fig.add_panel({.title = "Path over one crank revolution",
                           .x_label = "X (mm)",
                           .y_label = "Y (mm)",
                           .series = {std::move(s)},
                           .equal_aspect = true});
            return fig.render();
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

struct SweepArgs {
    Common common;
    std::vector<double> freqs_hz{1.0};
    std::vector<double> amps{15.0, 30.0, 45.0, 60.0, 75.0};
    double phi = 90.0;
    double lateral = 20.0;
    std::size_t spp = 64;
    std::size_t periods = 1;
};

std::string cmd_sweep(const SweepArgs& a, const std::vector<std::string>& args) {
    gait::SweepGrid grid;
    grid.frequencies_hz = a.freqs_hz;
    for (double amp : a.amps) grid.amplitudes.push_back(a.common.angle(amp));
    grid.phase = a.common.angle(a.phi);
    grid.lateral_amplitude = a.common.length(a.lateral);
    grid.samples_per_period = a.spp;
    grid.n_periods = a.periods;
    const auto cells = gait::run_sweep(grid);

    switch (a.common.parsed_format()) {
        case Format::Csv: {
            CsvWriter csv({"series", "freq_hz", "amplitude_rad", "t_s", "theta_rad", "s_cy_m", "s_cx_m"});
            for (const auto& c : cells) {
                for (const auto& st : c.samples) {
                    csv.row({static_cast<double>(c.index), c.frequency_hz, c.amplitude, st.t,
                             st.theta, st.s_cy, st.s_cx});
                }
            }
            return csv.str();
        }
        case Format::Json: {
            json series = json::array();
            for (const auto& c : cells) {
                json cell{{"index", c.index},
                          {"label", c.label},
                          {"frequency_hz", c.frequency_hz},
                          {"amplitude_rad", c.amplitude}};
                if (c.ok()) {
                    cell["mechanism"] = mechanism_json(*c.mechanism);
                    json samples = json::array();
                    for (const auto& st : c.samples) {
                        samples.push_back({{"t_s", st.t},
                                           {"theta_rad", st.theta},
                                           {"s_cy_m", st.s_cy},
                                           {"s_cx_m", st.s_cx}});
                    }
                    cell["samples"] = std::move(samples);
                } else {
                    cell["error"] = c.error;
                }
                series.push_back(std::move(cell));
            }
            json reference = json::array();
            for (const auto& r : gait::reference_data()) {
                reference.push_back({{"parameter_kind", gait::to_string(r.kind)},
                                     {"parameter_value", r.parameter_value},
                                     {"speed_m_s", r.speed},
                                     {"source_note", r.source_note}});
            }
            const json params{{"frequencies_hz", grid.frequencies_hz},
                              {"amplitudes_rad", grid.amplitudes},
                              {"phi_rad", grid.phase},
                              {"lateral_amplitude_m", grid.lateral_amplitude},
                              {"samples_per_period", grid.samples_per_period},
                              {"n_periods", grid.n_periods}};
            json doc = envelope(params, std::move(series), args);
            doc["reference"] = std::move(reference);
            return dump(doc);
        }
        case Format::Svg: {
            PlotPanel panel{.title = "Swing angle per sweep cell",
                            .x_label = "t (s)",
                            .y_label = "theta (deg)",
                            .series = {},
                            .equal_aspect = false};
            for (const auto& c : cells) {
                if (!c.ok()) continue;
                PlotSeries s{.name = c.label, .x = {}, .y = {}, .dashed = false};
                for (const auto& st : c.samples) {
                    s.x.push_back(st.t);
                    s.y.push_back(rad_to_deg(st.theta));
                }
                panel.series.push_back(std::move(s));
            }
            SvgFigure fig(800, 420);
            fig.add_panel(std::move(panel));
            return fig.render();
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

struct ValidateArgs {
    Common common;
    MechanismFlags mech;
    bool as_json = false;
};

std::string cmd_validate(const ValidateArgs& v, const std::vector<std::string>& args,
                         bool& all_passed) {
    const auto p = v.mech.build(v.common);
    const auto checks = run_consistency_suite(p);
    all_passed = true;
    for (const auto& c : checks) all_passed = all_passed && c.passed;

    if (v.as_json) {
        json series = json::array();
        for (const auto& c : checks) {
            series.push_back({{"name", c.name},
                              {"value", c.value},
                              {"tolerance", c.tolerance},
                              {"passed", c.passed},
                              {"note", c.note}});
        }
        json doc = envelope(mechanism_json(p), std::move(series), args);
        doc["passed"] = all_passed;
        return dump(doc);
    }

    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-28s %-14s %-10s %s\n", "check", "value", "tolerance", "result");
    os << line;
    for (const auto& c : checks) {
        std::snprintf(line, sizeof line, "%-28s %-14.6g %-10.3g %s", c.name.c_str(), c.value,
                      c.tolerance, c.passed ? "PASS" : "FAIL");
        os << line;
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << '\n';
    }
    os << (all_passed ? "all checks passed\n" : "consistency suite FAILED\n");
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kinematics of a single-motor composite-linkage fish tail", kToolName};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kToolVersion);

    WaveArgs wave;
    auto* wave_cmd = app.add_subcommand("wave", "Sample the body-wave midline and its envelope");
    add_common(wave_cmd, wave.common, true, "csv,json,svg");
    wave_cmd->add_option("--c1-m", wave.c1, "Constant envelope term")->capture_default_str();
    wave_cmd->add_option("--c2", wave.c2, "Linear envelope term")->capture_default_str();
    wave_cmd->add_option("--c3-per-m", wave.c3, "Quadratic envelope term")->capture_default_str();
    wave_cmd->add_option("--wavelength-m", wave.wavelength, "Body wavelength")->capture_default_str();
    wave_cmd->add_option("--omega-rad-s", wave.omega, "Body wave angular frequency")
        ->capture_default_str();
    wave_cmd->add_option("--body-length-m", wave.body_length, "Body length")->required();
    wave_cmd->add_option("--nx", wave.n_x, "Points along the body")->capture_default_str();
    wave_cmd->add_option("--nt", wave.n_t, "Time slices over one period")->capture_default_str();

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Time series of swing angle and pivot motion");
    add_common(sim_cmd, sim.common, true, "csv,json,svg");
    add_mechanism(sim_cmd, sim.mech);
    sim_cmd->add_option("--freq-hz", sim.freq_hz, "Crank frequency")->capture_default_str();
    sim_cmd->add_option("--duration-s", sim.duration_s, "Simulated time")->capture_default_str();
    sim_cmd->add_option("--dt-s", sim.dt_s, "Sample spacing")->capture_default_str();
    sim_cmd->add_flag("--general", sim.general, "Use the general (asymmetric) solver");

    DesignArgs design;
    auto* design_cmd = app.add_subcommand("design", "Mechanism dimensions from tail-motion targets");
    add_common(design_cmd, design.common, true, "json");
    design.common.format = "json";
    design_cmd->add_option("--theta-max-deg", design.theta_max, "Peak swing angle")->required();
    design_cmd->add_option("--h-max-mm", design.h_max, "Peak lateral displacement of C")->required();
    design_cmd->add_option("--phi-deg", design.phi, "Crank phase angle")->capture_default_str();
    design_cmd->add_option("--chute-mm", design.chute, "Chute linkage length m = n")
        ->capture_default_str();

    PathArgs path;
    auto* path_cmd = app.add_subcommand("path", "Trace the pivot path over one revolution");
    add_common(path_cmd, path.common, true, "csv,json,svg");
    add_mechanism(path_cmd, path.mech);
    path_cmd->add_option("--freq-hz", path.freq_hz, "Crank frequency")->capture_default_str();
    path_cmd->add_option("--samples", path.samples, "Samples per revolution")->capture_default_str();
    path_cmd->add_option("--probe-mm", path.probe,
                         "Trace a point this far from pin A along arm b instead of C");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Batch trajectories over a gait grid");
    add_common(sweep_cmd, sweep.common, true, "csv,json,svg");
    sweep_cmd->add_option("--freqs-hz", sweep.freqs_hz, "Frequencies")->delimiter(',');
    sweep_cmd->add_option("--amps-deg", sweep.amps, "Swing amplitudes")->delimiter(',');
    sweep_cmd->add_option("--phi-deg", sweep.phi, "Crank phase angle")->capture_default_str();
    sweep_cmd->add_option("--lateral-mm", sweep.lateral, "Peak-to-peak lateral amplitude 2 L1")
        ->capture_default_str();
    sweep_cmd->add_option("--spp", sweep.spp, "Samples per period")->capture_default_str();
    sweep_cmd->add_option("--periods", sweep.periods, "Periods per cell")->capture_default_str();

    ValidateArgs validate;
    auto* validate_cmd = app.add_subcommand("validate", "Run the cross-equation consistency suite");
    add_common(validate_cmd, validate.common, false, "");
    add_mechanism(validate_cmd, validate.mech);
    validate_cmd->add_flag("--json", validate.as_json, "Machine-readable report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        std::string text;
        std::string out_path;
        int status = kOk;
        if (*wave_cmd) {
            text = cmd_wave(wave, args);
            out_path = wave.common.out_path;
        } else if (*sim_cmd) {
            text = cmd_simulate(sim, args);
            out_path = sim.common.out_path;
        } else if (*design_cmd) {
            text = cmd_design(design, args);
            out_path = design.common.out_path;
        } else if (*path_cmd) {
            text = cmd_path(path, args);
            out_path = path.common.out_path;
        } else if (*sweep_cmd) {
            text = cmd_sweep(sweep, args);
            out_path = sweep.common.out_path;
        } else if (*validate_cmd) {
            bool passed = false;
            text = cmd_validate(validate, args, passed);
            out_path = validate.common.out_path;
            status = passed ? kOk : kValidationFailed;
        }
        write_output(out_path, text, out);
        return status;
    } catch (const InfeasibleError& e) {
        err << "infeasible design: " << e.what() << '\n';
        return kInfeasible;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace finkin::cli

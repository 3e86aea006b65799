#include "weyllab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "weyllab/errors.hpp"
#include "weyllab/observables.hpp"

namespace weyllab {

namespace {

using ordered_json = nlohmann::ordered_json;

/// First spinor component at comoving coordinate w (1-D families).
Complex first_component(const RunConfig& cfg, double w) {
    const Direction dir = cfg.direction();
    const auto n = dir.unit();
    const Event e{0.0, w * n[0], w * n[1], w * n[2]};
    if (cfg.family == SolutionFamily::Dirac) return cfg.dirac_solution().eval(e)[0];
    return cfg.weyl_directional_solution().eval(e)[0];
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        out[static_cast<size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return out;
}

struct ControlResult {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

double max_residual_over(const SolutionUnderTest& sut, const PotentialField& pot,
                         const std::vector<Event>& events, const FDSpec& fd) {
    double mx = 0.0;
    for (const Event& e : events) mx = std::max(mx, sut.residual(pot, e, fd));
    return mx;
}

} // namespace

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out{tmp, std::ios::binary | std::ios::trunc};
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw Error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string waveform_csv(const RunConfig& cfg) {
    if (cfg.family == SolutionFamily::WeylTransverse) {
        throw ConfigError("waveform needs a solution with 1-D profiles "
                          "(dirac or weyl_directional)");
    }
    std::ostringstream out;
    out << "w,re_c1,im_c1,envelope,local_energy\n";
    for (double w : linspace(cfg.waveform_min, cfg.waveform_max, cfg.waveform_rows)) {
        const Complex c1 = first_component(cfg, w);
        const double energy = cfg.h.eval(w).derivative;
        out << format_double(w) << ',' << format_double(c1.real()) << ','
            << format_double(c1.imag()) << ',' << format_double(std::abs(c1)) << ','
            << format_double(energy) << '\n';
    }
    return out.str();
}

std::string fieldmap_csv(const RunConfig& cfg) {
    if (cfg.family != SolutionFamily::WeylTransverse) {
        throw ConfigError("separation map needs a weyl_transverse solution");
    }
    const Branch branch = separation_branch(cfg.helicity, cfg.sense);
    const SuperGaussian& sg = cfg.p.kind() == Kind2D::Reciprocal
                                  ? cfg.p.base().super_gaussian_params()
                                  : cfg.p.super_gaussian_params();
    const auto xs = linspace(sg.x0 - cfg.map_half_width, sg.x0 + cfg.map_half_width,
                             cfg.map_points);
    const auto ys = linspace(sg.y0 - cfg.map_half_width, sg.y0 + cfg.map_half_width,
                             cfg.map_points);
    std::ostringstream out;
    out << "x,y,Bz,p,p_inv\n";
    for (double x : xs) {
        for (double y : ys) {
            const double bz = separation_field(cfg.p, cfg.charge, branch, x, y);
            const double pv = cfg.p.eval(x, y).value;
            out << format_double(x) << ',' << format_double(y) << ',' << format_double(bz) << ','
                << format_double(pv) << ',' << format_double(cfg.r1 / pv) << '\n';
        }
    }
    return out.str();
}

std::string fields_csv(const RunConfig& cfg) {
    const PotentialFamily fam = cfg.potential_family();
    const auto xs = linspace(-cfg.map_half_width, cfg.map_half_width, cfg.map_points);
    std::ostringstream out;
    out << "x,y,Ex,Ey,Ez,Bx,By,Bz\n";
    for (double x : xs) {
        for (double y : xs) {
            const Event e{cfg.slice_t, x, y, cfg.slice_z};
            const EMField f = closed_form_fields(fam, cfg.gauge, cfg.charge, e);
            out << format_double(x) << ',' << format_double(y);
            for (int k = 0; k < 3; ++k) out << ',' << format_double(f.electric[size_t(k)]);
            for (int k = 0; k < 3; ++k) out << ',' << format_double(f.magnetic[size_t(k)]);
            out << '\n';
        }
    }
    return out.str();
}

std::string observables_csv(const RunConfig& cfg) {
    std::ostringstream out;
    const auto ws = linspace(cfg.waveform_min, cfg.waveform_max, cfg.waveform_rows);
    if (cfg.family == SolutionFamily::Dirac) {
        const DiracSolution sol = cfg.dirac_solution();
        const auto n = sol.dir.unit();
        out << "w,density,sx,sy,sz,total_spin\n";
        for (double w : ws) {
            const Spinor4 psi = sol.eval({0.0, w * n[0], w * n[1], w * n[2]});
            const double d = density(psi);
            SpinVector s{};
            if (d > kDensityFloor) s = spin_vector(psi);
            out << format_double(w) << ',' << format_double(d) << ',' << format_double(s.x)
                << ',' << format_double(s.y) << ',' << format_double(s.z) << ','
                << format_double(s.magnitude()) << '\n';
        }
        return out.str();
    }

    out << "w,density,helicity\n";
    if (cfg.family == SolutionFamily::WeylDirectional) {
        const WeylDirectionalSolution sol = cfg.weyl_directional_solution();
        const auto n = sol.dir.unit();
        for (double w : ws) {
            const Spinor2 psi = sol.eval({0.0, w * n[0], w * n[1], w * n[2]});
            const double d = density(psi);
            const double hel = d > kDensityFloor ? helicity_expectation(psi, sol.dir) : 0.0;
            out << format_double(w) << ',' << format_double(d) << ',' << format_double(hel)
                << '\n';
        }
        return out.str();
    }

    const WeylTransverseSolution sol = cfg.weyl_transverse_solution();
    const SuperGaussian& sg = cfg.p.kind() == Kind2D::Reciprocal
                                  ? cfg.p.base().super_gaussian_params()
                                  : cfg.p.super_gaussian_params();
    const Direction dir = axis_direction(cfg.sense);
    for (double w : ws) {
        // sample along the axis at the transverse profile center; zeta = w at t = 0
        const Spinor2 psi = sol.eval({0.0, sg.x0, sg.y0, w});
        const double d = density(psi);
        const double hel = d > kDensityFloor ? helicity_expectation(psi, dir) : 0.0;
        out << format_double(w) << ',' << format_double(d) << ',' << format_double(hel) << '\n';
    }
    return out.str();
}

VerificationOutcome run_verification(const RunConfig& cfg) {
    const SolutionUnderTest sut = cfg.solution_under_test();
    const PotentialFamily fam = cfg.potential_family();
    const GridSpec grid = cfg.verification_grid();
    const std::vector<Event> events = grid.events();

    // gauge samples: the configured function first, then the seeded draw
    std::vector<GaugeFunction> gauges;
    if (cfg.gauge.kind() != GaugeKind::Zero) gauges.push_back(cfg.gauge);
    for (auto& g : sample_gauge_functions(cfg.gauge_samples, cfg.seed)) {
        gauges.push_back(std::move(g));
    }

    ResidualReport sweep =
        degeneracy_sweep(sut, fam, gauges, grid, cfg.fd, cfg.residual_threshold);

    // pointwise annihilator identity, relative to the local amplitude
    const AnnihilatorVector ann = fam.annihilator();
    bool annihilator_ok = true;
    for (const Event& e : events) {
        const double amp = sut.amplitude(e);
        if (sut.annihilator_residual_at(e, ann) > 1e-13 * std::max(amp, 1e-30)) {
            annihilator_ok = false;
            break;
        }
    }

    // convergence estimate on a coarse subgrid with the configured gauge
    const GridSpec coarse{grid.center, grid.half_width, 3};
    const std::vector<Event> coarse_events = coarse.events();
    const PotentialField cfg_pot = fam.field(cfg.gauge);
    const std::vector<double> steps{4.0 * cfg.fd.step, 2.0 * cfg.fd.step, cfg.fd.step};
    const ConvergenceEstimate conv = convergence_order(
        [&](double h) {
            return max_residual_over(sut, cfg_pot, coarse_events, FDSpec{cfg.fd.order, h});
        },
        steps);
    const bool conv_ok =
        conv.floor_dominated ||
        (conv.order.has_value() && std::abs(*conv.order - cfg.fd.order) <= 1.0);

    // field dual-oracle cross-check on the same coarse grid
    const ResidualReport fields =
        field_crosscheck(fam, gauges, cfg.charge, coarse, cfg.fd, cfg.field_threshold);

    // inverted negative controls
    std::vector<ControlResult> controls;
    const double control_threshold = 1000.0 * cfg.residual_threshold;
    if (cfg.family == SolutionFamily::Dirac) {
        const SolutionUnderTest massive =
            SolutionUnderTest::dirac(cfg.dirac_solution(), cfg.mass + 0.5);
        ControlResult c{"mass-0.5", 0.0, control_threshold, false};
        c.residual = max_residual_over(massive, fam.field(GaugeFunction::zero()), events, cfg.fd);
        c.pass = c.residual >= c.threshold;
        controls.push_back(c);
    }
    {
        AnnihilatorVector flipped = ann;
        for (int k = 1; k < 4; ++k) flipped.v[size_t(k)] = -flipped.v[size_t(k)];
        const PotentialField pot = [fam, flipped](const Event& e) {
            return degenerate_potential(fam.base(e), flipped, GaugeFunction::constant(1.0), e);
        };
        ControlResult c{"flipped-annihilator", 0.0, control_threshold, false};
        c.residual = max_residual_over(sut, pot, events, cfg.fd);
        c.pass = c.residual >= c.threshold;
        controls.push_back(c);
    }
    if (cfg.family == SolutionFamily::WeylTransverse) {
        const PotentialField none = [](const Event&) { return FourPotential{}; };
        ControlResult c{"zero-base-potential", 0.0, control_threshold, false};
        c.residual = max_residual_over(sut, none, events, cfg.fd);
        c.pass = c.residual >= c.threshold;
        controls.push_back(c);
    }

    bool controls_ok = true;
    for (const auto& c : controls) controls_ok = controls_ok && c.pass;

    VerificationOutcome outcome;
    outcome.max_residual = sweep.max_norm;
    outcome.mean_residual = sweep.mean_norm;
    outcome.pass = sweep.pass && annihilator_ok && conv_ok && fields.pass && controls_ok;

    ordered_json report;
    report["suite"] = std::string("verify-") + family_name(cfg.family);
    report["grid"] = {{"points_per_axis", grid.points_per_axis},
                      {"half_width", grid.half_width},
                      {"center", {grid.center.t, grid.center.x, grid.center.y,
                                  grid.center.z}}};
    report["fd"] = {{"order", cfg.fd.order}, {"step", cfg.fd.step}};
    report["max_residual"] = sweep.max_norm;
    report["mean_residual"] = sweep.mean_norm;
    if (conv.order.has_value()) {
        report["convergence_order"] = *conv.order;
    } else {
        report["convergence_order"] = nullptr;  // pass-by-floor
    }
    report["pass"] = outcome.pass;
    ordered_json ctrl = ordered_json::array();
    for (const auto& c : controls) {
        ctrl.push_back({{"name", c.name},
                        {"residual", c.residual},
                        {"threshold", c.threshold},
                        {"pass", c.pass}});
    }
    report["negative_controls"] = ctrl;
    outcome.report_json = report.dump(2) + "\n";
    return outcome;
}

} // namespace weyllab

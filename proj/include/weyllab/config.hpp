#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "weyllab/em_gauge.hpp"
#include "weyllab/profiles.hpp"
#include "weyllab/solutions.hpp"
#include "weyllab/verifier.hpp"

namespace weyllab {

enum class SolutionFamily { Dirac, WeylDirectional, WeylTransverse };

/// Everything a run needs, validated at parse time. Flat `[section]` +
/// `key = value` text with `#` comments; unknown or inapplicable keys are
/// rejected with file:line diagnostics.
struct RunConfig {
    // [solution]
    SolutionFamily family = SolutionFamily::Dirac;
    Species species = Species::Particle;
    Helicity helicity = Helicity::Positive;
    AxisSense sense = AxisSense::PlusZ;
    double theta = 0.0;
    double phi = 0.0;
    Profile1D f = Profile1D::constant(1.0);
    Profile1D g = Profile1D::constant(0.0);  // Dirac only
    Profile1D h = Profile1D::linear_phase(1.0);
    Profile2D p = Profile2D::super_gaussian({1.0, 1.0, 1.0, 1, 1, 0.0, 0.0});
    double r1 = 1.0;  // reciprocal constant for the inverted-profile column

    // [potential]
    double charge = 1.0;
    GaugeFunction gauge = GaugeFunction::zero();

    // [verify]
    FDSpec fd{4, 0.01};
    double mass = 0.0;
    GridSpec grid{{}, 1.0, 6};
    int gauge_samples = 20;
    std::uint64_t seed = 20240601;
    double residual_threshold = 1e-6;
    double field_threshold = 1e-7;

    // [output]
    std::string out_dir = "out";
    double waveform_min = -5.0;
    double waveform_max = 5.0;
    int waveform_rows = 1001;
    int map_points = 41;
    double map_half_width = 2.0;
    double slice_t = 0.0;
    double slice_z = 0.0;

    Direction direction() const;
    DiracSolution dirac_solution() const;
    WeylDirectionalSolution weyl_directional_solution() const;
    WeylTransverseSolution weyl_transverse_solution() const;
    PotentialFamily potential_family() const;
    SolutionUnderTest solution_under_test() const;
    /// The configured grid moved onto the localization locus: the w = w0
    /// plane at t = 0 (envelope center along the motion, transverse profile
    /// center across it).
    GridSpec verification_grid() const;

    bool operator==(const RunConfig& other) const;
};

/// Parse and validate a configuration file. Throws ConfigError with
/// file:line context on any problem.
RunConfig parse_config(const std::string& path);

/// Same parser over an in-memory buffer; `name` appears in diagnostics.
RunConfig parse_config_text(std::string_view text, const std::string& name);

/// Canonical text form; parse_config_text(serialize(c)) == c.
std::string serialize(const RunConfig& cfg);

const char* family_name(SolutionFamily f);

} // namespace weyllab

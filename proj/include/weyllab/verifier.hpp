#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weyllab/em_gauge.hpp"
#include "weyllab/fd.hpp"
#include "weyllab/solutions.hpp"

namespace weyllab {

/// Axis-aligned spacetime box centered on the localization locus.
struct GridSpec {
    Event center{};
    double half_width = 1.0;
    int points_per_axis = 6;

    std::vector<Event> events() const;
    std::string describe() const;
};

using PotentialField = std::function<FourPotential(const Event&)>;

/// Norm of i gamma^mu d_mu Psi + b_mu gamma^mu Psi - m Psi with central FD
/// derivatives; the potential is evaluated exactly at the event.
double dirac_residual(const DiracSolution& sol, const PotentialField& pot, double mass,
                      const Event& e, const FDSpec& fd);

/// Positive helicity: norm of i sigma^mu d_mu psi + b_mu sigma^mu psi.
/// Negative helicity: the same expression minus 2i sigma^0 d_0 psi and
/// minus 2 b_0 sigma^0 psi, taken literally.
double weyl_residual(const WeylDirectionalSolution& sol, const PotentialField& pot, const Event& e,
                     const FDSpec& fd);
double weyl_residual(const WeylTransverseSolution& sol, const PotentialField& pot, const Event& e,
                     const FDSpec& fd);

/// Purely algebraic annihilation check, no differentiation:
/// four components: ||slash4(v) psi||.
double annihilator_residual(const Spinor4& psi, const AnnihilatorVector& v);
/// two components, helicity-adjusted contraction: v0 sigma^0 + v_k sigma^k
/// for positive helicity, -v0 sigma^0 + v_k sigma^k for negative.
double annihilator_residual(const Spinor2& psi, const AnnihilatorVector& v, Helicity hel);

struct ResidualReport {
    double max_norm = 0.0;
    double mean_norm = 0.0;
    std::string grid;
    FDSpec fd;
    std::optional<double> convergence_order;
    bool floor_dominated = false;
    bool pass = false;
    double threshold = 0.0;
    double baseline_max = 0.0;  // s == 0 sweep member, for comparison
};

/// Residuals below this are rounding noise; no convergence order can be
/// estimated from them.
constexpr double kResidualFloor = 1e-13;

struct ConvergenceEstimate {
    std::optional<double> order;      // least-squares slope of log r vs log h
    bool floor_dominated = false;
    std::vector<double> residuals;    // one per step, same order as input
};

/// Requires >= 3 geometrically spaced steps. Floor-dominated when any
/// residual sits below kResidualFloor (reported as pass-by-floor upstream).
ConvergenceEstimate convergence_order(const std::function<double(double)>& residual_for_step,
                                      std::span<const double> steps);

/// Type-erased handle: the residual of the correct equation for one solution.
struct SolutionUnderTest {
    std::function<double(const PotentialField&, const Event&, const FDSpec&)> residual;
    std::function<double(const Event&)> amplitude;  // spinor norm at an event
    std::function<double(const Event&, const AnnihilatorVector&)> annihilator_residual_at;

    static SolutionUnderTest dirac(DiracSolution sol, double mass = 0.0);
    static SolutionUnderTest weyl(WeylDirectionalSolution sol);
    static SolutionUnderTest weyl(WeylTransverseSolution sol);
};

/// Max/mean residual of the solution over grid x gauge samples, with the
/// s == 0 baseline always included. Pass iff max <= threshold. Grid points
/// are evaluated independently and may be spread over WEYLLAB_THREADS
/// workers; aggregation is index-ordered and therefore schedule-independent.
ResidualReport degeneracy_sweep(const SolutionUnderTest& sol, const PotentialFamily& family,
                                std::span<const GaugeFunction> gauge_samples,
                                const GridSpec& grid, const FDSpec& fd, double threshold);

/// Max componentwise |closed_form_fields - fields_from_potential| over the
/// grid for each gauge sample. Pass iff max <= threshold.
ResidualReport field_crosscheck(const PotentialFamily& family,
                                std::span<const GaugeFunction> gauge_samples, double q,
                                const GridSpec& grid, const FDSpec& fd, double threshold);

/// Deterministic mixed polynomial/sinusoid gauge samples.
std::vector<GaugeFunction> sample_gauge_functions(int count, std::uint64_t seed);

/// Worker count from WEYLLAB_THREADS (>= 1); defaults to 1.
int thread_budget();

} // namespace weyllab

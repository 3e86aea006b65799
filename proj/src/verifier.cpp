#include "weyllab/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "weyllab/errors.hpp"

namespace weyllab {

namespace {

constexpr double kPi = 3.14159265358979323846;

template <typename Solution>
auto fd_partial(const Solution& sol, const Event& e, int axis, const FDSpec& fd) {
    return central_derivative([&](double c) { return sol.eval(e.shifted(axis, c - e.coord(axis))); },
                              e.coord(axis), fd);
}

/// Runs fn(i) for i in [0, n) over `workers` threads; results land in a
/// preallocated buffer so the reduction order never depends on the schedule.
void parallel_for_index(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::size_t t = 0; t < w; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < n; i += w) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

struct Aggregate {
    double max = 0.0;
    double mean = 0.0;
};

Aggregate reduce(const std::vector<double>& values) {
    Aggregate a;
    double sum = 0.0;
    for (double v : values) {
        a.max = std::max(a.max, v);
        sum += v;
    }
    a.mean = values.empty() ? 0.0 : sum / static_cast<double>(values.size());
    return a;
}

} // namespace

std::vector<Event> GridSpec::events() const {
    if (points_per_axis < 1) throw std::invalid_argument("GridSpec: points_per_axis must be >= 1");
    std::vector<double> axis(static_cast<size_t>(points_per_axis));
    for (int i = 0; i < points_per_axis; ++i) {
        axis[static_cast<size_t>(i)] =
            points_per_axis == 1
                ? 0.0
                : -half_width + 2.0 * half_width * i / static_cast<double>(points_per_axis - 1);
    }
    std::vector<Event> out;
    out.reserve(axis.size() * axis.size() * axis.size() * axis.size());
    for (double t : axis)
        for (double x : axis)
            for (double y : axis)
                for (double z : axis)
                    out.push_back({center.t + t, center.x + x, center.y + y, center.z + z});
    return out;
}

std::string GridSpec::describe() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d^4 box, half-width %g, center (%g,%g,%g,%g)",
                  points_per_axis, half_width, center.t, center.x, center.y, center.z);
    return buf;
}

double dirac_residual(const DiracSolution& sol, const PotentialField& pot, double mass,
                      const Event& e, const FDSpec& fd) {
    fd.validate();
    const Spinor4 psi = sol.eval(e);
    Spinor4 r = slash4(pot(e).as_array()) * psi - Complex{mass, 0.0} * psi;
    for (int mu = 0; mu < 4; ++mu) {
        r = r + Complex{0.0, 1.0} * (gamma(mu) * fd_partial(sol, e, mu, fd));
    }
    return norm(r);
}

namespace {

template <typename Solution>
double weyl_residual_impl(const Solution& sol, const PotentialField& pot, const Event& e,
                          const FDSpec& fd) {
    fd.validate();
    const Spinor2 psi = sol.eval(e);
    const FourPotential b = pot(e);
    Spinor2 r = slash2(b.as_array()) * psi;
    const Spinor2 dt = fd_partial(sol, e, 0, fd);
    for (int mu = 0; mu < 4; ++mu) {
        const Spinor2 d = mu == 0 ? dt : fd_partial(sol, e, mu, fd);
        r = r + Complex{0.0, 1.0} * (pauli(mu) * d);
    }
    if (sol.helicity == Helicity::Negative) {
        // the negative-helicity equation subtracts 2i sigma^0 d_0 and 2 b_0 sigma^0
        r = r - Complex{0.0, 2.0} * dt - Complex{2.0 * b.a0, 0.0} * psi;
    }
    return norm(r);
}

} // namespace

double weyl_residual(const WeylDirectionalSolution& sol, const PotentialField& pot, const Event& e,
                     const FDSpec& fd) {
    return weyl_residual_impl(sol, pot, e, fd);
}

double weyl_residual(const WeylTransverseSolution& sol, const PotentialField& pot, const Event& e,
                     const FDSpec& fd) {
    return weyl_residual_impl(sol, pot, e, fd);
}

double annihilator_residual(const Spinor4& psi, const AnnihilatorVector& v) {
    return norm(slash4(v.v) * psi);
}

double annihilator_residual(const Spinor2& psi, const AnnihilatorVector& v, Helicity hel) {
    std::array<double, 4> adjusted = v.v;
    if (hel == Helicity::Negative) adjusted[0] = -adjusted[0];
    return norm(slash2(adjusted) * psi);
}

ConvergenceEstimate convergence_order(const std::function<double(double)>& residual_for_step,
                                      std::span<const double> steps) {
    if (steps.size() < 3) {
        throw std::invalid_argument("convergence_order: at least 3 steps required");
    }
    ConvergenceEstimate est;
    est.residuals.reserve(steps.size());
    for (double h : steps) est.residuals.push_back(residual_for_step(h));

    if (std::any_of(est.residuals.begin(), est.residuals.end(),
                    [](double r) { return r < kResidualFloor; })) {
        est.floor_dominated = true;
        return est;
    }
    // least-squares slope of log r against log h
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(steps.size());
    for (size_t i = 0; i < steps.size(); ++i) {
        const double lx = std::log(steps[i]);
        const double ly = std::log(est.residuals[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    est.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return est;
}

SolutionUnderTest SolutionUnderTest::dirac(DiracSolution sol, double mass) {
    SolutionUnderTest s;
    s.residual = [sol, mass](const PotentialField& pot, const Event& e, const FDSpec& fd) {
        return dirac_residual(sol, pot, mass, e, fd);
    };
    s.amplitude = [sol](const Event& e) { return norm(sol.eval(e)); };
    s.annihilator_residual_at = [sol](const Event& e, const AnnihilatorVector& v) {
        return annihilator_residual(sol.eval(e), v);
    };
    return s;
}

SolutionUnderTest SolutionUnderTest::weyl(WeylDirectionalSolution sol) {
    SolutionUnderTest s;
    s.residual = [sol](const PotentialField& pot, const Event& e, const FDSpec& fd) {
        return weyl_residual(sol, pot, e, fd);
    };
    s.amplitude = [sol](const Event& e) { return norm(sol.eval(e)); };
    const Helicity hel = sol.helicity;
    s.annihilator_residual_at = [sol, hel](const Event& e, const AnnihilatorVector& v) {
        return annihilator_residual(sol.eval(e), v, hel);
    };
    return s;
}

SolutionUnderTest SolutionUnderTest::weyl(WeylTransverseSolution sol) {
    SolutionUnderTest s;
    s.residual = [sol](const PotentialField& pot, const Event& e, const FDSpec& fd) {
        return weyl_residual(sol, pot, e, fd);
    };
    s.amplitude = [sol](const Event& e) { return norm(sol.eval(e)); };
    const Helicity hel = sol.helicity;
    s.annihilator_residual_at = [sol, hel](const Event& e, const AnnihilatorVector& v) {
        return annihilator_residual(sol.eval(e), v, hel);
    };
    return s;
}

ResidualReport degeneracy_sweep(const SolutionUnderTest& sol, const PotentialFamily& family,
                                std::span<const GaugeFunction> gauge_samples,
                                const GridSpec& grid, const FDSpec& fd, double threshold) {
    if (gauge_samples.empty()) {
        throw std::invalid_argument("degeneracy_sweep: at least one gauge sample required");
    }
    const std::vector<Event> events = grid.events();

    // s == 0 baseline first, then the samples; flat (sample, event) index space
    std::vector<PotentialField> fields;
    fields.push_back(family.field(GaugeFunction::zero()));
    for (const auto& g : gauge_samples) fields.push_back(family.field(g));

    const std::size_t per = events.size();
    std::vector<double> residuals(fields.size() * per, 0.0);
    parallel_for_index(residuals.size(), thread_budget(), [&](std::size_t i) {
        const std::size_t fi = i / per;
        const std::size_t ei = i % per;
        residuals[i] = sol.residual(fields[fi], events[ei], fd);
    });

    ResidualReport rep;
    rep.fd = fd;
    rep.grid = grid.describe();
    rep.threshold = threshold;
    rep.baseline_max = *std::max_element(residuals.begin(),
                                         residuals.begin() + static_cast<std::ptrdiff_t>(per));
    const Aggregate agg = reduce(residuals);
    rep.max_norm = agg.max;
    rep.mean_norm = agg.mean;
    rep.pass = rep.max_norm <= threshold;
    return rep;
}

ResidualReport field_crosscheck(const PotentialFamily& family,
                                std::span<const GaugeFunction> gauge_samples, double q,
                                const GridSpec& grid, const FDSpec& fd, double threshold) {
    if (q == 0.0) throw ZeroCharge("field_crosscheck: charge must be nonzero");
    const std::vector<Event> events = grid.events();

    std::vector<const GaugeFunction*> gauges;
    for (const auto& g : gauge_samples) gauges.push_back(&g);
    static const GaugeFunction kZero = GaugeFunction::zero();
    if (gauges.empty()) gauges.push_back(&kZero);

    const std::size_t per = events.size();
    std::vector<double> diffs(gauges.size() * per, 0.0);
    parallel_for_index(diffs.size(), thread_budget(), [&](std::size_t i) {
        const GaugeFunction& g = *gauges[i / per];
        const Event& e = events[i % per];
        const EMField a = closed_form_fields(family, g, q, e);
        const EMField b = fields_from_potential(family.field(g), q, e, fd);
        double d = 0.0;
        for (int k = 0; k < 3; ++k) {
            d = std::max(d, std::abs(a.electric[static_cast<size_t>(k)] -
                                     b.electric[static_cast<size_t>(k)]));
            d = std::max(d, std::abs(a.magnetic[static_cast<size_t>(k)] -
                                     b.magnetic[static_cast<size_t>(k)]));
        }
        diffs[i] = d;
    });

    ResidualReport rep;
    rep.fd = fd;
    rep.grid = grid.describe();
    rep.threshold = threshold;
    const Aggregate agg = reduce(diffs);
    rep.max_norm = agg.max;
    rep.mean_norm = agg.mean;
    rep.pass = rep.max_norm <= threshold;
    return rep;
}

std::vector<GaugeFunction> sample_gauge_functions(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_real_distribution<double> wav(-1.2, 1.2);
    std::uniform_real_distribution<double> freq(0.3, 1.5);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> expo(0, 3);

    std::vector<GaugeFunction> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        if (i % 2 == 0) {
            std::vector<GaugeFunction::Monomial> terms;
            for (int t = 0; t < 3; ++t) {
                GaugeFunction::Monomial m;
                m.coeff = coeff(rng);
                // draw exponents until the total degree fits
                do {
                    m.pt = expo(rng);
                    m.px = expo(rng);
                    m.py = expo(rng);
                    m.pz = expo(rng);
                } while (m.pt + m.px + m.py + m.pz > 3);
                terms.push_back(m);
            }
            out.push_back(GaugeFunction::polynomial(std::move(terms)));
        } else {
            out.push_back(GaugeFunction::sinusoid(0.5 + 0.5 * (coeff(rng) + 1.0),
                                                  {wav(rng), wav(rng), wav(rng)}, freq(rng),
                                                  ph(rng)));
        }
    }
    return out;
}

int thread_budget() {
    const char* env = std::getenv("WEYLLAB_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    const long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    return static_cast<int>(std::min<long>(v, 64));
}

} // namespace weyllab

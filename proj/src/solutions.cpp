#include "weyllab/solutions.hpp"

#include <cmath>

namespace weyllab {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct HalfAngle {
    double c, s;   // cos(theta/2), sin(theta/2)
    Complex eip;   // exp(i phi)
};

HalfAngle half_angle(const Direction& dir) {
    return {std::cos(dir.theta / 2.0), std::sin(dir.theta / 2.0),
            {std::cos(dir.phi), std::sin(dir.phi)}};
}

} // namespace

Spinor4 DiracSolution::eval(const Event& e) const {
    const double w = w_coordinate(dir, e);
    const double fv = f.eval(w).value;
    const double gv = g.eval(w).value;
    const auto [c, s, eip] = half_angle(dir);
    const double hv = h.eval(w).value;
    const Complex phase{std::cos(hv), std::sin(hv)};

    Spinor4 out;
    if (species == Species::Particle) {
        out[0] = fv * c - gv * s;
        out[1] = eip * (fv * s + gv * c);
        out[2] = fv * c + gv * s;
        out[3] = eip * (fv * s - gv * c);
    } else {
        out[0] = fv * s + gv * c;
        out[1] = eip * (-fv * c + gv * s);
        out[2] = -fv * s + gv * c;
        out[3] = eip * (fv * c + gv * s);
    }
    for (auto& comp : out.c) comp *= phase;
    return out;
}

Spinor2 WeylDirectionalSolution::eval(const Event& e) const {
    const double w = w_coordinate(dir, e);
    const double fv = f.eval(w).value;
    const auto [c, s, eip] = half_angle(dir);
    const double hv = h.eval(w).value;
    const Complex phase{std::cos(hv), std::sin(hv)};

    Spinor2 out;
    if (helicity == Helicity::Positive) {
        out[0] = fv * c;
        out[1] = eip * (fv * s);
    } else {
        out[0] = -fv * s;
        out[1] = eip * (fv * c);
    }
    out[0] *= phase;
    out[1] *= phase;
    return out;
}

double WeylTransverseSolution::comoving(const Event& e) const {
    return sense == AxisSense::PlusZ ? e.z - e.t : e.z + e.t;
}

Spinor2 WeylTransverseSolution::eval(const Event& e) const {
    const double zeta = comoving(e);
    const double amp = p.eval(e.x, e.y).value * f.eval(zeta).value;
    const double hv = h.eval(zeta).value;
    const Complex val = amp * Complex{std::cos(hv), std::sin(hv)};

    Spinor2 out;
    if (occupies_upper_component(helicity, sense)) {
        out[0] = val;
    } else {
        out[1] = val;
    }
    return out;
}

Direction axis_direction(AxisSense sense) {
    return sense == AxisSense::PlusZ ? Direction{0.0, 0.0} : Direction{kPi, 0.0};
}

bool occupies_upper_component(Helicity h, AxisSense sense) {
    return (h == Helicity::Positive) == (sense == AxisSense::PlusZ);
}

double local_phase_energy(const DiracSolution& sol, const Event& e) {
    return sol.h.eval(w_coordinate(sol.dir, e)).derivative;
}

double local_phase_energy(const WeylDirectionalSolution& sol, const Event& e) {
    return sol.h.eval(w_coordinate(sol.dir, e)).derivative;
}

double local_phase_energy(const WeylTransverseSolution& sol, const Event& e) {
    return sol.h.eval(sol.comoving(e)).derivative;
}

} // namespace weyllab

#pragma once
#include "weyllab/algebra.hpp"
#include "weyllab/profiles.hpp"

namespace weyllab {

enum class Species { Particle, Antiparticle };
enum class Helicity { Positive, Negative };
enum class AxisSense { PlusZ, MinusZ };

/// Four-component solution family along an arbitrary direction:
/// two real envelopes f, g and a real phase h, all functions of the
/// comoving coordinate w. Massless; valid for the whole degenerate
/// potential family b_mu = s * (1, -n).
struct DiracSolution {
    Species species = Species::Particle;
    Direction dir;
    Profile1D f, g, h;

    Spinor4 eval(const Event& e) const;
    Spinor4 operator()(const Event& e) const { return eval(e); }
};

/// Two-component directional solution: helicity eigenstate along dir
/// with envelope f and phase h of w.
struct WeylDirectionalSolution {
    Helicity helicity = Helicity::Positive;
    Direction dir;
    Profile1D f, h;

    Spinor2 eval(const Event& e) const;
    Spinor2 operator()(const Event& e) const { return eval(e); }
};

/// Two-component solution moving along +z or -z with a transverse
/// profile p(x, y); f and h depend on the comoving coordinate
/// zeta = z - t (+z) or z + t (-z). The occupied spinor component is
/// fixed by (helicity, sense): upper for (+,+z) and (-,-z), lower for
/// (-,+z) and (+,-z).
struct WeylTransverseSolution {
    Helicity helicity = Helicity::Positive;
    AxisSense sense = AxisSense::PlusZ;
    Profile2D p;
    Profile1D f, h;

    double comoving(const Event& e) const;
    Spinor2 eval(const Event& e) const;
    Spinor2 operator()(const Event& e) const { return eval(e); }
};

/// Direction of motion as a Direction (theta = 0 or pi).
Direction axis_direction(AxisSense sense);

/// True when the (helicity, sense) pair occupies the upper spinor component.
bool occupies_upper_component(Helicity h, AxisSense sense);

/// dh/dw at the event's comoving coordinate: the local energy.
double local_phase_energy(const DiracSolution& sol, const Event& e);
double local_phase_energy(const WeylDirectionalSolution& sol, const Event& e);
double local_phase_energy(const WeylTransverseSolution& sol, const Event& e);

} // namespace weyllab

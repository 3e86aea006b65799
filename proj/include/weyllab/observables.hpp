#pragma once
#include "weyllab/algebra.hpp"
#include "weyllab/profiles.hpp"
#include "weyllab/solutions.hpp"

namespace weyllab {

/// Density floor guarding spin/helicity divisions at deep envelope tails.
constexpr double kDensityFloor = 1e-30;

/// Spin expectation vector in hbar = 1 units; |S| <= 1/2.
struct SpinVector {
    double x = 0.0, y = 0.0, z = 0.0;

    double magnitude() const;
};

/// psi^dagger psi.
double density(const Spinor2& psi);
double density(const Spinor4& psi);

/// Spin components from bilinears: S_k = (i/2) psi^dagger gamma-pair psi / density.
/// Evaluated on an antiparticle spinor this yields the negated closed form,
/// so particle/antiparticle spin vectors come out as exact negatives.
/// Throws DegenerateDensity when density <= floor.
SpinVector spin_vector(const Spinor4& psi, double density_floor = kDensityFloor);

/// Closed forms: S = (1/2) n (f^2 - g^2)/(f^2 + g^2) for particles and the
/// negative for antiparticles.
SpinVector spin_vector_closed_form(Species species, const Direction& dir, double f, double g);

/// Euclidean norm of spin_vector; equals (1/2) |f^2-g^2| / (f^2+g^2) for the
/// four-component solution families.
double total_spin(const Spinor4& psi, double density_floor = kDensityFloor);

/// psi^dagger (n.sigma) psi / density, in [-1, 1]; +-1 on helicity eigenstates.
double helicity_expectation(const Spinor2& psi, const Direction& dir,
                            double density_floor = kDensityFloor);

} // namespace weyllab

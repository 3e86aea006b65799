#include "weyllab/observables.hpp"

#include <cmath>

#include "weyllab/errors.hpp"

namespace weyllab {

namespace {

double checked_density(double dens, double floor) {
    if (!(dens > floor)) {
        throw DegenerateDensity("observable: spinor density at or below the floor");
    }
    return dens;
}

// (i/2) psi^dagger gamma^a gamma^b psi, real part (imaginary part is rounding).
double spin_bilinear(const Spinor4& psi, int a, int b) {
    const Complex val = bilinear(psi, gamma(a) * gamma(b));
    return 0.5 * (Complex{0.0, 1.0} * val).real();
}

} // namespace

double SpinVector::magnitude() const {
    return std::sqrt(x * x + y * y + z * z);
}

double density(const Spinor2& psi) {
    return std::norm(psi[0]) + std::norm(psi[1]);
}

double density(const Spinor4& psi) {
    return std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]) + std::norm(psi[3]);
}

SpinVector spin_vector(const Spinor4& psi, double density_floor) {
    const double dens = checked_density(density(psi), density_floor);
    return {spin_bilinear(psi, 2, 3) / dens, spin_bilinear(psi, 3, 1) / dens,
            spin_bilinear(psi, 1, 2) / dens};
}

SpinVector spin_vector_closed_form(Species species, const Direction& dir, double f, double g) {
    const double denom = f * f + g * g;
    if (!(denom > 0.0)) {
        throw DegenerateDensity("spin_vector_closed_form: f = g = 0");
    }
    double scale = 0.5 * (f * f - g * g) / denom;
    if (species == Species::Antiparticle) scale = -scale;
    const auto n = dir.unit();
    return {scale * n[0], scale * n[1], scale * n[2]};
}

double total_spin(const Spinor4& psi, double density_floor) {
    return spin_vector(psi, density_floor).magnitude();
}

double helicity_expectation(const Spinor2& psi, const Direction& dir, double density_floor) {
    const double dens = checked_density(density(psi), density_floor);
    const auto n = dir.unit();
    const Matrix2 ns = slash2({0.0, n[0], n[1], n[2]});
    return bilinear(psi, ns).real() / dens;
}

} // namespace weyllab

#pragma once
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "weyllab/algebra.hpp"
#include "weyllab/fd.hpp"
#include "weyllab/profiles.hpp"
#include "weyllab/solutions.hpp"

namespace weyllab {

/// 4-potential components (a0, a1, a2, a3) = q * A_mu, energy units.
struct FourPotential {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;

    std::array<double, 4> as_array() const { return {a0, a1, a2, a3}; }
};

FourPotential operator+(const FourPotential& a, const FourPotential& b);
FourPotential operator*(double s, const FourPotential& a);

/// The 4-vector whose slash contraction annihilates the solution pointwise:
/// (1, -n) for every family in scope.
struct AnnihilatorVector {
    std::array<double, 4> v{1.0, 0.0, 0.0, 0.0};
};

/// Electric and magnetic field triples in units of 1/q.
struct EMField {
    std::array<double, 3> electric{};
    std::array<double, 3> magnetic{};
};

enum class GaugeKind { Zero, Constant, Polynomial, Sinusoid };

/// The free real function s(r, t) of the degenerate family, restricted to a
/// closed family with exact analytic partials so the finite-difference
/// cross-check stays independent: polynomials of total degree <= 3 and
/// travelling sinusoids s0 sin(kappa.r - omega t + phase).
class GaugeFunction {
public:
    struct Monomial {
        double coeff = 0.0;
        int pt = 0, px = 0, py = 0, pz = 0;
    };
    struct Partials {
        double t = 0.0, x = 0.0, y = 0.0, z = 0.0;
    };

    static GaugeFunction zero();
    static GaugeFunction constant(double s0);
    static GaugeFunction polynomial(std::vector<Monomial> terms);
    static GaugeFunction sinusoid(double s0, const std::array<double, 3>& wavevector,
                                  double omega, double phase);

    double value(const Event& e) const;
    Partials partials(const Event& e) const;

    GaugeKind kind() const { return kind_; }
    double s0() const { return s0_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    const std::array<double, 3>& wavevector() const { return wavevector_; }
    double omega() const { return omega_; }
    double phase() const { return phase_; }

private:
    GaugeFunction() = default;

    GaugeKind kind_ = GaugeKind::Zero;
    double s0_ = 0.0;
    std::vector<Monomial> terms_;
    std::array<double, 3> wavevector_{};
    double omega_ = 0.0;
    double phase_ = 0.0;
};

/// (1, -sin th cos ph, -sin th sin ph, -cos th).
AnnihilatorVector annihilator(const Direction& dir);

/// Same vector computed from the spinor bilinears (-+ psi^dagger sigma^k psi
/// / psi^dagger psi, minus for positive helicity). Throws DegenerateDensity
/// at zero-amplitude points.
AnnihilatorVector annihilator_from_bilinears(const Spinor2& psi, Helicity hel,
                                             double density_floor = 1e-30);

/// Base 4-potential table for the transverse families:
///   (+,+z) -> (0, p_y/p, -p_x/p, 0)    (-,+z) -> (0, -p_y/p, p_x/p, 0)
///   (+,-z) -> (0, -p_y/p, p_x/p, 0)    (-,-z) -> (0, p_y/p, -p_x/p, 0)
/// Throws ProfileNonpositive when p(x, y) <= 0.
FourPotential base_potential_transverse(Helicity hel, AxisSense sense, const Profile2D& p,
                                        double x, double y);

/// b_mu = base_mu + s(e) * v_mu.
FourPotential degenerate_potential(const FourPotential& base, const AnnihilatorVector& v,
                                   const GaugeFunction& s, const Event& e);

/// Sign branch of the transverse-profile magnetic field: Minus for
/// (+ helicity, +z) and (- helicity, -z), Plus for the other two pairings.
enum class Branch { Minus, Plus };
Branch separation_branch(Helicity hel, AxisSense sense);

/// One solution family's degenerate potential set: base potential plus the
/// s * annihilator term. Directional families have zero base; transverse
/// families use the profile table above.
class PotentialFamily {
public:
    static PotentialFamily directional(const Direction& dir);
    static PotentialFamily transverse(Helicity hel, AxisSense sense, Profile2D p);

    AnnihilatorVector annihilator() const;
    FourPotential base(const Event& e) const;
    FourPotential potential(const GaugeFunction& s, const Event& e) const;
    /// Callable b_mu(e) with the gauge function baked in.
    std::function<FourPotential(const Event&)> field(GaugeFunction s) const;

    bool is_transverse() const { return transverse_; }
    const Direction& direction() const { return dir_; }
    Helicity helicity() const { return helicity_; }
    AxisSense sense() const { return sense_; }
    const Profile2D& profile() const;

private:
    PotentialFamily() = default;

    bool transverse_ = false;
    Direction dir_;
    Helicity helicity_ = Helicity::Positive;
    AxisSense sense_ = AxisSense::PlusZ;
    std::optional<Profile2D> p_;
};

/// E = -grad(b0/q) - dA/dt and B = curl A with A = -(1/q)(b1, b2, b3),
/// all partials by central differences of the assembled potential.
/// Throws ZeroCharge when q = 0.
EMField fields_from_potential(const std::function<FourPotential(const Event&)>& pot, double q,
                              const Event& e, const FDSpec& fd);

/// Exact fields of the family from analytic partials of s (and p where it
/// applies): E = -(1/q)(grad s + n s_t), B = (1/q)(grad s x n), plus the
/// branch-signed transverse term -+(1/q)(p_x^2+p_y^2-p(p_xx+p_yy))/p^2 zhat.
EMField closed_form_fields(const PotentialFamily& family, const GaugeFunction& s, double q,
                           const Event& e);

/// z-component of the magnetic field that survives at s = 0.
double separation_field(const Profile2D& p, double q, Branch branch, double x, double y);

/// Same field for the super-Gaussian profile in closed polynomial form:
/// +-(2/q)[k1 n1 (1-2n1)(x-x0)^(2(n1-1)) + k2 n2 (1-2n2)(y-y0)^(2(n2-1))],
/// + for the Minus branch.
double separation_field_supergaussian(const SuperGaussian& sg, double q, Branch branch, double x,
                                      double y);

} // namespace weyllab

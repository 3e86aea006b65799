#include "weyllab/em_gauge.hpp"

#include <cmath>
#include <stdexcept>

#include "weyllab/errors.hpp"
#include "weyllab/observables.hpp"

namespace weyllab {

namespace {

double ipow(double x, int n) {
    double out = 1.0;
    for (int i = 0; i < n; ++i) out *= x;
    return out;
}

void check_charge(double q) {
    if (q == 0.0) throw ZeroCharge("electromagnetic fields: charge must be nonzero");
}

// (p_x^2 + p_y^2 - p (p_xx + p_yy)) / p^2 = -laplacian of ln p.
double profile_log_term(const Profile2D& p, double x, double y) {
    const auto s = p.eval(x, y);
    if (!(s.value > 0.0)) {
        throw ProfileNonpositive("transverse profile must stay positive");
    }
    const double ux = s.dx / s.value;
    const double uy = s.dy / s.value;
    return ux * ux + uy * uy - (s.dxx + s.dyy) / s.value;
}

} // namespace

FourPotential operator+(const FourPotential& a, const FourPotential& b) {
    return {a.a0 + b.a0, a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
}

FourPotential operator*(double s, const FourPotential& a) {
    return {s * a.a0, s * a.a1, s * a.a2, s * a.a3};
}

GaugeFunction GaugeFunction::zero() {
    return GaugeFunction{};
}

GaugeFunction GaugeFunction::constant(double s0) {
    GaugeFunction g;
    g.kind_ = GaugeKind::Constant;
    g.s0_ = s0;
    return g;
}

GaugeFunction GaugeFunction::polynomial(std::vector<Monomial> terms) {
    for (const auto& m : terms) {
        if (m.pt < 0 || m.px < 0 || m.py < 0 || m.pz < 0) {
            throw std::invalid_argument("gauge polynomial: exponents must be nonnegative");
        }
        if (m.pt + m.px + m.py + m.pz > 3) {
            throw std::invalid_argument("gauge polynomial: total degree must be <= 3");
        }
        if (!std::isfinite(m.coeff)) {
            throw std::invalid_argument("gauge polynomial: coefficients must be finite");
        }
    }
    GaugeFunction g;
    g.kind_ = GaugeKind::Polynomial;
    g.terms_ = std::move(terms);
    return g;
}

GaugeFunction GaugeFunction::sinusoid(double s0, const std::array<double, 3>& wavevector,
                                      double omega, double phase) {
    GaugeFunction g;
    g.kind_ = GaugeKind::Sinusoid;
    g.s0_ = s0;
    g.wavevector_ = wavevector;
    g.omega_ = omega;
    g.phase_ = phase;
    return g;
}

double GaugeFunction::value(const Event& e) const {
    switch (kind_) {
    case GaugeKind::Zero:
        return 0.0;
    case GaugeKind::Constant:
        return s0_;
    case GaugeKind::Polynomial: {
        double acc = 0.0;
        for (const auto& m : terms_) {
            acc += m.coeff * ipow(e.t, m.pt) * ipow(e.x, m.px) * ipow(e.y, m.py) *
                   ipow(e.z, m.pz);
        }
        return acc;
    }
    case GaugeKind::Sinusoid: {
        const double arg = wavevector_[0] * e.x + wavevector_[1] * e.y + wavevector_[2] * e.z -
                           omega_ * e.t + phase_;
        return s0_ * std::sin(arg);
    }
    }
    return 0.0;
}

GaugeFunction::Partials GaugeFunction::partials(const Event& e) const {
    Partials out;
    switch (kind_) {
    case GaugeKind::Zero:
    case GaugeKind::Constant:
        break;
    case GaugeKind::Polynomial:
        for (const auto& m : terms_) {
            const double pt = ipow(e.t, m.pt), px = ipow(e.x, m.px);
            const double py = ipow(e.y, m.py), pz = ipow(e.z, m.pz);
            if (m.pt > 0) out.t += m.coeff * m.pt * ipow(e.t, m.pt - 1) * px * py * pz;
            if (m.px > 0) out.x += m.coeff * m.px * pt * ipow(e.x, m.px - 1) * py * pz;
            if (m.py > 0) out.y += m.coeff * m.py * pt * px * ipow(e.y, m.py - 1) * pz;
            if (m.pz > 0) out.z += m.coeff * m.pz * pt * px * py * ipow(e.z, m.pz - 1);
        }
        break;
    case GaugeKind::Sinusoid: {
        const double arg = wavevector_[0] * e.x + wavevector_[1] * e.y + wavevector_[2] * e.z -
                           omega_ * e.t + phase_;
        const double c = s0_ * std::cos(arg);
        out.t = -omega_ * c;
        out.x = wavevector_[0] * c;
        out.y = wavevector_[1] * c;
        out.z = wavevector_[2] * c;
        break;
    }
    }
    return out;
}

AnnihilatorVector annihilator(const Direction& dir) {
    const auto n = dir.unit();
    return {{1.0, -n[0], -n[1], -n[2]}};
}

AnnihilatorVector annihilator_from_bilinears(const Spinor2& psi, Helicity hel,
                                             double density_floor) {
    const double dens = density(psi);
    if (!(dens > density_floor)) {
        throw DegenerateDensity("annihilator_from_bilinears: spinor density at the floor");
    }
    const double sign = hel == Helicity::Positive ? -1.0 : 1.0;
    AnnihilatorVector out;
    out.v[0] = 1.0;
    for (int k = 1; k <= 3; ++k) {
        out.v[static_cast<size_t>(k)] = sign * bilinear(psi, pauli(k)).real() / dens;
    }
    return out;
}

FourPotential base_potential_transverse(Helicity hel, AxisSense sense, const Profile2D& p,
                                        double x, double y) {
    const auto s = p.eval(x, y);
    if (!(s.value > 0.0)) {
        throw ProfileNonpositive("base_potential_transverse: profile must be positive");
    }
    const double px_over_p = s.dx / s.value;
    const double py_over_p = s.dy / s.value;
    // (+,+z) and (-,-z) take (0, p_y/p, -p_x/p, 0); the other two pairings negate it.
    const double sgn = occupies_upper_component(hel, sense) ? 1.0 : -1.0;
    return {0.0, sgn * py_over_p, -sgn * px_over_p, 0.0};
}

FourPotential degenerate_potential(const FourPotential& base, const AnnihilatorVector& v,
                                   const GaugeFunction& s, const Event& e) {
    const double sv = s.value(e);
    return base + FourPotential{sv * v.v[0], sv * v.v[1], sv * v.v[2], sv * v.v[3]};
}

Branch separation_branch(Helicity hel, AxisSense sense) {
    return occupies_upper_component(hel, sense) ? Branch::Minus : Branch::Plus;
}

PotentialFamily PotentialFamily::directional(const Direction& dir) {
    PotentialFamily f;
    f.dir_ = dir;
    return f;
}

PotentialFamily PotentialFamily::transverse(Helicity hel, AxisSense sense, Profile2D p) {
    PotentialFamily f;
    f.transverse_ = true;
    f.helicity_ = hel;
    f.sense_ = sense;
    f.dir_ = axis_direction(sense);
    f.p_ = std::move(p);
    return f;
}

AnnihilatorVector PotentialFamily::annihilator() const {
    return weyllab::annihilator(dir_);
}

FourPotential PotentialFamily::base(const Event& e) const {
    if (!transverse_) return {};
    return base_potential_transverse(helicity_, sense_, *p_, e.x, e.y);
}

FourPotential PotentialFamily::potential(const GaugeFunction& s, const Event& e) const {
    return degenerate_potential(base(e), annihilator(), s, e);
}

std::function<FourPotential(const Event&)> PotentialFamily::field(GaugeFunction s) const {
    return [family = *this, gauge = std::move(s)](const Event& e) {
        return family.potential(gauge, e);
    };
}

const Profile2D& PotentialFamily::profile() const {
    if (!p_) throw std::logic_error("PotentialFamily: directional family has no profile");
    return *p_;
}

EMField fields_from_potential(const std::function<FourPotential(const Event&)>& pot, double q,
                              const Event& e, const FDSpec& fd) {
    check_charge(q);
    fd.validate();

    // partial of b_mu with respect to coordinate `axis`, all four components
    const auto dpot = [&](int axis) {
        return central_derivative([&](double c) { return pot(e.shifted(axis, c - e.coord(axis))); },
                                  e.coord(axis), fd);
    };

    const FourPotential dt = dpot(0), dx = dpot(1), dy = dpot(2), dz = dpot(3);
    const double invq = 1.0 / q;

    // U = b0/q, A = -(1/q)(b1, b2, b3)
    EMField f;
    f.electric = {-invq * dx.a0 + invq * dt.a1, -invq * dy.a0 + invq * dt.a2,
                  -invq * dz.a0 + invq * dt.a3};
    // curl A with A_i = -b_i/q
    f.magnetic = {-invq * (dy.a3 - dz.a2), -invq * (dz.a1 - dx.a3), -invq * (dx.a2 - dy.a1)};
    return f;
}

EMField closed_form_fields(const PotentialFamily& family, const GaugeFunction& s, double q,
                           const Event& e) {
    check_charge(q);
    const auto n = family.direction().unit();
    const auto ds = s.partials(e);
    const double invq = 1.0 / q;

    EMField f;
    f.electric = {-invq * (ds.t * n[0] + ds.x), -invq * (ds.t * n[1] + ds.y),
                  -invq * (ds.t * n[2] + ds.z)};
    f.magnetic = {invq * (ds.y * n[2] - ds.z * n[1]), invq * (ds.z * n[0] - ds.x * n[2]),
                  invq * (ds.x * n[1] - ds.y * n[0])};
    if (family.is_transverse()) {
        f.magnetic[2] +=
            separation_field(family.profile(), q,
                             separation_branch(family.helicity(), family.sense()), e.x, e.y);
    }
    return f;
}

double separation_field(const Profile2D& p, double q, Branch branch, double x, double y) {
    check_charge(q);
    const double term = profile_log_term(p, x, y) / q;
    return branch == Branch::Minus ? -term : term;
}

double separation_field_supergaussian(const SuperGaussian& sg, double q, Branch branch, double x,
                                      double y) {
    check_charge(q);
    if (!(sg.kx >= 0.0) || !(sg.ky >= 0.0) || sg.nx < 1 || sg.ny < 1) {
        throw std::invalid_argument("separation_field_supergaussian: invalid profile constants");
    }
    const double X = x - sg.x0;
    const double Y = y - sg.y0;
    const double poly = sg.kx * sg.nx * (1 - 2 * sg.nx) * ipow(X, 2 * (sg.nx - 1)) +
                        sg.ky * sg.ny * (1 - 2 * sg.ny) * ipow(Y, 2 * (sg.ny - 1));
    const double val = 2.0 / q * poly;
    return branch == Branch::Minus ? val : -val;
}

} // namespace weyllab

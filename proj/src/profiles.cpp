#include "weyllab/profiles.hpp"

#include <cmath>
#include <stdexcept>

#include "weyllab/errors.hpp"

namespace weyllab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double ipow(double x, int n) {
    double out = 1.0;
    for (int i = 0; i < n; ++i) out *= x;
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

double Event::coord(int axis) const {
    switch (axis) {
    case 0: return t;
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: throw std::out_of_range("Event::coord: axis must be in 0..3");
    }
}

Event Event::shifted(int axis, double delta) const {
    Event out = *this;
    switch (axis) {
    case 0: out.t += delta; break;
    case 1: out.x += delta; break;
    case 2: out.y += delta; break;
    case 3: out.z += delta; break;
    default: throw std::out_of_range("Event::shifted: axis must be in 0..3");
    }
    return out;
}

Direction::Direction(double th, double ph) : theta(th), phi(ph) {
    require(std::isfinite(th) && std::isfinite(ph), "Direction: angles must be finite");
    require(th >= 0.0 && th <= kPi, "Direction: theta must be in [0, pi]");
    require(ph >= 0.0 && ph < 2.0 * kPi, "Direction: phi must be in [0, 2*pi)");
}

std::array<double, 3> Direction::unit() const {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

double w_coordinate(const Direction& dir, const Event& e) {
    const auto n = dir.unit();
    return n[0] * e.x + n[1] * e.y + n[2] * e.z - e.t;
}

Profile1D Profile1D::constant(double value) {
    require(std::isfinite(value), "constant profile: value must be finite");
    Profile1D p;
    p.kind_ = Kind1D::Constant;
    p.offset_ = value;
    return p;
}

Profile1D Profile1D::gaussian(double amplitude, double decay, double center) {
    require(std::isfinite(amplitude) && std::isfinite(center), "gaussian profile: finite parameters required");
    require(decay > 0.0, "gaussian profile: k must be positive");
    Profile1D p;
    p.kind_ = Kind1D::Gaussian;
    p.terms_ = {GaussianTerm{amplitude, decay, center}};
    return p;
}

Profile1D Profile1D::offset_gaussian(double offset, double amplitude, double decay,
                                     double center) {
    require(std::isfinite(offset), "offset gaussian profile: B must be finite");
    require(decay > 0.0, "offset gaussian profile: k must be positive");
    Profile1D p;
    p.kind_ = Kind1D::OffsetGaussian;
    p.offset_ = offset;
    p.terms_ = {GaussianTerm{amplitude, decay, center}};
    return p;
}

Profile1D Profile1D::sum_of_gaussians(std::vector<GaussianTerm> terms) {
    require(!terms.empty(), "sum of gaussians: at least one term required");
    for (const auto& t : terms) {
        require(t.decay > 0.0, "sum of gaussians: every k_i must be positive");
        require(std::isfinite(t.amplitude) && std::isfinite(t.center),
                "sum of gaussians: finite parameters required");
    }
    Profile1D p;
    p.kind_ = Kind1D::SumOfGaussians;
    p.terms_ = std::move(terms);
    return p;
}

Profile1D Profile1D::erf_chirp(double peak_energy, double lambda, double center) {
    require(peak_energy > 0.0, "erf chirp: E0 must be positive");
    require(lambda > 0.0, "erf chirp: lambda must be positive");
    require(std::isfinite(center), "erf chirp: w0 must be finite");
    Profile1D p;
    p.kind_ = Kind1D::ErfChirp;
    p.peak_energy_ = peak_energy;
    p.lambda_ = lambda;
    p.center_ = center;
    return p;
}

Profile1D Profile1D::linear_phase(double energy) {
    require(std::isfinite(energy), "linear phase: E must be finite");
    Profile1D p;
    p.kind_ = Kind1D::LinearPhase;
    p.energy_ = energy;
    return p;
}

Profile1D::Sample Profile1D::eval(double w) const {
    Sample s;
    switch (kind_) {
    case Kind1D::Constant:
        s.value = offset_;
        s.derivative = 0.0;
        break;
    case Kind1D::Gaussian:
    case Kind1D::OffsetGaussian:
    case Kind1D::SumOfGaussians: {
        s.value = offset_;
        for (const auto& t : terms_) {
            const double u = w - t.center;
            const double g = t.amplitude * std::exp(-t.decay * u * u);
            s.value += g;
            s.derivative += -2.0 * t.decay * u * g;
        }
        break;
    }
    case Kind1D::ErfChirp: {
        const double u = w - center_;
        // h(w) = sqrt(pi/lambda) (E0/2) erf(sqrt(lambda) (w - w0));
        // dh/dw = E0 exp(-lambda (w - w0)^2), the local energy.
        s.value = std::sqrt(kPi / lambda_) * 0.5 * peak_energy_ * std::erf(std::sqrt(lambda_) * u);
        s.derivative = peak_energy_ * std::exp(-lambda_ * u * u);
        break;
    }
    case Kind1D::LinearPhase:
        s.value = energy_ * w;
        s.derivative = energy_;
        break;
    }
    return s;
}

bool Profile1D::normalizable() const {
    switch (kind_) {
    case Kind1D::Gaussian:
    case Kind1D::SumOfGaussians:
        return true;
    case Kind1D::OffsetGaussian:
        return offset_ == 0.0;
    case Kind1D::Constant:
        return offset_ == 0.0;
    case Kind1D::ErfChirp:
    case Kind1D::LinearPhase:
        return false; // phase kinds; normalizability does not apply
    }
    return false;
}

bool Profile1D::is_phase_kind() const {
    return kind_ == Kind1D::ErfChirp || kind_ == Kind1D::LinearPhase;
}

Profile2D Profile2D::super_gaussian(const SuperGaussian& sg) {
    require(sg.amplitude > 0.0, "super gaussian: A must be positive");
    require(sg.kx >= 0.0 && sg.ky >= 0.0, "super gaussian: k1, k2 must be nonnegative");
    require(sg.nx >= 1 && sg.ny >= 1, "super gaussian: n1, n2 must be positive integers");
    require(std::isfinite(sg.x0) && std::isfinite(sg.y0), "super gaussian: finite center required");
    Profile2D p;
    p.kind_ = Kind2D::SuperGaussian;
    p.sg_ = sg;
    return p;
}

Profile2D Profile2D::reciprocal(const Profile2D& base, double r1) {
    require(r1 > 0.0, "reciprocal profile: r1 must be positive");
    Profile2D p;
    p.kind_ = Kind2D::Reciprocal;
    p.r1_ = r1;
    p.base_ = std::make_shared<Profile2D>(base);
    return p;
}

const SuperGaussian& Profile2D::super_gaussian_params() const {
    if (kind_ != Kind2D::SuperGaussian) {
        throw std::logic_error("Profile2D: not a super gaussian");
    }
    return sg_;
}

const Profile2D& Profile2D::base() const {
    if (!base_) throw std::logic_error("Profile2D: no base profile");
    return *base_;
}

Profile2D::Sample Profile2D::eval(double x, double y) const {
    Sample s;
    if (kind_ == Kind2D::SuperGaussian) {
        const double X = x - sg_.x0;
        const double Y = y - sg_.y0;
        s.value = sg_.amplitude *
                  std::exp(-sg_.kx * ipow(X, 2 * sg_.nx) - sg_.ky * ipow(Y, 2 * sg_.ny));
        // log-derivatives: u = d(ln p)/dx, then p_x = u p, p_xx = (u^2 + u') p
        const double ux = -2.0 * sg_.kx * sg_.nx * ipow(X, 2 * sg_.nx - 1);
        const double uy = -2.0 * sg_.ky * sg_.ny * ipow(Y, 2 * sg_.ny - 1);
        const double uxp = -2.0 * sg_.kx * sg_.nx * (2 * sg_.nx - 1) * ipow(X, 2 * sg_.nx - 2);
        const double uyp = -2.0 * sg_.ky * sg_.ny * (2 * sg_.ny - 1) * ipow(Y, 2 * sg_.ny - 2);
        s.dx = ux * s.value;
        s.dy = uy * s.value;
        s.dxx = (ux * ux + uxp) * s.value;
        s.dyy = (uy * uy + uyp) * s.value;
        return s;
    }
    const Sample b = base_->eval(x, y);
    if (!(b.value > 0.0)) {
        throw ProfileNonpositive("reciprocal profile: base profile must stay positive");
    }
    const double inv = 1.0 / b.value;
    s.value = r1_ * inv;
    s.dx = -r1_ * b.dx * inv * inv;
    s.dy = -r1_ * b.dy * inv * inv;
    s.dxx = r1_ * (2.0 * b.dx * b.dx - b.value * b.dxx) * inv * inv * inv;
    s.dyy = r1_ * (2.0 * b.dy * b.dy - b.value * b.dyy) * inv * inv * inv;
    return s;
}

double norm_integral(const Profile1D& pr, double lo, double hi, int nodes) {
    require(lo < hi, "norm_integral: lo must be below hi");
    require(nodes >= 16, "norm_integral: at least 16 nodes required");

    const auto f2 = [&pr](double w) {
        const double v = pr.eval(w).value;
        return v * v;
    };
    const auto simpson = [&](long n) {
        const double h = (hi - lo) / static_cast<double>(n);
        double acc = f2(lo) + f2(hi);
        for (long i = 1; i < n; ++i) {
            acc += (i % 2 == 1 ? 4.0 : 2.0) * f2(lo + h * static_cast<double>(i));
        }
        return acc * h / 3.0;
    };

    long n = nodes;
    if (n % 2 == 1) ++n;
    constexpr long kCap = 1L << 23;
    constexpr double kRelTol = 1e-8;
    double prev = simpson(n);
    while (n < kCap) {
        n *= 2;
        const double cur = simpson(n);
        const double scale = std::max(std::abs(cur), 1e-300);
        if (std::abs(cur - prev) <= kRelTol * scale) {
            return cur;
        }
        prev = cur;
    }
    throw NonConvergent("norm_integral: quadrature did not converge within the node cap");
}

} // namespace weyllab

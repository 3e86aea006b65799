#pragma once
#include <array>
#include <memory>
#include <vector>

namespace weyllab {

/// Spacetime event in natural units (c = hbar = 1).
struct Event {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    /// Coordinate by index 0..3 = t,x,y,z.
    double coord(int axis) const;
    /// Copy with one coordinate displaced (FD stencil sampling).
    Event shifted(int axis, double delta) const;
};

/// Propagation direction given by polar/azimuthal angles.
/// Valid range: theta in [0, pi], phi in [0, 2*pi).
struct Direction {
    double theta = 0.0;
    double phi = 0.0;

    Direction() = default;
    Direction(double th, double ph);

    /// Unit vector (sin th cos ph, sin th sin ph, cos th).
    std::array<double, 3> unit() const;
};

/// Comoving coordinate w = n.r - t.
double w_coordinate(const Direction& dir, const Event& e);

enum class Kind1D { Constant, Gaussian, OffsetGaussian, SumOfGaussians, ErfChirp, LinearPhase };

/// One Gaussian term amplitude * exp(-decay * (w - center)^2).
struct GaussianTerm {
    double amplitude = 1.0;
    double decay = 1.0;
    double center = 0.0;
};

/// 1-D shape function (envelope f, g or phase h) with its exact first
/// derivative. Envelope kinds are the constant/Gaussian family; phase kinds
/// are linear (plane wave) or the erf chirp whose derivative is the local
/// energy E0 * exp(-lambda * (w - w0)^2).
class Profile1D {
public:
    struct Sample {
        double value = 0.0;
        double derivative = 0.0;
    };

    static Profile1D constant(double value);
    static Profile1D gaussian(double amplitude, double decay, double center);
    static Profile1D offset_gaussian(double offset, double amplitude, double decay, double center);
    static Profile1D sum_of_gaussians(std::vector<GaussianTerm> terms);
    static Profile1D erf_chirp(double peak_energy, double lambda, double center);
    static Profile1D linear_phase(double energy);

    Sample eval(double w) const;

    Kind1D kind() const { return kind_; }
    /// Square integrable over the whole real line?
    bool normalizable() const;
    bool is_phase_kind() const;

    double offset() const { return offset_; }
    const std::vector<GaussianTerm>& terms() const { return terms_; }
    double peak_energy() const { return peak_energy_; }
    double lambda() const { return lambda_; }
    double center() const { return center_; }
    double energy() const { return energy_; }

private:
    Profile1D() = default;

    Kind1D kind_ = Kind1D::Constant;
    double offset_ = 0.0;              // constant value / offset B
    std::vector<GaussianTerm> terms_;  // Gaussian kinds
    double peak_energy_ = 0.0;         // erf chirp E0
    double lambda_ = 1.0;              // erf chirp lambda
    double center_ = 0.0;              // erf chirp w0
    double energy_ = 0.0;              // linear phase E
};

enum class Kind2D { SuperGaussian, Reciprocal };

/// amplitude * exp(-kx*(x-x0)^(2*nx) - ky*(y-y0)^(2*ny)), nx, ny >= 1.
struct SuperGaussian {
    double amplitude = 1.0;
    double kx = 1.0, ky = 1.0;
    int nx = 1, ny = 1;
    double x0 = 0.0, y0 = 0.0;
};

/// Transverse 2-D profile p(x,y) > 0 with exact partials up to second order.
/// The reciprocal kind is r1 / base, the inverted distribution that flips the
/// sign of the separation field.
class Profile2D {
public:
    struct Sample {
        double value = 0.0;
        double dx = 0.0, dy = 0.0;
        double dxx = 0.0, dyy = 0.0;
    };

    static Profile2D super_gaussian(const SuperGaussian& sg);
    static Profile2D reciprocal(const Profile2D& base, double r1);

    Sample eval(double x, double y) const;

    Kind2D kind() const { return kind_; }
    const SuperGaussian& super_gaussian_params() const;
    double r1() const { return r1_; }
    const Profile2D& base() const;

private:
    Profile2D() = default;

    Kind2D kind_ = Kind2D::SuperGaussian;
    SuperGaussian sg_;
    double r1_ = 1.0;
    std::shared_ptr<const Profile2D> base_;
};

/// Composite-Simpson integral of value^2 over [lo, hi], refined by node
/// doubling until the relative change is below 1e-8. Starts from at least
/// `nodes` intervals (>= 16). Throws NonConvergent if the cap is reached.
double norm_integral(const Profile1D& pr, double lo, double hi, int nodes);

} // namespace weyllab

#pragma once
#include <stdexcept>

namespace weyllab {

/// Central finite-difference specification. Stencil width is 3 points for
/// order 2 and 5 points for order 4.
struct FDSpec {
    int order = 4;
    double step = 0.01;

    void validate() const {
        if (order != 2 && order != 4) throw std::invalid_argument("FDSpec: order must be 2 or 4");
        if (!(step > 0.0)) throw std::invalid_argument("FDSpec: step must be positive");
    }
};

/// Central difference d/dx of a callable double -> T at x = at.
/// T needs + and scalar multiplication; the solution fields are globally
/// defined, so stencil points never leave the domain.
template <typename F>
auto central_derivative(F&& f, double at, const FDSpec& fd) {
    const double h = fd.step;
    if (fd.order == 2) {
        return (0.5 / h) * (f(at + h) + (-1.0) * f(at - h));
    }
    return (1.0 / (12.0 * h)) *
           (f(at - 2.0 * h) + (-8.0) * f(at - h) + 8.0 * f(at + h) + (-1.0) * f(at + 2.0 * h));
}

} // namespace weyllab

#pragma once
#include <array>
#include <cmath>
#include <complex>

namespace weyllab {

using Complex = std::complex<double>;

/// Two-component spinor value at a spacetime event.
struct Spinor2 {
    std::array<Complex, 2> c{};

    Complex& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Complex& operator[](int i) const { return c[static_cast<size_t>(i)]; }
};

/// Four-component spinor value at a spacetime event.
struct Spinor4 {
    std::array<Complex, 4> c{};

    Complex& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Complex& operator[](int i) const { return c[static_cast<size_t>(i)]; }
};

/// Row-major complex 2x2 matrix.
struct Matrix2 {
    std::array<Complex, 4> m{};

    Complex& at(int r, int col) { return m[static_cast<size_t>(2 * r + col)]; }
    const Complex& at(int r, int col) const { return m[static_cast<size_t>(2 * r + col)]; }
};

/// Row-major complex 4x4 matrix.
struct Matrix4 {
    std::array<Complex, 16> m{};

    Complex& at(int r, int col) { return m[static_cast<size_t>(4 * r + col)]; }
    const Complex& at(int r, int col) const { return m[static_cast<size_t>(4 * r + col)]; }
};

/// Pauli matrix sigma^mu, mu in 0..3 (sigma^0 is the identity).
/// Throws std::out_of_range otherwise.
const Matrix2& pauli(int mu);

/// Gamma matrix gamma^mu in the Dirac representation, mu in 0..3.
/// Throws std::out_of_range otherwise.
const Matrix4& gamma(int mu);

/// Contraction a_mu sigma^mu = a0*sigma^0 + a1*sigma^1 + a2*sigma^2 + a3*sigma^3.
Matrix2 slash2(const std::array<double, 4>& a);

/// Contraction a_mu gamma^mu over the four gamma matrices.
Matrix4 slash4(const std::array<double, 4>& a);

/// psi^dagger * gam * psi.
Complex bilinear(const Spinor2& psi, const Matrix2& gam);
Complex bilinear(const Spinor4& psi, const Matrix4& gam);

Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix4 operator*(const Matrix4& a, const Matrix4& b);
Matrix2 operator+(const Matrix2& a, const Matrix2& b);
Matrix4 operator+(const Matrix4& a, const Matrix4& b);
Matrix2 operator*(Complex s, const Matrix2& a);
Matrix4 operator*(Complex s, const Matrix4& a);

Spinor2 operator*(const Matrix2& a, const Spinor2& v);
Spinor4 operator*(const Matrix4& a, const Spinor4& v);
Spinor2 operator+(const Spinor2& a, const Spinor2& b);
Spinor4 operator+(const Spinor4& a, const Spinor4& b);
Spinor2 operator-(const Spinor2& a, const Spinor2& b);
Spinor4 operator-(const Spinor4& a, const Spinor4& b);
Spinor2 operator*(Complex s, const Spinor2& v);
Spinor4 operator*(Complex s, const Spinor4& v);

/// Euclidean norm over spinor components.
double norm(const Spinor2& v);
double norm(const Spinor4& v);

} // namespace weyllab

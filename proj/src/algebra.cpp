#include "weyllab/algebra.hpp"

#include <stdexcept>

namespace weyllab {

namespace {

constexpr Complex kOne{1.0, 0.0};
constexpr Complex kImag{0.0, 1.0};

Matrix2 make_pauli(int mu) {
    Matrix2 s;
    switch (mu) {
    case 0:
        s.at(0, 0) = kOne;
        s.at(1, 1) = kOne;
        break;
    case 1:
        s.at(0, 1) = kOne;
        s.at(1, 0) = kOne;
        break;
    case 2:
        s.at(0, 1) = -kImag;
        s.at(1, 0) = kImag;
        break;
    case 3:
        s.at(0, 0) = kOne;
        s.at(1, 1) = -kOne;
        break;
    default:
        break;
    }
    return s;
}

// gamma^0 = diag(sigma^0, -sigma^0); gamma^k = [[0, sigma^k], [-sigma^k, 0]]
Matrix4 make_gamma(int mu) {
    Matrix4 g;
    const Matrix2& s = pauli(mu);
    for (int r = 0; r < 2; ++r) {
        for (int col = 0; col < 2; ++col) {
            if (mu == 0) {
                g.at(r, col) = s.at(r, col);
                g.at(r + 2, col + 2) = -s.at(r, col);
            } else {
                g.at(r, col + 2) = s.at(r, col);
                g.at(r + 2, col) = -s.at(r, col);
            }
        }
    }
    return g;
}

} // namespace

const Matrix2& pauli(int mu) {
    if (mu < 0 || mu > 3) {
        throw std::out_of_range("pauli: index must be in 0..3");
    }
    static const std::array<Matrix2, 4> table = {make_pauli(0), make_pauli(1), make_pauli(2),
                                                 make_pauli(3)};
    return table[static_cast<size_t>(mu)];
}

const Matrix4& gamma(int mu) {
    if (mu < 0 || mu > 3) {
        throw std::out_of_range("gamma: index must be in 0..3");
    }
    static const std::array<Matrix4, 4> table = {make_gamma(0), make_gamma(1), make_gamma(2),
                                                 make_gamma(3)};
    return table[static_cast<size_t>(mu)];
}

Matrix2 slash2(const std::array<double, 4>& a) {
    Matrix2 out;
    for (int mu = 0; mu < 4; ++mu) {
        const Matrix2& s = pauli(mu);
        for (size_t i = 0; i < out.m.size(); ++i) {
            out.m[i] += a[static_cast<size_t>(mu)] * s.m[i];
        }
    }
    return out;
}

Matrix4 slash4(const std::array<double, 4>& a) {
    Matrix4 out;
    for (int mu = 0; mu < 4; ++mu) {
        const Matrix4& g = gamma(mu);
        for (size_t i = 0; i < out.m.size(); ++i) {
            out.m[i] += a[static_cast<size_t>(mu)] * g.m[i];
        }
    }
    return out;
}

Complex bilinear(const Spinor2& psi, const Matrix2& gam) {
    Complex acc{};
    for (int r = 0; r < 2; ++r) {
        Complex row{};
        for (int col = 0; col < 2; ++col) {
            row += gam.at(r, col) * psi[col];
        }
        acc += std::conj(psi[r]) * row;
    }
    return acc;
}

Complex bilinear(const Spinor4& psi, const Matrix4& gam) {
    Complex acc{};
    for (int r = 0; r < 4; ++r) {
        Complex row{};
        for (int col = 0; col < 4; ++col) {
            row += gam.at(r, col) * psi[col];
        }
        acc += std::conj(psi[r]) * row;
    }
    return acc;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    Matrix2 out;
    for (int r = 0; r < 2; ++r) {
        for (int col = 0; col < 2; ++col) {
            Complex acc{};
            for (int k = 0; k < 2; ++k) {
                acc += a.at(r, k) * b.at(k, col);
            }
            out.at(r, col) = acc;
        }
    }
    return out;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (int r = 0; r < 4; ++r) {
        for (int col = 0; col < 4; ++col) {
            Complex acc{};
            for (int k = 0; k < 4; ++k) {
                acc += a.at(r, k) * b.at(k, col);
            }
            out.at(r, col) = acc;
        }
    }
    return out;
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    Matrix2 out;
    for (size_t i = 0; i < out.m.size(); ++i) out.m[i] = a.m[i] + b.m[i];
    return out;
}

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (size_t i = 0; i < out.m.size(); ++i) out.m[i] = a.m[i] + b.m[i];
    return out;
}

Matrix2 operator*(Complex s, const Matrix2& a) {
    Matrix2 out;
    for (size_t i = 0; i < out.m.size(); ++i) out.m[i] = s * a.m[i];
    return out;
}

Matrix4 operator*(Complex s, const Matrix4& a) {
    Matrix4 out;
    for (size_t i = 0; i < out.m.size(); ++i) out.m[i] = s * a.m[i];
    return out;
}

Spinor2 operator*(const Matrix2& a, const Spinor2& v) {
    Spinor2 out;
    for (int r = 0; r < 2; ++r) {
        Complex acc{};
        for (int col = 0; col < 2; ++col) acc += a.at(r, col) * v[col];
        out[r] = acc;
    }
    return out;
}

Spinor4 operator*(const Matrix4& a, const Spinor4& v) {
    Spinor4 out;
    for (int r = 0; r < 4; ++r) {
        Complex acc{};
        for (int col = 0; col < 4; ++col) acc += a.at(r, col) * v[col];
        out[r] = acc;
    }
    return out;
}

Spinor2 operator+(const Spinor2& a, const Spinor2& b) {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1]}};
}

Spinor4 operator+(const Spinor4& a, const Spinor4& b) {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]}};
}

Spinor2 operator-(const Spinor2& a, const Spinor2& b) {
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1]}};
}

Spinor4 operator-(const Spinor4& a, const Spinor4& b) {
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]}};
}

Spinor2 operator*(Complex s, const Spinor2& v) {
    return {{s * v.c[0], s * v.c[1]}};
}

Spinor4 operator*(Complex s, const Spinor4& v) {
    return {{s * v.c[0], s * v.c[1], s * v.c[2], s * v.c[3]}};
}

double norm(const Spinor2& v) {
    return std::sqrt(std::norm(v.c[0]) + std::norm(v.c[1]));
}

double norm(const Spinor4& v) {
    return std::sqrt(std::norm(v.c[0]) + std::norm(v.c[1]) + std::norm(v.c[2]) +
                     std::norm(v.c[3]));
}

} // namespace weyllab

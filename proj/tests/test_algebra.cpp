#include <doctest.h>

#include <random>
#include <stdexcept>

#include "test_helpers.hpp"
#include "weyllab/algebra.hpp"

using namespace weyllab;
using testutil::Mat;

namespace {

const Complex kI{0.0, 1.0};

// Pauli and gamma tables written out literally, as the independent oracle.
Mat<2> pauli_table(int mu) {
    switch (mu) {
    case 0: return {{{1, 0}, {0, 1}}};
    case 1: return {{{0, 1}, {1, 0}}};
    case 2: return {{{0, -kI}, {kI, 0}}};
    default: return {{{1, 0}, {0, Complex{-1.0}}}};
    }
}

Mat<4> gamma_table(int mu) {
    Mat<4> g{};
    const Mat<2> s = pauli_table(mu);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            if (mu == 0) {
                g[r][c] = s[r][c];
                g[r + 2][c + 2] = -s[r][c];
            } else {
                g[r][c + 2] = s[r][c];
                g[r + 2][c] = -s[r][c];
            }
        }
    }
    return g;
}

} // namespace

TEST_CASE("pauli matrices match the printed tables") {
    for (int mu = 0; mu < 4; ++mu) {
        CHECK(testutil::max_abs_diff(testutil::to_mat<2>(pauli(mu)), pauli_table(mu)) == 0.0);
    }
    CHECK(pauli(0).at(0, 0) == Complex{1.0});
    CHECK(pauli(3).at(1, 1) == Complex{-1.0});
    // sigma^2 squares to the identity
    const Matrix2 sq = pauli(2) * pauli(2);
    CHECK(testutil::max_abs_diff(testutil::to_mat<2>(sq), pauli_table(0)) <= 1e-15);
    CHECK_THROWS_AS(pauli(4), std::out_of_range);
    CHECK_THROWS_AS(pauli(-1), std::out_of_range);
}

TEST_CASE("gamma matrices match the block structure") {
    for (int mu = 0; mu < 4; ++mu) {
        CHECK(testutil::max_abs_diff(testutil::to_mat<4>(gamma(mu)), gamma_table(mu)) == 0.0);
    }
    // gamma^0 = diag(1,1,-1,-1)
    for (int i = 0; i < 4; ++i) {
        CHECK(gamma(0).at(i, i) == Complex{i < 2 ? 1.0 : -1.0});
    }
    CHECK_THROWS_AS(gamma(5), std::out_of_range);
}

TEST_CASE("Clifford algebra to rounding") {
    const double eta[4] = {1.0, -1.0, -1.0, -1.0};
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const auto anti = testutil::mul<4>(testutil::to_mat<4>(gamma(mu)),
                                               testutil::to_mat<4>(gamma(nu)));
            const auto anti2 = testutil::mul<4>(testutil::to_mat<4>(gamma(nu)),
                                                testutil::to_mat<4>(gamma(mu)));
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 4; ++c) {
                    const Complex want = (r == c && mu == nu) ? Complex{2.0 * eta[mu]} : Complex{};
                    CHECK(std::abs(anti[r][c] + anti2[r][c] - want) <= 1e-15);
                }
            }
        }
    }
    // spatial gammas square to -identity
    const Matrix4 g11 = gamma(1) * gamma(1);
    for (int i = 0; i < 4; ++i) CHECK(g11.at(i, i) == Complex{-1.0});
}

TEST_CASE("pauli product identity sigma_k sigma_l = delta + i eps sigma_m") {
    const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                              {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                              {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            Mat<2> want{};
            if (k == l) want = pauli_table(0);
            for (int m = 1; m <= 3; ++m) {
                const int e = eps[k - 1][l - 1][m - 1];
                if (e != 0) {
                    const auto sm = pauli_table(m);
                    for (int r = 0; r < 2; ++r)
                        for (int c = 0; c < 2; ++c) want[r][c] += kI * double(e) * sm[r][c];
                }
            }
            const auto got = testutil::to_mat<2>(pauli(k) * pauli(l));
            CHECK(testutil::max_abs_diff<2>(got, want) <= 1e-15);
        }
    }
}

TEST_CASE("slash contractions") {
    CHECK(testutil::max_abs_diff(testutil::to_mat<4>(slash4({1, 0, 0, 0})),
                                 testutil::to_mat<4>(gamma(0))) == 0.0);
    CHECK(testutil::max_abs_diff(testutil::to_mat<2>(slash2({0, 0, 0, 1})),
                                 testutil::to_mat<2>(pauli(3))) == 0.0);

    // slash4((1,0,0,-1)) annihilates (f, g, f, -g); brute-force matvec oracle
    auto gen = testutil::rng();
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double f = u(gen), g = u(gen);
        const std::array<Complex, 4> psi{f, g, f, -g};
        Mat<4> sl = gamma_table(0);
        const auto g3 = gamma_table(3);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) sl[r][c] -= g3[r][c];
        const auto out = testutil::matvec<4>(sl, psi);
        for (const auto& v : out) CHECK(std::abs(v) <= 1e-14);

        const Spinor4 sp{{Complex{f}, Complex{g}, Complex{f}, Complex{-g}}};
        CHECK(norm(slash4({1, 0, 0, -1}) * sp) <= 1e-14);
    }
}

TEST_CASE("bilinear values") {
    const Spinor4 psi{{Complex{1}, Complex{0}, Complex{1}, Complex{0}}};
    Matrix4 ident;
    for (int i = 0; i < 4; ++i) ident.at(i, i) = Complex{1.0};
    CHECK(bilinear(psi, ident).real() == doctest::Approx(2.0));
    CHECK(std::abs(bilinear(psi, gamma(0))) <= 1e-15);

    // (2,1,2,-1) with i*gamma^1*gamma^2: 6, so S_z = (1/2)*6/10 = 0.3
    const Spinor4 p2{{Complex{2}, Complex{1}, Complex{2}, Complex{-1}}};
    const Complex val = bilinear(p2, Complex{0, 1} * (gamma(1) * gamma(2)));
    CHECK(val.real() == doctest::Approx(6.0));
    CHECK(std::abs(val.imag()) <= 1e-15);
    CHECK(0.5 * val.real() / bilinear(p2, ident).real() == doctest::Approx(0.3));
}

TEST_CASE("bilinear properties on random spinors") {
    auto gen = testutil::rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix4 ident;
    for (int i = 0; i < 4; ++i) ident.at(i, i) = Complex{1.0};
    for (int trial = 0; trial < 200; ++trial) {
        Spinor4 psi;
        for (int i = 0; i < 4; ++i) psi[i] = Complex{u(gen), u(gen)};
        const Complex dens = bilinear(psi, ident);
        CHECK(dens.real() >= 0.0);
        CHECK(std::abs(dens.imag()) <= 1e-15 * (1.0 + dens.real()));

        // Hermitian Gamma: i gamma^1 gamma^2 is Hermitian; imaginary part is rounding
        const Complex herm = bilinear(psi, Complex{0, 1} * (gamma(1) * gamma(2)));
        const double n2 = norm(psi) * norm(psi);
        CHECK(std::abs(herm.imag()) <= 1e-15 * (1.0 + n2));
    }
}

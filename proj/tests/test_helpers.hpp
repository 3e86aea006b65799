#pragma once
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "weyllab/algebra.hpp"
#include "weyllab/profiles.hpp"

// Shared helpers for the unit suites. The matrix helpers below are
// deliberately independent of the library's operators so they can serve as
// brute-force oracles.
namespace testutil {

using weyllab::Complex;

inline std::mt19937_64 rng(std::uint64_t seed = 0x5eed5eedULL) {
    return std::mt19937_64{seed};
}

inline weyllab::Direction random_direction(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double theta = std::acos(2.0 * u(gen) - 1.0);
    const double phi = 2.0 * 3.14159265358979323846 * u(gen);
    return {theta, std::nextafter(phi, 0.0)};
}

template <std::size_t N>
using Mat = std::array<std::array<Complex, N>, N>;

template <std::size_t N, typename M>
Mat<N> to_mat(const M& m) {
    Mat<N> out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
            out[r][c] = m.at(static_cast<int>(r), static_cast<int>(c));
    return out;
}

template <std::size_t N>
Mat<N> mul(const Mat<N>& a, const Mat<N>& b) {
    Mat<N> out{};
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
            for (std::size_t k = 0; k < N; ++k) out[r][c] += a[r][k] * b[k][c];
    return out;
}

template <std::size_t N>
std::array<Complex, N> matvec(const Mat<N>& a, const std::array<Complex, N>& v) {
    std::array<Complex, N> out{};
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) out[r] += a[r][c] * v[c];
    return out;
}

template <std::size_t N>
double max_abs_diff(const Mat<N>& a, const Mat<N>& b) {
    double d = 0.0;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) d = std::max(d, std::abs(a[r][c] - b[r][c]));
    return d;
}

} // namespace testutil

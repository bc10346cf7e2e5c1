#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "wqed/errors.hpp"

namespace wqed {

/// Dense 5x5 complex system M u = b.
struct LinearSystem5 {
    std::array<std::array<std::complex<double>, 5>, 5> m{};
    std::array<std::complex<double>, 5> b{};
};

using Solution5 = std::array<std::complex<double>, 5>;

/// Gaussian elimination with partial pivoting in complex arithmetic.
/// Throws SingularSystem when a pivot magnitude drops below
/// 1e-14 times the largest entry of the initial matrix.
inline Solution5 solve_linear(LinearSystem5 system)
{
    auto& m = system.m;
    auto& b = system.b;

    double scale = 0.0;
    for (const auto& row : m)
        for (const auto& v : row)
            scale = std::max(scale, std::abs(v));
    const double pivot_floor = 1e-14 * scale;

    for (int k = 0; k < 5; ++k) {
        int pivot = k;
        double best = std::abs(m[k][k]);
        for (int i = k + 1; i < 5; ++i) {
            const double mag = std::abs(m[i][k]);
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (!(best > pivot_floor))
            throw SingularSystem("pivot below singularity threshold");
        if (pivot != k) {
            std::swap(m[k], m[pivot]);
            std::swap(b[k], b[pivot]);
        }
        for (int i = k + 1; i < 5; ++i) {
            const std::complex<double> factor = m[i][k] / m[k][k];
            m[i][k] = 0.0;
            for (int j = k + 1; j < 5; ++j)
                m[i][j] -= factor * m[k][j];
            b[i] -= factor * b[k];
        }
    }

    Solution5 u{};
    for (int i = 4; i >= 0; --i) {
        std::complex<double> acc = b[i];
        for (int j = i + 1; j < 5; ++j)
            acc -= m[i][j] * u[j];
        u[i] = acc / m[i][i];
    }
    return u;
}

inline double frobenius_norm(const LinearSystem5& s)
{
    double acc = 0.0;
    for (const auto& row : s.m)
        for (const auto& v : row)
            acc += std::norm(v);
    return std::sqrt(acc);
}

inline double vector_norm(const Solution5& u)
{
    double acc = 0.0;
    for (const auto& v : u)
        acc += std::norm(v);
    return std::sqrt(acc);
}

/// ||M u - b||_2 of a candidate solution against the original system.
inline double residual_norm(const LinearSystem5& s, const Solution5& u)
{
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) {
        std::complex<double> row = -s.b[i];
        for (int j = 0; j < 5; ++j)
            row += s.m[i][j] * u[j];
        acc += std::norm(row);
    }
    return std::sqrt(acc);
}

} // namespace wqed

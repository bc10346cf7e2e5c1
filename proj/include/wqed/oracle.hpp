#pragma once

#include <complex>

#include "wqed/linear.hpp"
#include "wqed/model.hpp"

// Independent route to the scattering amplitudes: instead of the closed
// forms, assemble the stationary matching conditions of the piecewise
// plane-wave ansatz and solve the resulting 5-unknown complex system for
// (t, r, f2, f3, f4). Agreement between the two routes is the project's
// main correctness check.

namespace wqed {

/// Stationary solution: amplitudes of the transmitted/reflected photon and
/// of the three excited atomic levels.
struct OracleSolution {
    std::complex<double> t;
    std::complex<double> r;
    std::complex<double> f2;
    std::complex<double> f3;
    std::complex<double> f4;
};

/// Matching conditions at the scatterer, unknowns ordered (t, r, f2, f3, f4),
/// with V1 = sqrt(G1*vg), V2 = sqrt(G2*vg) and the discontinuous field
/// regularized by its symmetric mean at the origin: phi_R(0) = (1+t)/2,
/// phi_L(0) = r/2.
///
///   (E1) -i*vg*t + V1*f2 + V2*f3            = -i*vg   [right-mover jump]
///   (E2) -i*vg*r + V1*f2 + V2*f3            = 0       [left-mover jump]
///   (E3) (V1/2)*(t + r) + d2*f2 + W*f4      = -V1/2
///   (E4) (V2/2)*(t + r) + d3*f3             = -V2/2
///   (E5) W*f2 + d4*f4                       = 0
inline LinearSystem5 stationary_system(const ModelParams& p, const ProbeEnergy& probe)
{
    const auto [d2, d3, d4] = complex_detunings(p, probe);
    const std::complex<double> i(0.0, 1.0);
    const double vg = p.v_group;
    const double v1 = dipole_coupling1(p);
    const double v2 = dipole_coupling2(p);
    const double w = p.rabi;

    LinearSystem5 s;
    s.m[0] = {-i * vg, 0.0, v1, v2, 0.0};
    s.b[0] = -i * vg;
    s.m[1] = {0.0, -i * vg, v1, v2, 0.0};
    s.b[1] = 0.0;
    s.m[2] = {0.5 * v1, 0.5 * v1, d2, 0.0, w};
    s.b[2] = -0.5 * v1;
    s.m[3] = {0.5 * v2, 0.5 * v2, 0.0, d3, 0.0};
    s.b[3] = -0.5 * v2;
    s.m[4] = {0.0, 0.0, w, 0.0, d4};
    s.b[4] = 0.0;
    return s;
}

/// Assemble and solve. Propagates SingularSystem.
inline OracleSolution solve_stationary(const ModelParams& p, const ProbeEnergy& probe)
{
    const Solution5 u = solve_linear(stationary_system(p, probe));
    return {u[0], u[1], u[2], u[3], u[4]};
}

} // namespace wqed

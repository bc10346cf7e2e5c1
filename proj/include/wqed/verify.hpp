#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wqed/oracle.hpp"
#include "wqed/rng.hpp"
#include "wqed/scattering.hpp"

// Seeded randomized verification: flux conservation of the closed forms on
// lossless draws, and closed-form vs. linear-system agreement on lossless
// and dissipative draws. Deviations are relative to max(1, |amplitude|).

namespace wqed {

struct ParameterDraw {
    ModelParams params;
    ProbeEnergy probe;
};

/// One random parameter set: big_gamma_i in [0,50], rabi in [0,100],
/// delta_drive in [-50,50], detuning in [-100,100], omega3 detached from
/// omega2 by up to +-50, v_group in [0.5,2]; decays in [0,5] when
/// dissipative, zero otherwise.
inline ParameterDraw random_draw(std::mt19937_64& gen, bool dissipative)
{
    ModelParams p;
    p.omega2 = 100.0;
    p.omega3 = p.omega2 + uniform_in(gen, -50.0, 50.0);
    p.big_gamma1 = uniform_in(gen, 0.0, 50.0);
    p.big_gamma2 = uniform_in(gen, 0.0, 50.0);
    p.rabi = uniform_in(gen, 0.0, 100.0);
    p.delta_drive = uniform_in(gen, -50.0, 50.0);
    p.v_group = uniform_in(gen, 0.5, 2.0);
    if (dissipative) {
        p.gamma2 = uniform_in(gen, 0.0, 5.0);
        p.gamma3 = uniform_in(gen, 0.0, 5.0);
        p.gamma4 = uniform_in(gen, 0.0, 5.0);
    } else {
        p.gamma2 = p.gamma3 = p.gamma4 = 0.0;
    }
    const double delta = uniform_in(gen, -100.0, 100.0);
    return {p, probe_at_detuning(p, delta)};
}

inline double relative_deviation(std::complex<double> a, std::complex<double> b)
{
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

/// Per-suite maxima; metrics a suite does not measure stay NaN.
struct VerificationSuite {
    std::string name;
    std::uint64_t draws = 0;
    double max_dt = std::numeric_limits<double>::quiet_NaN();          // relative |t_closed - t_oracle|
    double max_dr = std::numeric_limits<double>::quiet_NaN();          // relative |r_closed - r_oracle|
    double max_flux_defect = std::numeric_limits<double>::quiet_NaN(); // | |t|^2 + |r|^2 - 1 |
    double threshold = 0.0;
    bool pass = false;
};

/// Flux conservation of the closed forms over lossless draws.
inline VerificationSuite verify_flux_conservation(std::uint64_t draws, std::uint64_t seed,
                                                  double threshold = 1e-10)
{
    std::mt19937_64 gen(stream_seed(seed, 0xF1));
    VerificationSuite suite;
    suite.name = "flux_lossless";
    suite.draws = draws;
    suite.threshold = threshold;
    suite.max_flux_defect = 0.0;
    for (std::uint64_t i = 0; i < draws; ++i) {
        const ParameterDraw d = random_draw(gen, false);
        const ScatterAmps amps = scatter(d.params, d.probe);
        const double defect = std::abs(std::norm(amps.t) + std::norm(amps.r) - 1.0);
        suite.max_flux_defect = std::max(suite.max_flux_defect, defect);
    }
    suite.pass = suite.max_flux_defect <= threshold;
    return suite;
}

/// Closed forms vs. stationary linear solve on (t, r).
inline VerificationSuite verify_oracle_equivalence(std::uint64_t draws, std::uint64_t seed,
                                                   bool dissipative, double threshold = 1e-10)
{
    std::mt19937_64 gen(stream_seed(seed, dissipative ? 0xD1 : 0xA1));
    VerificationSuite suite;
    suite.name = dissipative ? "oracle_dissipative" : "oracle_lossless";
    suite.draws = draws;
    suite.threshold = threshold;
    suite.max_dt = 0.0;
    suite.max_dr = 0.0;
    for (std::uint64_t i = 0; i < draws; ++i) {
        const ParameterDraw d = random_draw(gen, dissipative);
        const ScatterAmps closed = scatter(d.params, d.probe);
        const OracleSolution oracle = solve_stationary(d.params, d.probe);
        suite.max_dt = std::max(suite.max_dt, relative_deviation(closed.t, oracle.t));
        suite.max_dr = std::max(suite.max_dr, relative_deviation(closed.r, oracle.r));
    }
    suite.pass = suite.max_dt <= threshold && suite.max_dr <= threshold;
    return suite;
}

/// The three standard suites; `draws` applies to each.
inline std::vector<VerificationSuite> run_verification(std::uint64_t draws, std::uint64_t seed)
{
    return {
        verify_flux_conservation(draws, seed),
        verify_oracle_equivalence(draws, seed, false),
        verify_oracle_equivalence(draws, seed, true),
    };
}

} // namespace wqed

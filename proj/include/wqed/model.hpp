#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "wqed/errors.hpp"

namespace wqed {

// Relative tolerance below which a cleared-form denominator counts as zero.
inline constexpr double kEpsDenominator = 1e-12;

// Relative tolerance for probability bookkeeping (rounding vs. bug).
inline constexpr double kEpsProbability = 1e-9;

/// Atom and waveguide parameters, all energies and rates in units of the
/// reference decay rate gamma (gamma == 1 sets the scale).
///
/// Level scheme: ground |1>, excited |2> and |3> addressed by the guided
/// photon with rates big_gamma1/big_gamma2, and |4> at omega2 + delta_drive
/// reached from |2> by a classical drive of strength rabi. gamma2..gamma4
/// are spontaneous decay rates out of the guide.
struct ModelParams {
    double omega2 = 100.0;     // energy of |2>
    double omega3 = 100.0;     // energy of |3>
    double delta_drive = 0.0;  // drive detuning Delta; |4> sits at omega2 + Delta
    double rabi = 0.0;         // classical coupling Omega
    double gamma2 = 1.0;
    double gamma3 = 1.0;
    double gamma4 = 1.0;
    double big_gamma1 = 10.0;  // waveguide coupling rate of |1><->|2>
    double big_gamma2 = 10.0;  // waveguide coupling rate of |1><->|3>
    double v_group = 1.0;      // photon group velocity
};

/// Throws ValidationError naming the offending field. Rates must be
/// non-negative, v_group strictly positive, everything finite.
inline void validate(const ModelParams& p)
{
    auto finite = [](double x) { return std::isfinite(x); };
    const struct { const char* name; double value; } fields[] = {
        {"omega2", p.omega2},         {"omega3", p.omega3},
        {"delta_drive", p.delta_drive}, {"rabi", p.rabi},
        {"gamma2", p.gamma2},         {"gamma3", p.gamma3},
        {"gamma4", p.gamma4},         {"big_gamma1", p.big_gamma1},
        {"big_gamma2", p.big_gamma2}, {"v_group", p.v_group},
    };
    for (const auto& f : fields) {
        if (!finite(f.value))
            throw ValidationError(std::string("model.") + f.name + " must be finite");
    }
    const struct { const char* name; double value; } rates[] = {
        {"rabi", p.rabi},
        {"gamma2", p.gamma2},         {"gamma3", p.gamma3},
        {"gamma4", p.gamma4},         {"big_gamma1", p.big_gamma1},
        {"big_gamma2", p.big_gamma2},
    };
    for (const auto& f : rates) {
        if (f.value < 0.0)
            throw ValidationError(std::string("model.") + f.name + " must be non-negative");
    }
    if (!(p.v_group > 0.0))
        throw ValidationError("model.v_group must be strictly positive");
}

// Dipole couplings V_i = sqrt(big_gamma_i * v_group), so big_gamma_i = V_i^2 / v_group.
inline double dipole_coupling1(const ModelParams& p) { return std::sqrt(p.big_gamma1 * p.v_group); }
inline double dipole_coupling2(const ModelParams& p) { return std::sqrt(p.big_gamma2 * p.v_group); }

/// Incident photon energy (units of gamma).
struct ProbeEnergy {
    double omega = 100.0;

    double wavenumber(const ModelParams& p) const { return omega / p.v_group; }
};

/// Detuning convention: delta = omega2 - omega.
inline double detuning(const ModelParams& p, const ProbeEnergy& probe)
{
    return p.omega2 - probe.omega;
}

/// Probe pinned at a given detuning from |2>.
inline ProbeEnergy probe_at_detuning(const ModelParams& p, double delta)
{
    return ProbeEnergy{p.omega2 - delta};
}

/// Complex detunings of the three excited levels at probe energy omega:
///   d2 = omega2 - omega - i*gamma2/2
///   d3 = omega3 - omega - i*gamma3/2
///   d4 = omega2 + delta_drive - omega - i*gamma4/2
struct Detunings {
    std::complex<double> d2, d3, d4;
};

inline Detunings complex_detunings(const ModelParams& p, const ProbeEnergy& probe)
{
    return Detunings{
        {p.omega2 - probe.omega, -0.5 * p.gamma2},
        {p.omega3 - probe.omega, -0.5 * p.gamma3},
        {p.omega2 + p.delta_drive - probe.omega, -0.5 * p.gamma4},
    };
}

} // namespace wqed

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "wqed/model.hpp"

// Closed-form single-photon scattering amplitudes of a classically driven
// four-level atom in a one-dimensional waveguide. All rational expressions
// are evaluated in the cleared form: numerator and denominator are both
// multiplied by d4, which removes the drive pole at d4 = 0 (the lossless
// resonance with delta + delta_drive = 0 is a regular point of the cleared
// form and the device's main operating point).

namespace wqed {

/// Complex transmission/reflection amplitude pair.
struct ScatterAmps {
    std::complex<double> t;
    std::complex<double> r;
};

/// Per-channel outcome probabilities; transmit + reflect + loss == 1.
struct ChannelProbs {
    double transmit = 0.0;
    double reflect = 0.0;
    double loss = 0.0;
};

namespace detail {

inline void guard_denominator(const std::complex<double>& den, double scale)
{
    if (std::abs(den) < kEpsDenominator * std::max(scale, 1.0))
        throw DegenerateDenominator("cleared-form denominator vanishes at this evaluation point");
}

} // namespace detail

/// Full four-level amplitudes (both waveguide transitions active):
///   t = d3*(d2*d4 - W^2) / D
///   r = [i*G1*d3*d4 + i*G2*(d2*d4 - W^2)] / D
///   D = (d3 - i*G2)*((d2 - i*G1)*d4 - W^2) + G1*G2*d4
/// with W = rabi, G1/G2 the waveguide rates and d2, d3, d4 the complex
/// detunings. Throws DegenerateDenominator when |D| is negligible against
/// the natural scale of the expression.
inline ScatterAmps scatter(const ModelParams& p, const ProbeEnergy& probe)
{
    const auto [d2, d3, d4] = complex_detunings(p, probe);
    const std::complex<double> i(0.0, 1.0);
    const double w2 = p.rabi * p.rabi;
    const double g1 = p.big_gamma1;
    const double g2 = p.big_gamma2;

    const std::complex<double> driven = d2 * d4 - w2; // cleared (d2 - W^2/d4)
    const std::complex<double> den =
        (d3 - i * g2) * ((d2 - i * g1) * d4 - w2) + g1 * g2 * d4;

    const double scale = std::max({std::abs(d2 * d3 * d4),
                                   w2 * std::max({std::abs(d2), std::abs(d3), 1.0})});
    detail::guard_denominator(den, scale);

    return {d3 * driven / den, (i * g1 * d3 * d4 + i * g2 * driven) / den};
}

/// Left-circular channel: only |1><->|2> couples to the guide and the drive
/// dresses it with |4>. Cleared form
///   t_L = (d2*d4 - W^2) / ((d2 - i*G1)*d4 - W^2).
inline std::complex<double> transmission_left(const ModelParams& p, const ProbeEnergy& probe)
{
    const auto [d2, d3, d4] = complex_detunings(p, probe);
    (void)d3;
    const std::complex<double> i(0.0, 1.0);
    const double w2 = p.rabi * p.rabi;

    const std::complex<double> den = (d2 - i * p.big_gamma1) * d4 - w2;
    detail::guard_denominator(den, std::max(std::abs(d2 * d4), w2));
    return (d2 * d4 - w2) / den;
}

/// Right-circular channel: bare two-level response of |1><->|3>,
///   t_R = d3 / (d3 - i*G2).
inline std::complex<double> transmission_right(const ModelParams& p, const ProbeEnergy& probe)
{
    const auto [d2, d3, d4] = complex_detunings(p, probe);
    (void)d2;
    (void)d4;
    const std::complex<double> den = d3 - std::complex<double>(0.0, p.big_gamma2);
    detail::guard_denominator(den, std::abs(d3));
    return d3 / den;
}

// A one-sided point scatterer always satisfies r = t - 1 (the two delta-jump
// matching conditions differ only by the incident wave), so each reduced
// channel gets its reflection for free.

inline ScatterAmps scatter_left(const ModelParams& p, const ProbeEnergy& probe)
{
    const std::complex<double> t = transmission_left(p, probe);
    return {t, t - 1.0};
}

inline ScatterAmps scatter_right(const ModelParams& p, const ProbeEnergy& probe)
{
    const std::complex<double> t = transmission_right(p, probe);
    return {t, t - 1.0};
}

/// Probability bookkeeping: transmit = |t|^2, reflect = |r|^2,
/// loss = 1 - |t|^2 - |r|^2. A loss within kEpsProbability of a tiny
/// negative value is rounding and gets clamped to zero; anything more
/// negative means the amplitudes are not physical and throws.
inline ChannelProbs probabilities(const ScatterAmps& amps)
{
    const double transmit = std::norm(amps.t);
    const double reflect = std::norm(amps.r);
    double loss = 1.0 - transmit - reflect;
    if (loss < 0.0) {
        if (loss < -kEpsProbability)
            throw InvalidAmplitudes("|t|^2 + |r|^2 exceeds 1 beyond rounding tolerance");
        loss = 0.0;
    }
    return {std::min(transmit, 1.0), std::min(reflect, 1.0), loss};
}

/// Channel selectivity F = |t_L|^2 / (|t_L|^2 + |t_R|^2) in [0, 1].
/// Throws IndeterminateFidelity on the 0/0 corner.
inline double fidelity(const ModelParams& p, const ProbeEnergy& probe)
{
    const double tl = std::norm(transmission_left(p, probe));
    const double tr = std::norm(transmission_right(p, probe));
    if (tl + tr < kEpsProbability)
        throw IndeterminateFidelity("both channel transmissions vanish");
    return tl / (tl + tr);
}

} // namespace wqed

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "wqed/rng.hpp"
#include "wqed/scattering.hpp"

// Single-photon polarization filtering. An incident photon in the state
// cos(alpha)|L> + sin(alpha)|R> couples its L component to the driven
// |1><->|2> transition and its R component to the bare |1><->|3> transition,
// so the channel weights are cos^2(alpha) and sin^2(alpha). Because the two
// channels address disjoint transitions, sampling the channel first and then
// the per-channel outcome reproduces the transport statistics photon by
// photon.

namespace wqed {

/// Polarization mixing angle alpha in [0, pi/2].
struct PolarizationState {
    double alpha;

    explicit PolarizationState(double a) : alpha(a)
    {
        if (!(a >= 0.0 && a <= std::numbers::pi / 2))
            throw ValidationError("alpha must lie in [0, pi/2]");
    }

    double weight_left() const
    {
        const double c = std::cos(alpha);
        return c * c;
    }
};

/// Outcome tallies of a photon-counting run; the seed is echoed so any
/// record is reproducible on its own.
struct TrialCounts {
    std::uint64_t n_total = 0;
    std::uint64_t n_transmitted = 0;
    std::uint64_t n_reflected = 0;
    std::uint64_t n_lost = 0;
    std::uint64_t seed = 0;
};

/// Analytic transport probabilities of the polarized photon:
/// channel-weighted mix of the left and right channel probabilities.
inline ChannelProbs polarized_probabilities(const ModelParams& p, const ProbeEnergy& probe,
                                            const PolarizationState& pol)
{
    const ChannelProbs left = probabilities(scatter_left(p, probe));
    const ChannelProbs right = probabilities(scatter_right(p, probe));
    const double w = pol.weight_left();
    return {w * left.transmit + (1.0 - w) * right.transmit,
            w * left.reflect + (1.0 - w) * right.reflect,
            w * left.loss + (1.0 - w) * right.loss};
}

/// Photon-by-photon Monte Carlo: each trial draws the channel (L with
/// probability cos^2 alpha), then a three-way outcome from that channel's
/// probabilities. Deterministic for fixed (seed, n) by chunked substreams.
inline TrialCounts simulate_photons(const ModelParams& p, const ProbeEnergy& probe,
                                    const PolarizationState& pol, std::uint64_t n,
                                    std::uint64_t seed)
{
    if (n < 1)
        throw InsufficientSamples("photon count must be at least 1");

    const ChannelProbs left = probabilities(scatter_left(p, probe));
    const ChannelProbs right = probabilities(scatter_right(p, probe));
    const double w = pol.weight_left();

    TrialCounts counts;
    counts.n_total = n;
    counts.seed = seed;

    const std::uint64_t chunks = (n + kTrialChunk - 1) / kTrialChunk;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        std::mt19937_64 gen(stream_seed(seed, c));
        const std::uint64_t begin = c * kTrialChunk;
        const std::uint64_t end = std::min(n, begin + kTrialChunk);
        for (std::uint64_t k = begin; k < end; ++k) {
            const ChannelProbs& ch = uniform_double(gen) < w ? left : right;
            const double u = uniform_double(gen);
            if (u < ch.transmit)
                ++counts.n_transmitted;
            else if (u < ch.transmit + ch.reflect)
                ++counts.n_reflected;
            else
                ++counts.n_lost;
        }
    }
    return counts;
}

/// Binomial z-interval verdict on the transmitted fraction.
struct BinomialCheck {
    bool pass = false;
    double p_hat = 0.0;
    double halfwidth = 0.0;
};

/// Pass iff |p_hat - p_expected| <= z * sqrt(p_expected*(1-p_expected)/n).
/// Degenerate expectations (exactly 0 or 1) require an exact count match.
/// Throws InsufficientSamples below 100 trials.
inline BinomialCheck binomial_check(const TrialCounts& counts, double p_expected, double z)
{
    if (counts.n_total < 100)
        throw InsufficientSamples("need at least 100 trials for an interval check");

    const double n = static_cast<double>(counts.n_total);
    const double p_hat = static_cast<double>(counts.n_transmitted) / n;

    if (p_expected == 0.0)
        return {counts.n_transmitted == 0, p_hat, 0.0};
    if (p_expected == 1.0)
        return {counts.n_transmitted == counts.n_total, p_hat, 0.0};

    const double halfwidth = z * std::sqrt(p_expected * (1.0 - p_expected) / n);
    return {std::abs(p_hat - p_expected) <= halfwidth, p_hat, halfwidth};
}

} // namespace wqed

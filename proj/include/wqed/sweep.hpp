#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "wqed/malus.hpp"
#include "wqed/scattering.hpp"

// Deterministic linear parameter sweeps. Grid points are evaluated in grid
// order (axis1 outer, axis2 inner); per-point evaluation failures become
// error-flagged records with NaN quantities instead of aborting the sweep.

namespace wqed {

enum class SweepParameter { delta, rabi, delta_drive, big_gamma1, big_gamma2, alpha };

inline const char* to_string(SweepParameter p)
{
    switch (p) {
    case SweepParameter::delta: return "delta";
    case SweepParameter::rabi: return "rabi";
    case SweepParameter::delta_drive: return "delta_drive";
    case SweepParameter::big_gamma1: return "big_gamma1";
    case SweepParameter::big_gamma2: return "big_gamma2";
    case SweepParameter::alpha: return "alpha";
    }
    return "?";
}

inline SweepParameter parse_sweep_parameter(std::string_view name)
{
    if (name == "delta") return SweepParameter::delta;
    if (name == "rabi") return SweepParameter::rabi;
    if (name == "delta_drive") return SweepParameter::delta_drive;
    if (name == "big_gamma1") return SweepParameter::big_gamma1;
    if (name == "big_gamma2") return SweepParameter::big_gamma2;
    if (name == "alpha") return SweepParameter::alpha;
    throw ValidationError("unknown sweep parameter '" + std::string(name) + "'");
}

/// Linear grid over one parameter, both endpoints included.
struct SweepAxis {
    SweepParameter parameter = SweepParameter::delta;
    double start = 0.0;
    double stop = 0.0;
    int count = 2;
};

inline void validate(const SweepAxis& axis)
{
    if (axis.count < 2)
        throw ValidationError("axis.count must be at least 2");
    if (!std::isfinite(axis.start) || !std::isfinite(axis.stop))
        throw ValidationError("axis.start/axis.stop must be finite");
    if (axis.start == axis.stop)
        throw ValidationError("axis.start must differ from axis.stop");
}

/// i-th grid value; endpoints are exact.
inline double axis_value(const SweepAxis& axis, int i)
{
    if (i == 0) return axis.start;
    if (i == axis.count - 1) return axis.stop;
    return axis.start + (axis.stop - axis.start) * (static_cast<double>(i) / (axis.count - 1));
}

/// Which amplitudes fill the t/r columns: the full four-level scatterer or
/// one polarization channel. Sweeps over alpha use the polarization-averaged
/// probabilities instead and carry no amplitude columns.
enum class Channel { full, left, right };

inline const char* to_string(Channel c)
{
    switch (c) {
    case Channel::full: return "full";
    case Channel::left: return "left";
    case Channel::right: return "right";
    }
    return "?";
}

inline Channel parse_channel(std::string_view name)
{
    if (name == "full") return Channel::full;
    if (name == "left") return Channel::left;
    if (name == "right") return Channel::right;
    throw ValidationError("unknown channel '" + std::string(name) + "'");
}

/// One grid point. axis2 is NaN for 1D sweeps. A non-empty error flags a
/// point where evaluation failed; failed quantities are NaN. An error
/// prefixed "fidelity:" leaves the amplitude and probability columns valid
/// (only the fidelity evaluation degenerated there).
struct SweepRecord {
    double axis1 = std::numeric_limits<double>::quiet_NaN();
    double axis2 = std::numeric_limits<double>::quiet_NaN();
    double transmit = std::numeric_limits<double>::quiet_NaN();
    double reflect = std::numeric_limits<double>::quiet_NaN();
    double loss = std::numeric_limits<double>::quiet_NaN();
    double fidelity = std::numeric_limits<double>::quiet_NaN();
    double t_re = std::numeric_limits<double>::quiet_NaN();
    double t_im = std::numeric_limits<double>::quiet_NaN();
    double r_re = std::numeric_limits<double>::quiet_NaN();
    double r_im = std::numeric_limits<double>::quiet_NaN();
    std::string error;

    bool ok() const { return error.empty(); }
};

namespace detail {

struct SweepContext {
    ModelParams params;
    ProbeEnergy probe;
    double alpha = std::numeric_limits<double>::quiet_NaN();
};

inline void apply_axis(SweepContext& ctx, SweepParameter parameter, double value)
{
    switch (parameter) {
    case SweepParameter::delta:
        ctx.probe = probe_at_detuning(ctx.params, value);
        break;
    case SweepParameter::rabi:
        ctx.params.rabi = value;
        break;
    case SweepParameter::delta_drive:
        ctx.params.delta_drive = value;
        break;
    case SweepParameter::big_gamma1:
        ctx.params.big_gamma1 = value;
        break;
    case SweepParameter::big_gamma2:
        ctx.params.big_gamma2 = value;
        break;
    case SweepParameter::alpha:
        ctx.alpha = value;
        break;
    }
}

inline SweepRecord evaluate_point(const SweepContext& ctx, Channel channel)
{
    SweepRecord rec;
    try {
        validate(ctx.params);
        ChannelProbs probs;
        if (std::isnan(ctx.alpha)) {
            ScatterAmps amps;
            switch (channel) {
            case Channel::full: amps = scatter(ctx.params, ctx.probe); break;
            case Channel::left: amps = scatter_left(ctx.params, ctx.probe); break;
            case Channel::right: amps = scatter_right(ctx.params, ctx.probe); break;
            }
            probs = probabilities(amps);
            rec.t_re = amps.t.real();
            rec.t_im = amps.t.imag();
            rec.r_re = amps.r.real();
            rec.r_im = amps.r.imag();
        } else {
            probs = polarized_probabilities(ctx.params, ctx.probe, PolarizationState(ctx.alpha));
        }
        rec.transmit = probs.transmit;
        rec.reflect = probs.reflect;
        rec.loss = probs.loss;
    } catch (const std::exception& e) {
        rec.error = e.what();
        return rec;
    }
    try {
        rec.fidelity = fidelity(ctx.params, ctx.probe);
    } catch (const std::exception& e) {
        rec.error = std::string("fidelity: ") + e.what();
    }
    return rec;
}

} // namespace detail

inline std::vector<SweepRecord> sweep1d(const ModelParams& base, const ProbeEnergy& probe_base,
                                        const SweepAxis& axis, Channel channel)
{
    validate(axis);
    std::vector<SweepRecord> records;
    records.reserve(static_cast<std::size_t>(axis.count));
    for (int i = 0; i < axis.count; ++i) {
        detail::SweepContext ctx{base, probe_base};
        const double v = axis_value(axis, i);
        detail::apply_axis(ctx, axis.parameter, v);
        SweepRecord rec = detail::evaluate_point(ctx, channel);
        rec.axis1 = v;
        records.push_back(std::move(rec));
    }
    return records;
}

/// Row-major: axis1 outer, axis2 inner.
inline std::vector<SweepRecord> sweep2d(const ModelParams& base, const ProbeEnergy& probe_base,
                                        const SweepAxis& axis1, const SweepAxis& axis2,
                                        Channel channel)
{
    validate(axis1);
    validate(axis2);
    if (axis1.parameter == axis2.parameter)
        throw ValidationError("axis1 and axis2 must sweep different parameters");
    std::vector<SweepRecord> records;
    records.reserve(static_cast<std::size_t>(axis1.count) * axis2.count);
    for (int i = 0; i < axis1.count; ++i) {
        const double v1 = axis_value(axis1, i);
        for (int j = 0; j < axis2.count; ++j) {
            const double v2 = axis_value(axis2, j);
            detail::SweepContext ctx{base, probe_base};
            detail::apply_axis(ctx, axis1.parameter, v1);
            detail::apply_axis(ctx, axis2.parameter, v2);
            SweepRecord rec = detail::evaluate_point(ctx, channel);
            rec.axis1 = v1;
            rec.axis2 = v2;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

/// Named sweep presets reproducing the standard spectra of this device.
struct FigurePreset {
    std::string name;
    ModelParams params;
    ProbeEnergy probe;
    std::vector<SweepAxis> axes; // 1 or 2
    Channel channel = Channel::full;
    std::string note;
};

/// Presets fig2a/fig2b (driven four-level transmission maps), fig3a/fig3b
/// (lossless single-channel spectra) and fig4a/fig4b (fidelity maps).
/// Grid ranges are defaults recorded in the output metadata; unknown names
/// throw UnknownPreset.
inline FigurePreset figure_preset(std::string_view name)
{
    ModelParams p; // gamma_i = 1, big_gamma_i = 10, degenerate omega2 = omega3
    FigurePreset preset;
    preset.name = std::string(name);
    preset.probe = probe_at_detuning(p, 0.0);

    const SweepAxis delta_fig2{SweepParameter::delta, -50.0, 50.0, 1001};
    const SweepAxis delta_fig3{SweepParameter::delta, -100.0, 100.0, 1001};

    if (name == "fig2a") {
        preset.params = p;
        preset.axes = {delta_fig2, SweepAxis{SweepParameter::rabi, 0.0, 20.0, 1001}};
        preset.channel = Channel::full;
        preset.note = "transmission vs (delta, rabi); dissipative atom, no drive detuning";
    } else if (name == "fig2b") {
        preset.params = p;
        preset.params.rabi = 10.0;
        preset.axes = {delta_fig2, SweepAxis{SweepParameter::delta_drive, -20.0, 20.0, 1001}};
        preset.channel = Channel::full;
        preset.note = "transmission vs (delta, delta_drive); dissipative atom, rabi = 10";
    } else if (name == "fig3a") {
        preset.params = p;
        preset.params.gamma2 = preset.params.gamma3 = preset.params.gamma4 = 0.0;
        preset.params.rabi = 50.0;
        preset.axes = {delta_fig3};
        preset.channel = Channel::left;
        preset.note = "lossless left-channel spectrum; wide induced-transparency window at rabi = 50";
    } else if (name == "fig3b") {
        preset.params = p;
        preset.params.gamma2 = preset.params.gamma3 = preset.params.gamma4 = 0.0;
        preset.params.rabi = 50.0; // t_R ignores the drive; keeps F defined everywhere
        preset.axes = {delta_fig3};
        preset.channel = Channel::right;
        preset.note = "lossless right-channel spectrum; bare two-level dip at delta = 0";
    } else if (name == "fig4a") {
        preset.params = p;
        preset.axes = {delta_fig2, SweepAxis{SweepParameter::rabi, 0.0, 50.0, 1001}};
        preset.channel = Channel::full;
        preset.note = "fidelity vs (delta, rabi); dissipative atom";
    } else if (name == "fig4b") {
        preset.params = p;
        preset.params.rabi = 50.0;
        preset.axes = {delta_fig2};
        preset.channel = Channel::full;
        preset.note = "fidelity vs delta at rabi = 50; dissipative atom";
    } else {
        throw UnknownPreset("unknown figure preset '" + std::string(name) + "'");
    }
    return preset;
}

} // namespace wqed

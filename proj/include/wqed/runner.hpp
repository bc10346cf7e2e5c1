#pragma once

#include <ostream>
#include <string>

#include "wqed/emit.hpp"

// Subcommand bodies shared by the command-line tool and the test suite.
// Each runner writes one artifact to `out` and returns the process exit
// status: 0 on success, 2 on a failed numerical verification. Configuration
// problems throw before anything is written.

namespace wqed {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

namespace detail {

inline void emit_sweep(std::ostream& out, const RunConfig& cfg, const std::string& command,
                       const std::vector<std::string>& axis_names,
                       const std::vector<SweepRecord>& records)
{
    const nlohmann::json meta = resolved_config_json(cfg, command);
    if (cfg.format == OutputFormat::csv)
        write_sweep_csv(out, meta, axis_names, records);
    else
        write_sweep_jsonl(out, meta, axis_names, records);
}

} // namespace detail

inline int run_spectrum(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg.model);
    const auto records = sweep1d(cfg.model, cfg.probe, cfg.axis1, cfg.channel);
    detail::emit_sweep(out, cfg, "spectrum", {to_string(cfg.axis1.parameter)}, records);
    return kExitOk;
}

inline int run_sweep2d(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg.model);
    if (!cfg.axis2)
        throw ValidationError("sweep2d requires axis2");
    const auto records = sweep2d(cfg.model, cfg.probe, cfg.axis1, *cfg.axis2, cfg.channel);
    detail::emit_sweep(out, cfg, "sweep2d",
                       {to_string(cfg.axis1.parameter), to_string(cfg.axis2->parameter)}, records);
    return kExitOk;
}

inline int run_fidelity(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg.model);
    if (!cfg.axis2)
        throw ValidationError("fidelity requires axis2");
    const auto records = sweep2d(cfg.model, cfg.probe, cfg.axis1, *cfg.axis2, cfg.channel);
    detail::emit_sweep(out, cfg, "fidelity",
                       {to_string(cfg.axis1.parameter), to_string(cfg.axis2->parameter)}, records);
    return kExitOk;
}

inline int run_figure(const RunConfig& cfg, std::ostream& out)
{
    FigurePreset preset = figure_preset(cfg.figure_name);
    if (cfg.figure_count1) {
        preset.axes[0].count = *cfg.figure_count1;
        validate(preset.axes[0]);
    }
    if (cfg.figure_count2 && preset.axes.size() > 1) {
        preset.axes[1].count = *cfg.figure_count2;
        validate(preset.axes[1]);
    }

    RunConfig resolved = cfg;
    resolved.model = preset.params;
    resolved.probe = preset.probe;
    resolved.axis1 = preset.axes[0];
    resolved.axis2 = preset.axes.size() > 1 ? std::optional<SweepAxis>(preset.axes[1]) : std::nullopt;
    resolved.channel = preset.channel;

    nlohmann::json meta = resolved_config_json(resolved, "figure");
    meta["note"] = preset.note;

    std::vector<SweepRecord> records;
    std::vector<std::string> axis_names{to_string(preset.axes[0].parameter)};
    if (preset.axes.size() > 1) {
        records = sweep2d(preset.params, preset.probe, preset.axes[0], preset.axes[1], preset.channel);
        axis_names.push_back(to_string(preset.axes[1].parameter));
    } else {
        records = sweep1d(preset.params, preset.probe, preset.axes[0], preset.channel);
    }

    if (cfg.format == OutputFormat::csv)
        write_sweep_csv(out, meta, axis_names, records);
    else
        write_sweep_jsonl(out, meta, axis_names, records);
    return kExitOk;
}

inline int run_malus(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg.model);
    const PolarizationState pol(cfg.alpha);

    MalusReport report;
    report.alpha = cfg.alpha;
    report.analytic = polarized_probabilities(cfg.model, cfg.probe, pol);
    report.counts = simulate_photons(cfg.model, cfg.probe, pol, cfg.photons, cfg.seed);
    report.check = binomial_check(report.counts, report.analytic.transmit, report.z);

    const nlohmann::json meta = resolved_config_json(cfg, "malus");
    if (cfg.format == OutputFormat::csv)
        write_malus_csv(out, meta, report);
    else
        write_malus_jsonl(out, meta, report);
    return report.check.pass ? kExitOk : kExitVerification;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out)
{
    const auto suites = run_verification(cfg.draws, cfg.seed);

    const nlohmann::json meta = resolved_config_json(cfg, "verify");
    if (cfg.format == OutputFormat::csv)
        write_verify_csv(out, meta, suites);
    else
        write_verify_jsonl(out, meta, suites);

    for (const auto& s : suites)
        if (!s.pass) return kExitVerification;
    return kExitOk;
}

} // namespace wqed

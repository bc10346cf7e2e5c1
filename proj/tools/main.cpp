// Command-line front end: config ingestion, subcommand dispatch and CSV/JSONL
// emission for the waveguide scattering library.
//
// Exit codes: 0 success, 1 usage/config error, 2 numerical or verification
// failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wqed/runner.hpp"
#include "wqed/version.hpp"

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw wqed::ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct AxisFlags {
    std::string parameter;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
};

void add_axis_flags(CLI::App* cmd, const std::string& suffix, AxisFlags& flags)
{
    cmd->add_option("--axis" + suffix, flags.parameter,
                    "swept parameter (delta|rabi|delta_drive|big_gamma1|big_gamma2|alpha)");
    cmd->add_option("--start" + suffix, flags.start, "grid start value");
    cmd->add_option("--stop" + suffix, flags.stop, "grid stop value");
    cmd->add_option("--count" + suffix, flags.count, "grid point count (>= 2)");
}

void apply_axis_flags(const CLI::App* cmd, const std::string& suffix, const AxisFlags& flags,
                      wqed::SweepAxis& axis)
{
    if (cmd->count("--axis" + suffix))
        axis.parameter = wqed::parse_sweep_parameter(flags.parameter);
    if (cmd->count("--start" + suffix)) axis.start = flags.start;
    if (cmd->count("--stop" + suffix)) axis.stop = flags.stop;
    if (cmd->count("--count" + suffix)) axis.count = flags.count;
    wqed::validate(axis);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{std::string(wqed::kToolName) +
                 " - single-photon scattering on a driven four-level waveguide atom"};
    app.set_version_flag("--version", std::string(wqed::kToolName) + " " + wqed::kToolVersion);
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string config_path;
    std::string output_path;
    std::string format_name;
    app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
    app.add_option("--output", output_path, "output path (default: stdout)");
    app.add_option("--format", format_name, "output format: csv|jsonl");

    auto* spectrum = app.add_subcommand("spectrum", "1D sweep of one parameter");
    AxisFlags spectrum_axis;
    add_axis_flags(spectrum, "", spectrum_axis);
    std::string channel_name;
    spectrum->add_option("--channel", channel_name, "amplitude source: full|left|right");

    auto* sweep2 = app.add_subcommand("sweep2d", "2D sweep, row-major (axis1 outer)");
    AxisFlags sweep2_axis1, sweep2_axis2;
    add_axis_flags(sweep2, "1", sweep2_axis1);
    add_axis_flags(sweep2, "2", sweep2_axis2);
    std::string sweep2_channel;
    sweep2->add_option("--channel", sweep2_channel, "amplitude source: full|left|right");

    auto* figure = app.add_subcommand("figure", "run a named preset sweep");
    std::string figure_name;
    figure->add_option("name", figure_name, "fig2a|fig2b|fig3a|fig3b|fig4a|fig4b")->required();
    int figure_count1 = 0, figure_count2 = 0;
    figure->add_option("--count1", figure_count1, "override axis1 grid count");
    figure->add_option("--count2", figure_count2, "override axis2 grid count");

    auto* fidelity_cmd = app.add_subcommand("fidelity", "fidelity map over a 2D grid");
    AxisFlags fid_axis1, fid_axis2;
    add_axis_flags(fidelity_cmd, "1", fid_axis1);
    add_axis_flags(fidelity_cmd, "2", fid_axis2);

    auto* malus = app.add_subcommand("malus", "photon-counting run at one polarization angle");
    double alpha = 0.0;
    std::uint64_t photons = 0, malus_seed = 0;
    malus->add_option("--alpha", alpha, "polarization mixing angle in radians, [0, pi/2]");
    malus->add_option("--n", photons, "number of photons");
    malus->add_option("--seed", malus_seed, "random seed");

    auto* verify = app.add_subcommand("verify", "randomized flux/oracle verification suites");
    std::uint64_t draws = 0, verify_seed = 0;
    verify->add_option("--draws", draws, "draws per suite");
    verify->add_option("--seed", verify_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help/version or the usage error
        return code == 0 ? 0 : wqed::kExitUsage;
    }

    try {
        wqed::RunConfig cfg = wqed::parse_config(config_path.empty() ? std::string("{}")
                                                                     : read_file(config_path));
        if (app.count("--output")) cfg.output = output_path;
        if (app.count("--format")) cfg.format = wqed::parse_output_format(format_name);

        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!cfg.output.empty()) {
            file.open(cfg.output, std::ios::binary);
            if (!file)
                throw wqed::ConfigError("cannot open output file '" + cfg.output + "'");
            out = &file;
        }

        int status = wqed::kExitOk;
        if (spectrum->parsed()) {
            apply_axis_flags(spectrum, "", spectrum_axis, cfg.axis1);
            if (spectrum->count("--channel")) cfg.channel = wqed::parse_channel(channel_name);
            status = wqed::run_spectrum(cfg, *out);
        } else if (sweep2->parsed()) {
            if (!cfg.axis2) cfg.axis2 = wqed::SweepAxis{wqed::SweepParameter::rabi, 0.0, 50.0, 201};
            apply_axis_flags(sweep2, "1", sweep2_axis1, cfg.axis1);
            apply_axis_flags(sweep2, "2", sweep2_axis2, *cfg.axis2);
            if (sweep2->count("--channel")) cfg.channel = wqed::parse_channel(sweep2_channel);
            status = wqed::run_sweep2d(cfg, *out);
        } else if (figure->parsed()) {
            cfg.figure_name = figure_name;
            if (figure->count("--count1")) cfg.figure_count1 = figure_count1;
            if (figure->count("--count2")) cfg.figure_count2 = figure_count2;
            status = wqed::run_figure(cfg, *out);
        } else if (fidelity_cmd->parsed()) {
            if (!cfg.axis2) cfg.axis2 = wqed::SweepAxis{wqed::SweepParameter::rabi, 0.0, 50.0, 201};
            apply_axis_flags(fidelity_cmd, "1", fid_axis1, cfg.axis1);
            apply_axis_flags(fidelity_cmd, "2", fid_axis2, *cfg.axis2);
            status = wqed::run_fidelity(cfg, *out);
        } else if (malus->parsed()) {
            if (malus->count("--alpha")) cfg.alpha = alpha;
            if (malus->count("--n")) cfg.photons = photons;
            if (malus->count("--seed")) cfg.seed = malus_seed;
            status = wqed::run_malus(cfg, *out);
        } else if (verify->parsed()) {
            if (verify->count("--draws")) cfg.draws = draws;
            if (verify->count("--seed")) cfg.seed = verify_seed;
            status = wqed::run_verify(cfg, *out);
        }
        return status;
    } catch (const wqed::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return wqed::kExitUsage;
    } catch (const wqed::UnknownPreset& e) {
        std::cerr << "error: " << e.what() << "\n";
        return wqed::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return wqed::kExitVerification;
    }
}

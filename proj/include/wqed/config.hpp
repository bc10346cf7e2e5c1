#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "wqed/model.hpp"
#include "wqed/sweep.hpp"

// Run configuration: a JSON document with a model block, a probe block and
// per-command blocks. Unknown keys are rejected so typos cannot silently
// fall back to defaults; the fully resolved configuration is echoed into
// every output's metadata header.

namespace wqed {

enum class OutputFormat { csv, jsonl };

inline const char* to_string(OutputFormat f)
{
    return f == OutputFormat::csv ? "csv" : "jsonl";
}

inline OutputFormat parse_output_format(std::string_view name)
{
    if (name == "csv") return OutputFormat::csv;
    if (name == "jsonl") return OutputFormat::jsonl;
    throw ValidationError("format must be 'csv' or 'jsonl'");
}

struct RunConfig {
    ModelParams model{};
    ProbeEnergy probe{100.0}; // defaults to delta = 0 against omega2 = 100

    // spectrum / sweep2d / fidelity; figure presets carry their own grids
    SweepAxis axis1{SweepParameter::delta, -50.0, 50.0, 201};
    std::optional<SweepAxis> axis2;
    Channel channel = Channel::full;

    // figure
    std::string figure_name;
    std::optional<int> figure_count1; // grid-size overrides for presets
    std::optional<int> figure_count2;

    // malus
    double alpha = 0.0;
    std::uint64_t photons = 1000000;

    // verify
    std::uint64_t draws = 10000;

    // shared
    std::uint64_t seed = 1;
    std::string output; // empty = stdout
    OutputFormat format = OutputFormat::csv;
};

namespace detail {

using json = nlohmann::json;

inline void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                                const std::string& prefix)
{
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool found = false;
        for (const char* k : known)
            if (key == k) { found = true; break; }
        if (!found)
            throw ValidationError("unknown key '" + prefix + key + "'");
    }
}

inline double require_number(const json& v, const std::string& where)
{
    if (!v.is_number())
        throw ValidationError("'" + where + "' must be a number");
    return v.get<double>();
}

inline std::uint64_t require_uint(const json& v, const std::string& where)
{
    if (!v.is_number_unsigned())
        throw ValidationError("'" + where + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

inline std::string require_string(const json& v, const std::string& where)
{
    if (!v.is_string())
        throw ValidationError("'" + where + "' must be a string");
    return v.get<std::string>();
}

inline void apply_model_block(ModelParams& model, const json& obj)
{
    reject_unknown_keys(obj,
                        {"omega2", "omega3", "delta_drive", "rabi", "gamma2", "gamma3",
                         "gamma4", "big_gamma1", "big_gamma2", "v_group"},
                        "model.");
    const struct { const char* name; double* slot; } fields[] = {
        {"omega2", &model.omega2},         {"omega3", &model.omega3},
        {"delta_drive", &model.delta_drive}, {"rabi", &model.rabi},
        {"gamma2", &model.gamma2},         {"gamma3", &model.gamma3},
        {"gamma4", &model.gamma4},         {"big_gamma1", &model.big_gamma1},
        {"big_gamma2", &model.big_gamma2}, {"v_group", &model.v_group},
    };
    for (const auto& f : fields)
        if (obj.contains(f.name))
            *f.slot = require_number(obj.at(f.name), std::string("model.") + f.name);
}

inline SweepAxis parse_axis_block(const json& obj, const std::string& prefix,
                                  const SweepAxis& defaults)
{
    reject_unknown_keys(obj, {"parameter", "start", "stop", "count"}, prefix);
    SweepAxis axis = defaults;
    if (obj.contains("parameter"))
        axis.parameter = parse_sweep_parameter(require_string(obj.at("parameter"), prefix + "parameter"));
    if (obj.contains("start")) axis.start = require_number(obj.at("start"), prefix + "start");
    if (obj.contains("stop")) axis.stop = require_number(obj.at("stop"), prefix + "stop");
    if (obj.contains("count")) {
        const json& c = obj.at("count");
        if (!c.is_number_integer())
            throw ValidationError("'" + prefix + "count' must be an integer");
        axis.count = c.get<int>();
    }
    validate(axis);
    return axis;
}

} // namespace detail

/// Parse and validate a configuration document, applying defaults. Throws
/// ParseError (with line/column) on malformed JSON and ValidationError
/// (naming the key) on invalid content.
inline RunConfig parse_config(const std::string& text)
{
    using detail::json;

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // translate byte offset to line/column
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') { ++line; column = 1; }
            else ++column;
        }
        throw ParseError("config parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what());
    }
    if (!doc.is_object())
        throw ValidationError("config document must be a JSON object");

    detail::reject_unknown_keys(doc,
                                {"model", "probe", "output", "format", "seed", "spectrum",
                                 "sweep2d", "fidelity", "figure", "malus", "verify"},
                                "");

    RunConfig cfg;
    if (doc.contains("model")) {
        if (!doc.at("model").is_object())
            throw ValidationError("'model' must be an object");
        detail::apply_model_block(cfg.model, doc.at("model"));
    }
    validate(cfg.model);
    cfg.probe = probe_at_detuning(cfg.model, 0.0);

    if (doc.contains("probe")) {
        const json& probe = doc.at("probe");
        if (!probe.is_object())
            throw ValidationError("'probe' must be an object");
        detail::reject_unknown_keys(probe, {"omega", "delta"}, "probe.");
        if (probe.contains("omega") && probe.contains("delta"))
            throw ValidationError("'probe' takes either omega or delta, not both");
        if (probe.contains("omega"))
            cfg.probe.omega = detail::require_number(probe.at("omega"), "probe.omega");
        else if (probe.contains("delta"))
            cfg.probe = probe_at_detuning(cfg.model,
                                          detail::require_number(probe.at("delta"), "probe.delta"));
    }

    if (doc.contains("output")) cfg.output = detail::require_string(doc.at("output"), "output");
    if (doc.contains("format"))
        cfg.format = parse_output_format(detail::require_string(doc.at("format"), "format"));
    if (doc.contains("seed")) cfg.seed = detail::require_uint(doc.at("seed"), "seed");

    if (doc.contains("spectrum")) {
        const json& block = doc.at("spectrum");
        if (!block.is_object())
            throw ValidationError("'spectrum' must be an object");
        detail::reject_unknown_keys(block, {"axis", "channel"}, "spectrum.");
        if (block.contains("axis"))
            cfg.axis1 = detail::parse_axis_block(block.at("axis"), "spectrum.axis.", cfg.axis1);
        if (block.contains("channel"))
            cfg.channel = parse_channel(detail::require_string(block.at("channel"), "spectrum.channel"));
    }

    auto parse_two_axis_block = [&](const json& block, const std::string& prefix,
                                    const SweepAxis& ax1_default, const SweepAxis& ax2_default) {
        detail::reject_unknown_keys(block, {"axis1", "axis2", "channel"}, prefix);
        cfg.axis1 = block.contains("axis1")
                        ? detail::parse_axis_block(block.at("axis1"), prefix + "axis1.", ax1_default)
                        : ax1_default;
        cfg.axis2 = block.contains("axis2")
                        ? detail::parse_axis_block(block.at("axis2"), prefix + "axis2.", ax2_default)
                        : ax2_default;
        if (block.contains("channel"))
            cfg.channel = parse_channel(detail::require_string(block.at("channel"), prefix + "channel"));
    };

    const SweepAxis delta_default{SweepParameter::delta, -50.0, 50.0, 201};
    const SweepAxis rabi_default{SweepParameter::rabi, 0.0, 50.0, 201};
    if (doc.contains("sweep2d")) {
        if (!doc.at("sweep2d").is_object())
            throw ValidationError("'sweep2d' must be an object");
        parse_two_axis_block(doc.at("sweep2d"), "sweep2d.", delta_default, rabi_default);
    }
    if (doc.contains("fidelity")) {
        if (!doc.at("fidelity").is_object())
            throw ValidationError("'fidelity' must be an object");
        parse_two_axis_block(doc.at("fidelity"), "fidelity.", delta_default, rabi_default);
    }

    if (doc.contains("figure")) {
        const json& block = doc.at("figure");
        if (!block.is_object())
            throw ValidationError("'figure' must be an object");
        detail::reject_unknown_keys(block, {"name", "count1", "count2"}, "figure.");
        if (block.contains("name"))
            cfg.figure_name = detail::require_string(block.at("name"), "figure.name");
        if (block.contains("count1"))
            cfg.figure_count1 = static_cast<int>(detail::require_uint(block.at("count1"), "figure.count1"));
        if (block.contains("count2"))
            cfg.figure_count2 = static_cast<int>(detail::require_uint(block.at("count2"), "figure.count2"));
    }

    if (doc.contains("malus")) {
        const json& block = doc.at("malus");
        if (!block.is_object())
            throw ValidationError("'malus' must be an object");
        detail::reject_unknown_keys(block, {"alpha", "n", "seed"}, "malus.");
        if (block.contains("alpha")) cfg.alpha = detail::require_number(block.at("alpha"), "malus.alpha");
        if (block.contains("n")) cfg.photons = detail::require_uint(block.at("n"), "malus.n");
        if (block.contains("seed")) cfg.seed = detail::require_uint(block.at("seed"), "malus.seed");
    }

    if (doc.contains("verify")) {
        const json& block = doc.at("verify");
        if (!block.is_object())
            throw ValidationError("'verify' must be an object");
        detail::reject_unknown_keys(block, {"draws", "seed"}, "verify.");
        if (block.contains("draws")) cfg.draws = detail::require_uint(block.at("draws"), "verify.draws");
        if (block.contains("seed")) cfg.seed = detail::require_uint(block.at("seed"), "verify.seed");
    }

    return cfg;
}

/// Fully resolved configuration as JSON, for metadata headers.
inline nlohmann::json resolved_config_json(const RunConfig& cfg, const std::string& command)
{
    nlohmann::json j;
    j["command"] = command;
    j["model"] = {
        {"omega2", cfg.model.omega2},         {"omega3", cfg.model.omega3},
        {"delta_drive", cfg.model.delta_drive}, {"rabi", cfg.model.rabi},
        {"gamma2", cfg.model.gamma2},         {"gamma3", cfg.model.gamma3},
        {"gamma4", cfg.model.gamma4},         {"big_gamma1", cfg.model.big_gamma1},
        {"big_gamma2", cfg.model.big_gamma2}, {"v_group", cfg.model.v_group},
    };
    j["probe"] = {{"omega", cfg.probe.omega}, {"delta", detuning(cfg.model, cfg.probe)}};
    j["format"] = to_string(cfg.format);

    auto axis_json = [](const SweepAxis& a) {
        return nlohmann::json{{"parameter", to_string(a.parameter)},
                              {"start", a.start},
                              {"stop", a.stop},
                              {"count", a.count}};
    };
    if (command == "spectrum" || command == "sweep2d" || command == "fidelity") {
        j["axis1"] = axis_json(cfg.axis1);
        if (cfg.axis2) j["axis2"] = axis_json(*cfg.axis2);
        j["channel"] = to_string(cfg.channel);
    } else if (command == "figure") {
        j["figure"] = cfg.figure_name;
        j["axis1"] = axis_json(cfg.axis1);
        if (cfg.axis2) j["axis2"] = axis_json(*cfg.axis2);
        j["channel"] = to_string(cfg.channel);
    } else if (command == "malus") {
        j["alpha"] = cfg.alpha;
        j["n"] = cfg.photons;
        j["seed"] = cfg.seed;
    } else if (command == "verify") {
        j["draws"] = cfg.draws;
        j["seed"] = cfg.seed;
    }
    return j;
}

} // namespace wqed

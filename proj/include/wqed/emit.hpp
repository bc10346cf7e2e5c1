#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wqed/config.hpp"
#include "wqed/malus.hpp"
#include "wqed/sweep.hpp"
#include "wqed/verify.hpp"
#include "wqed/version.hpp"

// CSV and JSON-lines writers. Every file starts with a metadata header
// carrying the tool version and the fully resolved configuration, so each
// output is reproducible from its own header. Doubles are printed with 17
// significant digits (round-trips binary64 exactly).

namespace wqed {

inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace detail {

inline void write_csv_meta(std::ostream& out, const nlohmann::json& meta)
{
    out << "# tool: " << kToolName << " " << kToolVersion << "\n";
    out << "# config: " << meta.dump() << "\n";
}

inline nlohmann::json jsonl_meta(const nlohmann::json& meta)
{
    return nlohmann::json{{"tool", kToolName}, {"version", kToolVersion}, {"config", meta}};
}

} // namespace detail

inline void write_sweep_csv(std::ostream& out, const nlohmann::json& meta,
                            const std::vector<std::string>& axis_names,
                            const std::vector<SweepRecord>& records)
{
    detail::write_csv_meta(out, meta);
    out << axis_names[0];
    if (axis_names.size() > 1) out << "," << axis_names[1];
    out << ",transmit,reflect,loss,fidelity,t_re,t_im,r_re,r_im\n";
    for (const auto& rec : records) {
        out << format_double(rec.axis1);
        if (axis_names.size() > 1) out << "," << format_double(rec.axis2);
        out << "," << format_double(rec.transmit) << "," << format_double(rec.reflect) << ","
            << format_double(rec.loss) << "," << format_double(rec.fidelity) << ","
            << format_double(rec.t_re) << "," << format_double(rec.t_im) << ","
            << format_double(rec.r_re) << "," << format_double(rec.r_im) << "\n";
    }
}

inline void write_sweep_jsonl(std::ostream& out, const nlohmann::json& meta,
                              const std::vector<std::string>& axis_names,
                              const std::vector<SweepRecord>& records)
{
    out << detail::jsonl_meta(meta).dump() << "\n";
    for (const auto& rec : records) {
        nlohmann::json j;
        j[axis_names[0]] = rec.axis1;
        if (axis_names.size() > 1) j[axis_names[1]] = rec.axis2;
        j["transmit"] = rec.transmit;
        j["reflect"] = rec.reflect;
        j["loss"] = rec.loss;
        j["fidelity"] = rec.fidelity;
        j["t_re"] = rec.t_re;
        j["t_im"] = rec.t_im;
        j["r_re"] = rec.r_re;
        j["r_im"] = rec.r_im;
        if (!rec.error.empty()) j["error"] = rec.error;
        out << j.dump() << "\n";
    }
}

// NaN fields rely on nlohmann's serializer, which emits them as null.

struct MalusReport {
    double alpha = 0.0;
    TrialCounts counts;
    ChannelProbs analytic;
    BinomialCheck check;
    double z = 4.0;
};

inline void write_malus_csv(std::ostream& out, const nlohmann::json& meta, const MalusReport& r)
{
    detail::write_csv_meta(out, meta);
    out << "alpha,n_total,n_transmitted,n_reflected,n_lost,seed,p_hat,"
           "analytic_transmit,analytic_reflect,analytic_loss,z,halfwidth,ci_pass\n";
    out << format_double(r.alpha) << "," << r.counts.n_total << "," << r.counts.n_transmitted
        << "," << r.counts.n_reflected << "," << r.counts.n_lost << "," << r.counts.seed << ","
        << format_double(r.check.p_hat) << "," << format_double(r.analytic.transmit) << ","
        << format_double(r.analytic.reflect) << "," << format_double(r.analytic.loss) << ","
        << format_double(r.z) << "," << format_double(r.check.halfwidth) << ","
        << (r.check.pass ? 1 : 0) << "\n";
}

inline void write_malus_jsonl(std::ostream& out, const nlohmann::json& meta, const MalusReport& r)
{
    out << detail::jsonl_meta(meta).dump() << "\n";
    nlohmann::json j{{"alpha", r.alpha},
                     {"n_total", r.counts.n_total},
                     {"n_transmitted", r.counts.n_transmitted},
                     {"n_reflected", r.counts.n_reflected},
                     {"n_lost", r.counts.n_lost},
                     {"seed", r.counts.seed},
                     {"p_hat", r.check.p_hat},
                     {"analytic_transmit", r.analytic.transmit},
                     {"analytic_reflect", r.analytic.reflect},
                     {"analytic_loss", r.analytic.loss},
                     {"z", r.z},
                     {"halfwidth", r.check.halfwidth},
                     {"ci_pass", r.check.pass}};
    out << j.dump() << "\n";
}

inline void write_verify_csv(std::ostream& out, const nlohmann::json& meta,
                             const std::vector<VerificationSuite>& suites)
{
    detail::write_csv_meta(out, meta);
    out << "suite,draws,max_abs_dt,max_abs_dr,max_flux_defect,threshold,pass\n";
    for (const auto& s : suites) {
        out << s.name << "," << s.draws << "," << format_double(s.max_dt) << ","
            << format_double(s.max_dr) << "," << format_double(s.max_flux_defect) << ","
            << format_double(s.threshold) << "," << (s.pass ? 1 : 0) << "\n";
    }
}

inline void write_verify_jsonl(std::ostream& out, const nlohmann::json& meta,
                               const std::vector<VerificationSuite>& suites)
{
    out << detail::jsonl_meta(meta).dump() << "\n";
    for (const auto& s : suites) {
        nlohmann::json j{{"suite", s.name},       {"draws", s.draws},
                         {"max_abs_dt", s.max_dt}, {"max_abs_dr", s.max_dr},
                         {"max_flux_defect", s.max_flux_defect},
                         {"threshold", s.threshold},
                         {"pass", s.pass}};
        out << j.dump() << "\n";
    }
}

} // namespace wqed

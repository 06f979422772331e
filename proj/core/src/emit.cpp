#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qsat/pipeline.hpp"

namespace qsat::pipeline {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json amplifier_json(const AmplifierResult& a) {
    Json j;
    j["kind"] = std::string(to_string(a.kind));
    j["satisfiable"] = a.satisfiable;
    if (const auto* c = std::get_if<chaos::ChaosVerdict>(&a.detail)) {
        j["m_hit"] = c->m_hit ? Json(*c->m_hit) : Json(nullptr);
        j["window"] = c->window;
        j["lower_bound"] = c->lower_bound;
        j["final_x"] = c->trace.xs.empty() ? 0.0 : c->trace.xs.back();
    } else if (const auto* s = std::get_if<StochasticOutcome>(&a.detail)) {
        j["case"] = s->damping_case ? "damping" : "coherent";
        j["trivially_sat"] = s->trivially_sat;
        j["damped"] = s->verdict.damped;
        j["tail_mean"] = s->verdict.tail_mean;
        j["fitted_rate"] = s->verdict.fitted_rate ? Json(*s->verdict.fitted_rate) : Json(nullptr);
        j["samples"] = s->verdict.trajectory.size();
    }
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace

std::string report_to_json(const Report& r, bool include_timing) {
    Json j;
    j["schema"] = "qsat.report.v1";
    j["input"] = r.input;
    j["formula"] = {{"n", r.formula.n}, {"m", r.formula.m}, {"mu", r.formula.mu}};
    j["q_squared"] = {{"exact", r.q_squared.exact ? Json(r.q_squared.exact->to_string()) : Json(nullptr)},
                      {"value", r.q_squared.value},
                      {"source", std::string(to_string(r.q_squared.source))}};
    j["amplifier"] = amplifier_json(r.amplifier);
    if (r.reference) {
        j["reference"] = {{"satisfiable", r.reference->satisfiable},
                          {"r", r.reference->r},
                          {"total", r.reference->total}};
    } else {
        j["reference"] = nullptr;
    }
    j["agreement"] = r.agreement ? Json(*r.agreement) : Json(nullptr);
    j["warnings"] = r.warnings;
    if (include_timing) j["timing_ms"] = r.timing_ms;
    return j.dump(2) + "\n";
}

std::string chaos_trace_csv(const chaos::ChaosTrace& trace) {
    std::string out = "m,x_m\n";
    for (std::size_t m = 0; m < trace.xs.size(); ++m) out += std::to_string(m) + "," + fmt(trace.xs[m]) + "\n";
    return out;
}

std::string stochastic_trace_csv(const std::vector<stochastic::TrajectoryPoint>& trajectory) {
    std::string out = "t,p1,coh_abs,coh_phase\n";
    for (const auto& p : trajectory) {
        out += fmt(p.t) + "," + fmt(p.p1) + "," + fmt(p.coh_abs) + "," + fmt(p.coh_phase) + "\n";
    }
    return out;
}

void emit(const Report& r, Format format, const std::filesystem::path& path) {
    if (format == Format::Json) {
        write_file(path, report_to_json(r));
        return;
    }
    if (const auto* c = std::get_if<chaos::ChaosVerdict>(&r.amplifier.detail)) {
        write_file(path, chaos_trace_csv(c->trace));
    } else if (const auto* s = std::get_if<StochasticOutcome>(&r.amplifier.detail)) {
        write_file(path, stochastic_trace_csv(s->verdict.trajectory));
    } else {
        throw std::invalid_argument("CSV output needs an amplifier trace (chaos or stochastic)");
    }
}

}  // namespace qsat::pipeline

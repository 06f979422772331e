// qsat: run the quantum SAT pipeline on a DIMACS file, or regression-check a corpus.
//
//   qsat solve --input F.cnf --mode oracle --amplifier chaos
//   qsat self-check --corpus corpus/
//
// Exit codes: 0 verdict produced (or 10 SAT / 20 UNSAT with --exit-verdict),
// 1 self-check disagreement, 64 usage, 65 bad input data, 66 I/O, 70 internal.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsat/error.hpp"
#include "qsat/pipeline.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kDisagreement = 1,
    kSat = 10,
    kUnsat = 20,
    kUsage = 64,
    kDataError = 65,
    kIoError = 66,
    kInternal = 70,
};

void print_verdict(const qsat::pipeline::Report& r) {
    using qsat::pipeline::to_string;
    std::printf("formula: n=%u m=%zu mu=%u\n", r.formula.n, r.formula.m, r.formula.mu);
    std::printf("q^2 (%s): %s%.17g\n", std::string(to_string(r.q_squared.source)).c_str(),
                r.q_squared.exact ? (r.q_squared.exact->to_string() + " = ").c_str() : "", r.q_squared.value);
    std::printf("amplifier %s: %s\n", std::string(to_string(r.amplifier.kind)).c_str(),
                r.amplifier.satisfiable ? "SAT" : "UNSAT");
    if (const auto* c = std::get_if<qsat::chaos::ChaosVerdict>(&r.amplifier.detail)) {
        if (c->m_hit) std::printf("  first x_m > 1/2 at m=%zu (window %zu)\n", *c->m_hit, c->window);
        else std::printf("  no crossing of 1/2 within %zu steps\n", c->window);
    } else if (const auto* s = std::get_if<qsat::pipeline::StochasticOutcome>(&r.amplifier.detail)) {
        std::printf("  %s dynamics, tail mean p1 = %.3e%s\n", s->damping_case ? "damping" : "coherent",
                    s->verdict.tail_mean, s->trivially_sat ? " (trivially SAT input)" : "");
        if (s->verdict.fitted_rate) std::printf("  fitted decay rate %.6g\n", *s->verdict.fitted_rate);
    }
    if (r.reference) {
        std::printf("brute force: %s (r=%llu of %llu), agreement: %s\n", r.reference->satisfiable ? "SAT" : "UNSAT",
                    static_cast<unsigned long long>(r.reference->r), static_cast<unsigned long long>(r.reference->total),
                    *r.agreement ? "yes" : "NO");
    }
    for (const auto& w : r.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    namespace qp = qsat::pipeline;

    CLI::App app{"Quantum SAT pipeline with chaos and stochastic-limit amplifiers"};
    app.require_subcommand(1);

    qp::PipelineConfig cfg;
    std::string mode = "oracle";
    std::string amplifier = "chaos";
    std::string format = "json";
    std::string emit_path;
    bool exit_verdict = false;

    auto* solve = app.add_subcommand("solve", "Decide one DIMACS CNF formula");
    solve->add_option("--input", cfg.input_path, "DIMACS CNF file")->required();
    solve->add_option("--mode", mode, "oracle | statevector")->check(CLI::IsMember({"oracle", "statevector"}));
    solve->add_option("--amplifier", amplifier, "chaos | stochastic | none")
        ->check(CLI::IsMember({"chaos", "stochastic", "none"}));
    solve->add_option("--a", cfg.a, "Logistic map parameter");
    solve->add_option("--gamma-re", cfg.gamma_re, "Re of the susceptibility gamma_-");
    solve->add_option("--gamma-im", cfg.gamma_im, "Im of the susceptibility gamma_-");
    solve->add_option("--e0", cfg.e0, "Lower energy level E0");
    solve->add_option("--e1", cfg.e1, "Upper energy level E1");
    solve->add_option("--horizon-factor", cfg.horizon_factor, "Classifier horizon in units of 1/Re gamma_-");
    solve->add_option("--threshold", cfg.threshold, "Damping threshold relative to p1(0)");
    solve->add_option("--emit", emit_path, "Write report (json) or trace (csv) to PATH");
    solve->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    solve->add_flag("--exit-verdict", exit_verdict, "Exit 10 on SAT, 20 on UNSAT");

    std::string corpus;
    auto* check = app.add_subcommand("self-check", "Compare all amplifiers against brute force on a corpus");
    check->add_option("--corpus", corpus, "Directory of .cnf files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) {
            cfg.mode = *qp::parse_mode(mode);
            cfg.amplifier = *qp::parse_amplifier(amplifier);
            cfg.format = *qp::parse_format(format);
            if (!emit_path.empty()) cfg.emit_path = emit_path;
            const auto report = qp::run_pipeline(cfg);
            print_verdict(report);
            if (cfg.emit_path) qp::emit(report, cfg.format, *cfg.emit_path);
            if (exit_verdict) return report.amplifier.satisfiable ? kSat : kUnsat;
            return kOk;
        }
        const auto summary = qp::self_check(corpus);
        std::cout << qp::format_summary(summary);
        return summary.all_agree() ? kOk : kDisagreement;
    } catch (const qsat::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kDataError;
    } catch (const qsat::CapacityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const qsat::NumericalError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kInternal;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kIoError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kInternal;
    }
}

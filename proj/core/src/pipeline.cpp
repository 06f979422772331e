#include "qsat/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsat/error.hpp"

namespace qsat::pipeline {

std::string_view to_string(Mode m) { return m == Mode::Oracle ? "oracle" : "statevector"; }

std::string_view to_string(Amplifier a) {
    switch (a) {
        case Amplifier::Chaos: return "chaos";
        case Amplifier::Stochastic: return "stochastic";
        case Amplifier::None: return "none";
    }
    return "none";
}

std::optional<Mode> parse_mode(std::string_view s) {
    if (s == "oracle") return Mode::Oracle;
    if (s == "statevector") return Mode::Statevector;
    return std::nullopt;
}

std::optional<Amplifier> parse_amplifier(std::string_view s) {
    if (s == "chaos") return Amplifier::Chaos;
    if (s == "stochastic") return Amplifier::Stochastic;
    if (s == "none") return Amplifier::None;
    return std::nullopt;
}

std::optional<Format> parse_format(std::string_view s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return std::nullopt;
}

void PipelineConfig::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (!(a >= 0.0 && a <= 4.0)) fail("--a must lie in [0, 4]");
    if (amplifier == Amplifier::Chaos && !(a > 1.0)) fail("--a must exceed 1 for the chaos amplifier");
    if (!(gamma_re > 0.0) || !std::isfinite(gamma_im)) fail("--gamma-re must be > 0 and --gamma-im finite");
    if (!(e0 < e1)) fail("--e0 must be smaller than --e1");
    if (!(horizon_factor > 0.0)) fail("--horizon-factor must be > 0");
    if (!(threshold > 0.0 && threshold < 1.0)) fail("--threshold must lie in (0, 1)");
    if (format == Format::Csv && amplifier == Amplifier::None && emit_path) {
        fail("--format csv emits an amplifier trace; it needs --amplifier chaos or stochastic");
    }
}

ChannelState compose_channels(const std::vector<ChannelStage>& stages, ChannelState input) {
    int last = -1;
    for (const auto& s : stages) {
        const int l = static_cast<int>(s.label);
        if (l < last) throw std::invalid_argument("channel stages out of order (preparation, computation, measurement)");
        last = l;
    }
    for (const auto& s : stages) input = s.transform(std::move(input));
    return input;
}

std::vector<ChannelStage> sat_stages(const qc::SatCircuit& sat) {
    const auto layout = sat.layout;
    std::vector<ChannelStage> stages;
    stages.push_back({StageLabel::Preparation, [layout](ChannelState st) {
                          for (std::uint32_t q = 0; q < layout.n_input; ++q) qc::apply_gate(st.state, qc::HGate{q});
                          return st;
                      }});
    stages.push_back({StageLabel::Computation, [&circuit = sat.circuit](ChannelState st) {
                          st.state = qc::run(circuit, std::move(st.state));
                          return st;
                      }});
    stages.push_back({StageLabel::Measurement, [layout](ChannelState st) {
                          st.probability = qc::success_probability(st.state, layout);
                          st.null_branch = !qc::project_onto_result(st.state, layout);
                          return st;
                      }});
    return stages;
}

QSquared compute_q_squared(const cnf::CnfFormula& f, Mode mode, std::uint32_t enumeration_cap) {
    QSquared q2;
    q2.source = mode;
    if (mode == Mode::Oracle) {
        const auto count = cnf::count_satisfying(f, enumeration_cap);
        q2.exact = count.q_squared;
        q2.value = count.q_squared.to_double();
        return q2;
    }
    const auto sat = qc::build_sat_circuit(f);
    auto stages = sat_stages(sat);
    const auto out = compose_channels(stages, ChannelState{qc::StateVector(sat.layout.num_qubits()), std::nullopt, false});
    q2.value = *out.probability;
    return q2;
}

AmplifierResult amplify(const PipelineConfig& cfg, const QSquared& q2, std::uint32_t n) {
    AmplifierResult res;
    res.kind = cfg.amplifier;
    switch (cfg.amplifier) {
        case Amplifier::None:
            res.satisfiable = q2.exact ? !q2.exact->is_zero() : q2.value > 0.0;
            break;
        case Amplifier::Chaos: {
            auto v = chaos::detect(q2.value, std::max<std::uint32_t>(n, 1), chaos::LogisticParams(cfg.a));
            res.satisfiable = v.satisfiable;
            res.detail = std::move(v);
            break;
        }
        case Amplifier::Stochastic: {
            const auto amps = qc::collapse_to_qubit(q2.value);
            const stochastic::Susceptibility g({cfg.gamma_re, cfg.gamma_im});
            // Exact rationals make q = 0 an exact test; floating probabilities
            // from the statevector are either 0 or >= 2^-n.
            const double tol = q2.exact ? 0.0 : stochastic::kDefaultZeroTolerance;
            const auto dyn = stochastic::adapt(stochastic::InputAmplitudes(amps.alpha0, amps.alpha1),
                                               stochastic::TwoLevelHamiltonian(cfg.e0, cfg.e1), g, tol);
            StochasticOutcome out;
            out.damping_case = dyn.is_damping();
            if (!dyn.is_damping()) {
                out.trivially_sat = dyn.coherent().trivially_sat;
                out.warnings = dyn.coherent().hamiltonian.warnings;
            }
            out.verdict = stochastic::classify(
                dyn, stochastic::ClassifierConfig::for_susceptibility(g, cfg.horizon_factor, cfg.threshold));
            res.satisfiable = out.verdict.satisfiable;
            res.detail = std::move(out);
            break;
        }
    }
    return res;
}

Report run_pipeline(const PipelineConfig& cfg, const cnf::CnfFormula& formula) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();

    Report rep;
    rep.input = cfg.input_path;
    rep.formula = {formula.num_vars(), formula.num_clauses(), qc::required_ancillas(formula)};

    if (cfg.mode == Mode::Statevector) {
        const auto needed = static_cast<std::uint64_t>(rep.formula.n) + rep.formula.mu;
        if (needed > qc::max_qubits()) {
            throw CapacityError("statevector mode needs " + std::to_string(needed) + " qubits (n = " +
                                std::to_string(rep.formula.n) + ", mu = " + std::to_string(rep.formula.mu) +
                                "), above the cap of " + std::to_string(qc::max_qubits()) +
                                "; use --mode oracle or raise QSAT_MAX_QUBITS");
        }
    }

    std::optional<cnf::CountSummary> count;
    if (formula.num_vars() <= cfg.enumeration_cap) count = cnf::count_satisfying(formula, cfg.enumeration_cap);

    if (cfg.mode == Mode::Oracle) {
        if (!count) {
            throw CapacityError("oracle mode enumerates 2^n assignments; n = " + std::to_string(formula.num_vars()) +
                                " exceeds the enumeration cap of " + std::to_string(cfg.enumeration_cap));
        }
        rep.q_squared = QSquared{count->q_squared.to_double(), count->q_squared, Mode::Oracle};
    } else {
        rep.q_squared = compute_q_squared(formula, cfg.mode, cfg.enumeration_cap);
    }
    rep.amplifier = amplify(cfg, rep.q_squared, formula.num_vars());

    if (count) {
        rep.reference = Reference{count->satisfying > 0, count->satisfying, count->total};
        rep.agreement = rep.reference->satisfiable == rep.amplifier.satisfiable;
    }
    if (const auto* s = std::get_if<StochasticOutcome>(&rep.amplifier.detail)) {
        rep.warnings.insert(rep.warnings.end(), s->warnings.begin(), s->warnings.end());
    }

    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

Report run_pipeline(const PipelineConfig& cfg) {
    std::ifstream in(cfg.input_path);
    if (!in) throw std::runtime_error("cannot open input '" + cfg.input_path + "'");
    return run_pipeline(cfg, cnf::parse_dimacs(in));
}

}  // namespace qsat::pipeline

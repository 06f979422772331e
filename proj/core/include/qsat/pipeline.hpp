#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qsat/chaos.hpp"
#include "qsat/circuit.hpp"
#include "qsat/cnf.hpp"
#include "qsat/rational.hpp"
#include "qsat/stochastic.hpp"

namespace qsat::pipeline {

enum class Mode { Oracle, Statevector };
enum class Amplifier { Chaos, Stochastic, None };
enum class Format { Json, Csv };

std::string_view to_string(Mode m);
std::string_view to_string(Amplifier a);
std::optional<Mode> parse_mode(std::string_view s);
std::optional<Amplifier> parse_amplifier(std::string_view s);
std::optional<Format> parse_format(std::string_view s);

struct PipelineConfig {
    std::string input_path;
    Mode mode = Mode::Oracle;
    Amplifier amplifier = Amplifier::Chaos;
    double a = chaos::kDefaultLogisticParameter;
    double gamma_re = 1.0;
    double gamma_im = 0.0;
    double e0 = 0.0;
    double e1 = 2.0;
    double horizon_factor = 20.0;
    double threshold = 0.1;
    std::optional<std::string> emit_path;
    Format format = Format::Json;
    std::uint32_t enumeration_cap = cnf::kDefaultEnumerationCap;

    /// Throws std::invalid_argument naming the offending parameter.
    void validate() const;
};

// ---- channel composition: preparation -> computation -> measurement -------

enum class StageLabel { Preparation = 0, Computation = 1, Measurement = 2 };

struct ChannelState {
    qc::StateVector state;
    std::optional<double> probability;  // set by the measurement stage
    bool null_branch = false;           // measurement found a zero projection
};

struct ChannelStage {
    StageLabel label;
    std::function<ChannelState(ChannelState)> transform;
};

/// Applies the stages in order. Throws std::invalid_argument if the labels
/// are not in preparation <= computation <= measurement order.
ChannelState compose_channels(const std::vector<ChannelStage>& stages, ChannelState input);

/// Hadamards on the inputs, U_C, then the result-qubit projective measurement.
std::vector<ChannelStage> sat_stages(const qc::SatCircuit& sat);

// ---- reports ---------------------------------------------------------------

struct FormulaStats {
    std::uint32_t n = 0;
    std::size_t m = 0;
    std::uint32_t mu = 0;
};

struct QSquared {
    double value = 0.0;
    std::optional<Rational> exact;  // oracle mode only
    Mode source = Mode::Oracle;
};

struct Reference {
    bool satisfiable = false;
    std::uint64_t r = 0;
    std::uint64_t total = 0;
};

struct StochasticOutcome {
    bool damping_case = false;
    bool trivially_sat = false;
    stochastic::DynVerdict verdict;
    std::vector<std::string> warnings;
};

struct AmplifierResult {
    Amplifier kind = Amplifier::None;
    bool satisfiable = false;
    std::variant<std::monostate, chaos::ChaosVerdict, StochasticOutcome> detail;
};

struct Report {
    std::string input;
    FormulaStats formula;
    QSquared q_squared;
    AmplifierResult amplifier;
    std::optional<Reference> reference;
    std::optional<bool> agreement;
    std::vector<std::string> warnings;
    double timing_ms = 0.0;
};

/// Reads and parses cfg.input_path, then runs the pipeline on it.
Report run_pipeline(const PipelineConfig& cfg);
Report run_pipeline(const PipelineConfig& cfg, const cnf::CnfFormula& formula);

/// Just the q^2 stage, in the requested mode.
QSquared compute_q_squared(const cnf::CnfFormula& f, Mode mode, std::uint32_t enumeration_cap);

/// Runs the configured amplifier on q^2.
AmplifierResult amplify(const PipelineConfig& cfg, const QSquared& q2, std::uint32_t n);

// ---- emission --------------------------------------------------------------

/// Fixed-schema JSON; keys are documented in README.md. Deterministic for a
/// fixed report; include_timing = false drops the only run-dependent field.
std::string report_to_json(const Report& r, bool include_timing = true);
/// Columns m,x_m.
std::string chaos_trace_csv(const chaos::ChaosTrace& trace);
/// Columns t,p1,coh_abs,coh_phase.
std::string stochastic_trace_csv(const std::vector<stochastic::TrajectoryPoint>& trajectory);

/// JSON writes the report; CSV writes the amplifier trace (none for Amplifier::None,
/// which throws std::invalid_argument). I/O failures throw std::runtime_error.
void emit(const Report& r, Format format, const std::filesystem::path& path);

// ---- regression harness ----------------------------------------------------

/// Expectation label from a "c expect: sat|unsat" comment line, if any.
std::optional<bool> read_expectation(std::string_view dimacs_text);

struct SelfCheckCell {
    Mode mode;
    Amplifier amplifier;
    bool ran = false;
    bool satisfiable = false;
    std::string note;  // reason when skipped
};

struct SelfCheckRow {
    std::string file;
    FormulaStats formula;
    bool reference = false;
    std::optional<bool> expected;
    std::optional<double> q2_oracle;
    std::optional<double> q2_statevector;
    std::vector<SelfCheckCell> cells;
    std::vector<std::string> problems;

    bool ok() const noexcept { return problems.empty(); }
};

struct SelfCheckSummary {
    std::vector<SelfCheckRow> rows;
    std::size_t disagreements = 0;
    double seconds = 0.0;

    bool all_agree() const noexcept { return disagreements == 0; }
};

/// Runs both amplifiers in both modes (statevector only where n + mu fits
/// the simulator cap) on every *.cnf in corpus_dir and compares each verdict
/// with brute force and with the file's expectation label.
/// Throws std::runtime_error on a missing or empty corpus.
SelfCheckSummary self_check(const std::filesystem::path& corpus_dir, const PipelineConfig& base = {});

/// Human-readable agreement matrix.
std::string format_summary(const SelfCheckSummary& s);

}  // namespace qsat::pipeline

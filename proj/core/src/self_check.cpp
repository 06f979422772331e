#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsat/error.hpp"
#include "qsat/pipeline.hpp"

namespace qsat::pipeline {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + p.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::optional<bool> read_expectation(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string c, key, value;
        if (!(ls >> c) || c != "c") continue;
        if (!(ls >> key) || lower(key) != "expect:") continue;
        if (!(ls >> value)) continue;
        value = lower(value);
        if (value == "sat") return true;
        if (value == "unsat") return false;
    }
    return std::nullopt;
}

SelfCheckSummary self_check(const std::filesystem::path& corpus_dir, const PipelineConfig& base) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(corpus_dir)) throw std::runtime_error("corpus '" + corpus_dir.string() + "' is not a directory");

    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(corpus_dir)) {
        if (e.is_regular_file() && e.path().extension() == ".cnf") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("corpus '" + corpus_dir.string() + "' contains no .cnf files");

    const auto start = std::chrono::steady_clock::now();
    SelfCheckSummary summary;
    for (const auto& path : files) {
        const auto text = read_text(path);
        const auto formula = cnf::parse_dimacs(std::string_view(text));

        SelfCheckRow row;
        row.file = path.filename().string();
        row.formula = {formula.num_vars(), formula.num_clauses(), qc::required_ancillas(formula)};
        row.expected = read_expectation(text);
        row.reference = cnf::is_sat(formula, base.enumeration_cap);
        if (row.expected && *row.expected != row.reference) {
            row.problems.push_back(std::string("expectation label says ") + (*row.expected ? "SAT" : "UNSAT") +
                                   ", brute force says " + (row.reference ? "SAT" : "UNSAT"));
        }

        for (const Mode mode : {Mode::Oracle, Mode::Statevector}) {
            std::optional<QSquared> q2;
            std::string skip;
            if (mode == Mode::Statevector &&
                static_cast<std::uint64_t>(row.formula.n) + row.formula.mu > qc::max_qubits()) {
                skip = "n + mu = " + std::to_string(row.formula.n + row.formula.mu) + " above simulator cap";
            } else {
                q2 = compute_q_squared(formula, mode, base.enumeration_cap);
                (mode == Mode::Oracle ? row.q2_oracle : row.q2_statevector) = q2->value;
            }
            for (const Amplifier amp : {Amplifier::Chaos, Amplifier::Stochastic}) {
                SelfCheckCell cell{mode, amp, false, false, {}};
                if (!q2) {
                    cell.note = skip;
                } else {
                    PipelineConfig cfg = base;
                    cfg.mode = mode;
                    cfg.amplifier = amp;
                    cell.ran = true;
                    cell.satisfiable = amplify(cfg, *q2, formula.num_vars()).satisfiable;
                    if (cell.satisfiable != row.reference) {
                        row.problems.push_back(std::string(to_string(amp)) + "/" + std::string(to_string(mode)) +
                                               " verdict disagrees with brute force");
                    }
                }
                row.cells.push_back(std::move(cell));
            }
        }
        if (row.q2_oracle && row.q2_statevector && std::abs(*row.q2_oracle - *row.q2_statevector) > 1e-10) {
            row.problems.push_back("oracle and statevector q^2 differ");
        }
        if (!row.ok()) ++summary.disagreements;
        summary.rows.push_back(std::move(row));
    }
    summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

std::string format_summary(const SelfCheckSummary& s) {
    std::ostringstream out;
    auto mark = [](const SelfCheckCell& c) -> std::string {
        if (!c.ran) return "-";
        return c.satisfiable ? "SAT" : "UNSAT";
    };
    out << "file                             n   m  mu  ref    chaos/orc  stoch/orc  chaos/sv   stoch/sv   status\n";
    for (const auto& r : s.rows) {
        char head[96];
        std::snprintf(head, sizeof head, "%-30s %3u %3zu %3u  %-6s", r.file.c_str(), r.formula.n, r.formula.m,
                      r.formula.mu, r.reference ? "SAT" : "UNSAT");
        out << head;
        for (const auto& c : r.cells) {
            char cell[16];
            std::snprintf(cell, sizeof cell, " %-10s", mark(c).c_str());
            out << cell;
        }
        out << (r.ok() ? " ok" : " FAIL") << '\n';
        for (const auto& p : r.problems) out << "    ! " << p << '\n';
    }
    const auto total = s.rows.size();
    out << (total - s.disagreements) << "/" << total << " formulas agree with brute force";
    char secs[32];
    std::snprintf(secs, sizeof secs, " (%.2f s)\n", s.seconds);
    out << secs;
    return out.str();
}

}  // namespace qsat::pipeline

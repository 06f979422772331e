#include "qsat/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qsat/error.hpp"

namespace qsat::qc {

Circuit& Circuit::add(Gate g) {
    validate_gate(g, n_);
    gates_.push_back(g);
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit inv(n_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        if (auto* p = std::get_if<PhaseGate>(&g)) p->angle = -p->angle;
        inv.gates_.push_back(g);
    }
    return inv;
}

namespace {

// A classical bit held on a qubit, possibly complemented.
struct Signal {
    std::uint32_t qubit;
    bool inverted;
};

class SatBuilder {
public:
    SatBuilder(Circuit& c, std::uint32_t first_work) : c_(c), next_work_(first_work) {}

    std::uint32_t fresh() { return next_work_++; }

    // target ^= a AND b, honouring inverted signals by X-conjugating controls.
    // Two unit clauses on the same variable reach here with a.qubit == b.qubit:
    // x AND x = x, x AND x' = 0.
    void toffoli(Signal a, Signal b, std::uint32_t target) {
        if (a.qubit == b.qubit) {
            if (a.inverted == b.inverted) copy(a, target);
            return;
        }
        flip_if(a);
        flip_if(b);
        c_.add(ToffoliGate{a.qubit, b.qubit, target});
        flip_if(b);
        flip_if(a);
    }

    void copy(Signal a, std::uint32_t target) {
        flip_if(a);
        c_.add(CnotGate{a.qubit, target});
        flip_if(a);
    }

    void x(std::uint32_t q) { c_.add(XGate{q}); }

private:
    void flip_if(Signal s) {
        if (s.inverted) c_.add(XGate{s.qubit});
    }

    Circuit& c_;
    std::uint32_t next_work_;
};

struct Plan {
    cnf::CnfFormula formula;
    bool has_empty_clause = false;
    std::uint32_t mu = 1;
};

Plan plan_for(const cnf::CnfFormula& f) {
    Plan p{cnf::filter_minimal(f)};
    std::uint64_t mu = 1;
    for (const auto& c : p.formula.clauses()) {
        if (c.empty()) p.has_empty_clause = true;
        else mu += c.size() - 1;
    }
    if (p.formula.num_clauses() > 0) mu += p.formula.num_clauses() - 1;
    p.mu = p.has_empty_clause ? 1U : static_cast<std::uint32_t>(mu);
    return p;
}

}  // namespace

std::uint32_t required_ancillas(const cnf::CnfFormula& f) { return plan_for(f).mu; }

SatCircuit build_sat_circuit(const cnf::CnfFormula& f, const BuildOptions& opts) {
    const auto plan = plan_for(f);
    const auto n = plan.formula.num_vars();
    const auto cap = opts.qubit_cap == 0 ? max_qubits() : opts.qubit_cap;
    if (static_cast<std::uint64_t>(n) + plan.mu > cap) {
        throw CapacityError("SAT circuit needs n + mu = " + std::to_string(n) + " + " + std::to_string(plan.mu) +
                            " qubits, above the simulator cap of " + std::to_string(cap));
    }

    CircuitLayout layout;
    layout.n_input = n;
    layout.mu = plan.mu;
    layout.work_begin = n;
    layout.work_end = n + plan.mu - 1;
    layout.result_qubit = n + plan.mu - 1;

    Circuit circuit(layout.num_qubits());
    const auto& clauses = plan.formula.clauses();

    if (clauses.empty()) {
        circuit.add(XGate{layout.result_qubit});
        return {std::move(circuit), layout};
    }
    if (plan.has_empty_clause) return {std::move(circuit), layout};

    const auto m = static_cast<std::uint64_t>(clauses.size());
    if (n > 0 && layout.mu > 2 * m * n) {
        throw std::logic_error("ancilla count " + std::to_string(layout.mu) + " exceeds 2*m*n");
    }

    // Everything before the final copy; replayed inverted when uncomputing.
    Circuit compute(layout.num_qubits());
    SatBuilder b(compute, layout.work_begin);

    std::vector<Signal> clause_out;
    clause_out.reserve(clauses.size());
    for (const auto& c : clauses) {
        const auto& lits = c.literals();
        if (lits.size() == 1) {
            clause_out.push_back({lits[0].var - 1, lits[0].negated});
            continue;
        }
        // AND of complements: a positive literal's complement is the inverted input.
        auto complement = [](const cnf::Literal& l) { return Signal{l.var - 1, !l.negated}; };
        Signal acc = complement(lits[0]);
        for (std::size_t k = 1; k < lits.size(); ++k) {
            const auto w = b.fresh();
            b.toffoli(acc, complement(lits[k]), w);
            acc = {w, false};
        }
        b.x(acc.qubit);  // NOT(AND of complements) = OR
        clause_out.push_back(acc);
    }

    Signal all = clause_out[0];
    for (std::size_t j = 1; j < clause_out.size(); ++j) {
        const auto w = b.fresh();
        b.toffoli(all, clause_out[j], w);
        all = {w, false};
    }

    for (const auto& g : compute.gates()) circuit.add(g);
    SatBuilder(circuit, layout.result_qubit).copy(all, layout.result_qubit);
    if (opts.uncompute) {
        const Circuit undo = compute.inverse();
        for (const auto& g : undo.gates()) circuit.add(g);
    }
    return {std::move(circuit), layout};
}

StateVector run(const Circuit& c, StateVector s) {
    if (c.num_qubits() != s.num_qubits()) {
        throw std::invalid_argument("circuit acts on " + std::to_string(c.num_qubits()) + " qubits, state has " +
                                    std::to_string(s.num_qubits()));
    }
    for (const auto& g : c.gates()) apply_gate(s, g);
    return s;
}

namespace {

void check_layout(const StateVector& s, const CircuitLayout& layout) {
    if (s.num_qubits() != layout.num_qubits() || layout.result_qubit >= s.num_qubits()) {
        throw std::invalid_argument("state/layout qubit count mismatch");
    }
}

}  // namespace

double success_probability(const StateVector& s, const CircuitLayout& layout) {
    check_layout(s, layout);
    const auto r = s.mask(layout.result_qubit);
    double p = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i & r) p += std::norm(s[i]);
    }
    // Summation rounding can land a hair above 1 when every branch is accepted.
    return std::min(p, 1.0);
}

bool project_onto_result(StateVector& s, const CircuitLayout& layout) {
    const double p = success_probability(s, layout);
    if (p < 1e-14) return false;
    const auto r = s.mask(layout.result_qubit);
    const double scale = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < s.dim(); ++i) s[i] = (i & r) ? s[i] * scale : Amplitude{};
    return true;
}

std::optional<StateVector> post_measure(const StateVector& s, const CircuitLayout& layout) {
    StateVector out = s;
    if (!project_onto_result(out, layout)) return std::nullopt;
    return out;
}

std::vector<double> input_marginal(const StateVector& s, const CircuitLayout& layout) {
    check_layout(s, layout);
    std::vector<double> marginal(std::size_t{1} << layout.n_input, 0.0);
    const auto shift = layout.mu;
    for (std::size_t i = 0; i < s.dim(); ++i) marginal[i >> shift] += std::norm(s[i]);
    return marginal;
}

QubitAmplitudes collapse_to_qubit(double q_squared) {
    if (!(q_squared >= 0.0 && q_squared <= 1.0)) {
        throw std::invalid_argument("q^2 = " + std::to_string(q_squared) + " outside [0, 1]");
    }
    return {std::sqrt(1.0 - q_squared), std::sqrt(q_squared)};
}

}  // namespace qsat::qc

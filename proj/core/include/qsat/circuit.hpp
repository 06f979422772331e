#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsat/cnf.hpp"
#include "qsat/statevector.hpp"

namespace qsat::qc {

class Circuit {
public:
    explicit Circuit(std::uint32_t num_qubits) : n_(num_qubits) {}

    std::uint32_t num_qubits() const noexcept { return n_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }

    /// Validates indices against num_qubits().
    Circuit& add(Gate g);
    /// Reversed gate list with each gate inverted (phases negated).
    Circuit inverse() const;

private:
    std::uint32_t n_;
    std::vector<Gate> gates_;
};

/// Qubit map of the SAT register: inputs [0, n), work [n, n+mu-1), result n+mu-1.
struct CircuitLayout {
    std::uint32_t n_input = 0;
    std::uint32_t mu = 1;
    std::uint32_t work_begin = 0;
    std::uint32_t work_end = 0;
    std::uint32_t result_qubit = 0;

    std::uint32_t num_qubits() const noexcept { return n_input + mu; }
};

struct SatCircuit {
    Circuit circuit;
    CircuitLayout layout;
};

struct BuildOptions {
    /// Run the clause gates backwards after copying to the result qubit, so the
    /// work register returns to |0_mu-1>.
    bool uncompute = false;
    /// 0 means max_qubits().
    std::uint32_t qubit_cap = 0;
};

/// Ancilla count the construction needs for f (after dropping tautological clauses).
std::uint32_t required_ancillas(const cnf::CnfFormula& f);

/// Builds U_C from X, CNOT and Toffoli gates so that |e, 0_mu> ends with the
/// result qubit holding t_e(C) and the inputs restored to |e>.
///
/// Each clause OR is computed by De Morgan: positive-literal inputs are
/// X-flipped, a Toffoli chain accumulates the AND of the complements into
/// fresh work qubits, and a final X turns it into the OR. Clause outputs are
/// AND-chained the same way and copied into the result qubit, giving
/// mu = sum_j (|C_j| - 1) + (m - 1) + 1.
///
/// Throws CapacityError (naming the required mu) if n + mu exceeds the cap.
SatCircuit build_sat_circuit(const cnf::CnfFormula& f, const BuildOptions& opts = {});

/// Gates in order. Throws std::invalid_argument on a qubit-count mismatch.
StateVector run(const Circuit& c, StateVector s);

/// sum of |amp|^2 over basis states whose result qubit is 1.
double success_probability(const StateVector& s, const CircuitLayout& layout);

/// Projection onto result qubit = 1, renormalized; nullopt when the projected
/// norm is below 1e-14.
std::optional<StateVector> post_measure(const StateVector& s, const CircuitLayout& layout);
/// In-place variant: projects and renormalizes s, returns false (leaving s
/// untouched) on the null branch.
bool project_onto_result(StateVector& s, const CircuitLayout& layout);

/// Marginal distribution of the first n_input qubits.
std::vector<double> input_marginal(const StateVector& s, const CircuitLayout& layout);

struct QubitAmplitudes {
    double alpha0;
    double alpha1;
};

/// (sqrt(1 - q^2), q) for q^2 in [0, 1].
QubitAmplitudes collapse_to_qubit(double q_squared);

}  // namespace qsat::qc

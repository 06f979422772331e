#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace qsat::qc {

using Amplitude = std::complex<double>;

inline constexpr std::uint32_t kDefaultMaxQubits = 26;

/// Simulator cap: QSAT_MAX_QUBITS if set to a positive integer, else 26.
std::uint32_t max_qubits();

/// Pure state on num_qubits qubits.
///
/// Basis index convention: qubit 0 is the most significant bit of the index,
/// so for the SAT register the ket label |e_1 ... e_n, work..., result> reads
/// left to right as the binary expansion of the index, and the result qubit
/// (the last one) is the least significant bit.
class StateVector {
public:
    /// |0...0>. Throws CapacityError above max_qubits().
    explicit StateVector(std::uint32_t num_qubits);
    /// Takes ownership of amplitudes; size must be 2^num_qubits. Not renormalized.
    StateVector(std::uint32_t num_qubits, std::vector<Amplitude> amps);

    std::uint32_t num_qubits() const noexcept { return n_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    std::span<Amplitude> amplitudes() noexcept { return amps_; }
    const Amplitude& operator[](std::size_t k) const { return amps_[k]; }
    Amplitude& operator[](std::size_t k) { return amps_[k]; }

    /// Bit mask of qubit q inside a basis index.
    std::size_t mask(std::uint32_t q) const noexcept { return std::size_t{1} << (n_ - 1 - q); }

    double norm_squared() const noexcept;

private:
    std::uint32_t n_;
    std::vector<Amplitude> amps_;
};

struct XGate { std::uint32_t target; };
struct HGate { std::uint32_t target; };
struct CnotGate { std::uint32_t control; std::uint32_t target; };
struct ToffoliGate { std::uint32_t control1; std::uint32_t control2; std::uint32_t target; };
/// diag(1, e^{i angle}) on target.
struct PhaseGate { std::uint32_t target; double angle; };

using Gate = std::variant<XGate, HGate, CnotGate, ToffoliGate, PhaseGate>;

/// Throws std::out_of_range / std::invalid_argument on bad or repeated qubit indices.
void validate_gate(const Gate& g, std::uint32_t num_qubits);

/// In place; throws like validate_gate.
void apply_gate(StateVector& s, const Gate& g);

/// H on each of the first n qubits of |0...0> (n + mu qubits total):
/// amplitude 2^{-n/2} on every |e, 0_mu>.
StateVector prepare_uniform(std::uint32_t n, std::uint32_t mu);

/// (1/sqrt(2^N)) sum_k exp(2 pi i t k / 2^N) |k>, built as prepare_uniform followed
/// by one phase gate per qubit. Requires 0 <= t < 2^N.
StateVector dft_state(std::uint64_t t, std::uint32_t num_qubits);

// Binary dump: 16-byte header ("QSV1", u32 num_qubits, u32 bit order = 0 for
// qubit-0-is-MSB, u32 reserved = 0) followed by 2^n (re, im) little-endian doubles.
void write_state(std::ostream& out, const StateVector& s);
StateVector read_state(std::istream& in);

}  // namespace qsat::qc

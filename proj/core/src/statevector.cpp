#include "qsat/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qsat/error.hpp"

namespace qsat::qc {

std::uint32_t max_qubits() {
    if (const char* env = std::getenv("QSAT_MAX_QUBITS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 40) return static_cast<std::uint32_t>(v);
    }
    return kDefaultMaxQubits;
}

namespace {

void check_cap(std::uint32_t num_qubits) {
    const auto cap = max_qubits();
    if (num_qubits > cap) {
        throw CapacityError("state of " + std::to_string(num_qubits) + " qubits exceeds the simulator cap of " +
                            std::to_string(cap) + " (set QSAT_MAX_QUBITS or use oracle mode)");
    }
}

void check_index(std::uint32_t q, std::uint32_t num_qubits) {
    if (q >= num_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
}

// Calls fn(i0) for every basis index whose bit `stride` is clear, i.e. for each
// pair (i0, i0 | stride) of amplitudes a single-qubit kernel couples.
template <typename Fn>
void for_each_pair(std::size_t dim, std::size_t stride, Fn&& fn) {
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) fn(i);
    }
}

struct GateApplier {
    StateVector& s;

    void operator()(const XGate& g) const {
        const auto t = s.mask(g.target);
        for_each_pair(s.dim(), t, [&](std::size_t i) { std::swap(s[i], s[i | t]); });
    }
    void operator()(const HGate& g) const {
        const auto t = s.mask(g.target);
        const double h = std::numbers::sqrt2 / 2.0;
        for_each_pair(s.dim(), t, [&](std::size_t i) {
            const auto a = s[i];
            const auto b = s[i | t];
            s[i] = h * (a + b);
            s[i | t] = h * (a - b);
        });
    }
    void operator()(const CnotGate& g) const {
        const auto c = s.mask(g.control);
        const auto t = s.mask(g.target);
        for_each_pair(s.dim(), t, [&](std::size_t i) {
            if (i & c) std::swap(s[i], s[i | t]);
        });
    }
    void operator()(const ToffoliGate& g) const {
        const auto cc = s.mask(g.control1) | s.mask(g.control2);
        const auto t = s.mask(g.target);
        for_each_pair(s.dim(), t, [&](std::size_t i) {
            if ((i & cc) == cc) std::swap(s[i], s[i | t]);
        });
    }
    void operator()(const PhaseGate& g) const {
        const auto t = s.mask(g.target);
        const Amplitude phase = std::polar(1.0, g.angle);
        for_each_pair(s.dim(), t, [&](std::size_t i) { s[i | t] *= phase; });
    }
};

}  // namespace

StateVector::StateVector(std::uint32_t num_qubits) : n_(num_qubits) {
    check_cap(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::uint32_t num_qubits, std::vector<Amplitude> amps) : n_(num_qubits), amps_(std::move(amps)) {
    check_cap(num_qubits);
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) + " is not 2^" +
                                    std::to_string(num_qubits));
    }
}

double StateVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto& a : amps_) acc += std::norm(a);
    return acc;
}

void validate_gate(const Gate& g, std::uint32_t num_qubits) {
    std::visit(
        [num_qubits](const auto& gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, XGate> || std::is_same_v<T, HGate> || std::is_same_v<T, PhaseGate>) {
                check_index(gate.target, num_qubits);
            } else if constexpr (std::is_same_v<T, CnotGate>) {
                check_index(gate.control, num_qubits);
                check_index(gate.target, num_qubits);
                if (gate.control == gate.target) throw std::invalid_argument("CNOT control equals target");
            } else {
                check_index(gate.control1, num_qubits);
                check_index(gate.control2, num_qubits);
                check_index(gate.target, num_qubits);
                if (gate.control1 == gate.control2 || gate.control1 == gate.target || gate.control2 == gate.target) {
                    throw std::invalid_argument("Toffoli qubits must be distinct");
                }
            }
        },
        g);
}

void apply_gate(StateVector& s, const Gate& g) {
    validate_gate(g, s.num_qubits());
    std::visit(GateApplier{s}, g);
}

StateVector prepare_uniform(std::uint32_t n, std::uint32_t mu) {
    StateVector s(n + mu);
    // Same result as n Hadamards on |0...0>, written directly: inputs are the
    // high-order bits, so the populated indices are multiples of 2^mu.
    const double amp = std::pow(2.0, -0.5 * n);
    s[0] = 0.0;
    const std::size_t step = std::size_t{1} << mu;
    for (std::size_t i = 0; i < s.dim(); i += step) s[i] = amp;
    return s;
}

StateVector dft_state(std::uint64_t t, std::uint32_t num_qubits) {
    if (num_qubits >= 63 || t >= (std::uint64_t{1} << num_qubits)) {
        throw std::out_of_range("dft_state: t = " + std::to_string(t) + " outside [0, 2^" +
                                std::to_string(num_qubits) + ")");
    }
    auto s = prepare_uniform(num_qubits, 0);
    const std::uint64_t modulus = std::uint64_t{1} << num_qubits;
    for (std::uint32_t q = 0; q < num_qubits; ++q) {
        // Qubit q carries weight 2^{N-1-q}; reduce t * weight mod 2^N before
        // converting to an angle.
        const std::uint64_t weight = std::uint64_t{1} << (num_qubits - 1 - q);
        const std::uint64_t turns = (t * weight) & (modulus - 1);
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(turns) / static_cast<double>(modulus);
        apply_gate(s, PhaseGate{q, angle});
    }
    return s;
}

namespace {

static_assert(std::endian::native == std::endian::little, "state dump assumes a little-endian host");

template <typename T>
void put(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("truncated state dump");
    return v;
}

}  // namespace

void write_state(std::ostream& out, const StateVector& s) {
    out.write("QSV1", 4);
    put<std::uint32_t>(out, s.num_qubits());
    put<std::uint32_t>(out, 0);  // qubit 0 is the most significant index bit
    put<std::uint32_t>(out, 0);
    for (const auto& a : s.amplitudes()) {
        put<double>(out, a.real());
        put<double>(out, a.imag());
    }
    if (!out) throw std::runtime_error("failed writing state dump");
}

StateVector read_state(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "QSV1", 4) != 0) throw std::runtime_error("not a QSV1 state dump");
    const auto n = get<std::uint32_t>(in);
    const auto order = get<std::uint32_t>(in);
    (void)get<std::uint32_t>(in);
    if (order != 0) throw std::runtime_error("unsupported bit order " + std::to_string(order) + " in state dump");
    if (n > max_qubits()) throw CapacityError("state dump has " + std::to_string(n) + " qubits, above the cap");
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (auto& a : amps) {
        const double re = get<double>(in);
        const double im = get<double>(in);
        a = {re, im};
    }
    return StateVector(n, std::move(amps));
}

}  // namespace qsat::qc

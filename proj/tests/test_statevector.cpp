#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <random>
#include <sstream>

#include "qsat/error.hpp"
#include "qsat/statevector.hpp"
#include "support/oracles.hpp"

using namespace qsat::qc;
using qsat::testing::Dense;

namespace {

StateVector random_state(std::mt19937_64& rng, std::uint32_t n) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> a(std::size_t{1} << n);
    double norm = 0;
    for (auto& z : a) {
        z = {g(rng), g(rng)};
        norm += std::norm(z);
    }
    for (auto& z : a) z /= std::sqrt(norm);
    return StateVector(n, std::move(a));
}

double max_diff(const StateVector& a, const StateVector& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST_CASE("prepare_uniform") {
    auto s = prepare_uniform(1, 0);
    CHECK(std::abs(s[0] - 1.0 / std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(s[1] - 1.0 / std::numbers::sqrt2) < 1e-15);

    // n = 2, mu = 1: |00,0>, |01,0>, |10,0>, |11,0> are indices 0, 2, 4, 6.
    s = prepare_uniform(2, 1);
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(s[i] - (i % 2 == 0 ? 0.5 : 0.0)) < 1e-15);
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-15);

    // Same as Hadamards on the first n qubits of |0...0>.
    for (std::uint32_t n = 1; n <= 5; ++n) {
        for (std::uint32_t mu = 0; mu <= 3; ++mu) {
            StateVector h(n + mu);
            for (std::uint32_t q = 0; q < n; ++q) apply_gate(h, HGate{q});
            CHECK(max_diff(h, prepare_uniform(n, mu)) < 1e-14);
        }
    }
}

TEST_CASE("dft_state") {
    auto s = dft_state(0, 1);
    CHECK(std::abs(s[0] - 1.0 / std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(s[1] - 1.0 / std::numbers::sqrt2) < 1e-15);

    // t = 2, N = 2: exp(2 pi i 2 k / 4) = (-1)^k.
    s = dft_state(2, 2);
    const double expect[] = {0.5, -0.5, 0.5, -0.5};
    for (int k = 0; k < 4; ++k) CHECK(std::abs(s[k] - expect[k]) < 1e-15);

    for (std::uint32_t n = 1; n <= 6; ++n) {
        CHECK(max_diff(dft_state(0, n), prepare_uniform(n, 0)) < 1e-15);
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint64_t t = 0; t < dim; ++t) {
            s = dft_state(t, n);
            CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
            for (std::uint64_t k = 0; k < dim; ++k) {
                const auto ref = std::polar(1.0 / std::sqrt(double(dim)),
                                            2.0 * std::numbers::pi * double((t * k) % dim) / double(dim));
                CHECK(std::abs(s[k] - ref) < 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(dft_state(4, 2), std::out_of_range);
}

TEST_CASE("basic gate actions") {
    StateVector s(1);
    apply_gate(s, XGate{0});
    CHECK(s[1] == Amplitude(1.0));
    CHECK(s[0] == Amplitude(0.0));

    // Toffoli |11>|0> -> |11>|1>
    StateVector t(3);
    apply_gate(t, XGate{0});
    apply_gate(t, XGate{1});
    CHECK(t[0b110] == Amplitude(1.0));
    apply_gate(t, ToffoliGate{0, 1, 2});
    CHECK(t[0b111] == Amplitude(1.0));

    // CNOT only fires on control = 1.
    StateVector c(2);
    apply_gate(c, CnotGate{0, 1});
    CHECK(c[0] == Amplitude(1.0));
    apply_gate(c, XGate{0});
    apply_gate(c, CnotGate{0, 1});
    CHECK(c[0b11] == Amplitude(1.0));
}

TEST_CASE("gate kernels match dense Kronecker unitaries") {
    std::mt19937_64 rng(3);
    const double r = 1.0 / std::numbers::sqrt2;
    const Dense H{{r, r}, {r, -r}};
    const Dense X{{0, 1}, {1, 0}};
    for (std::uint32_t n = 1; n <= 4; ++n) {
        for (std::uint32_t q = 0; q < n; ++q) {
            const double angle = 0.3 + q;
            const Dense P{{1, 0}, {0, std::polar(1.0, angle)}};
            for (const auto& [gate, mat] : {std::pair<Gate, Dense>{HGate{q}, H}, {XGate{q}, X}, {PhaseGate{q, angle}, P}}) {
                auto s = random_state(rng, n);
                const std::vector<Amplitude> before(s.amplitudes().begin(), s.amplitudes().end());
                apply_gate(s, gate);
                const auto ref = qsat::testing::matvec(qsat::testing::embed_single(mat, q, n), before);
                for (std::size_t i = 0; i < s.dim(); ++i) CHECK(std::abs(s[i] - ref[i]) < 1e-13);
            }
        }
    }
}

TEST_CASE("controlled gates permute basis states as classical logic") {
    const std::uint32_t n = 4;
    for (std::size_t in = 0; in < 16; ++in) {
        auto bit = [&](std::size_t idx, std::uint32_t q) { return (idx >> (n - 1 - q)) & 1U; };
        for (std::uint32_t c = 0; c < n; ++c)
            for (std::uint32_t t = 0; t < n; ++t) {
                if (c == t) continue;
                StateVector s(n, std::vector<Amplitude>(16));
                s[in] = 1.0;
                apply_gate(s, CnotGate{c, t});
                const std::size_t out = bit(in, c) ? in ^ (std::size_t{1} << (n - 1 - t)) : in;
                CHECK(s[out] == Amplitude(1.0));
            }
        StateVector s(n, std::vector<Amplitude>(16));
        s[in] = 1.0;
        apply_gate(s, ToffoliGate{3, 1, 0});
        const std::size_t out = (bit(in, 3) && bit(in, 1)) ? in ^ 0b1000 : in;
        CHECK(s[out] == Amplitude(1.0));
    }
}

TEST_CASE("property: H twice is identity and every gate preserves the norm") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t n = 1 + trial % 6;
        auto s = random_state(rng, n);
        const auto orig = s;
        const std::uint32_t q = rng() % n;
        apply_gate(s, HGate{q});
        apply_gate(s, HGate{q});
        CHECK(max_diff(s, orig) < 1e-12);

        for (int k = 0; k < 20; ++k) {
            Gate g = XGate{static_cast<std::uint32_t>(rng() % n)};
            const auto a = static_cast<std::uint32_t>(rng() % n);
            switch (rng() % 5) {
                case 0: g = HGate{a}; break;
                case 1: g = PhaseGate{a, 0.1 * k}; break;
                case 2:
                    if (n >= 2) g = CnotGate{a, (a + 1) % n};
                    break;
                case 3:
                    if (n >= 3) g = ToffoliGate{a, (a + 1) % n, (a + 2) % n};
                    break;
                default: break;
            }
            apply_gate(s, g);
            CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("gate validation") {
    StateVector s(3);
    CHECK_THROWS_AS(apply_gate(s, XGate{3}), std::out_of_range);
    CHECK_THROWS_AS(apply_gate(s, CnotGate{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(s, ToffoliGate{0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(s, ToffoliGate{0, 1, 5}), std::out_of_range);
    CHECK_THROWS_AS(StateVector(2, std::vector<Amplitude>(3)), std::invalid_argument);
}

TEST_CASE("simulator cap honours QSAT_MAX_QUBITS") {
    CHECK(max_qubits() == kDefaultMaxQubits);
    ::setenv("QSAT_MAX_QUBITS", "4", 1);
    CHECK(max_qubits() == 4);
    CHECK_THROWS_AS(StateVector(5), qsat::CapacityError);
    CHECK_NOTHROW(StateVector(4));
    ::setenv("QSAT_MAX_QUBITS", "junk", 1);
    CHECK(max_qubits() == kDefaultMaxQubits);
    ::unsetenv("QSAT_MAX_QUBITS");
}

TEST_CASE("QSV1 dump layout and read-back") {
    std::mt19937_64 rng(9);
    const auto s = random_state(rng, 3);
    std::stringstream buf;
    write_state(buf, s);
    const auto bytes = buf.str();
    REQUIRE(bytes.size() == 16 + 8 * 16);
    CHECK(bytes.substr(0, 4) == "QSV1");
    CHECK(static_cast<unsigned char>(bytes[4]) == 3);
    double re = 0;
    std::memcpy(&re, bytes.data() + 16, 8);
    CHECK(re == s[0].real());

    const auto back = read_state(buf);
    CHECK(back.num_qubits() == 3);
    CHECK(max_diff(back, s) == 0.0);

    std::stringstream bad("QSV2xxxxxxxxxxxx");
    CHECK_THROWS(read_state(bad));
}

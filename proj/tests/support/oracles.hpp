#pragma once

// Test-only reference implementations. None of these call into the library
// code path they are used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qsat/cnf.hpp"

namespace qsat::testing {

// Clauses as raw DIMACS integers.
using RawClause = std::vector<int>;

struct RawFormula {
    std::uint32_t n = 0;
    std::vector<RawClause> clauses;

    cnf::CnfFormula to_cnf() const {
        std::vector<cnf::Clause> cs;
        for (const auto& rc : clauses) {
            cnf::Clause c;
            for (int k : rc) c.insert(cnf::Literal::from_dimacs(k));
            cs.push_back(c);
        }
        return cnf::CnfFormula(n, std::move(cs));
    }
};

// Truth value of the formula on assignment bits (bit v-1 = x_v), straight
// from the DIMACS integers.
inline bool raw_truth(const RawFormula& f, std::uint64_t bits) {
    for (const auto& c : f.clauses) {
        bool any = false;
        for (int k : c) {
            const bool v = (bits >> (std::abs(k) - 1)) & 1U;
            if ((k > 0) == v) {
                any = true;
                break;
            }
        }
        if (!any) return false;
    }
    return true;
}

inline std::uint64_t raw_count(const RawFormula& f) {
    std::uint64_t r = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << f.n); ++b) r += raw_truth(f, b) ? 1 : 0;
    return r;
}

// Random formula with n in [n_lo, n_hi], m in [m_lo, m_hi], clause width in
// [w_lo, w_hi]; literals may repeat or clash, which exercises set semantics
// and tautology handling.
inline RawFormula random_formula(std::mt19937_64& rng, std::uint32_t n_lo, std::uint32_t n_hi, std::size_t m_lo,
                                 std::size_t m_hi, int w_lo = 1, int w_hi = 3) {
    std::uniform_int_distribution<std::uint32_t> nd(n_lo, n_hi);
    std::uniform_int_distribution<std::size_t> md(m_lo, m_hi);
    std::uniform_int_distribution<int> wd(w_lo, w_hi);
    RawFormula f;
    f.n = nd(rng);
    const auto m = md(rng);
    for (std::size_t j = 0; j < m; ++j) {
        RawClause c;
        const int w = wd(rng);
        std::uniform_int_distribution<int> vd(1, static_cast<int>(f.n));
        for (int k = 0; k < w; ++k) c.push_back(rng() % 2 ? vd(rng) : -vd(rng));
        f.clauses.push_back(c);
    }
    return f;
}

using Dense = std::vector<std::vector<std::complex<double>>>;

inline Dense kron(const Dense& a, const Dense& b) {
    Dense out(a.size() * b.size(), std::vector<std::complex<double>>(a.size() * b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b.size(); ++l) out[i * b.size() + k][j * b.size() + l] = a[i][j] * b[k][l];
    return out;
}

// Full 2^N unitary of a single-qubit gate u on `target`, with qubit 0 as the
// leftmost tensor factor.
inline Dense embed_single(const Dense& u, std::uint32_t target, std::uint32_t num_qubits) {
    const Dense id{{1, 0}, {0, 1}};
    Dense acc{{1}};
    for (std::uint32_t q = 0; q < num_qubits; ++q) acc = kron(acc, q == target ? u : id);
    return acc;
}

inline std::vector<std::complex<double>> matvec(const Dense& m, const std::vector<std::complex<double>>& v) {
    std::vector<std::complex<double>> out(v.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

// Logistic iteration in 50-digit binary floating point.
using Wide = boost::multiprecision::cpp_bin_float_50;

inline std::vector<Wide> wide_logistic(const Wide& x0, const Wide& a, std::size_t steps) {
    std::vector<Wide> xs{x0};
    for (std::size_t i = 0; i < steps; ++i) xs.push_back(a * xs.back() * (1 - xs.back()));
    return xs;
}

}  // namespace qsat::testing

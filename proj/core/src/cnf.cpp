#include "qsat/cnf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qsat/error.hpp"

namespace qsat::cnf {

Literal Literal::from_dimacs(int k) {
    if (k == 0) throw std::invalid_argument("literal 0 is the clause terminator, not a literal");
    const auto var = static_cast<std::uint32_t>(k < 0 ? -static_cast<long long>(k) : k);
    return Literal{var, k < 0};
}

Clause::Clause(std::initializer_list<Literal> lits) : Clause(std::span<const Literal>(lits.begin(), lits.size())) {}

Clause::Clause(std::span<const Literal> lits) : lits_(lits.begin(), lits.end()) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

void Clause::insert(Literal l) {
    auto it = std::lower_bound(lits_.begin(), lits_.end(), l);
    if (it != lits_.end() && *it == l) return;
    lits_.insert(it, l);
}

bool Clause::contains(Literal l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

CnfFormula::CnfFormula(std::uint32_t num_vars, std::vector<Clause> clauses)
    : n_(num_vars), clauses_(std::move(clauses)) {
    for (const auto& c : clauses_) {
        for (const auto& l : c) {
            if (l.var == 0 || l.var > n_) {
                throw std::invalid_argument("variable " + std::to_string(l.var) + " outside 1.." +
                                            std::to_string(n_));
            }
        }
    }
}

Assignment::Assignment(std::uint32_t num_vars, std::uint64_t mask) : n_(num_vars), mask_(mask) {
    if (n_ > kMaxVars) throw std::invalid_argument("Assignment supports at most 64 variables");
    if (n_ < kMaxVars && (mask_ >> n_) != 0) throw std::invalid_argument("assignment mask has bits beyond n");
}

Assignment Assignment::from_bits(std::span<const int> bits) {
    if (bits.size() > kMaxVars) throw std::invalid_argument("Assignment supports at most 64 variables");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("assignment bits must be 0 or 1");
        if (bits[i] == 1) mask |= std::uint64_t{1} << i;
    }
    return Assignment(static_cast<std::uint32_t>(bits.size()), mask);
}

bool Assignment::value(std::uint32_t var) const {
    if (var == 0 || var > n_) throw std::out_of_range("variable outside assignment");
    return (mask_ >> (var - 1)) & 1U;
}

std::pair<std::vector<Literal>, std::vector<Literal>> partition_literals(std::span<const Literal> literals) {
    std::vector<Literal> sorted(literals.begin(), literals.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Literal> positive;
    std::vector<Literal> negative;
    for (const auto& l : sorted) {
        if (!std::binary_search(sorted.begin(), sorted.end(), negate(l))) {
            throw std::invalid_argument("literal set is not closed under negation (missing negation of x" +
                                        std::to_string(l.var) + ")");
        }
        (l.negated ? negative : positive).push_back(l);
    }
    return {std::move(positive), std::move(negative)};
}

bool is_minimal(const Clause& c) {
    // Sorted order puts x_v directly before its negation.
    const auto& lits = c.literals();
    for (std::size_t i = 1; i < lits.size(); ++i) {
        if (lits[i].var == lits[i - 1].var) return false;
    }
    return true;
}

CnfFormula filter_minimal(const CnfFormula& f) {
    std::vector<Clause> kept;
    kept.reserve(f.num_clauses());
    for (const auto& c : f.clauses()) {
        if (is_minimal(c)) kept.push_back(c);
    }
    return CnfFormula(f.num_vars(), std::move(kept));
}

bool eval_clause(const Clause& c, const Assignment& a) {
    for (const auto& l : c) {
        if (a.value(l.var) != l.negated) return true;
    }
    return false;
}

bool eval_formula(const CnfFormula& f, const Assignment& a) {
    for (const auto& c : f.clauses()) {
        if (!eval_clause(c, a)) return false;
    }
    return true;
}

namespace {

// Clause as two bitmasks: satisfied iff (eps & pos) | (~eps & neg) != 0.
struct PackedClause {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
};

}  // namespace

CountSummary count_satisfying(const CnfFormula& f, std::uint32_t cap) {
    const auto n = f.num_vars();
    if (n > cap) {
        throw CapacityError("brute-force enumeration refused: n = " + std::to_string(n) +
                            " exceeds the enumeration cap of " + std::to_string(cap) + " variables");
    }
    if (n >= 63) throw CapacityError("enumeration beyond 62 variables is not representable");

    std::vector<PackedClause> packed;
    packed.reserve(f.num_clauses());
    for (const auto& c : f.clauses()) {
        PackedClause p;
        for (const auto& l : c) (l.negated ? p.neg : p.pos) |= std::uint64_t{1} << (l.var - 1);
        packed.push_back(p);
    }

    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t r = 0;
    for (std::uint64_t eps = 0; eps < total; ++eps) {
        bool ok = true;
        for (const auto& p : packed) {
            if (((eps & p.pos) | (~eps & p.neg)) == 0) {
                ok = false;
                break;
            }
        }
        r += ok ? 1 : 0;
    }
    return CountSummary{r, total, Rational(r, total)};
}

bool is_sat(const CnfFormula& f, std::uint32_t cap) { return count_satisfying(f, cap).satisfying > 0; }

}  // namespace qsat::cnf

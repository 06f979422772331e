#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsat/rational.hpp"

namespace qsat::cnf {

/// Variable x_var (1-based) or its negation.
struct Literal {
    std::uint32_t var = 1;
    bool negated = false;

    /// From a DIMACS integer: k > 0 is x_k, k < 0 is the negation of x_|k|.
    static Literal from_dimacs(int k);
    int to_dimacs() const noexcept { return negated ? -static_cast<int>(var) : static_cast<int>(var); }

    // Orders by variable first, positive before negated.
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Negation: flips polarity. An involution without fixed points.
constexpr Literal negate(Literal l) noexcept { return Literal{l.var, !l.negated}; }

/// Clause as a set of literals. Stored sorted by (var, polarity), no duplicates.
class Clause {
public:
    Clause() = default;
    Clause(std::initializer_list<Literal> lits);
    explicit Clause(std::span<const Literal> lits);

    /// No-op when the literal is already present.
    void insert(Literal l);
    bool contains(Literal l) const;

    std::size_t size() const noexcept { return lits_.size(); }
    bool empty() const noexcept { return lits_.empty(); }
    auto begin() const noexcept { return lits_.begin(); }
    auto end() const noexcept { return lits_.end(); }
    const std::vector<Literal>& literals() const noexcept { return lits_; }

    friend bool operator==(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> lits_;
};

class CnfFormula {
public:
    CnfFormula() = default;
    /// Throws std::invalid_argument if a literal refers to a variable > num_vars.
    CnfFormula(std::uint32_t num_vars, std::vector<Clause> clauses);

    std::uint32_t num_vars() const noexcept { return n_; }
    std::size_t num_clauses() const noexcept { return clauses_.size(); }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

private:
    std::uint32_t n_ = 0;
    std::vector<Clause> clauses_;
};

/// Truth assignment epsilon = (e_1, ..., e_n), at most 64 variables.
/// Bit (i-1) of the mask holds e_i.
class Assignment {
public:
    static constexpr std::uint32_t kMaxVars = 64;

    Assignment(std::uint32_t num_vars, std::uint64_t mask);
    /// bits[i] is e_{i+1}; each entry must be 0 or 1.
    static Assignment from_bits(std::span<const int> bits);

    std::uint32_t num_vars() const noexcept { return n_; }
    std::uint64_t mask() const noexcept { return mask_; }
    /// Value of x_var, var in 1..n.
    bool value(std::uint32_t var) const;

private:
    std::uint32_t n_;
    std::uint64_t mask_;
};

struct CountSummary {
    std::uint64_t satisfying = 0;  // r
    std::uint64_t total = 0;       // 2^n
    Rational q_squared;            // r / 2^n, exact
};

inline constexpr std::uint32_t kDefaultEnumerationCap = 24;

/// Splits a negation-closed literal set into I (positive representatives) and I'.
/// Throws std::invalid_argument if the input is not closed under negation.
std::pair<std::vector<Literal>, std::vector<Literal>> partition_literals(std::span<const Literal> literals);

/// True iff the clause has no variable in both polarities.
bool is_minimal(const Clause& c);

/// Drops clauses containing a complementary pair. These are tautologies,
/// so the set of satisfying assignments is unchanged.
CnfFormula filter_minimal(const CnfFormula& f);

/// max over literals; the empty clause is 0.
bool eval_clause(const Clause& c, const Assignment& a);
/// min over clauses; the empty formula is 1.
bool eval_formula(const CnfFormula& f, const Assignment& a);

/// Full enumeration of all 2^n assignments. Throws CapacityError when n > cap.
CountSummary count_satisfying(const CnfFormula& f, std::uint32_t cap = kDefaultEnumerationCap);
bool is_sat(const CnfFormula& f, std::uint32_t cap = kDefaultEnumerationCap);

// DIMACS CNF. Comment lines start with 'c'; header "p cnf <n> <m>"; clauses are
// whitespace-separated nonzero integers terminated by 0 and may span lines.
// Errors are reported as qsat::ParseError carrying the offending line number.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

/// Canonical DIMACS: header, then one clause per line in stored order with
/// literals sorted by variable.
std::string serialize_dimacs(const CnfFormula& f);

}  // namespace qsat::cnf

#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qsat/cnf.hpp"
#include "qsat/error.hpp"

namespace qsat::cnf {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<long long> to_int(std::string_view tok) {
    long long v = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return v;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::uint32_t> num_vars;
    std::uint64_t declared_clauses = 0;
    std::size_t header_line = 0;

    std::vector<Clause> clauses;
    std::vector<Literal> pending;
    std::size_t pending_line = 0;
    bool saw_content = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        saw_content = true;
        if (toks[0][0] == 'c') continue;
        if (toks[0] == "%") break;  // SATLIB end marker

        if (toks[0] == "p") {
            if (num_vars) throw ParseError(lineno, "duplicate problem header");
            if (toks.size() != 4 || toks[1] != "cnf") throw ParseError(lineno, "malformed header, expected 'p cnf <n> <m>'");
            const auto n = to_int(toks[2]);
            const auto m = to_int(toks[3]);
            if (!n || !m || *n < 0 || *m < 0 || *n > 0xFFFFFFFFLL) {
                throw ParseError(lineno, "malformed header, <n> and <m> must be non-negative integers");
            }
            num_vars = static_cast<std::uint32_t>(*n);
            declared_clauses = static_cast<std::uint64_t>(*m);
            header_line = lineno;
            continue;
        }

        if (!num_vars) throw ParseError(lineno, "clause data before 'p cnf' header");
        for (const auto tok : toks) {
            const auto v = to_int(tok);
            if (!v) throw ParseError(lineno, "invalid literal '" + std::string(tok) + "'");
            if (*v == 0) {
                clauses.emplace_back(std::span<const Literal>(pending));
                pending.clear();
                continue;
            }
            const auto var = *v < 0 ? -*v : *v;
            if (var > static_cast<long long>(*num_vars)) {
                throw ParseError(lineno, "variable " + std::to_string(var) + " exceeds declared n=" +
                                             std::to_string(*num_vars));
            }
            if (pending.empty()) pending_line = lineno;
            pending.push_back(Literal::from_dimacs(static_cast<int>(*v)));
        }
    }

    if (!saw_content) throw ParseError(0, "empty input");
    if (!num_vars) throw ParseError(lineno, "missing 'p cnf' header");
    if (!pending.empty()) throw ParseError(pending_line, "clause without terminating 0");
    if (clauses.size() != declared_clauses) {
        throw ParseError(header_line, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                          std::to_string(clauses.size()));
    }
    return CnfFormula(*num_vars, std::move(clauses));
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
    for (const auto& c : f.clauses()) {
        for (const auto& l : c) out << l.to_dimacs() << ' ';
        out << "0\n";
    }
    return out.str();
}

}  // namespace qsat::cnf

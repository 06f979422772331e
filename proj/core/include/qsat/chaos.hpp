#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsat/dynamics.hpp"

namespace qsat::chaos {

inline constexpr double kDefaultLogisticParameter = 3.71;

/// Parameter of f(x) = a x (1 - x). a must lie in [0, 4] so [0, 1] is invariant.
class LogisticParams {
public:
    explicit LogisticParams(double a = kDefaultLogisticParameter);
    double a() const noexcept { return a_; }

private:
    double a_;
};

struct ChaosTrace {
    std::vector<double> xs;          // x_0 .. x_M
    std::optional<std::size_t> hit;  // first m with x_m > 1/2
};

struct ChaosVerdict {
    bool satisfiable = false;
    std::optional<std::size_t> m_hit;
    std::size_t window = 0;   // 2n
    double lower_bound = 0.0; // (n - 1) / log2(a), diagnostics only
    ChaosTrace trace;
};

/// a x (1 - x). Throws std::domain_error for x outside [0, 1].
double logistic_step(double x, const LogisticParams& p);

/// x_0 = x0, x_{m+1} = f(x_m) for `steps` steps.
ChaosTrace iterate(double x0, const LogisticParams& p, std::size_t steps);

/// (1 - x) P0 + x P1.
dyn::DensityMatrix2 density_embedding(double x);
/// Tr(rho P1) for rho = density_embedding(x), i.e. x itself.
double expected_M(double x);
double expected_M(const dyn::DensityMatrix2& rho);

/// Iterates 2n steps from q^2 and reports the first crossing of 1/2.
/// Throws std::invalid_argument for q^2 outside [0, 1] or n < 1.
ChaosVerdict detect(double q_squared, std::uint32_t n, const LogisticParams& p = LogisticParams{});

/// (n - 1) / log2(a); throws std::invalid_argument for a <= 1.
double theoretical_lower_bound(std::uint32_t n, double a);

}  // namespace qsat::chaos

#include "qsat/chaos.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsat::chaos {

LogisticParams::LogisticParams(double a) : a_(a) {
    if (!(a >= 0.0 && a <= 4.0)) throw std::invalid_argument("logistic parameter a = " + std::to_string(a) + " outside [0, 4]");
}

double logistic_step(double x, const LogisticParams& p) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("logistic_step: x = " + std::to_string(x) + " outside [0, 1]");
    return p.a() * x * (1.0 - x);
}

ChaosTrace iterate(double x0, const LogisticParams& p, std::size_t steps) {
    ChaosTrace trace;
    trace.xs.reserve(steps + 1);
    double x = x0;
    for (std::size_t m = 0;; ++m) {
        trace.xs.push_back(x);
        if (!trace.hit && x > 0.5) trace.hit = m;
        if (m == steps) break;
        x = logistic_step(x, p);
    }
    return trace;
}

dyn::DensityMatrix2 density_embedding(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("density_embedding: x outside [0, 1]");
    return dyn::DensityMatrix2::diagonal(1.0 - x, x);
}

double expected_M(double x) { return expected_M(density_embedding(x)); }

double expected_M(const dyn::DensityMatrix2& rho) { return (rho.matrix() * dyn::projector1()).trace().real(); }

ChaosVerdict detect(double q_squared, std::uint32_t n, const LogisticParams& p) {
    if (!(q_squared >= 0.0 && q_squared <= 1.0)) throw std::invalid_argument("detect: q^2 outside [0, 1]");
    if (n < 1) throw std::invalid_argument("detect: n must be >= 1");
    ChaosVerdict v;
    v.window = 2 * static_cast<std::size_t>(n);
    v.trace = iterate(q_squared, p, v.window);
    v.m_hit = v.trace.hit;
    v.satisfiable = v.m_hit.has_value();
    v.lower_bound = p.a() > 1.0 ? theoretical_lower_bound(n, p.a()) : 0.0;
    return v;
}

double theoretical_lower_bound(std::uint32_t n, double a) {
    if (!(a > 1.0)) throw std::invalid_argument("theoretical_lower_bound: a must be > 1");
    return (static_cast<double>(n) - 1.0) / std::log2(a);
}

}  // namespace qsat::chaos

#include "qsat/stochastic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsat::stochastic {

using dyn::Mat2;

namespace {

constexpr Complex kI{0.0, 1.0};

bool is_integer(double v) { return std::isfinite(v) && std::floor(v) == v; }

}  // namespace

InputAmplitudes::InputAmplitudes(Complex alpha0, Complex alpha1) : a0_(alpha0), a1_(alpha1) {
    const double norm = std::norm(a0_) + std::norm(a1_);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw std::invalid_argument("input state is not normalized: |a0|^2 + |a1|^2 = " + std::to_string(norm));
    }
}

TwoLevelHamiltonian::TwoLevelHamiltonian(double e0, double e1) : e0_(e0), e1_(e1) {
    if (!(e0 < e1)) throw std::invalid_argument("energies must satisfy E0 < E1");
}

Susceptibility::Susceptibility(Complex gamma_minus) : g_(gamma_minus) {
    if (!(g_.real() > 0.0) || !std::isfinite(g_.imag())) {
        throw std::invalid_argument("susceptibility needs Re gamma > 0 (got " + std::to_string(g_.real()) + ")");
    }
}

GeneratorPair damping_generator(const Susceptibility& g, GeneratorForm form) {
    using dyn::Superoperator;
    const Mat2 D = dyn::lowering();
    const Mat2 Dd = D.adjoint();
    const Mat2 N = Dd * D;  // |e1><e1|
    const double re = g.re();
    const double im = g.im();
    const double jump = form == GeneratorForm::Gksl ? 2.0 : 1.0;

    // i Im(g) [rho, N]
    const Superoperator rot = (kI * im) * (Superoperator::right(N) - Superoperator::left(N));
    const Superoperator anti = Superoperator::left(N) + Superoperator::right(N);

    Superoperator schr = rot + Complex(re * jump) * Superoperator::sandwich(D, Dd) - Complex(re) * anti;
    // i Im(g) [N, x] + Re(g) (jump D^+ x D - {N, x})
    Superoperator heis = (kI * im) * (Superoperator::left(N) - Superoperator::right(N)) +
                         Complex(re * jump) * Superoperator::sandwich(Dd, D) - Complex(re) * anti;

    const std::string tag = form == GeneratorForm::Gksl ? "damping" : "damping-raw";
    schr.set_label(tag + "/schrodinger");
    heis.set_label(tag + "/heisenberg");
    return {std::move(schr), std::move(heis)};
}

DampingRates damping_rates(const Susceptibility& g) { return {2.0 * g.re(), g.re(), g.im()}; }

namespace {

EffectiveHamiltonian diagonal_hamiltonian(double h0, double h1, const TwoLevelHamiltonian& H, bool strict) {
    EffectiveHamiltonian eff;
    eff.h = Mat2::Zero();
    eff.h(0, 0) = h0;
    eff.h(1, 1) = h1;
    eff.delta = h1 - h0;
    if (!is_integer(H.e0()) || !is_integer(H.e1())) {
        if (strict) throw std::invalid_argument("energies must be integers for a periodic evolution");
        eff.warnings.emplace_back("non-integer energies: the coherent evolution need not have a commensurate period");
    }
    if (std::abs(eff.delta) > 0.0) {
        eff.period = 2.0 * std::numbers::pi / std::abs(eff.delta);
    } else {
        eff.warnings.emplace_back("degenerate effective Hamiltonian (E1 = E0 + 1): evolution is stationary; "
                                  "choose E1 >= E0 + 2");
    }
    return eff;
}

}  // namespace

EffectiveHamiltonian effective_hamiltonian(const TwoLevelHamiltonian& H, bool strict) {
    return diagonal_hamiltonian(H.e0() + 1.0, H.e1(), H, strict);
}

AdaptiveDynamics adapt(const InputAmplitudes& psi, const TwoLevelHamiltonian& H, const Susceptibility& g,
                       double zero_tol) {
    const double a0 = std::abs(psi.alpha0());
    const double a1 = std::abs(psi.alpha1());
    if (a1 <= zero_tol) return {Coherent{effective_hamiltonian(H), false}};
    if (a0 <= zero_tol) return {Coherent{diagonal_hamiltonian(H.e0(), H.e1() + 1.0, H, false), true}};
    return {Damping{damping_generator(g)}};
}

dyn::DensityMatrix2 evolve_adaptive(const AdaptiveDynamics& d, const dyn::DensityMatrix2& rho0, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("evolve_adaptive: t must be >= 0");
    if (d.is_damping()) return dyn::evolve(d.damping().generators.schrodinger, rho0, t);

    // e^{-iHt} rho e^{iHt} with H diagonal: rho_01 picks up e^{i (h1 - h0) t}.
    const Mat2& h = d.coherent().hamiltonian.h;
    const double phase = (h(1, 1).real() - h(0, 0).real()) * t;
    Mat2 m = rho0.matrix();
    m(0, 1) *= std::polar(1.0, phase);
    m(1, 0) = std::conj(m(0, 1));
    return dyn::DensityMatrix2(m);
}

dyn::DensityMatrix2 ClassifierConfig::default_probe() {
    const double h = std::numbers::sqrt2 / 2.0;
    return dyn::DensityMatrix2::pure(h, h);
}

ClassifierConfig ClassifierConfig::for_susceptibility(const Susceptibility& g, double horizon_factor, double threshold) {
    ClassifierConfig cfg;
    cfg.horizon = horizon_factor / g.re();
    cfg.dt = cfg.horizon / 1000.0;
    cfg.threshold = threshold;
    return cfg;
}

void ClassifierConfig::validate() const {
    if (!(horizon > 0.0)) throw std::invalid_argument("classifier horizon must be > 0");
    if (!(dt > 0.0 && dt < horizon)) throw std::invalid_argument("classifier dt must lie in (0, horizon)");
    if (!(threshold > 0.0 && threshold < 1.0)) throw std::invalid_argument("classifier threshold must lie in (0, 1)");
    if (probe.population(1) < 0.25 || std::abs(probe.coherence()) < 0.25) {
        throw std::invalid_argument("probe needs p1 >= 0.25 and |rho_01| >= 0.25");
    }
}

std::optional<double> fit_decay_rate(const std::vector<double>& t, const std::vector<double>& y, double floor) {
    double st = 0, sy = 0, stt = 0, sty = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < t.size() && i < y.size(); ++i) {
        if (!(y[i] > floor)) continue;
        const double ly = std::log(y[i]);
        st += t[i];
        sy += ly;
        stt += t[i] * t[i];
        sty += t[i] * ly;
        ++n;
    }
    if (n < 2) return std::nullopt;
    const double denom = static_cast<double>(n) * stt - st * st;
    if (denom == 0.0) return std::nullopt;
    return -(static_cast<double>(n) * sty - st * sy) / denom;
}

DynVerdict classify(const AdaptiveDynamics& d, const ClassifierConfig& cfg) {
    cfg.validate();
    const auto steps = static_cast<std::size_t>(std::llround(cfg.horizon / cfg.dt));

    DynVerdict v;
    v.trajectory.reserve(steps + 1);
    std::vector<double> ts;
    std::vector<double> p1s;
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = std::min(cfg.horizon, static_cast<double>(k) * cfg.dt);
        const auto rho = evolve_adaptive(d, cfg.probe, t);
        const auto c = rho.coherence();
        v.trajectory.push_back({t, rho.population(1), std::abs(c), std::arg(c)});
        ts.push_back(t);
        p1s.push_back(rho.population(1));
    }

    double tail = 0.0;
    std::size_t count = 0;
    for (const auto& pt : v.trajectory) {
        if (pt.t >= 0.5 * cfg.horizon) {
            tail += pt.p1;
            ++count;
        }
    }
    v.tail_mean = tail / static_cast<double>(count);

    const double p1_0 = cfg.probe.population(1);
    v.damped = v.tail_mean < cfg.threshold * p1_0;
    const bool trivially_sat = !d.is_damping() && d.coherent().trivially_sat;
    v.satisfiable = v.damped || trivially_sat;
    if (v.damped) v.fitted_rate = fit_decay_rate(ts, p1s, 1e-6 * p1_0);
    return v;
}

}  // namespace qsat::stochastic

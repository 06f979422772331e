#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsat/dynamics.hpp"

namespace qsat::stochastic {

using dyn::Complex;

/// psi = alpha0 e0 + alpha1 e1 with |alpha0|^2 + |alpha1|^2 = 1 (within 1e-12).
class InputAmplitudes {
public:
    InputAmplitudes(Complex alpha0, Complex alpha1);
    Complex alpha0() const noexcept { return a0_; }
    Complex alpha1() const noexcept { return a1_; }

private:
    Complex a0_;
    Complex a1_;
};

/// H_S = E0 |e0><e0| + E1 |e1><e1| with E0 < E1.
class TwoLevelHamiltonian {
public:
    TwoLevelHamiltonian(double e0 = 0.0, double e1 = 2.0);
    double e0() const noexcept { return e0_; }
    double e1() const noexcept { return e1_; }
    double bohr_frequency() const noexcept { return e1_ - e0_; }

private:
    double e0_;
    double e1_;
};

/// Complex susceptibility gamma_-; Re gamma_- > 0.
class Susceptibility {
public:
    explicit Susceptibility(Complex gamma_minus);
    Complex value() const noexcept { return g_; }
    double re() const noexcept { return g_.real(); }
    double im() const noexcept { return g_.imag(); }

private:
    Complex g_;
};

enum class GeneratorForm {
    // L rho = i Im(g) [rho, D^+D] + Re(g) (2 D rho D^+ - {D^+D, rho}); trace preserving.
    Gksl,
    // Same with D rho D^+ instead of 2 D rho D^+. Leaks trace; diagnostics only.
    RawCoefficients,
};

struct GeneratorPair {
    dyn::Superoperator schrodinger;  // acts on density matrices
    dyn::Superoperator heisenberg;   // acts on observables
};

struct DampingRates {
    double population;  // 2 Re g
    double coherence;   // Re g
    double rotation;    // Im g
};

/// Damping generator pair for D = |e0><e1|, D^+D = |e1><e1|.
GeneratorPair damping_generator(const Susceptibility& g, GeneratorForm form = GeneratorForm::Gksl);
DampingRates damping_rates(const Susceptibility& g);

struct EffectiveHamiltonian {
    dyn::Mat2 h;                    // diagonal
    double delta = 0.0;             // phase frequency of rho_01
    std::optional<double> period;   // 2 pi / |delta|; empty when stationary
    std::vector<std::string> warnings;

    bool stationary() const noexcept { return !period.has_value(); }
};

/// H_S + |e0><e0| = diag(E0 + 1, E1), delta = E1 - (E0 + 1).
/// strict: non-integer energies throw; otherwise they only add a warning.
EffectiveHamiltonian effective_hamiltonian(const TwoLevelHamiltonian& H, bool strict = false);

struct Damping {
    GeneratorPair generators;
};

struct Coherent {
    EffectiveHamiltonian hamiltonian;
    bool trivially_sat = false;  // alpha0 = 0: the input is e1 itself
};

struct AdaptiveDynamics {
    std::variant<Damping, Coherent> variant;

    bool is_damping() const noexcept { return std::holds_alternative<Damping>(variant); }
    const Damping& damping() const { return std::get<Damping>(variant); }
    const Coherent& coherent() const { return std::get<Coherent>(variant); }
};

inline constexpr double kDefaultZeroTolerance = 1e-12;

/// The interaction depends on psi only through which amplitudes vanish:
///   |alpha0| |alpha1| > tol -> Damping (independent of the alpha values)
///   |alpha1| <= tol         -> Coherent with H_S + |e0><e0|
///   |alpha0| <= tol         -> Coherent with H_S + |e1><e1|, trivially SAT
/// tol = 0 gives the exact zero test.
AdaptiveDynamics adapt(const InputAmplitudes& psi, const TwoLevelHamiltonian& H, const Susceptibility& g,
                       double zero_tol = kDefaultZeroTolerance);

/// Damping: dynamics_core evolve. Coherent: exact diagonal unitary conjugation.
dyn::DensityMatrix2 evolve_adaptive(const AdaptiveDynamics& dyn, const dyn::DensityMatrix2& rho0, double t);

struct ClassifierConfig {
    dyn::DensityMatrix2 probe = default_probe();
    double horizon = 20.0;
    double dt = 0.02;
    double threshold = 0.1;

    /// (e0 + e1)/sqrt(2)
    static dyn::DensityMatrix2 default_probe();
    /// horizon = factor / Re g, 1000 grid steps.
    static ClassifierConfig for_susceptibility(const Susceptibility& g, double horizon_factor = 20.0,
                                               double threshold = 0.1);
    /// Throws std::invalid_argument unless T > 0, 0 < dt < T, threshold in (0, 1),
    /// and the probe has p1 >= 0.25 and |rho_01| >= 0.25.
    void validate() const;
};

struct TrajectoryPoint {
    double t;
    double p1;
    double coh_abs;
    double coh_phase;
};

struct DynVerdict {
    bool damped = false;
    bool satisfiable = false;
    double tail_mean = 0.0;
    std::optional<double> fitted_rate;
    std::vector<TrajectoryPoint> trajectory;
};

/// Samples p1(t) and rho_01(t) on [0, T]; damped iff the mean of p1 over
/// [T/2, T] is below threshold * p1(0). fitted_rate is the least-squares slope
/// of -log p1 over the samples with p1 > 1e-6 p1(0), attached when damped.
DynVerdict classify(const AdaptiveDynamics& dyn, const ClassifierConfig& cfg);

/// Least-squares decay rate of y(t) ~ C e^{-k t} over points with y > floor.
std::optional<double> fit_decay_rate(const std::vector<double>& t, const std::vector<double>& y, double floor);

}  // namespace qsat::stochastic

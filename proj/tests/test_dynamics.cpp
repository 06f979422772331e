#include <doctest.h>

#include <cmath>
#include <random>

#include "qsat/dynamics.hpp"
#include "qsat/error.hpp"
#include "qsat/stochastic.hpp"

using namespace qsat::dyn;

namespace {

template <typename M>
double max_abs(const Eigen::MatrixBase<M>& m) {
    return m.cwiseAbs().maxCoeff();
}

Mat2 random_matrix(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = {g(rng), g(rng)};
    return m;
}

DensityMatrix2 random_density(std::mt19937_64& rng) {
    const Mat2 a = random_matrix(rng);
    Mat2 rho = a * a.adjoint();
    rho /= rho.trace();
    return DensityMatrix2(rho);
}

Superoperator damping(Complex g) {
    return qsat::stochastic::damping_generator(qsat::stochastic::Susceptibility(g)).schrodinger;
}

}  // namespace

TEST_CASE("commutator identities") {
    CHECK(max_abs(commutator(sigma3(), sigma3())) == 0.0);
    CHECK(max_abs(anticommutator(projector1(), projector1()) - 2.0 * projector1()) == 0.0);
    const Mat2 d = lowering();
    CHECK(max_abs(commutator(d, d.adjoint()) - (projector0() - projector1())) == 0.0);
}

TEST_CASE("vec convention and superoperator builders") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) {
        const Mat2 a = random_matrix(rng), b = random_matrix(rng), x = random_matrix(rng);
        CHECK(max_abs(unvec(vec(x)) - x) == 0.0);
        CHECK(vec(x)(1) == x(1, 0));
        CHECK(max_abs(Superoperator::sandwich(a, b)(x) - a * x * b) < 1e-12);
        CHECK(max_abs(Superoperator::left(a)(x) - a * x) < 1e-12);
        CHECK(max_abs(Superoperator::right(b)(x) - x * b) < 1e-12);
        const Mat2 h = a + a.adjoint();
        CHECK(max_abs(Superoperator::hamiltonian(h)(x) - Complex(0, -1) * commutator(h, x)) < 1e-12);
        CHECK(Superoperator::hamiltonian(h).is_trace_preserving());
    }
    CHECK_FALSE(Superoperator::left(projector1()).is_trace_preserving());
}

TEST_CASE("expm_superop") {
    const Superoperator L = damping({1.0, 0.5});
    CHECK(max_abs(expm_superop(L, 0.0).matrix() - Mat4::Identity()) < 1e-14);

    Mat4 diag = Mat4::Zero();
    const Complex lam[] = {0.0, -1.0, {-0.5, 2.0}, {-3.0, -1.0}};
    for (int i = 0; i < 4; ++i) diag(i, i) = lam[i];
    const auto e = expm_superop(Superoperator(diag), 0.7).matrix();
    for (int i = 0; i < 4; ++i) CHECK(std::abs(e(i, i) - std::exp(0.7 * lam[i])) < 1e-13);

    CHECK_THROWS_AS(expm_superop(L, -1.0), std::invalid_argument);
}

TEST_CASE("property: expm semigroup law and eigen vs scaling-squaring") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int k = 0; k < 50; ++k) {
        const Complex g(0.1 + u(rng), u(rng) - 1.5);
        const auto L = damping(g);
        const double s = u(rng), t = u(rng);
        const Mat4 lhs = expm_superop(L, s + t).matrix();
        const Mat4 rhs = expm_superop(L, s).matrix() * expm_superop(L, t).matrix();
        CHECK(max_abs(lhs - rhs) < 1e-10);

        bool ok = false;
        const Mat4 a = t * L.matrix();
        const Mat4 ee = detail::expm_eigen(a, &ok);
        if (ok) CHECK(max_abs(ee - detail::expm_scaling_squaring(a)) < 1e-10);
    }
}

TEST_CASE("expm of a defective matrix falls back to scaling and squaring") {
    // Jordan block: exp(t [[0,1],[0,0]]) = [[1,t],[0,1]] on the first two coordinates.
    Mat4 j = Mat4::Zero();
    j(0, 1) = 1.0;
    bool ok = true;
    (void)detail::expm_eigen(j, &ok);
    CHECK_FALSE(ok);
    const Mat4 e = expm_superop(Superoperator(j), 2.5).matrix();
    Mat4 ref = Mat4::Identity();
    ref(0, 1) = 2.5;
    CHECK(max_abs(e - ref) < 1e-12);
}

TEST_CASE("evolve") {
    std::mt19937_64 rng(11);
    const auto rho = random_density(rng);
    const auto L = damping({1.0, 0.3});
    CHECK(trace_distance(evolve(L, rho, 0.0), rho) < 1e-14);
    const Superoperator zero(Mat4::Zero(), "zero");
    for (double t : {0.5, 3.0, 40.0}) CHECK(trace_distance(evolve(zero, rho, t), rho) < 1e-14);

    const auto ground = DensityMatrix2::pure(1.0, 0.0);
    for (double t : {0.1, 1.0, 10.0, 100.0}) CHECK(trace_distance(evolve(L, ground, t), ground) < 1e-14);

    // rho11 -> 0 from the excited state.
    const auto excited = DensityMatrix2::pure(0.0, 1.0);
    CHECK(std::abs(evolve(L, excited, 1.0).population(1) - std::exp(-2.0)) < 1e-12);

    const Superoperator leaky = Superoperator::left(projector1()).set_label("leaky");
    try {
        (void)evolve(leaky, rho, 1.0);
        FAIL("expected NumericalError");
    } catch (const qsat::NumericalError& e) {
        CHECK(std::string(e.what()).find("leaky") != std::string::npos);
    }
}

TEST_CASE("evolve matches the closed form") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 40; ++k) {
        const Complex g(0.05 + 5 * u(rng), 4 * u(rng) - 2);
        const auto rho = random_density(rng);
        const double t = 10 * u(rng);
        const Mat2 ref = amplitude_damping_closed_form(rho.matrix(), g, t);
        CHECK(max_abs(evolve(damping(g), rho, t).matrix() - ref) < 1e-10);
    }
}

TEST_CASE("spectrum") {
    const auto z = spectrum(Superoperator(Mat4::Zero()));
    CHECK(z.zero_modes == 4);
    CHECK(z.gap == 0.0);

    for (double im : {-1.0, 0.0, 1.0}) {
        const auto s = spectrum(damping({1.0, im}));
        CHECK(s.zero_modes == 1);
        CHECK(std::abs(s.gap - 1.0) < 1e-10);
        // 0, -1 +/- i Im g, -2
        CHECK(std::abs(s.eigenvalues[0]) < 1e-10);
        CHECK(std::abs(s.eigenvalues[3] - Complex(-2.0, 0.0)) < 1e-10);
        const Complex a = s.eigenvalues[1], b = s.eigenvalues[2];
        CHECK(std::abs(a.real() + 1.0) < 1e-10);
        CHECK(std::abs(b.real() + 1.0) < 1e-10);
        CHECK(std::abs(std::abs(a.imag()) - std::abs(im)) < 1e-10);
        CHECK(std::abs(a.imag() + b.imag()) < 1e-10);
    }
}

TEST_CASE("trace distance") {
    std::mt19937_64 rng(17);
    const auto p = DensityMatrix2::pure(1.0, 0.0), q = DensityMatrix2::pure(0.0, 1.0);
    CHECK(trace_distance(p, q) == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 0; k < 100; ++k) {
        const auto a = random_density(rng), b = random_density(rng), c = random_density(rng);
        CHECK(trace_distance(a, a) < 1e-14);
        CHECK(std::abs(trace_distance(a, b) - trace_distance(b, a)) < 1e-14);
        CHECK(trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-12);
        CHECK(trace_distance(a, b) <= 1.0 + 1e-12);
    }
}

TEST_CASE("density matrix validation") {
    Mat2 m = Mat2::Zero();
    m(0, 0) = 0.5;
    CHECK_THROWS_AS(DensityMatrix2{m}, std::invalid_argument);  // trace 0.5
    m(1, 1) = 0.5;
    m(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix2{m}, std::invalid_argument);  // not hermitian
    m(1, 0) = 0.1;
    CHECK_NOTHROW(DensityMatrix2{m});
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix2{m}, std::invalid_argument);  // negative eigenvalue
    CHECK(DensityMatrix2::pure(0.6, 0.8).purity() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(DensityMatrix2::diagonal(0.5, 0.5).purity() == doctest::Approx(0.5).epsilon(1e-14));
}

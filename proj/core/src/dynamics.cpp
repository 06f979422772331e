#include "qsat/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "qsat/error.hpp"

namespace qsat::dyn {

namespace {

constexpr Complex kI{0.0, 1.0};

double one_norm(const Mat4& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

}  // namespace

Mat2 ket_bra(int i, int j) {
    Mat2 m = Mat2::Zero();
    m(i, j) = 1.0;
    return m;
}

Mat2 sigma3() {
    Mat2 m = Mat2::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }
Mat2 anticommutator(const Mat2& a, const Mat2& b) { return a * b + b * a; }

Vec4 vec(const Mat2& x) { return Vec4(x(0, 0), x(1, 0), x(0, 1), x(1, 1)); }

Mat2 unvec(const Vec4& v) {
    Mat2 m;
    m << v(0), v(2), v(1), v(3);
    return m;
}

Superoperator Superoperator::identity() { return Superoperator(Mat4::Identity()); }

Superoperator Superoperator::left(const Mat2& a) { return sandwich(a, Mat2::Identity()); }

Superoperator Superoperator::right(const Mat2& b) { return sandwich(Mat2::Identity(), b); }

Superoperator Superoperator::sandwich(const Mat2& a, const Mat2& b) {
    // (B^T kron A)
    const Mat2 bt = b.transpose();
    Mat4 k;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) k.block<2, 2>(2 * r, 2 * c) = bt(r, c) * a;
    return Superoperator(k);
}

Superoperator Superoperator::hamiltonian(const Mat2& h) {
    return Superoperator(-kI * (left(h).matrix() - right(h).matrix()));
}

bool Superoperator::is_trace_preserving(double tol) const {
    const Vec4 trace_row = vec(Mat2::Identity());
    const Eigen::RowVector4cd row = trace_row.transpose() * m_;
    return row.cwiseAbs().maxCoeff() <= tol;
}

DensityMatrix2::DensityMatrix2(const Mat2& m) : m_(m) {
    if (!m_.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("density matrix is not hermitian");
    if (std::abs(m_.trace() - 1.0) > 1e-12) throw std::invalid_argument("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Mat2> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) throw std::invalid_argument("density matrix is not positive semidefinite");
}

DensityMatrix2 DensityMatrix2::pure(Complex alpha0, Complex alpha1) {
    const Eigen::Vector2cd psi(alpha0, alpha1);
    return DensityMatrix2(psi * psi.adjoint());
}

DensityMatrix2 DensityMatrix2::diagonal(double p0, double p1) {
    Mat2 m = Mat2::Zero();
    m(0, 0) = p0;
    m(1, 1) = p1;
    return DensityMatrix2(m);
}

double DensityMatrix2::purity() const { return (m_ * m_).trace().real(); }

namespace detail {

Mat4 expm_eigen(const Mat4& a, bool* ok) {
    Eigen::ComplexEigenSolver<Mat4> es(a);
    bool good = es.info() == Eigen::Success;
    Mat4 result = Mat4::Identity();
    if (good) {
        const Mat4& v = es.eigenvectors();
        Eigen::FullPivLU<Mat4> lu(v);
        good = lu.isInvertible();
        if (good) {
            const Mat4 vinv = lu.inverse();
            const double cond = one_norm(v) * one_norm(vinv);
            const Mat4 recon = v * es.eigenvalues().asDiagonal() * vinv;
            const double resid = one_norm(recon - a);
            good = cond < 1e6 && resid <= 1e-13 * std::max(1.0, one_norm(a)) * cond;
            const Eigen::Vector4cd expd = es.eigenvalues().array().exp();
            result = v * expd.asDiagonal() * vinv;
        }
    }
    if (ok) *ok = good;
    return result;
}

Mat4 expm_scaling_squaring(const Mat4& a) {
    // Scale to norm <= 1/2, Taylor to order 20 (remainder < 1e-25), square back.
    const double norm = one_norm(a);
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Mat4 scaled = a / std::ldexp(1.0, squarings);

    Mat4 term = Mat4::Identity();
    Mat4 sum = Mat4::Identity();
    for (int k = 1; k <= 20; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

}  // namespace detail

Superoperator expm_superop(const Superoperator& L, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("expm_superop: t must be >= 0");
    if (t == 0.0) return Superoperator::identity().set_label(L.label());
    const Mat4 a = t * L.matrix();
    bool ok = false;
    Mat4 e = detail::expm_eigen(a, &ok);
    if (!ok) e = detail::expm_scaling_squaring(a);
    return Superoperator(e, L.label());
}

DensityMatrix2 evolve(const Superoperator& L, const DensityMatrix2& rho, double t) {
    const double tol = 1e-12 * std::max(1.0, one_norm(L.matrix()));
    if (!L.is_trace_preserving(tol)) {
        throw NumericalError("generator '" + (L.label().empty() ? std::string("<unnamed>") : L.label()) +
                             "' is not trace preserving");
    }
    Mat2 m = expm_superop(L, t)(rho.matrix());

    m = 0.5 * (m + m.adjoint());
    m /= m.trace().real();
    Eigen::SelfAdjointEigenSolver<Mat2> es(m);
    const double lo = es.eigenvalues().minCoeff();
    if (lo < -1e-10) {
        throw NumericalError("evolution under '" + L.label() + "' produced eigenvalue " + std::to_string(lo));
    }
    if (lo < 0.0) {
        Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0);
        m = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
        m = 0.5 * (m + m.adjoint());
        m /= m.trace().real();
    }
    // Exact unit diagonal sum.
    m(1, 1) = Complex(1.0 - m(0, 0).real(), 0.0);
    m(0, 0) = Complex(m(0, 0).real(), 0.0);
    return DensityMatrix2(m);
}

Mat2 heisenberg_evolve(const Superoperator& L_heis, const Mat2& x, double t) { return expm_superop(L_heis, t)(x); }

Spectrum spectrum(const Superoperator& L) {
    Eigen::ComplexEigenSolver<Mat4> es(L.matrix(), false);
    Spectrum s;
    for (int i = 0; i < 4; ++i) s.eigenvalues.push_back(es.eigenvalues()(i));
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    bool have_gap = false;
    for (const auto& ev : s.eigenvalues) {
        if (std::abs(ev) < 1e-10) {
            ++s.zero_modes;
        } else {
            const double g = std::abs(ev.real());
            s.gap = have_gap ? std::min(s.gap, g) : g;
            have_gap = true;
        }
    }
    return s;
}

double trace_distance(const Mat2& a, const Mat2& b) {
    Eigen::JacobiSVD<Mat2> svd(a - b);
    return 0.5 * svd.singularValues().sum();
}

Mat2 amplitude_damping_closed_form(const Mat2& rho0, Complex gamma, double t) {
    const double decay = std::exp(-2.0 * gamma.real() * t);
    const Complex rotate = std::exp(Complex(-gamma.real(), gamma.imag()) * t);
    Mat2 m;
    m << rho0(0, 0) + rho0(1, 1) * (1.0 - decay), rho0(0, 1) * rotate,
         rho0(1, 0) * std::conj(rotate), rho0(1, 1) * decay;
    return m;
}

}  // namespace qsat::dyn

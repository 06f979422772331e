#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qsat::dyn {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec4 = Eigen::Vector4cd;
using Mat4 = Eigen::Matrix4cd;

// Two-level operators in the {e0, e1} basis.
Mat2 ket_bra(int i, int j);            // |e_i><e_j|
inline Mat2 projector0() { return ket_bra(0, 0); }
inline Mat2 projector1() { return ket_bra(1, 1); }
inline Mat2 lowering() { return ket_bra(0, 1); }  // D = |e0><e1|
Mat2 sigma3();                          // diag(1, -1)

Mat2 commutator(const Mat2& a, const Mat2& b);
Mat2 anticommutator(const Mat2& a, const Mat2& b);

// Column-stacking vectorization: vec(X) = (X00, X10, X01, X11)^T, so that
// vec(A X B) = (B^T kron A) vec(X).
Vec4 vec(const Mat2& x);
Mat2 unvec(const Vec4& v);

/// Linear map on 2x2 matrices, stored as a 4x4 matrix acting on vec(X).
/// Build through the named constructors so the vectorization order stays fixed.
class Superoperator {
public:
    Superoperator() : m_(Mat4::Zero()) {}
    explicit Superoperator(Mat4 m, std::string label = {}) : m_(std::move(m)), label_(std::move(label)) {}

    static Superoperator identity();
    static Superoperator left(const Mat2& a);                    // X -> A X
    static Superoperator right(const Mat2& b);                   // X -> X B
    static Superoperator sandwich(const Mat2& a, const Mat2& b); // X -> A X B
    /// X -> -i[H, X]
    static Superoperator hamiltonian(const Mat2& h);

    const Mat4& matrix() const noexcept { return m_; }
    const std::string& label() const noexcept { return label_; }
    Superoperator& set_label(std::string l) { label_ = std::move(l); return *this; }

    Mat2 operator()(const Mat2& x) const { return unvec(m_ * vec(x)); }

    Superoperator operator+(const Superoperator& o) const { return Superoperator(m_ + o.m_, label_); }
    Superoperator operator-(const Superoperator& o) const { return Superoperator(m_ - o.m_, label_); }
    Superoperator operator*(const Superoperator& o) const { return Superoperator(m_ * o.m_, label_); }
    friend Superoperator operator*(Complex s, const Superoperator& o) { return Superoperator(s * o.m_, o.label_); }

    /// Tr(L(X)) = 0 for all X, within tol (max-abs of vec(I)^T L).
    bool is_trace_preserving(double tol = 1e-12) const;

private:
    Mat4 m_;
    std::string label_;
};

/// 2x2 density matrix: hermitian and unit-trace within 1e-12, eigenvalues >= -1e-10.
class DensityMatrix2 {
public:
    /// Throws std::invalid_argument when the invariants do not hold.
    explicit DensityMatrix2(const Mat2& m);

    static DensityMatrix2 pure(Complex alpha0, Complex alpha1);
    static DensityMatrix2 diagonal(double p0, double p1);

    const Mat2& matrix() const noexcept { return m_; }
    double population(int level) const { return m_(level, level).real(); }
    /// rho_01 = <e0|rho|e1>
    Complex coherence() const { return m_(0, 1); }
    double purity() const;

private:
    Mat2 m_;
};

/// exp(t L) for t >= 0. Eigendecomposition when the eigenbasis is well
/// conditioned, scaling-and-squaring otherwise.
Superoperator expm_superop(const Superoperator& L, double t);

namespace detail {
// Both routes exposed for cross-checking.
Mat4 expm_eigen(const Mat4& a, bool* ok = nullptr);
Mat4 expm_scaling_squaring(const Mat4& a);
}  // namespace detail

/// unvec(exp(tL) vec(rho)), re-projected onto hermitian trace-one matrices.
/// Throws NumericalError if L is not trace preserving or the result has an
/// eigenvalue below -1e-10; eigenvalues in [-1e-10, 0) are clamped to 0.
DensityMatrix2 evolve(const Superoperator& L, const DensityMatrix2& rho, double t);

/// Observable evolution exp(t L_H)(x), no re-projection.
Mat2 heisenberg_evolve(const Superoperator& L_heis, const Mat2& x, double t);

struct Spectrum {
    std::vector<Complex> eigenvalues;  // sorted by descending real part
    int zero_modes = 0;                // |lambda| < 1e-10
    double gap = 0.0;                  // min |Re lambda| over the nonzero eigenvalues; 0 if none
};

Spectrum spectrum(const Superoperator& L);

/// (1/2) sum |eigenvalues of a - b|.
double trace_distance(const Mat2& a, const Mat2& b);
inline double trace_distance(const DensityMatrix2& a, const DensityMatrix2& b) {
    return trace_distance(a.matrix(), b.matrix());
}

/// Closed-form solution of the amplitude-damping generator
///   L rho = i Im(g) [rho, D^+D] + Re(g) (2 D rho D^+ - {D^+D, rho})
/// whose populations and coherences decouple:
///   rho11(t) = rho11(0) e^{-2 Re(g) t},  rho01(t) = rho01(0) e^{(i Im(g) - Re(g)) t}.
Mat2 amplitude_damping_closed_form(const Mat2& rho0, Complex gamma, double t);

}  // namespace qsat::dyn

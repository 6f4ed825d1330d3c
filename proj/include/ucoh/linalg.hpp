#pragma once

// Dense complex linear algebra in the fixed real canonical basis e_mu = e_mu^*.
// In this basis the antiunitary involution f -> f^* is componentwise complex
// conjugation, so conj(A), A^T and A^+ are plain entrywise rearrangements.

#include <complex>

#include <Eigen/Dense>

namespace ucoh {

using cplx = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// A complex number held as its logarithm: value = exp(re + i*im).
/// The imaginary part is not reduced modulo 2*pi.
struct LogComplex {
    double re = 0.0;
    double im = 0.0;

    static LogComplex from_value(cplx z) { return {std::log(std::abs(z)), std::arg(z)}; }
    static LogComplex from_log(cplx w) { return {w.real(), w.imag()}; }

    cplx log() const { return {re, im}; }
    cplx exp() const { return std::exp(log()); }
    double modulus() const { return std::exp(re); }

    LogComplex conj() const { return {re, -im}; }
    LogComplex operator+(LogComplex o) const { return {re + o.re, im + o.im}; }
    LogComplex operator-(LogComplex o) const { return {re - o.re, im - o.im}; }
    LogComplex operator-() const { return {-re, -im}; }
    LogComplex& operator+=(LogComplex o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    LogComplex operator*(double s) const { return {re * s, im * s}; }
};

ComplexVector involution(const ComplexVector& v);

ComplexMatrix mat_conj(const ComplexMatrix& a);
ComplexMatrix mat_transpose(const ComplexMatrix& a);
ComplexMatrix mat_adjoint(const ComplexMatrix& a);

ComplexMatrix identity_matrix(Eigen::Index d);

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);

/// Frobenius norm sqrt(tr A^+ A).
double hs_norm(const ComplexMatrix& a);

/// <u|v> = sum u_i v_i, the symmetric bilinear pairing.
cplx bilinear(const ComplexVector& u, const ComplexVector& v);

/// (u|v) = sum conj(u_i) v_i, the Hilbert-space inner product.
cplx sesquilinear(const ComplexVector& u, const ComplexVector& v);

bool all_finite(const ComplexMatrix& a);

struct TakagiFactors {
    ComplexMatrix F;     // unitary
    RealVector alphas;   // nonnegative, descending
};

/// Takagi factorization A = F diag(alphas) F^T of a complex symmetric matrix.
/// Throws NotSymmetric if ||A - A^T|| > tol.
TakagiFactors takagi(const ComplexMatrix& a, double tol = 1e-10);

/// log of (det M)^{-1/2}, taking the principal logarithm of every eigenvalue
/// and summing. Throws SingularMatrix when min |lambda| < 1e-12 ||M||.
LogComplex log_sqrt_det_inv(const ComplexMatrix& m);

/// Solves A X = B by partial-pivot LU; throws SingularMatrix when the
/// reciprocal condition estimate falls below 1e-14.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector solve(const ComplexMatrix& a, const ComplexVector& b);
ComplexMatrix inverse(const ComplexMatrix& a);

/// H^{-1/2} for Hermitian positive definite H.
ComplexMatrix hermitian_inv_sqrt(const ComplexMatrix& h);

/// Sum of log eigenvalues of a Hermitian positive definite matrix.
double hermitian_logdet(const ComplexMatrix& h);

}  // namespace ucoh

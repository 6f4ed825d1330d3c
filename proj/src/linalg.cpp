#include "ucoh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ucoh/errors.hpp"

namespace ucoh {

ComplexVector involution(const ComplexVector& v) { return v.conjugate(); }

ComplexMatrix mat_conj(const ComplexMatrix& a) { return a.conjugate(); }

ComplexMatrix mat_transpose(const ComplexMatrix& a) { return a.transpose(); }

ComplexMatrix mat_adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix identity_matrix(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

double operator_norm(const ComplexMatrix& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues()(0);
}

double hs_norm(const ComplexMatrix& a) { return a.norm(); }

cplx bilinear(const ComplexVector& u, const ComplexVector& v) {
    if (u.size() != v.size()) throw DimensionMismatch("bilinear: vector sizes differ");
    return (u.array() * v.array()).sum();
}

cplx sesquilinear(const ComplexVector& u, const ComplexVector& v) {
    if (u.size() != v.size()) throw DimensionMismatch("sesquilinear: vector sizes differ");
    return u.dot(v);
}

bool all_finite(const ComplexMatrix& a) {
    return a.real().allFinite() && a.imag().allFinite();
}

TakagiFactors takagi(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) throw DimensionMismatch("takagi: matrix is not square");
    const double asym = (a - a.transpose()).norm();
    if (asym > tol) throw NotSymmetric("takagi: ||A - A^T|| = " + std::to_string(asym));

    const Eigen::Index n = a.rows();
    const ComplexMatrix s = 0.5 * (a + a.transpose());

    // For A = B + iC the real symmetric [[B, C], [C, -B]] has eigenpairs
    // (+sigma, [u; v]) and (-sigma, [-v; u]); A conj(u + iv) = sigma (u + iv).
    RealMatrix embed(2 * n, 2 * n);
    embed << s.real(), s.imag(), s.imag(), -s.real();
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(embed);

    const RealVector& lam = eig.eigenvalues();  // ascending
    const double scale = std::max(lam.cwiseAbs().maxCoeff(), 1.0);
    const double cut = 64.0 * std::numeric_limits<double>::epsilon() * scale * static_cast<double>(n);

    ComplexMatrix f = ComplexMatrix::Zero(n, n);
    RealVector alphas = RealVector::Zero(n);
    Eigen::Index kept = 0;
    for (Eigen::Index k = 2 * n - 1; k >= 0 && kept < n; --k) {
        if (lam(k) <= cut) break;
        const auto col = eig.eigenvectors().col(k);
        f.col(kept) = col.head(n).cast<cplx>() + cplx(0, 1) * col.tail(n).cast<cplx>();
        alphas(kept) = lam(k);
        ++kept;
    }

    // Columns for vanishing alphas: any orthonormal completion spans conj(ker A).
    if (kept == 0) {
        f.setIdentity();
    } else if (kept < n) {
        Eigen::HouseholderQR<ComplexMatrix> qr(f.leftCols(kept));
        const ComplexMatrix q = qr.householderQ();
        f.rightCols(n - kept) = q.rightCols(n - kept);
    }
    return {f, alphas};
}

LogComplex log_sqrt_det_inv(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("log_sqrt_det_inv: matrix is not square");
    if (m.rows() == 0) return {};
    Eigen::ComplexEigenSolver<ComplexMatrix> eig(m, false);
    if (eig.info() != Eigen::Success) throw SingularMatrix("log_sqrt_det_inv: eigensolver failed");
    const auto& lam = eig.eigenvalues();
    const double guard = 1e-12 * operator_norm(m);
    cplx sum = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (std::abs(lam(i)) < guard || lam(i) == cplx(0.0))
            throw SingularMatrix("log_sqrt_det_inv: eigenvalue below singularity guard");
        sum += std::log(lam(i));
    }
    return LogComplex::from_log(-0.5 * sum);
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw DimensionMismatch("solve: shape mismatch");
    Eigen::PartialPivLU<ComplexMatrix> lu(a);
    if (a.rows() > 0 && !(lu.rcond() > 1e-14)) throw SingularMatrix("solve: matrix is numerically singular");
    return lu.solve(b);
}

ComplexVector solve(const ComplexMatrix& a, const ComplexVector& b) {
    return solve(a, ComplexMatrix(b)).col(0);
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    return solve(a, ComplexMatrix(ComplexMatrix::Identity(a.rows(), a.cols())));
}

ComplexMatrix hermitian_inv_sqrt(const ComplexMatrix& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (h + h.adjoint()));
    const RealVector& lam = eig.eigenvalues();
    if (lam.size() > 0 && !(lam.minCoeff() > 0.0))
        throw SingularMatrix("hermitian_inv_sqrt: matrix is not positive definite");
    const RealVector s = lam.cwiseSqrt().cwiseInverse();
    return eig.eigenvectors() * s.cast<cplx>().asDiagonal() * eig.eigenvectors().adjoint();
}

double hermitian_logdet(const ComplexMatrix& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
    const RealVector& lam = eig.eigenvalues();
    if (lam.size() > 0 && !(lam.minCoeff() > 0.0))
        throw SingularMatrix("hermitian_logdet: matrix is not positive definite");
    return lam.array().log().sum();
}

}  // namespace ucoh

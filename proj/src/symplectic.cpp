#include "ucoh/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ucoh/errors.hpp"

namespace ucoh {

namespace {

void require_square_pair(const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows())
        throw DimensionMismatch("symplectic: U and V must be square of equal size");
    if (u.rows() == 0) throw DimensionMismatch("symplectic: dimension must be positive");
}

void require_same_dim(const SymplecticElement& a, const SymplecticElement& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("symplectic: dimension mismatch");
}

}  // namespace

double ConstraintResiduals::max() const {
    return std::max({row_unit, row_sym, col_unit, col_sym, norm_identity});
}

ConstraintResiduals constraint_residuals(const ComplexMatrix& u, const ComplexMatrix& v) {
    require_square_pair(u, v);
    const Eigen::Index d = u.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const double nu = operator_norm(u);
    const double nv = operator_norm(v);

    ConstraintResiduals r;
    r.row_unit = operator_norm(u * u.adjoint() - v * v.adjoint() - id) / (1.0 + nu * nu);
    r.row_sym = operator_norm(u * v.transpose() - v * u.transpose()) / (1.0 + nu * nv);
    r.col_unit = operator_norm(u.adjoint() * u - v.transpose() * v.conjugate() - id) / (1.0 + nu * nu);
    r.col_sym = operator_norm(u.transpose() * v.conjugate() - v.adjoint() * u) / (1.0 + nu * nv);

    Eigen::PartialPivLU<ComplexMatrix> lu(u);
    if (d > 0 && !(lu.rcond() > 1e-14)) {
        r.norm_identity = std::numeric_limits<double>::infinity();
    } else if (d > 0) {
        const double w = operator_norm(lu.solve(v));
        r.norm_identity = std::abs(w * w + 1.0 / (nu * nu) - 1.0);
    }
    return r;
}

double SymplecticElement::log_det_modulus() const {
    const ComplexMatrix h = ComplexMatrix::Identity(dim(), dim()) + v_ * v_.adjoint();
    return 0.5 * hermitian_logdet(h);
}

SymplecticElement make_symplectic(ComplexMatrix u, ComplexMatrix v, double tol) {
    require_square_pair(u, v);
    if (!all_finite(u) || !all_finite(v)) throw ConstraintViolation("symplectic: non-finite entries", INFINITY);
    const double res = constraint_residuals(u, v).max();
    if (!(res <= tol))
        throw ConstraintViolation("symplectic: constraint residual " + std::to_string(res) + " exceeds tolerance", res);
    return SymplecticElement(std::move(u), std::move(v), res);
}

SymplecticElement identity(Eigen::Index d) {
    return make_symplectic(ComplexMatrix::Identity(d, d), ComplexMatrix::Zero(d, d));
}

SymplecticElement from_unitary(const ComplexMatrix& k, double tol) {
    if (k.rows() != k.cols()) throw DimensionMismatch("from_unitary: matrix is not square");
    const double dev = operator_norm(k.adjoint() * k - ComplexMatrix::Identity(k.rows(), k.cols()));
    if (!(dev <= tol)) throw NotUnitary("from_unitary: ||K^+K - I|| = " + std::to_string(dev));
    return make_symplectic(k, ComplexMatrix::Zero(k.rows(), k.cols()), tol);
}

SymplecticElement squeeze(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) throw DimensionMismatch("squeeze: matrix is not square");
    if (a.imag().cwiseAbs().maxCoeff() > tol || (a - a.transpose()).norm() > tol * (1.0 + a.norm()))
        throw NotRealSymmetric("squeeze: generator must be real symmetric");
    const RealMatrix re = 0.5 * (a.real() + a.real().transpose());
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(re);
    const RealMatrix& q = eig.eigenvectors();
    const RealVector ch = eig.eigenvalues().array().cosh();
    const RealVector sh = eig.eigenvalues().array().sinh();
    const RealMatrix c = q * ch.asDiagonal() * q.transpose();
    const RealMatrix s = q * sh.asDiagonal() * q.transpose();
    return make_symplectic(c.cast<cplx>(), s.cast<cplx>(), tol);
}

SymplecticElement compose(const SymplecticElement& r2, const SymplecticElement& r1, double tol) {
    require_same_dim(r2, r1);
    ComplexMatrix u = r2.U() * r1.U() + r2.V() * r1.V().conjugate();
    ComplexMatrix v = r2.U() * r1.V() + r2.V() * r1.U().conjugate();
    return make_symplectic(std::move(u), std::move(v), tol);
}

SymplecticElement inverse(const SymplecticElement& r) {
    // Constraints are invariant under this map, so the stored residual carries over.
    return SymplecticElement(r.U().adjoint(), -r.V().transpose(), r.validation_residual());
}

ComplexVector apply(const SymplecticElement& r, const ComplexVector& f) {
    if (f.size() != r.dim()) throw DimensionMismatch("apply: vector dimension mismatch");
    return r.U() * f + r.V() * f.conjugate();
}

double symplectic_form(const ComplexVector& f, const ComplexVector& g) {
    return sesquilinear(f, g).imag();
}

PolarFactors polar_factorize(const SymplecticElement& r, double tol) {
    const Eigen::Index d = r.dim();
    // T = V conj(U)^{-1} = K1 tanh(A) K1^T is symmetric with ||T|| < 1.
    const ComplexMatrix ubar_t = r.U().conjugate().transpose();
    const ComplexMatrix t = solve(ubar_t, ComplexMatrix(r.V().transpose())).transpose();
    const ComplexMatrix t_sym = 0.5 * (t + t.transpose());
    const TakagiFactors tk = takagi(t_sym, std::max(tol, 1e-8) * (1.0 + t.norm()));

    RealVector rs(d), ch(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const double tanh_r = std::min(tk.alphas(i), 1.0 - 1e-16);
        rs(i) = std::atanh(tanh_r);
        ch(i) = std::cosh(rs(i));
    }

    PolarFactors out;
    out.k1 = tk.F;
    out.a = rs.cast<cplx>().asDiagonal();
    out.k2 = ch.cwiseInverse().cast<cplx>().asDiagonal() * tk.F.adjoint() * r.U();

    const RealVector sh = rs.array().sinh();
    const ComplexMatrix u_rec = out.k1 * ch.cast<cplx>().asDiagonal() * out.k2;
    const ComplexMatrix v_rec = out.k1 * sh.cast<cplx>().asDiagonal() * out.k2.conjugate();
    out.residual = std::max((u_rec - r.U()).cwiseAbs().maxCoeff(), (v_rec - r.V()).cwiseAbs().maxCoeff());
    const double unitarity = std::max(
        operator_norm(out.k2.adjoint() * out.k2 - ComplexMatrix::Identity(d, d)),
        operator_norm(out.k1.adjoint() * out.k1 - ComplexMatrix::Identity(d, d)));
    out.residual = std::max(out.residual, unitarity);
    if (!(out.residual <= tol))
        throw FactorizationFailure("polar_factorize: recomposition residual " + std::to_string(out.residual),
                                   out.residual);
    return out;
}

SymplecticElement conjugated_free_field(const SymplecticElement& r1, const RealVector& m, double t,
                                        double tol) {
    if (m.size() != r1.dim()) throw DimensionMismatch("conjugated_free_field: spectrum length mismatch");
    const ComplexVector fwd = (m.cast<cplx>() * cplx(0, -t)).array().exp();
    const ComplexVector bwd = fwd.conjugate();
    const auto u0 = fwd.asDiagonal();
    const auto u0_rev = bwd.asDiagonal();
    const ComplexMatrix& u1 = r1.U();
    const ComplexMatrix& v1 = r1.V();
    ComplexMatrix u = u1 * u0 * u1.adjoint() - v1 * u0_rev * v1.adjoint();
    ComplexMatrix v = -(u1 * u0 * v1.transpose()) + v1 * u0_rev * u1.transpose();
    return make_symplectic(std::move(u), std::move(v), tol);
}

double element_distance(const SymplecticElement& a, const SymplecticElement& b) {
    require_same_dim(a, b);
    return std::max((a.U() - b.U()).cwiseAbs().maxCoeff(), (a.V() - b.V()).cwiseAbs().maxCoeff());
}

}  // namespace ucoh

#include "ucoh/siegel.hpp"

#include <cmath>
#include <string>

#include "ucoh/errors.hpp"

namespace ucoh {

SiegelPoint SiegelPoint::origin(Eigen::Index d) { return make_point(ComplexMatrix::Zero(d, d)); }

SiegelPoint make_point(ComplexMatrix z, const SiegelConfig& cfg) {
    if (z.rows() != z.cols() || z.rows() == 0) throw DimensionMismatch("make_point: matrix must be square and nonempty");
    if (!all_finite(z)) throw NotInDisc("make_point: non-finite entries", INFINITY);
    const double norm = operator_norm(z);
    const double asym = operator_norm(z - z.transpose());
    if (asym > cfg.symmetry_tol * (1.0 + norm))
        throw NotSymmetric("make_point: ||Z - Z^T|| = " + std::to_string(asym));
    if (!(norm < 1.0 - cfg.margin))
        throw NotInDisc("make_point: ||Z|| = " + std::to_string(norm) + " is not inside the disc", norm);
    return SiegelPoint(std::move(z), norm);
}

MoebiusResult moebius_checked(const SymplecticElement& r, const SiegelPoint& z, const SiegelConfig& cfg) {
    if (r.dim() != z.dim()) throw DimensionMismatch("moebius: dimension mismatch");
    const ComplexMatrix& u = r.U();
    const ComplexMatrix& v = r.V();
    const ComplexMatrix& zm = z.Z();

    // Right form: (UZ + V)(conj U + conj V Z)^{-1}, computed via the transposed solve.
    const ComplexMatrix num_r = u * zm + v;
    const ComplexMatrix den_r = u.conjugate() + v.conjugate() * zm;
    const ComplexMatrix right = solve(den_r.transpose(), ComplexMatrix(num_r.transpose())).transpose();

    // Left form: (U^+ + Z V^+)^{-1}(V^T + Z U^T).
    const ComplexMatrix den_l = u.adjoint() + zm * v.adjoint();
    const ComplexMatrix num_l = v.transpose() + zm * u.transpose();
    const ComplexMatrix left = solve(den_l, num_l);

    const double gap = operator_norm(right - left);
    if (!(gap <= cfg.consistency_tol))
        throw InternalInconsistency("moebius: closed forms disagree by " + std::to_string(gap));
    return {make_point(0.5 * (right + left), cfg), gap};
}

SiegelPoint moebius(const SymplecticElement& r, const SiegelPoint& z, const SiegelConfig& cfg) {
    return moebius_checked(r, z, cfg).point;
}

SymplecticElement transport_from_origin(const SiegelPoint& z) {
    const Eigen::Index d = z.dim();
    const ComplexMatrix h = ComplexMatrix::Identity(d, d) - z.Z() * z.Z().adjoint();
    ComplexMatrix u = hermitian_inv_sqrt(h);
    ComplexMatrix v = u * z.Z();
    // Loose enough for points near the boundary where U is large.
    return make_symplectic(std::move(u), std::move(v), 1e-8);
}

}  // namespace ucoh

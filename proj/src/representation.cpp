#include "ucoh/representation.hpp"

#include <cmath>
#include <string>

#include "ucoh/errors.hpp"

namespace ucoh {

namespace {

void require_dim(const SymplecticElement& r, Eigen::Index d, const char* where) {
    if (r.dim() != d) throw DimensionMismatch(std::string(where) + ": dimension mismatch");
}

// Z = U^{+-1} V^T, symmetric up to rounding.
ComplexMatrix image_of_origin(const SymplecticElement& r) {
    const ComplexMatrix z = solve(ComplexMatrix(r.U().adjoint()), ComplexMatrix(r.V().transpose()));
    return 0.5 * (z + z.transpose());
}

}  // namespace

UltracoherentState act_on_exponential(const SymplecticElement& r, const ComplexVector& f) {
    require_dim(r, f.size(), "act_on_exponential");
    const ComplexMatrix u_adj = r.U().adjoint();
    ComplexVector g = solve(u_adj, f);
    const cplx quad = bilinear(f, r.V().adjoint() * g);
    const LogComplex amp{-0.5 * r.log_det_modulus() - 0.5 * quad.real(), -0.5 * quad.imag()};
    return make_state(make_point(image_of_origin(r)), std::move(g), amp);
}

UltracoherentState act(const SymplecticElement& r, const UltracoherentState& x) {
    require_dim(r, x.dim(), "act");
    const Eigen::Index d = x.dim();
    const ComplexMatrix& z = x.Z();
    const ComplexMatrix v_adj = r.V().adjoint();
    const ComplexMatrix g = r.U().adjoint() + z * v_adj;

    // I + Z V^+ U^{+-1}; its eigenvalues have positive real part, so the
    // principal branch is continuous in (R, Z).
    const ComplexMatrix vu = solve(ComplexMatrix(r.U().conjugate()), ComplexMatrix(r.V().conjugate())).transpose();
    const ComplexMatrix cross = ComplexMatrix::Identity(d, d) + z * vu;

    ComplexVector f_new = solve(g, x.f);
    const cplx quad = bilinear(x.f, v_adj * f_new);

    UltracoherentState out{moebius(r, x.z), std::move(f_new), x.log_amp};
    out.log_amp += LogComplex{-0.5 * r.log_det_modulus(), 0.0};
    out.log_amp += log_sqrt_det_inv(cross);
    out.log_amp += LogComplex::from_log(-0.5 * quad);
    return out;
}

UltracoherentState adjoint_act(const SymplecticElement& r, const UltracoherentState& x) {
    return act(inverse(r), x);
}

UltracoherentState gamma_act(const ComplexMatrix& k, const UltracoherentState& x) {
    return act(from_unitary(k), x);
}

Multiplier multiplier(const SymplecticElement& r2, const SymplecticElement& r1) {
    require_dim(r2, r1.dim(), "multiplier");
    const SymplecticElement r3 = compose(r2, r1);
    const Eigen::Index d = r1.dim();
    // U1^{+-1} U3^+ U2^{+-1} = I + Z1 V2^+ U2^{+-1} with Z1 = U1^{+-1} V1^T.
    const ComplexMatrix z1 = image_of_origin(r1);
    const ComplexMatrix v2u2 =
        solve(ComplexMatrix(r2.U().conjugate()), ComplexMatrix(r2.V().conjugate())).transpose();
    const ComplexMatrix core = ComplexMatrix::Identity(d, d) + z1 * v2u2;

    LogComplex lc{0.5 * (r3.log_det_modulus() - r1.log_det_modulus() - r2.log_det_modulus()), 0.0};
    lc += log_sqrt_det_inv(core);
    if (std::abs(lc.re) > 1e-8)
        throw InternalInconsistency("multiplier: |chi| - 1 = " + std::to_string(std::expm1(lc.re)));
    return {lc.exp(), lc};
}

double check_composition(const SymplecticElement& r2, const SymplecticElement& r1,
                         const UltracoherentState& x) {
    const UltracoherentState sequential = act(r2, act(r1, x));
    const UltracoherentState merged = scaled(act(compose(r2, r1), x), multiplier(r2, r1).log);
    return state_residual(sequential, merged);
}

double check_intertwining(const SymplecticElement& r, const ComplexVector& h, const UltracoherentState& x) {
    const UltracoherentState lhs = act(r, weyl_apply(h, x));
    const UltracoherentState rhs = weyl_apply(ucoh::apply(r, h), act(r, x));
    return state_residual(lhs, rhs);
}

}  // namespace ucoh

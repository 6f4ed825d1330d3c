#include "ucoh/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ucoh/errors.hpp"

namespace ucoh {

namespace {

void require_dim(const UltracoherentState& x, Eigen::Index d, const char* where) {
    if (x.dim() != d) throw DimensionMismatch(std::string(where) + ": dimension mismatch");
}

}  // namespace

UltracoherentState make_state(SiegelPoint z, ComplexVector f, LogComplex log_amp) {
    if (f.size() != z.dim()) throw DimensionMismatch("make_state: dim(f) != dim(Z)");
    return {std::move(z), std::move(f), log_amp};
}

UltracoherentState vacuum(Eigen::Index d) {
    return make_state(SiegelPoint::origin(d), ComplexVector::Zero(d));
}

UltracoherentState coherent(const ComplexVector& f) {
    return make_state(SiegelPoint::origin(f.size()), f, {-0.5 * f.squaredNorm(), 0.0});
}

UltracoherentState scaled(const UltracoherentState& x, LogComplex factor) {
    UltracoherentState out = x;
    out.log_amp += factor;
    return out;
}

OverlapKernel overlap_kernel(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("overlap_kernel: dimension mismatch");
    const Eigen::Index d = a.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const ComplexMatrix left = id - a.adjoint() * b;    // I - A^+ B
    const ComplexMatrix right = id - b * a.adjoint();   // I - B A^+

    OverlapKernel k;
    k.log_det_factor = log_sqrt_det_inv(left);
    k.cross_op = inverse(right);
    // C = B (I - A^+ B)^{-1}: solve from the right via transposes.
    k.C = solve(ComplexMatrix(left.transpose()), ComplexMatrix(b.transpose())).transpose();
    k.D = a.adjoint() * k.cross_op;
    return k;
}

std::pair<ComplexMatrix, ComplexMatrix> overlap_kernel_alternate(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index d = a.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    ComplexMatrix c = solve(ComplexMatrix(id - b * a.adjoint()), b);
    ComplexMatrix dd = solve(ComplexMatrix(id - a.adjoint() * b), ComplexMatrix(a.adjoint()));
    return {std::move(c), std::move(dd)};
}

cplx log_overlap(const UltracoherentState& x, const UltracoherentState& y) {
    require_dim(y, x.dim(), "overlap");
    const OverlapKernel k = overlap_kernel(x.Z(), y.Z());
    const ComplexVector fs = x.f.conjugate();  // f^*
    const ComplexVector& g = y.f;
    // 1/2 <f^*|C f^*> + <f^*|(I - B A^+)^{-1} g> + 1/2 <g|D g>, all bilinear.
    const cplx quad = 0.5 * bilinear(fs, k.C * fs) + bilinear(fs, k.cross_op * g) + 0.5 * bilinear(g, k.D * g);
    return x.log_amp.conj().log() + y.log_amp.log() + k.log_det_factor.log() + quad;
}

cplx overlap(const UltracoherentState& x, const UltracoherentState& y) { return std::exp(log_overlap(x, y)); }

double norm(const UltracoherentState& x) {
    const cplx sq = overlap(x, x);
    const double n2 = sq.real();
    if (std::abs(sq.imag()) > 1e-10 * std::abs(n2))
        throw InternalInconsistency("norm: (x|x) has imaginary part " + std::to_string(sq.imag()));
    return std::sqrt(n2);
}

double norm_closed_form(const UltracoherentState& x) {
    const Eigen::Index d = x.dim();
    const ComplexMatrix& a = x.Z();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const ComplexMatrix ata = id - a.adjoint() * a;   // I - A^+ A
    const ComplexMatrix aat = id - a * a.adjoint();   // I - A A^+
    const ComplexVector& f = x.f;
    const ComplexVector fs = f.conjugate();
    // det(I - A^+A)^{-1/2} exp(1/2 <f^*|A (I - A^+A)^{-1} f^*> + <f^*|(I - AA^+)^{-1} f>
    //                           + 1/2 <f|A^+ (I - AA^+)^{-1} f>)
    const cplx quad = 0.5 * bilinear(fs, a * solve(ata, fs)) + bilinear(fs, solve(aat, f)) +
                      0.5 * bilinear(f, a.adjoint() * solve(aat, f));
    const double log_n2 = -0.5 * hermitian_logdet(ata) + quad.real() + 2.0 * x.log_amp.re;
    return std::exp(0.5 * log_n2);
}

double fidelity(const UltracoherentState& x, const UltracoherentState& y) {
    const cplx lo = log_overlap(x, y);
    const double lx = std::log(norm(x));
    const double ly = std::log(norm(y));
    return std::exp(lo.real() - lx - ly);
}

cplx bargmann_eval(const UltracoherentState& x, const ComplexVector& z) {
    if (z.size() != x.dim()) throw DimensionMismatch("bargmann_eval: dimension mismatch");
    const ComplexVector zs = z.conjugate();
    const cplx expo = 0.5 * bilinear(zs, x.Z() * zs) + bilinear(zs, x.f);
    return std::exp(x.log_amp.log() + expo);
}

UltracoherentState weyl_apply(const ComplexVector& h, const UltracoherentState& x) {
    if (h.size() != x.dim()) throw DimensionMismatch("weyl_apply: dimension mismatch");
    const ComplexVector hs = h.conjugate();
    const ComplexVector z_hs = x.Z() * hs;
    const cplx expo = -0.5 * h.squaredNorm() + 0.5 * bilinear(hs, z_hs - 2.0 * x.f);
    UltracoherentState out = x;
    out.f = x.f + h - z_hs;
    out.log_amp += LogComplex::from_log(expo);
    return out;
}

cplx weyl_phase(const ComplexVector& f, const ComplexVector& g) {
    return std::exp(cplx(0.0, -symplectic_form(f, g)));
}

ComplexVector displacement_to_origin(const UltracoherentState& x) {
    const Eigen::Index d = x.dim();
    const ComplexMatrix& a = x.Z();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const ComplexMatrix aat = id - a * a.adjoint();
    const ComplexMatrix ata = id - a.adjoint() * a;
    return solve(aat, x.f) + a * solve(ata, ComplexVector(x.f.conjugate()));
}

DisplacedSqueezed factor_displaced_squeezed(const UltracoherentState& x) {
    SymplecticElement r = transport_from_origin(x.z);
    ComplexVector h = displacement_to_origin(x);
    // T(R) vacuum = det|U|^{-1/2} Phi(Z, 0); then displace by h.
    const UltracoherentState squeezed = make_state(x.z, ComplexVector::Zero(x.dim()), {-0.5 * r.log_det_modulus(), 0.0});
    const UltracoherentState rebuilt = weyl_apply(h, squeezed);
    return {std::move(h), std::move(r), x.log_amp - rebuilt.log_amp};
}

double state_residual(const UltracoherentState& a, const UltracoherentState& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("state_residual: dimension mismatch");
    const double dz = operator_norm(a.Z() - b.Z());
    const double df = (a.f - b.f).norm();
    // Relative amplitude gap computed against the larger modulus.
    const LogComplex& la = a.log_amp;
    const LogComplex& lb = b.log_amp;
    const double top = std::max(la.re, lb.re);
    const cplx ea = std::exp(cplx(la.re - top, la.im));
    const cplx eb = std::exp(cplx(lb.re - top, lb.im));
    const double da = std::abs(ea - eb);
    return std::max({dz, df, da});
}

}  // namespace ucoh

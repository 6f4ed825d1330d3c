#pragma once

// Ultracoherent vectors exp(log_amp) * Phi(Z, f), Phi(Z, f) = exp Omega(Z) v exp f,
// and their closed-form overlaps and Weyl actions.
//
// Pairings: <u|v> is the bilinear form (bilinear()), (u|v) the Hilbert inner
// product (sesquilinear()). Each formula below names the one it uses.

#include "ucoh/siegel.hpp"

namespace ucoh {

struct UltracoherentState {
    SiegelPoint z;
    ComplexVector f;
    LogComplex log_amp;

    Eigen::Index dim() const { return z.dim(); }
    const ComplexMatrix& Z() const { return z.Z(); }
    cplx amplitude() const { return log_amp.exp(); }
};

/// Checks dim(f) == dim(Z).
UltracoherentState make_state(SiegelPoint z, ComplexVector f, LogComplex log_amp = {});

UltracoherentState vacuum(Eigen::Index d);

/// Normalized coherent state: (Z = 0, f, log_amp = -||f||^2 / 2).
UltracoherentState coherent(const ComplexVector& f);

/// Same state with the amplitude multiplied by exp(factor).
UltracoherentState scaled(const UltracoherentState& x, LogComplex factor);

/// Operators entering (Phi(A, f) | Phi(B, g)).
struct OverlapKernel {
    ComplexMatrix C;          // B (I - A^+ B)^{-1}
    ComplexMatrix D;          // A^+ (I - B A^+)^{-1}
    LogComplex log_det_factor;  // log det(I - A^+ B)^{-1/2}
    ComplexMatrix cross_op;   // (I - B A^+)^{-1}
};

OverlapKernel overlap_kernel(const ComplexMatrix& a, const ComplexMatrix& b);

/// The same C and D through the other side of each identity:
/// (I - B A^+)^{-1} B and (I - A^+ B)^{-1} A^+.
std::pair<ComplexMatrix, ComplexMatrix> overlap_kernel_alternate(const ComplexMatrix& a, const ComplexMatrix& b);

/// log (x|y), antilinear in x.
cplx log_overlap(const UltracoherentState& x, const UltracoherentState& y);
cplx overlap(const UltracoherentState& x, const UltracoherentState& y);

/// sqrt(Re (x|x)); throws InternalInconsistency if Im (x|x) is not negligible.
double norm(const UltracoherentState& x);

/// ||x|| from the Weyl-displacement identity for (Phi(A,f)|Phi(A,f)).
double norm_closed_form(const UltracoherentState& x);

/// |(x|y)| / (||x|| ||y||).
double fidelity(const UltracoherentState& x, const UltracoherentState& y);

/// (exp z | x) = amp * exp(1/2 <z^*|Z z^*> + <z^*|f>).
cplx bargmann_eval(const UltracoherentState& x, const ComplexVector& z);

/// W(h) x: Z fixed, f -> f + h - Z h^*, amplitude times
/// exp(-||h||^2/2 + 1/2 <h^*|Z h^* - 2 f>).
UltracoherentState weyl_apply(const ComplexVector& h, const UltracoherentState& x);

/// exp(-i omega(f, g)), the phase in W(f) W(g) = phase * W(f + g).
cplx weyl_phase(const ComplexVector& f, const ComplexVector& g);

/// h with h - Z h^* = f: h = (I - Z Z^+)^{-1} f + Z (I - Z^+ Z)^{-1} f^*.
ComplexVector displacement_to_origin(const UltracoherentState& x);

struct DisplacedSqueezed {
    ComplexVector h;
    SymplecticElement r;
    LogComplex log_residual_amp;

    cplx residual_amp() const { return log_residual_amp.exp(); }
};

/// x = residual_amp * W(h) T(R) vacuum with R = transport_from_origin(Z).
DisplacedSqueezed factor_displaced_squeezed(const UltracoherentState& x);

/// Max of ||Z1 - Z2||, ||f1 - f2|| and the relative amplitude gap
/// |a1 - a2| / max(|a1|, |a2|).
double state_residual(const UltracoherentState& a, const UltracoherentState& b);

inline bool states_equal(const UltracoherentState& a, const UltracoherentState& b, double tol) {
    return state_residual(a, b) <= tol;
}

}  // namespace ucoh

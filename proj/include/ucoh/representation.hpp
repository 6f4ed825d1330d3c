#pragma once

// The ray representation T(R) of the symplectic group on ultracoherent states.

#include "ucoh/gaussian_state.hpp"

namespace ucoh {

/// T(R) exp f = det|U|^{-1/2} exp(-1/2 <f|V^+ U^{+-1} f>) Phi(U^{+-1} V^T, U^{+-1} f).
UltracoherentState act_on_exponential(const SymplecticElement& r, const ComplexVector& f);

/// T(R) x for an ultracoherent x, with G = U^+ + Z V^+:
///   Z'   = zeta(R; Z)
///   f'   = G^{-1} f
///   amp' = amp det|U|^{-1/2} det(I + Z V^+ U^{+-1})^{-1/2} exp(-1/2 <f|V^+ G^{-1} f>).
UltracoherentState act(const SymplecticElement& r, const UltracoherentState& x);

/// T(R)^+ x = T(R^{-1}) x.
UltracoherentState adjoint_act(const SymplecticElement& r, const UltracoherentState& x);

/// Gamma(K) x for unitary K.
UltracoherentState gamma_act(const ComplexMatrix& k, const UltracoherentState& x);

struct Multiplier {
    cplx value;
    LogComplex log;
};

/// chi(R2, R1) with T(R2) T(R1) = chi T(R2 R1). Throws InternalInconsistency
/// if |chi| deviates from 1 by more than 1e-8.
Multiplier multiplier(const SymplecticElement& r2, const SymplecticElement& r1);

/// state_residual between T(R2) T(R1) x and chi T(R2 R1) x.
double check_composition(const SymplecticElement& r2, const SymplecticElement& r1,
                         const UltracoherentState& x);

/// state_residual between T(R) W(h) x and W(R h) T(R) x.
double check_intertwining(const SymplecticElement& r, const ComplexVector& h, const UltracoherentState& x);

}  // namespace ucoh

#pragma once

// The symplectic group of H_R realized as pairs (U, V) acting by
// f -> U f + V f^*. At finite dimension the Hilbert-Schmidt requirement on V
// is automatic and is not checked.

#include "ucoh/linalg.hpp"

namespace ucoh {

inline constexpr double kDefaultSymplecticTol = 1e-10;

/// Residuals of the defining constraints, each scaled as in make_symplectic.
struct ConstraintResiduals {
    double row_unit = 0;    // ||UU^+ - VV^+ - I|| / (1 + ||U||^2)
    double row_sym = 0;     // ||UV^T - VU^T|| / (1 + ||U|| ||V||)
    double col_unit = 0;    // ||U^+U - V^T conj(V) - I|| / (1 + ||U||^2)
    double col_sym = 0;     // ||U^T conj(V) - V^+ U|| / (1 + ||U|| ||V||)
    double norm_identity = 0;  // | ||U^{-1}V||^2 + ||U||^{-2} - 1 |

    double max() const;
};

ConstraintResiduals constraint_residuals(const ComplexMatrix& u, const ComplexMatrix& v);

class SymplecticElement {
public:
    const ComplexMatrix& U() const { return u_; }
    const ComplexMatrix& V() const { return v_; }
    double validation_residual() const { return residual_; }
    Eigen::Index dim() const { return u_.rows(); }

    /// log det|U| = 1/2 sum log eig(I + V V^+), real and >= 0.
    double log_det_modulus() const;

private:
    SymplecticElement(ComplexMatrix u, ComplexMatrix v, double residual)
        : u_(std::move(u)), v_(std::move(v)), residual_(residual) {}

    friend SymplecticElement make_symplectic(ComplexMatrix u, ComplexMatrix v, double tol);
    friend SymplecticElement inverse(const SymplecticElement& r);

    ComplexMatrix u_;
    ComplexMatrix v_;
    double residual_;
};

/// Validates (U, V); throws ConstraintViolation if any residual exceeds tol.
SymplecticElement make_symplectic(ComplexMatrix u, ComplexMatrix v, double tol = kDefaultSymplecticTol);

SymplecticElement identity(Eigen::Index d);

/// R(K, 0) for unitary K; throws NotUnitary if ||K^+K - I|| > tol.
SymplecticElement from_unitary(const ComplexMatrix& k, double tol = kDefaultSymplecticTol);

/// R(cosh A, sinh A) for real symmetric A.
SymplecticElement squeeze(const ComplexMatrix& a, double tol = kDefaultSymplecticTol);

/// Group product r2 * r1 (r1 acts first).
SymplecticElement compose(const SymplecticElement& r2, const SymplecticElement& r1,
                          double tol = kDefaultSymplecticTol);

/// R(U^+, -V^T).
SymplecticElement inverse(const SymplecticElement& r);

/// U f + V f^*.
ComplexVector apply(const SymplecticElement& r, const ComplexVector& f);

/// omega(f, g) = Im (f|g).
double symplectic_form(const ComplexVector& f, const ComplexVector& g);

struct PolarFactors {
    ComplexMatrix k1;   // unitary
    ComplexMatrix a;    // real symmetric (diagonal, nonnegative entries)
    ComplexMatrix k2;   // unitary
    double residual = 0;
};

/// R = K1 * squeeze(A) * K2. The squeeze parameters are the Takagi values of
/// V conj(U)^{-1} mapped through atanh.
PolarFactors polar_factorize(const SymplecticElement& r, double tol = 1e-9);

/// R1 * exp(-i diag(m) t) * R1^{-1}, built from its closed form.
SymplecticElement conjugated_free_field(const SymplecticElement& r1, const RealVector& m, double t,
                                        double tol = kDefaultSymplecticTol);

/// Entrywise max distance between (U, V) pairs.
double element_distance(const SymplecticElement& a, const SymplecticElement& b);

}  // namespace ucoh

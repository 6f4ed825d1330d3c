#pragma once

// Truncated bosonic Fock space used as an independent reference for the
// closed forms. Tensors are coefficient tables c_m over the occupation basis
// E_m = e_1^{v m_1} v ... v e_d^{v m_d}, with (E_m|E_n) = m! delta_{mn}.

#include <memory>
#include <span>

#include "ucoh/fock_basis.hpp"
#include "ucoh/gaussian_state.hpp"

namespace ucoh {

enum class Exec { serial, parallel };

class FockTensor {
public:
    explicit FockTensor(std::shared_ptr<const FockBasis> basis);
    FockTensor(std::shared_ptr<const FockBasis> basis, ComplexVector coeffs);

    static FockTensor zero(int dim, int cutoff);
    static FockTensor vacuum(int dim, int cutoff);
    /// The basis tensor E_m.
    static FockTensor unit(int dim, int cutoff, std::span<const int> m);

    int dim() const { return basis_->dim(); }
    int cutoff() const { return basis_->cutoff(); }
    const FockBasis& basis() const { return *basis_; }
    const std::shared_ptr<const FockBasis>& basis_ptr() const { return basis_; }
    const ComplexVector& coeffs() const { return coeffs_; }

    cplx coeff(std::span<const int> m) const;

    /// Component of degree n.
    FockTensor degree_part(int n) const;
    /// Components of degree <= n, zero elsewhere.
    FockTensor truncated(int n) const;

    FockTensor operator+(const FockTensor& o) const;
    FockTensor operator-(const FockTensor& o) const;
    FockTensor operator*(cplx s) const;

private:
    std::shared_ptr<const FockBasis> basis_;
    ComplexVector coeffs_;
};

FockTensor symmetric_product(const FockTensor& f, const FockTensor& g, Exec exec = Exec::parallel);

/// sum_m m! conj(f_m) g_m.
cplx inner(const FockTensor& f, const FockTensor& g, Exec exec = Exec::parallel);
double tensor_norm(const FockTensor& f);

/// Coefficients prod_mu f_mu^{m_mu} / m_mu!.
FockTensor exp_vector(const ComplexVector& f, int cutoff);

/// Degree-2 tensor with <Omega(A)|f v g> = <f|A g>. Throws NotSymmetric.
FockTensor omega_tensor(const ComplexMatrix& a, int cutoff);

/// sum_n Omega(A)^{v n} / n! over kept degrees. Throws NotInDisc for ||A|| >= 1.
FockTensor exp_omega(const ComplexMatrix& a, int cutoff, Exec exec = Exec::parallel);

/// exp(log_amp) exp Omega(Z) v exp f, truncated.
FockTensor represent_state(const UltracoherentState& x, int cutoff, Exec exec = Exec::parallel);

/// ||F_n||^2 for n = 0..cutoff.
RealVector degree_norms(const FockTensor& f);

/// sqrt(sum_n alpha^{-2n} ||F_n||^2). Throws InvalidAlpha for alpha <= 0.
double alpha_norm(const FockTensor& f, double alpha);

/// Upper bound on the squared norm of the degrees of x above cutoff,
/// from beta^{2(N+1)} ||x||_(beta)^2 minimized over a grid of beta.
double tail_bound(const UltracoherentState& x, int cutoff);

/// Smallest cutoff whose tail_bound is at most mass_tol; throws Error if
/// none up to max_cutoff qualifies.
int choose_cutoff(const UltracoherentState& x, double mass_tol, int max_cutoff = 170);

/// A dense operator on the truncated space, acting on coefficient vectors.
class FockOperator {
public:
    FockOperator(std::shared_ptr<const FockBasis> basis, ComplexMatrix matrix);

    static FockOperator identity(int dim, int cutoff);

    const FockBasis& basis() const { return *basis_; }
    const ComplexMatrix& matrix() const { return matrix_; }

    FockTensor apply(const FockTensor& f) const;
    FockOperator operator*(const FockOperator& o) const;
    FockOperator operator+(const FockOperator& o) const;
    FockOperator operator-(const FockOperator& o) const;
    FockOperator operator*(cplx s) const;

private:
    std::shared_ptr<const FockBasis> basis_;
    ComplexMatrix matrix_;
};

/// a^+(f) F = f v F, top degree dropped.
FockOperator create(const ComplexVector& f, int cutoff);
/// a(f), the adjoint of a^+(f^*); a(f) exp g = <f|g> exp g.
FockOperator annihilate(const ComplexVector& f, int cutoff);
/// Gamma(B) E_m = (B e_1)^{v m_1} v ... v (B e_d)^{v m_d}.
FockOperator gamma(const ComplexMatrix& b, int cutoff);
/// exp(a^+(h) - a(h^*)) on the truncated space.
FockOperator weyl(const ComplexVector& h, int cutoff);

}  // namespace ucoh

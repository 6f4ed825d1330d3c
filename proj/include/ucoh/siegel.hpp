#pragma once

#include "ucoh/symplectic.hpp"

namespace ucoh {

/// Tolerances governing disc membership and the Moebius consistency check.
struct SiegelConfig {
    double symmetry_tol = 1e-10;   // relative: ||Z - Z^T|| <= tol (1 + ||Z||)
    double margin = 1e-9;          // reject ||Z|| >= 1 - margin
    double consistency_tol = 1e-10;  // agreement of the two Moebius forms
};

/// A transposition-symmetric matrix with operator norm strictly below one.
class SiegelPoint {
public:
    const ComplexMatrix& Z() const { return z_; }
    double op_norm() const { return op_norm_; }
    Eigen::Index dim() const { return z_.rows(); }

    static SiegelPoint origin(Eigen::Index d);

private:
    SiegelPoint(ComplexMatrix z, double norm) : z_(std::move(z)), op_norm_(norm) {}
    friend SiegelPoint make_point(ComplexMatrix z, const SiegelConfig& cfg);

    ComplexMatrix z_;
    double op_norm_;
};

/// Throws NotSymmetric, or NotInDisc when ||Z|| >= 1 - margin.
SiegelPoint make_point(ComplexMatrix z, const SiegelConfig& cfg = {});

struct MoebiusResult {
    SiegelPoint point;
    double form_gap;   // ||(UZ+V)(conj U + conj V Z)^{-1} - (U^+ + Z V^+)^{-1}(V^T + Z U^T)||
};

/// zeta(R; Z). Both closed forms are evaluated; InternalInconsistency is
/// thrown when they disagree by more than cfg.consistency_tol.
MoebiusResult moebius_checked(const SymplecticElement& r, const SiegelPoint& z, const SiegelConfig& cfg = {});
SiegelPoint moebius(const SymplecticElement& r, const SiegelPoint& z, const SiegelConfig& cfg = {});

/// R with zeta(R; 0) = Z: U = (I - Z Z^+)^{-1/2}, V = U Z.
SymplecticElement transport_from_origin(const SiegelPoint& z);

}  // namespace ucoh

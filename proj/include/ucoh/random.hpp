#pragma once

// Seeded random ensembles for tests, verification and benchmarks.

#include <cstdint>
#include <random>

#include "ucoh/gaussian_state.hpp"

namespace ucoh {

using Rng = std::mt19937_64;

/// Independent stream for trial `index` under `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

double uniform(Rng& rng, double lo, double hi);
int uniform_int(Rng& rng, int lo, int hi);

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary (QR with phase-fixed R diagonal).
ComplexMatrix random_unitary(Eigen::Index d, Rng& rng);

/// Real symmetric matrix with operator norm uniform in [0, max_norm].
ComplexMatrix random_real_symmetric(Eigen::Index d, double max_norm, Rng& rng);

/// K1 * squeeze(A) * K2 with ||A|| <= max_squeeze.
SymplecticElement random_symplectic(Eigen::Index d, Rng& rng, double max_squeeze = 1.5);

/// Complex symmetric Z with ||Z|| uniform in [0, max_norm].
SiegelPoint random_siegel(Eigen::Index d, double max_norm, Rng& rng);

/// Complex vector with norm uniform in [0, max_norm].
ComplexVector random_vector(Eigen::Index d, double max_norm, Rng& rng);

/// Random (Z, f) scaled to unit norm with a random global phase.
UltracoherentState random_state(Eigen::Index d, Rng& rng, double max_z = 0.6, double max_f = 1.0);

}  // namespace ucoh

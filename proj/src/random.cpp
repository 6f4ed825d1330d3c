#include "ucoh/random.hpp"

#include <cmath>
#include <numbers>

namespace ucoh {

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::normal_distribution<double> n01;
    ComplexMatrix m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = cplx(n01(rng), n01(rng));
    return m;
}

ComplexMatrix random_unitary(Eigen::Index d, Rng& rng) {
    const ComplexMatrix g = gaussian_matrix(d, d, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    ComplexVector phase(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const double a = std::abs(r(i, i));
        phase(i) = a > 0 ? r(i, i) / a : cplx(1.0);
    }
    return q * phase.asDiagonal();
}

ComplexMatrix random_real_symmetric(Eigen::Index d, double max_norm, Rng& rng) {
    std::normal_distribution<double> n01;
    RealMatrix a(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) a(i, j) = a(j, i) = n01(rng);
    const double target = uniform(rng, 0.0, max_norm);
    const double n = Eigen::SelfAdjointEigenSolver<RealMatrix>(a).eigenvalues().cwiseAbs().maxCoeff();
    if (n > 0) a *= target / n;
    return a.cast<cplx>();
}

SymplecticElement random_symplectic(Eigen::Index d, Rng& rng, double max_squeeze) {
    const SymplecticElement k1 = from_unitary(random_unitary(d, rng));
    const SymplecticElement s = squeeze(random_real_symmetric(d, max_squeeze, rng));
    const SymplecticElement k2 = from_unitary(random_unitary(d, rng));
    return compose(k1, compose(s, k2));
}

SiegelPoint random_siegel(Eigen::Index d, double max_norm, Rng& rng) {
    const ComplexMatrix g = gaussian_matrix(d, d, rng);
    ComplexMatrix z = 0.5 * (g + g.transpose());
    const double n = operator_norm(z);
    const double target = uniform(rng, 0.0, max_norm);
    if (n > 0) z *= target / n;
    return make_point(std::move(z));
}

ComplexVector random_vector(Eigen::Index d, double max_norm, Rng& rng) {
    ComplexVector v = gaussian_matrix(d, 1, rng).col(0);
    const double n = v.norm();
    const double target = uniform(rng, 0.0, max_norm);
    if (n > 0) v *= target / n;
    return v;
}

UltracoherentState random_state(Eigen::Index d, Rng& rng, double max_z, double max_f) {
    SiegelPoint z = random_siegel(d, max_z, rng);
    ComplexVector f = random_vector(d, max_f, rng);
    UltracoherentState x = make_state(std::move(z), std::move(f));
    const double phase = uniform(rng, -std::numbers::pi, std::numbers::pi);
    x.log_amp = {-std::log(norm(x)), phase};
    return x;
}

}  // namespace ucoh

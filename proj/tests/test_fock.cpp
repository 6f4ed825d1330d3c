#include <doctest.h>

#include <cmath>
#include <numeric>

#include "ucoh/errors.hpp"
#include "ucoh/fock.hpp"
#include "ucoh/fock_kernels.hpp"
#include "ucoh/json_io.hpp"
#include "ucoh/random.hpp"

using namespace ucoh;
using namespace std::complex_literals;

namespace {

ComplexVector unit(Eigen::Index d, Eigen::Index mu) {
    ComplexVector e = ComplexVector::Zero(d);
    e(mu) = 1.0;
    return e;
}

// Coefficients of a random tensor supported on a single degree.
FockTensor homogeneous(int dim, int cutoff, int degree, Rng& rng) {
    auto basis = FockBasis::shared(dim, cutoff);
    ComplexVector c = ComplexVector::Zero(basis->size());
    for (std::size_t i = basis->degree_begin(degree); i < basis->degree_end(degree); ++i)
        c(i) = cplx{uniform(rng, -1, 1), uniform(rng, -1, 1)} / std::sqrt(basis->weight(i));
    return FockTensor(basis, c);
}

FockTensor random_tensor(int dim, int cutoff, Rng& rng) {
    auto basis = FockBasis::shared(dim, cutoff);
    ComplexVector c(basis->size());
    for (std::size_t i = 0; i < basis->size(); ++i)
        c(i) = cplx{uniform(rng, -1, 1), uniform(rng, -1, 1)} * std::pow(0.4, basis->degree(i)) /
               std::sqrt(basis->weight(i));
    return FockTensor(basis, c);
}

double max_gap(const FockTensor& a, const FockTensor& b) { return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff(); }

double binomial(int n, int k) { return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)); }

}  // namespace

TEST_CASE("basis enumeration") {
    for (int d = 1; d <= 4; ++d) {
        for (int n : {0, 1, 5, 12}) {
            const FockBasis b(d, n);
            CHECK(b.size() == static_cast<std::size_t>(std::llround(binomial(n + d, d))));
            for (std::size_t i = 0; i < b.size(); ++i) {
                const auto m = b.index(i);
                CHECK(b.rank(m) == i);
                CHECK(std::accumulate(m.begin(), m.end(), 0) == b.degree(i));
                for (int mu = 0; mu < d; ++mu) {
                    const auto up = b.raise(i, mu);
                    if (b.degree(i) == n) CHECK(up == FockBasis::kNone);
                    else CHECK(b.index(up)[mu] == m[mu] + 1);
                }
            }
            for (int k = 0; k <= n; ++k)
                CHECK(b.degree_end(k) - b.degree_begin(k) == static_cast<std::size_t>(std::llround(binomial(k + d - 1, d - 1))));
        }
    }
    CHECK_THROWS_AS(FockBasis(0, 3), Error);
    CHECK_THROWS_AS(FockBasis(1, 171), Error);
}

TEST_CASE("symmetric product") {
    Rng rng = trial_rng(71, 0);
    const FockTensor f = random_tensor(2, 10, rng);
    CHECK(max_gap(symmetric_product(f, FockTensor::vacuum(2, 10)), f) == 0.0);

    const ComplexVector a = random_vector(3, 1.0, rng), b = random_vector(3, 1.0, rng);
    CHECK(max_gap(symmetric_product(exp_vector(a, 12), exp_vector(b, 12)), exp_vector(a + b, 12)) <= 1e-12);

    const int e1[] = {1};
    const FockTensor one = FockTensor::unit(1, 4, e1);
    CHECK(inner(symmetric_product(one, one), symmetric_product(one, one)).real() == doctest::Approx(2.0));

    // ||f^{v n}||^2 = n! ||f||^{2n}
    const ComplexVector g = random_vector(2, 1.2, rng);
    FockTensor p = FockTensor::vacuum(2, 6);
    FockTensor gt = exp_vector(g, 6).degree_part(1);
    for (int n = 1; n <= 6; ++n) {
        p = symmetric_product(p, gt);
        CHECK(inner(p, p).real() == doctest::Approx(std::tgamma(n + 1.0) * std::pow(g.squaredNorm(), n)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(symmetric_product(FockTensor::vacuum(2, 4), FockTensor::vacuum(2, 5)), DimensionMismatch);
}

TEST_CASE("inner product") {
    CHECK(inner(FockTensor::vacuum(2, 5), FockTensor::vacuum(2, 5)) == 1.0 + 0.0i);
    const int m3[] = {3};
    const FockTensor e3 = FockTensor::unit(1, 5, m3);
    CHECK(inner(e3, e3).real() == doctest::Approx(6.0));

    Rng rng = trial_rng(72, 0);
    const ComplexVector f = random_vector(2, 1.0, rng), g = random_vector(2, 1.0, rng);
    CHECK(std::abs(inner(exp_vector(f, 40), exp_vector(g, 40)) - std::exp(sesquilinear(f, g))) <= 1e-12);
}

TEST_CASE("exponential vectors") {
    CHECK(max_gap(exp_vector(ComplexVector::Zero(2), 6), FockTensor::vacuum(2, 6)) == 0.0);
    const FockTensor e = exp_vector(ComplexVector::Ones(1), 10);
    for (int n = 0; n <= 10; ++n) {
        const int m[] = {n};
        CHECK(e.coeff(m).real() == doctest::Approx(1.0 / std::tgamma(n + 1.0)).epsilon(1e-15));
    }
    Rng rng = trial_rng(73, 0);
    const ComplexVector f = random_vector(3, 1.0, rng);
    const double n2 = std::pow(tensor_norm(exp_vector(f, 30)), 2);
    CHECK(std::abs(n2 - std::exp(f.squaredNorm())) <= 1e-12);
}

TEST_CASE("omega tensor") {
    CHECK(tensor_norm(omega_tensor(ComplexMatrix::Zero(2, 2), 4)) == 0.0);

    ComplexMatrix a1(1, 1);
    a1 << 0.7;
    const FockTensor w1 = omega_tensor(a1, 4);
    const int m2[] = {2};
    CHECK(std::abs(w1.coeff(m2) - 0.35) <= 1e-15);
    CHECK(std::pow(tensor_norm(w1), 2) == doctest::Approx(0.49 / 2));

    Rng rng = trial_rng(74, 0);
    ComplexMatrix g = gaussian_matrix(3, 3, rng);
    const ComplexMatrix a = g + g.transpose();
    const FockTensor w = omega_tensor(a, 3);
    // <Omega(A) | e_mu v e_nu> = A_{mu nu}, with <F|G> = sum m! F_m G_m.
    for (int mu = 0; mu < 3; ++mu) {
        for (int nu = 0; nu < 3; ++nu) {
            const FockTensor probe =
                symmetric_product(exp_vector(unit(3, mu), 3).degree_part(1), exp_vector(unit(3, nu), 3).degree_part(1));
            cplx pairing{};
            for (std::size_t i = 0; i < probe.basis().size(); ++i)
                pairing += probe.basis().weight(i) * w.coeffs()(i) * probe.coeffs()(i);
            CHECK(std::abs(pairing - a(mu, nu)) <= 1e-12);
        }
    }
    CHECK(std::pow(tensor_norm(w), 2) == doctest::Approx(0.5 * std::pow(hs_norm(a), 2)).epsilon(1e-12));

    ComplexMatrix ns(2, 2);
    ns << 0.1, 0.2, 0.3, 0.1;
    CHECK_THROWS_AS(omega_tensor(ns, 4), NotSymmetric);
}

TEST_CASE("exp Omega") {
    CHECK(max_gap(exp_omega(ComplexMatrix::Zero(2, 2), 8), FockTensor::vacuum(2, 8)) == 0.0);

    ComplexMatrix a(1, 1);
    a << 0.5;
    const FockTensor e = exp_omega(a, 40);
    CHECK(std::abs(std::pow(tensor_norm(e), 2) - std::pow(0.75, -0.5)) <= 1e-8);

    // Against the truncated series sum_n ((2n)! / (n!^2 4^n)) a^{2n}.
    double series = 0.0;
    for (int n = 0; n <= 20; ++n) series += binomial(2 * n, n) * std::pow(0.25 * 0.25, n);
    CHECK(std::abs(std::pow(tensor_norm(e), 2) - series) <= 1e-13);

    for (std::uint64_t i = 0; i < 10; ++i) {
        Rng rng = trial_rng(75, i);
        const Eigen::Index d = 1 + static_cast<Eigen::Index>(i % 3);
        const auto za = random_siegel(d, 0.6, rng), zb = random_siegel(d, 0.6, rng);
        const int n = d == 3 ? 50 : 80;
        const cplx got = inner(exp_omega(za.Z(), n), exp_omega(zb.Z(), n));
        const ComplexMatrix m = identity_matrix(d) - za.Z().adjoint() * zb.Z();
        const cplx want = std::pow(m.determinant(), -0.5);
        CHECK(std::abs(got - want) <= 1e-6 * std::abs(want));
    }

    ComplexMatrix big(1, 1);
    big << 1.0;
    CHECK_THROWS_AS(exp_omega(big, 10), NotInDisc);
}

TEST_CASE("represent_state") {
    CHECK(max_gap(represent_state(vacuum(2), 8), FockTensor::vacuum(2, 8)) == 0.0);
    Rng rng = trial_rng(76, 0);
    const ComplexVector f = random_vector(2, 1.0, rng);
    const FockTensor c = represent_state(coherent(f), 12);
    CHECK(max_gap(c, exp_vector(f, 12) * std::exp(-0.5 * f.squaredNorm())) <= 1e-15);

    // Serial and parallel construction agree.
    const auto x = random_state(3, rng);
    CHECK(max_gap(represent_state(x, 20, Exec::serial), represent_state(x, 20, Exec::parallel)) <= 1e-14);
}

TEST_CASE("creation and annihilation") {
    const int n = 12;
    const FockTensor e = exp_vector(unit(2, 0), n);
    const FockTensor ae = annihilate(unit(2, 0), n).apply(e);
    CHECK(max_gap(ae.truncated(n - 1), e.truncated(n - 1)) <= 1e-15);

    Rng rng = trial_rng(77, 0);
    const ComplexVector f = random_vector(2, 1.0, rng), g = random_vector(2, 1.0, rng);
    CHECK(tensor_norm(annihilate(f, n).apply(FockTensor::vacuum(2, n))) == 0.0);
    const FockTensor eg = exp_vector(g, n);
    CHECK(max_gap(annihilate(f, n).apply(eg).truncated(n - 1), (eg * bilinear(f, g)).truncated(n - 1)) <= 1e-14);

    // a(f) is the adjoint of a^+(f^*).
    const FockTensor p = random_tensor(2, n, rng), q = random_tensor(2, n, rng);
    const cplx lhs = inner(p, annihilate(f, n).apply(q));
    const cplx rhs = inner(create(f.conjugate(), n).apply(p), q);
    CHECK(std::abs(lhs - rhs) <= 1e-13);
}

TEST_CASE("canonical commutation relations below the cutoff") {
    for (int d = 1; d <= 3; ++d) {
        const int n = d == 3 ? 6 : 8;
        Rng rng = trial_rng(78, static_cast<std::uint64_t>(d));
        const ComplexVector f = random_vector(d, 1.0, rng), g = random_vector(d, 1.0, rng);
        const auto basis = FockBasis::shared(d, n);
        const auto low = static_cast<Eigen::Index>(basis->count_up_to(n - 1));
        const auto id = FockOperator::identity(d, n).matrix();

        const FockOperator comm = annihilate(f, n) * create(g, n) - create(g, n) * annihilate(f, n);
        const ComplexMatrix c1 = comm.matrix().leftCols(low) - bilinear(f, g) * id.leftCols(low);
        CHECK(c1.cwiseAbs().maxCoeff() <= 1e-10);

        const FockOperator pf = create(f, n) - annihilate(f.conjugate(), n);
        const FockOperator pg = create(g, n) - annihilate(g.conjugate(), n);
        const FockOperator comm2 = pf * pg - pg * pf;
        const ComplexMatrix c2 =
            comm2.matrix().leftCols(low) - (-2.0i * symplectic_form(f, g)) * id.leftCols(low);
        CHECK(c2.cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("second quantization Gamma(B)") {
    CHECK(gamma(identity_matrix(2), 6).matrix() == FockOperator::identity(2, 6).matrix());
    Rng rng = trial_rng(79, 0);
    const ComplexMatrix b = 0.8 * gaussian_matrix(3, 3, rng) / 3.0;
    const ComplexVector f = random_vector(3, 1.0, rng);
    const int n = 10;
    CHECK(max_gap(gamma(b, n).apply(exp_vector(f, n)), exp_vector(b * f, n)) <= 1e-14);
    // Multiplicative: Gamma(B1) Gamma(B2) = Gamma(B1 B2).
    const ComplexMatrix b2 = gaussian_matrix(3, 3, rng) / 3.0;
    CHECK(((gamma(b, n) * gamma(b2, n)).matrix() - gamma(b * b2, n).matrix()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("Weyl operators in Fock space") {
    Rng rng = trial_rng(80, 0);
    const ComplexVector h = random_vector(2, 0.8, rng);
    const int n = 30;
    const FockTensor w0 = weyl(h, n).apply(FockTensor::vacuum(2, n));
    const FockTensor want = exp_vector(h, n) * std::exp(-0.5 * h.squaredNorm());
    const int low = 20;
    CHECK(tensor_norm(w0.truncated(low) - want.truncated(low)) <= std::sqrt(tail_bound(coherent(h), low)) + 1e-12);

    const ComplexVector f = random_vector(2, 0.6, rng), g = random_vector(2, 0.6, rng);
    const FockTensor v = FockTensor::vacuum(2, n) + exp_vector(unit(2, 1), n).degree_part(2);
    const FockTensor lhs = weyl(f, n).apply(weyl(g, n).apply(v));
    const FockTensor rhs = weyl(f + g, n).apply(v) * weyl_phase(f, g);
    CHECK(tensor_norm(lhs.truncated(low) - rhs.truncated(low)) <= 1e-6);
}

TEST_CASE("alpha norms") {
    Rng rng = trial_rng(81, 0);
    const FockTensor t = random_tensor(2, 10, rng);
    CHECK(alpha_norm(t, 1.0) == doctest::Approx(tensor_norm(t)).epsilon(1e-14));
    for (double a : {0.3, 0.7, 2.0}) CHECK(alpha_norm(FockTensor::vacuum(3, 5), a) == 1.0);

    const ComplexVector f = random_vector(2, 0.5, rng);
    const double alpha = 0.6;
    CHECK(alpha_norm(exp_vector(f, 60), alpha) == doctest::Approx(tensor_norm(exp_vector(f / alpha, 60))).epsilon(1e-12));
    CHECK_THROWS_AS(alpha_norm(t, 0.0), InvalidAlpha);
    CHECK_THROWS_AS(alpha_norm(t, -1.0), InvalidAlpha);
}

TEST_CASE("homogeneous product bound") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = trial_rng(82, i);
        const int d = 1 + static_cast<int>(i % 3);
        const int m = uniform_int(rng, 0, 6), k = uniform_int(rng, 0, 6);
        const FockTensor f = homogeneous(d, 12, m, rng), g = homogeneous(d, 12, k, rng);
        const double lhs = tensor_norm(symmetric_product(f, g));
        const double rhs = std::sqrt(binomial(m + k, m)) * tensor_norm(f) * tensor_norm(g);
        CHECK(lhs <= rhs * (1 + 1e-12));
    }
}

TEST_CASE("alpha-norm product bound") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = trial_rng(83, i);
        const int d = 1 + static_cast<int>(i % 3);
        const int n = d == 3 ? 10 : 16;
        const double a = uniform(rng, 0.05, 0.45), b = uniform(rng, 0.05, 0.45);
        const double c = uniform(rng, a + b + 0.02, 1.0);
        const FockTensor f = random_tensor(d, n, rng), g = random_tensor(d, n, rng);
        const double q = (a + b) / c;
        const double constant = 1.0 / std::sqrt(1.0 - q * q);
        // Truncating the product only lowers the left side.
        CHECK(alpha_norm(symmetric_product(f, g), c) <= constant * alpha_norm(f, a) * alpha_norm(g, b) * (1 + 1e-12));
    }
}

TEST_CASE("tail bound") {
    CHECK(tail_bound(vacuum(3), 0) == 0.0);
    CHECK(tail_bound(vacuum(3), 10) == 0.0);

    ComplexMatrix a(1, 1);
    a << 0.5;
    const auto sq = make_state(make_point(a), ComplexVector::Zero(1));
    CHECK(tail_bound(sq, 40) <= 1e-8);

    for (std::uint64_t i = 0; i < 30; ++i) {
        Rng rng = trial_rng(84, i);
        const Eigen::Index d = 1 + static_cast<Eigen::Index>(i % 2);
        const auto x = random_state(d, rng);
        const int n = uniform_int(rng, 4, 24);
        const RealVector dn = degree_norms(represent_state(x, 2 * n));
        CHECK(dn.tail(n).sum() <= tail_bound(x, n));
        // Doubling the cutoff recovers no more than the bound.
        const double recovered = std::pow(tensor_norm(represent_state(x, 2 * n)), 2) -
                                 std::pow(tensor_norm(represent_state(x, n)), 2);
        CHECK(recovered <= tail_bound(x, n) * (1 + 1e-12) + 1e-15);
    }
}

TEST_CASE("cutoff selection") {
    Rng rng = trial_rng(85, 0);
    const auto x = random_state(2, rng);
    const int n = choose_cutoff(x, 1e-8);
    CHECK(tail_bound(x, n) <= 1e-8);
    CHECK(tail_bound(x, n - 1) > 1e-8);
    CHECK_THROWS_AS(choose_cutoff(x, 1e-300, 20), Error);
}

TEST_CASE("serial and parallel kernels agree") {
    for (auto [d, n] : {std::pair{1, 30}, std::pair{2, 14}, std::pair{3, 9}}) {
        Rng rng = trial_rng(86, static_cast<std::uint64_t>(d));
        const FockTensor f = random_tensor(d, n, rng), g = random_tensor(d, n, rng);
        CHECK(max_gap(symmetric_product(f, g, Exec::serial), symmetric_product(f, g, Exec::parallel)) <= 1e-14);
        CHECK(std::abs(inner(f, g, Exec::serial) - inner(f, g, Exec::parallel)) <= 1e-13);

        const FockBasis& basis = f.basis();
        std::vector<kernels::SparseTerm> terms;
        for (int mu = 0; mu < d; ++mu)
            for (int nu = mu; nu < d; ++nu) terms.push_back({{mu, nu}, cplx{uniform(rng, -1, 1), uniform(rng, -1, 1)}});
        std::vector<cplx> s(basis.size()), p(basis.size());
        const std::span<const cplx> gs(g.coeffs().data(), basis.size());
        kernels::sparse_product_serial(basis, terms, gs, 0.5, s, 2, n);
        kernels::sparse_product_parallel(basis, terms, gs, 0.5, p, 2, n);
        double gap = 0.0;
        for (std::size_t i = 0; i < basis.size(); ++i) gap = std::max(gap, std::abs(s[i] - p[i]));
        CHECK(gap <= 1e-14);
    }
}

TEST_CASE("tensor JSON dump") {
    const int m[] = {1, 2};
    const json j = tensor_to_json(FockTensor::unit(2, 4, m) * cplx{0.5, -1.0});
    CHECK(j["dim"] == 2);
    CHECK(j["cutoff"] == 4);
    REQUIRE(j["entries"].size() == 1);
    CHECK(j["entries"][0][0] == json::array({1, 2}));
    CHECK(j["entries"][0][1][1].get<double>() == -1.0);
}

#include <doctest.h>

#include <cmath>

#include "ucoh/errors.hpp"
#include "ucoh/random.hpp"
#include "ucoh/siegel.hpp"

using namespace ucoh;
using namespace std::complex_literals;

namespace {

ComplexMatrix scalar(cplx z) {
    ComplexMatrix m(1, 1);
    m << z;
    return m;
}

}  // namespace

TEST_CASE("disc membership") {
    const auto origin = make_point(ComplexMatrix::Zero(2, 2));
    CHECK(origin.op_norm() == 0.0);
    CHECK_NOTHROW(make_point(scalar(0.5)));
    CHECK_THROWS_AS(make_point(scalar(1.0)), NotInDisc);
    CHECK_THROWS_AS(make_point(scalar(1.0 - 1e-10)), NotInDisc);

    SiegelConfig loose;
    loose.margin = 1e-12;
    CHECK_NOTHROW(make_point(scalar(1.0 - 1e-10), loose));

    ComplexMatrix ns(2, 2);
    ns << 0.1, 0.2, 0.0, 0.1;
    CHECK_THROWS_AS(make_point(ns), NotSymmetric);
}

TEST_CASE("moebius examples") {
    Rng rng = trial_rng(21, 0);
    const auto z = random_siegel(3, 0.8, rng);
    CHECK(operator_norm(moebius(identity(3), z).Z() - z.Z()) <= 1e-15);

    const auto sq = squeeze(scalar(0.5));
    const cplx w = moebius(sq, SiegelPoint::origin(1)).Z()(0, 0);
    CHECK(w.real() == doctest::Approx(0.4621172).epsilon(1e-7));
    CHECK(std::abs(w - std::tanh(0.5)) <= 1e-15);

    const ComplexMatrix k = random_unitary(3, rng);
    CHECK(operator_norm(moebius(from_unitary(k), z).Z() - k * z.Z() * k.transpose()) <= 1e-14);

    CHECK_THROWS_AS(moebius(identity(2), z), DimensionMismatch);
}

TEST_CASE("moebius properties on random samples") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = trial_rng(22, i);
        const Eigen::Index d = 1 + static_cast<Eigen::Index>(i % 5);
        const auto r1 = random_symplectic(d, rng);
        const auto r2 = random_symplectic(d, rng);
        const auto z = random_siegel(d, 0.9, rng);
        CAPTURE(i);

        const MoebiusResult m = moebius_checked(r1, z);
        CHECK(m.form_gap <= 1e-10);
        CHECK(m.point.op_norm() < 1.0);
        CHECK(operator_norm(m.point.Z() - m.point.Z().transpose()) <= 1e-10);

        const auto lhs = moebius(r2, moebius(r1, z));
        const auto rhs = moebius(compose(r2, r1), z);
        CHECK(operator_norm(lhs.Z() - rhs.Z()) <= 1e-9);
    }
}

TEST_CASE("transport from origin") {
    CHECK(element_distance(transport_from_origin(SiegelPoint::origin(2)), identity(2)) <= 1e-15);

    const auto r = transport_from_origin(make_point(scalar(0.5)));
    CHECK(r.U()(0, 0).real() == doctest::Approx(1.1547005).epsilon(1e-7));
    CHECK(r.V()(0, 0).real() == doctest::Approx(0.5773503).epsilon(1e-7));
    CHECK(std::abs(moebius(r, SiegelPoint::origin(1)).Z()(0, 0) - 0.5) <= 1e-15);

    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = trial_rng(23, i);
        const Eigen::Index d = 1 + static_cast<Eigen::Index>(i % 5);
        const auto z = random_siegel(d, 0.8, rng);
        const auto t = transport_from_origin(z);
        CHECK(operator_norm(moebius(t, SiegelPoint::origin(d)).Z() - z.Z()) <= 1e-10);
        // U is Hermitian with spectrum >= 1.
        CHECK(operator_norm(t.U() - t.U().adjoint()) <= 1e-12);
        const RealVector ev = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(t.U()).eigenvalues();
        CHECK(ev.minCoeff() >= 1.0 - 1e-12);
    }
}

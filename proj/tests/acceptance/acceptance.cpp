// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "ucoh/circuit.hpp"
#include "ucoh/fock.hpp"
#include "ucoh/random.hpp"

using namespace ucoh;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Verdict {
    bool passed;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Eigen::Index dim_in(Rng& rng, int lo, int hi) { return uniform_int(rng, lo, hi); }

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// 1. Closed-form overlap against the truncated Fock inner product.
Verdict master_oracle() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    int max_cutoff = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng = trial_rng(kSeed, 1000 + i);
        const Eigen::Index d = dim_in(rng, 1, 3);
        const auto x = random_state(d, rng, 0.6, 1.0);
        const auto y = random_state(d, rng, 0.6, 1.0);
        const cplx closed = overlap(x, y);
        int n = std::max(choose_cutoff(x, 1e-8), choose_cutoff(y, 1e-8));
        while (n < 170 && std::sqrt(tail_bound(x, n) * tail_bound(y, n)) > 1e-8 * std::abs(closed)) ++n;
        max_cutoff = std::max(max_cutoff, n);
        worst = std::max(worst, rel(inner(represent_state(x, n), represent_state(y, n)), closed));
    }
    const double elapsed = seconds_since(t0);
    return {worst <= 1e-6 && elapsed <= 30.0,
            "max rel " + sci(worst) + " (<= 1e-6), " + sci(elapsed) + " s (<= 30), max cutoff " +
                std::to_string(max_cutoff)};
}

// 2. Scalar determinant formula.
Verdict scalar_determinant() {
    ComplexMatrix a(1, 1);
    a << 0.5;
    const auto x = make_state(make_point(a), ComplexVector::Zero(1));
    const cplx closed = overlap(x, x);
    const double exact = std::pow(0.75, -0.5);
    const double gap_closed = std::abs(closed - exact);
    const FockTensor t = represent_state(x, 40);
    const double gap_series = std::abs(inner(t, t) - closed);
    return {gap_closed <= 1e-10 && gap_series <= 1e-8,
            "closed " + sci(gap_closed) + " (<= 1e-10), series " + sci(gap_series) + " (<= 1e-8)"};
}

// 3. Constraint identities and their consequences.
Verdict symplectic_identities() {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = trial_rng(kSeed, 3000 + i);
        const Eigen::Index d = dim_in(rng, 1, 6);
        const auto r = random_symplectic(d, rng);
        const ComplexMatrix& u = r.U();
        const ComplexMatrix& v = r.V();
        const ComplexMatrix id = identity_matrix(d);
        const ComplexMatrix ui = inverse(u);
        const ComplexMatrix w = ui * v;
        const ComplexMatrix w2 = v * ui.conjugate();
        const double nu = operator_norm(u);
        const double res[] = {
            operator_norm(u * u.adjoint() - v * v.adjoint() - id),
            operator_norm(u * v.transpose() - v * u.transpose()),
            operator_norm(u.adjoint() * u - v.transpose() * v.conjugate() - id),
            operator_norm(u.transpose() * v.conjugate() - v.adjoint() * u),
            operator_norm(w - w.transpose()),
            operator_norm(v.conjugate() * ui - ui.transpose() * v.adjoint()),
            operator_norm(id - w * w.adjoint() - inverse(u.adjoint() * u)),
            operator_norm(id - w2 * w2.adjoint() - inverse(u * u.adjoint())),
            std::abs(std::pow(operator_norm(w), 2) - (1.0 - 1.0 / (nu * nu))),
        };
        for (double x : res) worst = std::max(worst, x);
    }
    return {worst <= 1e-10, "max residual " + sci(worst) + " (<= 1e-10)"};
}

// 4. Moebius action on the disc.
Verdict siegel_geometry() {
    double cocycle = 0.0, forms = 0.0, transport = 0.0, max_norm = 0.0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = trial_rng(kSeed, 4000 + i);
        const Eigen::Index d = dim_in(rng, 1, 5);
        const auto r1 = random_symplectic(d, rng), r2 = random_symplectic(d, rng);
        const auto z = random_siegel(d, 0.9, rng);
        SiegelConfig unchecked;
        unchecked.consistency_tol = INFINITY;
        const MoebiusResult m = moebius_checked(r1, z, unchecked);
        forms = std::max(forms, m.form_gap);
        max_norm = std::max(max_norm, m.point.op_norm());
        const auto lhs = moebius(r2, m.point);
        const auto rhs = moebius(compose(r2, r1), z);
        cocycle = std::max(cocycle, operator_norm(lhs.Z() - rhs.Z()));
        max_norm = std::max({max_norm, lhs.op_norm(), rhs.op_norm()});
        const auto target = random_siegel(d, 0.8, rng);
        const auto back = moebius(transport_from_origin(target), SiegelPoint::origin(d));
        transport = std::max(transport, operator_norm(back.Z() - target.Z()));
    }
    return {cocycle <= 1e-9 && forms <= 1e-10 && transport <= 1e-10 && max_norm < 1.0,
            "cocycle " + sci(cocycle) + " (<= 1e-9), forms " + sci(forms) + " (<= 1e-10), transport " +
                sci(transport) + " (<= 1e-10), max image norm " + sci(max_norm) + " (< 1)"};
}

// 5. T(R) preserves inner products of exponential vectors.
Verdict representation_unitarity() {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = trial_rng(kSeed, 5000 + i);
        const Eigen::Index d = dim_in(rng, 1, 4);
        const auto r = random_symplectic(d, rng);
        const ComplexVector f = random_vector(d, 1.0, rng), g = random_vector(d, 1.0, rng);
        worst = std::max(worst, rel(overlap(act_on_exponential(r, f), act_on_exponential(r, g)),
                                    std::exp(sesquilinear(f, g))));
    }
    return {worst <= 1e-9, "max rel " + sci(worst) + " (<= 1e-9)"};
}

// 6. T(R2) T(R1) = chi T(R2 R1) on ultracoherent states.
Verdict ray_composition() {
    double worst = 0.0, modulus = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = trial_rng(kSeed, 6000 + i);
        const Eigen::Index d = dim_in(rng, 1, 4);
        const auto r1 = random_symplectic(d, rng), r2 = random_symplectic(d, rng);
        const auto x = random_state(d, rng);
        worst = std::max(worst, check_composition(r2, r1, x));
        modulus = std::max(modulus, std::abs(std::abs(multiplier(r2, r1).value) - 1.0));
    }
    return {worst <= 1e-9 && modulus <= 1e-10,
            "state residual " + sci(worst) + " (<= 1e-9), ||chi| - 1| " + sci(modulus) + " (<= 1e-10)"};
}

// 7. T(R) W(h) = W(Rh) T(R) with no phase.
Verdict intertwining() {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = trial_rng(kSeed, 7000 + i);
        const Eigen::Index d = dim_in(rng, 1, 4);
        const auto r = random_symplectic(d, rng);
        const ComplexVector h = random_vector(d, 1.5, rng);
        worst = std::max(worst, check_intertwining(r, h, random_state(d, rng)));
    }
    return {worst <= 1e-9, "max residual " + sci(worst) + " (<= 1e-9)"};
}

// 8. Weyl relations at the state level.
Verdict weyl_relations() {
    double phased = 0.0, inverse_gap = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = trial_rng(kSeed, 8000 + i);
        const Eigen::Index d = dim_in(rng, 1, 4);
        const auto x = random_state(d, rng);
        const ComplexVector f = random_vector(d, 1.5, rng), g = random_vector(d, 1.5, rng);
        const auto lhs = weyl_apply(f, weyl_apply(g, x));
        const auto rhs = scaled(weyl_apply(f + g, x), LogComplex::from_value(weyl_phase(f, g)));
        phased = std::max(phased, state_residual(lhs, rhs));
        inverse_gap = std::max(inverse_gap, state_residual(weyl_apply(f, weyl_apply(-f, x)), x));
    }
    return {phased <= 1e-10 && inverse_gap <= 1e-12,
            "phased composition " + sci(phased) + " (<= 1e-10), W(h)W(-h) " + sci(inverse_gap) + " (<= 1e-12)"};
}

// 9. Takagi reconstruction.
Verdict takagi_reconstruction() {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = trial_rng(kSeed, 9000 + i);
        const Eigen::Index d = dim_in(rng, 1, 8);
        const ComplexMatrix g = gaussian_matrix(d, d, rng);
        ComplexMatrix a = g + g.transpose();
        a *= uniform(rng, 0.0, 0.9) / std::max(operator_norm(a), 1e-300);
        const TakagiFactors t = takagi(a);
        worst = std::max(worst, operator_norm(a - t.F * t.alphas.asDiagonal() * t.F.transpose()));
        worst = std::max(worst, operator_norm(t.F.adjoint() * t.F - identity_matrix(d)));
    }
    return {worst <= 1e-10, "max residual " + sci(worst) + " (<= 1e-10)"};
}

FockTensor random_tensor(int d, int n, int only_degree, Rng& rng) {
    auto basis = FockBasis::shared(d, n);
    ComplexVector c = ComplexVector::Zero(basis->size());
    for (std::size_t i = 0; i < basis->size(); ++i) {
        if (only_degree >= 0 && basis->degree(i) != only_degree) continue;
        const double decay = only_degree >= 0 ? 1.0 : std::pow(uniform(rng, 0.1, 0.6), basis->degree(i));
        c(i) = cplx{uniform(rng, -1, 1), uniform(rng, -1, 1)} * decay / std::sqrt(basis->weight(i));
    }
    return FockTensor(basis, c);
}

double binomial(int n, int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// 10. Oracle internals: CCR, homogeneous product bound, alpha-norm product bound.
Verdict oracle_internal() {
    double ccr = 0.0;
    for (int d = 1; d <= 3; ++d) {
        const int n = d == 3 ? 6 : 8;
        Rng rng = trial_rng(kSeed, 10000 + static_cast<std::uint64_t>(d));
        const ComplexVector f = random_vector(d, 1.0, rng), g = random_vector(d, 1.0, rng);
        const auto low = static_cast<Eigen::Index>(FockBasis::shared(d, n)->count_up_to(n - 1));
        const FockOperator pf = create(f, n) - annihilate(f.conjugate(), n);
        const FockOperator pg = create(g, n) - annihilate(g.conjugate(), n);
        const ComplexMatrix c = (pf * pg - pg * pf).matrix().leftCols(low) -
                                cplx(0.0, -2.0 * symplectic_form(f, g)) * FockOperator::identity(d, n).matrix().leftCols(low);
        ccr = std::max(ccr, c.cwiseAbs().maxCoeff());
    }
    double homogeneous = 0.0, alpha = 0.0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        Rng rng = trial_rng(kSeed, 11000 + i);
        const int d = uniform_int(rng, 1, 3);
        const int m = uniform_int(rng, 0, 6), k = uniform_int(rng, 0, 6);
        const FockTensor f = random_tensor(d, 12, m, rng), g = random_tensor(d, 12, k, rng);
        homogeneous = std::max(homogeneous, tensor_norm(symmetric_product(f, g)) /
                                                (std::sqrt(binomial(m + k, m)) * tensor_norm(f) * tensor_norm(g)));

        const int n = d == 3 ? 10 : 14;
        const double a = uniform(rng, 0.05, 0.45), b = uniform(rng, 0.05, 0.45);
        const double c = uniform(rng, a + b, 1.0);
        const FockTensor p = random_tensor(d, n, -1, rng), q = random_tensor(d, n, -1, rng);
        const double ratio = (a + b) / c;
        const double constant = 1.0 / std::sqrt(1.0 - ratio * ratio);
        alpha = std::max(alpha, alpha_norm(symmetric_product(p, q), c) / (constant * alpha_norm(p, a) * alpha_norm(q, b)));
    }
    const bool ok = ccr <= 1e-10 && homogeneous <= 1.0 + 1e-12 && alpha <= 1.0 + 1e-12;
    return {ok, "CCR " + sci(ccr) + " (<= 1e-10), homogeneous bound ratio " + sci(homogeneous) +
                    " (<= 1), alpha-norm bound ratio " + sci(alpha) + " (<= 1)"};
}

std::vector<Gate> random_circuit(int d, Rng& rng) {
    std::vector<Gate> gates;
    const int count = uniform_int(rng, 0, 8);
    for (int k = 0; k < count; ++k) {
        const int m = uniform_int(rng, 0, d - 1);
        switch (uniform_int(rng, d > 1 ? 0 : 1, 4)) {
            case 0: gates.push_back({Beamsplitter{m, (m + 1) % d, uniform(rng, -3, 3), uniform(rng, -3, 3)}}); break;
            case 1: gates.push_back({Displace{m, {uniform(rng, -1, 1), uniform(rng, -1, 1)}}}); break;
            case 2: gates.push_back({Squeeze{m, uniform(rng, -0.8, 0.8), uniform(rng, -3, 3)}}); break;
            default: gates.push_back({Rotate{m, uniform(rng, -3, 3)}}); break;
        }
    }
    return gates;
}

// 11. Compiled normal form against gate-by-gate application.
Verdict circuits() {
    double worst = 0.0, norm_gap = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = trial_rng(kSeed, 12000 + i);
        const int d = uniform_int(rng, 1, 3);
        const auto gates = random_circuit(d, rng);
        const auto x = run(compile(gates, d));
        worst = std::max(worst, state_residual(x, apply_sequential(gates, d)));
        norm_gap = std::max(norm_gap, std::abs(norm(x) - 1.0));
    }
    return {worst <= 1e-9 && norm_gap <= 1e-9,
            "compiled vs sequential " + sci(worst) + " (<= 1e-9), |norm - 1| " + sci(norm_gap) + " (<= 1e-9)"};
}

// 12. Closed-form conjugated free field against the group product.
Verdict free_field() {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = trial_rng(kSeed, 13000 + i);
        const Eigen::Index d = dim_in(rng, 1, 5);
        const auto r1 = random_symplectic(d, rng);
        RealVector m(d);
        ComplexMatrix u0 = ComplexMatrix::Zero(d, d);
        const double t = uniform(rng, -5.0, 5.0);
        for (Eigen::Index k = 0; k < d; ++k) {
            m(k) = uniform(rng, 0.0, 3.0);
            u0(k, k) = std::polar(1.0, -m(k) * t);
        }
        const auto direct = conjugated_free_field(r1, m, t);
        const auto product = compose(r1, compose(from_unitary(u0), inverse(r1)));
        worst = std::max(worst, element_distance(direct, product));
    }
    return {worst <= 1e-10, "max entry gap " + sci(worst) + " (<= 1e-10)"};
}

struct CliRun {
    int code;
    std::string out;
    double seconds;
};

CliRun run_verify_all() {
    const auto t0 = Clock::now();
    const std::string cmd = std::string(UCOH_CLI_PATH) + " verify --suite all";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "", 0.0};
    std::string out;
    char buf[4096];
    while (const std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, seconds_since(t0)};
}

// 13. Full verification run: fast, passing and reproducible.
Verdict verify_all() {
    const CliRun a = run_verify_all();
    const CliRun b = run_verify_all();
    const bool same = a.out == b.out && !a.out.empty();
    const bool ok = a.code == 0 && b.code == 0 && a.seconds < 60.0 && b.seconds < 60.0 && same;
    return {ok, "exit codes " + std::to_string(a.code) + "/" + std::to_string(b.code) + ", times " + sci(a.seconds) +
                    " s / " + sci(b.seconds) + " s (< 60), outputs " + (same ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"overlap master oracle", master_oracle},
        {"scalar determinant formula", scalar_determinant},
        {"symplectic identities", symplectic_identities},
        {"siegel geometry", siegel_geometry},
        {"representation unitarity", representation_unitarity},
        {"ray composition", ray_composition},
        {"bogoliubov intertwining", intertwining},
        {"weyl relations", weyl_relations},
        {"takagi", takagi_reconstruction},
        {"fock oracle internals", oracle_internal},
        {"circuit end-to-end", circuits},
        {"free-field demo", free_field},
        {"verify --suite all", verify_all},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.passed) ++failures;
        std::printf("%s %2d %-28s %s\n", v.passed ? "PASS" : "FAIL", index, name, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}

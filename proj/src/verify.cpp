#include "ucoh/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "ucoh/circuit.hpp"
#include "ucoh/errors.hpp"
#include "ucoh/fock.hpp"
#include "ucoh/random.hpp"

namespace ucoh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using TrialFn = std::function<double(Rng&)>;

std::uint64_t stream_id(const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
    return h;
}

enum class Limit { residual, fixed };

// Trials run in parallel, each from its own seeded stream; the maximum is
// reduced in trial order.
class Runner {
public:
    Runner(std::string suite, const VerifyOptions& opts, std::vector<CheckResult>& out)
        : suite_(std::move(suite)), opts_(opts), out_(out) {}

    void check(const std::string& name, int trials, double threshold, Limit limit, const TrialFn& fn) {
        const int n = opts_.trials.value_or(trials);
        if (limit == Limit::residual && opts_.tol) threshold = *opts_.tol;
        const std::uint64_t base = stream_id(suite_ + "/" + name);
        std::vector<double> values(static_cast<std::size_t>(n), 0.0);
        std::vector<std::string> errors(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < n; ++i) {
            Rng rng = trial_rng(opts_.seed ^ base, static_cast<std::uint64_t>(i));
            try {
                values[i] = fn(rng);
            } catch (const std::exception& e) {
                values[i] = kInf;
                errors[i] = e.what();
            }
        }

        CheckResult r{suite_, name, true, 0.0, threshold, n, {}};
        for (int i = 0; i < n; ++i) {
            const double v = std::isnan(values[i]) ? kInf : values[i];
            if (v > r.worst) r.worst = v;
            if (r.detail.empty() && !errors[i].empty()) r.detail = "trial " + std::to_string(i) + ": " + errors[i];
        }
        r.passed = r.worst <= threshold;
        out_.push_back(std::move(r));
    }

private:
    std::string suite_;
    const VerifyOptions& opts_;
    std::vector<CheckResult>& out_;
};

double rel_gap(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// |exp(la - lb) - 1| without cancellation for small differences.
double log_rel_gap(cplx la, cplx lb) {
    const cplx z = la - lb;
    const double s = std::sin(0.5 * z.imag());
    return std::abs(cplx{std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * s * s, std::exp(z.real()) * std::sin(z.imag())});
}

Eigen::Index pick_dim(Rng& rng, int lo, int hi) { return uniform_int(rng, lo, hi); }

ComplexMatrix id(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

double constraint_identities(const SymplecticElement& r) {
    const ComplexMatrix& u = r.U();
    const ComplexMatrix& v = r.V();
    const Eigen::Index d = r.dim();
    const ComplexMatrix ui = inverse(u);
    const ComplexMatrix w = ui * v;
    const ComplexMatrix x = v.conjugate() * ui;
    const double nu = operator_norm(u);
    const double shrink = 1.0 - 1.0 / (nu * nu);
    double res = constraint_residuals(u, v).max();
    res = std::max(res, operator_norm(w - v.transpose() * ui.transpose()));
    res = std::max(res, operator_norm(x - ui.transpose() * v.adjoint()));
    res = std::max(res, operator_norm(id(d) - w * w.adjoint() - inverse(u.adjoint() * u)));
    res = std::max(res, operator_norm(id(d) - x.adjoint() * x - inverse(u * u.adjoint())));
    res = std::max(res, std::abs(std::pow(operator_norm(w), 2) - shrink));
    res = std::max(res, std::abs(std::pow(operator_norm(x), 2) - shrink));
    return res;
}

double takagi_residual(Rng& rng, Eigen::Index d) {
    const ComplexMatrix g = gaussian_matrix(d, d, rng);
    ComplexMatrix a = 0.5 * (g + g.transpose());
    a *= uniform(rng, 0.0, 0.9) / std::max(operator_norm(a), 1e-300);
    const TakagiFactors t = takagi(a);
    const double rec = operator_norm(a - t.F * t.alphas.cast<cplx>().asDiagonal() * t.F.transpose());
    const double uni = operator_norm(t.F.adjoint() * t.F - id(d));
    return std::max(rec / (1.0 + operator_norm(a)), uni);
}

// Cutoff for comparing oracle inner products against a reference value:
// both tails below 1e-8, and the truncation error bound below 1e-8 |ref|.
int oracle_cutoff(const UltracoherentState& x, const UltracoherentState& y, double ref_modulus) {
    int n = std::max(choose_cutoff(x, 1e-8), choose_cutoff(y, 1e-8));
    while (n < 170 && std::sqrt(tail_bound(x, n) * tail_bound(y, n)) > 1e-8 * ref_modulus) ++n;
    return n;
}

FockTensor random_tensor(int dim, int cutoff, int lo, int hi, Rng& rng) {
    auto basis = FockBasis::shared(dim, cutoff);
    ComplexVector c = ComplexVector::Zero(static_cast<Eigen::Index>(basis->size()));
    std::normal_distribution<double> n01;
    for (std::size_t i = basis->degree_begin(lo); i < basis->degree_end(hi); ++i)
        c(static_cast<Eigen::Index>(i)) = cplx(n01(rng), n01(rng)) / std::sqrt(basis->weight(i));
    return {basis, c};
}

std::vector<Gate> random_circuit(int dim, int max_gates, Rng& rng) {
    const int count = uniform_int(rng, 0, max_gates);
    std::vector<Gate> gates;
    const double pi = std::numbers::pi;
    for (int k = 0; k < count; ++k) {
        const int kind = uniform_int(rng, 0, dim >= 2 ? 3 : 2);
        const int mode = uniform_int(rng, 0, dim - 1);
        GateKind g;
        switch (kind) {
            case 0: g = Displace{mode, {uniform(rng, -1, 1), uniform(rng, -1, 1)}}; break;
            case 1: g = Squeeze{mode, uniform(rng, -1, 1), uniform(rng, -pi, pi)}; break;
            case 2: g = Rotate{mode, uniform(rng, -pi, pi)}; break;
            default: {
                int other = uniform_int(rng, 0, dim - 2);
                if (other >= mode) ++other;
                g = Beamsplitter{mode, other, uniform(rng, -pi, pi), uniform(rng, -pi, pi)};
            }
        }
        gates.push_back({g, k + 1});
    }
    return gates;
}

void symplectic_suite(Runner& runner) {
    runner.check("constraint identities", 200, 1e-10, Limit::residual, [](Rng& rng) {
        return constraint_identities(random_symplectic(pick_dim(rng, 1, 6), rng));
    });
    runner.check("associativity", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 6);
        const auto a = random_symplectic(d, rng), b = random_symplectic(d, rng), c = random_symplectic(d, rng);
        return element_distance(compose(compose(a, b), c), compose(a, compose(b, c)));
    });
    runner.check("inverse", 100, 1e-10, Limit::residual, [](Rng& rng) {
        const auto r = random_symplectic(pick_dim(rng, 1, 6), rng);
        return element_distance(compose(r, inverse(r)), identity(r.dim()));
    });
    runner.check("symplectic form invariance", 500, 1e-10, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 6);
        const auto r = random_symplectic(d, rng);
        const ComplexVector f = random_vector(d, 1.0, rng), g = random_vector(d, 1.0, rng);
        return std::abs(symplectic_form(ucoh::apply(r, f), ucoh::apply(r, g)) - symplectic_form(f, g));
    });
    runner.check("polar factorization", 100, 1e-9, Limit::residual, [](Rng& rng) {
        return polar_factorize(random_symplectic(pick_dim(rng, 1, 4), rng)).residual;
    });
    runner.check("conjugated free field", 100, 1e-10, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 4);
        const auto r1 = random_symplectic(d, rng);
        RealVector m(d);
        for (Eigen::Index i = 0; i < d; ++i) m(i) = uniform(rng, 0.0, 3.0);
        const double t = uniform(rng, -5.0, 5.0);
        const ComplexVector phases = (m.cast<cplx>() * cplx(0, -t)).array().exp();
        const auto k = from_unitary(phases.asDiagonal().toDenseMatrix());
        return element_distance(conjugated_free_field(r1, m, t), compose(r1, compose(k, inverse(r1))));
    });
    runner.check("takagi reconstruction", 200, 1e-10, Limit::residual,
              [](Rng& rng) { return takagi_residual(rng, pick_dim(rng, 1, 8)); });
}

void siegel_suite(Runner& runner) {
    runner.check("cocycle", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 5);
        const auto z = random_siegel(d, 0.8, rng);
        const auto r1 = random_symplectic(d, rng), r2 = random_symplectic(d, rng);
        return operator_norm(moebius(r2, moebius(r1, z)).Z() - moebius(compose(r2, r1), z).Z());
    });
    runner.check("moebius forms agree", 200, 1e-10, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 5);
        return moebius_checked(random_symplectic(d, rng), random_siegel(d, 0.8, rng)).form_gap;
    });
    runner.check("transport from origin", 200, 1e-10, Limit::residual, [](Rng& rng) {
        const auto z = random_siegel(pick_dim(rng, 1, 5), 0.8, rng);
        return operator_norm(moebius(transport_from_origin(z), SiegelPoint::origin(z.dim())).Z() - z.Z());
    });
    runner.check("disc preservation (max norm)", 200, 1.0 - 1e-9, Limit::fixed, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 5);
        return moebius(random_symplectic(d, rng), random_siegel(d, 0.8, rng)).op_norm();
    });
    runner.check("symmetry preservation", 200, 1e-10, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 5);
        const auto r = random_symplectic(d, rng);
        const auto z = random_siegel(d, 0.8, rng);
        const auto mr = moebius_checked(r, z);
        // The unsymmetrized right-hand form, as computed before averaging.
        const ComplexMatrix num = r.U() * z.Z() + r.V();
        const ComplexMatrix den = r.U().conjugate() + r.V().conjugate() * z.Z();
        const ComplexMatrix right = num * inverse(den);
        return std::max(operator_norm(right - right.transpose()), operator_norm(mr.point.Z() - mr.point.Z().transpose()));
    });
}

void overlap_suite(Runner& runner) {
    runner.check("scalar determinant formula", 1, 1e-10, Limit::residual, [](Rng&) {
        const auto x = make_state(make_point(ComplexMatrix::Constant(1, 1, 0.5)), ComplexVector::Zero(1));
        return std::abs(overlap(x, x) - std::pow(0.75, -0.5));
    });
    runner.check("coherent overlap", 100, 1e-10, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 6);
        const ComplexVector f = random_vector(d, 1.5, rng), g = random_vector(d, 1.5, rng);
        const cplx expect = std::exp(sesquilinear(f, g) - 0.5 * f.squaredNorm() - 0.5 * g.squaredNorm());
        return rel_gap(overlap(coherent(f), coherent(g)), expect);
    });
    runner.check("hermitian symmetry", 100, 1e-10, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 6);
        const auto x = random_state(d, rng), y = random_state(d, rng);
        return rel_gap(overlap(x, y), std::conj(overlap(y, x)));
    });
    runner.check("gram positivity", 50, 1e-8, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 4);
        std::vector<UltracoherentState> xs;
        for (int i = 0; i < 6; ++i) xs.push_back(random_state(d, rng));
        ComplexMatrix g(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) g(i, j) = overlap(xs[i], xs[j]);
        const ComplexMatrix h = 0.5 * (g + g.adjoint());
        return std::max(0.0, -Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h).eigenvalues().minCoeff());
    });
    runner.check("vacuum-sector special case", 100, 1e-10, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 6);
        const auto a = random_siegel(d, 0.9, rng), b = random_siegel(d, 0.9, rng);
        const ComplexVector g = random_vector(d, 1.0, rng);
        const ComplexMatrix m = id(d) - a.Z().adjoint() * b.Z();
        const cplx expect = log_sqrt_det_inv(m).log() + 0.5 * bilinear(g, solve(m, ComplexVector(a.Z().adjoint() * g)));
        const auto x = make_state(a, ComplexVector::Zero(d));
        const auto y = make_state(b, g);
        return log_rel_gap(log_overlap(x, y), expect);
    });
    runner.check("norm closed form", 100, 1e-10, Limit::residual, [](Rng& rng) {
        const auto x = random_state(pick_dim(rng, 1, 6), rng, 0.9, 2.0);
        return std::abs(norm(x) / norm_closed_form(x) - 1.0);
    });
    runner.check("weyl unitarity", 100, 1e-10, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 6);
        const auto x = random_state(d, rng), y = random_state(d, rng);
        const ComplexVector h = random_vector(d, 1.5, rng);
        return log_rel_gap(log_overlap(weyl_apply(h, x), weyl_apply(h, y)), log_overlap(x, y));
    });
    runner.check("weyl relations", 100, 1e-10, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 6);
        const auto x = random_state(d, rng);
        const ComplexVector f = random_vector(d, 1.5, rng), g = random_vector(d, 1.5, rng);
        const auto lhs = weyl_apply(f, weyl_apply(g, x));
        const auto rhs = scaled(weyl_apply(f + g, x), LogComplex{0.0, -symplectic_form(f, g)});
        return state_residual(lhs, rhs);
    });
    runner.check("weyl inverse", 100, 1e-12, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 6);
        const auto x = random_state(d, rng);
        const ComplexVector h = random_vector(d, 1.5, rng);
        return state_residual(weyl_apply(-h, weyl_apply(h, x)), x);
    });
    runner.check("displacement to origin", 100, 1e-10, Limit::residual, [](Rng& rng) {
        const auto x = random_state(pick_dim(rng, 1, 6), rng, 0.9, 2.0);
        const ComplexVector h = displacement_to_origin(x);
        return (h - x.Z() * h.conjugate() - x.f).norm();
    });
    runner.check("displaced-squeezed round trip", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const auto x = random_state(pick_dim(rng, 1, 6), rng, 0.9, 2.0);
        const auto parts = factor_displaced_squeezed(x);
        const auto rebuilt = scaled(weyl_apply(parts.h, act(parts.r, vacuum(x.dim()))), parts.log_residual_amp);
        return std::max(std::abs(1.0 - fidelity(rebuilt, x)), state_residual(rebuilt, x));
    });
}

void representation_suite(Runner& runner) {
    runner.check("unitarity on exponential vectors", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 6);
        const auto r = random_symplectic(d, rng);
        const ComplexVector f = random_vector(d, 1.0, rng), g = random_vector(d, 1.0, rng);
        return log_rel_gap(log_overlap(act_on_exponential(r, f), act_on_exponential(r, g)), sesquilinear(f, g));
    });
    runner.check("ray composition", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 4);
        const auto r1 = random_symplectic(d, rng), r2 = random_symplectic(d, rng);
        return check_composition(r2, r1, random_state(d, rng));
    });
    runner.check("multiplier modulus", 100, 1e-10, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 4);
        const auto r1 = random_symplectic(d, rng), r2 = random_symplectic(d, rng);
        return std::abs(std::abs(multiplier(r2, r1).value) - 1.0);
    });
    runner.check("bogoliubov intertwining", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 4);
        const auto r = random_symplectic(d, rng);
        const ComplexVector h = random_vector(d, 1.0, rng);
        return check_intertwining(r, h, random_state(d, rng));
    });
    runner.check("unitary covariance", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 4);
        const ComplexMatrix k = random_unitary(d, rng);
        const auto r = random_symplectic(d, rng);
        const auto x = random_state(d, rng);
        const auto kk = from_unitary(k);
        const auto lhs = act(compose(kk, compose(r, inverse(kk))), x);
        const auto rhs = gamma_act(k, act(r, gamma_act(k.adjoint(), x)));
        return state_residual(lhs, rhs);
    });
    runner.check("adjoint", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 4);
        const auto r = random_symplectic(d, rng);
        const auto x = random_state(d, rng), y = random_state(d, rng);
        return log_rel_gap(log_overlap(adjoint_act(r, y), x), log_overlap(y, act(r, x)));
    });
    runner.check("norm preservation", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 4);
        const auto x = random_state(d, rng);
        return std::abs(norm(act(random_symplectic(d, rng), x)) - norm(x));
    });
}

void oracle_suite(Runner& runner) {
    runner.check("overlap master oracle", 50, 1e-6, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 3);
        const auto x = random_state(d, rng), y = random_state(d, rng);
        const cplx ov = overlap(x, y);
        const int n = oracle_cutoff(x, y, std::abs(ov));
        const cplx ref = inner(represent_state(x, n), represent_state(y, n));
        return rel_gap(ref, ov);
    });
    runner.check("scalar determinant series (cutoff 40)", 1, 1e-8, Limit::residual, [](Rng&) {
        const FockTensor e = exp_omega(ComplexMatrix::Constant(1, 1, 0.5), 40);
        return std::abs(inner(e, e).real() - std::pow(0.75, -0.5));
    });
    runner.check("canonical commutation relations", 20, 1e-10, Limit::residual, [](Rng& rng) {
        const int d = static_cast<int>(pick_dim(rng, 1, 3));
        const int cutoff = d == 3 ? 6 : 8;
        const ComplexVector f = random_vector(d, 1.0, rng), g = random_vector(d, 1.0, rng);
        const ComplexMatrix fs = f.conjugate(), gs = g.conjugate();
        const ComplexMatrix pf = create(f, cutoff).matrix() - annihilate(fs.col(0), cutoff).matrix();
        const ComplexMatrix pg = create(g, cutoff).matrix() - annihilate(gs.col(0), cutoff).matrix();
        const ComplexMatrix comm = pf * pg - pg * pf;
        const ComplexMatrix ladder = annihilate(f, cutoff).matrix() * create(g, cutoff).matrix() -
                                     create(g, cutoff).matrix() * annihilate(f, cutoff).matrix();
        const auto keep = static_cast<Eigen::Index>(FockBasis::shared(d, cutoff)->degree_end(cutoff - 1));
        const Eigen::Index n = comm.rows();
        const ComplexMatrix want = cplx(0, -2.0 * symplectic_form(f, g)) * ComplexMatrix::Identity(n, keep);
        const ComplexMatrix want2 = bilinear(f, g) * ComplexMatrix::Identity(n, keep);
        return std::max((comm.leftCols(keep) - want).cwiseAbs().maxCoeff(),
                        (ladder.leftCols(keep) - want2).cwiseAbs().maxCoeff());
    });
    runner.check("homogeneous product bound (ratio)", 500, 1.0 + 1e-12, Limit::fixed, [](Rng& rng) {
        const int d = static_cast<int>(pick_dim(rng, 1, 3));
        const int m = uniform_int(rng, 0, 6), n = uniform_int(rng, 0, 6);
        const FockTensor f = random_tensor(d, m + n, m, m, rng);
        const FockTensor g = random_tensor(d, m + n, n, n, rng);
        const double c = std::sqrt(std::tgamma(m + n + 1.0) / (std::tgamma(m + 1.0) * std::tgamma(n + 1.0)));
        return tensor_norm(symmetric_product(f, g)) / (c * tensor_norm(f) * tensor_norm(g));
    });
    runner.check("alpha-norm product bound (ratio)", 500, 1.0 + 1e-12, Limit::fixed, [](Rng& rng) {
        const int d = static_cast<int>(pick_dim(rng, 1, 3));
        const int top = 6;
        const FockTensor f = random_tensor(d, 2 * top, 0, uniform_int(rng, 0, top), rng);
        const FockTensor g = random_tensor(d, 2 * top, 0, uniform_int(rng, 0, top), rng);
        const double gamma_ = uniform(rng, 0.05, 1.0);
        const double sum = uniform(rng, 0.01, 0.999) * gamma_;
        const double alpha = uniform(rng, 0.01, 0.99) * sum;
        const double beta = sum - alpha;
        const double c = 1.0 / std::sqrt(1.0 - std::pow(sum / gamma_, 2));
        return alpha_norm(symmetric_product(f, g), gamma_) / (c * alpha_norm(f, alpha) * alpha_norm(g, beta));
    });
    runner.check("representation oracle", 30, 1e-6, Limit::residual, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 3);
        const auto r = random_symplectic(d, rng, 0.5);
        const auto x = random_state(d, rng, 0.4, 0.7);
        const ComplexVector z = random_vector(d, 0.7, rng);
        const cplx want = bargmann_eval(act(r, x), z);
        const auto probe = act_on_exponential(inverse(r), z);
        const int n = oracle_cutoff(probe, x, std::abs(want));
        return rel_gap(inner(represent_state(probe, n), represent_state(x, n)), want);
    });
    runner.check("tail bound soundness (ratio)", 50, 1.0, Limit::fixed, [](Rng& rng) {
        const Eigen::Index d = pick_dim(rng, 1, 2);
        const auto x = random_state(d, rng);
        const int n = uniform_int(rng, 4, 20);
        const RealVector dn = degree_norms(represent_state(x, 2 * n));
        const double recovered = dn.tail(n).sum();
        return recovered / tail_bound(x, n);
    });
}

void dsl_suite(Runner& runner) {
    runner.check("compiled vs sequential", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const int d = static_cast<int>(pick_dim(rng, 1, 3));
        const auto gates = random_circuit(d, 8, rng);
        return state_residual(run(compile(gates, d)), apply_sequential(gates, d));
    });
    runner.check("run norm", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const int d = static_cast<int>(pick_dim(rng, 1, 3));
        return std::abs(norm(run(compile(random_circuit(d, 8, rng), d))) - 1.0);
    });
    runner.check("parser round trip (mismatches)", 100, 0.0, Limit::fixed, [](Rng& rng) {
        const int d = static_cast<int>(pick_dim(rng, 1, 3));
        const auto gates = random_circuit(d, 8, rng);
        const auto again = parse(to_text(gates), d);
        return again == gates && to_text(again) == to_text(gates) ? 0.0 : 1.0;
    });
    runner.check("gate inverses", 100, 1e-9, Limit::residual, [](Rng& rng) {
        const int d = static_cast<int>(pick_dim(rng, 1, 3));
        auto gates = random_circuit(d, 8, rng);
        const auto inv = inverse_gates(gates);
        gates.insert(gates.end(), inv.begin(), inv.end());
        return std::abs(1.0 - fidelity(apply_sequential(gates, d), vacuum(d)));
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"symplectic", "siegel", "overlap", "representation", "oracle", "dsl"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    if (suite == "all") {
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, opts);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    Runner runner(suite, opts, out);
    if (suite == "symplectic")
        symplectic_suite(runner);
    else if (suite == "siegel")
        siegel_suite(runner);
    else if (suite == "overlap")
        overlap_suite(runner);
    else if (suite == "representation")
        representation_suite(runner);
    else if (suite == "oracle")
        oracle_suite(runner);
    else if (suite == "dsl")
        dsl_suite(runner);
    else
        throw InputError("unknown suite '" + suite + "'");
    return out;
}

}  // namespace ucoh

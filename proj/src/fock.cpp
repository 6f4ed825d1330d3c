#include "ucoh/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "ucoh/errors.hpp"
#include "ucoh/fock_kernels.hpp"

namespace ucoh {

namespace {

std::span<const cplx> view(const ComplexVector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }
std::span<cplx> view(ComplexVector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

void require_same_space(const FockBasis& a, const FockBasis& b, const char* where) {
    if (a.dim() != b.dim() || a.cutoff() != b.cutoff())
        throw DimensionMismatch(std::string(where) + ": tensors live in different truncated spaces");
}

void sparse_product(Exec exec, const FockBasis& basis, std::span<const kernels::SparseTerm> terms,
                    const ComplexVector& g, cplx scale, ComplexVector& out, int lo, int hi) {
    if (exec == Exec::serial)
        kernels::sparse_product_serial(basis, terms, view(g), scale, view(out), lo, hi);
    else
        kernels::sparse_product_parallel(basis, terms, view(g), scale, view(out), lo, hi);
}

std::vector<kernels::SparseTerm> linear_terms(const ComplexVector& f) {
    std::vector<kernels::SparseTerm> terms;
    for (int mu = 0; mu < f.size(); ++mu)
        if (f(mu) != cplx{}) terms.push_back({{mu}, f(mu)});
    return terms;
}

void require_symmetric(const ComplexMatrix& a, const char* where) {
    if (a.rows() != a.cols()) throw DimensionMismatch(std::string(where) + ": matrix is not square");
    const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * (1.0 + a.cwiseAbs().maxCoeff()))
        throw NotSymmetric(std::string(where) + ": matrix is not transposition-symmetric");
}

std::vector<kernels::SparseTerm> quadratic_terms(const ComplexMatrix& a) {
    std::vector<kernels::SparseTerm> terms;
    for (int mu = 0; mu < a.rows(); ++mu) {
        if (a(mu, mu) != cplx{}) terms.push_back({{mu, mu}, 0.5 * a(mu, mu)});
        for (int nu = mu + 1; nu < a.cols(); ++nu)
            if (a(mu, nu) != cplx{}) terms.push_back({{mu, nu}, 0.5 * (a(mu, nu) + a(nu, mu))});
    }
    return terms;
}

// Squared norm of exp Omega(a) v exp g in one mode, from the three-term
// recurrence of the coefficients rescaled by sqrt(n!).
double single_mode_norm_sq(double a, cplx g) {
    cplx prev = 1.0;
    cplx cur = g;
    double sum = 1.0 + std::norm(g);
    for (int n = 1; n < 200000; ++n) {
        const cplx next = (g * cur + a * std::sqrt(double(n)) * prev) / std::sqrt(n + 1.0);
        prev = cur;
        cur = next;
        const double t = std::norm(cur);
        sum += t;
        if (n > 16 && t + std::norm(prev) < 1e-18 * sum) break;
    }
    return sum * (1.0 + 1e-12);
}

struct TailProfile {
    bool exact = false;            // vacuum-proportional: nothing above degree 0
    double log_amp_sq = 0.0;
    std::vector<double> log_beta;
    std::vector<double> log_norm_sq;   // log ||Phi||_(beta)^2 without the amplitude
};

TailProfile tail_profile(const UltracoherentState& x) {
    TailProfile p;
    p.log_amp_sq = 2.0 * x.log_amp.re;
    const double znorm = operator_norm(x.Z());
    if (!(znorm < 1.0)) throw NotInDisc("tail_bound: ||Z|| >= 1", znorm);
    if (znorm == 0.0 && x.f.squaredNorm() == 0.0) {
        p.exact = true;
        return p;
    }
    const TakagiFactors tk = takagi(0.5 * (x.Z() + x.Z().transpose()), 1e-8);
    const ComplexVector g = tk.F.adjoint() * x.f;

    const double lo = std::max(std::sqrt(znorm), 1e-4);
    constexpr int kGrid = 96;
    for (int k = 1; k <= kGrid; ++k) {
        // Geometric grid in (lo, 1].
        const double beta = std::exp(std::log(lo) * (1.0 - double(k) / kGrid));
        double acc = 0.0;
        bool ok = true;
        for (int mu = 0; mu < x.dim(); ++mu) {
            const double a = tk.alphas(mu) / (beta * beta);
            if (!(a < 1.0 - 1e-9)) {
                ok = false;
                break;
            }
            acc += std::log(single_mode_norm_sq(a, g(mu) / beta));
        }
        if (!ok) continue;
        p.log_beta.push_back(std::log(beta));
        p.log_norm_sq.push_back(acc);
    }
    return p;
}

double tail_from_profile(const TailProfile& p, int cutoff) {
    if (p.exact) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < p.log_beta.size(); ++k)
        best = std::min(best, 2.0 * (cutoff + 1) * p.log_beta[k] + p.log_norm_sq[k]);
    return std::exp(best + p.log_amp_sq);
}

}  // namespace

FockTensor::FockTensor(std::shared_ptr<const FockBasis> basis)
    : basis_(std::move(basis)), coeffs_(ComplexVector::Zero(static_cast<Eigen::Index>(basis_->size()))) {}

FockTensor::FockTensor(std::shared_ptr<const FockBasis> basis, ComplexVector coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (static_cast<std::size_t>(coeffs_.size()) != basis_->size())
        throw DimensionMismatch("FockTensor: coefficient count does not match the basis");
}

FockTensor FockTensor::zero(int dim, int cutoff) { return FockTensor(FockBasis::shared(dim, cutoff)); }

FockTensor FockTensor::vacuum(int dim, int cutoff) {
    FockTensor t = zero(dim, cutoff);
    t.coeffs_(0) = 1.0;
    return t;
}

FockTensor FockTensor::unit(int dim, int cutoff, std::span<const int> m) {
    FockTensor t = zero(dim, cutoff);
    if (static_cast<int>(m.size()) != dim) throw DimensionMismatch("FockTensor::unit: multi-index length");
    int deg = 0;
    for (int k : m) deg += k;
    if (deg > cutoff) throw Error("FockTensor::unit: degree exceeds the cutoff");
    t.coeffs_(static_cast<Eigen::Index>(t.basis_->rank(m))) = 1.0;
    return t;
}

cplx FockTensor::coeff(std::span<const int> m) const {
    int deg = 0;
    for (int k : m) deg += k;
    if (deg > cutoff()) return {};
    return coeffs_(static_cast<Eigen::Index>(basis_->rank(m)));
}

FockTensor FockTensor::degree_part(int n) const {
    FockTensor t(basis_);
    if (n < 0 || n > cutoff()) return t;
    const auto b = static_cast<Eigen::Index>(basis_->degree_begin(n));
    const auto e = static_cast<Eigen::Index>(basis_->degree_end(n));
    t.coeffs_.segment(b, e - b) = coeffs_.segment(b, e - b);
    return t;
}

FockTensor FockTensor::truncated(int n) const {
    FockTensor t(basis_);
    const auto e = static_cast<Eigen::Index>(basis_->degree_end(std::min(n, cutoff())));
    if (n >= 0) t.coeffs_.head(e) = coeffs_.head(e);
    return t;
}

FockTensor FockTensor::operator+(const FockTensor& o) const {
    require_same_space(*basis_, *o.basis_, "FockTensor +");
    return {basis_, coeffs_ + o.coeffs_};
}

FockTensor FockTensor::operator-(const FockTensor& o) const {
    require_same_space(*basis_, *o.basis_, "FockTensor -");
    return {basis_, coeffs_ - o.coeffs_};
}

FockTensor FockTensor::operator*(cplx s) const { return {basis_, coeffs_ * s}; }

FockTensor symmetric_product(const FockTensor& f, const FockTensor& g, Exec exec) {
    require_same_space(f.basis(), g.basis(), "symmetric_product");
    ComplexVector out(f.coeffs().size());
    if (exec == Exec::serial)
        kernels::product_serial(f.basis(), view(f.coeffs()), view(g.coeffs()), view(out));
    else
        kernels::product_parallel(f.basis(), view(f.coeffs()), view(g.coeffs()), view(out));
    return {f.basis_ptr(), std::move(out)};
}

cplx inner(const FockTensor& f, const FockTensor& g, Exec exec) {
    require_same_space(f.basis(), g.basis(), "inner");
    return exec == Exec::serial ? kernels::inner_serial(f.basis(), view(f.coeffs()), view(g.coeffs()))
                                : kernels::inner_parallel(f.basis(), view(f.coeffs()), view(g.coeffs()));
}

double tensor_norm(const FockTensor& f) { return std::sqrt(std::max(inner(f, f).real(), 0.0)); }

FockTensor exp_vector(const ComplexVector& f, int cutoff) {
    const int d = static_cast<int>(f.size());
    auto basis = FockBasis::shared(d, cutoff);
    ComplexVector c(static_cast<Eigen::Index>(basis->size()));
    c(0) = 1.0;
    // Graded order: m - e_mu precedes m, so one multiplication per entry.
    for (std::size_t i = 1; i < basis->size(); ++i) {
        const auto m = basis->index(i);
        int mu = 0;
        while (m[mu] == 0) ++mu;
        c(static_cast<Eigen::Index>(i)) = c(basis->lower(i, mu)) * f(mu) / double(m[mu]);
    }
    return {std::move(basis), std::move(c)};
}

FockTensor omega_tensor(const ComplexMatrix& a, int cutoff) {
    require_symmetric(a, "omega_tensor");
    const int d = static_cast<int>(a.rows());
    FockTensor t = FockTensor::zero(d, cutoff);
    if (cutoff < 2) return t;
    ComplexVector c = t.coeffs();
    std::vector<int> m(d, 0);
    for (int mu = 0; mu < d; ++mu) {
        for (int nu = mu; nu < d; ++nu) {
            ++m[mu];
            ++m[nu];
            // E_{e_mu + e_nu} = e_mu v e_nu; the pair (mu, nu) and (nu, mu) both contribute.
            c(static_cast<Eigen::Index>(t.basis().rank(m))) = mu == nu ? 0.5 * a(mu, mu) : 0.5 * (a(mu, nu) + a(nu, mu));
            --m[mu];
            --m[nu];
        }
    }
    return {t.basis_ptr(), std::move(c)};
}

FockTensor exp_omega(const ComplexMatrix& a, int cutoff, Exec exec) {
    require_symmetric(a, "exp_omega");
    const double n = operator_norm(a);
    if (!(n < 1.0)) throw NotInDisc("exp_omega: ||A|| = " + std::to_string(n), n);
    const int d = static_cast<int>(a.rows());
    auto basis = FockBasis::shared(d, cutoff);
    const auto terms = quadratic_terms(a);

    ComplexVector sum = ComplexVector::Zero(static_cast<Eigen::Index>(basis->size()));
    ComplexVector term = sum;
    term(0) = 1.0;
    sum(0) = 1.0;
    ComplexVector next(term.size());
    // Omega^{v k} / k! is homogeneous of degree 2k.
    for (int k = 1; 2 * k <= cutoff; ++k) {
        next.setZero();
        sparse_product(exec, *basis, terms, term, 1.0 / k, next, 2 * k, 2 * k);
        term.swap(next);
        sum += term;
    }
    return {std::move(basis), std::move(sum)};
}

FockTensor represent_state(const UltracoherentState& x, int cutoff, Exec exec) {
    const FockTensor e = exp_omega(x.Z(), cutoff, exec);
    const FockBasis& basis = e.basis();
    const auto terms = linear_terms(x.f);

    // exp Omega v exp f = sum_n (exp Omega v f^{v n}) / n!; the n-th summand
    // has no component below degree n.
    ComplexVector sum = e.coeffs();
    ComplexVector term = sum;
    ComplexVector next(term.size());
    if (!terms.empty()) {
        for (int k = 1; k <= cutoff; ++k) {
            next.setZero();
            sparse_product(exec, basis, terms, term, 1.0 / k, next, k, cutoff);
            term.swap(next);
            sum += term;
        }
    }
    return {e.basis_ptr(), sum * x.amplitude()};
}

RealVector degree_norms(const FockTensor& f) {
    const FockBasis& b = f.basis();
    RealVector out = RealVector::Zero(f.cutoff() + 1);
    for (std::size_t i = 0; i < b.size(); ++i)
        out(b.degree(i)) += b.weight(i) * std::norm(f.coeffs()(static_cast<Eigen::Index>(i)));
    return out;
}

double alpha_norm(const FockTensor& f, double alpha) {
    if (!(alpha > 0.0)) throw InvalidAlpha("alpha_norm: alpha must be positive");
    const RealVector dn = degree_norms(f);
    double acc = 0.0;
    for (Eigen::Index n = 0; n < dn.size(); ++n) acc += std::pow(alpha, -2.0 * double(n)) * dn(n);
    return std::sqrt(acc);
}

double tail_bound(const UltracoherentState& x, int cutoff) { return tail_from_profile(tail_profile(x), cutoff); }

int choose_cutoff(const UltracoherentState& x, double mass_tol, int max_cutoff) {
    const TailProfile p = tail_profile(x);
    for (int n = 0; n <= max_cutoff; ++n)
        if (tail_from_profile(p, n) <= mass_tol) return n;
    throw Error("choose_cutoff: no cutoff up to " + std::to_string(max_cutoff) + " meets the tail tolerance");
}

FockOperator::FockOperator(std::shared_ptr<const FockBasis> basis, ComplexMatrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
    const auto n = static_cast<Eigen::Index>(basis_->size());
    if (matrix_.rows() != n || matrix_.cols() != n)
        throw DimensionMismatch("FockOperator: matrix does not match the basis");
}

FockOperator FockOperator::identity(int dim, int cutoff) {
    auto basis = FockBasis::shared(dim, cutoff);
    const auto n = static_cast<Eigen::Index>(basis->size());
    return {std::move(basis), ComplexMatrix::Identity(n, n)};
}

FockTensor FockOperator::apply(const FockTensor& f) const {
    require_same_space(*basis_, f.basis(), "FockOperator::apply");
    return {basis_, matrix_ * f.coeffs()};
}

FockOperator FockOperator::operator*(const FockOperator& o) const {
    require_same_space(*basis_, *o.basis_, "FockOperator *");
    return {basis_, matrix_ * o.matrix_};
}

FockOperator FockOperator::operator+(const FockOperator& o) const {
    require_same_space(*basis_, *o.basis_, "FockOperator +");
    return {basis_, matrix_ + o.matrix_};
}

FockOperator FockOperator::operator-(const FockOperator& o) const {
    require_same_space(*basis_, *o.basis_, "FockOperator -");
    return {basis_, matrix_ - o.matrix_};
}

FockOperator FockOperator::operator*(cplx s) const { return {basis_, matrix_ * s}; }

FockOperator create(const ComplexVector& f, int cutoff) {
    const int d = static_cast<int>(f.size());
    auto basis = FockBasis::shared(d, cutoff);
    const auto n = static_cast<Eigen::Index>(basis->size());
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (std::size_t j = 0; j < basis->size(); ++j)
        for (int mu = 0; mu < d; ++mu)
            if (const auto up = basis->raise(j, mu); up != FockBasis::kNone) m(up, static_cast<Eigen::Index>(j)) += f(mu);
    return {std::move(basis), std::move(m)};
}

FockOperator annihilate(const ComplexVector& f, int cutoff) {
    const int d = static_cast<int>(f.size());
    auto basis = FockBasis::shared(d, cutoff);
    const auto n = static_cast<Eigen::Index>(basis->size());
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const auto occ = basis->index(i);
        for (int mu = 0; mu < d; ++mu)
            if (const auto up = basis->raise(i, mu); up != FockBasis::kNone)
                m(static_cast<Eigen::Index>(i), up) += f(mu) * double(occ[mu] + 1);
    }
    return {std::move(basis), std::move(m)};
}

FockOperator gamma(const ComplexMatrix& b, int cutoff) {
    if (b.rows() != b.cols()) throw DimensionMismatch("gamma: matrix is not square");
    const int d = static_cast<int>(b.rows());
    auto basis = FockBasis::shared(d, cutoff);
    const auto n = static_cast<Eigen::Index>(basis->size());
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    m(0, 0) = 1.0;
    std::vector<std::vector<kernels::SparseTerm>> images(d);
    for (int mu = 0; mu < d; ++mu) images[mu] = linear_terms(b.col(mu));

    // Column of E_m is the column of E_{m - e_mu} times (B e_mu), mu the first occupied mode.
    ComplexVector prev(n), out(n);
    for (std::size_t i = 1; i < basis->size(); ++i) {
        const auto occ = basis->index(i);
        int mu = 0;
        while (occ[mu] == 0) ++mu;
        prev = m.col(basis->lower(i, mu));
        out.setZero();
        const int deg = basis->degree(i);
        kernels::sparse_product_serial(*basis, images[mu], view(prev), 1.0, view(out), deg, deg);
        m.col(static_cast<Eigen::Index>(i)) = out;
    }
    return {std::move(basis), std::move(m)};
}

FockOperator weyl(const ComplexVector& h, int cutoff) {
    const ComplexMatrix gen =
        create(h, cutoff).matrix() - annihilate(ComplexVector(h.conjugate()), cutoff).matrix();
    return {FockBasis::shared(static_cast<int>(h.size()), cutoff), gen.exp()};
}

}  // namespace ucoh

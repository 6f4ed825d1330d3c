// Serial vs OpenMP timings for the truncated-Fock kernels.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include <omp.h>

#include "ucoh/fock.hpp"
#include "ucoh/fock_kernels.hpp"

namespace {

using namespace ucoh;
using Clock = std::chrono::steady_clock;

double best_of(int reps, const std::function<void()>& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        body();
        best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
    }
    return best;
}

std::vector<cplx> random_coeffs(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    std::vector<cplx> v(n);
    for (auto& c : v) c = {nd(rng), nd(rng)};
    return v;
}

void report(const char* name, int dim, int cutoff, std::size_t size, double serial, double parallel) {
    std::printf("%-16s d=%d N=%-3d size=%-8zu serial %9.4f s  parallel %9.4f s  speedup %.2f\n", name, dim, cutoff,
                size, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::mt19937_64 rng(7);

    for (auto [dim, cutoff] : {std::pair{2, 40}, std::pair{3, 20}}) {
        const FockBasis& basis = *FockBasis::shared(dim, cutoff);
        const auto f = random_coeffs(basis.size(), rng);
        const auto g = random_coeffs(basis.size(), rng);
        std::vector<cplx> out(basis.size());
        const double s = best_of(3, [&] { kernels::product_serial(basis, f, g, out); });
        const double p = best_of(3, [&] { kernels::product_parallel(basis, f, g, out); });
        report("product", dim, cutoff, basis.size(), s, p);
    }

    for (auto [dim, cutoff] : {std::pair{2, 150}, std::pair{3, 80}}) {
        const FockBasis& basis = *FockBasis::shared(dim, cutoff);
        const auto g = random_coeffs(basis.size(), rng);
        std::vector<cplx> out(basis.size());
        std::vector<kernels::SparseTerm> terms;
        for (int a = 0; a < dim; ++a)
            for (int b = a; b < dim; ++b) terms.push_back({{a, b}, {0.3, 0.1}});
        const double s = best_of(5, [&] { kernels::sparse_product_serial(basis, terms, g, 1.0, out, 0, cutoff); });
        const double p = best_of(5, [&] { kernels::sparse_product_parallel(basis, terms, g, 1.0, out, 0, cutoff); });
        report("sparse_product", dim, cutoff, basis.size(), s, p);

        const auto h = random_coeffs(basis.size(), rng);
        volatile double sink = 0.0;
        const double si = best_of(5, [&] { sink = sink + std::abs(kernels::inner_serial(basis, g, h)); });
        const double pi = best_of(5, [&] { sink = sink + std::abs(kernels::inner_parallel(basis, g, h)); });
        report("inner", dim, cutoff, basis.size(), si, pi);
    }

    for (auto [dim, cutoff] : {std::pair{2, 120}, std::pair{3, 60}}) {
        ComplexMatrix z = ComplexMatrix::Identity(dim, dim) * 0.3;
        if (dim > 1) z(0, 1) = z(1, 0) = {0.1, 0.2};
        ComplexVector f = ComplexVector::Constant(dim, {0.4, -0.2});
        const auto x = make_state(make_point(z), f);
        const double s = best_of(2, [&] { represent_state(x, cutoff, Exec::serial); });
        const double p = best_of(2, [&] { represent_state(x, cutoff, Exec::parallel); });
        report("represent_state", dim, cutoff, FockBasis::shared(dim, cutoff)->size(), s, p);
    }
}

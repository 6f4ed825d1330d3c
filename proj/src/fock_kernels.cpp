#include "ucoh/fock_kernels.hpp"

#include <algorithm>

#include "ucoh/errors.hpp"

namespace ucoh::kernels {

namespace {

void require_size(const FockBasis& basis, std::size_t n) {
    if (n != basis.size()) throw DimensionMismatch("fock kernel: coefficient array does not match the basis");
}

std::int32_t follow(const FockBasis& basis, std::size_t start, const std::vector<int>& modes, bool up) {
    std::int32_t at = static_cast<std::int32_t>(start);
    for (int mu : modes) {
        at = up ? basis.raise(at, mu) : basis.lower(at, mu);
        if (at == FockBasis::kNone) break;
    }
    return at;
}

int term_degree(std::span<const SparseTerm> terms) {
    int deg = -1;
    for (const auto& t : terms) {
        const int k = static_cast<int>(t.modes.size());
        if (deg >= 0 && k != deg) throw Error("sparse_product: terms must share one degree");
        deg = k;
    }
    return std::max(deg, 0);
}

}  // namespace

void product_serial(const FockBasis& basis, std::span<const cplx> f, std::span<const cplx> g, std::span<cplx> out) {
    require_size(basis, f.size());
    require_size(basis, g.size());
    require_size(basis, out.size());
    std::fill(out.begin(), out.end(), cplx{});
    const int d = basis.dim();
    std::vector<int> sum(d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (f[i] == cplx{}) continue;
        const auto mi = basis.index(i);
        const std::size_t reach = basis.count_up_to(basis.cutoff() - basis.degree(i));
        for (std::size_t j = 0; j < reach; ++j) {
            if (g[j] == cplx{}) continue;
            const auto mj = basis.index(j);
            for (int mu = 0; mu < d; ++mu) sum[mu] = mi[mu] + mj[mu];
            out[basis.rank(sum)] += f[i] * g[j];
        }
    }
}

void product_parallel(const FockBasis& basis, std::span<const cplx> f, std::span<const cplx> g, std::span<cplx> out) {
    require_size(basis, f.size());
    require_size(basis, g.size());
    require_size(basis, out.size());
    const int d = basis.dim();
    const auto n = static_cast<std::ptrdiff_t>(basis.size());

#pragma omp parallel
    {
        std::vector<int> part(d), rest(d);
#pragma omp for schedule(dynamic, 64)
        for (std::ptrdiff_t k = 0; k < n; ++k) {
            const auto mk = basis.index(k);
            std::fill(part.begin(), part.end(), 0);
            cplx acc{};
            // Odometer over all part <= mk componentwise.
            while (true) {
                for (int mu = 0; mu < d; ++mu) rest[mu] = mk[mu] - part[mu];
                acc += f[basis.rank(part)] * g[basis.rank(rest)];
                int mu = 0;
                while (mu < d && part[mu] == mk[mu]) part[mu++] = 0;
                if (mu == d) break;
                ++part[mu];
            }
            out[k] = acc;
        }
    }
}

void sparse_product_serial(const FockBasis& basis, std::span<const SparseTerm> terms, std::span<const cplx> g,
                           cplx scale, std::span<cplx> out, int lo, int hi) {
    require_size(basis, g.size());
    require_size(basis, out.size());
    const int s = term_degree(terms);
    hi = std::min(hi, basis.cutoff());
    if (lo > hi) return;
    const std::size_t begin = basis.degree_begin(std::max(lo - s, 0));
    const std::size_t end = basis.degree_end(hi - s);
    for (std::size_t j = begin; j < end; ++j) {
        if (g[j] == cplx{}) continue;
        for (const auto& t : terms) {
            const std::int32_t target = follow(basis, j, t.modes, true);
            if (target != FockBasis::kNone) out[target] += scale * t.coeff * g[j];
        }
    }
}

void sparse_product_parallel(const FockBasis& basis, std::span<const SparseTerm> terms, std::span<const cplx> g,
                             cplx scale, std::span<cplx> out, int lo, int hi) {
    require_size(basis, g.size());
    require_size(basis, out.size());
    term_degree(terms);
    hi = std::min(hi, basis.cutoff());
    if (lo > hi) return;
    const auto begin = static_cast<std::ptrdiff_t>(basis.degree_begin(std::max(lo, 0)));
    const auto end = static_cast<std::ptrdiff_t>(basis.degree_end(hi));

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = begin; k < end; ++k) {
        cplx acc{};
        for (const auto& t : terms) {
            const std::int32_t src = follow(basis, k, t.modes, false);
            if (src != FockBasis::kNone) acc += t.coeff * g[src];
        }
        out[k] += scale * acc;
    }
}

cplx inner_serial(const FockBasis& basis, std::span<const cplx> f, std::span<const cplx> g) {
    require_size(basis, f.size());
    require_size(basis, g.size());
    cplx acc{};
    for (std::size_t i = 0; i < basis.size(); ++i) acc += basis.weight(i) * std::conj(f[i]) * g[i];
    return acc;
}

cplx inner_parallel(const FockBasis& basis, std::span<const cplx> f, std::span<const cplx> g) {
    require_size(basis, f.size());
    require_size(basis, g.size());
    const auto n = static_cast<std::ptrdiff_t>(basis.size());
    // Fixed blocks summed in order, so the result does not depend on the thread count.
    constexpr std::ptrdiff_t kBlock = 4096;
    const std::ptrdiff_t blocks = (n + kBlock - 1) / kBlock;
    std::vector<double> re(static_cast<std::size_t>(blocks)), im(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < blocks; ++b) {
        double sr = 0.0, si = 0.0;
        const std::ptrdiff_t end = std::min(n, (b + 1) * kBlock);
        for (std::ptrdiff_t i = b * kBlock; i < end; ++i) {
            const cplx t = basis.weight(i) * std::conj(f[i]) * g[i];
            sr += t.real();
            si += t.imag();
        }
        re[b] = sr;
        im[b] = si;
    }
    double sr = 0.0, si = 0.0;
    for (std::ptrdiff_t b = 0; b < blocks; ++b) {
        sr += re[b];
        si += im[b];
    }
    return {sr, si};
}

}  // namespace ucoh::kernels

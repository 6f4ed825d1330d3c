#pragma once

// Coefficient-level kernels on the truncated occupation basis. Each kernel has
// a serial form and an OpenMP form; the serial one scatters, the parallel one
// gathers per output slot so that threads never write to the same entry.

#include <complex>
#include <span>
#include <vector>

#include "ucoh/fock_basis.hpp"

namespace ucoh::kernels {

using cplx = std::complex<double>;

/// A monomial coeff * e_{modes[0]} v ... v e_{modes[k-1]} of low degree.
struct SparseTerm {
    std::vector<int> modes;
    cplx coeff;
};

/// out = f v g, overwriting out; degrees above the cutoff are dropped.
void product_serial(const FockBasis& basis, std::span<const cplx> f, std::span<const cplx> g, std::span<cplx> out);
void product_parallel(const FockBasis& basis, std::span<const cplx> f, std::span<const cplx> g, std::span<cplx> out);

/// out += scale * (sum_s term_s) v g, restricted to output degrees in [lo, hi].
void sparse_product_serial(const FockBasis& basis, std::span<const SparseTerm> terms, std::span<const cplx> g,
                           cplx scale, std::span<cplx> out, int lo, int hi);
void sparse_product_parallel(const FockBasis& basis, std::span<const SparseTerm> terms, std::span<const cplx> g,
                             cplx scale, std::span<cplx> out, int lo, int hi);

/// sum_m m! conj(f_m) g_m.
cplx inner_serial(const FockBasis& basis, std::span<const cplx> f, std::span<const cplx> g);
cplx inner_parallel(const FockBasis& basis, std::span<const cplx> f, std::span<const cplx> g);

}  // namespace ucoh::kernels

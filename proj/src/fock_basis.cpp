#include "ucoh/fock_basis.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "ucoh/errors.hpp"

namespace ucoh {

FockBasis::FockBasis(int dim, int cutoff) : dim_(dim), cutoff_(cutoff) {
    if (dim < 1) throw DimensionMismatch("FockBasis: dimension must be positive");
    if (cutoff < 0 || cutoff > 170) throw Error("FockBasis: cutoff must lie in [0, 170]");

    const int rows = cutoff + dim + 1;
    binom_.assign(static_cast<std::size_t>(rows) * (dim + 1), 0.0);
    for (int n = 0; n < rows; ++n) {
        for (int k = 0; k <= std::min(n, dim); ++k) {
            binom_[n * (dim + 1) + k] = (k == 0 || k == n) ? 1.0
                                                           : binom_[(n - 1) * (dim + 1) + k - 1] +
                                                                 (k <= n - 1 ? binom_[(n - 1) * (dim + 1) + k] : 0.0);
        }
    }
    const double total = binom(cutoff + dim, dim);
    if (total > 5e7) throw Error("FockBasis: basis of " + std::to_string(total) + " entries is too large");
    size_ = static_cast<std::size_t>(total);

    occ_.assign(size_ * dim_, 0);
    degree_.assign(size_, 0);
    weight_.assign(size_, 1.0);
    std::vector<bool> seen(size_, false);

    // Odometer over all m with |m| <= cutoff.
    std::vector<int> m(dim_, 0);
    int deg = 0;
    while (true) {
        const std::size_t r = rank(m);
        if (r >= size_ || seen[r]) throw InternalInconsistency("FockBasis: ranking is not a bijection");
        seen[r] = true;
        double w = 1.0;
        for (int mu = 0; mu < dim_; ++mu) {
            occ_[r * dim_ + mu] = m[mu];
            w *= std::tgamma(m[mu] + 1.0);
        }
        degree_[r] = deg;
        weight_[r] = w;

        int mu = 0;
        while (mu < dim_) {
            if (deg < cutoff_) {
                ++m[mu];
                ++deg;
                break;
            }
            deg -= m[mu];
            m[mu] = 0;
            ++mu;
        }
        if (mu == dim_) break;
    }

    up_.assign(size_ * dim_, kNone);
    down_.assign(size_ * dim_, kNone);
    std::vector<int> probe(dim_);
    for (std::size_t i = 0; i < size_; ++i) {
        for (int mu = 0; mu < dim_; ++mu) probe[mu] = occ_[i * dim_ + mu];
        for (int mu = 0; mu < dim_; ++mu) {
            if (degree_[i] < cutoff_) {
                ++probe[mu];
                up_[i * dim_ + mu] = static_cast<std::int32_t>(rank(probe));
                --probe[mu];
            }
            if (probe[mu] > 0) {
                --probe[mu];
                down_[i * dim_ + mu] = static_cast<std::int32_t>(rank(probe));
                ++probe[mu];
            }
        }
    }
}

std::shared_ptr<const FockBasis> FockBasis::shared(int dim, int cutoff) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const FockBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{dim, cutoff}];
    if (!slot) slot = std::make_shared<const FockBasis>(dim, cutoff);
    return slot;
}

double FockBasis::binom(int n, int k) const {
    if (k < 0 || n < 0 || k > n) return 0.0;
    return binom_[n * (dim_ + 1) + k];
}

std::size_t FockBasis::count_up_to(int n) const {
    if (n < 0) return 0;
    if (n <= cutoff_) return static_cast<std::size_t>(binom(n + dim_, dim_));
    return size_;
}

std::size_t FockBasis::rank(std::span<const int> m) const {
    // Tail sums t_k = m_k + ... + m_{d-1}; rank = sum_k C(t_k - 1 + d - k, d - k).
    double r = 0.0;
    int tail = 0;
    for (int k = dim_ - 1; k >= 0; --k) {
        tail += m[k];
        r += binom(tail - 1 + dim_ - k, dim_ - k);
    }
    return static_cast<std::size_t>(r);
}

}  // namespace ucoh

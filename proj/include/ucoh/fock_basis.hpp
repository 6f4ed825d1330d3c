#pragma once

// Occupation-number basis of the truncated symmetric Fock space.
// Multi-indices m with |m| <= N are ranked degree by degree (graded order),
// so all entries of degree <= n occupy the first count_up_to(n) slots.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace ucoh {

class FockBasis {
public:
    static constexpr std::int32_t kNone = -1;

    FockBasis(int dim, int cutoff);

    /// Shared read-only basis per (dim, cutoff); built once.
    static std::shared_ptr<const FockBasis> shared(int dim, int cutoff);

    int dim() const { return dim_; }
    int cutoff() const { return cutoff_; }
    std::size_t size() const { return size_; }

    std::span<const int> index(std::size_t i) const { return {occ_.data() + i * dim_, static_cast<std::size_t>(dim_)}; }
    int degree(std::size_t i) const { return degree_[i]; }

    /// Number of multi-indices with |m| <= n (n may exceed the cutoff).
    std::size_t count_up_to(int n) const;
    /// First slot of degree n and one past its last slot.
    std::size_t degree_begin(int n) const { return n <= 0 ? 0 : count_up_to(n - 1); }
    std::size_t degree_end(int n) const { return count_up_to(n); }

    /// Rank of m; m must have |m| <= cutoff.
    std::size_t rank(std::span<const int> m) const;

    /// Slot of m + e_mu, or kNone when that exceeds the cutoff.
    std::int32_t raise(std::size_t i, int mu) const { return up_[i * dim_ + mu]; }
    /// Slot of m - e_mu, or kNone when m_mu = 0.
    std::int32_t lower(std::size_t i, int mu) const { return down_[i * dim_ + mu]; }

    /// m! = prod_mu m_mu!, the squared norm of the basis tensor.
    double weight(std::size_t i) const { return weight_[i]; }

private:
    double binom(int n, int k) const;

    int dim_;
    int cutoff_;
    std::size_t size_;
    std::vector<double> binom_;   // (cutoff + dim + 1) x (dim + 1)
    std::vector<int> occ_;
    std::vector<int> degree_;
    std::vector<std::int32_t> up_;
    std::vector<std::int32_t> down_;
    std::vector<double> weight_;
};

}  // namespace ucoh

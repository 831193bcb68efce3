#pragma once

#include "monores/index_set.hpp"
#include "monores/monomial_ideal.hpp"

#include <cstddef>
#include <vector>

namespace monores {

/// Permutation π of [q] moving S to [l] (order-preserving), the smallest
/// gap h of S to l+1 and the remaining indices after it in increasing order.
///
/// Basis elements are transported as exterior monomials: ε_τ corresponds to
/// eta(τ) ε′_{π(τ)}, where eta(τ) is the sign of the permutation sorting the
/// sequence π(t_1), ..., π(t_k) for t_1 < ... < t_k in τ.
class PivotRelabeling {
public:
    PivotRelabeling(std::vector<std::size_t> forward, std::size_t l, std::size_t gap);

    std::size_t num_generators() const noexcept { return forward_.size() - 1; }
    std::size_t l() const noexcept { return l_; }
    /// The original index h sent to l+1.
    std::size_t gap() const noexcept { return gap_; }
    std::size_t operator()(std::size_t i) const { return forward_.at(i); }
    std::size_t inverse(std::size_t i) const { return backward_.at(i); }
    bool is_identity() const noexcept;

    IndexSet apply(IndexSet original) const;
    IndexSet revert(IndexSet relabeled) const;
    int eta(IndexSet original) const;

    /// Ideal with generator π(j) equal to m_j.
    MonomialIdeal relabel(const MonomialIdeal& ideal) const;

private:
    std::vector<std::size_t> forward_;   // forward_[i] = π(i), entry 0 unused
    std::vector<std::size_t> backward_;  // backward_[π(i)] = i
    std::size_t l_;
    std::size_t gap_;
};

/// Throws std::invalid_argument when S has no gap or |S| < 2.
PivotRelabeling relabel_for_pivot(const MonomialIdeal& ideal, IndexSet s);

} // namespace monores

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monores {

/// Subset of [q] = {1, ..., q}, q <= 64, stored as a bit mask (bit i-1 for i).
///
/// Ordering is graded lexicographic: first by cardinality, then by the
/// increasing member sequences. Bases of every complex follow this order.
class IndexSet {
public:
    static constexpr std::size_t max_index = 64;

    IndexSet() = default;
    IndexSet(std::initializer_list<std::size_t> members);
    explicit IndexSet(std::span<const std::size_t> members);

    static IndexSet from_mask(std::uint64_t mask) noexcept { return IndexSet(mask, 0); }
    /// [l] = {1, ..., l}.
    static IndexSet range(std::size_t l);

    std::uint64_t mask() const noexcept { return mask_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }
    bool contains(std::size_t i) const noexcept;

    IndexSet with(std::size_t i) const;
    IndexSet without(std::size_t i) const;

    bool is_subset_of(IndexSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    bool is_superset_of(IndexSet other) const noexcept { return other.is_subset_of(*this); }
    bool intersects(IndexSet other) const noexcept { return (mask_ & other.mask_) != 0; }

    friend IndexSet operator|(IndexSet a, IndexSet b) noexcept { return from_mask(a.mask_ | b.mask_); }
    friend IndexSet operator&(IndexSet a, IndexSet b) noexcept { return from_mask(a.mask_ & b.mask_); }
    /// Set difference.
    friend IndexSet operator-(IndexSet a, IndexSet b) noexcept { return from_mask(a.mask_ & ~b.mask_); }

    /// Members in increasing order.
    std::vector<std::size_t> members() const;

    /// "{1,3}"; the empty set renders as "{}".
    std::string to_string() const;

    friend bool operator==(IndexSet a, IndexSet b) noexcept { return a.mask_ == b.mask_; }
    friend std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept;

private:
    IndexSet(std::uint64_t mask, int) noexcept : mask_(mask) {}

    std::uint64_t mask_ = 0;
};

/// (-1)^p(A,B) where p counts adjacent transpositions sorting the sequence
/// A,B; 0 when A and B intersect.
int sign_pair(IndexSet a, IndexSet b) noexcept;

/// sign_pair({i}, A): (-1)^{|{a in A : a < i}|}, or 0 when i is in A.
int sign_elem(std::size_t i, IndexSet a) noexcept;

/// Binomial coefficient; 0 whenever n < 0, k < 0 or k > n.
std::uint64_t binom(std::int64_t n, std::int64_t k) noexcept;

/// Every subset of [q] in graded lexicographic order.
std::vector<IndexSet> all_subsets(std::size_t q);

/// The k-subsets of [q] in lexicographic order.
std::vector<IndexSet> subsets_of_size(std::size_t q, std::size_t k);

} // namespace monores

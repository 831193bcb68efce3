#pragma once

#include "monores/chain_complex.hpp"
#include "monores/index_set.hpp"
#include "monores/limits.hpp"
#include "monores/monomial_ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monores {

/// Directed Taylor edge ε_upper -> ε_lower that a matching reverses.
struct MorseEdge {
    IndexSet upper;
    IndexSet lower;

    friend bool operator==(const MorseEdge&, const MorseEdge&) = default;
    friend auto operator<=>(const MorseEdge&, const MorseEdge&) = default;
};

/// Edge set kept sorted and free of duplicates.
class MorseMatching {
public:
    MorseMatching() = default;
    explicit MorseMatching(std::vector<MorseEdge> edges);

    const std::vector<MorseEdge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    friend bool operator==(const MorseMatching&, const MorseMatching&) = default;

private:
    std::vector<MorseEdge> edges_;
};

struct MatchingReport {
    bool valid = true;
    /// 0: malformed edge, 1: shared vertex, 2: lcm changes, 3: directed cycle.
    int failed_condition = 0;
    std::string message;
};

MatchingReport validate_matching(const MonomialIdeal& ideal, const MorseMatching& matching,
                                 const Limits& limits = {});

/// order[k] is the generator ranked k+1 (m_{order[0]} ≻ m_{order[1]} ≻ ...).
/// L(τ) is the largest position j whose generator divides the lcm of the
/// generators of τ among the first j-1 positions; an empty set never divides.
MorseMatching lyubeznik_matching(const MonomialIdeal& ideal, const std::vector<std::size_t>& order,
                                 const Limits& limits = {});

/// Position of the matched index for τ under the Lyubeznik rule, 1-based
/// generator index, or nullopt when τ is unmatched.
std::optional<std::size_t> lyubeznik_index(const MonomialIdeal& ideal, const std::vector<std::size_t>& order,
                                           IndexSet tau);

/// Every index except h in increasing order, then h.
std::vector<std::size_t> order_with_last(std::size_t q, std::size_t h);

/// {τ∪h -> τ∖h : τ ⊇ S} for the smallest gap h of S. Throws
/// std::invalid_argument when S has no gap.
MorseMatching pivot_matching(const MonomialIdeal& ideal, IndexSet s, const Limits& limits = {});

/// Cells of P([q]) not touched by the matching, graded lex.
std::vector<IndexSet> critical_cells(std::size_t q, const MorseMatching& matching);

/// Morse resolution on the critical cells. Entry (τ′, τ) is the signed
/// count of gradient paths from τ to τ′ times m_τ/m_τ′. Throws
/// contract_error for an invalid matching and resource_error when the path
/// count exceeds limits.max_gradient_paths.
BasedComplex morse_resolution(const MonomialIdeal& ideal, const MorseMatching& matching,
                              const Limits& limits = {});

} // namespace monores

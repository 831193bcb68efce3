#pragma once

#include "monores/chain_complex.hpp"
#include "monores/index_set.hpp"
#include "monores/limits.hpp"
#include "monores/monomial_ideal.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace monores {

/// Taylor resolution: basis P([q]) in graded lex order, ∂ε_τ = Σ_{j∈τ}
/// sign(j, τ∖j) (m_τ/m_{τ∖j}) ε_{τ∖j}. d² = 0 is checked before returning.
BasedComplex taylor_resolution(const MonomialIdeal& ideal, const Limits& limits = {});

/// Restriction of the Taylor differential to the cells accepted by `keep`.
/// The accepted family must be closed under taking subsets.
BasedComplex taylor_subcomplex(const MonomialIdeal& ideal, const std::function<bool(IndexSet)>& keep,
                               const Limits& limits = {});

/// All h ∉ τ with m_h | m_τ, increasing.
std::vector<std::size_t> find_gaps(const MonomialIdeal& ideal, IndexSet tau);

/// T_S: cells τ with S ⊄ τ. Throws std::invalid_argument when |S| < 2 or S ⊄ [q].
BasedComplex pivot_complex(const MonomialIdeal& ideal, IndexSet s, const Limits& limits = {});

/// Gap criterion: T_S is a resolution iff S has a gap.
bool is_pivot_resolution(const MonomialIdeal& ideal, IndexSet s);

/// Least |τ| such that m_τ = m_τ′ for some τ′ ≠ τ; nullopt encodes ∞.
std::optional<std::size_t> scarf_number(const MonomialIdeal& ideal, const Limits& limits = {});

/// Cells whose lcm is shared with no other cell.
std::vector<IndexSet> scarf_sets(const MonomialIdeal& ideal, const Limits& limits = {});

/// Lexicographically least S of size scarf_number(I) having a gap.
std::optional<IndexSet> smallest_pivot_indices(const MonomialIdeal& ideal, const Limits& limits = {});

/// binom(q, i) - binom(q - l, i - l).
std::uint64_t pivot_rank_formula(std::int64_t q, std::int64_t l, std::int64_t i);

/// Betti numbers of Q/I via minimalization of the Taylor resolution.
std::vector<std::size_t> betti_numbers(const MonomialIdeal& ideal, const Limits& limits = {});

/// True iff some pivot resolution is minimal: Taylor is minimal, or the
/// Betti numbers equal the pivot rank formula at the Scarf number.
bool has_minimal_pivot(const MonomialIdeal& ideal, const Limits& limits = {});

} // namespace monores

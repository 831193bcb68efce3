#pragma once

#include "monores/chain_complex.hpp"
#include "monores/homotopy.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace monores {

/// Basis element y^(u) ⊗ ε of the Eisenbud–Shamash complex.
struct ShamashLabel {
    std::vector<unsigned> u;
    std::size_t k = 0;      // homological degree of ε in F
    std::size_t index = 0;  // position of ε in the basis of F_k
    IndexSet cell;
    Multidegree degree;     // degree of ε alone

    friend bool operator==(const ShamashLabel&, const ShamashLabel&) = default;
};

/// D ⊗ F truncated at homological degree N with δ = ∂ + Σ_s t_s ⊗ σ_s.
/// Entries are polynomials over Q; they are meaningful modulo (a_1..a_r).
struct ShamashComplex {
    std::size_t truncation = 0;
    std::size_t r = 0;
    std::vector<std::vector<ShamashLabel>> bases;
    /// differentials[i-1] maps degree i to degree i-1.
    std::vector<PolyMatrix> differentials;
    /// contractions[s-1][i-2] maps degree i to degree i-2 by y^(u) ⊗ ε ↦ y^(u-e_s) ⊗ ε.
    std::vector<std::vector<PolyMatrix>> contractions;

    std::vector<std::size_t> ranks() const;
};

/// Throws contract_error when verify_homotopy(h, ci) fails.
ShamashComplex shamash_complex(const HomotopySystem& h, const CIData& ci, std::size_t truncation);

struct ShamashSquareReport {
    bool pass = true;
    std::optional<EntryLocation> first_failure;
};

/// δ_{i-1} δ_i = Σ_s a_s · contraction_s over Q, entrywise, for 2 <= i <= N.
ShamashSquareReport check_shamash_square(const ShamashComplex& c, const CIData& ci);

struct RExactnessReport {
    bool applicable = true;  // false unless every a_s is c·x^b with pairwise coprime b
    bool pass = true;
    std::size_t strands_checked = 0;
    std::optional<Multidegree> failing_degree;
    std::size_t failing_homological_degree = 0;
};

/// Strand homology over R = Q/(a) in degrees 1..N-1 for every multidegree
/// componentwise at most `bound`, valid when each a_s is a scalar times a
/// monomial and the monomials are pairwise coprime.
RExactnessReport check_exactness_over_monomial_ci(const ShamashComplex& c, const CIData& ci,
                                                  const Multidegree& bound);

/// Σ_{2d+k=i} binom(r+d-1, r-1) F_k; with r = 0 this is F_i.
std::uint64_t shamash_rank(const std::vector<std::size_t>& f_ranks, std::size_t r, std::size_t i);

enum class BoundMode {
    /// Σ_{j=0}^{i} P(n)·binom(r+i-j-1, r-1) for n = 2i or 2i+1, with the
    /// pivot rank factor independent of j.
    paper_literal,
    /// shamash_rank of the pivot ranks P(k) = binom(q,k) - binom(q-l,k-l).
    structural,
};

std::uint64_t betti_bound(std::size_t q, std::size_t scarf, std::size_t r, std::size_t degree, BoundMode mode);

} // namespace monores

#pragma once

#include "monores/chain_complex.hpp"
#include "monores/index_set.hpp"
#include "monores/limits.hpp"
#include "monores/monomial_ideal.hpp"
#include "monores/pivot_relabeling.hpp"
#include "monores/poly_matrix.hpp"
#include "monores/polynomial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace monores {

enum class DivisorStrategy {
    /// Each term goes to the lowest-index generator dividing it.
    first,
    /// Each term goes to the highest-index generator dividing it.
    last,
};

/// (a_1, ..., a_q) with Σ_j a_j m_j = a. Throws membership_error naming the
/// first term that no generator divides.
std::vector<Polynomial> express_in_generators(const Polynomial& a, const MonomialIdeal& ideal,
                                              DivisorStrategy strategy = DivisorStrategy::first);

/// Elements a_1..a_r of a (presumed) complete intersection inside I with
/// coefficients a_s = Σ_j a_{sj} m_j. Regularity is never checked.
class CIData {
public:
    /// Derives the coefficients by express_in_generators.
    CIData(const MonomialIdeal& ideal, std::vector<Polynomial> elements,
           DivisorStrategy strategy = DivisorStrategy::first);
    /// Uses the given coefficients; throws membership_error when some
    /// a_s ≠ Σ_j a_{sj} m_j and dimension_error on a shape mismatch.
    CIData(const MonomialIdeal& ideal, std::vector<Polynomial> elements,
           std::vector<std::vector<Polynomial>> coefficients);

    std::size_t r() const noexcept { return elements_.size(); }
    std::size_t num_generators() const noexcept { return q_; }
    const std::vector<Polynomial>& elements() const noexcept { return elements_; }
    const Polynomial& element(std::size_t s) const { return elements_.at(s - 1); }
    /// a_{sj}, both indices 1-based.
    const Polynomial& coefficient(std::size_t s, std::size_t j) const { return coefficients_.at(s - 1).at(j - 1); }
    const std::vector<std::vector<Polynomial>>& coefficients() const noexcept { return coefficients_; }

    /// Coefficients permuted along with the generators: a′_{s,π(j)} = a_{sj}.
    CIData relabeled(const MonomialIdeal& relabeled_ideal, const PivotRelabeling& pi) const;

private:
    std::size_t q_ = 0;
    std::vector<Polynomial> elements_;
    std::vector<std::vector<Polynomial>> coefficients_;
};

/// σ_0 = ∂ of `complex` and σ_{e_s} for s = 1..r; σ_u = 0 for |u| >= 2.
struct HomotopySystem {
    BasedComplex complex;
    /// sigma[s-1][k] maps F_k to F_{k+1} (rows: basis of F_{k+1}).
    std::vector<std::vector<PolyMatrix>> sigma;

    std::size_t r() const noexcept { return sigma.size(); }
    const PolyMatrix& map(std::size_t s, std::size_t k) const { return sigma.at(s - 1).at(k); }
};

/// σ_{e_s}(ε_A) = Σ_{j∉A} sign(j,A) a_{sj} (m_j m_A / m_{A∪j}) ε_{A∪j}.
HomotopySystem taylor_homotopy(const MonomialIdeal& ideal, const CIData& ci, const Limits& limits = {});

/// Homotopies on T_{1..l} of an ideal whose index l+1 is a gap of [l],
/// following the three cases determined by |A ∩ [l]| and whether l+1 ∈ A.
HomotopySystem pivot_homotopy_normal_form(const MonomialIdeal& ideal, std::size_t l, const CIData& ci,
                                          const Limits& limits = {});

/// Pivot homotopies on T_S in the original labels, computed in normal form
/// and transported back through relabel_for_pivot.
HomotopySystem pivot_homotopy(const MonomialIdeal& ideal, IndexSet s, const CIData& ci,
                              const Limits& limits = {});

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::optional<EntryLocation> first_failure;
};

struct HomotopyReport {
    bool pass = true;
    std::vector<IdentityCheck> checks;
};

/// σ_0² = 0; ∂σ_s + σ_s∂ = a_s·id; σ_s² = 0; σ_sσ_t + σ_tσ_s = 0 for s < t.
HomotopyReport verify_homotopy(const HomotopySystem& h, const CIData& ci);

/// ∂_{k+1} σ_s + σ_s ∂_k on F_k (k = 0 has no second term).
PolyMatrix homotopy_commutator(const HomotopySystem& h, std::size_t s, std::size_t k);

/// σ_s σ_t + σ_t σ_s on F_k, mapping to F_{k+2}.
PolyMatrix homotopy_anticommutator(const HomotopySystem& h, std::size_t s, std::size_t t, std::size_t k);

struct CellClassCheck {
    std::size_t cells_tested = 0;
    bool pass = true;
    std::optional<IndexSet> first_failure;
};

/// Evaluates (∂σ_s + σ_s∂)(ε_A) = a_s ε_A on the cells A accepted by `in_class`.
CellClassCheck check_commutator_on_cells(const HomotopySystem& h, const CIData& ci, std::size_t s,
                                         const std::function<bool(IndexSet)>& in_class);

/// Evaluates (σ_sσ_t + σ_tσ_s)(ε_A) = 0 on the cells accepted by `in_class`.
CellClassCheck check_anticommutator_on_cells(const HomotopySystem& h, std::size_t s, std::size_t t,
                                             const std::function<bool(IndexSet)>& in_class);

} // namespace monores

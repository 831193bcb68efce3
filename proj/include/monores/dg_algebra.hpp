#pragma once

#include "monores/chain_complex.hpp"
#include "monores/index_set.hpp"
#include "monores/limits.hpp"
#include "monores/monomial_ideal.hpp"
#include "monores/pivot_relabeling.hpp"
#include "monores/polynomial.hpp"

#include <map>
#include <string>

namespace monores {

/// Formal sum Σ f_τ ε_τ. No zero coefficient is stored.
class ChainElement {
public:
    using TermMap = std::map<IndexSet, Polynomial>;

    ChainElement() = default;
    static ChainElement basis(IndexSet cell, std::size_t nvars);
    static ChainElement term(IndexSet cell, Polynomial coefficient);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Polynomial coefficient(IndexSet cell) const;
    void add(IndexSet cell, const Polynomial& coefficient);

    ChainElement& operator+=(const ChainElement& o);
    ChainElement& operator-=(const ChainElement& o);
    ChainElement& operator*=(const Polynomial& f);
    friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }
    friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }
    friend ChainElement operator*(const Polynomial& f, ChainElement a) { return a *= f; }
    friend ChainElement operator-(ChainElement a);

    friend bool operator==(const ChainElement&, const ChainElement&) = default;

    std::string to_string(const std::vector<std::string>& variables) const;

private:
    TermMap terms_;
};

/// Column k of ∂_i of a complex as a chain element.
ChainElement apply_differential(const BasedComplex& c, const ChainElement& x);

/// Gemeda's product on the Taylor resolution:
/// ε_A ⋆ ε_B = sign(A,B) (m_A m_B / m_{A∪B}) ε_{A∪B}, zero when A ∩ B ≠ ∅.
class TaylorAlgebra {
public:
    explicit TaylorAlgebra(const MonomialIdeal& ideal, const Limits& limits = {});

    const MonomialIdeal& ideal() const noexcept { return ideal_; }
    const BasedComplex& complex() const noexcept { return complex_; }
    bool contains(IndexSet cell) const noexcept;
    ChainElement unit() const;

    ChainElement basis_product(IndexSet a, IndexSet b) const;
    /// Throws std::invalid_argument when an operand has a cell outside P([q]).
    ChainElement product(const ChainElement& x, const ChainElement& y) const;
    ChainElement differential(const ChainElement& x) const;

private:
    MonomialIdeal ideal_;
    LcmTable lcm_;
    BasedComplex complex_;
};

enum class PivotProductSign {
    /// Third case carries (-1)^{l+1}; this is the DG structure inherited
    /// from the Taylor quotient.
    corrected,
    /// Third case exactly as usually printed, without (-1)^{l+1}.
    as_printed,
};

/// Pivot resolution T_{1..l} of an ideal whose index l+1 is a gap of [l].
/// Cells are the subsets of [q] not containing [l].
class PivotNormalForm {
public:
    /// Throws std::invalid_argument unless 2 <= l < q and l+1 is a gap of [l].
    PivotNormalForm(const MonomialIdeal& ideal, std::size_t l,
                    PivotProductSign sign = PivotProductSign::corrected, const Limits& limits = {});

    const MonomialIdeal& ideal() const noexcept { return ideal_; }
    std::size_t l() const noexcept { return l_; }
    std::size_t pivot() const noexcept { return l_ + 1; }
    const BasedComplex& complex() const noexcept { return complex_; }
    bool contains(IndexSet cell) const noexcept;
    ChainElement unit() const;

    ChainElement basis_product(IndexSet a, IndexSet b) const;
    ChainElement product(const ChainElement& x, const ChainElement& y) const;
    ChainElement differential(const ChainElement& x) const;

    /// Image of a Taylor element in T / (ε_τ, ∂ε_τ : τ ⊇ [l+1]).
    ChainElement project(const ChainElement& taylor_element) const;

private:
    MonomialIdeal ideal_;
    std::size_t l_;
    PivotProductSign sign_;
    LcmTable lcm_;
    BasedComplex complex_;
};

/// The pivot resolution T_S in the original labels, with the product and
/// projection transported through relabel_for_pivot.
class PivotAlgebra {
public:
    PivotAlgebra(const MonomialIdeal& ideal, IndexSet s, PivotProductSign sign = PivotProductSign::corrected,
                 const Limits& limits = {});

    const MonomialIdeal& ideal() const noexcept { return ideal_; }
    IndexSet pivot_set() const noexcept { return s_; }
    const PivotRelabeling& relabeling() const noexcept { return relabeling_; }
    const PivotNormalForm& normal_form() const noexcept { return normal_; }
    const BasedComplex& complex() const noexcept { return complex_; }
    bool contains(IndexSet cell) const noexcept { return !cell.is_superset_of(s_) && cell.is_subset_of(all_); }
    ChainElement unit() const;

    ChainElement product(const ChainElement& x, const ChainElement& y) const;
    ChainElement differential(const ChainElement& x) const;
    ChainElement project(const ChainElement& taylor_element) const;

    /// Transport between original and normal-form labels.
    ChainElement to_normal_form(const ChainElement& x) const;
    ChainElement from_normal_form(const ChainElement& x) const;

private:
    MonomialIdeal ideal_;
    IndexSet s_;
    IndexSet all_;
    PivotRelabeling relabeling_;
    PivotNormalForm normal_;
    BasedComplex complex_;
};

} // namespace monores

namespace monores {

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    /// Basis cells of the first failing case.
    std::vector<IndexSet> witness;
};

struct DGReport {
    bool pass = true;
    std::vector<AxiomCheck> checks;
};

/// Unit, graded commutativity (including x⋆x = 0 in odd degree),
/// associativity and the Leibniz rule on all basis pairs and triples.
DGReport verify_dg_axioms(const TaylorAlgebra& algebra);

/// The axioms above plus π(x)⋆π(y) = π(x⋆y) on all Taylor basis pairs and
/// π vanishing on ε_τ, ∂ε_τ and their products for τ ⊇ S ∪ {h}.
DGReport verify_dg_axioms(const PivotAlgebra& algebra);

} // namespace monores

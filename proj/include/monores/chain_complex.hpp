#pragma once

#include "monores/index_set.hpp"
#include "monores/limits.hpp"
#include "monores/monomial_ideal.hpp"
#include "monores/multidegree.hpp"
#include "monores/poly_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace monores {

/// Basis element ε_τ of a multigraded free module together with its degree.
struct BasisLabel {
    IndexSet cell;
    Multidegree degree;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Finite complex of free multigraded modules C_0 <- C_1 <- ... <- C_top with
/// labeled bases. differential(i) maps C_i to C_{i-1}; its columns are
/// indexed by the basis of C_i and its rows by the basis of C_{i-1}.
/// Trailing zero modules are dropped at construction.
class BasedComplex {
public:
    BasedComplex() = default;
    /// Throws structural_error when a matrix shape disagrees with the bases
    /// or a label has the wrong number of variables.
    BasedComplex(std::size_t nvars, std::vector<std::vector<BasisLabel>> bases,
                 std::vector<PolyMatrix> differentials);

    std::size_t nvars() const noexcept { return nvars_; }
    /// Number of stored homological degrees (top degree + 1).
    std::size_t length() const noexcept { return bases_.size(); }
    const std::vector<BasisLabel>& basis(std::size_t i) const;
    std::size_t rank(std::size_t i) const noexcept { return i < bases_.size() ? bases_[i].size() : 0; }
    std::vector<std::size_t> ranks() const;
    /// ∂_i for 1 <= i < length(); a 0 x 0 matrix outside that range.
    const PolyMatrix& differential(std::size_t i) const;
    std::optional<std::size_t> index_of(std::size_t i, IndexSet cell) const;

    friend bool operator==(const BasedComplex&, const BasedComplex&) = default;

private:
    std::size_t nvars_ = 0;
    std::vector<std::vector<BasisLabel>> bases_;
    std::vector<PolyMatrix> differentials_;
};

struct EntryLocation {
    std::size_t degree = 0;  // homological degree of the offending map's source
    std::size_t row = 0;
    std::size_t col = 0;
};

struct D2Report {
    bool pass = true;
    std::optional<EntryLocation> first_failure;
    Polynomial value;  // the nonzero entry of ∂_{i-1}∂_i
};

D2Report check_d_squared(const BasedComplex& c);

/// Every nonzero term of entry (ρ, κ) must satisfy term degree + ρ.degree =
/// κ.degree. Returns a description of the first violation.
std::optional<std::string> check_multigraded(const BasedComplex& c);

/// {m_A : A ⊆ [q], A nonempty}, deduplicated and sorted.
std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal, const Limits& limits = {});

struct StrandComplex {
    Multidegree degree;
    /// Surviving basis indices of the parent complex, per homological degree.
    std::vector<std::vector<std::size_t>> kept;
    /// differentials[i-1] is the strand of ∂_i.
    std::vector<RationalMatrix> differentials;

    std::vector<std::size_t> ranks() const;
};

StrandComplex strand(const BasedComplex& c, const Multidegree& a);

/// dim H_i for every stored degree. Throws contract_error if d² ≠ 0.
std::vector<std::size_t> homology_dims(const StrandComplex& s);

/// A cycle in degree i that is not a boundary, or nullopt when H_i = 0.
std::optional<std::vector<Rational>> homology_witness(const StrandComplex& s, std::size_t i);

struct ExactnessFailure {
    Multidegree degree;
    std::size_t homological_degree = 0;
    std::size_t dimension = 0;
    /// Witness cycle in the parent basis of C_i: coefficient times x^(a - deg).
    std::vector<std::pair<std::size_t, Polynomial>> witness;
};

struct ResolutionCertificate {
    bool is_resolution = true;
    bool d_squared_zero = true;
    std::size_t strands_checked = 0;
    std::vector<ExactnessFailure> failures;
};

/// Checks H_i = 0 for i >= 1 on every strand at an lcm-lattice multidegree.
/// Requires C_0 = Q ε_∅ in degree 0 and ∂_1 with columns ±m_i (structural_error
/// otherwise). Records every failing strand.
ResolutionCertificate is_resolution(const BasedComplex& c, const MonomialIdeal& ideal,
                                    const Limits& limits = {});

enum class CancellationOrder {
    /// Lowest homological degree first, then row-major inside each matrix.
    degree_ascending,
    /// Highest homological degree first, then column-major.
    degree_descending,
};

struct MinimalizeResult {
    BasedComplex complex;
    std::vector<std::size_t> betti;  // trailing zeros removed
    std::size_t cancellations = 0;
};

/// Cancels scalar entries by Gaussian reduction of the complex until no
/// differential entry is a nonzero constant.
MinimalizeResult minimalize(const BasedComplex& c,
                            CancellationOrder order = CancellationOrder::degree_ascending);

} // namespace monores

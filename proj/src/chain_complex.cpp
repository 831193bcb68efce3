#include "monores/chain_complex.hpp"

#include "monores/errors.hpp"

#include <algorithm>
#include <set>

namespace monores {

namespace {

const PolyMatrix& empty_matrix() {
    static const PolyMatrix m;
    return m;
}

const std::vector<BasisLabel>& empty_basis() {
    static const std::vector<BasisLabel> b;
    return b;
}

} // namespace

BasedComplex::BasedComplex(std::size_t nvars, std::vector<std::vector<BasisLabel>> bases,
                           std::vector<PolyMatrix> differentials)
    : nvars_(nvars), bases_(std::move(bases)), differentials_(std::move(differentials)) {
    if (!bases_.empty() && differentials_.size() + 1 != bases_.size()) {
        throw structural_error("complex with " + std::to_string(bases_.size()) + " modules needs " +
                               std::to_string(bases_.size() - 1) + " differentials, got " +
                               std::to_string(differentials_.size()));
    }
    if (bases_.empty() && !differentials_.empty()) {
        throw structural_error("differentials given for an empty complex");
    }
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        for (const auto& label : bases_[i]) {
            if (label.degree.size() != nvars_) {
                throw structural_error("basis label " + label.cell.to_string() + " in degree " +
                                       std::to_string(i) + " has the wrong number of variables");
            }
        }
    }
    for (std::size_t i = 1; i < bases_.size(); ++i) {
        const PolyMatrix& d = differentials_[i - 1];
        if (d.rows() != bases_[i - 1].size() || d.cols() != bases_[i].size()) {
            throw structural_error("differential " + std::to_string(i) + " is " + std::to_string(d.rows()) +
                                   "x" + std::to_string(d.cols()) + " but the bases have sizes " +
                                   std::to_string(bases_[i - 1].size()) + " and " +
                                   std::to_string(bases_[i].size()));
        }
    }
    while (bases_.size() > 1 && bases_.back().empty()) {
        bases_.pop_back();
        differentials_.pop_back();
    }
}

const std::vector<BasisLabel>& BasedComplex::basis(std::size_t i) const {
    return i < bases_.size() ? bases_[i] : empty_basis();
}

std::vector<std::size_t> BasedComplex::ranks() const {
    std::vector<std::size_t> out;
    out.reserve(bases_.size());
    for (const auto& b : bases_) {
        out.push_back(b.size());
    }
    return out;
}

const PolyMatrix& BasedComplex::differential(std::size_t i) const {
    if (i == 0 || i >= bases_.size()) {
        return empty_matrix();
    }
    return differentials_[i - 1];
}

std::optional<std::size_t> BasedComplex::index_of(std::size_t i, IndexSet cell) const {
    const auto& b = basis(i);
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k].cell == cell) {
            return k;
        }
    }
    return std::nullopt;
}

D2Report check_d_squared(const BasedComplex& c) {
    D2Report report;
    for (std::size_t i = 2; i < c.length(); ++i) {
        const PolyMatrix product = c.differential(i - 1) * c.differential(i);
        if (!product.is_zero()) {
            const auto& [index, value] = *product.entries().begin();
            report.pass = false;
            report.first_failure = EntryLocation{i, index.first, index.second};
            report.value = value;
            return report;
        }
    }
    return report;
}

std::optional<std::string> check_multigraded(const BasedComplex& c) {
    for (std::size_t i = 1; i < c.length(); ++i) {
        const auto& rows = c.basis(i - 1);
        const auto& cols = c.basis(i);
        for (const auto& [index, value] : c.differential(i).entries()) {
            const Multidegree& target = cols[index.second].degree;
            const Multidegree& source = rows[index.first].degree;
            for (const auto& [m, coefficient] : value.terms()) {
                if (monomial_product(m, source) != target) {
                    return "differential " + std::to_string(i) + " entry (" + std::to_string(index.first) +
                           "," + std::to_string(index.second) + ") is not homogeneous of degree " +
                           cols[index.second].cell.to_string() + " minus " + rows[index.first].cell.to_string();
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal, const Limits& limits) {
    const LcmTable table(ideal, limits);
    std::set<Multidegree> seen;
    const std::uint64_t count = std::uint64_t{1} << ideal.num_generators();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        seen.insert(table[IndexSet::from_mask(mask)]);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::size_t> StrandComplex::ranks() const {
    std::vector<std::size_t> out;
    out.reserve(kept.size());
    for (const auto& k : kept) {
        out.push_back(k.size());
    }
    return out;
}

StrandComplex strand(const BasedComplex& c, const Multidegree& a) {
    StrandComplex s;
    s.degree = a;
    s.kept.resize(c.length());
    std::vector<std::vector<std::size_t>> position(c.length());
    for (std::size_t i = 0; i < c.length(); ++i) {
        const auto& b = c.basis(i);
        position[i].assign(b.size(), b.size());
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (divides(b[k].degree, a)) {
                position[i][k] = s.kept[i].size();
                s.kept[i].push_back(k);
            }
        }
    }
    for (std::size_t i = 1; i < c.length(); ++i) {
        RationalMatrix m(s.kept[i - 1].size(), s.kept[i].size());
        const auto& rows = c.basis(i - 1);
        const auto& cols = c.basis(i);
        for (const auto& [index, value] : c.differential(i).entries()) {
            const std::size_t r = position[i - 1][index.first];
            const std::size_t k = position[i][index.second];
            if (r == rows.size() || k == cols.size()) {
                continue;
            }
            const Multidegree& source = rows[index.first].degree;
            const Multidegree& target = cols[index.second].degree;
            if (divides(source, target)) {
                m(r, k) = value.coefficient(monomial_quotient(target, source));
            }
        }
        s.differentials.push_back(std::move(m));
    }
    return s;
}

namespace {

void require_d_squared_zero(const StrandComplex& s) {
    for (std::size_t i = 1; i < s.differentials.size(); ++i) {
        if (!(s.differentials[i - 1] * s.differentials[i]).is_zero()) {
            throw contract_error("strand at degree " + std::to_string(i + 1) + " has nonzero d^2");
        }
    }
}

std::size_t map_rank(const StrandComplex& s, std::size_t i) {
    if (i == 0 || i > s.differentials.size()) {
        return 0;
    }
    return s.differentials[i - 1].rank();
}

} // namespace

std::vector<std::size_t> homology_dims(const StrandComplex& s) {
    require_d_squared_zero(s);
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < s.kept.size(); ++i) {
        const std::size_t kernel = s.kept[i].size() - map_rank(s, i);
        dims.push_back(kernel - map_rank(s, i + 1));
    }
    return dims;
}

std::optional<std::vector<Rational>> homology_witness(const StrandComplex& s, std::size_t i) {
    require_d_squared_zero(s);
    if (i >= s.kept.size()) {
        return std::nullopt;
    }
    const std::size_t n = s.kept[i].size();
    std::vector<std::vector<Rational>> cycles;
    if (i == 0) {
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Rational> e(n);
            e[k] = 1;
            cycles.push_back(std::move(e));
        }
    } else {
        cycles = s.differentials[i - 1].kernel_basis();
    }
    const RationalMatrix boundaries =
        i < s.differentials.size() ? s.differentials[i] : RationalMatrix(n, 0);
    const std::size_t boundary_rank = boundaries.rank();
    for (auto& z : cycles) {
        if (boundaries.with_column(z).rank() > boundary_rank) {
            return std::move(z);
        }
    }
    return std::nullopt;
}

namespace {

void check_augmentation(const BasedComplex& c, const MonomialIdeal& ideal) {
    if (c.length() < 2 || c.rank(0) != 1 || !c.basis(0)[0].cell.empty() || !c.basis(0)[0].degree.is_zero()) {
        throw structural_error("degree 0 must be the single basis element of degree 1 and empty cell");
    }
    if (c.nvars() != ideal.nvars()) {
        throw structural_error("complex and ideal use different numbers of variables");
    }
    const std::size_t q = ideal.num_generators();
    if (c.rank(1) != q) {
        throw structural_error("degree 1 has rank " + std::to_string(c.rank(1)) + " but the ideal has " +
                               std::to_string(q) + " generators");
    }
    std::vector<bool> seen(q + 1, false);
    const PolyMatrix& d1 = c.differential(1);
    for (std::size_t k = 0; k < q; ++k) {
        const BasisLabel& label = c.basis(1)[k];
        const auto members = label.cell.members();
        if (members.size() != 1 || members[0] > q || seen[members[0]]) {
            throw structural_error("degree 1 basis must be the singletons of [q]");
        }
        seen[members[0]] = true;
        const Polynomial& entry = d1.at(0, k);
        const Multidegree& m = ideal.generator(members[0]);
        if (entry != Polynomial::monomial(m) && entry != Polynomial::monomial(m, -1)) {
            throw structural_error("first differential column " + label.cell.to_string() + " is not ±" +
                                   ideal.format(m));
        }
    }
}

} // namespace

ResolutionCertificate is_resolution(const BasedComplex& c, const MonomialIdeal& ideal, const Limits& limits) {
    check_augmentation(c, ideal);
    ResolutionCertificate cert;
    cert.d_squared_zero = check_d_squared(c).pass;
    if (!cert.d_squared_zero) {
        cert.is_resolution = false;
        return cert;
    }
    for (const Multidegree& a : lcm_lattice(ideal, limits)) {
        const StrandComplex s = strand(c, a);
        ++cert.strands_checked;
        const auto dims = homology_dims(s);
        for (std::size_t i = 1; i < dims.size(); ++i) {
            if (dims[i] == 0) {
                continue;
            }
            ExactnessFailure failure{a, i, dims[i], {}};
            const auto z = homology_witness(s, i);
            for (std::size_t k = 0; z && k < z->size(); ++k) {
                if ((*z)[k].is_zero()) {
                    continue;
                }
                const std::size_t parent = s.kept[i][k];
                const Multidegree shift = monomial_quotient(a, c.basis(i)[parent].degree);
                failure.witness.emplace_back(parent, Polynomial::monomial(shift, (*z)[k]));
            }
            cert.failures.push_back(std::move(failure));
            cert.is_resolution = false;
        }
    }
    return cert;
}

namespace {

struct Working {
    std::vector<std::vector<BasisLabel>> bases;
    std::vector<std::vector<bool>> alive;
    std::vector<PolyMatrix::EntryMap> maps;  // maps[i-1] = ∂_i keyed by original indices
};

std::optional<std::pair<std::size_t, PolyMatrix::Index>> find_scalar(const Working& w, CancellationOrder order) {
    const std::size_t n = w.maps.size();
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t i = order == CancellationOrder::degree_ascending ? step + 1 : n - step;
        std::optional<PolyMatrix::Index> best;
        for (const auto& [index, value] : w.maps[i - 1]) {
            if (!value.constant_value()) {
                continue;
            }
            if (order == CancellationOrder::degree_ascending) {
                best = index;
                break;
            }
            if (!best || std::pair(index.second, index.first) < std::pair(best->second, best->first)) {
                best = index;
            }
        }
        if (best) {
            return std::pair(i, *best);
        }
    }
    return std::nullopt;
}

void erase_row(PolyMatrix::EntryMap& m, std::size_t row) {
    m.erase(m.lower_bound({row, 0}), m.lower_bound({row + 1, 0}));
}

void erase_col(PolyMatrix::EntryMap& m, std::size_t col) {
    std::erase_if(m, [col](const auto& entry) { return entry.first.second == col; });
}

void cancel(Working& w, std::size_t i, std::size_t rho, std::size_t kappa) {
    PolyMatrix::EntryMap& d = w.maps[i - 1];
    const Rational inverse = Rational(1) / *d.at({rho, kappa}).constant_value();

    std::vector<std::pair<std::size_t, Polynomial>> col_kappa;  // d[r][κ], r ≠ ρ
    std::vector<std::pair<std::size_t, Polynomial>> row_rho;    // d[ρ][k], k ≠ κ
    for (const auto& [index, value] : d) {
        if (index.second == kappa && index.first != rho) {
            col_kappa.emplace_back(index.first, value);
        }
        if (index.first == rho && index.second != kappa) {
            row_rho.emplace_back(index.second, value);
        }
    }
    erase_row(d, rho);
    erase_col(d, kappa);
    for (const auto& [r, a] : col_kappa) {
        const Polynomial scaled = a * inverse;
        for (const auto& [k, b] : row_rho) {
            Polynomial update = -(scaled * b);
            auto [it, inserted] = d.try_emplace({r, k}, update);
            if (!inserted) {
                it->second += update;
                if (it->second.is_zero()) {
                    d.erase(it);
                }
            }
        }
    }
    if (i < w.maps.size()) {
        erase_row(w.maps[i], kappa);
    }
    if (i >= 2) {
        erase_col(w.maps[i - 2], rho);
    }
    w.alive[i][kappa] = false;
    w.alive[i - 1][rho] = false;
}

} // namespace

MinimalizeResult minimalize(const BasedComplex& c, CancellationOrder order) {
    Working w;
    for (std::size_t i = 0; i < c.length(); ++i) {
        w.bases.push_back(c.basis(i));
        w.alive.emplace_back(c.rank(i), true);
        if (i >= 1) {
            w.maps.push_back(c.differential(i).entries());
        }
    }

    MinimalizeResult result;
    while (const auto found = find_scalar(w, order)) {
        cancel(w, found->first, found->second.first, found->second.second);
        ++result.cancellations;
    }

    std::vector<std::vector<BasisLabel>> bases(c.length());
    std::vector<std::vector<std::size_t>> renumber(c.length());
    for (std::size_t i = 0; i < c.length(); ++i) {
        renumber[i].assign(c.rank(i), 0);
        for (std::size_t k = 0; k < c.rank(i); ++k) {
            if (w.alive[i][k]) {
                renumber[i][k] = bases[i].size();
                bases[i].push_back(w.bases[i][k]);
            }
        }
    }
    std::vector<PolyMatrix> differentials;
    for (std::size_t i = 1; i < c.length(); ++i) {
        PolyMatrix m(bases[i - 1].size(), bases[i].size());
        for (const auto& [index, value] : w.maps[i - 1]) {
            m.set(renumber[i - 1][index.first], renumber[i][index.second], value);
        }
        differentials.push_back(std::move(m));
    }
    result.complex = BasedComplex(c.nvars(), std::move(bases), std::move(differentials));
    result.betti = result.complex.ranks();
    while (!result.betti.empty() && result.betti.back() == 0) {
        result.betti.pop_back();
    }
    return result;
}

} // namespace monores

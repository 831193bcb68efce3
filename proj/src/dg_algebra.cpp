#include "monores/dg_algebra.hpp"

#include "monores/resolutions.hpp"

#include <stdexcept>

namespace monores {

ChainElement ChainElement::basis(IndexSet cell, std::size_t nvars) {
    return term(cell, Polynomial::constant(1, nvars));
}

ChainElement ChainElement::term(IndexSet cell, Polynomial coefficient) {
    ChainElement out;
    out.add(cell, coefficient);
    return out;
}

Polynomial ChainElement::coefficient(IndexSet cell) const {
    const auto it = terms_.find(cell);
    return it == terms_.end() ? Polynomial() : it->second;
}

void ChainElement::add(IndexSet cell, const Polynomial& coefficient) {
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(cell, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

ChainElement& ChainElement::operator+=(const ChainElement& o) {
    for (const auto& [cell, f] : o.terms_) {
        add(cell, f);
    }
    return *this;
}

ChainElement& ChainElement::operator-=(const ChainElement& o) {
    for (const auto& [cell, f] : o.terms_) {
        add(cell, -f);
    }
    return *this;
}

ChainElement& ChainElement::operator*=(const Polynomial& f) {
    TermMap out;
    for (auto& [cell, g] : terms_) {
        Polynomial product = g * f;
        if (!product.is_zero()) {
            out.emplace(cell, std::move(product));
        }
    }
    terms_ = std::move(out);
    return *this;
}

ChainElement operator-(ChainElement a) {
    for (auto& [cell, f] : a.terms_) {
        f = -f;
    }
    return a;
}

std::string ChainElement::to_string(const std::vector<std::string>& variables) const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [cell, f] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + f.to_string(variables) + ")e" + cell.to_string();
    }
    return out;
}

ChainElement apply_differential(const BasedComplex& c, const ChainElement& x) {
    ChainElement out;
    for (const auto& [cell, f] : x.terms()) {
        const std::size_t i = cell.size();
        const auto k = c.index_of(i, cell);
        if (!k) {
            throw std::invalid_argument("cell " + cell.to_string() + " is not a basis element of the complex");
        }
        if (i == 0) {
            continue;
        }
        const auto& rows = c.basis(i - 1);
        for (const auto& [r, g] : c.differential(i).column(*k)) {
            out.add(rows[r].cell, f * g);
        }
    }
    return out;
}

namespace {

Polynomial monomial_ratio(const Multidegree& a, const Multidegree& b, const Multidegree& den, int sign) {
    return Polynomial::monomial(monomial_quotient(monomial_product(a, b), den), sign);
}

template <typename Algebra>
ChainElement bilinear(const Algebra& algebra, const ChainElement& x, const ChainElement& y) {
    for (const ChainElement* operand : {&x, &y}) {
        for (const auto& [cell, f] : operand->terms()) {
            if (!algebra.contains(cell)) {
                throw std::invalid_argument("cell " + cell.to_string() + " does not belong to this algebra");
            }
        }
    }
    ChainElement out;
    for (const auto& [a, f] : x.terms()) {
        for (const auto& [b, g] : y.terms()) {
            const ChainElement p = algebra.basis_product(a, b);
            if (!p.is_zero()) {
                out += (f * g) * p;
            }
        }
    }
    return out;
}

} // namespace

TaylorAlgebra::TaylorAlgebra(const MonomialIdeal& ideal, const Limits& limits)
    : ideal_(ideal), lcm_(ideal, limits), complex_(taylor_resolution(ideal, limits)) {}

bool TaylorAlgebra::contains(IndexSet cell) const noexcept {
    return cell.is_subset_of(IndexSet::range(ideal_.num_generators()));
}

ChainElement TaylorAlgebra::unit() const {
    return ChainElement::basis(IndexSet(), ideal_.nvars());
}

ChainElement TaylorAlgebra::basis_product(IndexSet a, IndexSet b) const {
    if (a.intersects(b)) {
        return {};
    }
    const IndexSet u = a | b;
    return ChainElement::term(u, monomial_ratio(lcm_[a], lcm_[b], lcm_[u], sign_pair(a, b)));
}

ChainElement TaylorAlgebra::product(const ChainElement& x, const ChainElement& y) const {
    return bilinear(*this, x, y);
}

ChainElement TaylorAlgebra::differential(const ChainElement& x) const {
    return apply_differential(complex_, x);
}

PivotNormalForm::PivotNormalForm(const MonomialIdeal& ideal, std::size_t l, PivotProductSign sign,
                                 const Limits& limits)
    : ideal_(ideal), l_(l), sign_(sign), lcm_(ideal, limits) {
    if (l < 2 || l >= ideal.num_generators()) {
        throw std::invalid_argument("normal form needs 2 <= l < q");
    }
    if (!divides(ideal.generator(l + 1), lcm_[IndexSet::range(l)])) {
        throw std::invalid_argument(std::to_string(l + 1) + " is not a gap of " + IndexSet::range(l).to_string());
    }
    complex_ = pivot_complex(ideal, IndexSet::range(l), limits);
}

bool PivotNormalForm::contains(IndexSet cell) const noexcept {
    return cell.is_subset_of(IndexSet::range(ideal_.num_generators())) && !cell.is_superset_of(IndexSet::range(l_));
}

ChainElement PivotNormalForm::unit() const {
    return ChainElement::basis(IndexSet(), ideal_.nvars());
}

ChainElement PivotNormalForm::basis_product(IndexSet a, IndexSet b) const {
    const IndexSet head = IndexSet::range(l_);
    const std::size_t p = pivot();
    if (a.intersects(b)) {
        return {};
    }
    const IndexSet u = a | b;
    if (u.is_superset_of(head) && u.contains(p)) {
        return {};
    }
    const int s = sign_pair(a, b);
    if (!u.is_superset_of(head)) {
        return ChainElement::term(u, monomial_ratio(lcm_[a], lcm_[b], lcm_[u], s));
    }
    const int factor = (sign_ == PivotProductSign::corrected && l_ % 2 == 0) ? -1 : 1;
    ChainElement out;
    for (std::size_t i = 1; i <= l_; ++i) {
        const IndexSet target = u.with(p).without(i);
        out.add(target, monomial_ratio(lcm_[a], lcm_[b], lcm_[target], factor * s * sign_elem(i, u.without(i))));
    }
    return out;
}

ChainElement PivotNormalForm::product(const ChainElement& x, const ChainElement& y) const {
    return bilinear(*this, x, y);
}

ChainElement PivotNormalForm::differential(const ChainElement& x) const {
    return apply_differential(complex_, x);
}

ChainElement PivotNormalForm::project(const ChainElement& taylor_element) const {
    const IndexSet head = IndexSet::range(l_);
    const std::size_t p = pivot();
    ChainElement out;
    for (const auto& [sigma, f] : taylor_element.terms()) {
        if (!sigma.is_subset_of(IndexSet::range(ideal_.num_generators()))) {
            throw std::invalid_argument("cell " + sigma.to_string() + " is not a Taylor cell");
        }
        if (!sigma.is_superset_of(head)) {
            out.add(sigma, f);
            continue;
        }
        if (sigma.contains(p)) {
            continue;
        }
        // ∂ε_{σ∪p} ≡ 0 solved for its ε_σ term, which has coefficient sign(p, σ).
        const IndexSet top = sigma.with(p);
        for (std::size_t k = 1; k <= l_; ++k) {
            const IndexSet target = top.without(k);
            const int sign = -sign_elem(p, sigma) * sign_elem(k, target);
            out.add(target, f * Polynomial::monomial(monomial_quotient(lcm_[sigma], lcm_[target]), sign));
        }
    }
    return out;
}

PivotAlgebra::PivotAlgebra(const MonomialIdeal& ideal, IndexSet s, PivotProductSign sign, const Limits& limits)
    : ideal_(ideal),
      s_(s),
      all_(IndexSet::range(ideal.num_generators())),
      relabeling_(relabel_for_pivot(ideal, s)),
      normal_(relabeling_.relabel(ideal), s.size(), sign, limits),
      complex_(pivot_complex(ideal, s, limits)) {}

ChainElement PivotAlgebra::unit() const {
    return ChainElement::basis(IndexSet(), ideal_.nvars());
}

ChainElement PivotAlgebra::to_normal_form(const ChainElement& x) const {
    ChainElement out;
    for (const auto& [cell, f] : x.terms()) {
        out.add(relabeling_.apply(cell), relabeling_.eta(cell) == 1 ? f : -f);
    }
    return out;
}

ChainElement PivotAlgebra::from_normal_form(const ChainElement& x) const {
    ChainElement out;
    for (const auto& [cell, f] : x.terms()) {
        const IndexSet original = relabeling_.revert(cell);
        out.add(original, relabeling_.eta(original) == 1 ? f : -f);
    }
    return out;
}

ChainElement PivotAlgebra::product(const ChainElement& x, const ChainElement& y) const {
    for (const ChainElement* operand : {&x, &y}) {
        for (const auto& [cell, f] : operand->terms()) {
            if (!contains(cell)) {
                throw std::invalid_argument("cell " + cell.to_string() + " does not belong to this algebra");
            }
        }
    }
    return from_normal_form(normal_.product(to_normal_form(x), to_normal_form(y)));
}

ChainElement PivotAlgebra::differential(const ChainElement& x) const {
    return apply_differential(complex_, x);
}

ChainElement PivotAlgebra::project(const ChainElement& taylor_element) const {
    return from_normal_form(normal_.project(to_normal_form(taylor_element)));
}

} // namespace monores

namespace monores {

namespace {

std::vector<IndexSet> basis_cells(const BasedComplex& c) {
    std::vector<IndexSet> out;
    for (std::size_t i = 0; i < c.length(); ++i) {
        for (const BasisLabel& label : c.basis(i)) {
            out.push_back(label.cell);
        }
    }
    return out;
}

void tally(AxiomCheck& check, bool ok, std::vector<IndexSet> cells) {
    ++check.cases;
    if (!ok && check.pass) {
        check.pass = false;
        check.witness = std::move(cells);
    }
}

template <typename Algebra>
std::vector<AxiomCheck> axiom_checks(const Algebra& algebra) {
    const std::vector<IndexSet> cells = basis_cells(algebra.complex());
    const std::size_t n = algebra.ideal().nvars();
    AxiomCheck unit{"unit: e{} * x = x * e{} = x", true, 0, {}};
    AxiomCheck commutative{"graded commutativity: x * y = (-1)^{|x||y|} y * x, x * x = 0 for |x| odd", true, 0, {}};
    AxiomCheck associative{"associativity: (x * y) * z = x * (y * z)", true, 0, {}};
    AxiomCheck leibniz{"Leibniz: d(x * y) = d(x) * y + (-1)^{|x|} x * d(y)", true, 0, {}};

    std::map<std::pair<std::uint64_t, std::uint64_t>, ChainElement> products;
    auto basis = [n](IndexSet a) { return ChainElement::basis(a, n); };
    for (IndexSet a : cells) {
        const ChainElement ea = basis(a);
        tally(unit, algebra.product(algebra.unit(), ea) == ea && algebra.product(ea, algebra.unit()) == ea, {a});
        for (IndexSet b : cells) {
            products[{a.mask(), b.mask()}] = algebra.product(ea, basis(b));
        }
    }
    for (IndexSet a : cells) {
        const ChainElement ea = basis(a);
        const ChainElement da = algebra.differential(ea);
        for (IndexSet b : cells) {
            const ChainElement eb = basis(b);
            const ChainElement& ab = products.at({a.mask(), b.mask()});
            const ChainElement& ba = products.at({b.mask(), a.mask()});
            const bool odd = (a.size() * b.size()) % 2 == 1;
            bool ok = ab == (odd ? -ba : ba);
            if (a == b && a.size() % 2 == 1) {
                ok = ok && ab.is_zero();
            }
            tally(commutative, ok, {a, b});

            ChainElement rhs = algebra.product(da, eb);
            const ChainElement second = algebra.product(ea, algebra.differential(eb));
            if (a.size() % 2 == 1) {
                rhs -= second;
            } else {
                rhs += second;
            }
            tally(leibniz, algebra.differential(ab) == rhs, {a, b});

            for (IndexSet c : cells) {
                const ChainElement ec = basis(c);
                const ChainElement left = algebra.product(ab, ec);
                const ChainElement right = algebra.product(ea, products.at({b.mask(), c.mask()}));
                tally(associative, left == right, {a, b, c});
            }
        }
    }
    return {unit, commutative, associative, leibniz};
}

DGReport to_report(std::vector<AxiomCheck> checks) {
    DGReport report;
    for (const AxiomCheck& c : checks) {
        report.pass = report.pass && c.pass;
    }
    report.checks = std::move(checks);
    return report;
}

} // namespace

DGReport verify_dg_axioms(const TaylorAlgebra& algebra) {
    return to_report(axiom_checks(algebra));
}

DGReport verify_dg_axioms(const PivotAlgebra& algebra) {
    auto checks = axiom_checks(algebra);
    const MonomialIdeal& ideal = algebra.ideal();
    const std::size_t n = ideal.nvars();
    const TaylorAlgebra taylor(ideal);
    const std::vector<IndexSet> cells = basis_cells(taylor.complex());

    AxiomCheck compatible{"quotient compatibility: pi(x) * pi(y) = pi(x * y) on Taylor cells", true, 0, {}};
    for (IndexSet a : cells) {
        const ChainElement ea = ChainElement::basis(a, n);
        const ChainElement pa = algebra.project(ea);
        for (IndexSet b : cells) {
            const ChainElement eb = ChainElement::basis(b, n);
            tally(compatible, algebra.product(pa, algebra.project(eb)) == algebra.project(taylor.product(ea, eb)),
                  {a, b});
        }
    }

    const IndexSet generator = algebra.pivot_set().with(algebra.relabeling().gap());
    AxiomCheck closed{"DG ideal: pi vanishes on e_t, d(e_t), e_t * e_s and d(e_t) * e_s for t containing S and h",
                      true, 0, {}};
    for (IndexSet t : cells) {
        if (!t.is_superset_of(generator)) {
            continue;
        }
        const ChainElement et = ChainElement::basis(t, n);
        const ChainElement dt = taylor.differential(et);
        tally(closed, algebra.project(et).is_zero() && algebra.project(dt).is_zero(), {t});
        for (IndexSet s : cells) {
            const ChainElement es = ChainElement::basis(s, n);
            tally(closed,
                  algebra.project(taylor.product(et, es)).is_zero() &&
                      algebra.project(taylor.product(dt, es)).is_zero(),
                  {t, s});
        }
    }
    checks.push_back(std::move(compatible));
    checks.push_back(std::move(closed));
    return to_report(std::move(checks));
}

} // namespace monores

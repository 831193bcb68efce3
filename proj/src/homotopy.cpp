#include "monores/homotopy.hpp"

#include "monores/errors.hpp"
#include "monores/resolutions.hpp"

#include <stdexcept>

namespace monores {

std::vector<Polynomial> express_in_generators(const Polynomial& a, const MonomialIdeal& ideal,
                                              DivisorStrategy strategy) {
    const std::size_t q = ideal.num_generators();
    std::vector<Polynomial> out(q);
    for (const auto& [m, c] : a.terms()) {
        if (m.size() != ideal.nvars()) {
            throw dimension_error("polynomial term has " + std::to_string(m.size()) + " variables, the ideal has " +
                                  std::to_string(ideal.nvars()));
        }
        std::optional<std::size_t> chosen;
        for (std::size_t j = 1; j <= q; ++j) {
            if (divides(ideal.generator(j), m)) {
                chosen = j;
                if (strategy == DivisorStrategy::first) {
                    break;
                }
            }
        }
        if (!chosen) {
            throw membership_error("term " + ideal.format(m) + " is divisible by no generator of " + ideal.to_string());
        }
        out[*chosen - 1].add_term(monomial_quotient(m, ideal.generator(*chosen)), c);
    }
    return out;
}

namespace {

void check_combination(const MonomialIdeal& ideal, const Polynomial& a, const std::vector<Polynomial>& coefficients,
                       std::size_t s) {
    if (coefficients.size() != ideal.num_generators()) {
        throw dimension_error("element " + std::to_string(s) + " needs " + std::to_string(ideal.num_generators()) +
                              " coefficients, got " + std::to_string(coefficients.size()));
    }
    Polynomial sum;
    for (std::size_t j = 1; j <= coefficients.size(); ++j) {
        for (const auto& [m, c] : coefficients[j - 1].terms()) {
            if (m.size() != ideal.nvars()) {
                throw dimension_error("coefficient of element " + std::to_string(s) + " has the wrong variable count");
            }
        }
        sum += coefficients[j - 1].shifted(ideal.generator(j));
    }
    if (sum != a) {
        throw membership_error("element " + std::to_string(s) + ": " + a.to_string(ideal.variables()) +
                               " differs from its expression " + sum.to_string(ideal.variables()));
    }
}

} // namespace

CIData::CIData(const MonomialIdeal& ideal, std::vector<Polynomial> elements, DivisorStrategy strategy)
    : q_(ideal.num_generators()), elements_(std::move(elements)) {
    for (std::size_t s = 1; s <= elements_.size(); ++s) {
        coefficients_.push_back(express_in_generators(elements_[s - 1], ideal, strategy));
        check_combination(ideal, elements_[s - 1], coefficients_.back(), s);
    }
}

CIData::CIData(const MonomialIdeal& ideal, std::vector<Polynomial> elements,
               std::vector<std::vector<Polynomial>> coefficients)
    : q_(ideal.num_generators()), elements_(std::move(elements)), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != elements_.size()) {
        throw dimension_error("got " + std::to_string(coefficients_.size()) + " coefficient rows for " +
                              std::to_string(elements_.size()) + " elements");
    }
    for (std::size_t s = 1; s <= elements_.size(); ++s) {
        check_combination(ideal, elements_[s - 1], coefficients_[s - 1], s);
    }
}

CIData CIData::relabeled(const MonomialIdeal& relabeled_ideal, const PivotRelabeling& pi) const {
    std::vector<std::vector<Polynomial>> coefficients(r(), std::vector<Polynomial>(q_));
    for (std::size_t s = 1; s <= r(); ++s) {
        for (std::size_t j = 1; j <= q_; ++j) {
            coefficients[s - 1][pi(j) - 1] = coefficient(s, j);
        }
    }
    return CIData(relabeled_ideal, elements_, std::move(coefficients));
}

namespace {

constexpr std::size_t absent = static_cast<std::size_t>(-1);

std::vector<std::size_t> positions(const BasedComplex& c, std::size_t q) {
    std::vector<std::size_t> pos(std::size_t{1} << q, absent);
    for (std::size_t i = 0; i < c.length(); ++i) {
        for (std::size_t k = 0; k < c.rank(i); ++k) {
            pos[c.basis(i)[k].cell.mask()] = k;
        }
    }
    return pos;
}

using CellRule = std::function<void(std::size_t s, IndexSet a, const std::function<void(IndexSet, Polynomial)>& emit)>;

HomotopySystem build_system(BasedComplex complex, std::size_t q, std::size_t r, const CellRule& rule) {
    const auto pos = positions(complex, q);
    HomotopySystem h;
    for (std::size_t s = 1; s <= r; ++s) {
        std::vector<PolyMatrix> maps;
        for (std::size_t k = 0; k < complex.length(); ++k) {
            PolyMatrix m(complex.rank(k + 1), complex.rank(k));
            for (std::size_t col = 0; col < complex.rank(k); ++col) {
                rule(s, complex.basis(k)[col].cell, [&](IndexSet target, Polynomial value) {
                    const std::size_t row = pos[target.mask()];
                    if (row == absent || target.size() != k + 1) {
                        throw std::logic_error("homotopy term " + target.to_string() + " lies outside the complex");
                    }
                    m.add(row, col, value);
                });
            }
            maps.push_back(std::move(m));
        }
        h.sigma.push_back(std::move(maps));
    }
    h.complex = std::move(complex);
    return h;
}

void require_matching_generators(const MonomialIdeal& ideal, const CIData& ci) {
    if (ci.num_generators() != ideal.num_generators()) {
        throw dimension_error("complete intersection data was built for a different ideal");
    }
}

} // namespace

HomotopySystem taylor_homotopy(const MonomialIdeal& ideal, const CIData& ci, const Limits& limits) {
    require_matching_generators(ideal, ci);
    const std::size_t q = ideal.num_generators();
    const LcmTable lcm(ideal, limits);
    return build_system(taylor_resolution(ideal, limits), q, ci.r(), [&](std::size_t s, IndexSet a, const auto& emit) {
        for (std::size_t j = 1; j <= q; ++j) {
            if (a.contains(j)) {
                continue;
            }
            const IndexSet target = a.with(j);
            const Multidegree shift =
                monomial_quotient(monomial_product(ideal.generator(j), lcm[a]), lcm[target]);
            emit(target, ci.coefficient(s, j).shifted(shift) * Rational(sign_elem(j, a)));
        }
    });
}

HomotopySystem pivot_homotopy_normal_form(const MonomialIdeal& ideal, std::size_t l, const CIData& ci,
                                          const Limits& limits) {
    require_matching_generators(ideal, ci);
    const std::size_t q = ideal.num_generators();
    if (l < 2 || l >= q || !divides(ideal.generator(l + 1), ideal.lcm_of(IndexSet::range(l)))) {
        throw std::invalid_argument("normal form needs 2 <= l < q with l+1 a gap of [l]");
    }
    const LcmTable lcm(ideal, limits);
    const IndexSet head = IndexSet::range(l);
    const std::size_t p = l + 1;
    const int correction_sign = l % 2 == 0 ? -1 : 1;

    return build_system(pivot_complex(ideal, head, limits), q, ci.r(), [&](std::size_t s, IndexSet a, const auto& emit) {
        const IndexSet missing = head - a;
        const IndexSet excluded = missing.size() == 1 ? missing : IndexSet();
        for (std::size_t j = 1; j <= q; ++j) {
            if (a.contains(j) || excluded.contains(j)) {
                continue;
            }
            const IndexSet target = a.with(j);
            const Multidegree shift =
                monomial_quotient(monomial_product(ideal.generator(j), lcm[a]), lcm[target]);
            emit(target, ci.coefficient(s, j).shifted(shift) * Rational(sign_elem(j, a)));
        }
        if (missing.size() == 1 && !a.contains(p)) {
            const std::size_t t = missing.members().front();
            const IndexSet full = a.with(t);
            for (std::size_t i = 1; i <= l; ++i) {
                const IndexSet target = full.with(p).without(i);
                const Multidegree shift =
                    monomial_quotient(monomial_product(ideal.generator(t), lcm[a]), lcm[target]);
                const int sign = correction_sign * sign_elem(t, a) * sign_elem(i, full.without(i));
                emit(target, ci.coefficient(s, t).shifted(shift) * Rational(sign));
            }
        }
    });
}

HomotopySystem pivot_homotopy(const MonomialIdeal& ideal, IndexSet s, const CIData& ci, const Limits& limits) {
    require_matching_generators(ideal, ci);
    const PivotRelabeling pi = relabel_for_pivot(ideal, s);
    const MonomialIdeal relabeled = pi.relabel(ideal);
    const HomotopySystem normal = pivot_homotopy_normal_form(relabeled, s.size(), ci.relabeled(relabeled, pi), limits);

    const std::size_t q = ideal.num_generators();
    BasedComplex complex = pivot_complex(ideal, s, limits);
    const auto normal_pos = positions(normal.complex, q);
    HomotopySystem h;
    for (std::size_t index = 1; index <= ci.r(); ++index) {
        std::vector<PolyMatrix> maps;
        for (std::size_t k = 0; k < complex.length(); ++k) {
            PolyMatrix m(complex.rank(k + 1), complex.rank(k));
            const PolyMatrix& source = normal.map(index, k);
            for (std::size_t col = 0; col < complex.rank(k); ++col) {
                const IndexSet tau = complex.basis(k)[col].cell;
                const std::size_t normal_col = normal_pos[pi.apply(tau).mask()];
                for (std::size_t row = 0; row < complex.rank(k + 1); ++row) {
                    const IndexSet upper = complex.basis(k + 1)[row].cell;
                    const Polynomial& value = source.at(normal_pos[pi.apply(upper).mask()], normal_col);
                    if (!value.is_zero()) {
                        m.set(row, col, value * Rational(pi.eta(upper) * pi.eta(tau)));
                    }
                }
            }
            maps.push_back(std::move(m));
        }
        h.sigma.push_back(std::move(maps));
    }
    h.complex = std::move(complex);
    return h;
}

PolyMatrix homotopy_commutator(const HomotopySystem& h, std::size_t s, std::size_t k) {
    const BasedComplex& c = h.complex;
    PolyMatrix out(c.rank(k), c.rank(k));
    if (k + 1 < c.length()) {
        out += c.differential(k + 1) * h.map(s, k);
    }
    if (k >= 1) {
        out += h.map(s, k - 1) * c.differential(k);
    }
    return out;
}

PolyMatrix homotopy_anticommutator(const HomotopySystem& h, std::size_t s, std::size_t t, std::size_t k) {
    const BasedComplex& c = h.complex;
    PolyMatrix out(c.rank(k + 2), c.rank(k));
    if (k + 1 < c.length()) {
        out += h.map(s, k + 1) * h.map(t, k);
        out += h.map(t, k + 1) * h.map(s, k);
    }
    return out;
}

namespace {

std::optional<EntryLocation> locate(std::size_t k, const PolyMatrix& got, const PolyMatrix& expected) {
    if (const auto where = got.first_difference(expected)) {
        return EntryLocation{k, where->first, where->second};
    }
    return std::nullopt;
}

} // namespace

HomotopyReport verify_homotopy(const HomotopySystem& h, const CIData& ci) {
    if (ci.r() != h.r()) {
        throw structural_error("homotopy system has " + std::to_string(h.r()) + " maps but the data has " +
                               std::to_string(ci.r()) + " elements");
    }
    const BasedComplex& c = h.complex;
    HomotopyReport report;
    auto record = [&report](IdentityCheck check) {
        report.pass = report.pass && check.pass;
        report.checks.push_back(std::move(check));
    };

    const D2Report d2 = check_d_squared(c);
    record({"sigma_0^2 = 0", d2.pass, d2.first_failure});

    for (std::size_t s = 1; s <= h.r(); ++s) {
        const std::string name = std::to_string(s);
        IdentityCheck commutes{"d sigma_" + name + " + sigma_" + name + " d = a_" + name + " id", true, {}};
        IdentityCheck square{"sigma_" + name + "^2 = 0", true, {}};
        for (std::size_t k = 0; k < c.length(); ++k) {
            if (commutes.pass) {
                const PolyMatrix expected = PolyMatrix::scalar(c.rank(k), ci.element(s));
                commutes.first_failure = locate(k, homotopy_commutator(h, s, k), expected);
                commutes.pass = !commutes.first_failure;
            }
            if (square.pass && k + 1 < c.length()) {
                const PolyMatrix product = h.map(s, k + 1) * h.map(s, k);
                square.first_failure = locate(k, product, PolyMatrix(product.rows(), product.cols()));
                square.pass = !square.first_failure;
            }
        }
        record(std::move(commutes));
        record(std::move(square));
    }
    for (std::size_t s = 1; s <= h.r(); ++s) {
        for (std::size_t t = s + 1; t <= h.r(); ++t) {
            const std::string a = std::to_string(s);
            const std::string b = std::to_string(t);
            IdentityCheck anti{"sigma_" + a + " sigma_" + b + " + sigma_" + b + " sigma_" + a + " = 0", true, {}};
            for (std::size_t k = 0; anti.pass && k < c.length(); ++k) {
                const PolyMatrix m = homotopy_anticommutator(h, s, t, k);
                anti.first_failure = locate(k, m, PolyMatrix(m.rows(), m.cols()));
                anti.pass = !anti.first_failure;
            }
            record(std::move(anti));
        }
    }
    return report;
}

namespace {

template <typename Column>
CellClassCheck check_columns(const BasedComplex& c, const std::function<bool(IndexSet)>& in_class, const Column& ok) {
    CellClassCheck result;
    for (std::size_t k = 0; k < c.length(); ++k) {
        for (std::size_t col = 0; col < c.rank(k); ++col) {
            const IndexSet cell = c.basis(k)[col].cell;
            if (!in_class(cell)) {
                continue;
            }
            ++result.cells_tested;
            if (result.pass && !ok(k, col)) {
                result.pass = false;
                result.first_failure = cell;
            }
        }
    }
    return result;
}

} // namespace

CellClassCheck check_commutator_on_cells(const HomotopySystem& h, const CIData& ci, std::size_t s,
                                         const std::function<bool(IndexSet)>& in_class) {
    std::vector<PolyMatrix> commutators;
    for (std::size_t k = 0; k < h.complex.length(); ++k) {
        commutators.push_back(homotopy_commutator(h, s, k));
    }
    return check_columns(h.complex, in_class, [&](std::size_t k, std::size_t col) {
        for (const auto& [row, value] : commutators[k].column(col)) {
            if (row != col || value != ci.element(s)) {
                return false;
            }
        }
        return !ci.element(s).is_zero() ? commutators[k].at(col, col) == ci.element(s) : true;
    });
}

CellClassCheck check_anticommutator_on_cells(const HomotopySystem& h, std::size_t s, std::size_t t,
                                             const std::function<bool(IndexSet)>& in_class) {
    std::vector<PolyMatrix> anti;
    for (std::size_t k = 0; k < h.complex.length(); ++k) {
        anti.push_back(homotopy_anticommutator(h, s, t, k));
    }
    return check_columns(h.complex, in_class,
                         [&](std::size_t k, std::size_t col) { return anti[k].column(col).empty(); });
}

} // namespace monores

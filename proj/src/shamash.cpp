#include "monores/shamash.hpp"

#include "monores/errors.hpp"
#include "monores/resolutions.hpp"

#include <map>

namespace monores {

std::vector<std::size_t> ShamashComplex::ranks() const {
    std::vector<std::size_t> out;
    for (const auto& b : bases) {
        out.push_back(b.size());
    }
    return out;
}

namespace {

// Exponent vectors u ∈ N^r with |u| = d, in lexicographic order.
void compositions(std::size_t r, unsigned d, std::vector<unsigned>& prefix, std::vector<std::vector<unsigned>>& out) {
    if (prefix.size() + 1 == r) {
        prefix.push_back(d);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned first = 0; first <= d; ++first) {
        prefix.push_back(first);
        compositions(r, d - first, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<unsigned>> compositions(std::size_t r, unsigned d) {
    std::vector<std::vector<unsigned>> out;
    if (r == 0) {
        if (d == 0) {
            out.emplace_back();
        }
        return out;
    }
    std::vector<unsigned> prefix;
    compositions(r, d, prefix, out);
    return out;
}

using BlockKey = std::pair<std::vector<unsigned>, std::size_t>;

} // namespace

ShamashComplex shamash_complex(const HomotopySystem& h, const CIData& ci, std::size_t truncation) {
    if (!verify_homotopy(h, ci).pass) {
        throw contract_error("the homotopy system fails verification; refusing to build the Shamash complex");
    }
    const BasedComplex& f = h.complex;
    const std::size_t r = h.r();
    ShamashComplex out;
    out.truncation = truncation;
    out.r = r;

    std::vector<std::map<BlockKey, std::size_t>> offsets(truncation + 1);
    for (std::size_t i = 0; i <= truncation; ++i) {
        std::vector<ShamashLabel> basis;
        for (std::size_t d = 0; 2 * d <= i; ++d) {
            const std::size_t k = i - 2 * d;
            if (k >= f.length()) {
                continue;
            }
            for (const auto& u : compositions(r, static_cast<unsigned>(d))) {
                offsets[i][{u, k}] = basis.size();
                for (std::size_t index = 0; index < f.rank(k); ++index) {
                    basis.push_back({u, k, index, f.basis(k)[index].cell, f.basis(k)[index].degree});
                }
            }
        }
        out.bases.push_back(std::move(basis));
    }

    for (std::size_t i = 1; i <= truncation; ++i) {
        PolyMatrix delta(out.bases[i - 1].size(), out.bases[i].size());
        for (std::size_t col = 0; col < out.bases[i].size(); ++col) {
            const ShamashLabel& label = out.bases[i][col];
            if (label.k >= 1) {
                const std::size_t base = offsets[i - 1].at({label.u, label.k - 1});
                for (const auto& [row, value] : f.differential(label.k).column(label.index)) {
                    delta.add(base + row, col, value);
                }
            }
            for (std::size_t s = 1; s <= r; ++s) {
                if (label.u[s - 1] == 0 || label.k + 1 >= f.length()) {
                    continue;
                }
                std::vector<unsigned> lowered = label.u;
                --lowered[s - 1];
                const std::size_t base = offsets[i - 1].at({lowered, label.k + 1});
                for (const auto& [row, value] : h.map(s, label.k).column(label.index)) {
                    delta.add(base + row, col, value);
                }
            }
        }
        out.differentials.push_back(std::move(delta));
    }

    for (std::size_t s = 1; s <= r; ++s) {
        std::vector<PolyMatrix> maps;
        for (std::size_t i = 2; i <= truncation; ++i) {
            PolyMatrix t(out.bases[i - 2].size(), out.bases[i].size());
            for (std::size_t col = 0; col < out.bases[i].size(); ++col) {
                const ShamashLabel& label = out.bases[i][col];
                if (label.u[s - 1] == 0) {
                    continue;
                }
                std::vector<unsigned> lowered = label.u;
                --lowered[s - 1];
                t.set(offsets[i - 2].at({lowered, label.k}) + label.index, col,
                      Polynomial::constant(1, f.nvars()));
            }
            maps.push_back(std::move(t));
        }
        out.contractions.push_back(std::move(maps));
    }
    return out;
}

ShamashSquareReport check_shamash_square(const ShamashComplex& c, const CIData& ci) {
    ShamashSquareReport report;
    for (std::size_t i = 2; i <= c.truncation; ++i) {
        const PolyMatrix square = c.differentials[i - 2] * c.differentials[i - 1];
        PolyMatrix expected(square.rows(), square.cols());
        for (std::size_t s = 1; s <= c.r; ++s) {
            PolyMatrix scaled = c.contractions[s - 1][i - 2];
            for (const auto& [index, value] : c.contractions[s - 1][i - 2].entries()) {
                scaled.set(index.first, index.second, value * ci.element(s));
            }
            expected += scaled;
        }
        if (const auto where = square.first_difference(expected)) {
            report.pass = false;
            report.first_failure = EntryLocation{i, where->first, where->second};
            return report;
        }
    }
    return report;
}

namespace {

bool next_multidegree(Multidegree& a, const Multidegree& bound) {
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[v] < bound[v]) {
            ++a[v];
            return true;
        }
        a[v] = 0;
    }
    return false;
}

} // namespace

RExactnessReport check_exactness_over_monomial_ci(const ShamashComplex& c, const CIData& ci,
                                                  const Multidegree& bound) {
    RExactnessReport report;
    std::vector<Multidegree> b;
    for (const Polynomial& a : ci.elements()) {
        if (!a.is_term()) {
            report.applicable = false;
            report.pass = false;
            return report;
        }
        b.push_back(a.terms().begin()->first);
    }
    for (std::size_t s = 0; s < b.size(); ++s) {
        for (std::size_t t = s + 1; t < b.size(); ++t) {
            for (std::size_t v = 0; v < bound.size(); ++v) {
                if (b[s][v] > 0 && b[t][v] > 0) {
                    report.applicable = false;
                    report.pass = false;
                    return report;
                }
            }
        }
    }

    // Multidegree of y^(u) ⊗ ε.
    std::vector<std::vector<Multidegree>> degrees(c.bases.size());
    for (std::size_t i = 0; i < c.bases.size(); ++i) {
        for (const ShamashLabel& label : c.bases[i]) {
            Multidegree d = label.degree;
            for (std::size_t s = 0; s < b.size(); ++s) {
                for (unsigned e = 0; e < label.u[s]; ++e) {
                    d = monomial_product(d, b[s]);
                }
            }
            degrees[i].push_back(std::move(d));
        }
    }
    auto survives = [&](const Multidegree& d, const Multidegree& a) {
        if (!divides(d, a)) {
            return false;
        }
        const Multidegree rest = monomial_quotient(a, d);
        for (const Multidegree& g : b) {
            if (divides(g, rest)) {
                return false;
            }
        }
        return true;
    };

    Multidegree a(bound.size());
    do {
        StrandComplex s;
        s.degree = a;
        s.kept.resize(c.bases.size());
        std::vector<std::vector<std::size_t>> position(c.bases.size());
        for (std::size_t i = 0; i < c.bases.size(); ++i) {
            position[i].assign(c.bases[i].size(), static_cast<std::size_t>(-1));
            for (std::size_t k = 0; k < c.bases[i].size(); ++k) {
                if (survives(degrees[i][k], a)) {
                    position[i][k] = s.kept[i].size();
                    s.kept[i].push_back(k);
                }
            }
        }
        for (std::size_t i = 1; i < c.bases.size(); ++i) {
            RationalMatrix m(s.kept[i - 1].size(), s.kept[i].size());
            for (const auto& [index, value] : c.differentials[i - 1].entries()) {
                const std::size_t row = position[i - 1][index.first];
                const std::size_t col = position[i][index.second];
                if (row == static_cast<std::size_t>(-1) || col == static_cast<std::size_t>(-1)) {
                    continue;
                }
                const Multidegree& source = degrees[i - 1][index.first];
                const Multidegree& target = degrees[i][index.second];
                if (divides(source, target)) {
                    m(row, col) = value.coefficient(monomial_quotient(target, source));
                }
            }
            s.differentials.push_back(std::move(m));
        }
        ++report.strands_checked;
        const auto dims = homology_dims(s);
        for (std::size_t i = 1; i + 1 < dims.size(); ++i) {
            if (dims[i] != 0) {
                report.pass = false;
                report.failing_degree = a;
                report.failing_homological_degree = i;
                return report;
            }
        }
    } while (next_multidegree(a, bound));
    return report;
}

std::uint64_t shamash_rank(const std::vector<std::size_t>& f_ranks, std::size_t r, std::size_t i) {
    auto rank = [&](std::size_t k) -> std::uint64_t { return k < f_ranks.size() ? f_ranks[k] : 0; };
    if (r == 0) {
        return rank(i);
    }
    std::uint64_t total = 0;
    for (std::size_t d = 0; 2 * d <= i; ++d) {
        const auto rr = static_cast<std::int64_t>(r);
        total += binom(rr + static_cast<std::int64_t>(d) - 1, rr - 1) * rank(i - 2 * d);
    }
    return total;
}

std::uint64_t betti_bound(std::size_t q, std::size_t scarf, std::size_t r, std::size_t degree, BoundMode mode) {
    const auto qq = static_cast<std::int64_t>(q);
    const auto l = static_cast<std::int64_t>(scarf);
    if (mode == BoundMode::structural) {
        std::vector<std::size_t> ranks;
        for (std::int64_t k = 0; k <= qq; ++k) {
            ranks.push_back(pivot_rank_formula(qq, l, k));
        }
        return shamash_rank(ranks, r, degree);
    }
    const auto i = static_cast<std::int64_t>(degree / 2);
    const auto rr = static_cast<std::int64_t>(r);
    const std::uint64_t factor = pivot_rank_formula(qq, l, static_cast<std::int64_t>(degree));
    std::uint64_t total = 0;
    for (std::int64_t j = 0; j <= i; ++j) {
        total += factor * binom(rr + i - j - 1, rr - 1);
    }
    return total;
}

} // namespace monores

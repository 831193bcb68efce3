#include "monores/resolutions.hpp"

#include "monores/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace monores {

namespace {

void require_in_range(const MonomialIdeal& ideal, IndexSet s) {
    if (!s.is_subset_of(IndexSet::range(ideal.num_generators()))) {
        throw std::invalid_argument("index set " + s.to_string() + " is not contained in [" +
                                    std::to_string(ideal.num_generators()) + "]");
    }
}

} // namespace

BasedComplex taylor_subcomplex(const MonomialIdeal& ideal, const std::function<bool(IndexSet)>& keep,
                               const Limits& limits) {
    ideal.require_within(limits);
    const LcmTable lcm(ideal, limits);
    const std::size_t q = ideal.num_generators();
    constexpr std::size_t absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> position(std::size_t{1} << q, absent);

    std::vector<std::vector<BasisLabel>> bases(q + 1);
    for (IndexSet cell : all_subsets(q)) {
        if (!keep(cell)) {
            continue;
        }
        position[cell.mask()] = bases[cell.size()].size();
        bases[cell.size()].push_back({cell, lcm[cell]});
    }

    std::vector<PolyMatrix> differentials;
    for (std::size_t i = 1; i <= q; ++i) {
        PolyMatrix d(bases[i - 1].size(), bases[i].size());
        for (std::size_t k = 0; k < bases[i].size(); ++k) {
            const IndexSet tau = bases[i][k].cell;
            for (std::size_t j : tau.members()) {
                const IndexSet face = tau.without(j);
                const std::size_t row = position[face.mask()];
                if (row == absent) {
                    throw std::invalid_argument("cell family is not closed under subsets: " + tau.to_string() +
                                                " kept without " + face.to_string());
                }
                d.set(row, k, Polynomial::monomial(monomial_quotient(lcm[tau], lcm[face]), sign_elem(j, face)));
            }
        }
        differentials.push_back(std::move(d));
    }
    return BasedComplex(ideal.nvars(), std::move(bases), std::move(differentials));
}

BasedComplex taylor_resolution(const MonomialIdeal& ideal, const Limits& limits) {
    BasedComplex t = taylor_subcomplex(ideal, [](IndexSet) { return true; }, limits);
    if (!check_d_squared(t).pass) {
        throw structural_error("Taylor differential does not square to zero");
    }
    return t;
}

std::vector<std::size_t> find_gaps(const MonomialIdeal& ideal, IndexSet tau) {
    require_in_range(ideal, tau);
    const Multidegree m_tau = ideal.lcm_of(tau);
    std::vector<std::size_t> gaps;
    for (std::size_t h = 1; h <= ideal.num_generators(); ++h) {
        if (tau.contains(h)) {
            continue;
        }
        const bool gap = divides(ideal.generator(h), m_tau);
        if (gap != (ideal.lcm_of(tau.with(h)) == m_tau)) {
            throw std::logic_error("gap characterization m_τ = m_{τ∪h} violated for h = " + std::to_string(h));
        }
        if (gap) {
            gaps.push_back(h);
        }
    }
    return gaps;
}

BasedComplex pivot_complex(const MonomialIdeal& ideal, IndexSet s, const Limits& limits) {
    require_in_range(ideal, s);
    if (s.size() < 2) {
        throw std::invalid_argument("a pivot complex needs at least two indices, got " + s.to_string());
    }
    return taylor_subcomplex(ideal, [s](IndexSet cell) { return !cell.is_superset_of(s); }, limits);
}

bool is_pivot_resolution(const MonomialIdeal& ideal, IndexSet s) {
    require_in_range(ideal, s);
    if (s.size() < 2) {
        throw std::invalid_argument("a pivot complex needs at least two indices, got " + s.to_string());
    }
    return !find_gaps(ideal, s).empty();
}

namespace {

std::map<Multidegree, std::vector<IndexSet>> cells_by_lcm(const MonomialIdeal& ideal, const Limits& limits) {
    ideal.require_within(limits);
    const LcmTable lcm(ideal, limits);
    std::map<Multidegree, std::vector<IndexSet>> groups;
    for (IndexSet cell : all_subsets(ideal.num_generators())) {
        groups[lcm[cell]].push_back(cell);
    }
    return groups;
}

} // namespace

std::optional<std::size_t> scarf_number(const MonomialIdeal& ideal, const Limits& limits) {
    std::optional<std::size_t> best;
    for (const auto& [degree, cells] : cells_by_lcm(ideal, limits)) {
        if (cells.size() < 2) {
            continue;
        }
        for (IndexSet cell : cells) {
            if (!best || cell.size() < *best) {
                best = cell.size();
            }
        }
    }
    return best;
}

std::vector<IndexSet> scarf_sets(const MonomialIdeal& ideal, const Limits& limits) {
    std::vector<IndexSet> out;
    for (const auto& [degree, cells] : cells_by_lcm(ideal, limits)) {
        if (cells.size() == 1) {
            out.push_back(cells.front());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<IndexSet> smallest_pivot_indices(const MonomialIdeal& ideal, const Limits& limits) {
    const auto l = scarf_number(ideal, limits);
    if (!l) {
        return std::nullopt;
    }
    for (IndexSet s : subsets_of_size(ideal.num_generators(), *l)) {
        if (!find_gaps(ideal, s).empty()) {
            return s;
        }
    }
    return std::nullopt;
}

std::uint64_t pivot_rank_formula(std::int64_t q, std::int64_t l, std::int64_t i) {
    return binom(q, i) - binom(q - l, i - l);
}

std::vector<std::size_t> betti_numbers(const MonomialIdeal& ideal, const Limits& limits) {
    return minimalize(taylor_resolution(ideal, limits)).betti;
}

bool has_minimal_pivot(const MonomialIdeal& ideal, const Limits& limits) {
    const auto l = scarf_number(ideal, limits);
    if (!l) {
        return true;
    }
    const auto betti = betti_numbers(ideal, limits);
    const auto q = static_cast<std::int64_t>(ideal.num_generators());
    for (std::int64_t i = 0; i <= q; ++i) {
        const std::uint64_t b = static_cast<std::size_t>(i) < betti.size() ? betti[i] : 0;
        if (b != pivot_rank_formula(q, static_cast<std::int64_t>(*l), i)) {
            return false;
        }
    }
    return true;
}

} // namespace monores

#include "monores/morse.hpp"

#include "monores/errors.hpp"
#include "monores/resolutions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace monores {

MorseMatching::MorseMatching(std::vector<MorseEdge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

namespace {

// partner[mask] = mask of the matched cell, or none.
constexpr std::uint64_t none = ~std::uint64_t{0};

std::vector<std::uint64_t> partners(std::size_t q, const MorseMatching& matching) {
    std::vector<std::uint64_t> partner(std::size_t{1} << q, none);
    for (const MorseEdge& e : matching.edges()) {
        partner[e.upper.mask()] = e.lower.mask();
        partner[e.lower.mask()] = e.upper.mask();
    }
    return partner;
}

bool is_matched_pair(const std::vector<std::uint64_t>& partner, IndexSet upper, IndexSet lower) {
    return partner[upper.mask()] == lower.mask() && partner[lower.mask()] == upper.mask();
}

} // namespace

MatchingReport validate_matching(const MonomialIdeal& ideal, const MorseMatching& matching, const Limits& limits) {
    ideal.require_within(limits);
    const std::size_t q = ideal.num_generators();
    const IndexSet all = IndexSet::range(q);
    const LcmTable lcm(ideal, limits);

    auto fail = [](int condition, std::string message) { return MatchingReport{false, condition, std::move(message)}; };
    auto edge_text = [](const MorseEdge& e) { return e.upper.to_string() + " -> " + e.lower.to_string(); };

    for (const MorseEdge& e : matching.edges()) {
        if (!e.upper.is_subset_of(all) || !e.lower.is_subset_of(e.upper) || e.upper.size() != e.lower.size() + 1) {
            return fail(0, "edge " + edge_text(e) + " is not a Taylor edge");
        }
    }
    std::unordered_map<std::uint64_t, MorseEdge> used;
    for (const MorseEdge& e : matching.edges()) {
        for (IndexSet v : {e.upper, e.lower}) {
            const auto [it, inserted] = used.try_emplace(v.mask(), e);
            if (!inserted) {
                return fail(1, "edges " + edge_text(it->second) + " and " + edge_text(e) + " share " + v.to_string());
            }
        }
    }
    for (const MorseEdge& e : matching.edges()) {
        if (lcm[e.upper] != lcm[e.lower]) {
            return fail(2, "edge " + edge_text(e) + " joins m = " + ideal.format(lcm[e.upper]) + " and " +
                               ideal.format(lcm[e.lower]));
        }
    }

    // Acyclicity of G^A by iterative depth-first search over all 2^q cells.
    const auto partner = partners(q, matching);
    const std::size_t n = std::size_t{1} << q;
    std::vector<char> color(n, 0);
    auto successors = [&](std::uint64_t v) {
        std::vector<std::uint64_t> out;
        const IndexSet cell = IndexSet::from_mask(v);
        for (std::size_t j : cell.members()) {
            const IndexSet face = cell.without(j);
            if (!is_matched_pair(partner, cell, face)) {
                out.push_back(face.mask());
            }
        }
        if (partner[v] != none && (partner[v] & v) == v && partner[v] != v) {
            out.push_back(partner[v]);
        }
        return out;
    };
    for (std::uint64_t root = 0; root < n; ++root) {
        if (color[root] != 0) {
            continue;
        }
        std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> stack;
        stack.emplace_back(root, successors(root));
        color[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next.empty()) {
                color[v] = 2;
                stack.pop_back();
                continue;
            }
            const std::uint64_t w = next.back();
            next.pop_back();
            if (color[w] == 1) {
                return fail(3, "G^A has a directed cycle through " + IndexSet::from_mask(w).to_string());
            }
            if (color[w] == 0) {
                color[w] = 1;
                stack.emplace_back(w, successors(w));
            }
        }
    }
    return {};
}

std::vector<std::size_t> order_with_last(std::size_t q, std::size_t h) {
    std::vector<std::size_t> order;
    for (std::size_t i = 1; i <= q; ++i) {
        if (i != h) {
            order.push_back(i);
        }
    }
    order.push_back(h);
    return order;
}

namespace {

void require_permutation(std::size_t q, const std::vector<std::size_t>& order) {
    std::vector<bool> seen(q + 1, false);
    if (order.size() != q) {
        throw std::invalid_argument("order must list all " + std::to_string(q) + " generators");
    }
    for (std::size_t i : order) {
        if (i < 1 || i > q || seen[i]) {
            throw std::invalid_argument("order is not a permutation of [" + std::to_string(q) + "]");
        }
        seen[i] = true;
    }
}

} // namespace

std::optional<std::size_t> lyubeznik_index(const MonomialIdeal& ideal, const std::vector<std::size_t>& order,
                                           IndexSet tau) {
    std::optional<std::size_t> best;
    IndexSet earlier;
    for (std::size_t j = 0; j < order.size(); ++j) {
        const IndexSet prefix = earlier & tau;
        if (!prefix.empty() && divides(ideal.generator(order[j]), ideal.lcm_of(prefix))) {
            best = order[j];
        }
        earlier = earlier.with(order[j]);
    }
    return best;
}

MorseMatching lyubeznik_matching(const MonomialIdeal& ideal, const std::vector<std::size_t>& order,
                                 const Limits& limits) {
    ideal.require_within(limits);
    const std::size_t q = ideal.num_generators();
    require_permutation(q, order);
    std::vector<MorseEdge> edges;
    for (IndexSet tau : all_subsets(q)) {
        const auto l = lyubeznik_index(ideal, order, tau);
        if (l && !tau.contains(*l)) {
            edges.push_back({tau.with(*l), tau});
        }
    }
    MorseMatching matching(std::move(edges));
    const MatchingReport report = validate_matching(ideal, matching, limits);
    if (!report.valid) {
        throw std::logic_error("Lyubeznik matching failed validation: " + report.message);
    }
    return matching;
}

MorseMatching pivot_matching(const MonomialIdeal& ideal, IndexSet s, const Limits& limits) {
    ideal.require_within(limits);
    const auto gaps = find_gaps(ideal, s);
    if (gaps.empty()) {
        throw std::invalid_argument(s.to_string() + " has no gap");
    }
    const std::size_t h = gaps.front();
    std::vector<MorseEdge> edges;
    for (IndexSet tau : all_subsets(ideal.num_generators())) {
        if (tau.is_superset_of(s) && !tau.contains(h)) {
            edges.push_back({tau.with(h), tau});
        }
    }
    return MorseMatching(std::move(edges));
}

std::vector<IndexSet> critical_cells(std::size_t q, const MorseMatching& matching) {
    const auto partner = partners(q, matching);
    std::vector<IndexSet> out;
    for (IndexSet cell : all_subsets(q)) {
        if (partner[cell.mask()] == none) {
            out.push_back(cell);
        }
    }
    return out;
}

namespace {

struct PathSearch {
    const std::vector<std::uint64_t>& partner;
    std::size_t cap;
    std::size_t paths = 0;
    // Accumulated signed path counts ending at each critical face.
    std::unordered_map<std::uint64_t, long long> totals;

    void from(IndexSet cell, long long sign) {
        for (std::size_t j : cell.members()) {
            const IndexSet face = cell.without(j);
            if (is_matched_pair(partner, cell, face)) {
                continue;
            }
            const long long step = sign * sign_elem(j, face);
            const std::uint64_t mate = partner[face.mask()];
            if (mate == none) {
                if (++paths > cap) {
                    throw resource_error("gradient path count exceeds " + std::to_string(cap));
                }
                totals[face.mask()] += step;
            } else if ((mate & face.mask()) == face.mask()) {
                // Reversed edge face -> mate with sign -[mate : face].
                const IndexSet up = IndexSet::from_mask(mate);
                const std::size_t added = (up - face).members().front();
                from(up, -step * sign_elem(added, face));
            }
            // A face matched downward only leads below the target level.
        }
    }
};

} // namespace

BasedComplex morse_resolution(const MonomialIdeal& ideal, const MorseMatching& matching, const Limits& limits) {
    const MatchingReport report = validate_matching(ideal, matching, limits);
    if (!report.valid) {
        throw contract_error("invalid Morse matching: " + report.message);
    }
    const std::size_t q = ideal.num_generators();
    const LcmTable lcm(ideal, limits);
    const auto partner = partners(q, matching);

    std::vector<std::vector<BasisLabel>> bases(q + 1);
    std::unordered_map<std::uint64_t, std::size_t> position;
    for (IndexSet cell : critical_cells(q, matching)) {
        position[cell.mask()] = bases[cell.size()].size();
        bases[cell.size()].push_back({cell, lcm[cell]});
    }

    std::vector<PolyMatrix> differentials;
    for (std::size_t i = 1; i <= q; ++i) {
        PolyMatrix d(bases[i - 1].size(), bases[i].size());
        for (std::size_t k = 0; k < bases[i].size(); ++k) {
            const IndexSet tau = bases[i][k].cell;
            PathSearch search{partner, limits.max_gradient_paths, 0, {}};
            search.from(tau, 1);
            for (const auto& [mask, count] : search.totals) {
                if (count == 0) {
                    continue;
                }
                const IndexSet face = IndexSet::from_mask(mask);
                d.set(position.at(mask), k,
                      Polynomial::monomial(monomial_quotient(lcm[tau], lcm[face]), Rational(count)));
            }
        }
        differentials.push_back(std::move(d));
    }
    return BasedComplex(ideal.nvars(), std::move(bases), std::move(differentials));
}

} // namespace monores

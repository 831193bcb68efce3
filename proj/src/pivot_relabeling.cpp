#include "monores/pivot_relabeling.hpp"

#include "monores/resolutions.hpp"

#include <stdexcept>

namespace monores {

PivotRelabeling::PivotRelabeling(std::vector<std::size_t> forward, std::size_t l, std::size_t gap)
    : forward_(std::move(forward)), backward_(forward_.size(), 0), l_(l), gap_(gap) {
    for (std::size_t i = 1; i < forward_.size(); ++i) {
        const std::size_t image = forward_[i];
        if (image < 1 || image >= forward_.size() || backward_[image] != 0) {
            throw std::invalid_argument("relabeling is not a permutation");
        }
        backward_[image] = i;
    }
}

bool PivotRelabeling::is_identity() const noexcept {
    for (std::size_t i = 1; i < forward_.size(); ++i) {
        if (forward_[i] != i) {
            return false;
        }
    }
    return true;
}

IndexSet PivotRelabeling::apply(IndexSet original) const {
    IndexSet out;
    for (std::size_t i : original.members()) {
        out = out.with(forward_.at(i));
    }
    return out;
}

IndexSet PivotRelabeling::revert(IndexSet relabeled) const {
    IndexSet out;
    for (std::size_t i : relabeled.members()) {
        out = out.with(backward_.at(i));
    }
    return out;
}

int PivotRelabeling::eta(IndexSet original) const {
    const auto members = original.members();
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            if (forward_[members[a]] > forward_[members[b]]) {
                ++inversions;
            }
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

MonomialIdeal PivotRelabeling::relabel(const MonomialIdeal& ideal) const {
    std::vector<Multidegree> gens(ideal.num_generators());
    for (std::size_t j = 1; j <= ideal.num_generators(); ++j) {
        gens[forward_.at(j) - 1] = ideal.generator(j);
    }
    return MonomialIdeal(ideal.variables(), std::move(gens));
}

PivotRelabeling relabel_for_pivot(const MonomialIdeal& ideal, IndexSet s) {
    if (s.size() < 2) {
        throw std::invalid_argument("a pivot needs at least two indices, got " + s.to_string());
    }
    const auto gaps = find_gaps(ideal, s);
    if (gaps.empty()) {
        throw std::invalid_argument(s.to_string() + " has no gap");
    }
    const std::size_t q = ideal.num_generators();
    const std::size_t h = gaps.front();
    std::vector<std::size_t> forward(q + 1, 0);
    std::size_t next = 1;
    for (std::size_t i : s.members()) {
        forward[i] = next++;
    }
    forward[h] = next++;
    for (std::size_t i = 1; i <= q; ++i) {
        if (!s.contains(i) && i != h) {
            forward[i] = next++;
        }
    }
    return PivotRelabeling(std::move(forward), s.size(), h);
}

} // namespace monores

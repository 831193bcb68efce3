#include "monores/index_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace monores {

namespace {

std::uint64_t bit_of(std::size_t i) {
    if (i == 0 || i > IndexSet::max_index) {
        throw std::out_of_range("index " + std::to_string(i) + " outside 1.." +
                                std::to_string(IndexSet::max_index));
    }
    return std::uint64_t{1} << (i - 1);
}

} // namespace

IndexSet::IndexSet(std::initializer_list<std::size_t> members) {
    for (std::size_t i : members) {
        mask_ |= bit_of(i);
    }
}

IndexSet::IndexSet(std::span<const std::size_t> members) {
    for (std::size_t i : members) {
        mask_ |= bit_of(i);
    }
}

IndexSet IndexSet::range(std::size_t l) {
    if (l > max_index) {
        throw std::out_of_range("range beyond 64");
    }
    return from_mask(l == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << l) - 1);
}

std::size_t IndexSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

bool IndexSet::contains(std::size_t i) const noexcept {
    return i >= 1 && i <= max_index && (mask_ >> (i - 1) & 1u) != 0;
}

IndexSet IndexSet::with(std::size_t i) const { return from_mask(mask_ | bit_of(i)); }

IndexSet IndexSet::without(std::size_t i) const { return from_mask(mask_ & ~bit_of(i)); }

std::vector<std::size_t> IndexSet::members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
    }
    return out;
}

std::string IndexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : members()) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
    }
    if (a.mask_ == b.mask_) {
        return std::strong_ordering::equal;
    }
    // Same cardinality: the set holding the smallest differing element
    // comes first in the member sequence order.
    const std::uint64_t lowest = (a.mask_ ^ b.mask_) & (~(a.mask_ ^ b.mask_) + 1);
    return (a.mask_ & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

int sign_pair(IndexSet a, IndexSet b) noexcept {
    if (a.intersects(b)) {
        return 0;
    }
    // Each b must move past every larger member of A.
    unsigned parity = 0;
    for (std::uint64_t m = b.mask(); m != 0; m &= m - 1) {
        const unsigned pos = static_cast<unsigned>(std::countr_zero(m));
        const std::uint64_t above = pos == 63 ? 0 : (a.mask() >> (pos + 1));
        parity ^= static_cast<unsigned>(std::popcount(above)) & 1u;
    }
    return parity != 0 ? -1 : 1;
}

int sign_elem(std::size_t i, IndexSet a) noexcept {
    if (a.contains(i)) {
        return 0;
    }
    const std::uint64_t below = i >= 65 ? a.mask() : (a.mask() & ((std::uint64_t{1} << (i - 1)) - 1));
    return (std::popcount(below) & 1) != 0 ? -1 : 1;
}

std::uint64_t binom(std::int64_t n, std::int64_t k) noexcept {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        out = out * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
    }
    return out;
}

std::vector<IndexSet> all_subsets(std::size_t q) {
    if (q > 30) {
        throw std::length_error("refusing to enumerate subsets of [q] for q > 30");
    }
    std::vector<IndexSet> out;
    out.reserve(std::size_t{1} << q);
    for (std::size_t k = 0; k <= q; ++k) {
        auto layer = subsets_of_size(q, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<IndexSet> subsets_of_size(std::size_t q, std::size_t k) {
    std::vector<IndexSet> out;
    if (k > q) {
        return out;
    }
    std::vector<std::size_t> combo(k);
    for (std::size_t j = 0; j < k; ++j) {
        combo[j] = j + 1;
    }
    while (true) {
        out.emplace_back(std::span<const std::size_t>(combo));
        // Advance to the next combination in lexicographic order.
        std::size_t j = k;
        while (j > 0 && combo[j - 1] == q - k + j) {
            --j;
        }
        if (j == 0) {
            break;
        }
        ++combo[j - 1];
        for (std::size_t t = j; t < k; ++t) {
            combo[t] = combo[t - 1] + 1;
        }
    }
    return out;
}

} // namespace monores

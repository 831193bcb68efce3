#include "monores/monomial_ideal.hpp"

#include "monores/errors.hpp"

#include <bit>
#include <stdexcept>

namespace monores {

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<Multidegree> generators)
    : variables_(std::move(variables)), generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw std::invalid_argument("a monomial ideal needs at least one generator");
    }
    if (generators_.size() > IndexSet::max_index) {
        throw std::invalid_argument("more than 64 generators");
    }
    for (const auto& g : generators_) {
        if (g.size() != variables_.size()) {
            throw dimension_error("generator has " + std::to_string(g.size()) + " exponents, ring has " +
                                  std::to_string(variables_.size()) + " variables");
        }
        if (g.is_zero()) {
            throw std::invalid_argument("the unit monomial 1 cannot be a generator");
        }
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t j = 0; j < generators_.size(); ++j) {
            if (i != j && divides(generators_[i], generators_[j])) {
                throw std::invalid_argument("generators are not minimal: " + format(generators_[i]) +
                                            " divides " + format(generators_[j]));
            }
        }
    }
}

Multidegree MonomialIdeal::lcm_of(IndexSet a) const {
    Multidegree out(nvars());
    for (std::size_t i : a.members()) {
        out = lcm_multidegree(out, generator(i));
    }
    return out;
}

void MonomialIdeal::require_within(const Limits& limits) const {
    if (num_generators() > limits.max_generators) {
        throw resource_error("ideal has " + std::to_string(num_generators()) +
                             " generators; the cap is " + std::to_string(limits.max_generators));
    }
}

std::string MonomialIdeal::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        out += (i == 0 ? "" : ", ") + format(generators_[i]);
    }
    return out + ")";
}

LcmTable::LcmTable(const MonomialIdeal& ideal, const Limits& limits) : q_(ideal.num_generators()) {
    ideal.require_within(limits);
    const std::size_t cells = std::size_t{1} << q_;
    table_.reserve(cells);
    table_.emplace_back(ideal.nvars());
    for (std::size_t mask = 1; mask < cells; ++mask) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
        table_.push_back(lcm_multidegree(table_[mask & (mask - 1)], ideal.generator(low + 1)));
    }
}

} // namespace monores

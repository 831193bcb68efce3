#pragma once

#include "monores/index_set.hpp"
#include "monores/limits.hpp"
#include "monores/multidegree.hpp"

#include <string>
#include <vector>

namespace monores {

/// I = (m_1, ..., m_q), minimally generated, generator order significant.
class MonomialIdeal {
public:
    /// Throws std::invalid_argument on q = 0, a unit generator, or when some
    /// m_i divides m_j (the message names the pair); dimension_error when a
    /// generator length differs from the variable count.
    MonomialIdeal(std::vector<std::string> variables, std::vector<Multidegree> generators);

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::vector<Multidegree>& generators() const noexcept { return generators_; }

    std::size_t nvars() const noexcept { return variables_.size(); }
    std::size_t num_generators() const noexcept { return generators_.size(); }

    /// m_i for 1-based i.
    const Multidegree& generator(std::size_t i) const { return generators_.at(i - 1); }

    /// Exponent vector of m_A = lcm(m_i : i in A); m_{} = 1.
    Multidegree lcm_of(IndexSet a) const;

    /// Throws resource_error when q exceeds the generator cap.
    void require_within(const Limits& limits) const;

    std::string format(const Multidegree& m) const { return format_monomial(m, variables_); }
    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<std::string> variables_;
    std::vector<Multidegree> generators_;
};

/// m_A for every A in P([q]), indexed by bit mask.
class LcmTable {
public:
    explicit LcmTable(const MonomialIdeal& ideal, const Limits& limits = {});

    const Multidegree& operator[](IndexSet a) const { return table_[a.mask()]; }
    std::size_t num_generators() const noexcept { return q_; }

private:
    std::size_t q_;
    std::vector<Multidegree> table_;
};

} // namespace monores

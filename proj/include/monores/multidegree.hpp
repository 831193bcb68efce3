#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace monores {

/// Exponent vector of a monomial in n variables.
class Multidegree {
public:
    Multidegree() = default;
    explicit Multidegree(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Multidegree(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
    Multidegree(std::initializer_list<unsigned> exps) : exps_(exps) {}

    std::size_t size() const noexcept { return exps_.size(); }
    unsigned operator[](std::size_t k) const { return exps_[k]; }
    unsigned& operator[](std::size_t k) { return exps_[k]; }

    const std::vector<unsigned>& exponents() const noexcept { return exps_; }
    auto begin() const noexcept { return exps_.begin(); }
    auto end() const noexcept { return exps_.end(); }

    bool is_zero() const noexcept;
    unsigned total_degree() const noexcept;

    /// Lexicographic on exponents; this is the term order used everywhere.
    friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
    friend bool operator==(const Multidegree&, const Multidegree&) = default;

private:
    std::vector<unsigned> exps_;
};

/// Componentwise maximum (lcm of the monomials). Throws dimension_error.
Multidegree lcm_multidegree(const Multidegree& a, const Multidegree& b);

/// True iff x^a divides x^b. Throws dimension_error.
bool divides(const Multidegree& a, const Multidegree& b);

/// num - den; throws std::domain_error unless den divides num.
Multidegree monomial_quotient(const Multidegree& num, const Multidegree& den);

/// Componentwise sum (product of the monomials).
Multidegree monomial_product(const Multidegree& a, const Multidegree& b);

/// "x^2*y" style rendering; the zero multidegree renders as "1".
std::string format_monomial(const Multidegree& m, const std::vector<std::string>& variables);

} // namespace monores

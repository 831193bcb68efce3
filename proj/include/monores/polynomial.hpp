#pragma once

#include "monores/multidegree.hpp"
#include "monores/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace monores {

/// Sparse multivariate polynomial over Q. No stored coefficient is zero;
/// the zero polynomial has no terms. Terms are ordered lexicographically
/// by exponent vector.
class Polynomial {
public:
    using TermMap = std::map<Multidegree, Rational>;

    Polynomial() = default;

    static Polynomial monomial(Multidegree m, Rational coefficient = 1);
    static Polynomial constant(Rational c, std::size_t nvars);

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// The scalar c when the polynomial equals c * 1 with c != 0.
    std::optional<Rational> constant_value() const;

    /// Set when the polynomial is c * x^m for a single term.
    bool is_term() const noexcept { return terms_.size() == 1; }

    Rational coefficient(const Multidegree& m) const;
    void add_term(const Multidegree& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Multiplies every term by x^m.
    Polynomial shifted(const Multidegree& m) const;

    std::string to_string(const std::vector<std::string>& variables) const;

private:
    TermMap terms_;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

} // namespace monores

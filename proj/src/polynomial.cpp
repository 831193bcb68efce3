#include "monores/polynomial.hpp"

#include <utility>

namespace monores {

Polynomial Polynomial::monomial(Multidegree m, Rational coefficient) {
    Polynomial p;
    if (!coefficient.is_zero()) {
        p.terms_.emplace(std::move(m), std::move(coefficient));
    }
    return p;
}

Polynomial Polynomial::constant(Rational c, std::size_t nvars) {
    return monomial(Multidegree(nvars), std::move(c));
}

std::optional<Rational> Polynomial::constant_value() const {
    if (terms_.size() == 1 && terms_.begin()->first.is_zero()) {
        return terms_.begin()->second;
    }
    return std::nullopt;
}

Rational Polynomial::coefficient(const Multidegree& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Multidegree& m, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(monomial_product(ma, mb), ca * cb);
        }
    }
    return out;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial Polynomial::shifted(const Multidegree& m) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), monomial_product(e, m), c);
    }
    return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& variables) const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    // Highest lex term first, the usual way polynomials are written.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (m.is_zero()) {
            out += magnitude.to_string();
        } else if (magnitude.is_one()) {
            out += format_monomial(m, variables);
        } else {
            out += magnitude.to_string() + "*" + format_monomial(m, variables);
        }
    }
    return out;
}

} // namespace monores

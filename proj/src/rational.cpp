#include "monores/rational.hpp"

#include <stdexcept>

namespace monores {

Rational::Rational(long num, long den) : value_(num, den == 0 ? 1 : den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
    mpz_class n;
    mpz_class d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
        throw std::invalid_argument("malformed rational " + num + "/" + den);
    }
    if (d == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

} // namespace monores

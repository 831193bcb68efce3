#include "monores/multidegree.hpp"

#include "monores/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace monores {

namespace {

void require_same_length(const Multidegree& a, const Multidegree& b) {
    if (a.size() != b.size()) {
        throw dimension_error("multidegree length mismatch: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()));
    }
}

} // namespace

bool Multidegree::is_zero() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

unsigned Multidegree::total_degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Multidegree lcm_multidegree(const Multidegree& a, const Multidegree& b) {
    require_same_length(a, b);
    Multidegree out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = std::max(a[k], b[k]);
    }
    return out;
}

bool divides(const Multidegree& a, const Multidegree& b) {
    require_same_length(a, b);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) {
            return false;
        }
    }
    return true;
}

Multidegree monomial_quotient(const Multidegree& num, const Multidegree& den) {
    if (!divides(den, num)) {
        throw std::domain_error("monomial quotient: denominator does not divide numerator");
    }
    Multidegree out(num.size());
    for (std::size_t k = 0; k < num.size(); ++k) {
        out[k] = num[k] - den[k];
    }
    return out;
}

Multidegree monomial_product(const Multidegree& a, const Multidegree& b) {
    require_same_length(a, b);
    Multidegree out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = a[k] + b[k];
    }
    return out;
}

std::string format_monomial(const Multidegree& m, const std::vector<std::string>& variables) {
    std::string out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += k < variables.size() ? variables[k] : "x" + std::to_string(k + 1);
        if (m[k] > 1) {
            out += '^' + std::to_string(m[k]);
        }
    }
    return out.empty() ? "1" : out;
}

} // namespace monores

#include "monores/poly_matrix.hpp"

#include "monores/errors.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace monores {

namespace {

const Polynomial& zero_polynomial() {
    static const Polynomial zero;
    return zero;
}

} // namespace

PolyMatrix PolyMatrix::scalar(std::size_t n, const Polynomial& p) {
    PolyMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.set(i, i, p);
    }
    return out;
}

void PolyMatrix::check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

const Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    const auto it = entries_.find({r, c});
    return it == entries_.end() ? zero_polynomial() : it->second;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
    check_index(r, c);
    if (p.is_zero()) {
        entries_.erase({r, c});
    } else {
        entries_.insert_or_assign({r, c}, std::move(p));
    }
}

void PolyMatrix::add(std::size_t r, std::size_t c, const Polynomial& p) {
    check_index(r, c);
    if (p.is_zero()) {
        return;
    }
    auto [it, inserted] = entries_.try_emplace({r, c}, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) {
            entries_.erase(it);
        }
    }
}

std::vector<std::pair<std::size_t, Polynomial>> PolyMatrix::column(std::size_t c) const {
    std::vector<std::pair<std::size_t, Polynomial>> out;
    for (const auto& [index, value] : entries_) {
        if (index.second == c) {
            out.emplace_back(index.first, value);
        }
    }
    return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw structural_error("matrix sum of incompatible shapes");
    }
    for (const auto& [index, value] : o.entries_) {
        add(index.first, index.second, value);
    }
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw structural_error("matrix difference of incompatible shapes");
    }
    for (const auto& [index, value] : o.entries_) {
        add(index.first, index.second, -value);
    }
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw structural_error("matrix product of incompatible shapes " + std::to_string(a.rows_) + "x" +
                               std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                               std::to_string(b.cols_));
    }
    PolyMatrix out(a.rows_, b.cols_);
    for (const auto& [ia, va] : a.entries_) {
        // Row ia.second of b is a contiguous run in row-major order.
        for (auto it = b.entries_.lower_bound({ia.second, 0});
             it != b.entries_.end() && it->first.first == ia.second; ++it) {
            out.add(ia.first, it->first.second, va * it->second);
        }
    }
    return out;
}

std::optional<PolyMatrix::Index> PolyMatrix::first_difference(const PolyMatrix& other) const {
    std::optional<Index> best;
    auto consider = [&](const Index& index) {
        if (!best || index < *best) {
            best = index;
        }
    };
    for (const auto& [index, value] : entries_) {
        if (other.at(index.first, index.second) != value) {
            consider(index);
            break;
        }
    }
    for (const auto& [index, value] : other.entries_) {
        if (index.first >= rows_ || index.second >= cols_ || at(index.first, index.second) != value) {
            consider(index);
            break;
        }
    }
    return best;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw structural_error("scalar matrix product of incompatible shapes");
    }
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) {
                    out(i, j) += x * b(k, j);
                }
            }
        }
    }
    return out;
}

std::size_t RationalMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) {
        return 0;
    }
    std::vector<std::vector<mpz_class>> m(rows_, std::vector<mpz_class>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        mpz_class den = 1;
        for (std::size_t j = 0; j < cols_; ++j) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), (*this)(i, j).value().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            const mpq_class& v = (*this)(i, j).value();
            m[i][j] = v.get_num() * (den / v.get_den());
        }
    }

    mpz_class previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && m[p][c] == 0) {
            ++p;
        }
        if (p == rows_) {
            continue;
        }
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            for (std::size_t j = c + 1; j < cols_; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
            }
            m[i][c] = 0;
        }
        previous = m[r][c];
        ++r;
    }
    return r;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
    RationalMatrix m = *this;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && m(p, c).is_zero()) {
            ++p;
        }
        if (p == rows_) {
            continue;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap(m(p, j), m(r, j));
        }
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = 0; j < cols_; ++j) {
            m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m(i, c).is_zero()) {
                continue;
            }
            const Rational f = m(i, c);
            for (std::size_t j = 0; j < cols_; ++j) {
                m(i, j) -= f * m(r, j);
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(cols_);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -m(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix RationalMatrix::with_column(const std::vector<Rational>& v) const {
    if (v.size() != rows_) {
        throw structural_error("appended column has the wrong length");
    }
    RationalMatrix out(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(i, j) = (*this)(i, j);
        }
        out(i, cols_) = v[i];
    }
    return out;
}

} // namespace monores

#pragma once

#include "monores/polynomial.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

namespace monores {

/// Sparse matrix with polynomial entries. Entries are kept in row-major
/// order; zero entries are never stored.
class PolyMatrix {
public:
    using Index = std::pair<std::size_t, std::size_t>;
    using EntryMap = std::map<Index, Polynomial>;

    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    /// p times the n x n identity.
    static PolyMatrix scalar(std::size_t n, const Polynomial& p);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const EntryMap& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }

    const Polynomial& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Polynomial p);
    void add(std::size_t r, std::size_t c, const Polynomial& p);

    /// Nonzero entries of one column as (row, value) pairs.
    std::vector<std::pair<std::size_t, Polynomial>> column(std::size_t c) const;

    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    /// First position (row-major) where the two matrices differ.
    std::optional<Index> first_difference(const PolyMatrix& other) const;

private:
    void check_index(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    EntryMap entries_;
};

/// Dense matrix over Q, used for the scalar strands of multigraded complexes.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

    /// Rank by fraction-free (Bareiss) elimination after clearing row
    /// denominators. Pivot: first nonzero entry scanning rows downward in
    /// the leftmost unfinished column.
    std::size_t rank() const;

    /// Basis of the right null space, one vector per free column of the
    /// reduced row echelon form.
    std::vector<std::vector<Rational>> kernel_basis() const;

    /// The matrix with an extra column appended.
    RationalMatrix with_column(const std::vector<Rational>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace monores

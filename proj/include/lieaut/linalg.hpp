#pragma once

// Exact linear algebra over the rationals: scalars, dense matrices and
// canonical (RREF) subspaces.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lieaut {

/// Arbitrary-precision rational; GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses `['-'] digits ['/' digits]`. Throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Three-way comparison of rationals, usable as a lexicographic key.
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;

    void append_row(std::span<const Rational> r);
    Matrix transpose() const;
    bool is_zero() const;

    Vector operator*(std::span<const Rational> v) const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Lexicographic order on (rows, cols, entries).
    friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct EchelonForm {
    Matrix reduced;                   // RREF, zero rows removed
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form with leading ones; zero rows are dropped.
EchelonForm echelon(const Matrix& m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Inverse of a square matrix. Throws Error if singular.
Matrix inverse(const Matrix& m);

/// Canonical linear subspace of Q^n: basis rows are the RREF of any spanning set.
class Subspace {
public:
    Subspace() = default;

    /// Span of the rows of `generators`.
    static Subspace span(const Matrix& generators, std::string provenance = {});
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators,
                         std::string provenance = {});
    static Subspace zero(std::size_t ambient_dim, std::string provenance = "0");
    static Subspace full(std::size_t ambient_dim, std::string provenance = "g");
    /// Span of the unit vectors e_i for i in `indices`.
    static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices,
                               std::string provenance = {});

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    const std::string& provenance() const noexcept { return provenance_; }
    Subspace with_provenance(std::string provenance) const;

    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_dim_; }

    /// Membership test; throws AmbientMismatch on length mismatch.
    bool contains(std::span<const Rational> v) const;
    /// Inclusion `other ⊆ *this`.
    bool contains(const Subspace& other) const;

    /// Component of `v` left after subtracting its projection along the pivot rows.
    Vector reduce(std::span<const Rational> v) const;

    /// Equality ignores provenance.
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }
    /// Rows as rational strings, e.g. "(1, 0, -1/2)".
    std::string to_string() const;

private:
    std::size_t ambient_dim_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
    std::string provenance_;
};

/// Canonical order: by dimension, then lexicographically by RREF entries.
std::strong_ordering canonical_order(const Subspace& a, const Subspace& b);
bool canonical_less(const Subspace& a, const Subspace& b);

/// Null space of `m` inside Q^cols.
Subspace kernel(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, std::span<const Rational> v);

}  // namespace lieaut

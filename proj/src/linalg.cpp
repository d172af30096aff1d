#include "lieaut/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "lieaut/errors.hpp"

namespace lieaut {

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](std::size_t start) {
        std::size_t p = start;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == start) throw ParseError("expected digits in rational literal", start);
        return p;
    };
    if (pos < text.size() && text[pos] == '-') ++pos;
    const std::size_t num_end = digits(pos);
    std::size_t end = num_end;
    std::string_view den_text;
    if (end < text.size() && text[end] == '/') {
        const std::size_t den_end = digits(end + 1);
        den_text = text.substr(end + 1, den_end - end - 1);
        end = den_end;
    }
    if (end != text.size()) throw ParseError("unexpected character in rational literal", end);

    mpz_class num(std::string(text.substr(0, num_end)), 10);
    mpz_class den = 1;
    if (!den_text.empty()) {
        den = mpz_class(std::string(den_text), 10);
        if (den == 0) throw ParseError("zero denominator in rational literal", num_end + 1);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw AmbientMismatch("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::append_row(std::span<const Rational> r) {
    if (r.size() != cols_) throw AmbientMismatch("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const { return lieaut::is_zero(data_); }

Vector Matrix::operator*(std::span<const Rational> v) const {
    if (v.size() != cols_) throw AmbientMismatch("matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(v[c]) != 0) acc += (*this)(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw AmbientMismatch("matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AmbientMismatch("matrix sum size mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AmbientMismatch("matrix difference size mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (auto c = compare(a.data_[i], b.data_[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Elimination

EchelonForm echelon(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Rational lead = a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(0, cols);
    for (std::size_t i = 0; i < r; ++i) reduced.append_row(a.row(i));
    return {std::move(reduced), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return echelon(m).reduced; }

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error("inverse of a non-square matrix");
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto e = echelon(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const Matrix& generators, std::string provenance) {
    auto e = echelon(generators);
    Subspace s;
    s.ambient_dim_ = generators.cols();
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    s.provenance_ = std::move(provenance);
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators,
                        std::string provenance) {
    return span(Matrix::from_rows(generators, ambient_dim), std::move(provenance));
}

Subspace Subspace::zero(std::size_t ambient_dim, std::string provenance) {
    return span(Matrix(0, ambient_dim), std::move(provenance));
}

Subspace Subspace::full(std::size_t ambient_dim, std::string provenance) {
    return span(Matrix::identity(ambient_dim), std::move(provenance));
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices,
                              std::string provenance) {
    Matrix g(0, ambient_dim);
    for (auto i : indices) g.append_row(unit_vector(ambient_dim, i));
    return span(g, std::move(provenance));
}

Subspace Subspace::with_provenance(std::string provenance) const {
    Subspace s = *this;
    s.provenance_ = std::move(provenance);
    return s;
}

Vector Subspace::reduce(std::span<const Rational> v) const {
    if (v.size() != ambient_dim_) throw AmbientMismatch("vector length differs from ambient dimension");
    Vector w(v.begin(), v.end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Rational f = w[pivots_[r]];
        if (sgn(f) == 0) continue;
        auto b = basis_.row(r);
        for (std::size_t j = 0; j < ambient_dim_; ++j)
            if (sgn(b[j]) != 0) w[j] -= f * b[j];
    }
    return w;
}

bool Subspace::contains(std::span<const Rational> v) const { return lieaut::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw AmbientMismatch("subspace inclusion across ambient spaces");
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t r = 0; r < dim(); ++r) {
        if (r) os << ", ";
        os << "(";
        for (std::size_t c = 0; c < ambient_dim_; ++c) os << (c ? ", " : "") << basis_(r, c).get_str();
        os << ")";
    }
    os << ">";
    return os.str();
}

std::strong_ordering canonical_order(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    return a.basis() <=> b.basis();
}

bool canonical_less(const Subspace& a, const Subspace& b) { return canonical_order(a, b) < 0; }

Subspace kernel(const Matrix& m) {
    const std::size_t n = m.cols();
    auto e = echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens, "ker");
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("sum of subspaces in different ambient spaces");
    Matrix g = a.basis();
    for (std::size_t r = 0; r < b.dim(); ++r) g.append_row(b.basis().row(r));
    return Subspace::span(g);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw AmbientMismatch("intersection of subspaces in different ambient spaces");
    const std::size_t n = a.ambient_dim(), ka = a.dim(), kb = b.dim();
    // Solve sum_i alpha_i a_i - sum_j beta_j b_j = 0 for (alpha, beta).
    Matrix sys(n, ka + kb);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t c = 0; c < n; ++c) sys(c, i) = a.basis()(i, c);
    for (std::size_t j = 0; j < kb; ++j)
        for (std::size_t c = 0; c < n; ++c) sys(c, ka + j) = -b.basis()(j, c);
    const Subspace coeffs = kernel(sys);
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < coeffs.dim(); ++r) {
        Vector v(n);
        for (std::size_t i = 0; i < ka; ++i) {
            const Rational& alpha = coeffs.basis()(r, i);
            if (sgn(alpha) == 0) continue;
            for (std::size_t c = 0; c < n; ++c) v[c] += alpha * a.basis()(i, c);
        }
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

bool contains(const Subspace& a, std::span<const Rational> v) { return a.contains(v); }

}  // namespace lieaut

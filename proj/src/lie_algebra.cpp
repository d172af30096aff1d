#include "lieaut/lie_algebra.hpp"

#include <algorithm>

#include "lieaut/errors.hpp"
#include "lieaut/kernels.hpp"

namespace lieaut {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Rational> tensor)
    : name_(std::move(name)), basis_names_(std::move(basis_names)), n_(basis_names_.size()), c_(std::move(tensor)) {
    if (c_.size() != n_ * n_ * n_) throw Error("structure tensor size does not match basis length");
}

LieAlgebra LieAlgebra::abelian(std::size_t n, std::string name) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    return LieAlgebra(std::move(name), std::move(names), std::vector<Rational>(n * n * n));
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    const auto* p = c_.data() + (i * n_ + j) * n_;
    return Vector(p, p + n_);
}

Vector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != n_ || y.size() != n_) throw AmbientMismatch("bracket argument length differs from dimension");
    Vector out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Rational xy = x[i] * y[j];
            const auto* row = c_.data() + (i * n_ + j) * n_;
            for (std::size_t k = 0; k < n_; ++k)
                if (sgn(row[k]) != 0) out[k] += xy * row[k];
        }
    }
    return out;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
    LieAlgebra g = *this;
    g.name_ = std::move(name);
    return g;
}

ValidationReport validate(const LieAlgebra& g) {
    ValidationReport report;
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.c(i, j, k) != -g.c(j, i, k)) report.antisymmetry.push_back({i, j, k});
    report.jacobi = kernels::jacobi_residuals_parallel(g);
    return report;
}

Matrix ad(const LieAlgebra& g, std::span<const Rational> x) {
    const std::size_t n = g.dim();
    if (x.size() != n) throw AmbientMismatch("ad argument length differs from dimension");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(g.c(i, j, k)) != 0) m(k, j) += x[i] * g.c(i, j, k);
    }
    return m;
}

namespace {

void require_ambient(const LieAlgebra& g, const Subspace& s) {
    if (s.ambient_dim() != g.dim()) throw AmbientMismatch("subspace ambient dimension differs from algebra dimension");
}

}  // namespace

Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    require_ambient(g, a);
    require_ambient(g, b);
    Matrix gens(0, g.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t s = 0; s < b.dim(); ++s) gens.append_row(g.bracket(a.basis().row(r), b.basis().row(s)));
    return Subspace::span(gens);
}

Subspace bracket_preimage(const LieAlgebra& g, const Subspace& within, const Subspace& of,
                          const Subspace& target) {
    require_ambient(g, within);
    require_ambient(g, of);
    require_ambient(g, target);
    const std::size_t n = g.dim(), k = within.dim();
    // x = sum_r alpha_r w_r; the residue of [x, b] modulo target is linear in alpha.
    Matrix sys(of.dim() * n, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < of.dim(); ++s) {
            const Vector res = target.reduce(g.bracket(within.basis().row(r), of.basis().row(s)));
            for (std::size_t c = 0; c < n; ++c) sys(s * n + c, r) = res[c];
        }
    const Subspace alphas = kernel(sys);
    Matrix gens(0, n);
    for (std::size_t a = 0; a < alphas.dim(); ++a) {
        Vector x(n);
        for (std::size_t r = 0; r < k; ++r) {
            const Rational& coeff = alphas.basis()(a, r);
            if (sgn(coeff) == 0) continue;
            for (std::size_t c = 0; c < n; ++c) x[c] += coeff * within.basis()(r, c);
        }
        gens.append_row(x);
    }
    return Subspace::span(gens);
}

Subspace center(const LieAlgebra& g) {
    const auto full = Subspace::full(g.dim());
    return bracket_preimage(g, full, full, Subspace::zero(g.dim())).with_provenance("Z(g)");
}

Subspace centralizer(const LieAlgebra& g, const Subspace& within, const Subspace& of) {
    return bracket_preimage(g, within, of, Subspace::zero(g.dim()));
}

Subspace normalizer(const LieAlgebra& g, const Subspace& within, const Subspace& of) {
    return bracket_preimage(g, within, of, of);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
    return s.contains(bracket_subspaces(g, s, s));
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
    return s.contains(bracket_subspaces(g, Subspace::full(g.dim()), s));
}

bool is_solvable(const LieAlgebra& g, const Subspace& s) {
    Subspace cur = s;
    while (!cur.is_zero()) {
        Subspace next = bracket_subspaces(g, cur, cur);
        if (next.dim() == cur.dim()) return false;
        cur = std::move(next);
    }
    return true;
}

bool is_nilpotent(const LieAlgebra& g, const Subspace& s) {
    Subspace cur = s;
    while (!cur.is_zero()) {
        Subspace next = bracket_subspaces(g, s, cur);
        if (next.dim() == cur.dim()) return false;
        cur = std::move(next);
    }
    return true;
}

const char* to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::derived: return "derived";
        case SeriesKind::lower_central: return "lower_central";
        case SeriesKind::upper_central: return "upper_central";
    }
    return "?";
}

namespace {

std::string derived_label(std::size_t k) {
    if (k == 0) return "g";
    if (k <= 3) return "g" + std::string(k, '\'');
    return "g^(" + std::to_string(k) + ")";
}

}  // namespace

SeriesReport derived_series(const LieAlgebra& g) {
    SeriesReport rep{SeriesKind::derived, {}, false};
    Subspace cur = Subspace::full(g.dim(), "g");
    rep.terms.push_back(cur);
    for (std::size_t k = 1;; ++k) {
        Subspace next = bracket_subspaces(g, cur, cur).with_provenance(derived_label(k));
        if (next == cur) break;
        rep.terms.push_back(next);
        cur = std::move(next);
    }
    rep.stabilized = true;
    return rep;
}

SeriesReport lower_central_series(const LieAlgebra& g) {
    SeriesReport rep{SeriesKind::lower_central, {}, false};
    const Subspace full = Subspace::full(g.dim(), "g");
    Subspace cur = full;
    rep.terms.push_back(cur);
    for (std::size_t k = 2;; ++k) {
        Subspace next = bracket_subspaces(g, full, cur).with_provenance("LC" + std::to_string(k) + "(g)");
        if (next == cur) break;
        rep.terms.push_back(next);
        cur = std::move(next);
    }
    rep.stabilized = true;
    return rep;
}

SeriesReport upper_central_series(const LieAlgebra& g) {
    SeriesReport rep{SeriesKind::upper_central, {}, false};
    const std::size_t n = g.dim();
    Subspace cur = Subspace::zero(n);
    for (std::size_t k = 1;; ++k) {
        const Quotient q = quotient(g, cur);
        const Subspace z = center(q.algebra);
        Matrix gens = cur.basis();
        for (std::size_t r = 0; r < z.dim(); ++r) {
            Vector v(n);
            for (std::size_t a = 0; a < z.ambient_dim(); ++a)
                if (sgn(z.basis()(r, a)) != 0)
                    for (std::size_t c = 0; c < n; ++c) v[c] += z.basis()(r, a) * q.lift(a, c);
            gens.append_row(v);
        }
        Subspace next = Subspace::span(gens, "Z" + std::to_string(k) + "(g)");
        if (k > 1 && next == cur) break;
        rep.terms.push_back(next);
        if (next == cur) break;
        cur = std::move(next);
    }
    rep.stabilized = true;
    return rep;
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
    require_ambient(g, ideal);
    if (!is_ideal(g, ideal)) throw NotAnIdeal("subspace " + ideal.to_string() + " is not an ideal");
    const std::size_t n = g.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ideal.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) complement.push_back(c);
    const std::size_t m = complement.size();

    Matrix projection(m, n), lift(m, n);
    for (std::size_t a = 0; a < m; ++a) lift(a, complement[a]) = 1;
    for (std::size_t c = 0; c < n; ++c) {
        const Vector red = ideal.reduce(unit_vector(n, c));
        for (std::size_t a = 0; a < m; ++a) projection(a, c) = red[complement[a]];
    }

    std::vector<std::string> names;
    for (auto c : complement) names.push_back(g.basis_names()[c]);
    std::vector<Rational> tensor(m * m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const Vector img = projection * g.basis_bracket(complement[a], complement[b]);
            for (std::size_t k = 0; k < m; ++k) tensor[(a * m + b) * m + k] = img[k];
        }
    return {LieAlgebra(g.name() + "/" + (ideal.provenance().empty() ? "I" : ideal.provenance()), std::move(names),
                       std::move(tensor)),
            std::move(projection), std::move(lift)};
}

Matrix killing_form(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational acc = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (sgn(g.c(i, a, b)) != 0 && sgn(g.c(j, b, a)) != 0) acc += g.c(i, a, b) * g.c(j, b, a);
            k(i, j) = acc;
            k(j, i) = acc;
        }
    return k;
}

namespace {

/// { x in within : K(x, y) = 0 for every basis vector y of against }.
Subspace killing_orthogonal(const Matrix& kf, const Subspace& within, const Subspace& against) {
    const std::size_t n = kf.rows();
    Matrix sys(against.dim(), within.dim());
    for (std::size_t s = 0; s < against.dim(); ++s) {
        const Vector ky = kf * against.basis().row(s);
        for (std::size_t r = 0; r < within.dim(); ++r) {
            Rational acc = 0;
            for (std::size_t c = 0; c < n; ++c) acc += within.basis()(r, c) * ky[c];
            sys(s, r) = acc;
        }
    }
    const Subspace alphas = kernel(sys);
    Matrix gens(0, n);
    for (std::size_t a = 0; a < alphas.dim(); ++a) {
        Vector x(n);
        for (std::size_t r = 0; r < within.dim(); ++r)
            for (std::size_t c = 0; c < n; ++c) x[c] += alphas.basis()(a, r) * within.basis()(r, c);
        gens.append_row(x);
    }
    return Subspace::span(gens);
}

}  // namespace

Subspace radical(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const Subspace full = Subspace::full(n);
    const Subspace derived = bracket_subspaces(g, full, full);
    Subspace r = killing_orthogonal(killing_form(g), full, derived).with_provenance("R(g)");
    if (!is_ideal(g, r) || !is_solvable(g, r)) throw Error("radical postcondition failed: not a solvable ideal");
    return r;
}

NilradicalResult nilradical_approx(const LieAlgebra& g) {
    const Matrix kf = killing_form(g);
    Subspace cur = radical(g);
    std::size_t iterations = 0;
    for (;;) {
        Subspace next = killing_orthogonal(kf, cur, cur);
        ++iterations;
        if (next == cur) break;
        cur = std::move(next);
    }
    const auto status = is_nilpotent(g, cur) ? NilradicalStatus::exact : NilradicalStatus::stalled;
    return {cur.with_provenance("N(g)"), status, iterations};
}

std::vector<Matrix> derivations(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    auto var = [n](std::size_t row, std::size_t col) { return row * n + col; };
    // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0, component m.
    Matrix sys(0, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                Vector eq(n * n);
                for (std::size_t k = 0; k < n; ++k) {
                    if (sgn(g.c(i, j, k)) != 0) eq[var(m, k)] += g.c(i, j, k);
                    if (sgn(g.c(k, j, m)) != 0) eq[var(k, i)] -= g.c(k, j, m);
                    if (sgn(g.c(i, k, m)) != 0) eq[var(k, j)] -= g.c(i, k, m);
                }
                if (!is_zero(eq)) sys.append_row(eq);
            }
    const Subspace sol = kernel(sys);
    std::vector<Matrix> out;
    for (std::size_t r = 0; r < sol.dim(); ++r) {
        Matrix d(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d(a, b) = sol.basis()(r, var(a, b));
        out.push_back(std::move(d));
    }
    return out;
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector lhs = d * g.basis_bracket(i, j);
            Vector rhs = g.bracket(d.column(i), unit_vector(n, j));
            const Vector second = g.bracket(unit_vector(n, i), d.column(j));
            for (std::size_t k = 0; k < n; ++k) rhs[k] += second[k];
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_automorphism(const LieAlgebra& g, const Matrix& a) {
    const std::size_t n = g.dim();
    if (a.rows() != n || a.cols() != n || rank(a) != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a * g.basis_bracket(i, j) != g.bracket(a.column(i), a.column(j))) return false;
    return true;
}

Matrix exp_ad_nilpotent(const LieAlgebra& g, std::span<const Rational> x, const Rational& t) {
    const std::size_t n = g.dim();
    const Matrix m = ad(g, x);
    Matrix result = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    Rational coeff = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * m;
        if (power.is_zero()) return result;
        if (k == n) break;
        coeff = coeff * t / Rational(static_cast<long>(k));
        result = result + coeff * power;
    }
    throw NotNilpotent("ad_x is not nilpotent: (ad_x)^n != 0");
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& new_basis, std::vector<std::string> names) {
    const std::size_t n = g.dim();
    if (new_basis.rows() != n || new_basis.cols() != n) throw AmbientMismatch("change of basis must be n x n");
    const Matrix to_new = inverse(new_basis.transpose());
    if (names.empty()) {
        for (std::size_t a = 0; a < n; ++a) {
            std::string name = "b" + std::to_string(a + 1);
            for (std::size_t c = 0; c < n; ++c)
                if (new_basis.row_vector(a) == unit_vector(n, c)) name = g.basis_names()[c];
            names.push_back(std::move(name));
        }
    }
    std::vector<Rational> tensor(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Vector img = to_new * g.bracket(new_basis.row(a), new_basis.row(b));
            for (std::size_t k = 0; k < n; ++k) tensor[(a * n + b) * n + k] = img[k];
        }
    return LieAlgebra(g.name(), std::move(names), std::move(tensor));
}

Restriction restrict_to(const LieAlgebra& g, const Subspace& s) {
    require_ambient(g, s);
    if (!is_subalgebra(g, s)) throw Error("subspace " + s.to_string() + " is not a subalgebra");
    const std::size_t k = s.dim();
    std::vector<std::string> names;
    for (std::size_t r = 0; r < k; ++r) names.push_back("s" + std::to_string(r + 1));
    std::vector<Rational> tensor(k * k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const Vector v = g.bracket(s.basis().row(a), s.basis().row(b));
            // RREF basis: the coordinate along row r is the entry at its pivot.
            for (std::size_t r = 0; r < k; ++r) tensor[(a * k + b) * k + r] = v[s.pivots()[r]];
        }
    return {LieAlgebra(g.name() + "|" + s.provenance(), std::move(names), std::move(tensor)), s.basis()};
}

Subspace lift(const Subspace& inner, const Matrix& embedding, std::string provenance) {
    if (inner.ambient_dim() != embedding.rows()) throw AmbientMismatch("lift: subspace and embedding disagree");
    Matrix gens(0, embedding.cols());
    for (std::size_t r = 0; r < inner.dim(); ++r) {
        Vector v(embedding.cols());
        for (std::size_t a = 0; a < embedding.rows(); ++a)
            if (sgn(inner.basis()(r, a)) != 0)
                for (std::size_t c = 0; c < embedding.cols(); ++c) v[c] += inner.basis()(r, a) * embedding(a, c);
        gens.append_row(v);
    }
    return Subspace::span(gens, std::move(provenance));
}

}  // namespace lieaut

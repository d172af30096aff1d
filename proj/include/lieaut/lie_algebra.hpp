#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieaut/linalg.hpp"

namespace lieaut {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [Q_i, Q_j] = c(i,j,k) Q_k in a fixed basis. Immutable.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// `tensor` holds c(i,j,k) at index (i*n + j)*n + k.
    LieAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Rational> tensor);

    static LieAlgebra abelian(std::size_t n, std::string name = "abelian");

    std::size_t dim() const noexcept { return n_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& basis_names() const noexcept { return basis_names_; }
    const std::vector<Rational>& tensor() const noexcept { return c_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

    /// Coordinates of [Q_i, Q_j].
    Vector basis_bracket(std::size_t i, std::size_t j) const;
    Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

    LieAlgebra renamed(std::string name) const;

private:
    std::string name_;
    std::vector<std::string> basis_names_;
    std::size_t n_ = 0;
    std::vector<Rational> c_;
};

struct AntisymmetryViolation {
    std::size_t i, j, k;
    friend bool operator==(const AntisymmetryViolation&, const AntisymmetryViolation&) = default;
};

/// Nonzero value of the Jacobi sum for basis triple (i, j, l) in component m.
struct JacobiResidual {
    std::size_t i, j, l, m;
    Rational value;
    friend bool operator==(const JacobiResidual&, const JacobiResidual&) = default;
};

struct ValidationReport {
    std::vector<AntisymmetryViolation> antisymmetry;
    std::vector<JacobiResidual> jacobi;
    bool valid() const noexcept { return antisymmetry.empty() && jacobi.empty(); }
};

/// Exhaustive antisymmetry and Jacobi check over all basis triples.
ValidationReport validate(const LieAlgebra& g);

/// Matrix of y -> [x, y]; column j holds [x, Q_j].
Matrix ad(const LieAlgebra& g, std::span<const Rational> x);

/// Span of [a_r, b_s] over basis pairs.
Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// { x in within : [x, b] in target for every basis vector b of of }.
/// Centralizer, normalizer and the three-megaideal construction are all instances.
Subspace bracket_preimage(const LieAlgebra& g, const Subspace& within, const Subspace& of,
                          const Subspace& target);

Subspace center(const LieAlgebra& g);
Subspace centralizer(const LieAlgebra& g, const Subspace& within, const Subspace& of);
Subspace normalizer(const LieAlgebra& g, const Subspace& within, const Subspace& of);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
/// Derived series of the subalgebra s reaches 0.
bool is_solvable(const LieAlgebra& g, const Subspace& s);
/// Lower central series of the subalgebra s reaches 0.
bool is_nilpotent(const LieAlgebra& g, const Subspace& s);

enum class SeriesKind { derived, lower_central, upper_central };
const char* to_string(SeriesKind kind);

struct SeriesReport {
    SeriesKind kind;
    std::vector<Subspace> terms;
    bool stabilized = false;
};

/// g, g', g'', ... up to the first repeated term (not repeated in `terms`).
SeriesReport derived_series(const LieAlgebra& g);
/// g, [g,g], [g,[g,g]], ...
SeriesReport lower_central_series(const LieAlgebra& g);
/// Z_1 ⊆ Z_2 ⊆ ..., each obtained as the preimage of the center of g / Z_k.
SeriesReport upper_central_series(const LieAlgebra& g);

struct Quotient {
    LieAlgebra algebra;
    Matrix projection;  // (n-k) x n, g-coordinates -> quotient coordinates
    Matrix lift;        // (n-k) x n, row a = g-coordinates of the a-th complement basis vector
};

/// Quotient by an ideal on the complement spanned by the non-pivot coordinates
/// of the ideal's RREF basis. Throws NotAnIdeal.
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

/// K(i,j) = trace(ad_{Q_i} ad_{Q_j}).
Matrix killing_form(const LieAlgebra& g);

/// Maximal solvable ideal, as the Killing-orthogonal complement of [g,g].
Subspace radical(const LieAlgebra& g);

enum class NilradicalStatus { exact, stalled };

struct NilradicalResult {
    Subspace space;
    NilradicalStatus status;
    std::size_t iterations = 0;
};

/// Over-approximation of the nilradical by trace-form refinement of the radical.
/// `exact` means the returned ideal is nilpotent and therefore equals the nilradical.
NilradicalResult nilradical_approx(const LieAlgebra& g);

/// Basis of the derivation algebra, each as an n x n matrix acting on column coordinates.
std::vector<Matrix> derivations(const LieAlgebra& g);

bool is_derivation(const LieAlgebra& g, const Matrix& d);
/// A is invertible and A[x,y] = [Ax, Ay] on all basis pairs.
bool is_automorphism(const LieAlgebra& g, const Matrix& a);

/// exp(t ad_x) as a finite sum. Throws NotNilpotent unless (ad_x)^n = 0.
Matrix exp_ad_nilpotent(const LieAlgebra& g, std::span<const Rational> x, const Rational& t);

/// Same algebra in a new basis; row a of `new_basis` holds the old coordinates of the a-th new vector.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& new_basis, std::vector<std::string> names = {});

struct Restriction {
    LieAlgebra algebra;
    Matrix embedding;  // k x n, row r = g-coordinates of the r-th basis vector of the subalgebra
};

/// Subalgebra on the RREF basis of s. Throws Error if s is not closed under the bracket.
Restriction restrict_to(const LieAlgebra& g, const Subspace& s);

/// Image in g of a subspace given in subalgebra coordinates.
Subspace lift(const Subspace& inner, const Matrix& embedding, std::string provenance = {});

}  // namespace lieaut

#pragma once

// Automorphism groups constrained by a megaideal flag: adapted bases, the
// block-triangular matrix shape, the quadratic bracket-compatibility system,
// its single-unknown elimination, and the coordinate subspaces that the
// resulting parametrized group leaves invariant.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieaut/lie_algebra.hpp"
#include "lieaut/megaideal.hpp"
#include "lieaut/poly.hpp"

namespace lieaut {

struct AdaptedBasis {
    /// Row a holds the original coordinates of the a-th adapted basis vector.
    Matrix change_of_basis;
    /// Chain 0 ⊂ i_1 ⊂ ... ⊂ g (0 omitted), each a coordinate prefix in the adapted basis.
    std::vector<Subspace> flag;
    std::vector<std::size_t> block_sizes;
    /// Non-chain lattice members that are coordinate spans in the adapted basis, as index sets.
    std::vector<std::vector<std::size_t>> coordinate_constraints;
};

/// Greedy maximal chain through the lattice (smallest dimension first, ties in canonical order).
AdaptedBasis adapted_basis(const LieAlgebra& g, const MegaidealLattice& lattice);

/// Express g in the adapted basis.
LieAlgebra adapted_algebra(const LieAlgebra& g, const AdaptedBasis& basis);

struct SideCondition {
    std::string text;         // e.g. "a11 != 0" or "det(a[1..3][1..3]) != 0"
    std::optional<Poly> poly;  // expanded when the block is small enough
};

struct AutShape {
    std::size_t n = 0;
    Matrix change_of_basis;
    std::vector<std::vector<bool>> unknown;  // unknown[i][j]: entry (i,j) may be nonzero
    VarList unknowns;                        // row-major names of the unknown entries
    std::vector<Poly> entries;               // n*n row-major: a variable or zero
    std::vector<SideCondition> side_conditions;

    const Poly& entry(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    std::size_t unknown_count() const { return unknowns->size(); }
};

/// Zeros exactly where a flag member (or coordinate constraint) would be left;
/// one nonvanishing determinant per diagonal block.
AutShape shape_from_flag(const AdaptedBasis& basis);

struct PolySystem {
    VarList unknowns;
    std::vector<Poly> equations;
    std::vector<std::string> labels;  // "(i,j,k)": component k of A[Q_i,Q_j] - [AQ_i,AQ_j], 1-based
    std::vector<SideCondition> inequations;
    AutShape shape;
};

/// A[Q_i,Q_j] - [AQ_i, AQ_j] = 0 componentwise, in the adapted basis; identical zeros dropped.
PolySystem structure_equations(const LieAlgebra& g, const AutShape& shape);

struct AutParametrization {
    VarList unknowns;
    std::vector<std::pair<std::string, Poly>> assignments;  // in unknown order
    std::vector<std::string> free_parameters;
    std::vector<Poly> residual_equations;
    std::vector<SideCondition> side_conditions;  // with assignments substituted
    std::vector<std::string> audit;              // every division and substitution performed
    AutShape shape;
    std::vector<Poly> matrix;  // n*n row-major entries in the free parameters

    bool solved() const noexcept { return residual_equations.empty(); }
    std::size_t n() const noexcept { return shape.n; }
    const Poly& entry(std::size_t i, std::size_t j) const { return matrix[i * shape.n + j]; }
    std::optional<Poly> assignment(const std::string& unknown) const;

    /// Matrix in the adapted basis for given free-parameter values (same order as free_parameters).
    Matrix instantiate(const std::vector<Rational>& free_values) const;
    /// The same automorphism in the original basis.
    Matrix instantiate_original(const std::vector<Rational>& free_values) const;
};

/// Repeated elimination of one unknown from an equation linear in it, whose
/// coefficient is a nonzero rational or a monomial in side-condition-nonzero
/// unknowns that divides the rest exactly. Never divides by anything else.
AutParametrization triangular_solve(const PolySystem& sys);

/// A·v stays in s identically in the free parameters, for every basis vector v of s
/// (s in original coordinates). Throws ResidualSystem for an unsolved parametrization.
bool check_invariant(const AutParametrization& param, const Subspace& s);

/// All coordinate spans of the adapted basis (including 0 and g) left invariant by
/// the parametrized group, in original coordinates and canonical order.
/// Throws ResidualSystem if unsolved, Error if dim > max_dim.
std::vector<Subspace> enumerate_coordinate_megaideals(const LieAlgebra& g, const AutParametrization& param,
                                                      const AdaptedBasis& basis, std::size_t max_dim = 16);

struct InnerCheck {
    std::string element;  // basis element name
    Rational t;
    bool nilpotent = false;
    bool matched = false;
    std::string detail;
};

struct InnerConsistencyReport {
    std::vector<InnerCheck> checks;
    bool consistent() const;
};

/// For every basis element with nilpotent ad and t in {1, -1, 1/2}, checks that
/// exp(t ad_x) is a member of the parametrized family.
InnerConsistencyReport inner_consistency(const LieAlgebra& g, const AutParametrization& param);

}  // namespace lieaut

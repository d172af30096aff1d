#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version that must return identical results in identical order;
// the test suite and the benchmark compare the two.

#include <cstdint>
#include <vector>

#include "lieaut/lie_algebra.hpp"
#include "lieaut/vectorfield.hpp"

namespace lieaut::kernels {

/// All nonzero Jacobi sums J(i,j,l)_m over ordered basis triples, in (i,j,l,m) order.
std::vector<JacobiResidual> jacobi_residuals_serial(const LieAlgebra& g);
std::vector<JacobiResidual> jacobi_residuals_parallel(const LieAlgebra& g);

/// `column_support[j]` has bit i set when entry (i,j) of a matrix is not identically zero.
/// Returns, in increasing order, every mask S of n bits such that the coordinate span
/// of S is mapped into itself: column_support[j] & ~S == 0 for all j in S.
std::vector<std::uint32_t> invariant_coordinate_masks_serial(const std::vector<std::uint32_t>& column_support);
std::vector<std::uint32_t> invariant_coordinate_masks_parallel(const std::vector<std::uint32_t>& column_support);

/// Brackets [Q_i, Q_j] for i < j, in row-major pair order.
std::vector<PolyVectorField> bracket_table_serial(const std::vector<PolyVectorField>& fields);
std::vector<PolyVectorField> bracket_table_parallel(const std::vector<PolyVectorField>& fields);

/// Components of A[Q_i,Q_j] - [AQ_i, AQ_j] for i < j and every k, in (i,j,k) order,
/// where `entries` is the row-major n x n matrix A of polynomials over `vars`.
std::vector<Poly> structure_residuals_serial(const LieAlgebra& g, const std::vector<Poly>& entries,
                                             const VarList& vars);
std::vector<Poly> structure_residuals_parallel(const LieAlgebra& g, const std::vector<Poly>& entries,
                                               const VarList& vars);

}  // namespace lieaut::kernels

#pragma once

// Construction of megaideals (subspaces invariant under every automorphism)
// from known ones, without computing the automorphism group.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieaut/lie_algebra.hpp"

namespace lieaut {

struct LatticeMember {
    Subspace space;
    std::string provenance;            // first construction that produced it
    std::vector<std::string> aliases;  // later constructions, capped at kMaxAliases
    std::size_t alias_count = 0;       // total number of later constructions
    bool essential = true;

    static constexpr std::size_t kMaxAliases = 8;
};

struct MegaidealLattice {
    std::vector<LatticeMember> members;  // canonical order: dimension, then RREF entries
    std::size_t passes = 0;              // passes executed, including the final one that added nothing
    std::size_t productive_passes = 0;   // passes that added at least one member
    bool fixpoint = false;
    bool budget_exceeded = false;

    const LatticeMember* find(const Subspace& s) const;
    bool contains(const Subspace& s) const { return find(s) != nullptr; }
    std::vector<Subspace> spaces() const;
};

struct ClosureOptions {
    std::size_t budget = 4;
    /// Enumerate every member triple for the three-ideal construction instead of
    /// only those with dim(i2) <= dim(i1).
    bool full_prop34 = false;
    bool parallel = true;
};

/// { x in i0 : [x, b] in i2 for every basis vector b of i1 }.
Subspace prop34(const LieAlgebra& g, const Subspace& i0, const Subspace& i1, const Subspace& i2);

struct Prop34Explanation {
    Subspace result;
    /// One line per pivot basis vector of i0 that is not in the result, naming a
    /// bracket that leaves i2.
    std::vector<std::string> exclusions;
};

Prop34Explanation explain_prop34(const LieAlgebra& g, const Subspace& i0, const Subspace& i1, const Subspace& i2);

/// Fixpoint closure of {0, g} ∪ seeds under series, center, radical, exact
/// nilradical (of g and of every member as a subalgebra), pairwise bracket, sum,
/// intersection, centralizer and normalizer, and the three-ideal construction.
/// Throws NotAnIdeal if a seed is not an ideal.
MegaidealLattice closure(const LieAlgebra& g, const std::vector<Subspace>& seeds = {},
                         const ClosureOptions& options = {});

/// Flags as inessential every proper member equal to the sum of two other proper members.
MegaidealLattice essential_filter(MegaidealLattice lattice);

struct MegaidealVerdict {
    bool is_ideal = false;
    /// Necessary condition only: invariance under the derivation algebra.
    bool is_derivation_invariant = false;
    std::vector<std::string> notes;
};

MegaidealVerdict verify_megaideal(const LieAlgebra& g, const Subspace& s);

/// "2*F1 - G1" style rendering of a vector in the algebra's basis names.
std::string format_element(const LieAlgebra& g, std::span<const Rational> v);

}  // namespace lieaut

#pragma once

// Polynomial vector fields, their brackets and push-forwards under polynomial
// point maps, and the realization of the wave-equation equivalence algebra
// on the coordinates (t, x, u, u_x, f, g).

#include <cstddef>
#include <string>
#include <vector>

#include "lieaut/lie_algebra.hpp"
#include "lieaut/poly.hpp"

namespace lieaut {

class PolyVectorField {
public:
    PolyVectorField() = default;
    explicit PolyVectorField(VarList vars);
    PolyVectorField(VarList vars, std::vector<Poly> components);

    const VarList& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return components_.size(); }
    const Poly& component(std::size_t i) const { return components_.at(i); }
    const std::vector<Poly>& components() const noexcept { return components_; }

    /// Action as a derivation: Q(p) = sum_j Q^j dp/dz_j.
    Poly apply(const Poly& p) const;
    bool is_zero() const;

    friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
    friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
    friend PolyVectorField operator*(const Rational& s, const PolyVectorField& a);
    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b);

    /// e.g. "(t)∂t + (-2*f)∂f"; "0" for the zero field.
    std::string to_string() const;

private:
    VarList vars_;
    std::vector<Poly> components_;
};

struct NamedField {
    std::string name;
    PolyVectorField field;
};

/// [Q1, Q2]^i = Q1(Q2^i) - Q2(Q1^i). Throws Error on differing variable lists.
PolyVectorField lie_bracket(const PolyVectorField& a, const PolyVectorField& b);

/// Coordinates (t, x, u, u_x, f, g) of the wave-equation class.
VarList family_variables();

enum class FamilyKind { Du, Dt, Pt, D, G, F1, F2 };

/// Parses "Du", "Dt", "Pt", "D", "G", "F1", "F2".
FamilyKind parse_family_kind(std::string_view name);

/// Spanning field of the equivalence algebra. `param` (phi for D, psi for G) must
/// be a polynomial in x alone; it is ignored for the other kinds.
PolyVectorField realize_family(FamilyKind kind, const Poly& param = {});

/// Structure constants of the span of `fields` in the given order.
/// Throws LinearlyDependent or NotClosed.
LieAlgebra extract_structure(const std::vector<NamedField>& fields, std::string name = "extracted");

/// Invertible polynomial point transformation with a polynomial inverse.
class PointMap {
public:
    /// Checks forward∘inverse = inverse∘forward = id exactly; throws LoadError otherwise.
    static PointMap create(VarList vars, std::vector<Poly> forward, std::vector<Poly> inverse);
    static PointMap identity(VarList vars);

    const VarList& vars() const noexcept { return vars_; }
    const std::vector<Poly>& forward() const noexcept { return forward_; }
    const std::vector<Poly>& inverse() const noexcept { return inverse_; }

    /// `second` applied after `first`.
    static PointMap compose(const PointMap& first, const PointMap& second);

private:
    PointMap(VarList vars, std::vector<Poly> forward, std::vector<Poly> inverse)
        : vars_(std::move(vars)), forward_(std::move(forward)), inverse_(std::move(inverse)) {}

    VarList vars_;
    std::vector<Poly> forward_;
    std::vector<Poly> inverse_;
};

/// (T_*Q)^i = sum_j Q^j dT^i/dz_j, re-expressed in the new coordinates via the inverse.
PolyVectorField pushforward(const PointMap& map, const PolyVectorField& q);

struct HomomorphismFailure {
    std::string left, right;
    PolyVectorField expected;  // T_*[Q, Q']
    PolyVectorField actual;    // [T_*Q, T_*Q']
};

struct HomomorphismReport {
    std::size_t pairs_checked = 0;
    std::vector<HomomorphismFailure> failures;
    bool ok() const noexcept { return failures.empty(); }
};

/// Checks [T_*Q, T_*Q'] = T_*[Q, Q'] for every unordered pair of fields.
HomomorphismReport verify_homomorphism(const PointMap& map, const std::vector<NamedField>& fields);

}  // namespace lieaut

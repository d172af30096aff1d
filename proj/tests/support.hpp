#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "lieaut/io.hpp"
#include "lieaut/lie_algebra.hpp"
#include "lieaut/linalg.hpp"

namespace testing {

using namespace lieaut;

inline std::string data_path(const std::string& name) { return std::string(LIEAUT_DATA_DIR) + "/" + name; }

inline LieAlgebra fixture(const std::string& name) { return parse_algebra(read_file(data_path(name))); }

/// Span of basis vectors given 1-based (q1 -> 1).
inline Subspace qspan(std::size_t n, std::initializer_list<std::size_t> one_based) {
    std::vector<Vector> gens;
    for (auto i : one_based) gens.push_back(unit_vector(n, i - 1));
    return Subspace::span(n, gens);
}

/// n/d in lowest terms (the two-argument GMP constructor does not reduce).
inline Rational ratio(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

struct Bracket {
    std::size_t i, j;  // 0-based
    std::vector<std::pair<std::size_t, Rational>> result;
};

/// Builds the tensor directly from a bracket list, filling in antisymmetric partners.
inline LieAlgebra from_table(const std::string& name, std::vector<std::string> basis, const std::vector<Bracket>& table) {
    const std::size_t n = basis.size();
    std::vector<Rational> c(n * n * n);
    for (const auto& b : table)
        for (const auto& [k, v] : b.result) {
            c[(b.i * n + b.j) * n + k] += v;
            c[(b.j * n + b.i) * n + k] -= v;
        }
    return LieAlgebra(name, std::move(basis), std::move(c));
}

/// The M5 table written straight from the commutation relations, independent of the JSON loader.
inline LieAlgebra m5_by_hand() {
    // q1..q5 = G1, F1, F2, Pt, Dt
    return from_table("m5", {"G1", "F1", "F2", "Pt", "Dt"},
                      {{3, 4, {{3, 1}}}, {4, 1, {{1, 1}}}, {4, 2, {{2, 2}}}, {3, 1, {{0, 1}}}, {3, 2, {{1, 2}}}});
}

/// sl2 in the basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieAlgebra sl2_ehf() {
    return from_table("sl2", {"e", "h", "f"}, {{1, 0, {{0, 2}}}, {1, 2, {{2, -2}}}, {0, 2, {{1, 1}}}});
}

inline LieAlgebra heisenberg() { return from_table("heis", {"e1", "e2", "e3"}, {{0, 1, {{2, 1}}}}); }

inline bool preserves_brackets(const LieAlgebra& g, const Matrix& a) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector lhs = a * g.basis_bracket(i, j);
            const Vector rhs = g.bracket(a.column(i), a.column(j));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace testing

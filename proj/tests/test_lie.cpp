#include <doctest.h>

#include "lieaut/errors.hpp"
#include "support.hpp"

using namespace lieaut;
using testing::qspan;
using testing::vec;

namespace {

LieAlgebra sl2_plus_center() {
    return testing::from_table("sl2+z", {"e", "h", "f", "z"}, {{1, 0, {{0, 2}}}, {1, 2, {{2, -2}}}, {0, 2, {{1, 1}}}});
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validate(testing::heisenberg()).valid());
    CHECK(validate(testing::m5_by_hand()).valid());
    CHECK(validate(testing::sl2_ehf()).valid());

    std::vector<Rational> c(27);
    c[(0 * 3 + 1) * 3 + 2] = 1;
    c[(1 * 3 + 0) * 3 + 2] = 1;
    const auto report = validate(LieAlgebra("bad", {"a", "b", "c"}, c));
    CHECK_FALSE(report.valid());
    REQUIRE_FALSE(report.antisymmetry.empty());
    CHECK(report.antisymmetry.front() == AntisymmetryViolation{0, 1, 2});

    // antisymmetric but not Jacobi: [a,b]=a, [b,c]=b, [c,a]=c
    const auto bad = testing::from_table("nj", {"a", "b", "c"}, {{0, 1, {{0, 1}}}, {1, 2, {{1, 1}}}, {2, 0, {{2, 1}}}});
    const auto r2 = validate(bad);
    CHECK(r2.antisymmetry.empty());
    CHECK_FALSE(r2.jacobi.empty());
}

TEST_CASE("fixture file agrees with the hand table") {
    const auto m5 = testing::fixture("m5.json");
    CHECK(m5.tensor() == testing::m5_by_hand().tensor());
    CHECK(m5.basis_names() == std::vector<std::string>{"G1", "F1", "F2", "Pt", "Dt"});
}

TEST_CASE("adjoint matrices") {
    CHECK(ad(LieAlgebra::abelian(3), vec({1, 2, 3})).is_zero());

    const auto m5 = testing::m5_by_hand();
    Matrix expected(5, 5);
    expected(3, 4) = 1;  // q5 -> q4
    expected(0, 1) = 1;  // q2 -> q1
    expected(1, 2) = 2;  // q3 -> 2 q2
    CHECK(ad(m5, unit_vector(5, 3)) == expected);

    CHECK(ad(testing::sl2_ehf(), unit_vector(3, 1)) == Matrix{{2, 0, 0}, {0, 0, 0}, {0, 0, -2}});
}

TEST_CASE("bracket of subspaces") {
    const auto m5 = testing::m5_by_hand();
    const auto g = Subspace::full(5);
    CHECK(bracket_subspaces(m5, g, Subspace::zero(5)).is_zero());
    const auto d1 = bracket_subspaces(m5, g, g);
    CHECK(d1 == qspan(5, {1, 2, 3, 4}));
    CHECK(bracket_subspaces(m5, d1, d1) == qspan(5, {1, 2}));
}

TEST_CASE("center, centralizer, normalizer") {
    const auto m5 = testing::m5_by_hand();
    const auto g = Subspace::full(5);
    CHECK(center(m5) == qspan(5, {1}));
    CHECK(centralizer(m5, g, qspan(5, {1, 2})) == qspan(5, {1, 2, 3}));
    CHECK(normalizer(m5, g, qspan(5, {1})) == g);
    CHECK(normalizer(m5, g, qspan(5, {2})) == qspan(5, {1, 2, 3, 5}));
    CHECK(center(testing::sl2_ehf()).is_zero());
}

TEST_CASE("series") {
    const auto h = testing::heisenberg();
    const auto ds = derived_series(h);
    REQUIRE(ds.terms.size() == 3);
    CHECK(ds.terms[1] == qspan(3, {3}));
    CHECK(ds.terms[2].is_zero());

    const auto m5 = testing::m5_by_hand();
    const auto d = derived_series(m5);
    REQUIRE(d.terms.size() == 4);
    CHECK(d.terms[0].is_full());
    CHECK(d.terms[1] == qspan(5, {1, 2, 3, 4}));
    CHECK(d.terms[2] == qspan(5, {1, 2}));
    CHECK(d.terms[3].is_zero());
    CHECK(is_solvable(m5, Subspace::full(5)));

    const auto u = upper_central_series(m5);
    REQUIRE(u.terms.size() == 1);
    CHECK(u.terms[0] == qspan(5, {1}));
    CHECK(u.stabilized);

    const auto lc = lower_central_series(m5);
    CHECK(lc.terms.back() == qspan(5, {1, 2, 3, 4}));
    CHECK_FALSE(is_nilpotent(m5, Subspace::full(5)));
    CHECK(is_nilpotent(h, Subspace::full(3)));

    const auto uh = upper_central_series(h);
    REQUIRE(uh.terms.size() == 2);
    CHECK(uh.terms[0] == qspan(3, {3}));
    CHECK(uh.terms[1].is_full());
}

TEST_CASE("quotients") {
    const auto h = testing::heisenberg();
    const auto q = quotient(h, qspan(3, {3}));
    CHECK(q.algebra.dim() == 2);
    for (const auto& x : q.algebra.tensor()) CHECK(x == 0);

    const auto m5 = testing::m5_by_hand();
    const auto q5 = quotient(m5, qspan(5, {1}));
    REQUIRE(q5.algebra.dim() == 4);
    CHECK(validate(q5.algebra).valid());
    // quotient basis is q2, q3, q4, q5
    CHECK(q5.algebra.basis_bracket(2, 0) == vec({0, 0, 0, 0}));
    CHECK(q5.algebra.basis_bracket(2, 1) == vec({2, 0, 0, 0}));
    CHECK(q5.projection.rows() == 4);

    CHECK(quotient(m5, Subspace::full(5)).algebra.dim() == 0);
    CHECK_THROWS_AS(quotient(m5, qspan(5, {2})), NotAnIdeal);
}

TEST_CASE("Killing form and radical") {
    for (const auto& g : {testing::m5_by_hand(), testing::sl2_ehf(), sl2_plus_center()}) {
        const Matrix k = killing_form(g);
        CHECK(k == k.transpose());
        const std::size_t n = g.dim();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    Rational lhs = 0, rhs = 0;
                    const Vector xy = g.basis_bracket(x, y), yz = g.basis_bracket(y, z);
                    for (std::size_t a = 0; a < n; ++a) {
                        lhs += xy[a] * k(a, z);
                        rhs += k(x, a) * yz[a];
                    }
                    CHECK(lhs == rhs);
                }
    }
    CHECK(killing_form(testing::sl2_ehf()) == Matrix{{0, 0, 4}, {0, 8, 0}, {4, 0, 0}});
    CHECK(radical(testing::sl2_ehf()).is_zero());
    CHECK(radical(testing::m5_by_hand()).is_full());
    CHECK(radical(sl2_plus_center()) == qspan(4, {4}));
}

TEST_CASE("nilradical approximation") {
    const auto h = nilradical_approx(testing::heisenberg());
    CHECK(h.status == NilradicalStatus::exact);
    CHECK(h.space.is_full());

    const auto two = testing::from_table("aff", {"h", "e"}, {{0, 1, {{1, 1}}}});
    const auto r2 = nilradical_approx(two);
    CHECK(r2.status == NilradicalStatus::exact);
    CHECK(r2.space == qspan(2, {2}));

    const auto rot = testing::from_table("rot", {"h", "e1", "e2"},
                                         {{0, 1, {{1, 1}, {2, 1}}}, {0, 2, {{1, -1}, {2, 1}}}});
    REQUIRE(validate(rot).valid());
    const auto r3 = nilradical_approx(rot);
    CHECK(r3.status == NilradicalStatus::stalled);
    CHECK(r3.space.is_full());

    const auto m5 = nilradical_approx(testing::m5_by_hand());
    CHECK(m5.status == NilradicalStatus::exact);
    CHECK(m5.space == qspan(5, {1, 2, 3, 4}));
    CHECK(radical(testing::m5_by_hand()).contains(m5.space));
}

TEST_CASE("derivations") {
    CHECK(derivations(LieAlgebra::abelian(3)).size() == 9);
    const auto m5 = testing::m5_by_hand();
    const auto der = derivations(m5);
    CHECK(der.size() == 6);
    for (const auto& d : der) CHECK(is_derivation(m5, d));
    CHECK(derivations(testing::sl2_ehf()).size() == 3);
    CHECK_FALSE(is_derivation(m5, Matrix::identity(5)));
}

TEST_CASE("exponentials of nilpotent ad") {
    const auto m5 = testing::m5_by_hand();
    const Matrix a = exp_ad_nilpotent(m5, unit_vector(5, 3), 1);
    CHECK(a.column(4) == vec({0, 0, 0, 1, 1}));
    CHECK(a.column(1) == vec({1, 1, 0, 0, 0}));
    CHECK(a.column(2) == vec({1, 2, 1, 0, 0}));
    CHECK(a.column(0) == unit_vector(5, 0));
    CHECK(a.column(3) == unit_vector(5, 3));
    CHECK(is_automorphism(m5, a));
    CHECK(testing::preserves_brackets(m5, exp_ad_nilpotent(m5, vec({1, Rational(-1, 3), 2, 5, 0}), Rational(7, 2))));
    CHECK_THROWS_AS(exp_ad_nilpotent(testing::sl2_ehf(), unit_vector(3, 1), 1), NotNilpotent);
    CHECK_THROWS_AS(exp_ad_nilpotent(m5, unit_vector(5, 4), 1), NotNilpotent);
}

TEST_CASE("change of basis and restriction") {
    const auto m5 = testing::m5_by_hand();
    Matrix p = Matrix::identity(5);
    p(4, 3) = 1;  // new fifth vector Dt + Pt
    const auto g2 = change_basis(m5, p);
    CHECK(validate(g2).valid());
    CHECK(g2.basis_names()[0] == "G1");
    CHECK(derivations(g2).size() == derivations(m5).size());

    const auto r = restrict_to(m5, qspan(5, {1, 2, 3, 4}));
    CHECK(r.algebra.dim() == 4);
    CHECK(validate(r.algebra).valid());
    CHECK(lift(center(r.algebra), r.embedding) == qspan(5, {1}));
    const auto d = derived_series(r.algebra);
    CHECK(lift(d.terms[1], r.embedding) == qspan(5, {1, 2}));
}

// Randomized property suites. Seeds are fixed so failures reproduce.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieaut/autom.hpp"
#include "lieaut/megaideal.hpp"
#include "lieaut/vectorfield.hpp"
#include "support.hpp"

using namespace lieaut;

namespace {

std::mt19937& rng() {
    static std::mt19937 r(20240607);
    return r;
}

Rational small_rational() {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    return testing::ratio(num(rng()), den(rng()));
}

Rational nonzero_rational() {
    for (;;)
        if (auto q = small_rational(); q != 0) return q;
}

Matrix random_invertible(std::size_t n) {
    for (;;) {
        Matrix b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = small_rational();
        if (rank(b) == n) return b;
    }
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<Rational> c(n * n * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) c[(i * n + j) * n + k] = a.c(i, j, k);
    const std::size_t o = a.dim();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k) c[((o + i) * n + o + j) * n + o + k] = b.c(i, j, k);
    auto names = a.basis_names();
    for (const auto& s : b.basis_names()) names.push_back(s + "'");
    return LieAlgebra(a.name() + "+" + b.name(), names, c);
}

/// Known Lie algebras of dimension <= 5.
std::vector<LieAlgebra> known_algebras() {
    using testing::from_table;
    const auto aff = from_table("aff", {"h", "e"}, {{0, 1, {{1, 1}}}});
    const auto rot = from_table("rot", {"h", "e1", "e2"}, {{0, 1, {{1, 1}, {2, 1}}}, {0, 2, {{1, -1}, {2, 1}}}});
    const auto fil = from_table("fil", {"q1", "q2", "q3", "q4"}, {{3, 1, {{0, 1}}}, {3, 2, {{1, 2}}}});
    return {LieAlgebra::abelian(3),
            testing::heisenberg(),
            testing::sl2_ehf(),
            testing::m5_by_hand(),
            aff,
            rot,
            fil,
            direct_sum(aff, aff),
            direct_sum(testing::sl2_ehf(), LieAlgebra::abelian(2)),
            direct_sum(testing::heisenberg(), aff),
            direct_sum(aff, LieAlgebra::abelian(1))};
}

/// Independent Jacobi check on brackets of basis vectors.
bool jacobi_by_brackets(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (g.basis_bracket(i, j) != [&] {
                    Vector v = g.basis_bracket(j, i);
                    for (auto& x : v) x = -x;
                    return v;
                }())
                return false;
            for (std::size_t k = 0; k < n; ++k) {
                const Vector a = g.bracket(unit_vector(n, i), g.basis_bracket(j, k));
                const Vector b = g.bracket(unit_vector(n, j), g.basis_bracket(k, i));
                const Vector c = g.bracket(unit_vector(n, k), g.basis_bracket(i, j));
                for (std::size_t m = 0; m < n; ++m)
                    if (a[m] + b[m] + c[m] != 0) return false;
            }
        }
    return true;
}

Subspace random_subspace(std::size_t n) {
    std::uniform_int_distribution<std::size_t> count(0, n);
    const std::size_t k = count(rng());
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < k; ++r) {
        Vector v(n);
        for (auto& x : v) x = (rng()() % 3 == 0) ? small_rational() : Rational(0);
        gens.push_back(v);
    }
    return Subspace::span(n, gens);
}

}  // namespace

TEST_CASE("Jacobi and antisymmetry fuzz") {
    const auto base = known_algebras();
    std::size_t valid_cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto& src = base[static_cast<std::size_t>(trial) % base.size()];
        const auto g = change_basis(src, random_invertible(src.dim()));
        CAPTURE(src.name());
        REQUIRE(g.dim() <= 5);
        CHECK(validate(g).valid());
        CHECK(jacobi_by_brackets(g));
        ++valid_cases;

        // corrupt exactly one tensor entry
        const std::size_t n = g.dim();
        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        const std::size_t i = idx(rng()), j = idx(rng()), k = idx(rng());
        auto c = g.tensor();
        c[(i * n + j) * n + k] += nonzero_rational();
        const LieAlgebra bad(g.name(), g.basis_names(), c);
        const auto rep = validate(bad);
        CHECK_FALSE(rep.valid());
        CHECK_FALSE(rep.antisymmetry.empty());

        // corrupt an antisymmetric pair: the verdict must match the independent check
        if (i != j) {
            auto c2 = g.tensor();
            const Rational d = nonzero_rational();
            c2[(i * n + j) * n + k] += d;
            c2[(j * n + i) * n + k] -= d;
            const LieAlgebra pair(g.name(), g.basis_names(), c2);
            CHECK(validate(pair).valid() == jacobi_by_brackets(pair));
        }
    }
    CHECK(valid_cases == 200);
}

TEST_CASE("every lattice member passes the megaideal check") {
    std::vector<LieAlgebra> algebras{testing::fixture("m5.json"), testing::fixture("sl2d.json"),
                                     testing::fixture("heisenberg.json")};
    for (const auto& g : known_algebras()) algebras.push_back(g);
    for (const auto& g : algebras) {
        CAPTURE(g.name());
        const auto lattice = closure(g);
        for (const auto& m : lattice.members) {
            CAPTURE(m.provenance);
            const auto v = verify_megaideal(g, m.space);
            CHECK(v.is_ideal);
            CHECK(v.is_derivation_invariant);
        }
    }
}

TEST_CASE("sampled automorphisms preserve every bracket") {
    std::vector<LieAlgebra> algebras{testing::fixture("m5.json"), testing::fixture("heisenberg.json"),
                                     LieAlgebra::abelian(3)};
    for (const auto& g : known_algebras()) algebras.push_back(g);
    std::size_t solved = 0;
    for (const auto& g : algebras) {
        CAPTURE(g.name());
        const auto basis = adapted_basis(g, closure(g));
        const auto param = triangular_solve(structure_equations(g, shape_from_flag(basis)));
        if (!param.solved()) continue;
        ++solved;
        int accepted = 0;
        for (int attempt = 0; accepted < 20 && attempt < 400; ++attempt) {
            std::vector<Rational> vals;
            for (std::size_t k = 0; k < param.free_parameters.size(); ++k) vals.push_back(small_rational());
            std::vector<Rational> point(param.unknowns->size());
            for (std::size_t k = 0; k < vals.size(); ++k)
                for (std::size_t u = 0; u < point.size(); ++u)
                    if ((*param.unknowns)[u] == param.free_parameters[k]) point[u] = vals[k];
            bool admissible = true;
            for (const auto& sc : param.side_conditions)
                if (sc.poly && sc.poly->evaluate(point) == 0) admissible = false;
            const Matrix a = param.instantiate_original(vals);
            if (!admissible || rank(a) != g.dim()) continue;
            ++accepted;
            CHECK(testing::preserves_brackets(g, a));
        }
        CHECK(accepted == 20);
    }
    CHECK(solved >= 3);
}

TEST_CASE("point maps are homomorphisms on the M5 fields") {
    const auto file = parse_field_file(read_file(testing::data_path("paperfamily.json")));
    const auto fields = select_fields(file, {"G1", "F1", "F2", "Pt", "Dt"});
    const auto g = extract_structure(fields, "m5");
    for (const char* m : {"maps/shift_t.json", "maps/scale_u.json", "maps/shear_u.json"}) {
        CAPTURE(m);
        const auto map = parse_point_map(read_file(testing::data_path(m)));
        const auto rep = verify_homomorphism(map, fields);
        CHECK(rep.ok());
        CHECK(rep.pairs_checked == 10);

        // pushed-forward fields span an algebra with the same structure constants
        std::vector<NamedField> pushed;
        for (const auto& f : fields) pushed.push_back({f.name, pushforward(map, f.field)});
        CHECK(extract_structure(pushed, "m5").tensor() == g.tensor());
    }
}

TEST_CASE("sum and intersection dimensions") {
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 8);
        const std::size_t n = dim(rng());
        const auto a = random_subspace(n);
        const auto b = random_subspace(n);
        const auto s = sum(a, b);
        const auto i = intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        CHECK(s.contains(a));
        CHECK(s.contains(b));
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(rref(a.basis()) == a.basis());
    }
}

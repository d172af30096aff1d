#include <doctest.h>

#include "lieaut/errors.hpp"
#include "lieaut/poly.hpp"

using namespace lieaut;

namespace {

const VarList& xyz() {
    static const VarList v = make_vars({"x", "y", "z"});
    return v;
}

const VarList& family() {
    static const VarList v = make_vars({"t", "x", "u", "u_x", "f", "g"});
    return v;
}

}  // namespace

TEST_CASE("parsing and printing") {
    const Poly p = parse_poly("x^2 - 1/2*x", xyz());
    REQUIRE(p.terms().size() == 2);
    CHECK(p.terms().at({2, 0, 0}) == 1);
    CHECK(p.terms().at({1, 0, 0}) == Rational(-1, 2));
    CHECK(p.to_string() == "x^2 - 1/2*x");

    const Poly q = parse_poly("u_x*f + 2", family());
    CHECK(q.terms().size() == 2);
    CHECK(q.constant_term() == 2);

    CHECK(parse_poly("-(x + y)*(x - y)", xyz()) == parse_poly("y^2 - x^2", xyz()));
    CHECK(parse_poly("2*x*x*y", xyz()).to_string() == "2*x^2*y");
    CHECK(parse_poly("0", xyz()).is_zero());
    CHECK(parse_poly("x - x", xyz()).to_string() == "0");
    CHECK(parse_poly(" 3/4 * z ", xyz()).to_string() == "3/4*z");

    // graded-lex: higher degree first, then earlier variable
    CHECK(parse_poly("1 + z + y + x + x*z + y^2", xyz()).to_string() == "x*z + y^2 + x + y + z + 1");
}

TEST_CASE("round trip through the printer") {
    for (const char* text : {"x^3*y - 7/3*y*z^2 + x - 1", "-x", "-2*f", "u_x^2*f - g + 1/9"}) {
        const VarList& vars = std::string(text).find('f') != std::string::npos ? family() : xyz();
        const Poly p = parse_poly(text, vars);
        CHECK(parse_poly(p.to_string(), vars) == p);
    }
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_poly("x + w", xyz());
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("unknown variable 'w'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly("x +", xyz()), ParseError);
    CHECK_THROWS_AS(parse_poly("x ^ y", xyz()), ParseError);
    CHECK_THROWS_AS(parse_poly("(x", xyz()), ParseError);
    CHECK_THROWS_AS(parse_poly("x $ y", xyz()), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0*x", xyz()), ParseError);
    CHECK_THROWS_AS(parse_poly("", xyz()), ParseError);
}

TEST_CASE("calculus and substitution") {
    const Poly x3 = parse_poly("x^3", xyz());
    CHECK(x3.derivative(0) == parse_poly("3*x^2", xyz()));
    CHECK(x3.derivative(1).is_zero());

    const Poly p = parse_poly("x^2*y + y", xyz());
    CHECK(p.substitute(0, parse_poly("z + 1", xyz())) == parse_poly("z^2*y + 2*z*y + 2*y", xyz()));
    CHECK(p.coefficient(0, 2) == parse_poly("y", xyz()));
    CHECK(p.coefficient(0, 0) == parse_poly("y", xyz()));
    CHECK(p.degree_in(0) == 2);
    CHECK(p.total_degree() == 3);
    CHECK(p.support() == std::vector<std::size_t>{0, 1});

    const std::vector<Rational> point{2, 3, 5};
    CHECK(p.evaluate(point) == 15);

    const auto q = parse_poly("2*x^2*y - 4*x*y^2", xyz()).divide_exact({1, 1, 0}, 2);
    REQUIRE(q);
    CHECK(*q == parse_poly("x - 2*y", xyz()));
    CHECK_FALSE(parse_poly("x*y + z", xyz()).divide_exact({1, 0, 0}, 1));
}

TEST_CASE("arithmetic identities") {
    const Poly a = parse_poly("x + 2*y", xyz());
    const Poly b = parse_poly("x - z^2", xyz());
    CHECK(a * b == b * a);
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK((a * b).derivative(0) == a.derivative(0) * b + a * b.derivative(0));
    CHECK(Poly(xyz(), 3) * Rational(1, 3) == Poly(xyz(), 1));
    const Poly composed = a.compose({parse_poly("y", xyz()), parse_poly("x", xyz()), parse_poly("z", xyz())});
    CHECK(composed == parse_poly("y + 2*x", xyz()));
}

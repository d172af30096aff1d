#pragma once

// Sparse multivariate polynomials over Q on a declared, ordered variable list.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieaut/linalg.hpp"

namespace lieaut {

using VarList = std::shared_ptr<const std::vector<std::string>>;
VarList make_vars(std::vector<std::string> names);
bool same_vars(const VarList& a, const VarList& b);

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic order, largest first: higher total degree first, ties
/// broken by the exponent of the earliest variable.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly {
public:
    using Terms = std::map<Exponents, Rational, GrlexDescending>;

    Poly() = default;
    explicit Poly(VarList vars) : vars_(std::move(vars)) {}
    Poly(VarList vars, const Rational& constant);

    static Poly variable(VarList vars, std::size_t index);
    /// Throws Error if `name` is not declared.
    static Poly variable(VarList vars, std::string_view name);
    static Poly monomial(VarList vars, Exponents exps, const Rational& coeff);

    const VarList& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_ ? vars_->size() : 0; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    /// Single term (including nonzero constants).
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    std::uint32_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
    std::vector<std::size_t> support() const;

    /// Coefficient of var^power, as a polynomial free of var.
    Poly coefficient(std::size_t var, std::uint32_t power) const;
    Poly derivative(std::size_t var) const;
    Poly substitute(std::size_t var, const Poly& value) const;
    /// Replaces variable i by values[i]; every value must share one variable list.
    Poly compose(const std::vector<Poly>& values) const;
    Rational evaluate(std::span<const Rational> point) const;

    /// Exact quotient by a monomial term, if every term is divisible by it.
    std::optional<Poly> divide_exact(const Exponents& mono, const Rational& coeff) const;

    /// Same polynomial over a different, compatible variable list (names looked up by name).
    Poly rebased(const VarList& vars) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b);

    /// Graded-lex rendering accepted back by parse_poly, e.g. "x^2 - 1/2*x".
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    void adopt(const Poly& o);

    VarList vars_;
    Terms terms_;
};

/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | var | var '^' uint | '(' expr ')'
/// Throws ParseError with the offending position.
Poly parse_poly(std::string_view text, const VarList& vars);

}  // namespace lieaut

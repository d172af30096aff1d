#include "lieaut/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "lieaut/errors.hpp"

namespace lieaut {

VarList make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

std::uint32_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = lieaut::total_degree(a), db = lieaut::total_degree(b);
    if (da != db) return da > db;
    return b < a;
}

Poly::Poly(VarList vars, const Rational& constant) : vars_(std::move(vars)) {
    if (sgn(constant) != 0) terms_.emplace(Exponents(nvars(), 0), constant);
}

Poly Poly::variable(VarList vars, std::size_t index) {
    Poly p(std::move(vars));
    Exponents e(p.nvars(), 0);
    e.at(index) = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::variable(VarList vars, std::string_view name) {
    const auto& names = *vars;
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error("unknown variable '" + std::string(name) + "'");
    return variable(std::move(vars), static_cast<std::size_t>(it - names.begin()));
}

Poly Poly::monomial(VarList vars, Exponents exps, const Rational& coeff) {
    Poly p(std::move(vars));
    if (exps.size() != p.nvars()) throw Error("exponent vector length differs from variable count");
    if (sgn(coeff) != 0) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && lieaut::total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const {
    for (const auto& [e, c] : terms_)
        if (lieaut::total_degree(e) == 0) return c;
    return 0;
}

std::uint32_t Poly::total_degree() const {
    return terms_.empty() ? 0 : lieaut::total_degree(terms_.begin()->first);
}

std::uint32_t Poly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

std::vector<std::size_t> Poly::support() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars(); ++v)
        if (depends_on(v)) out.push_back(v);
    return out;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void Poly::adopt(const Poly& o) {
    if (same_vars(vars_, o.vars_)) return;
    if (!vars_ && is_constant()) {
        const Rational c = constant_term();
        vars_ = o.vars_;
        terms_.clear();
        if (sgn(c) != 0) terms_.emplace(Exponents(nvars(), 0), c);
        return;
    }
    if (!o.vars_ && o.is_constant()) return;
    throw Error("polynomials over different variable lists");
}

Poly Poly::coefficient(std::size_t var, std::uint32_t power) const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_)
        if (e[var] == power) {
            Exponents f = e;
            f[var] = 0;
            out.add_term(f, c);
        }
    return out;
}

Poly Poly::derivative(std::size_t var) const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_)
        if (e[var] > 0) {
            Exponents f = e;
            --f[var];
            out.add_term(f, c * Rational(static_cast<long>(e[var])));
        }
    return out;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
    Poly v = value;
    if (!v.vars_) v = Poly(vars_, value.constant_term());
    if (!same_vars(vars_, v.vars_)) throw Error("substitution across different variable lists");
    Poly out(vars_);
    std::vector<Poly> powers{Poly(vars_, 1)};
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[var]) powers.push_back(powers.back() * v);
        Exponents f = e;
        f[var] = 0;
        out += Poly::monomial(vars_, f, c) * powers[e[var]];
    }
    return out;
}

Poly Poly::compose(const std::vector<Poly>& values) const {
    if (values.size() != nvars()) throw Error("compose: one value per variable required");
    VarList target = values.empty() ? vars_ : values.front().vars_;
    Poly out(target);
    std::vector<std::vector<Poly>> powers(values.size());
    for (std::size_t v = 0; v < values.size(); ++v) powers[v].push_back(Poly(target, 1));
    for (const auto& [e, c] : terms_) {
        Poly term(target, c);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            while (powers[v].size() <= e[v]) powers[v].push_back(powers[v].back() * values[v]);
            term *= powers[v][e[v]];
        }
        out += term;
    }
    return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars()) throw Error("evaluate: point dimension differs from variable count");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            for (std::uint32_t k = 0; k < e[v]; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

std::optional<Poly> Poly::divide_exact(const Exponents& mono, const Rational& coeff) const {
    if (sgn(coeff) == 0) throw Error("division by zero monomial");
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        for (std::size_t v = 0; v < f.size(); ++v) {
            if (f[v] < mono[v]) return std::nullopt;
            f[v] -= mono[v];
        }
        out.terms_.emplace(std::move(f), c / coeff);
    }
    return out;
}

Poly Poly::rebased(const VarList& vars) const {
    Poly out(vars);
    for (const auto& [e, c] : terms_) {
        Exponents f(out.nvars(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            const auto it = std::find(vars->begin(), vars->end(), (*vars_)[v]);
            if (it == vars->end()) throw Error("rebase: variable '" + (*vars_)[v] + "' missing from target list");
            f[static_cast<std::size_t>(it - vars->begin())] = e[v];
        }
        out.add_term(f, c);
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e.size() == nvars() ? e : Exponents(nvars(), 0), c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e.size() == nvars() ? e : Exponents(nvars(), 0), -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly lhs = a;
    lhs.adopt(b);
    Poly out(lhs.vars_);
    const std::size_t n = out.nvars();
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e = ea;
            if (eb.size() == n)
                for (std::size_t v = 0; v < n; ++v) e[v] += eb[v];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    if (!same_vars(a.vars_, b.vars_)) {
        if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
        return false;
    }
    return a.terms_ == b.terms_;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool constant = lieaut::total_degree(e) == 0;
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        const Rational mag = abs(c);
        bool need_star = false;
        if (constant || mag != 1) {
            os << mag.get_str();
            need_star = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (need_star) os << "*";
            os << (*vars_)[v];
            if (e[v] > 1) os << "^" << e[v];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        const bool negate = accept('-');
        Poly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Poly factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                if (digits().empty()) throw ParseError("expected denominator digits", pos_);
            }
            Rational q;
            try {
                q = parse_rational(text_.substr(start, pos_ - start));
            } catch (const ParseError& e) {
                throw ParseError("invalid rational literal", start + e.position());
            }
            return Poly(vars_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            const auto it = std::find(vars_->begin(), vars_->end(), name);
            if (it == vars_->end()) throw ParseError("unknown variable '" + name + "'", start);
            Poly v = Poly::variable(vars_, static_cast<std::size_t>(it - vars_->begin()));
            if (accept('^')) {
                skip_ws();
                const std::size_t at = pos_;
                const auto d = digits();
                if (d.empty()) throw ParseError("expected exponent", at);
                const unsigned long e = std::stoul(std::string(d));
                Poly p(vars_, 1);
                for (unsigned long k = 0; k < e; ++k) p *= v;
                return p;
            }
            return v;
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarList& vars) { return PolyParser(text, vars).parse(); }

}  // namespace lieaut

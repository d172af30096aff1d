#include "lieaut/vectorfield.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lieaut/errors.hpp"
#include "lieaut/kernels.hpp"

namespace lieaut {

PolyVectorField::PolyVectorField(VarList vars) : vars_(std::move(vars)) {
    components_.assign(vars_->size(), Poly(vars_));
}

PolyVectorField::PolyVectorField(VarList vars, std::vector<Poly> components)
    : vars_(std::move(vars)), components_(std::move(components)) {
    if (components_.size() != vars_->size()) throw Error("vector field needs one component per variable");
    for (auto& c : components_) {
        if (!c.vars())
            c = Poly(vars_, c.constant_term());
        else if (!same_vars(c.vars(), vars_))
            c = c.rebased(vars_);
    }
}

Poly PolyVectorField::apply(const Poly& p) const {
    Poly out(vars_);
    for (std::size_t j = 0; j < components_.size(); ++j)
        if (!components_[j].is_zero() && p.depends_on(j)) out += components_[j] * p.derivative(j);
    return out;
}

bool PolyVectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Poly& p) { return p.is_zero(); });
}

namespace {

void require_same(const PolyVectorField& a, const PolyVectorField& b) {
    if (!same_vars(a.vars(), b.vars())) throw Error("vector fields over different variable lists");
}

}  // namespace

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
    require_same(a, b);
    std::vector<Poly> c = a.components_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.components_[i];
    return PolyVectorField(a.vars_, std::move(c));
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
    require_same(a, b);
    std::vector<Poly> c = a.components_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.components_[i];
    return PolyVectorField(a.vars_, std::move(c));
}

PolyVectorField operator*(const Rational& s, const PolyVectorField& a) {
    std::vector<Poly> c = a.components_;
    for (auto& p : c) p *= s;
    return PolyVectorField(a.vars_, std::move(c));
}

bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return same_vars(a.vars_, b.vars_) && a.components_ == b.components_;
}

std::string PolyVectorField::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << components_[i].to_string() << ")∂" << (*vars_)[i];
        first = false;
    }
    return first ? "0" : os.str();
}

PolyVectorField lie_bracket(const PolyVectorField& a, const PolyVectorField& b) {
    require_same(a, b);
    std::vector<Poly> c;
    c.reserve(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) c.push_back(a.apply(b.component(i)) - b.apply(a.component(i)));
    return PolyVectorField(a.vars(), std::move(c));
}

// ---------------------------------------------------------------------------
// Equivalence-algebra realization

VarList family_variables() {
    static const VarList vars = make_vars({"t", "x", "u", "u_x", "f", "g"});
    return vars;
}

FamilyKind parse_family_kind(std::string_view name) {
    static const std::map<std::string, FamilyKind, std::less<>> kinds{
        {"Du", FamilyKind::Du}, {"Dt", FamilyKind::Dt}, {"Pt", FamilyKind::Pt}, {"D", FamilyKind::D},
        {"G", FamilyKind::G},   {"F1", FamilyKind::F1}, {"F2", FamilyKind::F2}};
    const auto it = kinds.find(name);
    if (it == kinds.end()) throw Error("unknown family kind '" + std::string(name) + "'");
    return it->second;
}

PolyVectorField realize_family(FamilyKind kind, const Poly& param) {
    enum : std::size_t { T, X, U, UX, F, G };
    const VarList vars = family_variables();
    auto var = [&](std::size_t i) { return Poly::variable(vars, i); };
    auto constant = [&](long c) { return Poly(vars, Rational(c)); };

    Poly p(vars);
    if (kind == FamilyKind::D || kind == FamilyKind::G) {
        if (!param.vars()) {
            p = Poly(vars, param.constant_term());
        } else {
            for (auto v : param.support())
                if ((*param.vars())[v] != "x")
                    throw Error("family parameter must be a polynomial in x only, found '" + (*param.vars())[v] + "'");
            p = param.rebased(vars);
        }
    }
    const Poly px = p.derivative(X), pxx = px.derivative(X);

    std::vector<Poly> c(6, Poly(vars));
    switch (kind) {
        case FamilyKind::Du:  // u∂u + u_x∂u_x + g∂g
            c[U] = var(U);
            c[UX] = var(UX);
            c[G] = var(G);
            break;
        case FamilyKind::Dt:  // t∂t - 2f∂f - 2g∂g
            c[T] = var(T);
            c[F] = Rational(-2) * var(F);
            c[G] = Rational(-2) * var(G);
            break;
        case FamilyKind::Pt:  // ∂t
            c[T] = constant(1);
            break;
        case FamilyKind::D:  // φ∂x - φ_x u_x∂u_x + 2φ_x f∂f + φ_xx u_x f∂g
            c[X] = p;
            c[UX] = -(px * var(UX));
            c[F] = Rational(2) * px * var(F);
            c[G] = pxx * var(UX) * var(F);
            break;
        case FamilyKind::G:  // ψ∂u + ψ_x∂u_x - ψ_xx f∂g
            c[U] = p;
            c[UX] = px;
            c[G] = -(pxx * var(F));
            break;
        case FamilyKind::F1:  // t∂u
            c[U] = var(T);
            break;
        case FamilyKind::F2:  // t²∂u + 2∂g
            c[U] = var(T) * var(T);
            c[G] = constant(2);
            break;
    }
    return PolyVectorField(vars, std::move(c));
}

// ---------------------------------------------------------------------------
// Structure constants

namespace {

/// Flattening key: (component index, monomial); ordered by component, then graded lex.
struct FlatKey {
    std::size_t component;
    Exponents monomial;
};

struct FlatKeyLess {
    bool operator()(const FlatKey& a, const FlatKey& b) const {
        if (a.component != b.component) return a.component < b.component;
        return GrlexDescending{}(a.monomial, b.monomial);
    }
};

using FlatIndex = std::map<FlatKey, std::size_t, FlatKeyLess>;

void collect_keys(const PolyVectorField& q, FlatIndex& index) {
    for (std::size_t i = 0; i < q.nvars(); ++i)
        for (const auto& [e, c] : q.component(i).terms()) index.emplace(FlatKey{i, e}, 0);
}

Vector flatten(const PolyVectorField& q, const FlatIndex& index) {
    Vector v(index.size());
    for (std::size_t i = 0; i < q.nvars(); ++i)
        for (const auto& [e, c] : q.component(i).terms()) v[index.at(FlatKey{i, e})] = c;
    return v;
}

std::string format_relation(const std::vector<NamedField>& fields, std::span<const Rational> coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        if (!first) os << (sgn(coeffs[i]) < 0 ? " - " : " + ");
        else if (sgn(coeffs[i]) < 0) os << "-";
        os << Rational(abs(coeffs[i])).get_str() << "*" << fields[i].name;
        first = false;
    }
    return os.str();
}

}  // namespace

LieAlgebra extract_structure(const std::vector<NamedField>& fields, std::string name) {
    const std::size_t m = fields.size();
    std::vector<PolyVectorField> raw;
    for (const auto& f : fields) raw.push_back(f.field);
    const auto brackets = kernels::bracket_table_parallel(raw);

    FlatIndex index;
    for (const auto& f : fields) collect_keys(f.field, index);
    for (const auto& b : brackets) collect_keys(b, index);
    std::size_t next = 0;
    for (auto& [k, v] : index) v = next++;
    const std::size_t keys = index.size();

    // Columns of `span` are the flattened fields.
    Matrix span(keys, m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vector v = flatten(fields[i].field, index);
        for (std::size_t r = 0; r < keys; ++r) span(r, i) = v[r];
    }
    const Subspace relations = kernel(span);
    if (!relations.is_zero())
        throw LinearlyDependent(format_relation(fields, relations.basis().row(0)));

    std::vector<std::string> names;
    for (const auto& f : fields) names.push_back(f.name);
    std::vector<Rational> tensor(m * m * m);
    std::size_t pair = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j, ++pair) {
            const Vector target = flatten(brackets[pair], index);
            Matrix aug(keys, m + 1);
            for (std::size_t r = 0; r < keys; ++r) {
                for (std::size_t c = 0; c < m; ++c) aug(r, c) = span(r, c);
                aug(r, m) = target[r];
            }
            const auto e = echelon(aug);
            if (!e.pivots.empty() && e.pivots.back() == m)
                throw NotClosed(fields[i].name, fields[j].name, brackets[pair].to_string());
            // Full column rank: pivots are exactly 0..m-1.
            for (std::size_t k = 0; k < m; ++k) {
                const Rational y = e.reduced(k, m);
                tensor[(i * m + j) * m + k] = y;
                tensor[(j * m + i) * m + k] = -y;
            }
        }
    LieAlgebra g(std::move(name), std::move(names), std::move(tensor));
    if (!validate(g).valid()) throw Error("internal: extracted structure constants violate the Jacobi identity");
    return g;
}

// ---------------------------------------------------------------------------
// Point maps

PointMap PointMap::create(VarList vars, std::vector<Poly> forward, std::vector<Poly> inverse) {
    const std::size_t n = vars->size();
    if (forward.size() != n || inverse.size() != n) throw LoadError("point map needs one component per variable");
    for (auto* side : {&forward, &inverse})
        for (auto& p : *side)
            if (!p.vars()) p = Poly(vars, p.constant_term());
            else if (!same_vars(p.vars(), vars)) p = p.rebased(vars);
    for (std::size_t i = 0; i < n; ++i) {
        const Poly id = Poly::variable(vars, i);
        if (forward[i].compose(inverse) != id)
            throw LoadError("forward(inverse(z)) differs from z in component '" + (*vars)[i] + "'");
        if (inverse[i].compose(forward) != id)
            throw LoadError("inverse(forward(z)) differs from z in component '" + (*vars)[i] + "'");
    }
    return PointMap(std::move(vars), std::move(forward), std::move(inverse));
}

PointMap PointMap::identity(VarList vars) {
    std::vector<Poly> id;
    for (std::size_t i = 0; i < vars->size(); ++i) id.push_back(Poly::variable(vars, i));
    return PointMap(vars, id, id);
}

PointMap PointMap::compose(const PointMap& first, const PointMap& second) {
    if (!same_vars(first.vars_, second.vars_)) throw Error("composing point maps over different variables");
    std::vector<Poly> fwd, inv;
    for (const auto& p : second.forward_) fwd.push_back(p.compose(first.forward_));
    for (const auto& p : first.inverse_) inv.push_back(p.compose(second.inverse_));
    return PointMap(first.vars_, std::move(fwd), std::move(inv));
}

PolyVectorField pushforward(const PointMap& map, const PolyVectorField& q) {
    if (!same_vars(map.vars(), q.vars())) throw Error("point map and vector field use different variables");
    std::vector<Poly> out;
    for (std::size_t i = 0; i < q.nvars(); ++i) {
        const Poly image = q.apply(map.forward()[i]);
        out.push_back(image.compose(map.inverse()));
    }
    return PolyVectorField(q.vars(), std::move(out));
}

HomomorphismReport verify_homomorphism(const PointMap& map, const std::vector<NamedField>& fields) {
    HomomorphismReport rep;
    std::vector<PolyVectorField> pushed;
    for (const auto& f : fields) pushed.push_back(pushforward(map, f.field));
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = i + 1; j < fields.size(); ++j) {
            ++rep.pairs_checked;
            const auto expected = pushforward(map, lie_bracket(fields[i].field, fields[j].field));
            const auto actual = lie_bracket(pushed[i], pushed[j]);
            if (!(expected == actual)) rep.failures.push_back({fields[i].name, fields[j].name, expected, actual});
        }
    return rep;
}

}  // namespace lieaut

#include "lieaut/autom.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lieaut/errors.hpp"
#include "lieaut/kernels.hpp"

namespace lieaut {

// ---------------------------------------------------------------------------
// Adapted basis and shape

AdaptedBasis adapted_basis(const LieAlgebra& g, const MegaidealLattice& lattice) {
    const std::size_t n = g.dim();
    if (lattice.members.empty()) throw Error("adapted_basis: empty lattice");
    std::vector<Subspace> members = lattice.spaces();
    std::stable_sort(members.begin(), members.end(), canonical_less);

    AdaptedBasis out;
    Subspace cur = Subspace::zero(n);
    while (!cur.is_full()) {
        const Subspace* next = nullptr;
        for (const auto& m : members)
            if (m.dim() > cur.dim() && m.contains(cur) && (!next || m.dim() < next->dim())) next = &m;
        const Subspace step = next ? *next : Subspace::full(n, "g");
        out.flag.push_back(step);
        out.block_sizes.push_back(step.dim() - cur.dim());
        cur = step;
    }

    std::vector<Vector> rows;
    Subspace spanned = Subspace::zero(n);
    for (const auto& member : out.flag)
        for (std::size_t r = 0; r < member.dim(); ++r) {
            const Vector v = member.basis().row_vector(r);
            if (spanned.contains(v)) continue;
            rows.push_back(v);
            spanned = Subspace::span(n, rows);
        }
    out.change_of_basis = Matrix::from_rows(rows, n);

    // Lattice members outside the chain that happen to be coordinate spans in the new basis.
    const Matrix to_new = inverse(out.change_of_basis);
    for (const auto& m : members) {
        if (m.is_zero() || m.is_full()) continue;
        if (std::find(out.flag.begin(), out.flag.end(), m) != out.flag.end()) continue;
        Matrix coords(0, n);
        for (std::size_t r = 0; r < m.dim(); ++r) {
            Matrix row(1, n);
            for (std::size_t c = 0; c < n; ++c) row(0, c) = m.basis()(r, c);
            coords.append_row((row * to_new).row(0));
        }
        const Subspace local = Subspace::span(coords);
        std::vector<std::size_t> idx;
        bool coordinate = true;
        for (std::size_t r = 0; r < local.dim() && coordinate; ++r) {
            const Vector v = local.basis().row_vector(r);
            coordinate = v == unit_vector(n, local.pivots()[r]);
            idx.push_back(local.pivots()[r]);
        }
        if (coordinate) out.coordinate_constraints.push_back(std::move(idx));
    }
    return out;
}

LieAlgebra adapted_algebra(const LieAlgebra& g, const AdaptedBasis& basis) {
    return change_basis(g, basis.change_of_basis);
}

namespace {

std::string entry_name(std::size_t n, std::size_t i, std::size_t j) {
    if (n <= 9) return "a" + std::to_string(i + 1) + std::to_string(j + 1);
    return "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

Poly determinant(const std::vector<std::vector<Poly>>& m, const VarList& vars) {
    const std::size_t k = m.size();
    if (k == 0) return Poly(vars, 1);
    if (k == 1) return m[0][0];
    Poly acc(vars);
    for (std::size_t c = 0; c < k; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Poly> row;
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][c] * determinant(minor, vars);
        if (c % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

constexpr std::size_t kMaxExpandedBlock = 4;

}  // namespace

AutShape shape_from_flag(const AdaptedBasis& basis) {
    AutShape shape;
    const std::size_t n = basis.change_of_basis.rows();
    shape.n = n;
    shape.change_of_basis = basis.change_of_basis;
    std::vector<std::size_t> block(n);
    std::vector<std::size_t> block_start;
    for (std::size_t b = 0, pos = 0; b < basis.block_sizes.size(); ++b) {
        block_start.push_back(pos);
        for (std::size_t k = 0; k < basis.block_sizes[b]; ++k) block[pos++] = b;
    }
    shape.unknown.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) shape.unknown[i][j] = block[i] <= block[j];
    for (const auto& idx : basis.coordinate_constraints)
        for (std::size_t j : idx)
            for (std::size_t i = 0; i < n; ++i)
                if (std::find(idx.begin(), idx.end(), i) == idx.end()) shape.unknown[i][j] = false;

    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (shape.unknown[i][j]) names.push_back(entry_name(n, i, j));
    shape.unknowns = make_vars(names);
    shape.entries.assign(n * n, Poly(shape.unknowns));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (shape.unknown[i][j]) shape.entries[i * n + j] = Poly::variable(shape.unknowns, entry_name(n, i, j));

    for (std::size_t b = 0; b < basis.block_sizes.size(); ++b) {
        const std::size_t start = block_start[b], size = basis.block_sizes[b];
        SideCondition sc;
        if (size <= kMaxExpandedBlock) {
            std::vector<std::vector<Poly>> m(size);
            for (std::size_t r = 0; r < size; ++r)
                for (std::size_t c = 0; c < size; ++c) m[r].push_back(shape.entries[(start + r) * n + start + c]);
            sc.poly = determinant(m, shape.unknowns);
            sc.text = sc.poly->to_string() + " != 0";
        } else {
            sc.text = "det(a[" + std::to_string(start + 1) + ".." + std::to_string(start + size) + "][" +
                      std::to_string(start + 1) + ".." + std::to_string(start + size) + "]) != 0";
        }
        shape.side_conditions.push_back(std::move(sc));
    }
    return shape;
}

PolySystem structure_equations(const LieAlgebra& g, const AutShape& shape) {
    if (g.dim() != shape.n) throw AmbientMismatch("shape size differs from algebra dimension");
    const LieAlgebra adapted = change_basis(g, shape.change_of_basis);
    const std::size_t n = g.dim();
    const auto residuals = kernels::structure_residuals_parallel(adapted, shape.entries, shape.unknowns);
    PolySystem sys{shape.unknowns, {}, {}, shape.side_conditions, shape};
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++idx) {
                if (residuals[idx].is_zero()) continue;
                sys.equations.push_back(residuals[idx]);
                sys.labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                     std::to_string(k + 1) + ")");
            }
    return sys;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

/// Leading coefficient (first term in graded-lex order) scaled to 1.
Poly normalized(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.terms().begin()->second);
}

std::set<std::size_t> nonzero_unknowns(const std::vector<SideCondition>& conds) {
    std::set<std::size_t> out;
    for (const auto& sc : conds)
        if (sc.poly && sc.poly->is_monomial())
            for (auto v : sc.poly->support()) out.insert(v);
    return out;
}

std::string monomial_text(const VarList& vars, const Exponents& e) {
    return Poly::monomial(vars, e, 1).to_string();
}

struct Candidate {
    std::size_t equation;
    std::size_t unknown;
    bool constant_coefficient;
    Poly value;
    std::string note;
};

}  // namespace

std::optional<Poly> AutParametrization::assignment(const std::string& unknown) const {
    for (const auto& [name, value] : assignments)
        if (name == unknown) return value;
    return std::nullopt;
}

AutParametrization triangular_solve(const PolySystem& sys) {
    const VarList& vars = sys.unknowns;
    const std::size_t nu = vars->size();
    std::vector<Poly> eqs = sys.equations;
    std::vector<SideCondition> conds = sys.inequations;
    std::vector<std::optional<Poly>> value(nu);
    std::vector<std::string> audit;
    bool inconsistent = false;

    auto substitute_all = [&](std::size_t var, const Poly& val) {
        for (auto& e : eqs) e = e.substitute(var, val);
        for (auto& v : value)
            if (v) *v = v->substitute(var, val);
        for (auto& c : conds)
            if (c.poly) {
                c.poly = c.poly->substitute(var, val);
                c.text = c.poly->to_string() + " != 0";
            }
    };

    for (;;) {
        const auto nonzero = nonzero_unknowns(conds);
        for (const auto& c : conds)
            if (c.poly && c.poly->is_zero()) {
                inconsistent = true;
                audit.push_back("side condition became 0 != 0; the system has no admissible solution");
            }
        if (inconsistent) break;

        // Normalize: strip monomial factors made of nonzero unknowns, scale, drop zeros and duplicates.
        std::vector<Poly> next;
        for (auto& e : eqs) {
            if (e.is_zero()) continue;
            Exponents common(nu, 0);
            bool first = true;
            for (const auto& [exps, c] : e.terms()) {
                for (std::size_t v = 0; v < nu; ++v) common[v] = first ? exps[v] : std::min(common[v], exps[v]);
                first = false;
            }
            for (std::size_t v = 0; v < nu; ++v)
                if (!nonzero.count(v)) common[v] = 0;
            if (total_degree(common) > 0) {
                const Poly before = e;
                e = *e.divide_exact(common, 1);
                audit.push_back("divided " + before.to_string() + " = 0 by nonzero " + monomial_text(vars, common));
            }
            Poly norm = normalized(e);
            if (std::find(next.begin(), next.end(), norm) == next.end()) next.push_back(std::move(norm));
        }
        eqs = std::move(next);
        for (const auto& e : eqs)
            if (e.is_constant()) {
                inconsistent = true;
                audit.push_back("equation reduced to " + e.to_string() + " = 0; the system has no solution");
            }
        if (inconsistent) break;

        std::optional<Candidate> best;
        auto better = [&](const Candidate& c) {
            if (!best) return true;
            if (c.constant_coefficient != best->constant_coefficient) return c.constant_coefficient;
            const auto tc = eqs[c.equation].terms().size(), tb = eqs[best->equation].terms().size();
            if (tc != tb) return tc < tb;
            if (c.equation != best->equation) return c.equation < best->equation;
            return c.unknown < best->unknown;
        };
        for (std::size_t ei = 0; ei < eqs.size(); ++ei) {
            const Poly& e = eqs[ei];
            for (auto v : e.support()) {
                if (e.degree_in(v) != 1) continue;
                const Poly coeff = e.coefficient(v, 1);
                const Poly rest = e.coefficient(v, 0);
                Candidate cand{ei, v, false, Poly(vars), {}};
                if (coeff.is_constant()) {
                    cand.constant_coefficient = true;
                    cand.value = rest * (Rational(-1) / coeff.constant_term());
                    cand.note = "solved " + (*vars)[v] + " from " + e.to_string() + " = 0";
                } else if (coeff.is_monomial()) {
                    const auto& [mono, c] = *coeff.terms().begin();
                    bool allowed = true;
                    for (std::size_t u = 0; u < nu; ++u)
                        if (mono[u] > 0 && !nonzero.count(u)) allowed = false;
                    if (!allowed) continue;
                    auto q = rest.divide_exact(mono, -c);
                    if (!q) continue;
                    cand.value = std::move(*q);
                    cand.note = "solved " + (*vars)[v] + " from " + e.to_string() + " = 0, dividing by nonzero " +
                                coeff.to_string();
                } else {
                    continue;
                }
                if (better(cand)) best = std::move(cand);
            }
        }
        if (!best) break;

        audit.push_back(best->note + ": " + (*vars)[best->unknown] + " = " + best->value.to_string());
        value[best->unknown] = best->value;
        substitute_all(best->unknown, best->value);
    }

    AutParametrization out;
    out.unknowns = vars;
    out.shape = sys.shape;
    for (auto& c : conds) {
        if (c.poly && c.poly->is_constant() && !c.poly->is_zero()) continue;
        const bool seen = std::any_of(out.side_conditions.begin(), out.side_conditions.end(),
                                      [&](const SideCondition& s) { return s.text == c.text; });
        if (!seen) out.side_conditions.push_back(std::move(c));
    }
    out.audit = std::move(audit);
    for (std::size_t v = 0; v < nu; ++v) {
        if (value[v]) out.assignments.emplace_back((*vars)[v], *value[v]);
        else out.free_parameters.push_back((*vars)[v]);
    }
    for (auto& e : eqs)
        if (!e.is_zero()) out.residual_equations.push_back(e);
    if (inconsistent && out.residual_equations.empty()) out.residual_equations.push_back(Poly(vars, 1));

    const std::size_t n = sys.shape.n;
    out.matrix.assign(n * n, Poly(vars));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Poly& e = sys.shape.entry(i, j);
            if (e.is_zero()) continue;
            const std::size_t v = e.support().front();
            out.matrix[i * n + j] = value[v] ? *value[v] : e;
        }
    return out;
}

Matrix AutParametrization::instantiate(const std::vector<Rational>& free_values) const {
    if (free_values.size() != free_parameters.size()) throw Error("instantiate: one value per free parameter");
    std::vector<Rational> point(unknowns->size());
    for (std::size_t k = 0; k < free_parameters.size(); ++k) {
        const auto it = std::find(unknowns->begin(), unknowns->end(), free_parameters[k]);
        point[static_cast<std::size_t>(it - unknowns->begin())] = free_values[k];
    }
    const std::size_t n = shape.n;
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(i, j).evaluate(point);
    return a;
}

Matrix AutParametrization::instantiate_original(const std::vector<Rational>& free_values) const {
    // Old column coordinates are B^T times adapted ones.
    const Matrix bt = shape.change_of_basis.transpose();
    return bt * instantiate(free_values) * inverse(bt);
}

// ---------------------------------------------------------------------------
// Invariant subspaces

namespace {

void require_solved(const AutParametrization& param) {
    if (!param.solved())
        throw ResidualSystem("parametrization has " + std::to_string(param.residual_equations.size()) +
                             " unsolved residual equation(s)");
}

}  // namespace

bool check_invariant(const AutParametrization& param, const Subspace& s) {
    require_solved(param);
    const std::size_t n = param.n();
    if (s.ambient_dim() != n) throw AmbientMismatch("check_invariant: subspace dimension differs");
    const Matrix to_new = inverse(param.shape.change_of_basis);
    Matrix coords(0, n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Matrix row(1, n);
        for (std::size_t c = 0; c < n; ++c) row(0, c) = s.basis()(r, c);
        coords.append_row((row * to_new).row(0));
    }
    const Subspace local = Subspace::span(coords);
    const VarList& vars = param.unknowns;
    for (std::size_t r = 0; r < local.dim(); ++r) {
        std::vector<Poly> w(n, Poly(vars));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(local.basis()(r, j)) != 0) w[k] += local.basis()(r, j) * param.entry(k, j);
        // Subtract the components along the RREF rows; what remains must vanish identically.
        std::vector<Poly> rem = w;
        for (std::size_t p = 0; p < local.dim(); ++p) {
            const Poly f = w[local.pivots()[p]];
            if (f.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(local.basis()(p, k)) != 0) rem[k] -= local.basis()(p, k) * f;
        }
        for (const auto& x : rem)
            if (!x.is_zero()) return false;
    }
    return true;
}

std::vector<Subspace> enumerate_coordinate_megaideals(const LieAlgebra& g, const AutParametrization& param,
                                                      const AdaptedBasis& basis, std::size_t max_dim) {
    require_solved(param);
    const std::size_t n = g.dim();
    if (n > max_dim) throw Error("coordinate enumeration limited to dimension " + std::to_string(max_dim));
    std::vector<std::uint32_t> support(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!param.entry(i, j).is_zero()) support[j] |= (1u << i);
    const auto masks = kernels::invariant_coordinate_masks_parallel(support);
    std::vector<Subspace> out;
    for (auto mask : masks) {
        Matrix gens(0, n);
        std::string label = "<";
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) {
                gens.append_row(basis.change_of_basis.row(i));
                label += (label.size() > 1 ? "," : "") + std::string("b") + std::to_string(i + 1);
            }
        out.push_back(Subspace::span(gens, label + ">"));
    }
    std::stable_sort(out.begin(), out.end(), canonical_less);
    return out;
}

// ---------------------------------------------------------------------------
// Inner automorphisms

bool InnerConsistencyReport::consistent() const {
    return std::all_of(checks.begin(), checks.end(), [](const InnerCheck& c) { return !c.nilpotent || c.matched; });
}

InnerConsistencyReport inner_consistency(const LieAlgebra& g, const AutParametrization& param) {
    InnerConsistencyReport rep;
    const std::size_t n = g.dim();
    const Matrix& b = param.shape.change_of_basis;
    const LieAlgebra adapted = change_basis(g, b);
    const Matrix to_new = inverse(b);
    const VarList& vars = param.unknowns;
    const std::vector<Rational> times{Rational(1), Rational(-1), Rational(1, 2)};

    for (std::size_t e = 0; e < n; ++e) {
        Vector x(n);
        for (std::size_t c = 0; c < n; ++c) x[c] = to_new(e, c);
        for (const auto& t : times) {
            InnerCheck check{g.basis_names()[e], t, false, false, {}};
            Matrix exp_ad;
            try {
                exp_ad = exp_ad_nilpotent(adapted, x, t);
                check.nilpotent = true;
            } catch (const NotNilpotent&) {
                check.detail = "ad is not nilpotent; skipped";
                rep.checks.push_back(std::move(check));
                break;
            }
            // Every free parameter is an entry of the matrix, so its value is read off directly.
            std::vector<Rational> point(vars->size());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Poly& shape_entry = param.shape.entry(i, j);
                    if (shape_entry.is_zero()) continue;
                    const std::size_t v = shape_entry.support().front();
                    if (!param.assignment((*vars)[v])) point[v] = exp_ad(i, j);
                }
            std::ostringstream why;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t j = 0; j < n && ok; ++j)
                    if (param.entry(i, j).evaluate(point) != exp_ad(i, j)) {
                        ok = false;
                        why << "entry (" << i + 1 << "," << j + 1 << ") is " << exp_ad(i, j).get_str()
                            << " but the parametrization gives " << param.entry(i, j).evaluate(point).get_str();
                    }
            for (const auto& r : param.residual_equations)
                if (ok && sgn(r.evaluate(point)) != 0) {
                    ok = false;
                    why << "residual " << r.to_string() << " does not vanish";
                }
            for (const auto& sc : param.side_conditions)
                if (ok && sc.poly && sgn(sc.poly->evaluate(point)) == 0) {
                    ok = false;
                    why << "side condition " << sc.text << " fails";
                }
            check.matched = ok;
            check.detail = ok ? "matched" : why.str();
            rep.checks.push_back(std::move(check));
        }
    }
    return rep;
}

}  // namespace lieaut

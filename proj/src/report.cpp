#include "lieaut/report.hpp"

#include <sstream>

#include "lieaut/errors.hpp"
#include "lieaut/io.hpp"

namespace lieaut {

using json = nlohmann::ordered_json;

AnalysisReport analyze(const LieAlgebra& g, std::string input_digest, const AnalysisOptions& options) {
    AnalysisReport rep;
    rep.algebra = g;
    rep.input_digest = std::move(input_digest);
    rep.validation = validate(g);
    if (!rep.validation.valid()) return rep;

    rep.series = {derived_series(g), lower_central_series(g), upper_central_series(g)};

    ClosureOptions copts;
    copts.budget = options.budget;
    copts.full_prop34 = options.full_prop34;
    rep.lattice = essential_filter(closure(g, {}, copts));
    for (const auto& m : rep.lattice.members) rep.verdicts.push_back(verify_megaideal(g, m.space));

    rep.basis = adapted_basis(g, rep.lattice);
    rep.system = structure_equations(g, shape_from_flag(rep.basis));
    rep.parametrization = triangular_solve(rep.system);
    try {
        rep.invariant_subspaces = enumerate_coordinate_megaideals(g, rep.parametrization, rep.basis, options.max_enum_dim);
    } catch (const ResidualSystem& e) {
        rep.enumeration_note = e.what();
    } catch (const Error& e) {
        if (g.dim() <= options.max_enum_dim) throw;
        rep.enumeration_note = e.what();
    }
    rep.inner = inner_consistency(g, rep.parametrization);
    return rep;
}

namespace {

json vector_json(std::span<const Rational> v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json algebra_json(const LieAlgebra& g) { return json::parse(dump_algebra(g)); }

json validation_json(const LieAlgebra& g, const ValidationReport& v) {
    json out;
    out["valid"] = v.valid();
    json anti = json::array();
    for (const auto& a : v.antisymmetry) {
        json e;
        e["left"] = g.basis_names()[a.i];
        e["right"] = g.basis_names()[a.j];
        e["component"] = g.basis_names()[a.k];
        anti.push_back(std::move(e));
    }
    out["antisymmetry_violations"] = std::move(anti);
    json jac = json::array();
    for (const auto& r : v.jacobi) {
        json e;
        e["triple"] = {g.basis_names()[r.i], g.basis_names()[r.j], g.basis_names()[r.l]};
        e["component"] = g.basis_names()[r.m];
        e["value"] = to_string(r.value);
        jac.push_back(std::move(e));
    }
    out["jacobi_residuals"] = std::move(jac);
    return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::vector<std::string> elements(const LieAlgebra& g, const Subspace& s) {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(format_element(g, s.basis().row(r)));
    return out;
}

std::string span_text(const LieAlgebra& g, const Subspace& s) {
    if (s.is_zero()) return "0";
    return "<" + join(elements(g, s), ", ") + ">";
}

}  // namespace

json subspace_json(const LieAlgebra& g, const Subspace& s) {
    json out;
    out["dim"] = s.dim();
    out["span"] = elements(g, s);
    json rows = json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(vector_json(s.basis().row(r)));
    out["basis"] = std::move(rows);
    if (!s.provenance().empty()) out["provenance"] = s.provenance();
    return out;
}

json to_json(const AnalysisReport& rep) {
    const LieAlgebra& g = rep.algebra;
    json doc;
    doc["tool"] = {{"name", "lieaut"}, {"version", kToolVersion}};
    doc["input_digest"] = rep.input_digest;
    doc["algebra"] = algebra_json(g);
    doc["validation"] = validation_json(g, rep.validation);
    if (!rep.validation.valid()) {
        doc["status"] = "invalid";
        return doc;
    }

    json series = json::array();
    for (const auto& s : rep.series) {
        json e;
        e["kind"] = to_string(s.kind);
        e["stabilized"] = s.stabilized;
        json terms = json::array();
        for (const auto& t : s.terms) terms.push_back(subspace_json(g, t));
        e["terms"] = std::move(terms);
        series.push_back(std::move(e));
    }
    doc["series"] = std::move(series);

    json lattice;
    lattice["passes"] = rep.lattice.passes;
    lattice["productive_passes"] = rep.lattice.productive_passes;
    lattice["fixpoint"] = rep.lattice.fixpoint;
    lattice["budget_exceeded"] = rep.lattice.budget_exceeded;
    json members = json::array();
    for (std::size_t m = 0; m < rep.lattice.members.size(); ++m) {
        const auto& mem = rep.lattice.members[m];
        json e = subspace_json(g, mem.space);
        e["provenance"] = mem.provenance;
        e["aliases"] = mem.aliases;
        e["alias_count"] = mem.alias_count;
        e["essential"] = mem.essential;
        const auto& v = rep.verdicts[m];
        e["verdict"] = {{"ideal", v.is_ideal}, {"derivation_invariant", v.is_derivation_invariant}, {"notes", v.notes}};
        members.push_back(std::move(e));
    }
    lattice["members"] = std::move(members);
    doc["lattice"] = std::move(lattice);

    json basis;
    json rows = json::array();
    std::vector<std::string> vectors;
    for (std::size_t r = 0; r < rep.basis.change_of_basis.rows(); ++r) {
        rows.push_back(vector_json(rep.basis.change_of_basis.row(r)));
        vectors.push_back(format_element(g, rep.basis.change_of_basis.row(r)));
    }
    basis["rows"] = std::move(rows);
    basis["vectors"] = vectors;
    basis["block_sizes"] = rep.basis.block_sizes;
    json flag = json::array();
    for (const auto& f : rep.basis.flag) flag.push_back(span_text(g, f));
    basis["flag"] = std::move(flag);
    basis["coordinate_constraints"] = rep.basis.coordinate_constraints;
    doc["adapted_basis"] = std::move(basis);

    const auto& p = rep.parametrization;
    const auto& shape = rep.system.shape;
    json aut;
    aut["unknowns"] = *shape.unknowns;
    json pattern = json::array();
    for (std::size_t i = 0; i < shape.n; ++i) {
        std::string row;
        for (std::size_t j = 0; j < shape.n; ++j) row += shape.unknown[i][j] ? '*' : '0';
        pattern.push_back(row);
    }
    aut["shape"] = std::move(pattern);
    json eqs = json::array();
    for (std::size_t e = 0; e < rep.system.equations.size(); ++e)
        eqs.push_back({{"label", rep.system.labels[e]}, {"equation", rep.system.equations[e].to_string()}});
    aut["equations"] = std::move(eqs);
    json assignments = json::object();
    for (const auto& [name, value] : p.assignments) assignments[name] = value.to_string();
    aut["assignments"] = std::move(assignments);
    aut["free_parameters"] = p.free_parameters;
    json residuals = json::array();
    for (const auto& r : p.residual_equations) residuals.push_back(r.to_string());
    aut["residual_equations"] = std::move(residuals);
    json side = json::array();
    for (const auto& sc : p.side_conditions) side.push_back(sc.text);
    aut["side_conditions"] = std::move(side);
    json matrix = json::array();
    for (std::size_t i = 0; i < p.n(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p.n(); ++j) row.push_back(p.entry(i, j).to_string());
        matrix.push_back(std::move(row));
    }
    aut["matrix"] = std::move(matrix);
    aut["audit"] = p.audit;
    aut["solved"] = p.solved();
    doc["automorphisms"] = std::move(aut);

    json inv;
    if (rep.invariant_subspaces) {
        inv["status"] = "complete";
        json list = json::array();
        for (const auto& s : *rep.invariant_subspaces) list.push_back(subspace_json(g, s));
        inv["subspaces"] = std::move(list);
    } else {
        inv["status"] = "skipped";
        inv["reason"] = rep.enumeration_note;
    }
    doc["invariant_coordinate_subspaces"] = std::move(inv);

    json inner;
    inner["consistent"] = rep.inner.consistent();
    json checks = json::array();
    for (const auto& c : rep.inner.checks)
        checks.push_back({{"element", c.element},
                          {"t", to_string(c.t)},
                          {"nilpotent", c.nilpotent},
                          {"matched", c.matched},
                          {"detail", c.detail}});
    inner["checks"] = std::move(checks);
    doc["inner_automorphisms"] = std::move(inner);

    doc["status"] = rep.complete() ? "complete" : "incomplete";
    return doc;
}

std::string to_text(const AnalysisReport& rep) {
    const LieAlgebra& g = rep.algebra;
    std::ostringstream os;
    os << "lieaut " << kToolVersion << "  input " << rep.input_digest << "\n";
    os << "algebra " << g.name() << "  dim " << g.dim() << "  basis " << join(g.basis_names(), ", ") << "\n";
    if (!rep.validation.valid()) {
        os << "INVALID: " << rep.validation.antisymmetry.size() << " antisymmetry violation(s), "
           << rep.validation.jacobi.size() << " Jacobi residual(s)\n";
        return os.str();
    }
    os << "valid\n\nseries\n";
    for (const auto& s : rep.series) {
        os << "  " << to_string(s.kind) << ":";
        for (const auto& t : s.terms) os << " " << span_text(g, t);
        os << "\n";
    }
    os << "\nmegaideals (" << rep.lattice.members.size() << ", " << rep.lattice.passes << " passes"
       << (rep.lattice.fixpoint ? ", fixpoint" : "") << (rep.lattice.budget_exceeded ? ", BUDGET EXCEEDED" : "")
       << ")\n";
    for (const auto& m : rep.lattice.members)
        os << "  " << (m.essential ? "  " : "~ ") << span_text(g, m.space) << "   from " << m.provenance << "\n";

    os << "\nadapted basis\n";
    for (std::size_t r = 0; r < rep.basis.change_of_basis.rows(); ++r)
        os << "  b" << r + 1 << " = " << format_element(g, rep.basis.change_of_basis.row(r)) << "\n";

    const auto& p = rep.parametrization;
    os << "\nautomorphism matrix (adapted basis)\n";
    for (std::size_t i = 0; i < p.n(); ++i) {
        os << " ";
        for (std::size_t j = 0; j < p.n(); ++j) os << "  " << p.entry(i, j).to_string();
        os << "\n";
    }
    os << "free parameters: " << join(p.free_parameters, ", ") << "\n";
    for (const auto& sc : p.side_conditions) os << "  subject to " << sc.text << "\n";
    if (!p.solved()) {
        os << "unsolved equations (" << p.residual_equations.size() << "):\n";
        for (const auto& r : p.residual_equations) os << "  " << r.to_string() << " = 0\n";
    }

    os << "\ninvariant coordinate subspaces\n";
    if (rep.invariant_subspaces) {
        for (const auto& s : *rep.invariant_subspaces) os << "  " << span_text(g, s) << "\n";
    } else {
        os << "  skipped: " << rep.enumeration_note << "\n";
    }
    os << "\ninner automorphisms " << (rep.inner.consistent() ? "consistent" : "INCONSISTENT") << "\n";
    return os.str();
}

}  // namespace lieaut

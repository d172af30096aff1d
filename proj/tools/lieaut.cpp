// lieaut: command-line front end.
//
//   lieaut validate ALGEBRA.json
//   lieaut analyze ALGEBRA.json [--text] [--out PATH] [--budget N] [--full-prop34] [--max-enum-dim N]
//   lieaut vf bracket-table FIELDS.json [--fields A,B,...]
//   lieaut vf extract FIELDS.json [--fields A,B,...] [--name NAME] [--out PATH]
//   lieaut vf pushforward FIELDS.json --map MAP.json [--fields ...]
//   lieaut vf homomorphism FIELDS.json --map MAP.json [--fields ...]
//
// Exit codes: 0 success, 1 validation failure, 2 parse/format error,
// 3 analysis incomplete (unclosed span, unsolved automorphism system).

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "lieaut/errors.hpp"
#include "lieaut/io.hpp"
#include "lieaut/kernels.hpp"
#include "lieaut/report.hpp"

using namespace lieaut;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kFormat = 2, kIncomplete = 3 };

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw LoadError("cannot write " + out_path);
    out << text;
}

void error_detail(const char* kind, const std::string& message, json extra = json::object()) {
    json e;
    e["error"] = kind;
    e["message"] = message;
    for (auto& [k, v] : extra.items()) e[k] = v;
    std::cerr << e.dump() << "\n";
}

std::vector<NamedField> chosen_fields(const FieldFile& file, const std::vector<std::string>& names) {
    return names.empty() ? file.fields : select_fields(file, names);
}

std::string field_list(const std::vector<NamedField>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + fields[i].name;
    return out;
}

int cmd_validate(const std::string& path) {
    const auto g = parse_algebra(read_file(path));
    const auto rep = validate(g);
    if (rep.valid()) {
        std::cout << g.name() << ": valid Lie algebra of dimension " << g.dim() << "\n";
        return kOk;
    }
    for (const auto& a : rep.antisymmetry)
        std::cout << "antisymmetry: [" << g.basis_names()[a.i] << ", " << g.basis_names()[a.j] << "] and ["
                  << g.basis_names()[a.j] << ", " << g.basis_names()[a.i] << "] differ in "
                  << g.basis_names()[a.k] << "\n";
    for (const auto& r : rep.jacobi)
        std::cout << "jacobi: (" << g.basis_names()[r.i] << ", " << g.basis_names()[r.j] << ", "
                  << g.basis_names()[r.l] << ") component " << g.basis_names()[r.m] << " = " << to_string(r.value)
                  << "\n";
    return kInvalid;
}

int cmd_analyze(const std::string& path, const AnalysisOptions& opts, bool text, const std::string& out) {
    const std::string bytes = read_file(path);
    const auto g = parse_algebra(bytes);
    const auto rep = analyze(g, fnv1a_hex(bytes), opts);
    emit(text ? to_text(rep) : to_json(rep).dump(2) + "\n", out);
    if (!rep.validation.valid()) return kInvalid;
    if (!rep.complete()) {
        json extra;
        extra["residual_equations"] = rep.parametrization.residual_equations.size();
        error_detail("ResidualSystem", "automorphism system not fully solved", extra);
        return kIncomplete;
    }
    return kOk;
}

int cmd_bracket_table(const FieldFile& file, const std::vector<std::string>& names) {
    const auto fields = chosen_fields(file, names);
    std::vector<PolyVectorField> raw;
    for (const auto& f : fields) raw.push_back(f.field);
    const auto table = kernels::bracket_table_parallel(raw);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = i + 1; j < fields.size(); ++j, ++idx)
            std::cout << "[" << fields[i].name << ", " << fields[j].name << "] = " << table[idx].to_string() << "\n";
    return kOk;
}

int cmd_extract(const std::string& path, const FieldFile& file, const std::vector<std::string>& names,
                std::string name, const std::string& out) {
    const auto fields = chosen_fields(file, names);
    if (name.empty()) name = std::filesystem::path(path).stem().string() + "[" + field_list(fields) + "]";
    emit(dump_algebra(extract_structure(fields, name)), out);
    return kOk;
}

int cmd_pushforward(const FieldFile& file, const std::vector<std::string>& names, const std::string& map_path) {
    const auto map = parse_point_map(read_file(map_path));
    FieldFile out{map.vars(), {}};
    for (const auto& f : chosen_fields(file, names)) {
        if (!same_vars(f.field.vars(), map.vars()) && *f.field.vars() != *map.vars())
            throw LoadError("map variables differ from field variables");
        const PolyVectorField q(map.vars(), f.field.components());
        out.fields.push_back({f.name, pushforward(map, q)});
    }
    std::cout << dump_field_file(out);
    return kOk;
}

int cmd_homomorphism(const FieldFile& file, const std::vector<std::string>& names, const std::string& map_path) {
    const auto map = parse_point_map(read_file(map_path));
    std::vector<NamedField> fields;
    for (const auto& f : chosen_fields(file, names))
        fields.push_back({f.name, PolyVectorField(map.vars(), f.field.components())});
    const auto rep = verify_homomorphism(map, fields);
    std::cout << rep.pairs_checked << " pairs checked, " << rep.failures.size() << " failure(s)\n";
    for (const auto& f : rep.failures)
        std::cout << "  [" << f.left << ", " << f.right << "]: expected " << f.expected.to_string() << ", got "
                  << f.actual.to_string() << "\n";
    return rep.ok() ? kOk : kInvalid;
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size() && !csv.empty()) {
        const auto comma = csv.find(',', start);
        out.push_back(csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Megaideals and automorphism constraints of finite-dimensional Lie algebras"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    std::string input, out_path, map_path, fields_csv, name;
    bool text = false;
    AnalysisOptions opts;

    auto* validate_cmd = app.add_subcommand("validate", "Check antisymmetry and the Jacobi identity");
    validate_cmd->add_option("file", input, "Algebra JSON file")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "Series, megaideals, automorphism shape and invariants");
    analyze_cmd->add_option("file", input, "Algebra JSON file")->required();
    analyze_cmd->add_flag("--text", text, "Human-readable output instead of JSON");
    analyze_cmd->add_option("--out", out_path, "Write the report to a file");
    analyze_cmd->add_option("--budget", opts.budget, "Maximum closure passes")->capture_default_str();
    analyze_cmd->add_flag("--full-prop34", opts.full_prop34, "Try every member triple in the three-ideal construction");
    analyze_cmd->add_option("--max-enum-dim", opts.max_enum_dim, "Largest dimension for the coordinate scan")
        ->capture_default_str();

    auto* vf_cmd = app.add_subcommand("vf", "Polynomial vector fields");
    vf_cmd->require_subcommand(1);
    auto add_vf = [&](const char* cmd, const char* help) {
        auto* sub = vf_cmd->add_subcommand(cmd, help);
        sub->add_option("file", input, "Vector-field JSON file")->required();
        sub->add_option("--fields", fields_csv, "Comma-separated subset of field names (file order is kept)");
        return sub;
    };
    auto* table_cmd = add_vf("bracket-table", "Print every pairwise bracket");
    auto* extract_cmd = add_vf("extract", "Structure constants of the span, as an algebra file");
    extract_cmd->add_option("--name", name, "Algebra name (default: FILESTEM[fields])");
    extract_cmd->add_option("--out", out_path, "Write the algebra to a file");
    auto* push_cmd = add_vf("pushforward", "Push fields forward along a point map");
    push_cmd->add_option("--map", map_path, "Point-map JSON file")->required();
    auto* hom_cmd = add_vf("homomorphism", "Check that a point map preserves all brackets");
    hom_cmd->add_option("--map", map_path, "Point-map JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kFormat;
    }

    try {
        if (*validate_cmd) return cmd_validate(input);
        if (*analyze_cmd) return cmd_analyze(input, opts, text, out_path);
        const auto file = parse_field_file(read_file(input));
        const auto names = split_csv(fields_csv);
        if (*table_cmd) return cmd_bracket_table(file, names);
        if (*extract_cmd) return cmd_extract(input, file, names, name, out_path);
        if (*push_cmd) return cmd_pushforward(file, names, map_path);
        if (*hom_cmd) return cmd_homomorphism(file, names, map_path);
    } catch (const ParseError& e) {
        error_detail("ParseError", e.what(), {{"position", e.position()}});
        return kFormat;
    } catch (const LoadError& e) {
        error_detail("LoadError", e.what());
        return kFormat;
    } catch (const NotClosed& e) {
        error_detail("NotClosed", e.what(), {{"left", e.left()}, {"right", e.right()}, {"bracket", e.bracket()}});
        return kIncomplete;
    } catch (const ResidualSystem& e) {
        error_detail("ResidualSystem", e.what());
        return kIncomplete;
    } catch (const LinearlyDependent& e) {
        error_detail("LinearlyDependent", e.what(), {{"relation", e.witness()}});
        return kInvalid;
    } catch (const Error& e) {
        error_detail("Error", e.what());
        return kInvalid;
    }
    return kOk;
}

#include "lieaut/io.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lieaut/errors.hpp"

namespace lieaut {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col), stop);
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw LoadError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw LoadError(where + ": missing \"" + key + "\"");
    return *it;
}

std::string require_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw LoadError(where + ": expected a string");
    return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
    if (!v.is_array()) throw LoadError(where + ": expected an array of strings");
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto s = require_string(v[i], where + "[" + std::to_string(i) + "]");
        if (s.empty()) throw LoadError(where + "[" + std::to_string(i) + "]: empty name");
        if (!seen.insert(s).second) throw LoadError(where + ": duplicate name \"" + s + "\"");
        out.push_back(std::move(s));
    }
    return out;
}

Rational rational_at(const json& v, const std::string& where) {
    const auto text = require_string(v, where);
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.position());
    }
}

Poly poly_at(const json& v, const VarList& vars, const std::string& where) {
    const auto text = require_string(v, where);
    try {
        return parse_poly(text, vars);
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.position());
    }
}

std::size_t lookup(const std::vector<std::string>& names, const std::string& name, const std::string& where) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw LoadError(where + ": unknown name \"" + name + "\"");
}

std::size_t basis_ref(const json& v, const std::vector<std::string>& basis, const std::string& where) {
    if (v.is_string()) return lookup(basis, v.get<std::string>(), where);
    if (v.is_number_unsigned()) {
        const auto idx = v.get<std::uint64_t>();
        if (idx >= basis.size()) throw LoadError(where + ": index " + std::to_string(idx) + " out of range");
        return static_cast<std::size_t>(idx);
    }
    throw LoadError(where + ": expected a basis name or a nonnegative index");
}

std::size_t key_ref(const std::string& key, const std::vector<std::string>& basis, const std::string& where) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == key) return i;
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos && key.size() < 10) {
        const auto idx = std::stoul(key);
        if (idx < basis.size()) return idx;
    }
    throw LoadError(where + ": unknown basis element \"" + key + "\"");
}

std::vector<Poly> component_map(const json& obj, const VarList& vars, const std::string& where, bool identity) {
    if (!obj.is_object()) throw LoadError(where + ": expected an object of polynomials");
    std::vector<Poly> out;
    for (std::size_t i = 0; i < vars->size(); ++i)
        out.push_back(identity ? Poly::variable(vars, i) : Poly(vars));
    for (const auto& [key, value] : obj.items()) {
        const auto idx = lookup(*vars, key, where);
        out[idx] = poly_at(value, vars, where + "." + key);
    }
    return out;
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text) {
    const json doc = parse_json(text);
    const std::string name = require_string(require(doc, "name", "algebra"), "name");
    const auto basis = string_list(require(doc, "basis", "algebra"), "basis");
    const std::size_t n = basis.size();
    const json& brackets = require(doc, "brackets", "algebra");
    if (!brackets.is_array()) throw LoadError("brackets: expected an array");

    std::vector<Rational> c(n * n * n);
    std::vector<std::optional<std::string>> given(n * n);  // where (i,j) was supplied
    for (std::size_t b = 0; b < brackets.size(); ++b) {
        const std::string where = "brackets[" + std::to_string(b) + "]";
        const json& entry = brackets[b];
        const auto i = basis_ref(require(entry, "left", where), basis, where + ".left");
        const auto j = basis_ref(require(entry, "right", where), basis, where + ".right");
        const json& result = require(entry, "result", where);
        if (!result.is_object()) throw LoadError(where + ".result: expected an object");
        Vector v(n);
        for (const auto& [key, value] : result.items()) {
            const auto k = key_ref(key, basis, where + ".result");
            v[k] += rational_at(value, where + ".result." + key);
        }
        if (i == j) {
            if (!is_zero(v)) throw LoadError(where + ": [" + basis[i] + ", " + basis[i] + "] must be zero");
            continue;
        }
        auto check_against = [&](std::size_t a, std::size_t bb, const Rational& sign) {
            for (std::size_t k = 0; k < n; ++k)
                if (c[(a * n + bb) * n + k] != sign * v[k]) return false;
            return true;
        };
        if (given[i * n + j] && !check_against(i, j, Rational(1)))
            throw LoadError(where + ": conflicts with " + *given[i * n + j]);
        if (given[j * n + i] && !check_against(i, j, Rational(1)))
            throw LoadError(where + ": inconsistent with the antisymmetric entry " + *given[j * n + i]);
        for (std::size_t k = 0; k < n; ++k) {
            c[(i * n + j) * n + k] = v[k];
            c[(j * n + i) * n + k] = -v[k];
        }
        given[i * n + j] = where;
    }
    return LieAlgebra(name, basis, std::move(c));
}

std::string dump_algebra(const LieAlgebra& g) {
    json doc;
    doc["name"] = g.name();
    doc["basis"] = g.basis_names();
    json brackets = json::array();
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            json result = json::object();
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(g.c(i, j, k)) != 0) result[g.basis_names()[k]] = to_string(g.c(i, j, k));
            if (result.empty()) continue;
            json entry;
            entry["left"] = g.basis_names()[i];
            entry["right"] = g.basis_names()[j];
            entry["result"] = std::move(result);
            brackets.push_back(std::move(entry));
        }
    doc["brackets"] = std::move(brackets);
    return doc.dump(2) + "\n";
}

FieldFile parse_field_file(std::string_view text) {
    const json doc = parse_json(text);
    FieldFile out;
    out.vars = make_vars(string_list(require(doc, "variables", "field file"), "variables"));
    const json& fields = require(doc, "fields", "field file");
    if (!fields.is_array()) throw LoadError("fields: expected an array");
    std::set<std::string> seen;
    for (std::size_t f = 0; f < fields.size(); ++f) {
        const std::string where = "fields[" + std::to_string(f) + "]";
        auto name = require_string(require(fields[f], "name", where), where + ".name");
        if (!seen.insert(name).second) throw LoadError(where + ": duplicate field name \"" + name + "\"");
        auto comps = component_map(require(fields[f], "components", where), out.vars, where + ".components", false);
        out.fields.push_back({std::move(name), PolyVectorField(out.vars, std::move(comps))});
    }
    return out;
}

std::string dump_field_file(const FieldFile& file) {
    json doc;
    doc["variables"] = *file.vars;
    json fields = json::array();
    for (const auto& f : file.fields) {
        json comps = json::object();
        for (std::size_t i = 0; i < f.field.nvars(); ++i)
            if (!f.field.component(i).is_zero()) comps[(*file.vars)[i]] = f.field.component(i).to_string();
        json entry;
        entry["name"] = f.name;
        entry["components"] = std::move(comps);
        fields.push_back(std::move(entry));
    }
    doc["fields"] = std::move(fields);
    return doc.dump(2) + "\n";
}

std::vector<NamedField> select_fields(const FieldFile& file, const std::vector<std::string>& names) {
    std::set<std::string> wanted;
    for (const auto& n : names) {
        if (!wanted.insert(n).second) throw LoadError("field \"" + n + "\" requested twice");
        bool found = false;
        for (const auto& f : file.fields) found = found || f.name == n;
        if (!found) throw LoadError("unknown field \"" + n + "\"");
    }
    std::vector<NamedField> out;
    for (const auto& f : file.fields)
        if (wanted.count(f.name)) out.push_back(f);
    return out;
}

PointMap parse_point_map(std::string_view text) {
    const json doc = parse_json(text);
    const VarList vars = make_vars(string_list(require(doc, "variables", "point map"), "variables"));
    auto forward = component_map(require(doc, "forward", "point map"), vars, "forward", true);
    auto inverse = component_map(require(doc, "inverse", "point map"), vars, "inverse", true);
    return PointMap::create(vars, std::move(forward), std::move(inverse));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    return out;
}

}  // namespace lieaut

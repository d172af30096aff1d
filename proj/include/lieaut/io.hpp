#pragma once

// JSON file formats: algebras, vector-field families and point maps.
//
// Syntax errors raise ParseError (with a line:column in the message); files that
// parse as JSON but break a format rule raise LoadError naming the offending
// element.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lieaut/lie_algebra.hpp"
#include "lieaut/vectorfield.hpp"

namespace lieaut {

/// {"name", "basis": [...], "brackets": [{"left", "right", "result": {name|index: "p/q"}}]}.
/// Indices are 0-based. Missing brackets are zero; (j,i) is filled in from (i,j).
LieAlgebra parse_algebra(std::string_view text);

/// Canonical rendering: brackets with i < j and nonzero result only, in (i,j)
/// order, keys by basis name in basis order, two-space indent, trailing newline.
std::string dump_algebra(const LieAlgebra& g);

struct FieldFile {
    VarList vars;
    std::vector<NamedField> fields;
};

/// {"variables": [...], "fields": [{"name", "components": {var: poly}}]}; absent components are zero.
FieldFile parse_field_file(std::string_view text);
std::string dump_field_file(const FieldFile& file);

/// Keeps the named fields in file order. Throws LoadError for an unknown or repeated name.
std::vector<NamedField> select_fields(const FieldFile& file, const std::vector<std::string>& names);

/// {"variables": [...], "forward": {var: poly}, "inverse": {var: poly}}; absent entries map a variable to itself.
PointMap parse_point_map(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace lieaut

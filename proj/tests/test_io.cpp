#include <doctest.h>

#include "lieaut/errors.hpp"
#include "lieaut/io.hpp"
#include "lieaut/report.hpp"
#include "support.hpp"

using namespace lieaut;

TEST_CASE("algebra files") {
    const std::string text = testing::data_path("m5.json");
    const auto bytes = read_file(text);
    const auto g = parse_algebra(bytes);
    CHECK(dump_algebra(g) == bytes);
    CHECK(parse_algebra(dump_algebra(g)).tensor() == g.tensor());

    const auto by_index = parse_algebra(R"({"name": "h", "basis": ["a", "b", "c"],
        "brackets": [{"left": 0, "right": 1, "result": {"2": "1"}}, {"left": "b", "right": "a", "result": {"c": "-1"}}]})");
    CHECK(by_index.tensor() == testing::from_table("h", {"a", "b", "c"}, {{0, 1, {{2, 1}}}}).tensor());
}

TEST_CASE("algebra load errors") {
    CHECK_THROWS_AS(parse_algebra(R"({"name": "x", "basis": ["a", "b"], "brackets": [
        {"left": "a", "right": "b", "result": {"a": "1"}},
        {"left": "b", "right": "a", "result": {"a": "1"}}]})"),
                    LoadError);
    CHECK_THROWS_AS(parse_algebra(R"({"name": "x", "basis": ["a", "b"], "brackets": [
        {"left": "a", "right": "c", "result": {"a": "1"}}]})"),
                    LoadError);
    CHECK_THROWS_AS(parse_algebra(R"({"name": "x", "basis": ["a", "a"], "brackets": []})"), LoadError);
    CHECK_THROWS_AS(parse_algebra(R"({"name": "x", "basis": ["a", "b"], "brackets": [
        {"left": "a", "right": "a", "result": {"b": "1"}}]})"),
                    LoadError);
    CHECK_THROWS_AS(parse_algebra(R"({"name": "x", "basis": ["a", "b"], "brackets": [
        {"left": 0, "right": 5, "result": {}}]})"),
                    LoadError);
    CHECK_THROWS_AS(parse_algebra(R"({"basis": ["a"], "brackets": []})"), LoadError);
    CHECK_THROWS_AS(parse_algebra(R"({"name": "x", "basis": ["a", "b"], "brackets": [
        {"left": "a", "right": "b", "result": {"a": "1/0"}}]})"),
                    ParseError);
    try {
        parse_algebra("{\n  \"name\": \"x\",\n  \"basis\": [\"a\"\n  \"brackets\": []\n}");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("field and map files") {
    const auto file = parse_field_file(read_file(testing::data_path("paperfamily.json")));
    CHECK(file.fields.size() == 13);
    CHECK(parse_field_file(dump_field_file(file)).fields.size() == 13);
    const auto sub = select_fields(file, {"Dt", "G1", "Pt"});
    REQUIRE(sub.size() == 3);
    CHECK(sub[0].name == "G1");
    CHECK(sub[2].name == "Dt");
    CHECK_THROWS_AS(select_fields(file, {"Nope"}), LoadError);
    CHECK_THROWS_AS(select_fields(file, {"G1", "G1"}), LoadError);

    CHECK_THROWS_AS(parse_field_file(R"({"variables": ["x"], "fields": [{"name": "a", "components": {"y": "1"}}]})"),
                    LoadError);
    try {
        parse_field_file(R"({"variables": ["x"], "fields": [{"name": "a", "components": {"x": "x + $"}}]})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("fields[0].components.x") != std::string::npos);
    }
    for (const char* m : {"maps/shift_t.json", "maps/scale_u.json", "maps/shear_u.json"})
        CHECK_NOTHROW(parse_point_map(read_file(testing::data_path(m))));
}

TEST_CASE("digest") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("analysis report") {
    const auto bytes = read_file(testing::data_path("m5.json"));
    const auto rep = analyze(parse_algebra(bytes), fnv1a_hex(bytes));
    CHECK(rep.complete());
    const auto j = to_json(rep);
    CHECK(j["status"] == "complete");
    CHECK(j["automorphisms"]["assignments"]["a55"] == "1");
    CHECK(j["automorphisms"]["assignments"]["a34"] == "0");
    CHECK(j["invariant_coordinate_subspaces"]["subspaces"].size() == 7);
    CHECK(j["tool"]["version"] == kToolVersion);
    CHECK(to_json(analyze(parse_algebra(bytes), fnv1a_hex(bytes))).dump() == j.dump());
    CHECK(to_text(rep).find("<G1, F1, Pt>") != std::string::npos);

    const auto sl = analyze(testing::fixture("sl2d.json"), "0");
    CHECK_FALSE(sl.complete());
    const auto sj = to_json(sl);
    CHECK(sj["lattice"]["members"].size() == 2);
    CHECK(sj["automorphisms"]["shape"][0] == "***");
    CHECK_FALSE(sj["automorphisms"]["residual_equations"].empty());
    CHECK(sj["invariant_coordinate_subspaces"]["status"] == "skipped");

    const auto bad = analyze(testing::from_table("nj", {"a", "b", "c"}, {{0, 1, {{0, 1}}}, {1, 2, {{1, 1}}}, {2, 0, {{2, 1}}}}), "0");
    CHECK(to_json(bad)["status"] == "invalid");
}

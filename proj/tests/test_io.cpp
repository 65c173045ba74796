#include <permblocks/io.hpp>

#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace permblocks;

namespace {

const std::string kData = PERMBLOCKS_DATA_DIR;

ErrorKind problem_kind(const std::string &text) {
  try {
    parse_problem_text(text, "");
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

ErrorKind ring_kind(const std::string &text) {
  try {
    parse_ring_text(text);
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

} // namespace

TEST_CASE("bundled ring files match their in-code counterparts") {
  struct Row {
    const char *file;
    FusionRing expected;
  };
  const Row rows[] = {{"trivial", oracles::make_trivial()},
                      {"ising", oracles::make_ising()},
                      {"fibonacci", oracles::make_fibonacci()},
                      {"z3", oracles::make_z3()}};
  for (const auto &row : rows) {
    CAPTURE(row.file);
    auto ring = load_ring(kData + "/rings/" + row.file + ".json");
    CHECK(ring.name == row.expected.name);
    CHECK(ring.labels == row.expected.labels);
    CHECK(ring.unit == row.expected.unit);
    CHECK(ring.dual == row.expected.dual);
    CHECK(ring.coeffs == row.expected.coeffs);
    CHECK(validate_ring(ring).empty());
  }
}

TEST_CASE("bundled example problems load") {
  auto figure = load_problem(kData + "/examples/figure2.json");
  CHECK(figure.data.point_count() == 4);
  REQUIRE(figure.ring.has_value());
  CHECK(figure.ring->name == "ising");
  CHECK(figure.ring_path == std::string("../rings/ising.json"));
  CHECK(figure.has_assignment);
  CHECK(figure.assignment.size() == 4);
  CHECK(figure.assignment.at({0, 0}) == 2);
  CHECK_FALSE(figure.provenance.empty());

  auto cyclic = load_problem(kData + "/examples/cyclic3.json");
  CHECK(cyclic.data.point_count() == 3);
  CHECK_FALSE(cyclic.ring.has_value());
  CHECK_FALSE(cyclic.has_assignment);

  auto left = load_problem(kData + "/examples/sew_left.json");
  auto right = load_problem(kData + "/examples/sew_right.json");
  CHECK(left.data.points()[0].id == "x0");
  CHECK(right.data.points()[0].id == "y0");
  CHECK(left.assignment.size() == 2);
}

TEST_CASE("problem parsing features") {
  const std::string text = R"json({
    "format_version": 1,
    "provenance": "test fixture",
    "ground": {"size": 3, "names": {"1": "a", "3": "c"}},
    "points": [
      {"id": "p", "perm": "(a c)", "position_hint": "0"},
      {"id": "q", "perm": "(1 3)"}
    ],
    "marked": [{"point": "p", "orbit": 1, "element": 3}],
    "ring": {
      "format_version": 1,
      "labels": ["1", "t"],
      "unit": "1",
      "coeffs": [["1", "1", "1", 1], ["1", "t", "t", 1], ["t", "1", "t", 1],
                 ["t", "t", "1", 1]]
    },
    "assignment": [
      {"point": "p", "orbit": 1, "label": "t"},
      {"point": "p", "orbit": 2, "label": "1"},
      {"point": "q", "orbit": 1, "label": "t"},
      {"point": "q", "orbit": 2, "label": "1"}
    ],
    "metadata": {"anything": "ignored"}
  })json";
  auto problem = parse_problem_text(text, "");
  CHECK(problem.data.ground().display(0) == "a");
  CHECK(problem.data.ground().display(1) == "2");
  CHECK(problem.data.points()[0].position_hint == "0");
  CHECK(problem.data.gen(0) == problem.data.gen(1));
  CHECK(problem.data.marked_element({0, 0}) == 2); // override to element 3
  CHECK(problem.data.marked_element({1, 0}) == 0);
  REQUIRE(problem.ring.has_value());
  CHECK_FALSE(problem.ring_path.has_value());
  CHECK(problem.assignment.at({0, 0}) == 1);
  CHECK(problem.assignment.at({0, 1}) == 0);
  CHECK(problem.provenance == "test fixture");
}

TEST_CASE("ring schema errors") {
  CHECK(ring_kind("not json") == ErrorKind::SchemaError);
  CHECK(ring_kind("{}") == ErrorKind::SchemaError);
  CHECK(ring_kind(R"json({"format_version": 2, "labels": ["1"], "unit": "1",
                      "coeffs": []})json") == ErrorKind::SchemaError);
  CHECK(ring_kind(R"json({"format_version": 1, "labels": [], "unit": "1",
                      "coeffs": []})json") == ErrorKind::SchemaError);
  CHECK(ring_kind(R"json({"format_version": 1, "labels": ["1"], "unit": "x",
                      "coeffs": []})json") == ErrorKind::SchemaError);
  CHECK(ring_kind(R"json({"format_version": 1, "labels": ["1"], "unit": "1",
                      "coeffs": [["1", "1", "1", 1]], "extra": 0})json") ==
        ErrorKind::SchemaError);
  CHECK(ring_kind(R"json({"format_version": 1, "labels": ["1"], "unit": "1",
                      "coeffs": [["1", "1", "1", 1], ["1", "1", "1", 2]]})json") ==
        ErrorKind::SchemaError);
  CHECK(ring_kind(R"json({"format_version": 1, "labels": ["1"], "unit": "1",
                      "coeffs": [["1", "1", "1", -1]]})json") == ErrorKind::SchemaError);
  CHECK(ring_kind(R"json({"format_version": 1, "labels": ["1", "a"], "unit": "1",
                      "dual": [["a", "a"], ["a", "1"]],
                      "coeffs": [["1", "1", "1", 1]]})json") == ErrorKind::SchemaError);
  // valid structure, failed axioms
  CHECK(ring_kind(R"json({"format_version": 1, "labels": ["1", "t"], "unit": "1",
                      "coeffs": [["1", "1", "1", 1]]})json") == ErrorKind::InvalidRing);
}

TEST_CASE("large coefficients survive as decimal strings") {
  auto ring = parse_ring_text(R"json({
    "format_version": 1, "labels": ["1", "t"], "unit": "1",
    "coeffs": [["1", "1", "1", 1], ["1", "t", "t", 1], ["t", "1", "t", 1],
               ["t", "t", "1", 1], ["t", "t", "t", "123456789012345678901234567890"]]
  })json",
                              false);
  CHECK(ring.coeff(1, 1, 1) == Integer("123456789012345678901234567890"));
}

TEST_CASE("problem schema errors") {
  CHECK(problem_kind("{") == ErrorKind::SchemaError);
  CHECK(problem_kind(R"json({"format_version": 1})json") == ErrorKind::SchemaError);
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 0},
                         "points": []})json") == ErrorKind::SchemaError);
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 2},
                         "points": [{"id": "a", "perm": "(1 2)"}],
                         "unknown": 1})json") == ErrorKind::SchemaError);
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 2},
                         "points": [{"id": "a", "perm": "(1 2 3)"}]})json") ==
        ErrorKind::UnknownElement);
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 2},
                         "points": [{"id": "a", "perm": "(1 2)"}]})json") ==
        ErrorKind::NotAdmissible);
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 2},
                         "points": [{"id": "a", "perm": "(1 2)"},
                                    {"id": "a", "perm": "(1 2)"}]})json") ==
        ErrorKind::SchemaError);
  // assignment without a ring
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 2},
                         "points": [{"id": "a", "perm": "(1 2)"},
                                    {"id": "b", "perm": "(1 2)"}],
                         "assignment": [{"point": "a", "orbit": 1, "label": "x"}]})json") ==
        ErrorKind::SchemaError);
  // marked element outside the orbit
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 3},
                         "points": [{"id": "a", "perm": "(1 2)"},
                                    {"id": "b", "perm": "(1 2)"}],
                         "marked": [{"point": "a", "orbit": 1, "element": 3}]})json") ==
        ErrorKind::BadMarkedChoice);
  // duplicate assignment rows
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 2},
                         "points": [{"id": "a", "perm": "(1 2)"},
                                    {"id": "b", "perm": "(1 2)"}],
                         "ring": {"format_version": 1, "labels": ["1"], "unit": "1",
                                  "coeffs": [["1", "1", "1", 1]]},
                         "assignment": [{"point": "a", "orbit": 1, "label": "1"},
                                        {"point": "a", "orbit": 1, "label": "1"}]})json") ==
        ErrorKind::SchemaError);
  // unknown label in the assignment
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 2},
                         "points": [{"id": "a", "perm": "(1 2)"},
                                    {"id": "b", "perm": "(1 2)"}],
                         "ring": {"format_version": 1, "labels": ["1"], "unit": "1",
                                  "coeffs": [["1", "1", "1", 1]]},
                         "assignment": [{"point": "a", "orbit": 1, "label": "zz"}]})json") ==
        ErrorKind::SchemaError);
  // assignment naming a nonexistent orbit
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 2},
                         "points": [{"id": "a", "perm": "(1 2)"},
                                    {"id": "b", "perm": "(1 2)"}],
                         "ring": {"format_version": 1, "labels": ["1"], "unit": "1",
                                  "coeffs": [["1", "1", "1", 1]]},
                         "assignment": [{"point": "a", "orbit": 2, "label": "1"}]})json") ==
        ErrorKind::SchemaError);
  // assignment naming an unknown point
  CHECK(problem_kind(R"json({"format_version": 1, "ground": {"size": 2},
                         "points": [{"id": "a", "perm": "(1 2)"},
                                    {"id": "b", "perm": "(1 2)"}],
                         "ring": {"format_version": 1, "labels": ["1"], "unit": "1",
                                  "coeffs": [["1", "1", "1", 1]]},
                         "assignment": [{"point": "zz", "orbit": 1, "label": "1"}]})json") ==
        ErrorKind::SchemaError);
}

TEST_CASE("problem writing round-trips") {
  std::mt19937_64 rng(1011);
  auto ring = oracles::make_ising();
  for (int trial = 0; trial < 100; ++trial) {
    auto data = oracles::random_admissible(rng, 6, 5);
    auto marked = oracles::random_marked(rng, data);
    data = build_monodromy(data.ground(), data.points(), data.gens(), marked);
    auto assignment = oracles::random_assignment(rng, data, ring.size());

    ProblemWriteSpec spec;
    spec.data = &data;
    spec.assignment = &assignment;
    spec.ring = &ring;
    spec.inline_ring = true;
    spec.metadata.emplace_back("note", "round trip");
    auto text = write_problem(spec);

    auto back = parse_problem_text(text, "");
    CHECK(back.data.ground() == data.ground());
    CHECK(back.data.points() == data.points());
    CHECK(back.data.gens() == data.gens());
    CHECK(back.data.marked() == data.marked());
    REQUIRE(back.ring.has_value());
    CHECK(back.ring->labels == ring.labels);
    CHECK(back.assignment == assignment);
  }
}

TEST_CASE("problem writing with a ring path reference") {
  auto problem = load_problem(kData + "/examples/figure2.json");
  ProblemWriteSpec spec;
  spec.data = &problem.data;
  spec.assignment = &problem.assignment;
  spec.ring = &*problem.ring;
  spec.ring_path = *problem.ring_path;
  auto text = write_problem(spec);
  auto json = nlohmann::json::parse(text);
  CHECK(json.at("ring") == "../rings/ising.json");
  auto back = parse_problem_text(text, kData + "/examples");
  REQUIRE(back.ring.has_value());
  CHECK(back.ring->name == "ising");
}

TEST_CASE("cover rendering") {
  auto problem = load_problem(kData + "/examples/figure2.json");
  auto report = build_covering(problem.data);

  auto text = render_cover(report, false);
  CHECK(text.find("degree 2, components 1") != std::string::npos);
  CHECK(text.find("genus 1") != std::string::npos);

  auto json = nlohmann::json::parse(render_cover(report, true));
  CHECK(json.at("format_version") == 1);
  CHECK(json.at("degree") == 2);
  CHECK(json.at("admissible") == true);
  CHECK(json.at("components").size() == 1);
  CHECK(json.at("components")[0].at("genus") == 1);
  CHECK(json.at("components")[0].at("branches").size() == 4);
}

TEST_CASE("dim rendering uses decimal strings") {
  auto problem = load_problem(kData + "/examples/figure2.json");
  auto report = build_covering(problem.data);
  DimCache cache(*problem.ring);
  DimReport dim;
  dim.covering = &report;
  dim.ring = &*problem.ring;
  dim.factors = twisted_block_factors(report, cache, problem.assignment);
  dim.dimension = twisted_block_dim(report, cache, problem.assignment);
  dim.assignment = &problem.assignment;

  auto json = nlohmann::json::parse(render_dim(dim, true));
  CHECK(json.at("dimension") == "8");
  CHECK(json.at("factors")[0].at("value") == "8");
  CHECK(json.at("factors")[0].at("genus") == 1);

  auto text = render_dim(dim, false);
  CHECK(text.find("dimension: 8") != std::string::npos);
}

TEST_CASE("table rendering") {
  DimCache cache(oracles::make_z3());
  IndexSet ground(3);
  Permutation c = parse_cycles("(1 2 3)", ground);
  auto table = twisted_fusion_table(cache, 3, c, c);

  auto json = nlohmann::json::parse(render_table(table, cache.ring(), true));
  CHECK(json.at("modules1").size() == 3);
  CHECK(json.at("modules3").size() == 3);
  bool found = false;
  for (const auto &entry : json.at("entries"))
    if (entry.at("value") != "0")
      found = true;
  CHECK(found);

  auto text = render_table(table, cache.ring(), false);
  CHECK(text.find("(1: g) x (1: g) = 3*(1: g2)") != std::string::npos);
}

TEST_CASE("ring report rendering") {
  auto ring = oracles::make_ising();
  auto json = nlohmann::json::parse(render_ring_report(ring, {}, true));
  CHECK(json.at("valid") == true);
  CHECK(json.at("labels").size() == 3);

  ring.set_coeff(1, 2, 2, 2);
  auto violations = validate_ring(ring);
  REQUIRE_FALSE(violations.empty());
  auto bad = nlohmann::json::parse(render_ring_report(ring, violations, true));
  CHECK(bad.at("valid") == false);
  CHECK(bad.at("violations").size() == violations.size());
}

TEST_CASE("sew rendering embeds the glued problem") {
  auto spec = SewSpec{load_problem(kData + "/examples/sew_left.json").data,
                      load_problem(kData + "/examples/sew_right.json").data, 0, 0};
  auto sewn = sew(spec);
  SewReport report;
  report.sewn = &sewn;
  report.spec = &spec;
  auto json = nlohmann::json::parse(render_sew(report, true));
  CHECK(json.at("sewn").at("points").size() == 4);
  CHECK(json.at("left_point") == "x0");
  CHECK(json.at("right_point") == "y0");
  CHECK(json.at("renames").is_array());

  auto text = render_sew(report, false);
  CHECK(text.find("result points:") != std::string::npos);
}

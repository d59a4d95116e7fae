#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefschetz/batch.hpp"
#include "lefschetz/document.hpp"

using namespace lefschetz;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_fibration_text(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a document") {
  const auto doc = parse_fibration_text(R"({
    "boundary_components": 3,
    "vanishing_cycles": [{"encloses": [1]}, {"encloses": [2]}, {"class": [1, 1]}]
  })");
  CHECK(doc.fibration.r() == 2);
  CHECK(doc.fibration.m() == 3);
  CHECK(cycle_matrix(doc.fibration) == RationalMatrix{{1, 0, 1}, {0, 1, 1}});
  CHECK_FALSE(doc.force_non_allowable);

  const auto empty = parse_fibration_text(R"({"boundary_components": 1})");
  CHECK(empty.fibration.m() == 0);
}

TEST_CASE("validation errors name the field") {
  CHECK(error_of("{").find("syntax error") != std::string::npos);
  CHECK(error_of("{").find("line") != std::string::npos);
  CHECK(error_of("[]").find("document") == 0);
  CHECK(error_of("{}").find("boundary_components: missing") == 0);
  CHECK(error_of(R"({"boundary_components": 0})").find("boundary_components") == 0);
  CHECK(error_of(R"({"boundary_components": 2.5})").find("boundary_components") == 0);
  CHECK(error_of(R"({"boundary_components": 3, "extra": 1})").find("extra: unknown key") == 0);
  CHECK(error_of(R"({"boundary_components": 3, "vanishing_cycles": [{"encloses": [1, 3]}]})")
            .find("vanishing_cycles[0].encloses[1]") == 0);
  CHECK(error_of(R"({"boundary_components": 3, "vanishing_cycles": [{}, {"encloses": [1, 1]}]})")
            .find("vanishing_cycles[0]") == 0);
  CHECK(error_of(R"({"boundary_components": 3, "vanishing_cycles": [{"encloses": [1, 1]}]})")
            .find("listed twice") != std::string::npos);
  CHECK(error_of(R"({"boundary_components": 3, "vanishing_cycles": [{"class": [1]}]})")
            .find("vanishing_cycles[0].class") == 0);
  CHECK(error_of(R"({"boundary_components": 3, "vanishing_cycles": [{"class": [1, 0], "encloses": [1]}]})")
            .find("exactly one") != std::string::npos);
  CHECK(error_of(R"({"boundary_components": 1, "vanishing_cycles": [{"encloses": [0]}]})")
            .find("vanishing_cycles") == 0);
  CHECK(error_of(R"({"boundary_components": 3, "force_non_allowable": "yes"})")
            .find("force_non_allowable") == 0);
}

TEST_CASE("non-allowable cycles need force") {
  const std::string text =
      R"({"boundary_components": 3, "vanishing_cycles": [{"encloses": [0, 1, 2]}]})";
  CHECK_THROWS_AS(parse_fibration_text(text), NotAllowableError);
  CHECK(parse_fibration_text(text, true).fibration.outside_hypotheses());
  CHECK(parse_fibration_text(
            R"({"boundary_components": 3, "force_non_allowable": true, "vanishing_cycles": [{"class": [0, 0]}]})")
            .force_non_allowable);
}

TEST_CASE("canonical echo") {
  const auto doc = parse_fibration_text(
      R"({"boundary_components": 4, "vanishing_cycles": [{"encloses": [3, 1]}, {"encloses": [2, 0]}, {"class": [0, 2, -1]}]})");
  const Json echo = fibration_to_json(doc.fibration);
  CHECK(echo.dump() ==
        R"({"boundary_components":4,"vanishing_cycles":[{"encloses":[1,3]},{"encloses":[1,3],"orientation":-1},{"class":[0,2,-1]}],"force_non_allowable":false})");
}

TEST_CASE("property: echoed input round-trips to the same cycle vectors") {
  for (const auto& f : random_fibrations({99, 60, 6, 12})) {
    const auto full = compute_full_report(f);
    const Json report = report_to_json(f, full);
    const auto again = parse_fibration_document(report["input"]);
    REQUIRE(again.fibration.m() == f.m());
    CHECK(again.fibration.surface() == f.surface());
    for (std::size_t s = 0; s < f.m(); ++s)
      CHECK(again.fibration.cycles()[s].vector() == f.cycles()[s].vector());
    CHECK(report_to_json(again.fibration, compute_full_report(again.fibration)).dump() ==
          report.dump());
  }
}

TEST_CASE("report document") {
  const auto doc = parse_fibration_text(
      R"({"boundary_components": 3, "vanishing_cycles": [{"encloses": [1]}, {"encloses": [2]}, {"encloses": [1, 2]}]})");
  const auto full = compute_full_report(doc.fibration);
  const Json j = report_to_json(doc.fibration, full);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["sigma"] == -1);
  CHECK(j["b2"] == 1);
  CHECK(j["definiteness"] == "negative-definite");
  CHECK(j["oracle_agrees"] == true);
  CHECK(j["wall"]["w_dim"] == 2);
  CHECK(j["wall"]["correction_triple"] == Json::array({2, 0, 0}));
  CHECK(j["boundary_map"].size() == 3);
  CHECK(j["boundary_map"][0].size() == 6);
  for (const auto& row : j["wall"]["psi_matrix"])
    for (const auto& x : row) CHECK(x.is_string());

  const std::string table = report_to_table(doc.fibration, full);
  CHECK(table.find("negative-definite") != std::string::npos);
  CHECK(table.find("oracle agrees              yes") != std::string::npos);
}

TEST_CASE("matrices print as exact rationals") {
  RationalMatrix m(1, 3);
  m(0, 0) = make_rational(3, 2);
  m(0, 1) = -4;
  CHECK(matrix_to_json(m).dump() == R"([["3/2","-4","0"]])");
}

// JSON documents read and written by the command line tool.
//
// Input:
//   {"boundary_components": 3,
//    "vanishing_cycles": [{"encloses": [1]}, {"class": [1, 1]}],
//    "force_non_allowable": false}
//
// Reports carry schema_version and print matrices as arrays of exact
// rational strings ("3/2"), never floats.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lefschetz/fibration.hpp"
#include "lefschetz/wall.hpp"

namespace lefschetz {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or invalid document; what() names the offending field.
class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FibrationDocument {
  PlanarFibration fibration;
  bool force_non_allowable = false;
};

/// Throws DocumentError on syntax or schema problems and NotAllowableError
/// on a null-homologous cycle without force (or `force_override`).
FibrationDocument parse_fibration_document(const Json& doc, bool force_override = false);
FibrationDocument parse_fibration_text(std::string_view text, bool force_override = false);

/// Canonical form: sorted `encloses` lists that avoid boundary 0 (with
/// "orientation": -1 when the complement was given).
Json fibration_to_json(const PlanarFibration& f);

Json matrix_to_json(const RationalMatrix& m);

/// Everything computed for `f`: report fields, Wall data, boundary map and
/// the canonical input echo.
struct FullReport {
  InvariantsReport report;
  WallResult wall;
  MappingTorusBoundaryMap boundary_map;
};

FullReport compute_full_report(const PlanarFibration& f);
Json report_to_json(const PlanarFibration& f, const FullReport& full);
std::string report_to_table(const PlanarFibration& f, const FullReport& full);

}  // namespace lefschetz

#include "lefschetz/document.hpp"

#include <sstream>

namespace lefschetz {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw DocumentError(field + ": " + message);
}

std::int64_t integer_field(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field, "expected an integer");
  return v.get<std::int64_t>();
}

CurveClass parse_cycle(const Json& entry, const PlanarSurface& surface,
                       const std::string& field) {
  if (!entry.is_object()) fail(field, "expected an object");
  const bool has_encloses = entry.contains("encloses");
  const bool has_class = entry.contains("class");
  if (has_encloses == has_class) fail(field, "exactly one of \"encloses\" or \"class\" is required");
  for (const auto& [key, _] : entry.items())
    if (key != "encloses" && key != "class" && key != "orientation")
      fail(field, "unknown key \"" + key + "\"");

  if (has_class) {
    if (entry.contains("orientation")) fail(field + ".orientation", "only valid with \"encloses\"");
    const Json& arr = entry["class"];
    if (!arr.is_array()) fail(field + ".class", "expected an array of integers");
    if (arr.size() != surface.h1_dim())
      fail(field + ".class", "expected " + std::to_string(surface.h1_dim()) +
                                 " coefficients, got " + std::to_string(arr.size()));
    IntVector v;
    for (std::size_t i = 0; i < arr.size(); ++i)
      v.push_back(integer_field(arr[i], field + ".class[" + std::to_string(i) + "]"));
    return CurveClass::explicit_class(surface, std::move(v));
  }

  const Json& arr = entry["encloses"];
  if (!arr.is_array()) fail(field + ".encloses", "expected an array of boundary indices");
  std::vector<int> subset;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string sub = field + ".encloses[" + std::to_string(i) + "]";
    const auto idx = integer_field(arr[i], sub);
    if (idx < 0 || idx > surface.r())
      fail(sub, "index " + std::to_string(idx) + " outside 0.." + std::to_string(surface.r()));
    for (int prev : subset)
      if (prev == idx) fail(sub, "index " + std::to_string(idx) + " listed twice");
    subset.push_back(static_cast<int>(idx));
  }
  CurveClass c = CurveClass::enclosing(surface, std::move(subset));
  if (entry.contains("orientation")) {
    const auto o = integer_field(entry["orientation"], field + ".orientation");
    if (o != 1 && o != -1) fail(field + ".orientation", "expected 1 or -1");
    if (o == -1) c = c.negated();
  }
  return c;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace

FibrationDocument parse_fibration_document(const Json& doc, bool force_override) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "boundary_components" && key != "vanishing_cycles" &&
        key != "force_non_allowable")
      fail(key, "unknown key");

  if (!doc.contains("boundary_components")) fail("boundary_components", "missing");
  const auto bc = integer_field(doc["boundary_components"], "boundary_components");
  if (bc < 1) fail("boundary_components", "must be at least 1");
  if (bc > 4096) fail("boundary_components", "unreasonably large");

  bool force = false;
  if (doc.contains("force_non_allowable")) {
    if (!doc["force_non_allowable"].is_boolean())
      fail("force_non_allowable", "expected a boolean");
    force = doc["force_non_allowable"].get<bool>();
  }
  force = force || force_override;

  const PlanarSurface surface(static_cast<int>(bc - 1));
  std::vector<CurveClass> cycles;
  if (doc.contains("vanishing_cycles")) {
    const Json& arr = doc["vanishing_cycles"];
    if (!arr.is_array()) fail("vanishing_cycles", "expected an array");
    for (std::size_t s = 0; s < arr.size(); ++s)
      cycles.push_back(parse_cycle(arr[s], surface, "vanishing_cycles[" + std::to_string(s) + "]"));
  }
  if (surface.r() == 0 && !cycles.empty())
    fail("vanishing_cycles", "a disk fiber (boundary_components = 1) admits no vanishing cycles");

  return FibrationDocument{PlanarFibration(surface, std::move(cycles), force), force};
}

FibrationDocument parse_fibration_text(std::string_view text, bool force_override) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("syntax error: ") + e.what());
  }
  return parse_fibration_document(doc, force_override);
}

Json fibration_to_json(const PlanarFibration& f) {
  Json cycles = Json::array();
  for (const auto& c : f.cycles()) {
    Json entry = Json::object();
    if (c.kind() == CurveClass::Kind::Enclosing) {
      entry["encloses"] = c.enclosed();
      if (c.orientation() < 0) entry["orientation"] = -1;
    } else {
      entry["class"] = c.vector();
    }
    cycles.push_back(std::move(entry));
  }
  Json doc = Json::object();
  doc["boundary_components"] = f.surface().boundary_components();
  doc["vanishing_cycles"] = std::move(cycles);
  doc["force_non_allowable"] = f.allow_non_allowable();
  return doc;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FullReport compute_full_report(const PlanarFibration& f) {
  FullReport full;
  const bool force = f.allow_non_allowable();
  full.boundary_map = mapping_torus_boundary_map(f.surface(), f.cycles(), force);
  full.wall = wall_correction(standard_triple(f.surface(), f.cycles(), force));
  full.report = betti_report(f, full.wall);
  return full;
}

Json report_to_json(const PlanarFibration& f, const FullReport& full) {
  const InvariantsReport& rep = full.report;
  const auto triple_json = [](const SignatureTriple& t) {
    return Json::array({t.n_plus, t.n_minus, t.n_zero});
  };

  Json wall = Json::object();
  wall["w_dim"] = full.wall.w_dim;
  wall["psi_matrix"] = matrix_to_json(full.wall.psi);
  wall["correction_triple"] = triple_json(full.wall.correction);
  wall["sigma_correction"] = full.wall.sigma_correction;

  Json out = Json::object();
  out["schema_version"] = kSchemaVersion;
  out["input"] = fibration_to_json(f);
  out["m"] = rep.m;
  out["r"] = rep.r;
  out["d"] = rep.d;
  out["sigma"] = rep.sigma;
  out["b1"] = rep.b1;
  out["b2"] = rep.b2;
  out["euler"] = rep.euler;
  out["intersection_form_triple"] = triple_json(rep.intersection_form);
  out["definiteness"] = std::string(to_string(rep.definiteness));
  out["oracle_sigma"] = rep.oracle_sigma;
  out["oracle_agrees"] = rep.oracle_agrees;
  out["outside_theorem_hypotheses"] = rep.outside_hypotheses;
  out["wall"] = std::move(wall);
  out["boundary_map"] = matrix_to_json(full.boundary_map.matrix);
  return out;
}

std::string report_to_table(const PlanarFibration& f, const FullReport& full) {
  const InvariantsReport& rep = full.report;
  std::ostringstream os;
  os << "fiber boundary components  " << f.surface().boundary_components() << '\n'
     << "vanishing cycles (m)       " << rep.m << '\n'
     << "r                          " << rep.r << '\n'
     << "dim span of cycles (d)     " << rep.d << '\n'
     << "signature                  " << rep.sigma << '\n'
     << "b1                         " << rep.b1 << '\n'
     << "b2                         " << rep.b2 << '\n'
     << "euler characteristic       " << rep.euler << '\n'
     << "intersection form (+,-,0)  " << rep.intersection_form << '\n'
     << "definiteness               " << to_string(rep.definiteness) << '\n'
     << "wall dim W                 " << full.wall.w_dim << '\n'
     << "wall correction (+,-,0)    " << full.wall.correction << '\n'
     << "wall oracle signature      " << rep.oracle_sigma << '\n'
     << "oracle agrees              " << (rep.oracle_agrees ? "yes" : "NO") << '\n';
  if (rep.outside_hypotheses)
    os << "note                       outside theorem hypotheses (non-allowable cycle)\n";
  return os.str();
}

}  // namespace lefschetz

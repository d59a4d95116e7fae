#include "lefschetz/fibration.hpp"

#include <algorithm>
#include <string>

namespace lefschetz {

PlanarFibration::PlanarFibration(PlanarSurface surface,
                                 std::vector<CurveClass> cycles,
                                 bool allow_non_allowable)
    : surface_(surface),
      cycles_(std::move(cycles)),
      allow_non_allowable_(allow_non_allowable) {
  for (std::size_t s = 0; s < cycles_.size(); ++s) {
    class_vector(surface_, cycles_[s]);
    if (!allow_non_allowable_ && !cycles_[s].allowable())
      throw NotAllowableError("vanishing cycle " + std::to_string(s) +
                              " is null-homologous in the fiber");
  }
  if (surface_.r() == 0 && !cycles_.empty())
    throw std::invalid_argument("a disk fiber admits no vanishing cycles");
}

bool PlanarFibration::outside_hypotheses() const {
  return std::any_of(cycles_.begin(), cycles_.end(),
                     [](const CurveClass& c) { return !c.allowable(); });
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::NegativeDefinite: return "negative-definite";
    case Definiteness::ZeroForm: return "zero-form";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "indefinite";
}

Definiteness definiteness_of(const SignatureTriple& t) {
  if (t.n_plus != 0 || t.n_zero != 0) return Definiteness::Indefinite;
  return t.n_minus > 0 ? Definiteness::NegativeDefinite : Definiteness::ZeroForm;
}

RationalMatrix cycle_matrix(const PlanarFibration& f) {
  std::vector<Vector> cols;
  cols.reserve(f.m());
  for (const auto& c : f.cycles()) cols.push_back(to_rational(class_vector(f.surface(), c)));
  return RationalMatrix::from_columns(f.surface().h1_dim(), cols);
}

long signature_theorem1(const PlanarFibration& f) {
  return -static_cast<long>(f.m()) + static_cast<long>(rank(cycle_matrix(f)));
}

long signature_wall_oracle(const PlanarFibration& f, const WallResult& wall) {
  return -static_cast<long>(f.m()) + wall.sigma_correction;
}

long signature_wall_oracle(const PlanarFibration& f) {
  const auto triple = standard_triple(f.surface(), f.cycles(), f.allow_non_allowable());
  return signature_wall_oracle(f, wall_correction(triple));
}

InvariantsReport betti_report(const PlanarFibration& f, const WallResult& wall) {
  InvariantsReport rep;
  rep.m = static_cast<long>(f.m());
  rep.r = f.r();
  rep.d = static_cast<long>(rank(cycle_matrix(f)));
  rep.sigma = signature_theorem1(f);
  rep.oracle_sigma = signature_wall_oracle(f, wall);
  rep.oracle_agrees = rep.sigma == rep.oracle_sigma;
  rep.outside_hypotheses = f.outside_hypotheses();

  // One 0-handle, r 1-handles, m 2-handles; the 2-handle boundary map is the
  // cycle matrix and the 1-handle boundary map vanishes.
  rep.euler = 1 - rep.r + rep.m;
  rep.b1 = rep.r - rep.d;
  rep.b2 = rep.euler - 1 + rep.b1;

  // b2+ - b2- = sigma and b2+ + b2- + b2^0 = b2 leave 2 b2+ + b2^0 = b2 + sigma.
  // Take the Wall-side sigma so the split checks the oracle, not the formula.
  const long excess = rep.b2 + rep.oracle_sigma;
  if (excess >= 0) {
    rep.intersection_form.n_plus = static_cast<std::size_t>(excess / 2);
    rep.intersection_form.n_zero = static_cast<std::size_t>(excess % 2);
    const long minus = excess / 2 - rep.oracle_sigma;
    rep.intersection_form.n_minus = static_cast<std::size_t>(std::max(0L, minus));
    rep.definiteness = definiteness_of(rep.intersection_form);
  } else {
    rep.definiteness = Definiteness::Indefinite;
  }
  return rep;
}

InvariantsReport betti_report(const PlanarFibration& f) {
  const auto triple = standard_triple(f.surface(), f.cycles(), f.allow_non_allowable());
  return betti_report(f, wall_correction(triple));
}

PlanarFibration example_y1(int r) {
  if (r < 2) throw std::invalid_argument("example y1 needs r >= 2");
  const PlanarSurface surface(r + 1);
  std::vector<CurveClass> cycles;
  for (int i = 1; i <= r + 1; ++i)
    for (int j = i + 1; j <= r + 1; ++j)
      cycles.push_back(CurveClass::enclosing(surface, {i, j}));
  return PlanarFibration(surface, std::move(cycles));
}

PlanarFibration example_y2(int r) {
  if (r < 2) throw std::invalid_argument("example y2 needs r >= 2");
  const PlanarSurface surface(r + 1);
  std::vector<CurveClass> cycles;
  cycles.push_back(CurveClass::enclosing(surface, {0}));
  for (int i = 1; i <= r + 1; ++i)
    for (int k = 0; k < r - 1; ++k) cycles.push_back(CurveClass::enclosing(surface, {i}));
  return PlanarFibration(surface, std::move(cycles));
}

long y1_signature_closed_form(long r) { return -(r - 2) * (r + 1) / 2; }

long y2_signature_closed_form(long r) { return -r * r + r + 1; }

}  // namespace lefschetz

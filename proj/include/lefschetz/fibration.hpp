// Planar Lefschetz fibrations over the disk and their invariants.
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "lefschetz/linalg.hpp"
#include "lefschetz/surface.hpp"
#include "lefschetz/wall.hpp"

namespace lefschetz {

/// Fiber plus ordered vanishing cycles (counter-clockwise order of the
/// critical values).
class PlanarFibration {
 public:
  /// Throws NotAllowableError on a null-homologous cycle unless
  /// `allow_non_allowable`; a disk fiber (r = 0) admits no cycles at all.
  PlanarFibration(PlanarSurface surface, std::vector<CurveClass> cycles,
                  bool allow_non_allowable = false);

  const PlanarSurface& surface() const { return surface_; }
  const std::vector<CurveClass>& cycles() const { return cycles_; }
  std::size_t m() const { return cycles_.size(); }
  int r() const { return surface_.r(); }
  bool allow_non_allowable() const { return allow_non_allowable_; }
  /// True when some cycle is null-homologous (only possible when forced).
  bool outside_hypotheses() const;

 private:
  PlanarSurface surface_;
  std::vector<CurveClass> cycles_;
  bool allow_non_allowable_;
};

enum class Definiteness { NegativeDefinite, ZeroForm, Indefinite };

std::string_view to_string(Definiteness d);
Definiteness definiteness_of(const SignatureTriple& t);

struct InvariantsReport {
  long m = 0;
  long r = 0;
  long d = 0;
  long sigma = 0;
  long b1 = 0;
  long b2 = 0;
  long euler = 0;
  /// (b2+, b2-, b2^0) of the intersection form of the total space.
  SignatureTriple intersection_form;
  Definiteness definiteness = Definiteness::ZeroForm;
  long oracle_sigma = 0;
  bool oracle_agrees = false;
  bool outside_hypotheses = false;
};

/// r x m matrix whose columns are the cycle classes.
RationalMatrix cycle_matrix(const PlanarFibration& f);

/// -m + dim span(cycles).
long signature_theorem1(const PlanarFibration& f);

/// -m + Wall correction of the standard triple, using signature -m for the
/// closed-up manifold and 0 for the disk-bundle piece.
long signature_wall_oracle(const PlanarFibration& f);
long signature_wall_oracle(const PlanarFibration& f, const WallResult& wall);

InvariantsReport betti_report(const PlanarFibration& f);
InvariantsReport betti_report(const PlanarFibration& f, const WallResult& wall);

/// Fiber with r+2 boundary components; every pair {i, j} of 1..r+1 in
/// lexicographic order. Requires r >= 2.
PlanarFibration example_y1(int r);

/// Fiber with r+2 boundary components; delta_0 once, then each delta_i for
/// i = 1..r+1 repeated r-1 times. Requires r >= 2.
PlanarFibration example_y2(int r);

long y1_signature_closed_form(long r);
long y2_signature_closed_form(long r);

}  // namespace lefschetz

// Wall's signature correction for three isotropic subspaces of a skew
// paired space, and the particular triple coming from a planar Lefschetz
// fibration glued to a trivial disk bundle along the corner tori.
#pragma once

#include <cstddef>
#include <vector>

#include "lefschetz/linalg.hpp"
#include "lefschetz/surface.hpp"

namespace lefschetz {

/// Raised when a vanishing cycle is null-homologous and the caller did not
/// opt in to non-allowable input.
class NotAllowableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (V; L-, L0, L+): a skew form on V and three isotropic subspaces.
class WallTriple {
 public:
  /// Throws DimensionError on shape mismatch and std::invalid_argument if
  /// the pairing is not skew or a subspace is not isotropic.
  WallTriple(RationalMatrix pairing, Subspace l_minus, Subspace l_zero,
             Subspace l_plus);

  std::size_t ambient_dim() const { return pairing_.rows(); }
  const RationalMatrix& pairing() const { return pairing_; }
  const Subspace& l_minus() const { return l_minus_; }
  const Subspace& l_zero() const { return l_zero_; }
  const Subspace& l_plus() const { return l_plus_; }

 private:
  RationalMatrix pairing_;
  Subspace l_minus_;
  Subspace l_zero_;
  Subspace l_plus_;
};

bool is_isotropic(const RationalMatrix& pairing, const Subspace& s);

struct WallResult {
  std::size_t w_dim = 0;
  std::vector<Vector> w_representatives;
  RationalMatrix psi;
  SignatureTriple correction;
  long sigma_correction = 0;
};

/// W = L- ∩ (L0 + L+) / ((L- ∩ L0) + (L- ∩ L+)), the form
/// Psi(a, a') = Q(a, b') where a' + b' + c' = 0 with b' in L0, c' in L+,
/// and its signature.
WallResult wall_correction(const WallTriple& t);

/// i_*: H_1(boundary of the mapping torus) -> H_1(mapping torus) for a
/// planar fiber. Columns follow the Z basis (m_0, l_0, ..., m_r, l_r); rows
/// are (m_1, ..., m_r, l_0).
struct MappingTorusBoundaryMap {
  int r = 0;
  RationalMatrix matrix;

  friend bool operator==(const MappingTorusBoundaryMap&,
                         const MappingTorusBoundaryMap&) = default;
};

/// alpha_j = sum_s Q_Z(gamma_s, l_j) gamma_s for j = 1..r, as m-vectors.
std::vector<Vector> alpha_classes(const PlanarSurface& surface,
                                  const std::vector<CurveClass>& cycles);

MappingTorusBoundaryMap mapping_torus_boundary_map(
    const PlanarSurface& surface, const std::vector<CurveClass>& cycles,
    bool allow_non_allowable = false);

/// Kernel of the boundary map; always of dimension r+1.
Subspace lplus_kernel(const MappingTorusBoundaryMap& map);

/// span{l_j - l_0 + alpha_j (j = 1..r), m_0 + ... + m_r}.
Subspace lplus_closed_form(const PlanarSurface& surface,
                           const std::vector<CurveClass>& cycles,
                           bool allow_non_allowable = false);

WallTriple standard_triple(const PlanarSurface& surface,
                           const std::vector<CurveClass>& cycles,
                           bool allow_non_allowable = false);

/// Gram matrix B * B^T of Psi on the generators alpha_1..alpha_r, where the
/// columns of B are the cycle vectors.
RationalMatrix psi_gram_closed_form(const PlanarSurface& surface,
                                    const std::vector<CurveClass>& cycles,
                                    bool allow_non_allowable = false);

}  // namespace lefschetz

// Homology of the planar fiber, of the corner torus family Z, and the
// Picard-Lefschetz action of Dehn twists on a bordered surface.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lefschetz/linalg.hpp"

namespace lefschetz {

using IntVector = std::vector<std::int64_t>;

Vector to_rational(const IntVector& v);

/// Genus zero surface with boundary components 0..r. H_1 has basis
/// m_1..m_r, the classes of boundary components 1..r; boundary 0 has
/// class -(m_1 + ... + m_r).
class PlanarSurface {
 public:
  explicit PlanarSurface(int r);

  int r() const { return r_; }
  int boundary_components() const { return r_ + 1; }
  std::size_t h1_dim() const { return static_cast<std::size_t>(r_); }

  friend bool operator==(const PlanarSurface&, const PlanarSurface&) = default;

 private:
  int r_;
};

/// A simple closed curve on a planar surface, up to its homology class.
///
/// An `enclosing` curve is stored with the boundary subset that avoids
/// component 0. Asking for a subset containing 0 stores the complement and
/// flips `orientation`, so both descriptions give the same class.
class CurveClass {
 public:
  enum class Kind { Enclosing, Explicit };

  static CurveClass enclosing(const PlanarSurface& surface,
                              std::vector<int> boundary_indices);
  static CurveClass explicit_class(const PlanarSurface& surface,
                                   IntVector coefficients);

  Kind kind() const { return kind_; }
  /// Sorted subset of 1..r (Enclosing only).
  const std::vector<int>& enclosed() const { return enclosed_; }
  /// +1, or -1 when the curve was described by a subset containing 0.
  int orientation() const { return orientation_; }
  /// Coefficients in the basis m_1..m_r.
  const IntVector& vector() const { return vector_; }
  bool allowable() const;

  CurveClass negated() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  CurveClass() = default;

  Kind kind_ = Kind::Explicit;
  std::vector<int> enclosed_;
  int orientation_ = 1;
  IntVector vector_;
};

IntVector class_vector(const PlanarSurface& surface, const CurveClass& c);

/// H_1(Z) for Z = (r+1 circles) x circle, ordered basis
/// (m_0, l_0, m_1, l_1, ..., m_r, l_r) with Q(m_i, l_j) = delta_ij.
class TorusBoundarySpace {
 public:
  explicit TorusBoundarySpace(int r);

  int r() const { return r_; }
  std::size_t dim() const { return 2 * static_cast<std::size_t>(r_ + 1); }
  std::size_t m_index(int i) const { return 2 * static_cast<std::size_t>(i); }
  std::size_t l_index(int i) const { return 2 * static_cast<std::size_t>(i) + 1; }
  Vector m(int i) const;
  Vector l(int i) const;
  const RationalMatrix& pairing() const { return pairing_; }

 private:
  int r_;
  RationalMatrix pairing_;
};

/// Place a class of the fiber (m_1..m_r coordinates) into H_1(Z).
Vector embed_into_z(const PlanarSurface& surface, const Vector& v);
Vector embed_into_z(const PlanarSurface& surface, const IntVector& v);

Rational qz_pair(const TorusBoundarySpace& space, const Vector& u, const Vector& v);

/// H_1 of a genus g surface with r+1 boundary circles, basis
/// (a_1, b_1, ..., a_g, b_g, m_1, ..., m_r). Q(a_i, b_j) = delta_ij and the
/// m_k span the radical.
class GeneralSurfaceH1 {
 public:
  GeneralSurfaceH1(int genus, int r);

  int genus() const { return genus_; }
  int r() const { return r_; }
  std::size_t dim() const { return 2 * static_cast<std::size_t>(genus_) + r_; }
  Vector a(int i) const;
  Vector b(int i) const;
  Vector m(int k) const;
  const RationalMatrix& intersection() const { return form_; }
  Rational pair(const Vector& u, const Vector& v) const;

 private:
  int genus_;
  int r_;
  RationalMatrix form_;
};

/// Right-handed twist along gamma: x -> x + Q(gamma, x) gamma.
Vector dehn_twist_action(const GeneralSurfaceH1& h1, const Vector& gamma,
                         const Vector& x);
RationalMatrix dehn_twist_matrix(const GeneralSurfaceH1& h1, const Vector& gamma);

/// Action of D(word.back()) o ... o D(word.front()).
RationalMatrix monodromy_action(const GeneralSurfaceH1& h1,
                                const std::vector<Vector>& word);

}  // namespace lefschetz

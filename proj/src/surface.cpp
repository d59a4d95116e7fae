#include "lefschetz/surface.hpp"

#include <algorithm>
#include <string>

namespace lefschetz {

Vector to_rational(const IntVector& v) {
  Vector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

PlanarSurface::PlanarSurface(int r) : r_(r) {
  if (r < 0) throw std::invalid_argument("planar surface needs r >= 0");
}

CurveClass CurveClass::enclosing(const PlanarSurface& surface,
                                 std::vector<int> boundary_indices) {
  const int r = surface.r();
  std::sort(boundary_indices.begin(), boundary_indices.end());
  for (std::size_t k = 0; k < boundary_indices.size(); ++k) {
    const int i = boundary_indices[k];
    if (i < 0 || i > r)
      throw std::out_of_range("boundary index " + std::to_string(i) +
                              " outside 0.." + std::to_string(r));
    if (k > 0 && boundary_indices[k - 1] == i)
      throw std::invalid_argument("boundary index " + std::to_string(i) +
                                  " listed twice");
  }

  CurveClass c;
  c.kind_ = Kind::Enclosing;
  if (!boundary_indices.empty() && boundary_indices.front() == 0) {
    // The complement bounds the same curve with the opposite orientation.
    std::vector<bool> in(static_cast<std::size_t>(r + 1), false);
    for (int i : boundary_indices) in[static_cast<std::size_t>(i)] = true;
    for (int i = 1; i <= r; ++i)
      if (!in[static_cast<std::size_t>(i)]) c.enclosed_.push_back(i);
    c.orientation_ = -1;
  } else {
    c.enclosed_ = std::move(boundary_indices);
  }

  c.vector_.assign(surface.h1_dim(), 0);
  for (int i : c.enclosed_) c.vector_[static_cast<std::size_t>(i - 1)] = c.orientation_;
  return c;
}

CurveClass CurveClass::explicit_class(const PlanarSurface& surface,
                                      IntVector coefficients) {
  if (coefficients.size() != surface.h1_dim())
    throw DimensionError("class vector has length " +
                         std::to_string(coefficients.size()) + ", expected " +
                         std::to_string(surface.h1_dim()));
  CurveClass c;
  c.kind_ = Kind::Explicit;
  c.vector_ = std::move(coefficients);
  return c;
}

bool CurveClass::allowable() const {
  return std::any_of(vector_.begin(), vector_.end(), [](auto x) { return x != 0; });
}

CurveClass CurveClass::negated() const {
  CurveClass c = *this;
  if (c.kind_ == Kind::Enclosing) c.orientation_ = -c.orientation_;
  for (auto& x : c.vector_) x = -x;
  return c;
}

IntVector class_vector(const PlanarSurface& surface, const CurveClass& c) {
  if (c.vector().size() != surface.h1_dim())
    throw DimensionError("curve class does not belong to this surface");
  return c.vector();
}

TorusBoundarySpace::TorusBoundarySpace(int r) : r_(r) {
  if (r < 0) throw std::invalid_argument("torus boundary space needs r >= 0");
  pairing_ = RationalMatrix(dim(), dim());
  for (int i = 0; i <= r; ++i) {
    pairing_(m_index(i), l_index(i)) = 1;
    pairing_(l_index(i), m_index(i)) = -1;
  }
}

Vector TorusBoundarySpace::m(int i) const {
  Vector v(dim());
  v[m_index(i)] = 1;
  return v;
}

Vector TorusBoundarySpace::l(int i) const {
  Vector v(dim());
  v[l_index(i)] = 1;
  return v;
}

Vector embed_into_z(const PlanarSurface& surface, const Vector& v) {
  if (v.size() != surface.h1_dim())
    throw DimensionError("embed_into_z: vector length does not match r");
  const TorusBoundarySpace z(surface.r());
  Vector out(z.dim());
  for (int i = 1; i <= surface.r(); ++i)
    out[z.m_index(i)] = v[static_cast<std::size_t>(i - 1)];
  return out;
}

Vector embed_into_z(const PlanarSurface& surface, const IntVector& v) {
  return embed_into_z(surface, to_rational(v));
}

Rational qz_pair(const TorusBoundarySpace& space, const Vector& u, const Vector& v) {
  if (u.size() != space.dim() || v.size() != space.dim())
    throw DimensionError("qz_pair: vectors must have length 2(r+1)");
  return bilinear(space.pairing(), u, v);
}

GeneralSurfaceH1::GeneralSurfaceH1(int genus, int r) : genus_(genus), r_(r) {
  if (genus < 0 || r < 0) throw std::invalid_argument("genus and r must be >= 0");
  form_ = RationalMatrix(dim(), dim());
  for (int i = 0; i < genus; ++i) {
    form_(2 * i, 2 * i + 1) = 1;
    form_(2 * i + 1, 2 * i) = -1;
  }
}

Vector GeneralSurfaceH1::a(int i) const {
  Vector v(dim());
  v[2 * static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

Vector GeneralSurfaceH1::b(int i) const {
  Vector v(dim());
  v[2 * static_cast<std::size_t>(i - 1) + 1] = 1;
  return v;
}

Vector GeneralSurfaceH1::m(int k) const {
  Vector v(dim());
  v[2 * static_cast<std::size_t>(genus_) + static_cast<std::size_t>(k - 1)] = 1;
  return v;
}

Rational GeneralSurfaceH1::pair(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw DimensionError("surface pairing: vector length mismatch");
  return bilinear(form_, u, v);
}

Vector dehn_twist_action(const GeneralSurfaceH1& h1, const Vector& gamma,
                         const Vector& x) {
  const Rational q = h1.pair(gamma, x);
  Vector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += q * gamma[i];
  return out;
}

RationalMatrix dehn_twist_matrix(const GeneralSurfaceH1& h1, const Vector& gamma) {
  const std::size_t n = h1.dim();
  std::vector<Vector> cols;
  cols.reserve(n);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(dehn_twist_action(h1, gamma, id.column(j)));
  return RationalMatrix::from_columns(n, cols);
}

RationalMatrix monodromy_action(const GeneralSurfaceH1& h1,
                                const std::vector<Vector>& word) {
  RationalMatrix acc = RationalMatrix::identity(h1.dim());
  for (const auto& gamma : word) acc = dehn_twist_matrix(h1, gamma) * acc;
  return acc;
}

}  // namespace lefschetz

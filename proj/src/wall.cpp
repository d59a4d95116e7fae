#include "lefschetz/wall.hpp"

#include <string>

namespace lefschetz {

namespace {

void require_allowable(const std::vector<CurveClass>& cycles, bool allow) {
  if (allow) return;
  for (std::size_t s = 0; s < cycles.size(); ++s)
    if (!cycles[s].allowable())
      throw NotAllowableError("vanishing cycle " + std::to_string(s) +
                              " is null-homologous in the fiber");
}

void require_on_surface(const PlanarSurface& surface,
                        const std::vector<CurveClass>& cycles) {
  for (const auto& c : cycles) class_vector(surface, c);
}

}  // namespace

bool is_isotropic(const RationalMatrix& pairing, const Subspace& s) {
  const auto basis = s.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (sgn(bilinear(pairing, basis[i], basis[j])) != 0) return false;
  return true;
}

WallTriple::WallTriple(RationalMatrix pairing, Subspace l_minus,
                       Subspace l_zero, Subspace l_plus)
    : pairing_(std::move(pairing)),
      l_minus_(std::move(l_minus)),
      l_zero_(std::move(l_zero)),
      l_plus_(std::move(l_plus)) {
  if (!pairing_.is_square()) throw DimensionError("pairing must be square");
  const std::size_t n = pairing_.rows();
  if (l_minus_.ambient_dim() != n || l_zero_.ambient_dim() != n ||
      l_plus_.ambient_dim() != n)
    throw DimensionError("subspaces must live in the paired space");
  if (!pairing_.is_skew_symmetric())
    throw std::invalid_argument("pairing must be skew-symmetric");
  if (!is_isotropic(pairing_, l_minus_) || !is_isotropic(pairing_, l_zero_) ||
      !is_isotropic(pairing_, l_plus_))
    throw std::invalid_argument("each of L-, L0, L+ must be isotropic");
}

WallResult wall_correction(const WallTriple& t) {
  const Subspace& lm = t.l_minus();
  const Subspace& l0 = t.l_zero();
  const Subspace& lp = t.l_plus();

  const Subspace numerator = subspace_intersection(lm, subspace_sum(l0, lp));
  const Subspace denominator =
      subspace_sum(subspace_intersection(lm, l0), subspace_intersection(lm, lp));

  WallResult out;
  out.w_representatives = quotient_basis(numerator, denominator);
  out.w_dim = out.w_representatives.size();

  // a' = -b' - c': solve [L0 | L+] (y, z) = -a' and keep b' = L0 y.
  const std::size_t k0 = l0.dim();
  const std::size_t n = t.ambient_dim();
  RationalMatrix generators(n, k0 + lp.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k0; ++j) generators(i, j) = l0.basis()(i, j);
    for (std::size_t j = 0; j < lp.dim(); ++j) generators(i, k0 + j) = lp.basis()(i, j);
  }

  std::vector<Vector> b_parts;
  b_parts.reserve(out.w_dim);
  for (const auto& a : out.w_representatives) {
    Vector rhs = a;
    for (auto& x : rhs) x = -x;
    auto coeffs = solve(generators, rhs);
    if (!coeffs)
      throw InternalError("wall_correction: representative not in L0 + L+");
    Vector y(coeffs->begin(), coeffs->begin() + static_cast<std::ptrdiff_t>(k0));
    b_parts.push_back(l0.basis() * y);
  }

  out.psi = RationalMatrix(out.w_dim, out.w_dim);
  for (std::size_t i = 0; i < out.w_dim; ++i)
    for (std::size_t j = 0; j < out.w_dim; ++j)
      out.psi(i, j) = bilinear(t.pairing(), out.w_representatives[i], b_parts[j]);
  if (!out.psi.is_symmetric())
    throw InternalError("wall_correction: Psi is not symmetric");

  out.correction = symmetric_signature(out.psi);
  out.sigma_correction = out.correction.signature();
  return out;
}

std::vector<Vector> alpha_classes(const PlanarSurface& surface,
                                  const std::vector<CurveClass>& cycles) {
  const TorusBoundarySpace z(surface.r());
  std::vector<Vector> alphas(surface.h1_dim(), Vector(surface.h1_dim()));
  for (const auto& c : cycles) {
    const Vector gamma = to_rational(class_vector(surface, c));
    const Vector gamma_z = embed_into_z(surface, gamma);
    for (int j = 1; j <= surface.r(); ++j) {
      const Rational q = qz_pair(z, gamma_z, z.l(j));
      if (sgn(q) == 0) continue;
      auto& alpha = alphas[static_cast<std::size_t>(j - 1)];
      for (std::size_t i = 0; i < gamma.size(); ++i) alpha[i] += q * gamma[i];
    }
  }
  return alphas;
}

MappingTorusBoundaryMap mapping_torus_boundary_map(
    const PlanarSurface& surface, const std::vector<CurveClass>& cycles,
    bool allow_non_allowable) {
  require_on_surface(surface, cycles);
  require_allowable(cycles, allow_non_allowable);

  const int r = surface.r();
  const TorusBoundarySpace z(r);
  const std::size_t l0_row = static_cast<std::size_t>(r);

  MappingTorusBoundaryMap map;
  map.r = r;
  map.matrix = RationalMatrix(static_cast<std::size_t>(r) + 1, z.dim());

  for (int j = 1; j <= r; ++j) {
    map.matrix(static_cast<std::size_t>(j - 1), z.m_index(0)) = -1;
    map.matrix(static_cast<std::size_t>(j - 1), z.m_index(j)) = 1;
  }
  map.matrix(l0_row, z.l_index(0)) = 1;

  const auto alphas = alpha_classes(surface, cycles);
  for (int j = 1; j <= r; ++j) {
    const std::size_t col = z.l_index(j);
    map.matrix(l0_row, col) = 1;
    const auto& alpha = alphas[static_cast<std::size_t>(j - 1)];
    for (std::size_t i = 0; i < alpha.size(); ++i) map.matrix(i, col) = -alpha[i];
  }
  return map;
}

Subspace lplus_kernel(const MappingTorusBoundaryMap& map) {
  Subspace k = kernel(map.matrix);
  if (k.dim() != static_cast<std::size_t>(map.r) + 1)
    throw InternalError("boundary map kernel has dimension " +
                        std::to_string(k.dim()) + ", expected r+1");
  return k;
}

Subspace lplus_closed_form(const PlanarSurface& surface,
                           const std::vector<CurveClass>& cycles,
                           bool allow_non_allowable) {
  require_on_surface(surface, cycles);
  require_allowable(cycles, allow_non_allowable);

  const int r = surface.r();
  const TorusBoundarySpace z(r);
  const auto alphas = alpha_classes(surface, cycles);

  std::vector<Vector> gens;
  for (int j = 1; j <= r; ++j) {
    Vector g = embed_into_z(surface, alphas[static_cast<std::size_t>(j - 1)]);
    g[z.l_index(j)] += 1;
    g[z.l_index(0)] -= 1;
    gens.push_back(std::move(g));
  }
  Vector all_m(z.dim());
  for (int i = 0; i <= r; ++i) all_m[z.m_index(i)] = 1;
  gens.push_back(std::move(all_m));
  return Subspace::span(z.dim(), gens);
}

WallTriple standard_triple(const PlanarSurface& surface,
                           const std::vector<CurveClass>& cycles,
                           bool allow_non_allowable) {
  const int r = surface.r();
  const TorusBoundarySpace z(r);
  std::vector<Vector> ms, ls;
  for (int i = 0; i <= r; ++i) {
    ms.push_back(z.m(i));
    ls.push_back(z.l(i));
  }
  Subspace l_plus =
      lplus_kernel(mapping_torus_boundary_map(surface, cycles, allow_non_allowable));
  return WallTriple(z.pairing(), Subspace::span(z.dim(), ms),
                    Subspace::span(z.dim(), ls), std::move(l_plus));
}

RationalMatrix psi_gram_closed_form(const PlanarSurface& surface,
                                    const std::vector<CurveClass>& cycles,
                                    bool allow_non_allowable) {
  require_on_surface(surface, cycles);
  require_allowable(cycles, allow_non_allowable);
  std::vector<Vector> cols;
  for (const auto& c : cycles) cols.push_back(to_rational(class_vector(surface, c)));
  const RationalMatrix b = RationalMatrix::from_columns(surface.h1_dim(), cols);
  return b * b.transpose();
}

}  // namespace lefschetz

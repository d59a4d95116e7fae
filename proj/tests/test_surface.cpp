#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lefschetz/surface.hpp"

using namespace lefschetz;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("class vectors of enclosing curves") {
  const PlanarSurface s(3);
  CHECK(class_vector(s, CurveClass::enclosing(s, {1})) == IntVector{1, 0, 0});
  // delta_0 = -(m_1 + m_2 + m_3) because the boundary classes sum to zero.
  CHECK(class_vector(s, CurveClass::enclosing(s, {0})) == IntVector{-1, -1, -1});
  CHECK(class_vector(s, CurveClass::enclosing(s, {2, 1})) == IntVector{1, 1, 0});

  const auto c = CurveClass::enclosing(s, {0, 2});
  CHECK(c.enclosed() == std::vector<int>{1, 3});
  CHECK(c.orientation() == -1);
  CHECK(c.vector() == IntVector{-1, 0, -1});

  CHECK_THROWS_AS(CurveClass::enclosing(s, {4}), std::out_of_range);
  CHECK_THROWS_AS(CurveClass::enclosing(s, {-1}), std::out_of_range);
  CHECK_THROWS_AS(CurveClass::enclosing(s, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CurveClass::explicit_class(s, {1, 0}), DimensionError);
  CHECK_THROWS_AS(PlanarSurface(-1), std::invalid_argument);
}

TEST_CASE("property: complementary subsets give opposite classes; allowable iff nonzero") {
  for (int r = 0; r <= 8; ++r) {
    const PlanarSurface s(r);
    const std::uint32_t full = (1u << (r + 1)) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      std::vector<int> in, out;
      for (int i = 0; i <= r; ++i) (mask >> i & 1 ? in : out).push_back(i);
      const auto a = CurveClass::enclosing(s, in);
      const auto b = CurveClass::enclosing(s, out);
      for (std::size_t k = 0; k < s.h1_dim(); ++k) CHECK(a.vector()[k] + b.vector()[k] == 0);

      const bool nonzero_vector = a.allowable();
      const bool proper = mask != 0 && mask != full;
      CHECK(nonzero_vector == proper);
    }
  }
}

TEST_CASE("embedding into H_1(Z)") {
  const PlanarSurface s1(1);
  CHECK(embed_into_z(s1, vec({1})) == vec({0, 0, 1, 0}));

  const PlanarSurface s2(2);
  CHECK(embed_into_z(s2, vec({2, -1})) == vec({0, 0, 2, 0, -1, 0}));

  const TorusBoundarySpace z(2);
  const auto gamma = embed_into_z(s2, class_vector(s2, CurveClass::enclosing(s2, {1, 2})));
  CHECK(qz_pair(z, gamma, z.l(2)) == 1);

  CHECK_THROWS_AS(embed_into_z(s2, vec({1})), DimensionError);
}

TEST_CASE("torus boundary pairing") {
  const TorusBoundarySpace z(3);
  CHECK(z.dim() == 8);
  CHECK(z.pairing().is_skew_symmetric());
  CHECK(abs(determinant(z.pairing())) == 1);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      CHECK(qz_pair(z, z.m(i), z.l(j)) == (i == j ? 1 : 0));
      CHECK(qz_pair(z, z.m(i), z.m(j)) == 0);
      CHECK(qz_pair(z, z.l(i), z.l(j)) == 0);
    }

  const PlanarSurface s(3);
  const auto gamma = embed_into_z(s, class_vector(s, CurveClass::enclosing(s, {1, 3})));
  CHECK(qz_pair(z, gamma, z.l(3)) == 1);
  CHECK(qz_pair(z, gamma, gamma) == 0);
  CHECK_THROWS_AS(qz_pair(z, gamma, vec({1})), DimensionError);
}

TEST_CASE("property: pairing an embedded class with l_j reads coordinate j") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int r = 1; r <= 6; ++r) {
    const PlanarSurface s(r);
    const TorusBoundarySpace z(r);
    for (int trial = 0; trial < 20; ++trial) {
      Vector v(s.h1_dim());
      for (auto& x : v) x = coeff(rng);
      const Vector u = embed_into_z(s, v);
      for (int j = 1; j <= r; ++j) {
        CHECK(qz_pair(z, u, z.l(j)) == v[static_cast<std::size_t>(j - 1)]);
        CHECK(qz_pair(z, u, z.l(j)) == -qz_pair(z, z.l(j), u));
      }
      CHECK(qz_pair(z, u, z.l(0)) == 0);
    }
  }
}

TEST_CASE("general surface H_1") {
  const GeneralSurfaceH1 h(2, 3);
  CHECK(h.dim() == 7);
  CHECK(h.intersection().is_skew_symmetric());
  CHECK(kernel(h.intersection()) ==
        Subspace::span(h.dim(), {h.m(1), h.m(2), h.m(3)}));
  CHECK(h.pair(h.a(1), h.b(1)) == 1);
  CHECK(h.pair(h.a(1), h.b(2)) == 0);
  CHECK(h.pair(h.b(2), h.a(2)) == -1);
}

TEST_CASE("Picard-Lefschetz action") {
  SUBCASE("planar surfaces: twists act trivially") {
    const GeneralSurfaceH1 planar(0, 3);
    const Vector gamma = vec({1, 1, 0});
    const Vector x = vec({2, -1, 5});
    CHECK(dehn_twist_action(planar, gamma, x) == x);
  }
  SUBCASE("torus: D(a) sends b to b + a") {
    const GeneralSurfaceH1 t(1, 0);
    CHECK(dehn_twist_action(t, t.a(1), t.b(1)) == vec({1, 1}));
  }
  SUBCASE("twice twisting doubles the correction") {
    const GeneralSurfaceH1 h(2, 1);
    const Vector gamma = vec({1, 0, 1, 1, 0});
    const Vector x = vec({0, 3, -1, 2, 4});
    const Rational q = h.pair(gamma, x);
    Vector expected = x;
    for (std::size_t i = 0; i < x.size(); ++i) expected[i] += 2 * q * gamma[i];
    CHECK(dehn_twist_action(h, gamma, dehn_twist_action(h, gamma, x)) == expected);
  }
  CHECK_THROWS_AS(dehn_twist_action(GeneralSurfaceH1(1, 0), vec({1}), vec({1, 0})),
                  DimensionError);
}

TEST_CASE("monodromy action") {
  const GeneralSurfaceH1 t(1, 0);
  CHECK(monodromy_action(t, {}) == RationalMatrix::identity(2));

  // D(b) o D(a): a -> a - b, b -> a.
  const RationalMatrix ab = monodromy_action(t, {t.a(1), t.b(1)});
  CHECK(ab == RationalMatrix{{1, 1}, {-1, 0}});
  CHECK(ab == dehn_twist_matrix(t, t.b(1)) * dehn_twist_matrix(t, t.a(1)));
  CHECK(determinant(ab) == 1);

  const GeneralSurfaceH1 planar(0, 4);
  CHECK(monodromy_action(planar, {vec({1, 1, 0, 0}), vec({0, 1, 1, 1}), vec({1, 0, 0, 0})}) ==
        RationalMatrix::identity(4));
}

TEST_CASE("property: twist inverse and unit determinant") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int g = 0; g <= 3; ++g) {
    const GeneralSurfaceH1 h(g, 2);
    for (int trial = 0; trial < 15; ++trial) {
      Vector gamma(h.dim());
      for (auto& x : gamma) x = coeff(rng);
      const RationalMatrix forward = dehn_twist_matrix(h, gamma);
      // x -> x - Q(gamma, x) gamma is the inverse transvection.
      RationalMatrix backward = RationalMatrix::identity(h.dim());
      for (std::size_t j = 0; j < h.dim(); ++j) {
        const Vector col = RationalMatrix::identity(h.dim()).column(j);
        const Rational q = h.pair(gamma, col);
        for (std::size_t i = 0; i < h.dim(); ++i) backward(i, j) -= q * gamma[i];
      }
      CHECK(forward * backward == RationalMatrix::identity(h.dim()));
      CHECK(determinant(forward) == 1);
      if (g == 0) CHECK(forward == RationalMatrix::identity(h.dim()));
    }
  }
}

// Test-only reference computations that share no code with the library's
// elimination routines.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lefschetz/linalg.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Leibniz expansion over all permutations.
inline std::int64_t leibniz_det(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    std::int64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Largest k with a nonzero k x k minor. Only for tiny matrices.
inline std::size_t minor_rank(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rsets, csets;
    std::vector<std::size_t> cur;
    choose(rows, k, 0, cur, rsets);
    choose(cols, k, 0, cur, csets);
    for (const auto& rs : rsets)
      for (const auto& cs : csets) {
        IntMatrix sub(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[rs[i]][cs[j]];
        if (leibniz_det(sub) != 0) return k;
      }
  }
  return 0;
}

/// Inertia from floating point eigenvalues; fine for small integer input.
inline lefschetz::SignatureTriple eigen_inertia(const IntMatrix& s) {
  const auto n = static_cast<Eigen::Index>(s.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = static_cast<double>(s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  lefschetz::SignatureTriple t;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff()) * static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ev = solver.eigenvalues()(i);
    if (ev > 1e-9 * scale)
      ++t.n_plus;
    else if (ev < -1e-9 * scale)
      ++t.n_minus;
    else
      ++t.n_zero;
  }
  return t;
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                   int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix a(rows, std::vector<std::int64_t>(cols));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

inline lefschetz::RationalMatrix to_matrix(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  lefschetz::RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(a[i][j]);
  return m;
}

}  // namespace oracle

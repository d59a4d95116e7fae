#include "lefschetz/linalg.hpp"

#include <utility>

namespace lefschetz {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : row) entries_.emplace_back(x);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows,
                                            const std::vector<Vector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw DimensionError("column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector RationalMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector RationalMatrix::row(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Vector operator*(const RationalMatrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

Rational dot(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw DimensionError("dot product length mismatch");
  Rational s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Rational bilinear(const RationalMatrix& form, const Vector& u, const Vector& v) {
  if (form.rows() != u.size() || form.cols() != v.size())
    throw DimensionError("bilinear form shape mismatch");
  return dot(u, form * v);
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    const Rational inv = 1 / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(lead_row, j);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return row_reduce(work).size();
}

Rational determinant(RationalMatrix m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), basis_(ambient_dim, 0) {}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<Vector>& generators) {
  // Generators become rows; the nonzero rows of the reduced row echelon form
  // are the transposed reduced column echelon basis.
  RationalMatrix rows(generators.size(), ambient_dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient_dim)
      throw DimensionError("generator length does not match ambient dimension");
    for (std::size_t j = 0; j < ambient_dim; ++j) rows(i, j) = generators[i][j];
  }
  auto pivots = row_reduce(rows);

  Subspace s(ambient_dim);
  s.basis_ = RationalMatrix(ambient_dim, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_(i, k) = rows(k, i);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::column_span(const RationalMatrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return span(m.rows(), cols);
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return column_span(RationalMatrix::identity(ambient_dim));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(basis_.column(k));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_)
    throw DimensionError("vector length does not match ambient dimension");
  // Basis column k is the only one nonzero at coordinate pivots_[k], where
  // it equals 1, so the candidate coefficients can be read off directly.
  Vector residual = v;
  for (std::size_t k = 0; k < dim(); ++k) {
    const Rational c = v[pivots_[k]];
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < ambient_dim_; ++i) residual[i] -= c * basis_(i, k);
  }
  return is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_)
    throw DimensionError("subspaces live in different ambient spaces");
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.basis_.column(k))) return false;
  return true;
}

Subspace kernel(const RationalMatrix& m) {
  RationalMatrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(i, f);
    gens.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), gens);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionError("subspace_sum: ambient dimension mismatch");
  auto gens = u.basis_vectors();
  for (auto& b : v.basis_vectors()) gens.push_back(std::move(b));
  return Subspace::span(u.ambient_dim(), gens);
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionError("subspace_intersection: ambient dimension mismatch");
  const std::size_t n = u.ambient_dim();
  const std::size_t ku = u.dim();
  const std::size_t kv = v.dim();

  // x in ker [U | -V]  <=>  U x_u = V x_v.
  RationalMatrix stacked(n, ku + kv);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ku; ++j) stacked(i, j) = u.basis()(i, j);
    for (std::size_t j = 0; j < kv; ++j) stacked(i, ku + j) = -v.basis()(i, j);
  }
  std::vector<Vector> gens;
  for (const auto& x : kernel(stacked).basis_vectors()) {
    Vector xu(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(ku));
    gens.push_back(u.basis() * xu);
  }
  return Subspace::span(n, gens);
}

std::vector<Vector> quotient_basis(const Subspace& numerator,
                                   const Subspace& denominator) {
  if (numerator.ambient_dim() != denominator.ambient_dim())
    throw DimensionError("quotient_basis: ambient dimension mismatch");
  if (!numerator.contains(denominator))
    throw std::invalid_argument("quotient_basis: denominator is not a subspace of numerator");

  std::vector<Vector> reps;
  Subspace reached = denominator;
  for (const auto& v : numerator.basis_vectors()) {
    if (reached.dim() == numerator.dim()) break;
    if (reached.contains(v)) continue;
    reps.push_back(v);
    reached = subspace_sum(reached, Subspace::span(v.size(), {v}));
  }
  return reps;
}

std::optional<Vector> solve(const RationalMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;

  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::ostream& operator<<(std::ostream& os, const SignatureTriple& t) {
  return os << '(' << t.n_plus << ", " << t.n_minus << ", " << t.n_zero << ')';
}

SignatureTriple symmetric_signature(const RationalMatrix& s) {
  if (!s.is_square()) throw DimensionError("symmetric_signature: matrix is not square");
  if (!s.is_symmetric())
    throw std::invalid_argument("symmetric_signature: matrix is not symmetric");

  RationalMatrix a = s;
  const std::size_t n = a.rows();
  SignatureTriple out;

  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;

    if (p == n) {
      // Zero diagonal: fold a nonzero off-diagonal entry onto the diagonal.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        out.n_zero += n - k;
        break;
      }
      for (std::size_t j = 0; j < n; ++j) a(oi, j) += a(oj, j);
      for (std::size_t i = 0; i < n; ++i) a(i, oi) += a(i, oj);
      p = oi;
    }

    swap_index(p, k);
    const Rational pivot = a(k, k);
    for (std::size_t t = k + 1; t < n; ++t) {
      if (sgn(a(t, k)) == 0) continue;
      const Rational f = a(t, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(t, j) -= f * a(k, j);
      for (std::size_t i = k; i < n; ++i) a(i, t) -= f * a(i, k);
    }
    if (sgn(pivot) > 0)
      ++out.n_plus;
    else
      ++out.n_minus;
  }
  return out;
}

}  // namespace lefschetz

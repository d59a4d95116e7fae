// Exact linear algebra over the rationals.
//
// Everything here works on small dense matrices of GMP rationals. Subspaces
// are kept in reduced column echelon form so that equality of subspaces is
// equality of their basis grids.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lefschetz {

/// Arbitrary precision rational, always stored in lowest terms.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Raised when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation reaches a state its inputs were supposed to
/// rule out. Seeing one means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational make_rational(long numerator, long denominator = 1);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Row-major integer literal, e.g. {{1, 0}, {0, 1}}.
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(std::size_t rows,
                                     const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  RationalMatrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
Vector operator*(const RationalMatrix& a, const Vector& x);
std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

Rational dot(const Vector& u, const Vector& v);
/// u^T * form * v.
Rational bilinear(const RationalMatrix& form, const Vector& u, const Vector& v);
bool is_zero(const Vector& v);

/// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);
Rational determinant(RationalMatrix m);

/// A subspace of Q^n held by its unique reduced column echelon basis.
class Subspace {
 public:
  /// The zero subspace of Q^n.
  explicit Subspace(std::size_t ambient_dim);

  static Subspace span(std::size_t ambient_dim,
                       const std::vector<Vector>& generators);
  static Subspace column_span(const RationalMatrix& m);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.cols(); }
  const RationalMatrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  /// Coordinate index of the leading entry of each basis column.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const RationalMatrix& m);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersection(const Subspace& u, const Subspace& v);

/// Representatives in `numerator` whose classes form a basis of
/// numerator / denominator. Throws std::invalid_argument unless
/// denominator is contained in numerator.
std::vector<Vector> quotient_basis(const Subspace& numerator,
                                   const Subspace& denominator);

/// Some x with m * x = b, free variables set to zero; nullopt if the
/// system is inconsistent.
std::optional<Vector> solve(const RationalMatrix& m, const Vector& b);

struct SignatureTriple {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  long signature() const {
    return static_cast<long>(n_plus) - static_cast<long>(n_minus);
  }
  std::size_t dimension() const { return n_plus + n_minus + n_zero; }

  friend bool operator==(const SignatureTriple&,
                         const SignatureTriple&) = default;
};

std::ostream& operator<<(std::ostream& os, const SignatureTriple& t);

/// Inertia of a symmetric form by exact congruence diagonalization.
SignatureTriple symmetric_signature(const RationalMatrix& s);

}  // namespace lefschetz

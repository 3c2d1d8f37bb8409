#pragma once

#include <cstdint>
#include <vector>

#include "hallpi/perm.hpp"

namespace hallpi {

/// GF(q) for small q, with elements encoded as 0..q-1: the base-p digits of
/// an element are the coefficients of its polynomial representative (digit
/// i is the coefficient of x^i).  0 and 1 are the field's zero and one.
class FiniteField {
 public:
  using Elem = std::uint8_t;

  /// Primes up to 31 and the prime powers 4, 8, 9, 16, 25, 27, 32.
  static bool supported(std::uint32_t q);

  /// Throws RangeError if q is not supported.
  explicit FiniteField(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  /// Throws RangeError for 0.
  Elem inv(Elem a) const;

  /// A generator of the multiplicative group.
  Elem primitive() const noexcept { return primitive_; }
  /// 1, x, ..., x^(e-1): spans the field additively over GF(p).
  std::vector<Elem> additive_basis() const;

 private:
  std::uint32_t q_, p_, e_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  Elem primitive_ = 1;
};

/// Square matrix over a FiniteField, row-major.
struct Matrix {
  std::uint32_t n = 0;
  std::vector<FiniteField::Elem> a;

  FiniteField::Elem at(std::uint32_t i, std::uint32_t j) const { return a[i * n + j]; }
  FiniteField::Elem& at(std::uint32_t i, std::uint32_t j) { return a[i * n + j]; }
  bool operator==(const Matrix&) const = default;
};

Matrix identity_matrix(std::uint32_t n);
Matrix multiply(const FiniteField& f, const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& x);
/// Throws PreconditionError for singular matrices.
Matrix inverse(const FiniteField& f, const Matrix& x);
FiniteField::Elem determinant(const FiniteField& f, const Matrix& x);

/// The set a matrix group acts on: nonzero row vectors of GF(q)^n, or the
/// projective points, optionally followed by a second copy (covectors) on
/// which a matrix M acts as M^-T.  Vector v goes to vM.
///
/// Points are labelled in lexicographic coordinate order (first coordinate
/// most significant, field elements ordered by their codes).  Projective
/// points are represented by the vector whose first nonzero coordinate is 1.
/// With covectors, point N + i is the covector with the coordinates of
/// point i.
class MatrixDomain {
 public:
  MatrixDomain(std::uint32_t n, std::uint32_t q, bool projective, bool with_covectors);

  const FiniteField& field() const noexcept { return field_; }
  std::uint32_t dimension() const noexcept { return n_; }
  bool projective() const noexcept { return projective_; }
  bool with_covectors() const noexcept { return with_covectors_; }
  /// Number of vectors (or projective points) in one copy.
  std::size_t points() const noexcept { return vectors_.size(); }
  std::size_t degree() const noexcept { return with_covectors_ ? 2 * vectors_.size() : vectors_.size(); }

  const std::vector<FiniteField::Elem>& vector_of(std::size_t point) const { return vectors_[point]; }
  /// Label of a nonzero vector (normalised first when projective).
  std::size_t point_of(std::vector<FiniteField::Elem> v) const;

  /// The permutation induced by an invertible matrix.
  Permutation action(const Matrix& m) const;
  /// Swaps each vector with the covector of the same coordinates; conjugating
  /// action(M) by it gives action(M^-T).  Requires with_covectors.
  Permutation swap() const;

 private:
  std::uint64_t code(const std::vector<FiniteField::Elem>& v) const;
  std::vector<FiniteField::Elem> apply(const std::vector<FiniteField::Elem>& v, const Matrix& m) const;

  FiniteField field_;
  std::uint32_t n_;
  bool projective_, with_covectors_;
  std::vector<std::vector<FiniteField::Elem>> vectors_;
  std::vector<std::int32_t> label_;  // by code
};

}  // namespace hallpi

#pragma once

// Exact linear algebra over Q and the wedge product of row vectors.
//
// The wedge of k row vectors in Q^n is the vector of all k x k minors of the
// stacked k x n matrix, indexed by k-subsets of columns in lexicographic
// order. For k = n this is the single determinant; for k = 0 it is the unit
// scalar (1).

#include "bollobas/exact.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bollobas {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Every row must have length `cols`.
  static RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  std::vector<RationalVector> row_vectors() const;

  /// Rows of *this followed by rows of `below`.
  RationalMatrix stacked(const RationalMatrix& below) const;
  /// Matrix product; cols() must equal rhs.rows().
  RationalMatrix operator*(const RationalMatrix& rhs) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact row rank by fraction-free (Bareiss) elimination.
int rank(const RationalMatrix& m);

/// Determinant of a square matrix: cofactor expansion up to 4 x 4,
/// fraction-free elimination beyond.
Rational determinant(const RationalMatrix& m);

/// Lexicographically ordered k-subsets of {0, ..., n-1}.
std::vector<std::vector<int>> k_subsets(int n, int k);

class Blade {
public:
  /// Wedge of `generators` in Q^ambient_dim.
  Blade(std::vector<RationalVector> generators, int ambient_dim);

  int grade() const noexcept { return static_cast<int>(generators_.size()); }
  int ambient_dim() const noexcept { return ambient_; }
  const std::vector<RationalVector>& generators() const noexcept { return generators_; }
  /// Minors indexed by k-subsets in lexicographic order; length C(n, k).
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  /// True iff both blades are nonzero and coords differ by a nonzero scalar,
  /// or both are zero. Grades and ambient dimensions must match.
  bool is_proportional_to(const Blade& other) const;
  /// The single coordinate of a full-grade blade (grade == ambient_dim).
  const Rational& full_scalar() const;

private:
  std::vector<RationalVector> generators_;
  int ambient_;
  std::vector<Rational> coords_;
};

/// Throws DimensionError if the vectors disagree with ambient_dim or there
/// are more vectors than dimensions.
Blade wedge(std::span<const RationalVector> vs, int ambient_dim);
bool is_independent(std::span<const RationalVector> vs, int ambient_dim);
/// Blade on the concatenated generator lists. Throws DimensionError on
/// ambient mismatch and GradeError when the grades sum past ambient_dim.
Blade wedge_concat(const Blade& a, const Blade& b);

/// A subspace of Q^n stored by a basis of independent rows.
class SubspaceRep {
public:
  /// Rows of `basis` must be independent; throws DimensionError otherwise.
  explicit SubspaceRep(RationalMatrix basis);
  /// The zero subspace of Q^ambient_dim.
  static SubspaceRep zero(std::size_t ambient_dim);
  /// Span of arbitrary generator rows (dependent rows are dropped).
  static SubspaceRep span_of(const RationalMatrix& generators);
  /// Span of a set of standard basis vectors (0-based coordinates).
  static SubspaceRep coordinate(std::span<const int> coords, std::size_t ambient_dim);

  int dim() const noexcept { return static_cast<int>(basis_.rows()); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  const RationalMatrix& basis() const noexcept { return basis_; }

  /// Image under the linear map v -> v * map (map is ambient x target).
  SubspaceRep image(const RationalMatrix& map) const;

private:
  RationalMatrix basis_;
};

/// Wedge of the stored basis. Defined only up to a nonzero factor: compare
/// with is_zero / is_proportional_to, never coordinatewise.
Blade subspace_blade(const SubspaceRep& w);

int sum_dim(const SubspaceRep& a, const SubspaceRep& b);
/// dim(a) + dim(b) - dim(a + b).
int intersection_dim(const SubspaceRep& a, const SubspaceRep& b);

} // namespace bollobas

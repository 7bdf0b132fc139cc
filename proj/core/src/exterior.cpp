#include "bollobas/exterior.hpp"

#include "bollobas/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace bollobas {

namespace mp = boost::multiprecision;

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("row " + std::to_string(r) + " has length " +
                           std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return RationalVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

std::vector<RationalVector> RationalMatrix::row_vectors() const {
  std::vector<RationalVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& below) const {
  if (below.cols_ != cols_) throw DimensionError("stacking matrices of different widths");
  RationalMatrix m(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<BigInteger>>;

// Scales each row by the lcm of its denominators; row rank and the
// vanishing of any minor are unchanged.
IntMatrix clear_denominators(const RationalMatrix& m) {
  IntMatrix out(m.rows(), std::vector<BigInteger>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInteger l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigInteger den = mp::denominator(m(r, c));
      l = l / mp::gcd(l, den) * den;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r][c] = mp::numerator(m(r, c)) * (l / mp::denominator(m(r, c)));
    }
  }
  return out;
}

// Fraction-free forward elimination. Returns the rank; `sign` collects row
// swaps and `last_pivot` the final leading pivot (the determinant, for a
// full-rank square input with unit row scales).
int bareiss(IntMatrix& a, std::size_t cols, int& sign) {
  const std::size_t rows = a.size();
  BigInteger prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

Rational cofactor_det(const RationalMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t k = cols.size();
  if (k == 0) return 1;
  if (k == 1) return m(row, cols[0]);
  if (k == 2) return m(row, cols[0]) * m(row + 1, cols[1]) - m(row, cols[1]) * m(row + 1, cols[0]);
  Rational det = 0;
  for (std::size_t idx = 0; idx < k; ++idx) {
    const Rational& entry = m(row, cols[idx]);
    if (entry == 0) continue;
    std::vector<std::size_t> minor_cols;
    minor_cols.reserve(k - 1);
    for (std::size_t j = 0; j < k; ++j) {
      if (j != idx) minor_cols.push_back(cols[j]);
    }
    Rational term = entry * cofactor_det(m, minor_cols, row + 1);
    if (idx % 2 == 0) det += term; else det -= term;
  }
  return det;
}

} // namespace

int rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntMatrix a = clear_denominators(m);
  int sign = 1;
  return bareiss(a, m.cols(), sign);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n <= 4) {
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    return cofactor_det(m, cols, 0);
  }
  // Clear denominators row by row, eliminate, then undo the scaling.
  Rational scale = 1;
  IntMatrix a(n, std::vector<BigInteger>(n));
  for (std::size_t r = 0; r < n; ++r) {
    BigInteger l = 1;
    for (std::size_t c = 0; c < n; ++c) {
      const BigInteger den = mp::denominator(m(r, c));
      l = l / mp::gcd(l, den) * den;
    }
    for (std::size_t c = 0; c < n; ++c) {
      a[r][c] = mp::numerator(m(r, c)) * (l / mp::denominator(m(r, c)));
    }
    scale *= Rational(BigInteger(1), l);
  }
  int sign = 1;
  if (bareiss(a, n, sign) < static_cast<int>(n)) return 0;
  return Rational(a[n - 1][n - 1]) * sign * scale;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

Blade::Blade(std::vector<RationalVector> generators, int ambient_dim)
    : generators_(std::move(generators)), ambient_(ambient_dim) {
  if (ambient_dim < 0) throw DimensionError("negative ambient dimension");
  const int k = grade();
  if (k > ambient_dim) {
    throw DimensionError("wedge of " + std::to_string(k) + " vectors in dimension " +
                         std::to_string(ambient_dim));
  }
  const auto a = RationalMatrix::from_rows(generators_, static_cast<std::size_t>(ambient_dim));
  for (const auto& subset : k_subsets(ambient_dim, k)) {
    RationalMatrix minor(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) {
        minor(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
            a(static_cast<std::size_t>(r), static_cast<std::size_t>(subset[static_cast<std::size_t>(c)]));
      }
    }
    coords_.push_back(determinant(minor));
  }
}

bool Blade::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
}

bool Blade::is_proportional_to(const Blade& other) const {
  if (grade() != other.grade() || ambient_ != other.ambient_) {
    throw GradeError("comparing blades of different grade or ambient dimension");
  }
  const bool z1 = is_zero();
  const bool z2 = other.is_zero();
  if (z1 || z2) return z1 && z2;
  std::size_t pivot = 0;
  while (coords_[pivot] == 0) ++pivot;
  if (other.coords_[pivot] == 0) return false;
  const Rational ratio = other.coords_[pivot] / coords_[pivot];
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (other.coords_[i] != ratio * coords_[i]) return false;
  }
  return true;
}

const Rational& Blade::full_scalar() const {
  if (grade() != ambient_) {
    throw GradeError("full_scalar needs grade == ambient dimension");
  }
  return coords_.front();
}

Blade wedge(std::span<const RationalVector> vs, int ambient_dim) {
  return Blade(std::vector<RationalVector>(vs.begin(), vs.end()), ambient_dim);
}

bool is_independent(std::span<const RationalVector> vs, int ambient_dim) {
  return !wedge(vs, ambient_dim).is_zero();
}

Blade wedge_concat(const Blade& a, const Blade& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("wedge_concat of blades in different ambient dimensions");
  }
  if (a.grade() + b.grade() > a.ambient_dim()) {
    throw GradeError("grades " + std::to_string(a.grade()) + " + " + std::to_string(b.grade()) +
                     " exceed ambient dimension " + std::to_string(a.ambient_dim()));
  }
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Blade(std::move(gens), a.ambient_dim());
}

SubspaceRep::SubspaceRep(RationalMatrix basis) : basis_(std::move(basis)) {
  if (rank(basis_) != static_cast<int>(basis_.rows())) {
    throw DimensionError("subspace basis rows are linearly dependent");
  }
}

SubspaceRep SubspaceRep::zero(std::size_t ambient_dim) {
  return SubspaceRep(RationalMatrix(0, ambient_dim));
}

SubspaceRep SubspaceRep::span_of(const RationalMatrix& generators) {
  std::vector<RationalVector> kept;
  int current = 0;
  for (std::size_t r = 0; r < generators.rows(); ++r) {
    kept.push_back(generators.row(r));
    const int next = rank(RationalMatrix::from_rows(kept, generators.cols()));
    if (next == current) kept.pop_back(); else current = next;
  }
  return SubspaceRep(RationalMatrix::from_rows(kept, generators.cols()));
}

SubspaceRep SubspaceRep::coordinate(std::span<const int> coords, std::size_t ambient_dim) {
  RationalMatrix b(coords.size(), ambient_dim);
  for (std::size_t r = 0; r < coords.size(); ++r) {
    const int c = coords[r];
    if (c < 0 || static_cast<std::size_t>(c) >= ambient_dim) {
      throw DimensionError("coordinate index out of range");
    }
    b(r, static_cast<std::size_t>(c)) = 1;
  }
  return SubspaceRep(std::move(b));
}

SubspaceRep SubspaceRep::image(const RationalMatrix& map) const {
  if (map.rows() != ambient_dim()) throw DimensionError("map domain does not match subspace");
  return span_of(basis_ * map);
}

Blade subspace_blade(const SubspaceRep& w) {
  return Blade(w.basis().row_vectors(), static_cast<int>(w.ambient_dim()));
}

int sum_dim(const SubspaceRep& a, const SubspaceRep& b) {
  return rank(a.basis().stacked(b.basis()));
}

int intersection_dim(const SubspaceRep& a, const SubspaceRep& b) {
  return a.dim() + b.dim() - sum_dim(a, b);
}

} // namespace bollobas

#pragma once

// Linear-independence certificate for uniform skew Bollobás systems of
// subspace d-tuples.
//
// For each k = 2..d a general-position map phi_k : Q^n -> Q^{a_1+...+a_k}
// is sampled and checked. With alpha(i, k, p) the blade of phi_k(A_i^(p)),
// the functional f_{i,k}(beta) is the full-grade scalar of
// alpha(i,k,1) ^ ... ^ alpha(i,k,k-1) ^ beta, and the evaluation matrix has
// entry (i, j) = prod_k f_{i,k}(alpha(j, k, k)). A nonzero diagonal with a
// zero strict upper triangle makes f_1..f_m linearly independent, which
// caps m at multinomial(a_1 + ... + a_d; a_1, ..., a_d).

#include "bollobas/constructions.hpp"
#include "bollobas/exact.hpp"
#include "bollobas/exterior.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bollobas {

inline constexpr int kDefaultMaxRetries = 32;

struct GeneralPositionMap {
  /// ambient x target; a row vector v maps to v * matrix.
  RationalMatrix matrix;
  /// (constraint index, required image dimension), all verified.
  std::vector<std::pair<std::size_t, int>> verified_constraints;
  /// Samples rejected before this one was accepted.
  int retries = 0;
  /// Entries were drawn from [-entry_bound, entry_bound].
  std::int64_t entry_bound = 0;
};

/// Draws integer matrices until dim(phi(U)) = min(dim U, target) for every
/// constraint U. entry_bound 0 picks 10 * (constraints + 1) * ambient.
/// Throws RetriesExhausted after max_retries rejected draws.
GeneralPositionMap sample_general_position(int ambient, int target,
                                           std::span<const SubspaceRep> constraints,
                                           std::uint64_t seed,
                                           int max_retries = kDefaultMaxRetries,
                                           std::int64_t entry_bound = 0);

/// First violating pair i < j (0-based) of the subspace skew condition.
SystemCheck is_skew_bollobas_spaces(const SubspaceFamily& f);

struct PhiResult {
  int k = 0;
  int target_dim = 0;
  GeneralPositionMap map;
  /// Cross pairs (i, j, p, q) where intersection dimension was compared.
  std::size_t preserved_checked = 0;
  /// True iff dim(phi(A_i^p) cap phi(A_j^q)) = dim(A_i^p cap A_j^q) for
  /// every checked pair.
  bool intersections_preserved = true;
  /// True iff phi_k(A_i^1) + ... + phi_k(A_i^k) is all of the target space
  /// for every i.
  bool direct_sums_span = true;
};

/// Samples phi_k for k in 2..d (1-based). Constraints: every sum
/// A_i^1 + ... + A_i^k and every A_i^p + A_j^q with p, q <= k. Intersection
/// preservation is then verified for every pair whose sum fits in the target
/// dimension. Throws TypeError if the family is not uniform, IndexError on a
/// bad k.
PhiResult build_phi(const SubspaceFamily& f, int k, std::uint64_t seed,
                    int max_retries = kDefaultMaxRetries);

using EvaluationMatrix = std::vector<std::vector<Rational>>;

/// maps[k - 2] is phi_k. Entry (i, j) is f_i(xi_j).
EvaluationMatrix evaluation_matrix(const SubspaceFamily& f,
                                   std::span<const GeneralPositionMap> maps);

struct CellIndex {
  std::size_t i;
  std::size_t j;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

struct Certificate {
  std::size_t m = 0;
  std::vector<int> type;
  std::vector<PhiResult> phis;
  EvaluationMatrix evaluation;
  SystemCheck skew;
  /// Zero diagonal entries and nonzero strict-upper entries.
  std::vector<CellIndex> violations;
  bool pass = false;
  BigInteger bound;
  /// m <= bound; only meaningful when pass.
  bool within_bound = false;
};

/// Runs the whole pipeline; a failing skew check is recorded but the matrix
/// is still computed. Throws TypeError for non-uniform families.
Certificate certify(const SubspaceFamily& f, std::uint64_t seed,
                    int max_retries = kDefaultMaxRetries);

} // namespace bollobas

#include "bollobas/certificate.hpp"

#include "bollobas/errors.hpp"
#include "bollobas/rng.hpp"

#include <algorithm>
#include <string>

namespace bollobas {

GeneralPositionMap sample_general_position(int ambient, int target,
                                           std::span<const SubspaceRep> constraints,
                                           std::uint64_t seed, int max_retries,
                                           std::int64_t entry_bound) {
  if (target < 0 || target > ambient) {
    throw DimensionError("general position target " + std::to_string(target) +
                         " must lie in 0.." + std::to_string(ambient));
  }
  for (const auto& u : constraints) {
    if (u.ambient_dim() != static_cast<std::size_t>(ambient)) {
      throw DimensionError("constraint subspace lives in the wrong ambient dimension");
    }
  }
  if (entry_bound <= 0) {
    entry_bound = 10 * (static_cast<std::int64_t>(constraints.size()) + 1) * ambient;
    entry_bound = std::max<std::int64_t>(entry_bound, 1);
  }
  Rng rng(derive_seed(seed, "general-position"));
  const auto rows = static_cast<std::size_t>(ambient);
  const auto cols = static_cast<std::size_t>(target);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.between(-entry_bound, entry_bound);
    }
    GeneralPositionMap out{m, {}, attempt, entry_bound};
    bool ok = true;
    for (std::size_t u = 0; u < constraints.size() && ok; ++u) {
      const int required = std::min(constraints[u].dim(), target);
      ok = rank(constraints[u].basis() * m) == required;
      out.verified_constraints.emplace_back(u, required);
    }
    if (ok) return out;
  }
  throw RetriesExhausted("no general-position map found after " + std::to_string(max_retries) +
                         " retries");
}

SystemCheck is_skew_bollobas_spaces(const SubspaceFamily& f) {
  const int d = f.arity();
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      bool met = false;
      for (int p = 0; p < d && !met; ++p) {
        for (int q = p + 1; q < d && !met; ++q) {
          met = intersection_dim(f[i][static_cast<std::size_t>(p)],
                                 f[j][static_cast<std::size_t>(q)]) > 0;
        }
      }
      if (!met) return {false, PairIndex{i, j}};
    }
  }
  return {};
}

namespace {

std::vector<int> require_uniform(const SubspaceFamily& f) {
  auto type = f.uniform_type();
  if (!type) throw TypeError("family is not uniform: part dimensions differ between entries");
  return *type;
}

SubspaceRep span_of_parts(const SubspaceFamily::Entry& e, int upto) {
  RationalMatrix all(0, e.front().ambient_dim());
  for (int p = 0; p < upto; ++p) all = all.stacked(e[static_cast<std::size_t>(p)].basis());
  return SubspaceRep::span_of(all);
}

} // namespace

PhiResult build_phi(const SubspaceFamily& f, int k, std::uint64_t seed, int max_retries) {
  const auto type = require_uniform(f);
  const int d = f.arity();
  if (k < 2 || k > d) {
    throw IndexError("phi index " + std::to_string(k) + " outside 2.." + std::to_string(d));
  }
  int target = 0;
  for (int p = 0; p < k; ++p) target += type[static_cast<std::size_t>(p)];

  const std::size_t m = f.size();
  std::vector<SubspaceRep> constraints;
  for (std::size_t i = 0; i < m; ++i) constraints.push_back(span_of_parts(f[i], k));
  const auto ku = static_cast<std::size_t>(k);
  for (std::size_t a = 0; a < m * ku; ++a) {
    for (std::size_t b = a; b < m * ku; ++b) {
      const auto& u = f[a / ku][a % ku];
      const auto& w = f[b / ku][b % ku];
      constraints.push_back(SubspaceRep::span_of(u.basis().stacked(w.basis())));
    }
  }

  PhiResult out;
  out.k = k;
  out.target_dim = target;
  out.map = sample_general_position(f.ambient_dim(), target, constraints,
                                    derive_seed(seed, "phi", static_cast<std::uint64_t>(k)),
                                    max_retries);

  const auto& phi = out.map.matrix;
  std::vector<std::vector<SubspaceRep>> images(m);
  for (std::size_t i = 0; i < m; ++i) {
    RationalMatrix all(0, static_cast<std::size_t>(target));
    for (std::size_t p = 0; p < ku; ++p) {
      images[i].push_back(f[i][p].image(phi));
      all = all.stacked(images[i].back().basis());
    }
    if (rank(all) != target) out.direct_sums_span = false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t p = 0; p < ku; ++p) {
        for (std::size_t q = 0; q < ku; ++q) {
          // Pairs whose sum exceeds the target cannot keep their dimension.
          if (sum_dim(f[i][p], f[j][q]) > target) continue;
          ++out.preserved_checked;
          if (intersection_dim(images[i][p], images[j][q]) != intersection_dim(f[i][p], f[j][q])) {
            out.intersections_preserved = false;
          }
        }
      }
    }
  }
  return out;
}

EvaluationMatrix evaluation_matrix(const SubspaceFamily& f, std::span<const GeneralPositionMap> maps) {
  const int d = f.arity();
  const std::size_t m = f.size();
  if (static_cast<int>(maps.size()) != d - 1) {
    throw DimensionError("evaluation_matrix needs one map per k = 2.." + std::to_string(d));
  }
  // prefix[k-2][i] = alpha(i,k,1) ^ ... ^ alpha(i,k,k-1); last[k-2][j] = alpha(j,k,k).
  std::vector<std::vector<Blade>> prefix(maps.size());
  std::vector<std::vector<Blade>> last(maps.size());
  for (int k = 2; k <= d; ++k) {
    const auto& phi = maps[static_cast<std::size_t>(k - 2)].matrix;
    const int target = static_cast<int>(phi.cols());
    for (std::size_t i = 0; i < m; ++i) {
      Blade acc({}, target);
      for (int p = 0; p < k - 1; ++p) {
        acc = wedge_concat(acc, subspace_blade(f[i][static_cast<std::size_t>(p)].image(phi)));
      }
      prefix[static_cast<std::size_t>(k - 2)].push_back(std::move(acc));
      last[static_cast<std::size_t>(k - 2)].push_back(
          subspace_blade(f[i][static_cast<std::size_t>(k - 1)].image(phi)));
    }
  }
  EvaluationMatrix eval(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Rational value = 1;
      for (std::size_t k = 0; k < maps.size() && value != 0; ++k) {
        value *= wedge_concat(prefix[k][i], last[k][j]).full_scalar();
      }
      eval[i][j] = value;
    }
  }
  return eval;
}

Certificate certify(const SubspaceFamily& f, std::uint64_t seed, int max_retries) {
  Certificate cert;
  cert.type = require_uniform(f);
  cert.m = f.size();
  cert.skew = is_skew_bollobas_spaces(f);
  cert.bound = multinomial(TupleType(cert.type));

  std::vector<GeneralPositionMap> maps;
  for (int k = 2; k <= f.arity(); ++k) {
    cert.phis.push_back(build_phi(f, k, seed, max_retries));
    maps.push_back(cert.phis.back().map);
  }
  cert.evaluation = evaluation_matrix(f, maps);
  for (std::size_t i = 0; i < cert.m; ++i) {
    if (cert.evaluation[i][i] == 0) cert.violations.push_back({i, i});
    for (std::size_t j = i + 1; j < cert.m; ++j) {
      if (cert.evaluation[i][j] != 0) cert.violations.push_back({i, j});
    }
  }
  cert.pass = cert.violations.empty();
  cert.within_bound = BigInteger(cert.m) <= cert.bound;
  return cert;
}

} // namespace bollobas

#pragma once

/**
 * @file neighbors.hpp
 * @brief Bent functions at minimal distance p^(n/2) from a given bent function.
 *
 * Any bent function at distance p^(n/2) from b differs from it by c * chi^Gamma
 * with Gamma an (n/2)-dimensional coset, so scanning every such coset and every
 * c != 0 finds all of them. The full scan does not rely on Gamma being an
 * isotropic coset; the isotropic-only mode does and must return a subset.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbent/bent.hpp"
#include "pbent/quadform.hpp"
#include "pbent/zpspace.hpp"

namespace pbent {

/// b + c * chi^Gamma.
inline TruthTable shift_on_subspace(const TruthTable& b, const AffineSubspace& gamma, int c) {
  const Params& params = b.params;
  if (params.mod(c) == 0) throw InvalidArgument("shift_on_subspace requires c != 0 mod p");
  TruthTable out = b;
  for (Index x : gamma.points()) {
    out.values[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(params.add(b[x], c));
  }
  return out;
}

struct SubspaceNeighbors {
  std::vector<TruthTable> members;  // bent shifts, ordered by c
  std::vector<int> shifts;          // the c of each member
  bool affine_restriction = false;  // b is affine on Gamma

  /// b affine on Gamma but fewer than p-1 bent shifts: a counterexample.
  bool shortfall(int p) const { return affine_restriction && members.size() != static_cast<std::size_t>(p - 1); }
};

/// The bent members of {b + c chi^Gamma : c = 1..p-1}.
inline SubspaceNeighbors neighbors_on_subspace(const TruthTable& b, const AffineSubspace& gamma) {
  const Params& params = b.params;
  if (params.n() % 2 != 0 || gamma.dim() != params.n() / 2) {
    throw InvalidArgument("neighbors_on_subspace requires even n and dim Gamma = n/2");
  }
  if (!is_bent(b)) throw InvalidArgument("neighbors_on_subspace requires a bent base");
  SubspaceNeighbors out;
  out.affine_restriction = is_affine_on(b, gamma);
  for (int c = 1; c < params.p(); ++c) {
    auto t = shift_on_subspace(b, gamma, c);
    if (is_bent(t)) {
      out.members.push_back(std::move(t));
      out.shifts.push_back(c);
    }
  }
  return out;
}

/// p^d * (p^(d-1) + 1) ... (p + 1) * (p - 1).
inline Index neighbor_count_product(int p, int d) {
  Index r = checked_pow(static_cast<Index>(p), d) * static_cast<Index>(p - 1);
  for (int i = 1; i <= d - 1; ++i) r *= checked_pow(static_cast<Index>(p), i) + 1;
  return r;
}

/// p^d * (p - 1) * (number of d-dimensional totally isotropic subspaces of q0).
inline Index neighbor_count_composite(int p, int d) {
  return checked_pow(static_cast<Index>(p), d) * static_cast<Index>(p - 1) * isotropic_count_formula(p, d);
}

enum class Verdict { matches_formula, matches_alt, matches_neither };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::matches_formula: return "matches_formula";
    case Verdict::matches_alt: return "matches_alt";
    case Verdict::matches_neither: return "matches_neither";
  }
  return "matches_neither";
}

struct NeighborReport {
  TruthTable base;
  std::string base_label;
  int p = 0;
  int d = 0;
  Index census_size = 0;
  std::vector<std::pair<AffineSubspace, Index>> per_subspace;  // cosets carrying at least one member
  Index formula_value = 0;
  Index alt_value = 0;
  Verdict verdict = Verdict::matches_neither;
  std::vector<TruthTable> members;  // lexicographic
  std::vector<AffineSubspace> shortfalls;  // cosets where b is affine but fewer than p-1 shifts are bent
};

enum class CensusMode { all_subspaces, isotropic_only };

/**
 * Every bent function at distance exactly p^(n/2) from b.
 *
 * all_subspaces scans all gaussian_binomial(n, n/2, p) * p^(n/2) cosets.
 * isotropic_only scans cosets of the maximal totally isotropic subspaces of
 * `form` and needs it to be supplied.
 */
inline NeighborReport minimal_neighbor_census(const TruthTable& b, const Limits& limits = {},
                                              CensusMode mode = CensusMode::all_subspaces,
                                              const std::optional<QuadraticForm>& form = std::nullopt) {
  const Params& params = b.params;
  if (params.n() % 2 != 0) throw InvalidArgument("minimal_neighbor_census requires even n");
  if (!is_bent(b)) throw InvalidArgument("minimal_neighbor_census requires a bent base");
  const int d = params.n() / 2;

  const Index candidates = gaussian_binomial(params.n(), d, params.p()) *
                           checked_pow(static_cast<Index>(params.p()), d) * static_cast<Index>(params.p() - 1);
  if (mode == CensusMode::all_subspaces && candidates > limits.max_census_candidates) {
    throw CapExceeded("neighbor census needs " + std::to_string(candidates) + " candidates, cap is " +
                      std::to_string(limits.max_census_candidates));
  }

  std::vector<AffineSubspace> linear;
  if (mode == CensusMode::all_subspaces) {
    linear = enumerate_subspaces(params, d, limits);
  } else {
    if (!form) throw InvalidArgument("isotropic_only census needs a quadratic form");
    linear = enumerate_max_isotropic(*form, d, limits);
  }

  NeighborReport rep{b, "", params.p(), d, 0, {}, neighbor_count_product(params.p(), d),
                     neighbor_count_composite(params.p(), d), Verdict::matches_neither, {}, {}};
  const auto expected = static_cast<Index>(half_power(params));
  for (const auto& u : linear) {
    for (const auto& gamma : enumerate_cosets(u)) {
      auto found = neighbors_on_subspace(b, gamma);
      if (found.shortfall(params.p())) rep.shortfalls.push_back(gamma);
      if (found.members.empty()) continue;
      rep.per_subspace.emplace_back(gamma, found.members.size());
      for (auto& t : found.members) {
        if (distance(b, t) != expected) throw Error("internal: census member at the wrong distance");
        rep.members.push_back(std::move(t));
      }
    }
  }
  std::sort(rep.members.begin(), rep.members.end());
  if (std::adjacent_find(rep.members.begin(), rep.members.end()) != rep.members.end()) {
    throw Error("internal: duplicate census member");
  }
  std::sort(rep.per_subspace.begin(), rep.per_subspace.end());
  rep.census_size = rep.members.size();
  if (rep.census_size == rep.formula_value) {
    rep.verdict = Verdict::matches_formula;
  } else if (rep.census_size == rep.alt_value) {
    rep.verdict = Verdict::matches_alt;
  } else {
    rep.verdict = Verdict::matches_neither;
  }
  return rep;
}

/// The census around q0 on Z_p^(2d), tabulated against both closed forms.
inline NeighborReport q0_neighbor_report(int p, int d, const Limits& limits = {}) {
  if (p == 2) throw InvalidArgument("the minimal-neighbor count around q0 requires p > 2");
  if (d < 1) throw InvalidArgument("d must be at least 1");
  const auto params = Params::make(p, 2 * d, limits.max_points);
  auto rep = minimal_neighbor_census(materialize(q0(params)), limits);
  rep.base_label = "q0";
  return rep;
}

}  // namespace pbent

#pragma once

/**
 * @file quadform.hpp
 * @brief Quadratic forms over Z_p and their totally isotropic subspaces.
 *
 * Q(x) = sum_{i <= j} a_ij x_i x_j with coordinates indexed from 0.
 * For n = 2d the form q0 is v_1 u_1 + ... + v_d u_d with the v-block in
 * coordinates [0, d) and the u-block in [d, 2d).
 */

#include <cstdint>
#include <string>
#include <vector>

#include "pbent/bent.hpp"
#include "pbent/zpspace.hpp"

namespace pbent {

class QuadraticForm {
 public:
  /// The zero form.
  explicit QuadraticForm(Params params)
      : params_(params),
        coeffs_(static_cast<std::size_t>(params.n()) * static_cast<std::size_t>(params.n() + 1) / 2, 0) {}

  const Params& params() const noexcept { return params_; }

  int coeff(int i, int j) const { return coeffs_[slot(i, j)]; }
  void set_coeff(int i, int j, int a) { coeffs_[slot(i, j)] = params_.mod(a); }

  int operator()(std::span<const int> x) const {
    long long acc = 0;
    const int n = params_.n();
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = i; j < n; ++j) {
        const int a = coeffs_[slot(i, j)];
        if (a != 0) acc += static_cast<long long>(a) * x[static_cast<std::size_t>(i)] % params_.p() * x[static_cast<std::size_t>(j)];
      }
    }
    return params_.mod(acc);
  }
  int operator()(Index x) const { return (*this)(params_.digits(x)); }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  std::size_t slot(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= params_.n()) throw InvalidArgument("quadratic form index out of range");
    // Row-major upper triangle.
    const auto n = static_cast<std::size_t>(params_.n());
    const auto ui = static_cast<std::size_t>(i);
    return ui * (2 * n - ui + 1) / 2 + static_cast<std::size_t>(j - i);
  }

  Params params_;
  std::vector<int> coeffs_;
};

/// v_1 u_1 + ... + v_d u_d on Z_p^(2d).
inline QuadraticForm q0(const Params& params) {
  if (params.n() % 2 != 0) throw InvalidArgument("q0 requires even n, got n=" + std::to_string(params.n()));
  QuadraticForm q(params);
  const int d = params.n() / 2;
  for (int i = 0; i < d; ++i) q.set_coeff(i, d + i, 1);
  return q;
}

inline TruthTable materialize(const QuadraticForm& q) {
  return TruthTable::from_function(q.params(), [&](Index x) { return q(x); });
}

/// {x : Q(y + x) = Q(y) for all y}, evaluated literally over all pairs.
inline AffineSubspace radical(const QuadraticForm& q, const Limits& limits = {}) {
  const Params& params = q.params();
  if (params.size() > limits.max_exhaustive_points) throw CapExceeded("radical: p^n exceeds the exhaustive cap");
  const auto table = materialize(q);
  std::vector<Index> rad;
  for (Index x = 0; x < params.size(); ++x) {
    bool fixed = true;
    for (Index y = 0; y < params.size() && fixed; ++y) fixed = table[params.add_points(y, x)] == table[y];
    if (fixed) rad.push_back(x);
  }
  auto sub = recognize_affine(params, rad);
  if (!sub || !sub->is_linear()) throw Error("internal: radical is not a linear subspace");
  return *sub;
}

/**
 * Radical through the polar form B(x,y) = Q(x+y) - Q(x) - Q(y).
 *
 * For odd p this is ker B. For p = 2 it is the zero set of Q inside ker B,
 * where Q is additive and hence cuts out a subspace.
 */
inline AffineSubspace radical_bilinear(const QuadraticForm& q) {
  const Params& params = q.params();
  const int n = params.n();
  std::vector<Coords> rows(static_cast<std::size_t>(n), Coords(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i == j ? params.mul(2, q.coeff(i, i)) : q.coeff(i, j);
    }
  }
  auto kernel = orthogonal_complement(canonicalize(params, rows));
  if (params.p() != 2) return kernel;
  std::vector<Index> zeros;
  for (Index x : kernel.points()) {
    if (q(x) == 0) zeros.push_back(x);
  }
  return *recognize_affine(params, zeros);
}

inline bool is_totally_isotropic(const QuadraticForm& q, const AffineSubspace& u) {
  if (!u.is_linear()) throw InvalidArgument("is_totally_isotropic requires a linear subspace");
  for (Index x : u.points()) {
    if (q(x) != 0) return false;
  }
  return true;
}

/// Every k-dimensional totally isotropic linear subspace, in subspace-stream order.
inline std::vector<AffineSubspace> enumerate_isotropic(const QuadraticForm& q, int k, const Limits& limits = {}) {
  std::vector<AffineSubspace> out;
  for (auto& u : enumerate_subspaces(q.params(), k, limits)) {
    if (is_totally_isotropic(q, u)) out.push_back(std::move(u));
  }
  return out;
}

/// The d-dimensional totally isotropic subspaces of a form on Z_p^(2d).
inline std::vector<AffineSubspace> enumerate_max_isotropic(const QuadraticForm& q, int d, const Limits& limits = {}) {
  if (q.params().n() != 2 * d) throw InvalidArgument("enumerate_max_isotropic requires n = 2d");
  return enumerate_isotropic(q, d, limits);
}

/// Count of totally isotropic subspaces for every dimension 0..n.
inline std::vector<Index> isotropic_counts_by_dimension(const QuadraticForm& q, const Limits& limits = {}) {
  std::vector<Index> counts;
  for (int k = 0; k <= q.params().n(); ++k) counts.push_back(enumerate_isotropic(q, k, limits).size());
  return counts;
}

inline int witt_index(const QuadraticForm& q, const Limits& limits = {}) {
  for (int k = q.params().n(); k > 0; --k) {
    for (const auto& u : enumerate_subspaces(q.params(), k, limits)) {
      if (is_totally_isotropic(q, u)) return k;
    }
  }
  return 0;
}

/// prod_{i=1}^{d} (p^(d-i) + 1).
inline Index isotropic_count_formula(int p, int d) {
  Index r = 1;
  for (int i = 1; i <= d; ++i) {
    if (__builtin_mul_overflow(r, checked_pow(static_cast<Index>(p), d - i) + 1, &r)) throw OverflowError("count overflow");
  }
  return r;
}

}  // namespace pbent

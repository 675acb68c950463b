#pragma once

/**
 * @file zpspace.hpp
 * @brief The vector space Z_p^n: points, residues, subspaces and cosets.
 *
 * Points are stored by index. The encoding is little-endian base p: digit j
 * of the index is coordinate x_{j+1}, so index = sum_j x_{j+1} * p^j. The
 * truth-table file format and every enumeration order depend on this.
 *
 * Affine subspaces are kept in canonical form: the direction space as a
 * reduced row-echelon basis with ascending pivot columns, and an offset with
 * zero entries in all pivot coordinates. Two descriptions of the same coset
 * therefore compare equal structurally.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pbent/error.hpp"

namespace pbent {

using Index = std::uint64_t;
using Coords = std::vector<int>;

inline constexpr int kMaxPrime = 13;
inline constexpr Index kDefaultPointLimit = Index{1} << 20;

/// Configurable size caps shared by all exhaustive operations.
struct Limits {
  Index max_points = kDefaultPointLimit;           // p^n for any Params
  Index max_subspaces = Index{1} << 20;            // length of one subspace stream
  Index max_tables = Index{1} << 20;               // p^(p^n) for exhaustive table scans
  Index max_exhaustive_points = 4096;              // p^n for O(p^2n) brute force
  Index max_hadamard_points = 512;                 // p^n for the p^n x p^n matrix test
  Index max_census_candidates = 10000;             // (coset, shift) pairs in one neighbor census
};

constexpr bool is_prime(long long v) noexcept {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

/// p^e with an overflow check against 2^64.
inline Index checked_pow(Index base, int e) {
  Index r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw OverflowError("integer power overflows 64 bits");
  }
  return r;
}

/// The ambient group Z_p^n together with residue and point arithmetic.
class Params {
 public:
  static Params make(int p, int n, Index point_limit = kDefaultPointLimit) {
    if (!is_prime(p) || p > kMaxPrime) {
      throw InvalidArgument("p must be a prime in [2, " + std::to_string(kMaxPrime) + "], got " +
                            std::to_string(p));
    }
    if (n < 1) throw InvalidArgument("n must be at least 1, got " + std::to_string(n));
    Index size = 1;
    for (int i = 0; i < n; ++i) {
      if (__builtin_mul_overflow(size, static_cast<Index>(p), &size) || size > point_limit) {
        throw CapExceeded("p^n = " + std::to_string(p) + "^" + std::to_string(n) +
                          " exceeds the point limit " + std::to_string(point_limit));
      }
    }
    return Params(p, n, size);
  }

  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  Index size() const noexcept { return size_; }

  int mod(long long v) const noexcept {
    long long r = v % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const noexcept { return mod(static_cast<long long>(a) + b); }
  int sub(int a, int b) const noexcept { return mod(static_cast<long long>(a) - b); }
  int mul(int a, int b) const noexcept { return mod(static_cast<long long>(a) * b); }
  int neg(int a) const noexcept { return mod(-static_cast<long long>(a)); }
  int inv(int a) const {
    a = mod(a);
    if (a == 0) throw InvalidArgument("zero has no inverse mod p");
    // Fermat: a^(p-2).
    int r = 1;
    for (int i = 0; i < p_ - 2; ++i) r = mul(r, a);
    return r;
  }

  Coords digits(Index x) const {
    Coords d(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
      d[static_cast<std::size_t>(j)] = static_cast<int>(x % static_cast<Index>(p_));
      x /= static_cast<Index>(p_);
    }
    return d;
  }

  Index index(std::span<const int> coords) const {
    Index x = 0;
    for (int j = n_ - 1; j >= 0; --j) x = x * static_cast<Index>(p_) + static_cast<Index>(mod(coords[static_cast<std::size_t>(j)]));
    return x;
  }

  bool valid(Index x) const noexcept { return x < size_; }

  /// <x, y> = sum x_i y_i mod p.
  int inner_product(Index x, Index y) const noexcept {
    long long acc = 0;
    const auto q = static_cast<Index>(p_);
    for (int j = 0; j < n_; ++j) {
      acc += static_cast<long long>(x % q) * static_cast<long long>(y % q);
      x /= q;
      y /= q;
    }
    return mod(acc);
  }

  int inner_product(std::span<const int> x, std::span<const int> y) const noexcept {
    long long acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += static_cast<long long>(x[j]) * y[j];
    return mod(acc);
  }

  Index add_points(Index x, Index y) const noexcept { return combine(x, y, 1); }
  Index sub_points(Index x, Index y) const noexcept { return combine(x, y, -1); }
  Index neg_point(Index x) const noexcept { return combine(0, x, -1); }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  Params(int p, int n, Index size) : p_(p), n_(n), size_(size) {}

  Index combine(Index x, Index y, int sign) const noexcept {
    const auto q = static_cast<Index>(p_);
    Index out = 0;
    Index scale = 1;
    for (int j = 0; j < n_; ++j) {
      const long long a = static_cast<long long>(x % q);
      const long long b = static_cast<long long>(y % q);
      out += static_cast<Index>(mod(a + sign * b)) * scale;
      scale *= q;
      x /= q;
      y /= q;
    }
    return out;
  }

  int p_;
  int n_;
  Index size_;
};

/// Inner product on indices; free-function form.
inline int inner_product(Index x, Index y, const Params& params) { return params.inner_product(x, y); }

/// A coset offset + span(basis) in canonical form. Construct through canonicalize().
class AffineSubspace {
 public:
  const Params& params() const noexcept { return params_; }
  const std::vector<Coords>& basis() const noexcept { return basis_; }
  const Coords& offset() const noexcept { return offset_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  bool is_linear() const noexcept {
    return std::all_of(offset_.begin(), offset_.end(), [](int v) { return v == 0; });
  }
  Index cardinality() const { return checked_pow(static_cast<Index>(params_.p()), dim()); }

  std::vector<int> pivots() const {
    std::vector<int> piv;
    piv.reserve(basis_.size());
    for (const auto& row : basis_) {
      piv.push_back(static_cast<int>(std::find_if(row.begin(), row.end(), [](int v) { return v != 0; }) - row.begin()));
    }
    return piv;
  }

  /// offset + sum_i lambda_i basis_i.
  Coords point(std::span<const int> lambda) const {
    Coords x = offset_;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = params_.add(x[j], params_.mul(lambda[i], basis_[i][j]));
    }
    return x;
  }

  /// All points in the order of the coefficient tuple lambda read little-endian.
  std::vector<Index> points() const {
    const Index count = cardinality();
    std::vector<Index> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> lambda(basis_.size(), 0);
    for (Index t = 0; t < count; ++t) {
      out.push_back(params_.index(point(lambda)));
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (++lambda[i] < params_.p()) break;
        lambda[i] = 0;
      }
    }
    return out;
  }

  /// Canonical representative of the coset of x modulo the direction space.
  Coords reduce(Coords x) const {
    const auto piv = pivots();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const int c = x[static_cast<std::size_t>(piv[i])];
      if (c == 0) continue;
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = params_.sub(x[j], params_.mul(c, basis_[i][j]));
    }
    return x;
  }

  bool contains(const Coords& x) const { return reduce(x) == offset_; }
  bool contains(Index x) const { return contains(params_.digits(x)); }

  /// The direction space as a linear subspace.
  AffineSubspace linear_part() const { return AffineSubspace(params_, basis_, Coords(offset_.size(), 0)); }

  std::string to_string() const {
    auto vec = [](const Coords& v) {
      std::string s = "(";
      for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
      return s + ")";
    };
    std::string s = "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? "," : "") + vec(basis_[i]);
    return s + "}+" + vec(offset_);
  }

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.params_ == b.params_ && a.basis_ == b.basis_ && a.offset_ == b.offset_;
  }
  friend std::strong_ordering operator<=>(const AffineSubspace& a, const AffineSubspace& b) {
    if (auto c = a.params_.p() <=> b.params_.p(); c != 0) return c;
    if (auto c = a.params_.n() <=> b.params_.n(); c != 0) return c;
    if (auto c = a.basis_ <=> b.basis_; c != 0) return c;
    return a.offset_ <=> b.offset_;
  }

 private:
  AffineSubspace(Params params, std::vector<Coords> basis, Coords offset)
      : params_(params), basis_(std::move(basis)), offset_(std::move(offset)) {}

  friend AffineSubspace canonicalize(const Params&, std::span<const Coords>, Coords);

  Params params_;
  std::vector<Coords> basis_;
  Coords offset_;
};

/// Row-reduce the spanning vectors and reduce the offset. Dependent vectors drop out.
inline AffineSubspace canonicalize(const Params& params, std::span<const Coords> vectors, Coords offset) {
  const auto n = static_cast<std::size_t>(params.n());
  if (offset.size() != n) throw InvalidArgument("offset has wrong dimension");
  for (auto& v : offset) v = params.mod(v);
  std::vector<Coords> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != n) throw InvalidArgument("basis vector has wrong dimension");
    Coords r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = params.mod(v[j]);
    rows.push_back(std::move(r));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const int s = params.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = params.mul(v, s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int c = rows[r][col];
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = params.sub(rows[r][j], params.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);

  AffineSubspace out(params, std::move(rows), Coords(n, 0));
  out.offset_ = out.reduce(std::move(offset));
  return out;
}

inline AffineSubspace canonicalize(const Params& params, std::span<const Coords> vectors) {
  return canonicalize(params, vectors, Coords(static_cast<std::size_t>(params.n()), 0));
}

/// The single point {x} as a 0-dimensional coset.
inline AffineSubspace point_subspace(const Params& params, Index x) {
  return canonicalize(params, std::span<const Coords>{}, params.digits(x));
}

inline AffineSubspace whole_space(const Params& params) {
  std::vector<Coords> e;
  for (int j = 0; j < params.n(); ++j) {
    Coords v(static_cast<std::size_t>(params.n()), 0);
    v[static_cast<std::size_t>(j)] = 1;
    e.push_back(std::move(v));
  }
  return canonicalize(params, e);
}

/// Number of k-dimensional subspaces of Z_p^n.
inline Index gaussian_binomial(int n, int k, int p) {
  if (k < 0 || k > n) throw InvalidArgument("gaussian_binomial requires 0 <= k <= n");
  using u128 = unsigned __int128;
  u128 g = 1;
  // G(n, i+1) = G(n, i) * (p^(n-i) - 1) / (p^(i+1) - 1); every partial value is an integer.
  for (int i = 0; i < k; ++i) {
    const u128 num = static_cast<u128>(checked_pow(static_cast<Index>(p), n - i) - 1);
    const u128 den = static_cast<u128>(checked_pow(static_cast<Index>(p), i + 1) - 1);
    const u128 prod = g * num;
    if (num != 0 && prod / num != g) throw OverflowError("gaussian_binomial intermediate overflow");
    g = prod / den;
    if (g > static_cast<u128>(UINT64_MAX)) throw OverflowError("gaussian_binomial exceeds 64 bits");
  }
  return static_cast<Index>(g);
}

/**
 * Every k-dimensional linear subspace exactly once, ordered lexicographically
 * by the RREF matrix read row-major. Slicing the returned vector is the
 * supported way to partition the stream across workers.
 */
inline std::vector<AffineSubspace> enumerate_subspaces(const Params& params, int k, const Limits& limits = {}) {
  const int n = params.n();
  const int p = params.p();
  if (k < 0 || k > n) throw InvalidArgument("subspace dimension out of range");
  const Index total = gaussian_binomial(n, k, p);
  if (total > limits.max_subspaces) {
    throw CapExceeded("subspace count " + std::to_string(total) + " exceeds the cap " +
                      std::to_string(limits.max_subspaces));
  }

  std::vector<AffineSubspace> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> piv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;

  while (true) {
    // Free entries: row i, column c > piv[i], c not a pivot.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i) {
      for (int c = piv[static_cast<std::size_t>(i)] + 1; c < n; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
      }
    }
    std::vector<int> val(free.size(), 0);
    while (true) {
      std::vector<Coords> rows(static_cast<std::size_t>(k), Coords(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) {
        rows[static_cast<std::size_t>(free[f].first)][static_cast<std::size_t>(free[f].second)] = val[f];
      }
      out.push_back(canonicalize(params, rows));
      std::size_t f = 0;
      for (; f < val.size(); ++f) {
        if (++val[f] < p) break;
        val[f] = 0;
      }
      if (f == val.size()) break;
    }
    // Next pivot combination.
    int i = k - 1;
    while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++piv[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  if (out.size() != total) throw Error("internal: subspace enumeration count mismatch");
  return out;
}

/// The p^(n-k) cosets of a linear subspace, ordered by offset index.
inline std::vector<AffineSubspace> enumerate_cosets(const AffineSubspace& u) {
  if (!u.is_linear()) throw InvalidArgument("enumerate_cosets requires a linear subspace");
  const Params& params = u.params();
  const auto piv = u.pivots();
  std::vector<int> freecols;
  for (int c = 0; c < params.n(); ++c) {
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) freecols.push_back(c);
  }
  const Index count = checked_pow(static_cast<Index>(params.p()), static_cast<int>(freecols.size()));
  std::vector<AffineSubspace> out;
  out.reserve(static_cast<std::size_t>(count));
  Coords off(static_cast<std::size_t>(params.n()), 0);
  for (Index t = 0; t < count; ++t) {
    out.push_back(canonicalize(params, u.basis(), off));
    for (int c : freecols) {
      auto& v = off[static_cast<std::size_t>(c)];
      if (++v < params.p()) break;
      v = 0;
    }
  }
  std::sort(out.begin(), out.end(), [&](const AffineSubspace& a, const AffineSubspace& b) {
    return params.index(a.offset()) < params.index(b.offset());
  });
  return out;
}

/// {x : <x, y> = 0 for all y in U}.
inline AffineSubspace orthogonal_complement(const AffineSubspace& u) {
  if (!u.is_linear()) throw InvalidArgument("orthogonal_complement requires a linear subspace");
  const Params& params = u.params();
  const auto piv = u.pivots();
  std::vector<Coords> null;
  for (int f = 0; f < params.n(); ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    Coords v(static_cast<std::size_t>(params.n()), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) {
      v[static_cast<std::size_t>(piv[i])] = params.neg(u.basis()[i][static_cast<std::size_t>(f)]);
    }
    null.push_back(std::move(v));
  }
  return canonicalize(params, null);
}

/// The canonical coset equal to the given point set, if the set is one.
inline std::optional<AffineSubspace> recognize_affine(const Params& params, std::span<const Index> points) {
  if (points.empty()) throw InvalidArgument("recognize_affine requires a nonempty set");
  std::vector<Index> set(points.begin(), points.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  const Coords x0 = params.digits(set.front());
  std::vector<Coords> diffs;
  diffs.reserve(set.size() - 1);
  for (std::size_t i = 1; i < set.size(); ++i) diffs.push_back(params.digits(params.sub_points(set[i], set.front())));
  AffineSubspace candidate = canonicalize(params, diffs, x0);
  // The set lies inside x0 + span(diffs); it equals it iff the sizes agree.
  if (candidate.dim() > 63 || candidate.cardinality() != set.size()) return std::nullopt;
  return candidate;
}

}  // namespace pbent

#pragma once

/**
 * @file bent.hpp
 * @brief p-ary bent functions: predicates, duals, distances, censuses.
 *
 * t : Z_p^n -> Z_p is bent iff |S(y)|^2 = p^n for every y, where
 * S = dft(xi^t). This exact integer identity is meaningful for odd n as well;
 * duals are only extracted for even n, where S(y) = p^(n/2) * xi^(t'(y)).
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pbent/cyclotomic.hpp"
#include "pbent/spectral.hpp"
#include "pbent/zpspace.hpp"

namespace pbent {

/// A function Z_p^n -> Z_p as a dense table indexed by point index.
struct TruthTable {
  Params params;
  std::vector<std::uint8_t> values;

  TruthTable(Params prm, std::vector<std::uint8_t> vals) : params(prm), values(std::move(vals)) {
    if (values.size() != params.size()) throw InvalidArgument("truth table needs exactly p^n values");
    for (auto v : values) {
      if (v >= params.p()) throw InvalidArgument("truth table value out of range");
    }
  }

  static TruthTable zeros(const Params& prm) {
    return TruthTable(prm, std::vector<std::uint8_t>(static_cast<std::size_t>(prm.size()), 0));
  }

  template <class F>
  static TruthTable from_function(const Params& prm, F&& fn) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(prm.size()));
    for (Index x = 0; x < prm.size(); ++x) v[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(prm.mod(fn(x)));
    return TruthTable(prm, std::move(v));
  }

  int operator[](Index x) const { return values[static_cast<std::size_t>(x)]; }

  friend bool operator==(const TruthTable& a, const TruthTable& b) {
    return a.params == b.params && a.values == b.values;
  }
  /// Lexicographic on the value string (index 0 first).
  friend std::strong_ordering operator<=>(const TruthTable& a, const TruthTable& b) { return a.values <=> b.values; }
};

struct BentCertificate {
  TruthTable table;
  Spectrum spectrum;
  bool regular = false;
  std::optional<TruthTable> dual;
};

/// x -> xi^t(x).
inline Signal lift(const TruthTable& t) {
  auto f = Signal::zeros(t.params);
  for (Index x = 0; x < t.params.size(); ++x) f[x] = CycInt::from_power(t[x], t.params.p());
  return f;
}

/// S(y) = sum_x xi^(t(x) - <x,y>), accumulated as an exponent histogram.
inline CycInt walsh_value(const TruthTable& t, Index y) {
  const Params& params = t.params;
  std::array<std::int64_t, kMaxPrime> counts{};
  for (Index x = 0; x < params.size(); ++x) ++counts[static_cast<std::size_t>(params.sub(t[x], params.inner_product(x, y)))];
  return CycInt::from_exponent_counts(params.p(), std::span<const std::int64_t>(counts.data(), static_cast<std::size_t>(params.p())));
}

inline Spectrum walsh_spectrum(const TruthTable& t) { return dft_fast(lift(t)); }

/// a + c*b pointwise mod p.
inline TruthTable combine(const TruthTable& a, const TruthTable& b, int c) {
  if (!(a.params == b.params)) throw InvalidArgument("truth tables over different groups");
  return TruthTable::from_function(a.params, [&](Index x) { return a[x] + c * b[x]; });
}

/// x -> t(-x).
inline TruthTable negated_argument(const TruthTable& t) {
  return TruthTable::from_function(t.params, [&](Index x) { return t[t.params.neg_point(x)]; });
}

inline bool spectrum_is_flat(const Spectrum& s) {
  const auto target = static_cast<std::int64_t>(s.params.size());
  return std::all_of(s.values.begin(), s.values.end(), [&](const CycInt& v) { return v.norm_sq().equals_int(target); });
}

/// p^(n/2) for even n.
inline std::int64_t half_power(const Params& params) {
  if (params.n() % 2 != 0) throw InvalidArgument("n must be even");
  return static_cast<std::int64_t>(checked_pow(static_cast<Index>(params.p()), params.n() / 2));
}

/// The table t' with S(y) = p^(n/2) * xi^t'(y), if every value decomposes.
inline std::optional<TruthTable> dual_from_spectrum(const Spectrum& s) {
  const std::int64_t scale = half_power(s.params);
  std::vector<std::uint8_t> d(static_cast<std::size_t>(s.params.size()));
  for (Index y = 0; y < s.params.size(); ++y) {
    const auto root = s[y].as_scaled_root();
    if (!root || root->first != scale) return std::nullopt;
    d[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(root->second);
  }
  return TruthTable(s.params, std::move(d));
}

/// Certificate if t is bent; regularity and the dual are filled in for even n.
inline std::optional<BentCertificate> bent_certificate(const TruthTable& t) {
  auto s = walsh_spectrum(t);
  if (!spectrum_is_flat(s)) return std::nullopt;
  BentCertificate cert{t, s, false, std::nullopt};
  if (t.params.n() % 2 == 0) {
    cert.dual = dual_from_spectrum(s);
    cert.regular = cert.dual.has_value();
  }
  return cert;
}

inline bool is_bent(const TruthTable& t) { return spectrum_is_flat(walsh_spectrum(t)); }

/// is_bent with the naive transform; an independent route for censuses.
inline bool is_bent_naive(const TruthTable& t) { return spectrum_is_flat(dft(lift(t))); }

/// xi^t * reversed_conj(xi^t) = p^n * chi_0.
inline bool autocorrelation_check(const TruthTable& t) {
  const auto f = lift(t);
  const auto ac = convolve(f, reversed_conj(f));
  const auto expect = point_indicator(t.params, 0);
  for (Index x = 0; x < t.params.size(); ++x) {
    if (!(ac[x] == expect[x].scaled(static_cast<std::int64_t>(t.params.size())))) return false;
  }
  return true;
}

/**
 * B = (xi^t(z+y))_{z,y} satisfies B B^* = p^n I.
 *
 * Entry (z,w) of B B^* is sum_y xi^(t(z+y) - t(w+y)), built as an exponent histogram.
 */
inline bool hadamard_check(const TruthTable& t, const Limits& limits = {}) {
  const Params& params = t.params;
  if (params.size() > limits.max_hadamard_points) {
    throw CapExceeded("hadamard_check: p^n = " + std::to_string(params.size()) + " exceeds the matrix cap " +
                      std::to_string(limits.max_hadamard_points));
  }
  const auto N = params.size();
  std::vector<std::uint8_t> b(static_cast<std::size_t>(N * N));
  for (Index z = 0; z < N; ++z) {
    for (Index y = 0; y < N; ++y) b[static_cast<std::size_t>(z * N + y)] = static_cast<std::uint8_t>(t[params.add_points(z, y)]);
  }
  const auto scale = static_cast<std::int64_t>(N);
  for (Index z = 0; z < N; ++z) {
    for (Index w = 0; w < N; ++w) {
      std::array<std::int64_t, kMaxPrime> counts{};
      for (Index y = 0; y < N; ++y) {
        ++counts[static_cast<std::size_t>(params.sub(b[static_cast<std::size_t>(z * N + y)], b[static_cast<std::size_t>(w * N + y)]))];
      }
      const auto e = CycInt::from_exponent_counts(params.p(), std::span<const std::int64_t>(counts.data(), static_cast<std::size_t>(params.p())));
      if (!e.equals_int(z == w ? scale : 0)) return false;
    }
  }
  return true;
}

/// The dual of a bent function with n even. The dual is re-verified bent.
inline std::optional<TruthTable> dual(const TruthTable& t) {
  if (t.params.n() % 2 != 0) throw InvalidArgument("dual requires even n");
  const auto s = walsh_spectrum(t);
  if (!spectrum_is_flat(s)) throw InvalidArgument("dual requires a bent function");
  auto d = dual_from_spectrum(s);
  if (d && !is_bent(*d)) throw TheoremViolation("dual of a bent function is not bent");
  return d;
}

inline Index distance(const TruthTable& a, const TruthTable& b) {
  if (!(a.params == b.params)) throw InvalidArgument("distance: truth tables over different groups");
  Index d = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) d += a.values[i] != b.values[i] ? 1 : 0;
  return d;
}

/// (|supp(xi^b1 - xi^b2)|, |supp(S1 - S2)|).
inline std::pair<Index, Index> support_symmetry_check(const TruthTable& b1, const TruthTable& b2) {
  if (!(b1.params == b2.params)) throw InvalidArgument("truth tables over different groups");
  const auto s1 = walsh_spectrum(b1);
  const auto s2 = walsh_spectrum(b2);
  if (!spectrum_is_flat(s1) || !spectrum_is_flat(s2)) throw InvalidArgument("support_symmetry_check requires bent inputs");
  Index ds = 0;
  for (Index y = 0; y < b1.params.size(); ++y) ds += s1[y] == s2[y] ? 0 : 1;
  return {distance(b1, b2), ds};
}

/// t restricted to Gamma equals an affine function of the coset coordinates.
inline bool is_affine_on(const TruthTable& t, const AffineSubspace& gamma) {
  const Params& params = t.params;
  if (!(gamma.params() == params)) throw InvalidArgument("subspace over a different group");
  const Coords& x0 = gamma.offset();
  const int a0 = t[params.index(x0)];
  std::vector<int> slope(static_cast<std::size_t>(gamma.dim()));
  for (int i = 0; i < gamma.dim(); ++i) {
    Coords xi = x0;
    for (std::size_t j = 0; j < xi.size(); ++j) xi[j] = params.add(xi[j], gamma.basis()[static_cast<std::size_t>(i)][j]);
    slope[static_cast<std::size_t>(i)] = params.sub(t[params.index(xi)], a0);
  }
  std::vector<int> lambda(slope.size(), 0);
  const Index count = gamma.cardinality();
  for (Index k = 0; k < count; ++k) {
    long long expect = a0;
    for (std::size_t i = 0; i < slope.size(); ++i) expect += static_cast<long long>(lambda[i]) * slope[i];
    if (t[params.index(gamma.point(lambda))] != params.mod(expect)) return false;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (++lambda[i] < params.p()) break;
      lambda[i] = 0;
    }
  }
  return true;
}

/// Largest k with t affine on some k-dimensional coset; exhaustive, descending in k.
inline int max_affine_dimension(const TruthTable& t, const Limits& limits = {}) {
  const Params& params = t.params;
  if (params.size() > limits.max_exhaustive_points) {
    throw CapExceeded("max_affine_dimension: p^n exceeds the exhaustive cap");
  }
  for (int k = params.n(); k > 0; --k) {
    for (const auto& u : enumerate_subspaces(params, k, limits)) {
      for (const auto& coset : enumerate_cosets(u)) {
        if (is_affine_on(t, coset)) return k;
      }
    }
  }
  return 0;
}

/// b2 - b1 = c * chi^Gamma.
struct MinDistancePair {
  int c;
  AffineSubspace gamma;
};

/**
 * Structure of a pair of bent functions at distance p^(n/2).
 *
 * A difference that is not a constant multiple of the indicator of an
 * (n/2)-dimensional coset contradicts the minimal-distance theorem; that is
 * reported as TheoremViolation, never as a soft result.
 */
inline MinDistancePair classify_min_distance_pair(const TruthTable& b1, const TruthTable& b2) {
  const Params& params = b1.params;
  if (params.n() % 2 != 0) throw InvalidArgument("classify_min_distance_pair requires even n");
  const auto dmin = static_cast<Index>(half_power(params));
  const Index d = distance(b1, b2);
  if (d != dmin) {
    throw InvalidArgument("distance mismatch: pair at distance " + std::to_string(d) + ", expected " + std::to_string(dmin));
  }
  if (!is_bent(b1) || !is_bent(b2)) throw InvalidArgument("classify_min_distance_pair requires bent inputs");
  std::vector<Index> supp;
  int c = -1;
  for (Index x = 0; x < params.size(); ++x) {
    if (b1[x] == b2[x]) continue;
    supp.push_back(x);
    const int diff = params.sub(b2[x], b1[x]);
    if (c < 0) c = diff;
    if (diff != c) throw TheoremViolation("minimal-distance pair: difference is not constant on its support");
  }
  auto gamma = recognize_affine(params, supp);
  if (!gamma || gamma->dim() != params.n() / 2) {
    throw TheoremViolation("minimal-distance pair: support of the difference is not an n/2-dimensional coset");
  }
  return MinDistancePair{c, std::move(*gamma)};
}

/// Number of tables p^(p^n), checked against the table cap.
inline Index table_count(const Params& params, const Limits& limits = {}) {
  Index total = 1;
  for (Index i = 0; i < params.size(); ++i) {
    if (__builtin_mul_overflow(total, static_cast<Index>(params.p()), &total) || total > limits.max_tables) {
      throw CapExceeded("p^(p^n) tables for p=" + std::to_string(params.p()) + ", n=" + std::to_string(params.n()) +
                        " exceeds the table cap " + std::to_string(limits.max_tables));
    }
  }
  return total;
}

/// Table number r in lexicographic order: index 0 is the most significant digit.
inline TruthTable table_at(const Params& params, Index rank) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(params.size()));
  for (Index i = params.size(); i-- > 0;) {
    v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rank % static_cast<Index>(params.p()));
    rank /= static_cast<Index>(params.p());
  }
  return TruthTable(params, std::move(v));
}

/// Half-open window [begin, end) of lexicographic table ranks.
struct RankRange {
  Index begin;
  Index end;
};

/**
 * Every bent table with rank in the window, in lexicographic order.
 *
 * Each candidate is rejected at the first spectral value whose squared
 * modulus differs from p^n, so most tables cost one or two Walsh values.
 */
inline std::vector<TruthTable> enumerate_bent(const Params& params, std::optional<RankRange> range = std::nullopt,
                                              const Limits& limits = {}) {
  const Index total = table_count(params, limits);
  const RankRange r = range.value_or(RankRange{0, total});
  if (r.begin > r.end || r.end > total) throw InvalidArgument("enumeration range out of bounds");
  const auto target = static_cast<std::int64_t>(params.size());
  std::vector<TruthTable> out;
  if (r.begin == r.end) return out;
  TruthTable t = table_at(params, r.begin);
  for (Index rank = r.begin; rank < r.end; ++rank) {
    bool flat = true;
    for (Index y = 0; y < params.size() && flat; ++y) flat = walsh_value(t, y).norm_sq().equals_int(target);
    if (flat) out.push_back(t);
    // Odometer increment, least significant digit at the last index.
    for (Index i = params.size(); i-- > 0;) {
      auto& v = t.values[static_cast<std::size_t>(i)];
      if (++v < params.p()) break;
      v = 0;
    }
  }
  return out;
}

struct MinDistance {
  Index dmin;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Exact minimum pairwise distance with every achieving pair (i < j).
inline MinDistance min_pairwise_distance(std::span<const TruthTable> census) {
  if (census.empty()) throw InvalidArgument("min_pairwise_distance requires a nonempty census");
  MinDistance best{census.front().params.size() + 1, {}};
  for (std::size_t i = 0; i < census.size(); ++i) {
    for (std::size_t j = i + 1; j < census.size(); ++j) {
      const Index d = distance(census[i], census[j]);
      if (d < best.dmin) {
        best.dmin = d;
        best.pairs.clear();
      }
      if (d == best.dmin) best.pairs.emplace_back(i, j);
    }
  }
  if (census.size() == 1) best.dmin = 0;
  return best;
}

}  // namespace pbent

#pragma once

/**
 * @file spectral.hpp
 * @brief Fourier transform on Z_p^n over cyclotomic integers.
 *
 * Spectra are stored unnormalized:
 *
 *     S(z) = sum_x f(x) * xi^(-<x,z>) = p^(n/2) * fhat(z),
 *
 * where fhat(z) = (f, phi_z) / |G|^(1/2) and phi_z(x) = xi^<x,z>. Keeping the
 * factor p^(n/2) out makes every identity an exact statement in Z[xi]:
 *
 *  - Parseval:        p^n * sum |f|^2 = sum |S|^2
 *  - double transform: dft(dft(f))(x) = p^n * f(-x)
 *  - convolution:     dft(f * g) = dft(f) . dft(g)
 *  - subspace sums:   sum_{y in U} S(y) = p^dim(U) * sum_{x in U^perp} f(x)
 *
 * The bent literature also uses the opposite sign; this one matches
 * fhat(z) = (f, phi_z).
 */

#include <optional>
#include <utility>
#include <vector>

#include "pbent/cyclotomic.hpp"
#include "pbent/zpspace.hpp"

namespace pbent {

/// A CycInt-valued function on Z_p^n, indexed by point index.
template <class Tag>
struct CycField {
  Params params;
  std::vector<CycInt> values;

  CycField(Params prm, std::vector<CycInt> vals) : params(prm), values(std::move(vals)) {
    if (values.size() != params.size()) throw InvalidArgument("field needs exactly p^n values");
    for (const auto& v : values) {
      if (v.p() != params.p()) throw InvalidArgument("field value from a different cyclotomic ring");
    }
  }

  static CycField zeros(const Params& prm) {
    return CycField(prm, std::vector<CycInt>(static_cast<std::size_t>(prm.size()), CycInt(prm.p())));
  }

  const CycInt& operator[](Index x) const { return values[static_cast<std::size_t>(x)]; }
  CycInt& operator[](Index x) { return values[static_cast<std::size_t>(x)]; }

  friend bool operator==(const CycField&, const CycField&) = default;
};

struct SignalTag;
struct SpectrumTag;
using Signal = CycField<SignalTag>;
using Spectrum = CycField<SpectrumTag>;

// ---------------------------------------------------------------- builders

/// phi_z(x) = xi^<x,z>.
inline Signal character(const Params& params, Index z) {
  auto f = Signal::zeros(params);
  for (Index x = 0; x < params.size(); ++x) f[x] = CycInt::from_power(params.inner_product(x, z), params.p());
  return f;
}

/// Indicator of a single point.
inline Signal point_indicator(const Params& params, Index a) {
  auto f = Signal::zeros(params);
  f[a] = CycInt(params.p(), 1);
  return f;
}

/// Indicator chi^Gamma of a coset.
inline Signal indicator(const AffineSubspace& gamma) {
  auto f = Signal::zeros(gamma.params());
  for (Index x : gamma.points()) f[x] = CycInt(gamma.params().p(), 1);
  return f;
}

inline Signal pointwise(const Signal& a, const Signal& b) {
  if (!(a.params == b.params)) throw InvalidArgument("signals over different groups");
  auto out = Signal::zeros(a.params);
  for (Index x = 0; x < a.params.size(); ++x) out[x] = a[x] * b[x];
  return out;
}

/// x -> conj(f(-x)); convolving with it gives the autocorrelation.
inline Signal reversed_conj(const Signal& f) {
  auto out = Signal::zeros(f.params);
  for (Index x = 0; x < f.params.size(); ++x) out[x] = f[f.params.neg_point(x)].conj();
  return out;
}

template <class Tag>
Index support_size(const CycField<Tag>& f) {
  Index s = 0;
  for (const auto& v : f.values) s += v.is_zero() ? 0 : 1;
  return s;
}

// -------------------------------------------------------------- transforms

/// Direct O(p^2n) evaluation. Kept as the reference for dft_fast.
inline Spectrum dft(const Signal& f) {
  const Params& params = f.params;
  auto out = Spectrum::zeros(params);
  for (Index z = 0; z < params.size(); ++z) {
    CycInt acc(params.p());
    for (Index x = 0; x < params.size(); ++x) {
      if (f[x].is_zero()) continue;
      acc += f[x].mul_by_power(-params.inner_product(x, z));
    }
    out[z] = acc;
  }
  return out;
}

namespace detail {

/// n passes of p-point transforms with kernel xi^(sign*a*b), in place.
inline void radix_transform(const Params& params, std::vector<CycInt>& v, int sign) {
  const int p = params.p();
  const auto q = static_cast<Index>(p);
  std::vector<CycInt> buf(static_cast<std::size_t>(p), CycInt(p));
  Index stride = 1;
  for (int j = 0; j < params.n(); ++j, stride *= q) {
    for (Index base = 0; base < params.size(); ++base) {
      if ((base / stride) % q != 0) continue;
      for (int b = 0; b < p; ++b) {
        CycInt acc(p);
        for (int a = 0; a < p; ++a) {
          const auto& va = v[static_cast<std::size_t>(base + static_cast<Index>(a) * stride)];
          if (!va.is_zero()) acc += va.mul_by_power(static_cast<long long>(sign) * a * b);
        }
        buf[static_cast<std::size_t>(b)] = acc;
      }
      for (int b = 0; b < p; ++b) v[static_cast<std::size_t>(base + static_cast<Index>(b) * stride)] = buf[static_cast<std::size_t>(b)];
    }
  }
}

}  // namespace detail

/// Same output as dft() via radix-p decimation along coordinates.
inline Spectrum dft_fast(const Signal& f) {
  std::vector<CycInt> v = f.values;
  detail::radix_transform(f.params, v, -1);
  return Spectrum(f.params, std::move(v));
}

/// Recovers f from S = dft(f). Throws NotDivisible if S is not a spectrum of a Z[xi] signal.
inline Signal inverse_dft(const Spectrum& s) {
  std::vector<CycInt> v = s.values;
  detail::radix_transform(s.params, v, +1);
  const auto scale = static_cast<std::int64_t>(s.params.size());
  for (auto& c : v) c = c.exact_div(scale);
  return Signal(s.params, std::move(v));
}

/// (f * g)(z) = sum_x f(x) g(z - x).
inline Signal convolve(const Signal& f, const Signal& g) {
  if (!(f.params == g.params)) throw InvalidArgument("signals over different groups");
  const Params& params = f.params;
  auto out = Signal::zeros(params);
  for (Index x = 0; x < params.size(); ++x) {
    if (f[x].is_zero()) continue;
    for (Index z = 0; z < params.size(); ++z) {
      const auto& gv = g[params.sub_points(z, x)];
      if (!gv.is_zero()) out[z] += f[x] * gv;
    }
  }
  return out;
}

// ----------------------------------------------------------- identities

/// (p^n * sum_x |f(x)|^2, sum_y |S(y)|^2); equal for every f.
inline std::pair<CycInt, CycInt> parseval_check(const Signal& f) {
  const auto s = dft_fast(f);
  CycInt lhs(f.params.p());
  CycInt rhs(f.params.p());
  for (Index x = 0; x < f.params.size(); ++x) {
    lhs += f[x].norm_sq();
    rhs += s[x].norm_sq();
  }
  return {lhs.scaled(static_cast<std::int64_t>(f.params.size())), rhs};
}

/// (sum_{y in U} S(y), p^dim(U) * sum_{x in U^perp} f(x)) for a linear U, with s = dft(f).
inline std::pair<CycInt, CycInt> subspace_sum_check(const Signal& f, const Spectrum& s, const AffineSubspace& gamma) {
  if (!gamma.is_linear()) throw InvalidArgument("subspace_sum_check requires a linear subspace");
  CycInt lhs(f.params.p());
  for (Index y : gamma.points()) lhs += s[y];
  CycInt rhs(f.params.p());
  for (Index x : orthogonal_complement(gamma).points()) rhs += f[x];
  return {lhs, rhs.scaled(static_cast<std::int64_t>(gamma.cardinality()))};
}

inline std::pair<CycInt, CycInt> subspace_sum_check(const Signal& f, const AffineSubspace& gamma) {
  return subspace_sum_check(f, dft_fast(f), gamma);
}

/// (|supp f|, |supp S|). The product is at least p^n.
inline std::pair<Index, Index> uncertainty_check(const Signal& f) {
  const Index sf = support_size(f);
  if (sf == 0) throw InvalidArgument("uncertainty_check requires a nonzero signal");
  return {sf, support_size(dft_fast(f))};
}

/// f = c * phi_z * chi^Gamma.
struct EqualityCase {
  CycInt c;
  Index z;
  AffineSubspace support;
};

/// Evaluate c * phi_z * chi^Gamma.
inline Signal modulated_indicator(const CycInt& c, Index z, const AffineSubspace& gamma) {
  const Params& params = gamma.params();
  auto f = Signal::zeros(params);
  for (Index x : gamma.points()) f[x] = c.mul_by_power(params.inner_product(x, z));
  return f;
}

/**
 * Decompose a sharp case |supp f| * |supp S| = p^n as c * phi_z * chi^Gamma.
 *
 * supp f must be a coset Gamma = x0 + U. With c0 = f(x0) every value on Gamma
 * must be c0 * xi^k(x) with k affine; z is read off the pivot coordinates of
 * U's basis and c absorbs xi^(-<x0,z>). z is determined only modulo U^perp.
 */
inline std::optional<EqualityCase> classify_equality_case(const Signal& f) {
  const Params& params = f.params;
  const auto [sf, ss] = uncertainty_check(f);
  if (sf * ss != params.size()) {
    throw InvalidArgument("classify_equality_case requires |supp f| * |supp S| = p^n");
  }
  std::vector<Index> supp;
  for (Index x = 0; x < params.size(); ++x) {
    if (!f[x].is_zero()) supp.push_back(x);
  }
  const auto gamma = recognize_affine(params, supp);
  if (!gamma) return std::nullopt;

  const Index x0 = params.index(gamma->offset());
  const CycInt& c0 = f[x0];
  auto exponent_of = [&](Index x) -> std::optional<int> {
    for (int k = 0; k < params.p(); ++k) {
      if (c0.mul_by_power(k) == f[x]) return k;
    }
    return std::nullopt;
  };

  const auto piv = gamma->pivots();
  Coords zc(static_cast<std::size_t>(params.n()), 0);
  const Coords origin = gamma->offset();
  for (std::size_t i = 0; i < piv.size(); ++i) {
    Coords xi = origin;
    for (std::size_t j = 0; j < xi.size(); ++j) xi[j] = params.add(xi[j], gamma->basis()[i][j]);
    const auto k = exponent_of(params.index(xi));
    if (!k) return std::nullopt;
    zc[static_cast<std::size_t>(piv[i])] = *k;
  }
  const Index z = params.index(zc);
  const CycInt c = c0.mul_by_power(-params.inner_product(x0, z));
  if (!(modulated_indicator(c, z, *gamma) == f)) return std::nullopt;
  return EqualityCase{c, z, *gamma};
}

}  // namespace pbent

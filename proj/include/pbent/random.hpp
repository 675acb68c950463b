#pragma once

// Seeded generators for property checks. std::mt19937_64 output is fixed by
// the standard, but the distributions are not, so values are drawn by hand.

#include <cstdint>
#include <random>
#include <vector>

#include "pbent/bent.hpp"
#include "pbent/cyclotomic.hpp"
#include "pbent/spectral.hpp"
#include "pbent/zpspace.hpp"

namespace pbent {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// Coefficients uniform in [-bound, bound].
inline CycInt random_cycint(Rng& rng, int p, std::int64_t bound = 3) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(p - 1));
  for (auto& v : c) v = uniform_int(rng, -bound, bound);
  return CycInt::from_coeffs(p, c);
}

/// Each entry is nonzero with probability density_percent / 100.
inline Signal random_signal(Rng& rng, const Params& params, int density_percent = 100, std::int64_t bound = 3) {
  auto f = Signal::zeros(params);
  for (Index x = 0; x < params.size(); ++x) {
    if (uniform_int(rng, 1, 100) <= density_percent) f[x] = random_cycint(rng, params.p(), bound);
  }
  return f;
}

inline TruthTable random_table(Rng& rng, const Params& params) {
  return TruthTable::from_function(params, [&](Index) { return static_cast<int>(uniform_int(rng, 0, params.p() - 1)); });
}

inline Coords random_coords(Rng& rng, const Params& params) {
  Coords v(static_cast<std::size_t>(params.n()));
  for (auto& c : v) c = static_cast<int>(uniform_int(rng, 0, params.p() - 1));
  return v;
}

/// A coset spanned by k random vectors (its dimension may come out below k).
inline AffineSubspace random_coset(Rng& rng, const Params& params, int k) {
  std::vector<Coords> basis;
  for (int i = 0; i < k; ++i) basis.push_back(random_coords(rng, params));
  return canonicalize(params, basis, random_coords(rng, params));
}

/**
 * A mixed corpus: dense and sparse random signals interleaved with
 * constants, point masses, characters and modulated coset indicators.
 */
inline std::vector<Signal> signal_corpus(Rng& rng, const Params& params, std::size_t count) {
  std::vector<Signal> out;
  out.reserve(count);
  for (std::size_t i = 0; out.size() < count; ++i) {
    switch (i % 8) {
      case 0:
      case 1:
      case 2: out.push_back(random_signal(rng, params)); break;
      case 3: out.push_back(random_signal(rng, params, 10)); break;
      case 4: out.push_back(character(params, static_cast<Index>(uniform_int(rng, 0, static_cast<std::int64_t>(params.size()) - 1)))); break;
      case 5: out.push_back(point_indicator(params, static_cast<Index>(uniform_int(rng, 0, static_cast<std::int64_t>(params.size()) - 1)))); break;
      default: {
        auto c = random_cycint(rng, params.p());
        if (c.is_zero()) c = CycInt(params.p(), 1);
        const auto gamma = random_coset(rng, params, static_cast<int>(uniform_int(rng, 0, params.n())));
        const auto z = static_cast<Index>(uniform_int(rng, 0, static_cast<std::int64_t>(params.size()) - 1));
        out.push_back(modulated_indicator(c, z, gamma));
      }
    }
  }
  return out;
}

}  // namespace pbent

#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "pbent/random.hpp"
#include "pbent/spectral.hpp"

using namespace pbent;

namespace {

// Floating-point reference transform, independent of the Z[xi] arithmetic.
std::vector<std::complex<double>> float_dft(const Signal& f) {
  const auto& prm = f.params;
  std::vector<std::complex<double>> out(prm.size());
  for (Index z = 0; z < prm.size(); ++z) {
    for (Index x = 0; x < prm.size(); ++x) {
      const double ang = -2.0 * std::numbers::pi * prm.inner_product(x, z) / prm.p();
      out[z] += f[x].to_complex() * std::polar(1.0, ang);
    }
  }
  return out;
}

}  // namespace

TEST(Dft, ConstantSignal) {
  const auto prm = Params::make(3, 2);
  const auto s = dft(character(prm, 0));
  EXPECT_TRUE(s[0].equals_int(9));
  for (Index z = 1; z < prm.size(); ++z) EXPECT_TRUE(s[z].is_zero());
}

TEST(Dft, CharacterIsPointMass) {
  const auto prm = Params::make(5, 2);
  for (Index z = 0; z < prm.size(); ++z) {
    const auto s = dft_fast(character(prm, z));
    for (Index y = 0; y < prm.size(); ++y) EXPECT_TRUE(s[y].equals_int(y == z ? 25 : 0));
  }
}

TEST(Dft, PointIndicatorIsConjugateCharacter) {
  const auto prm = Params::make(3, 2);
  const auto s = dft(point_indicator(prm, 5));
  for (Index z = 0; z < prm.size(); ++z) {
    EXPECT_EQ(s[z], CycInt::from_power(-prm.inner_product(5, z), 3));
  }
}

TEST(Dft, MatchesFloatReference) {
  Rng rng(21);
  for (int p : {2, 3, 5}) {
    const auto prm = Params::make(p, 2);
    for (const auto& f : signal_corpus(rng, prm, 16)) {
      const auto s = dft(f);
      const auto ref = float_dft(f);
      for (Index z = 0; z < prm.size(); ++z) EXPECT_LT(std::abs(s[z].to_complex() - ref[z]), 1e-6);
    }
  }
}

TEST(Dft, FastEqualsNaive) {
  Rng rng(22);
  for (int p : {2, 3, 5, 7}) {
    for (int n = 1; n <= 3; ++n) {
      const auto prm = Params::make(p, n);
      for (const auto& f : signal_corpus(rng, prm, 8)) EXPECT_EQ(dft_fast(f), dft(f));
    }
  }
}

TEST(Dft, DoubleTransformReflects) {
  Rng rng(23);
  const auto prm = Params::make(3, 3);
  const auto f = random_signal(rng, prm);
  const auto ss = dft_fast(Signal(prm, dft_fast(f).values));
  for (Index x = 0; x < prm.size(); ++x) EXPECT_EQ(ss[x], f[prm.neg_point(x)].scaled(27));
}

TEST(InverseDft, RoundTrip) {
  Rng rng(24);
  for (int p : {2, 3, 5}) {
    const auto prm = Params::make(p, 2);
    for (const auto& f : signal_corpus(rng, prm, 16)) EXPECT_EQ(inverse_dft(dft_fast(f)), f);
  }
}

TEST(InverseDft, RejectsNonSpectrum) {
  const auto prm = Params::make(3, 2);
  auto s = Spectrum::zeros(prm);
  s[0] = CycInt(3, 1);
  EXPECT_THROW(inverse_dft(s), NotDivisible);
}

TEST(Convolution, TransformIsProduct) {
  Rng rng(25);
  for (int p : {2, 3, 5}) {
    const auto prm = Params::make(p, 2);
    for (int i = 0; i < 10; ++i) {
      const auto f = random_signal(rng, prm);
      const auto g = random_signal(rng, prm, 40);
      const auto lhs = dft_fast(convolve(f, g));
      const auto sf = dft_fast(f);
      const auto sg = dft_fast(g);
      for (Index z = 0; z < prm.size(); ++z) EXPECT_EQ(lhs[z], sf[z] * sg[z]);
    }
  }
}

TEST(Parseval, Exact) {
  Rng rng(26);
  for (int p : {2, 3, 5}) {
    const auto prm = Params::make(p, 3);
    for (const auto& f : signal_corpus(rng, prm, 16)) {
      const auto [a, b] = parseval_check(f);
      EXPECT_EQ(a, b);
    }
  }
}

TEST(SubspaceSum, EverySubspace) {
  Rng rng(27);
  const auto prm = Params::make(3, 2);
  const auto f = random_signal(rng, prm);
  for (int k = 0; k <= 2; ++k) {
    for (const auto& u : enumerate_subspaces(prm, k)) {
      const auto [a, b] = subspace_sum_check(f, u);
      EXPECT_EQ(a, b) << u.to_string();
    }
  }
  const auto coset = canonicalize(prm, std::vector<Coords>{{1, 0}}, Coords{0, 1});
  EXPECT_THROW(subspace_sum_check(f, coset), InvalidArgument);
}

TEST(Uncertainty, BoundAndSharpCases) {
  Rng rng(28);
  for (int p : {2, 3, 5}) {
    const auto prm = Params::make(p, 2);
    for (const auto& f : signal_corpus(rng, prm, 40)) {
      if (support_size(f) == 0) continue;
      const auto [a, b] = uncertainty_check(f);
      EXPECT_GE(a * b, prm.size());
    }
  }
  EXPECT_THROW(uncertainty_check(Signal::zeros(Params::make(3, 1))), InvalidArgument);
}

TEST(EqualityCase, PointMass) {
  const auto prm = Params::make(3, 2);
  const auto e = classify_equality_case(point_indicator(prm, 0));
  ASSERT_TRUE(e);
  EXPECT_TRUE(e->c.equals_int(1));
  EXPECT_EQ(e->z, 0u);
  EXPECT_EQ(e->support, point_subspace(prm, 0));
}

TEST(EqualityCase, Character) {
  const auto prm = Params::make(5, 2);
  const auto e = classify_equality_case(character(prm, 7));
  ASSERT_TRUE(e);
  EXPECT_TRUE(e->c.equals_int(1));
  EXPECT_EQ(e->z, 7u);
  EXPECT_EQ(e->support, whole_space(prm));
}

TEST(EqualityCase, ModulatedCosetRoundTrip) {
  Rng rng(29);
  for (int p : {2, 3, 5}) {
    const auto prm = Params::make(p, 3);
    for (int i = 0; i < 20; ++i) {
      const auto gamma = random_coset(rng, prm, static_cast<int>(uniform_int(rng, 0, 3)));
      const Index z = prm.index(random_coords(rng, prm));
      const auto c = CycInt(p, 2);
      const auto f = modulated_indicator(c, z, gamma);
      const auto e = classify_equality_case(f);
      ASSERT_TRUE(e);
      EXPECT_EQ(e->support, gamma);
      EXPECT_EQ(modulated_indicator(e->c, e->z, e->support), f);
      // z is only determined modulo the annihilator of the direction space.
      for (const auto& b : gamma.basis()) EXPECT_EQ(prm.inner_product(b, prm.digits(e->z)), prm.inner_product(b, prm.digits(z)));
    }
  }
}

TEST(EqualityCase, RejectsNonSharp) {
  const auto prm = Params::make(3, 1);
  auto f = Signal::zeros(prm);
  f[0] = CycInt(3, 1);
  f[1] = CycInt(3, 2);
  EXPECT_THROW(classify_equality_case(f), InvalidArgument);
}

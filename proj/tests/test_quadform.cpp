#include <gtest/gtest.h>

#include "pbent/io.hpp"
#include "pbent/quadform.hpp"
#include "pbent/random.hpp"

using namespace pbent;

TEST(QuadraticForm, Q0Table) {
  const auto q = q0(Params::make(3, 2));
  EXPECT_EQ(tt_digits(materialize(q)), "000012021");
  EXPECT_THROW(q0(Params::make(3, 3)), InvalidArgument);
}

TEST(QuadraticForm, Evaluation) {
  const auto prm = Params::make(3, 2);
  QuadraticForm q(prm);
  EXPECT_EQ(materialize(q), TruthTable::zeros(prm));
  q.set_coeff(0, 0, 1);
  EXPECT_EQ(tt_digits(materialize(q)), "011011011");
  q.set_coeff(1, 0, 4);  // lower-triangle index folds onto (0,1)
  EXPECT_EQ(q.coeff(0, 1), 1);
  EXPECT_EQ(q(Coords{1, 1}), 2);
}

TEST(QuadraticForm, PolarFormIsBilinear) {
  Rng rng(41);
  const auto prm = Params::make(5, 3);
  QuadraticForm q(prm);
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) q.set_coeff(i, j, static_cast<int>(uniform_int(rng, 0, 4)));
  }
  auto polar = [&](Index x, Index y) { return prm.sub(prm.sub(q(prm.add_points(x, y)), q(x)), q(y)); };
  for (int i = 0; i < 100; ++i) {
    const Index x = prm.index(random_coords(rng, prm));
    const Index y = prm.index(random_coords(rng, prm));
    const Index z = prm.index(random_coords(rng, prm));
    EXPECT_EQ(polar(prm.add_points(x, z), y), prm.add(polar(x, y), polar(z, y)));
    EXPECT_EQ(q(prm.add_points(x, x)), prm.mul(4, q(x)));
  }
}

TEST(Radical, Examples) {
  for (auto [p, d] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
    const auto q = q0(Params::make(p, 2 * d));
    EXPECT_EQ(radical(q).dim(), 0);
    EXPECT_EQ(radical_bilinear(q).dim(), 0);
  }
  const auto prm = Params::make(3, 2);
  QuadraticForm vsq(prm);
  vsq.set_coeff(0, 0, 1);
  const auto r = radical(vsq);
  EXPECT_EQ(r.basis(), std::vector<Coords>{Coords({0, 1})});
  EXPECT_EQ(radical_bilinear(vsq), r);
  EXPECT_EQ(radical(QuadraticForm(prm)), whole_space(prm));
}

TEST(Radical, RoutesAgreeOnRandomForms) {
  Rng rng(42);
  for (int p : {2, 3, 5}) {
    const auto prm = Params::make(p, 3);
    for (int k = 0; k < 30; ++k) {
      QuadraticForm q(prm);
      for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) q.set_coeff(i, j, static_cast<int>(uniform_int(rng, 0, p - 1)));
      }
      EXPECT_EQ(radical(q), radical_bilinear(q));
    }
  }
}

TEST(TotallyIsotropic, Examples) {
  const auto prm = Params::make(3, 2);
  const auto q = q0(prm);
  EXPECT_TRUE(is_totally_isotropic(q, canonicalize(prm, std::vector<Coords>{{1, 0}})));
  EXPECT_FALSE(is_totally_isotropic(q, canonicalize(prm, std::vector<Coords>{{1, 1}})));
  EXPECT_TRUE(is_totally_isotropic(q, point_subspace(prm, 0)));
}

TEST(MaxIsotropic, Counts) {
  const auto q31 = q0(Params::make(3, 2));
  const auto lines = enumerate_max_isotropic(q31, 1);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].to_string(), "span{(0,1)}+(0,0)");
  EXPECT_EQ(lines[1].to_string(), "span{(1,0)}+(0,0)");
  EXPECT_EQ(enumerate_max_isotropic(q0(Params::make(3, 4)), 2).size(), 8u);
  EXPECT_EQ(enumerate_max_isotropic(q0(Params::make(2, 4)), 2).size(), 6u);
  EXPECT_EQ(enumerate_max_isotropic(q0(Params::make(5, 2)), 1).size(), 2u);
  EXPECT_EQ(isotropic_count_formula(2, 2), 6u);
  EXPECT_EQ(isotropic_count_formula(3, 1), 2u);
  EXPECT_EQ(isotropic_count_formula(3, 2), 8u);
  EXPECT_EQ(isotropic_count_formula(5, 1), 2u);
  EXPECT_EQ(isotropic_count_formula(5, 2), 12u);
}

TEST(MaxIsotropic, CountsByDimension) {
  EXPECT_EQ(isotropic_counts_by_dimension(q0(Params::make(3, 4))), (std::vector<Index>{1, 16, 8, 0, 0}));
  EXPECT_EQ(isotropic_counts_by_dimension(q0(Params::make(2, 4))), (std::vector<Index>{1, 9, 6, 0, 0}));
}

TEST(WittIndex, Examples) {
  EXPECT_EQ(witt_index(q0(Params::make(3, 4))), 2);
  EXPECT_EQ(witt_index(q0(Params::make(5, 2))), 1);
  const auto prm = Params::make(3, 2);
  QuadraticForm sum_sq(prm);
  sum_sq.set_coeff(0, 0, 1);
  sum_sq.set_coeff(1, 1, 1);
  // v^2 + u^2 = 0 has only the trivial solution over Z_3.
  EXPECT_EQ(witt_index(sum_sq), 0);
  EXPECT_EQ(witt_index(QuadraticForm(prm)), 2);
  QuadraticForm sum_sq5(Params::make(5, 2));
  sum_sq5.set_coeff(0, 0, 1);
  sum_sq5.set_coeff(1, 1, 1);
  EXPECT_EQ(witt_index(sum_sq5), 1);
}

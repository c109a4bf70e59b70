#include "support.hpp"

#include <gtest/gtest.h>

using namespace pi0;
using support::rv;

namespace {

std::size_t split_rank(const RootDatum& rd, const Involution& inv) { return split_lattices(rd, inv).Xspl.rank(); }

}  // namespace

TEST(RealForm, MatrixInvolutionAccepted) {
  auto rd = torus_datum(2);
  auto inv = involution_from_matrix(rd, IntMatrix{{0, 1}, {1, 0}});
  EXPECT_EQ(split_rank(rd, inv), 1u);
}

TEST(RealForm, NonInvolutionRejected) {
  auto rd = torus_datum(2);
  try {
    involution_from_matrix(rd, IntMatrix{{1, 1}, {0, 1}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "not an involution");
  }
}

TEST(RealForm, NonIntegralRejected) {
  auto rd = torus_datum(2);
  RatMatrix t = RatMatrix::from_rows(2, {rv({0, Rational(1, 2)}), rv({2, 0})});
  try {
    involution_from_matrix(rd, t);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "theta not integral on cocharacter lattice");
  }
}

TEST(RealForm, MustNormalizeCoroots) {
  auto rd = gl_datum(3);
  // Negates e1 only: maps e1 - e2 to -e1 - e2, which is not a coroot.
  try {
    involution_from_matrix(rd, IntMatrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "does not preserve coroot lattice");
  }
}

TEST(RealForm, EigenspaceConstruction) {
  auto rd = torus_datum(2);
  auto inv = involution_from_eigenspaces(rd, {rv({1, 1})}, {rv({1, -1})});
  EXPECT_EQ(inv.theta, RatMatrix(IntMatrix{{0, -1}, {-1, 0}}));
  EXPECT_THROW(involution_from_eigenspaces(rd, {rv({1, 1})}, {rv({2, 2})}), ValidationError);
  EXPECT_THROW(involution_from_eigenspaces(rd, {rv({1, 1})}, {}), ValidationError);
}

TEST(RealForm, EigenspaceMustBeIntegral) {
  auto rd = torus_datum(2);
  EXPECT_THROW(involution_from_eigenspaces(rd, {rv({1, 0})}, {rv({1, 3})}), ValidationError);
}

TEST(RealForm, E7SplitRanks) {
  EXPECT_EQ(split_rank(e7_preset(E7Form::EV).first, e7_preset(E7Form::EV).second), 7u);
  auto [vi, vi_inv] = e7_preset(E7Form::EVI);
  EXPECT_EQ(split_rank(vi, vi_inv), 4u);
  auto [vii, vii_inv] = e7_preset(E7Form::EVII);
  EXPECT_EQ(split_rank(vii, vii_inv), 3u);
}

TEST(RealForm, E7EigenvectorsBehave) {
  auto [rd, inv] = e7_preset(E7Form::EVII);
  for (std::size_t i : {1, 2, 6})
    EXPECT_EQ(inv.theta.apply(e7_fundamental_coweight(i)), Rational(-1) * e7_fundamental_coweight(i));
  for (std::size_t i : {3, 4, 5, 7}) EXPECT_EQ(inv.theta.apply(e7_simple_coroot(i)), e7_simple_coroot(i));
  auto [rd6, inv6] = e7_preset(E7Form::EVI);
  for (std::size_t i : {2, 4, 5, 6})
    EXPECT_EQ(inv6.theta.apply(e7_fundamental_coweight(i)), Rational(-1) * e7_fundamental_coweight(i));
  EXPECT_EQ(inv6.theta * inv6.theta, RatMatrix::identity(7));
}

TEST(RealForm, E7SplitProjections) {
  auto [rd, inv] = e7_preset(E7Form::EVII);
  auto P = split_projection(inv);
  auto w = [](std::size_t i) { return e7_fundamental_coweight(i); };
  const Rational h(1, 2);
  EXPECT_EQ(P.apply(w(3)), w(2) + h * w(6));
  EXPECT_EQ(P.apply(w(4)), w(2) + w(6));
  EXPECT_EQ(P.apply(w(5)), h * w(2) + w(6));
  EXPECT_EQ(P.apply(w(7)), h * (w(2) + w(6)));
}

TEST(RealForm, ChangeBasisConjugates) {
  oracle::Rng rng(51);
  auto rd = so_datum(2, 4);
  auto inv = *build_preset(PresetSpec{Family::SO, 0, 2, 4}).involution;
  for (int t = 0; t < 10; ++t) {
    IntMatrix g = oracle::random_unimodular(rng, rd.rank);
    auto moved = change_basis(inv, g);
    EXPECT_EQ(moved.theta * moved.theta, RatMatrix::identity(rd.rank));
    EXPECT_NO_THROW(involution_from_matrix(change_basis(rd, g), moved.theta));
  }
}

TEST(RealForm, DirectSum) {
  auto s = direct_sum(split_involution(1), compact_involution(2));
  EXPECT_EQ(s.theta, RatMatrix(IntMatrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(RealForm, MustNormalizeCorootSet) {
  auto rd = simple_datum('A', 2, Isogeny::SimplyConnected);
  try {
    involution_from_matrix(rd, IntMatrix{{1, 1}, {0, -1}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "does not normalize coroot set");
  }
}

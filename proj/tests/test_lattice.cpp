#include "support.hpp"

#include <gtest/gtest.h>

using namespace pi0;
using support::half;
using support::rv;

TEST(Lattice, SumOfCoordinateLines) {
  auto a = Lattice::from_generators(2, std::vector<RatVector>{rv({2, 0})});
  auto b = Lattice::from_generators(2, std::vector<RatVector>{rv({0, 3})});
  auto s = lattice_sum(a, b);
  EXPECT_EQ(s.rank(), 2u);
  EXPECT_TRUE(s.contains(rv({2, 3})));
  EXPECT_FALSE(s.contains(rv({1, 0})));
}

TEST(Lattice, IntersectionOfMultiples) {
  auto a = Lattice::from_generators(1, std::vector<RatVector>{rv({4})});
  auto b = Lattice::from_generators(1, std::vector<RatVector>{rv({6})});
  EXPECT_EQ(lattice_intersect(a, b), Lattice::from_generators(1, std::vector<RatVector>{rv({12})}));
}

TEST(Lattice, IntersectionWithHalfLattice) {
  auto a = Lattice::standard(2);
  auto b = Lattice::from_generators(2, std::vector<RatVector>{rv({half(1), half(1)}), rv({1, -1})});
  auto i = lattice_intersect(a, b);
  EXPECT_TRUE(i.contains(rv({1, 1})));
  EXPECT_TRUE(i.contains(rv({1, -1})));
  EXPECT_FALSE(i.contains(rv({1, 0})));
}

TEST(Lattice, KernelOfSumFunctional) {
  auto k = kernel_lattice(Lattice::standard(3), IntMatrix{{1, 1, 1}});
  EXPECT_EQ(k.rank(), 2u);
  EXPECT_TRUE(k.contains(rv({1, -1, 0})));
  EXPECT_TRUE(k.contains(rv({0, 1, -1})));
  EXPECT_FALSE(k.contains(rv({1, 0, 0})));
}

TEST(Lattice, WeilSplitProjectionImage) {
  RatMatrix p = Rational(1, 2) * (RatMatrix::identity(2) - RatMatrix(IntMatrix{{0, -1}, {-1, 0}}));
  auto img = image_lattice(Lattice::standard(2), p);
  EXPECT_EQ(img, Lattice::from_generators(2, std::vector<RatVector>{rv({half(1), half(1)})}));
}

TEST(Lattice, MembershipAndReduce) {
  auto l = Lattice::from_generators(2, std::vector<RatVector>{rv({2, 0}), rv({1, 3})});
  EXPECT_TRUE(membership(rv({3, 3}), l));
  EXPECT_FALSE(membership(rv({1, 0}), l));
  EXPECT_EQ(l.reduce(rv({5, 6})), l.reduce(rv({1, 0})));
  EXPECT_TRUE(l.contains(l.reduce(rv({7, 9})) - rv({7, 9})));
}

TEST(Lattice, ScaledAndDenominator) {
  auto l = Lattice::standard(2).scaled(Rational(1, 2));
  EXPECT_EQ(l.denom(), 2);
  EXPECT_TRUE(l.contains(rv({half(1), 0})));
  EXPECT_EQ(l.scaled(2), Lattice::standard(2));
}

TEST(Lattice, DirectSum) {
  auto s = direct_sum(Lattice::standard(1), Lattice::standard(1).scaled(2));
  EXPECT_TRUE(s.contains(rv({1, 2})));
  EXPECT_FALSE(s.contains(rv({1, 1})));
}

TEST(Lattice, RandomSumIntersectAgreeWithEchelon) {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    auto gens = [&](std::size_t count) {
      std::vector<RatVector> g;
      for (std::size_t i = 0; i < count; ++i) {
        RatVector v;
        for (std::size_t j = 0; j < n; ++j) v.push_back(Rational(rng.uniform(-4, 4), rng.uniform(1, 2)));
        g.push_back(v);
      }
      return g;
    };
    auto ga = gens(static_cast<std::size_t>(rng.uniform(0, 3)));
    auto gb = gens(static_cast<std::size_t>(rng.uniform(0, 3)));
    auto a = Lattice::from_generators(n, ga), b = Lattice::from_generators(n, gb);
    auto all = ga;
    all.insert(all.end(), gb.begin(), gb.end());
    oracle::Echelon ref(n, all);
    auto s = lattice_sum(a, b);
    EXPECT_EQ(s.rank(), ref.rank());
    for (const auto& v : ref.basis()) EXPECT_TRUE(s.contains(v));
    for (const auto& v : s.generators()) EXPECT_TRUE(ref.contains(v));
    auto i = lattice_intersect(a, b);
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    for (long x = -2; x <= 2; ++x)
      for (const auto& v : a.generators()) {
        RatVector w = Rational(x) * v;
        EXPECT_EQ(i.contains(w), b.contains(w));
      }
  }
}

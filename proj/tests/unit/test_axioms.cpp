#include <gtest/gtest.h>

#include "powg/axioms.hpp"
#include "powg/error.hpp"

using namespace powg;
using namespace powg::axioms;

TEST(Axioms, SmallestSegment) {
  const auto r = check_p2_axioms(4);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks.size(), 6u);
  const auto m = SegmentModel::standard(4);
  EXPECT_EQ(m.members(), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_THROW(check_p2_axioms(3), PreconditionError);
}

TEST(Axioms, StandardSegmentsPass) {
  for (std::uint64_t n : {5u, 17u, 100u, 1024u, 4097u, 100000u}) EXPECT_TRUE(check_p2_axioms(n).ok()) << n;
}

TEST(Axioms, AddingTwelveIsCaught) {
  auto m = SegmentModel::standard(1'000'000);
  m.add(12);
  const auto r = check_p2_axioms(m);
  EXPECT_FALSE(r.ok());
  const auto* u = r.find("unique_power");
  ASSERT_NE(u, nullptr);
  EXPECT_FALSE(u->passed);
  EXPECT_EQ(u->counterexample.at("x"), 12u);
  EXPECT_FALSE(r.find("no_gap")->passed);
  EXPECT_FALSE(r.find("quotient")->passed);
}

TEST(Axioms, EveryMutationIsCaught) {
  const auto base = SegmentModel::standard(5000);
  for (std::uint64_t x = 0; x <= 100; ++x) {
    if (x && (x & (x - 1)) == 0) continue;
    auto m = base;
    m.add(x);
    EXPECT_FALSE(check_p2_axioms(m).ok()) << "added " << x;
  }
  for (int k = 0; k <= 10; ++k) {
    auto m = base;
    m.remove(std::uint64_t{1} << k);
    EXPECT_FALSE(check_p2_axioms(m).ok()) << "removed 2^" << k;
  }
  auto m = base;
  m.add(0);
  EXPECT_FALSE(check_p2_axioms(m).find("zero_excluded")->passed);
  EXPECT_THROW(m.add(10000), PreconditionError);
}

TEST(Axioms, ProductsAreJudgedUpToTheHorizon) {
  // 4096 * 4096 lies past 2N and is absent, yet the standard model passes.
  auto m = SegmentModel::standard(5000);
  EXPECT_GE(4096u * 4096u, m.horizon());
  EXPECT_TRUE(check_p2_axioms(m).ok());
  // 8192 = 64 * 128 is below 2N = 10000, so dropping it breaks closure.
  m.remove(8192);
  const auto r = check_p2_axioms(m);
  const auto* prod = r.find("product_closed");
  ASSERT_NE(prod, nullptr);
  EXPECT_FALSE(prod->passed);
  EXPECT_EQ(prod->counterexample.at("u") * prod->counterexample.at("v"), 8192u);
}

TEST(DivisorWindows, Pass) {
  const auto r = check_divisor_windows(2000);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks.at(0).instances, 2000u);
  EXPECT_THROW(check_divisor_windows(1), PreconditionError);
}

TEST(Pow2Equiv, Pass) {
  const auto r = check_pow2_equiv(20000);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks.size(), 3u);
  EXPECT_TRUE(check_pow2_equiv(2).ok());
}

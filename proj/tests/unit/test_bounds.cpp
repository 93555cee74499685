#include <gtest/gtest.h>

#include "oracles.hpp"
#include "powg/bounds.hpp"
#include "powg/error.hpp"

using namespace powg;
using namespace powg::bounds;
using oracle::Gen;

namespace {

Natural N(std::uint64_t x) { return Natural(static_cast<unsigned long>(x)); }

std::int64_t clog3(std::uint64_t x) {
  return static_cast<std::int64_t>(oracle::ceil_log2(oracle::ceil_log2(oracle::ceil_log2(x))));
}

}  // namespace

TEST(Nondivisor, MatchesOracle) {
  Gen g(51);
  for (int t = 0; t < 2000; ++t) {
    const std::uint64_t u = g.uniform(3, 10'000'000);
    if (oracle::is_pow2(u)) continue;
    std::uint64_t r = 0;
    for (auto [p, e] : oracle::factor(u)) {
      if (p != 2) r = std::gcd(r, e);
    }
    const std::uint64_t d = oracle::least_nondivisor(r);
    EXPECT_EQ(upper_nondivisor(N(u)), static_cast<std::int64_t>(oracle::ceil_log2(oracle::floor_log2(d))) + 4) << u;
  }
  EXPECT_EQ(upper_nondivisor(3), 4);
  EXPECT_THROW(upper_nondivisor(1024), PreconditionError);
}

TEST(LogBounds, Values2304) {
  const auto c = upper_log_bounds(2304);  // 2^8 3^2, ceil(log u) = 12
  EXPECT_EQ(c.log_u.value, 5);
  EXPECT_EQ(c.log_r.value, 4);
  EXPECT_TRUE(c.log_nu2.applicable);
  EXPECT_EQ(c.log_nu2.value, 6);
}

TEST(LogBounds, MatchOracleOnRandomValues) {
  Gen g(52);
  for (int t = 0; t < 2000; ++t) {
    const std::uint64_t u = g.uniform(3, 1'000'000'000);
    if (oracle::is_pow2(u)) continue;
    std::uint64_t r = 0, l = 0;
    for (auto [p, e] : oracle::factor(u)) {
      if (p == 2) l = e;
      else r = std::gcd(r, e);
    }
    const auto c = upper_log_bounds(N(u));
    EXPECT_EQ(c.log_u.value, clog3(oracle::ceil_log2(u)) + 4) << u;
    EXPECT_EQ(c.log_r.value, clog3(r) + 4) << u;
    EXPECT_EQ(c.log_nu2.value, clog3(l) + 5) << u;
  }
}

TEST(Combine, BestAndTies) {
  const auto a = combine_upper(2304);
  ASSERT_TRUE(a.best);
  EXPECT_EQ(*a.best, 4);
  EXPECT_EQ(a.best_source, "nondivisor");

  const std::int64_t hits[] = {3};
  const auto b = combine_upper(N(2304), hits);
  EXPECT_EQ(*b.best, 3);
  EXPECT_EQ(b.best_source, "solver");

  const std::int64_t tie[] = {4};
  EXPECT_EQ(combine_upper(N(2304), tie).best_source, "solver");

  const auto p = combine_upper(1024);
  EXPECT_TRUE(p.power_of_two);
  EXPECT_FALSE(p.best);
  EXPECT_THROW(combine_upper(0), PreconditionError);
}

TEST(Combine, Symbolic) {
  Natural f;
  mpz_fac_ui(f.get_mpz_t(), 16);
  SymbolicPow s = SymbolicPow::make(3, f, f);
  s.r_factorial_of = 16;
  EXPECT_EQ(upper_nondivisor(s), 6);  // d = 17
  const auto rep = combine_upper(s);
  ASSERT_TRUE(rep.best);
  EXPECT_LE(*rep.best, 6);
}

TEST(NuNu, PicksLeastKey) {
  // 3^4 5^6: p=3 gives keys 2^2 and 3; p=5 gives 2, 3, 5.
  const auto r = upper_nu_nu(N(81 * 15625));
  EXPECT_EQ(r.best.p, 5);
  EXPECT_EQ(r.best.q, 2);
  EXPECT_EQ(r.best.key, 2);
  EXPECT_EQ(r.terms.size(), 5u);
  EXPECT_THROW(upper_nu_nu(64), PreconditionError);
}

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "powg/error.hpp"
#include "powg/exactsolve.hpp"

using namespace powg;
using namespace powg::exact;
using oracle::Gen;

namespace {

Natural N(std::uint64_t x) { return Natural(static_cast<unsigned long>(x)); }

Position pos_of(const std::vector<std::uint64_t>& s) {
  std::vector<Natural> v;
  for (auto x : s) v.push_back(N(x));
  return Position(v);
}

std::uint64_t max_of(const std::vector<std::uint64_t>& s) { return *std::max_element(s.begin(), s.end()); }

}  // namespace

TEST(BadSet, MatchesBruteForceOnRandomPositions) {
  Gen g(21);
  int checked = 0;
  while (checked < 400) {
    auto s = g.subset(g.uniform(0, 1) ? 30 : 300, 4);
    if (oracle::lost(s)) continue;
    ++checked;
    const auto bs = bad_set(pos_of(s));
    const std::uint64_t top = 2 * max_of(s) * max_of(s) + 2;
    for (std::size_t i = 0; i < bs.runs.size(); ++i) {
      EXPECT_LE(bs.runs[i].lo, bs.runs[i].hi);
      if (i) { EXPECT_GT(bs.runs[i].lo, bs.runs[i - 1].hi + 1) << "runs must be disjoint and maximal"; }
    }
    if (!bs.runs.empty()) { EXPECT_LT(bs.runs.back().hi, N(top)); }
    s.push_back(0);
    for (std::uint64_t w = 1; w <= top; ++w) {
      s.back() = w;
      ASSERT_EQ(bs.contains(N(w)), oracle::lost(s)) << "w=" << w;
    }
  }
}

TEST(BadSet, RejectsLostPosition) { EXPECT_THROW(bad_set(Position{N(2), N(5)}), PreconditionError); }

TEST(BadSet, BigNumbers) {
  const Natural a = Natural(1) << 80;
  const auto bs = bad_set(Position{a});
  // (a^2, 2a^2) is bad.
  EXPECT_TRUE(bs.contains(a * a + 1));
  EXPECT_TRUE(bs.contains(2 * a * a - 1));
  EXPECT_FALSE(bs.contains(a * a));
  EXPECT_FALSE(bs.contains(2 * a * a));
}

TEST(WinsInOne, WitnessLosesForEveryAnswer) {
  Gen g(22);
  int wins = 0;
  for (int t = 0; t < 3000; ++t) {
    const auto s = g.subset(g.uniform(0, 1) ? 40 : 2000, 3);
    if (oracle::lost(s)) continue;
    const auto x = wins_in_one(pos_of(s));
    if (!x) continue;
    ++wins;
    const auto iv = response_interval(*x);
    ASSERT_LT(iv.count(), N(100'000'000));
    auto s2 = s;
    s2.push_back(0);
    for (std::uint64_t w = iv.lo.get_ui(); w <= iv.hi.get_ui(); ++w) {
      s2.back() = w;
      ASSERT_TRUE(oracle::lost(s2)) << "x=" << *x << " w=" << w;
    }
  }
  EXPECT_GT(wins, 100);
}

TEST(WinsInOne, LeastChallengeAgreesWithBruteForce) {
  Gen g(23);
  for (int t = 0; t < 300; ++t) {
    const auto s = g.subset(50, 3);
    if (oracle::lost(s)) continue;
    const std::uint64_t top = 2 * max_of(s) * max_of(s) + 2;
    std::optional<std::uint64_t> least;
    auto s2 = s;
    s2.push_back(0);
    for (std::uint64_t x = 1; x <= top && !least; ++x) {
      bool all = true;
      for (std::uint64_t w = x / 2 + 1; w <= x && all; ++w) {
        s2.back() = w;
        all = oracle::lost(s2);
      }
      if (all) least = x;
    }
    const auto got = wins_in_one(pos_of(s));
    ASSERT_EQ(got.has_value(), least.has_value()) << pos_of(s).to_string();
    if (least) { EXPECT_EQ(*got, N(*least)) << pos_of(s).to_string(); }
  }
}

TEST(WinsInOne, SingleResponses) {
  EXPECT_EQ(wins_in_one(Position{N(5)}), N(2));
  EXPECT_TRUE(wins_in_one(Position{N(6)}));
  EXPECT_TRUE(wins_in_one(Position{N(7)}));
  EXPECT_TRUE(wins_in_one(Position{N(17)}));
  EXPECT_FALSE(wins_in_one(Position{N(3)}));
  EXPECT_FALSE(wins_in_one(Position{N(2304)}));
  EXPECT_EQ(wins_in_one(Position{N(3), N(5)}), N(1));  // 3 < 5 < 6
}

TEST(Solver, SmallValues) {
  Solver s;
  const auto v3 = s.solve(Position{N(3)}, 2);
  EXPECT_TRUE(v3.challenger_wins());
  EXPECT_EQ(v3.rounds, 2);
  ASSERT_TRUE(v3.opening);
  EXPECT_TRUE(replay_exhaustive(s, Position{N(3)}, 2).ok);

  EXPECT_EQ(s.solve(Position{N(5)}, 3).rounds, 1);
  EXPECT_EQ(s.solve(Position{N(2), N(5)}, 3).rounds, 0);
  EXPECT_EQ(s.solve(Position{N(3)}, 1).kind, SolveVerdict::Kind::PoweratorSurvivesProven);
  EXPECT_EQ(s.solve(Position{N(16)}, 3).kind, SolveVerdict::Kind::Unknown);
  EXPECT_THROW(s.solve(Position{N(3)}, -1), PreconditionError);
}

TEST(Solver, EveryNonPowerBelow300WinsInTwoAndReplays) {
  Solver s;
  for (std::uint64_t u = 3; u < 300; ++u) {
    if (oracle::is_pow2(u)) continue;
    const auto v = s.solve(Position{N(u)}, 2);
    ASSERT_TRUE(v.challenger_wins()) << u;
    const auto r = replay_exhaustive(s, Position{N(u)}, v.rounds);
    EXPECT_TRUE(r.ok) << u << ": " << r.failure;
    EXPECT_LE(r.max_rounds_seen, v.rounds);
  }
}

TEST(Solver, TinyMemoGivesSameVerdicts) {
  SolverConfig cfg;
  cfg.memo_limit = 3;
  Solver small(cfg), big;
  for (std::uint64_t u = 3; u < 120; ++u) {
    if (oracle::is_pow2(u)) continue;
    const auto a = small.solve(Position{N(u)}, 2), b = big.solve(Position{N(u)}, 2);
    EXPECT_EQ(a.kind, b.kind) << u;
    EXPECT_EQ(a.rounds, b.rounds) << u;
  }
  EXPECT_LE(small.memo_size(), 3u);
}

TEST(Solver, BudgetExhaustion) {
  SolverConfig cfg;
  cfg.node_budget = 5;
  Solver s(cfg);
  const auto v = s.solve(Position{N(2304)}, 3);
  EXPECT_EQ(v.kind, SolveVerdict::Kind::BudgetExhausted);
  EXPECT_EQ(to_string(v.kind), "BudgetExhausted");
}

TEST(Solver, WinningMoveOnLostPositionIsEmpty) {
  Solver s;
  const auto m = s.winning_move(Position{N(2), N(5)}, 2);
  ASSERT_TRUE(m);
  EXPECT_FALSE(*m);
  EXPECT_FALSE(s.winning_move(Position{N(3)}, 1));
}

TEST(Solver, BoundedValueHelper) {
  const auto v = bounded_value(Position{N(9)}, 2);
  EXPECT_TRUE(v.challenger_wins());
  EXPECT_EQ(v.rounds, 2);
}

TEST(Complexity, Intervals) {
  const auto a = complexity_interval(16);
  EXPECT_FALSE(a.lower);
  EXPECT_FALSE(a.upper);
  EXPECT_EQ(a.upper_method, "strategy");
  EXPECT_TRUE(a.upper_bounds.power_of_two);

  const auto b = complexity_interval(17);
  EXPECT_EQ(b.lower, 1);
  EXPECT_EQ(b.upper, 1);
  EXPECT_TRUE(b.exact);

  const auto c = complexity_interval(3);
  EXPECT_EQ(c.lower, 2);
  EXPECT_EQ(c.upper, 2);
  EXPECT_EQ(c.upper_method, "solver");
  EXPECT_TRUE(c.exact);

  // Powers of two stay infinite even with the solver switched off.
  const auto d = complexity_interval(Natural(1) << 18, {}, 0);
  EXPECT_FALSE(d.upper);

  EXPECT_THROW(complexity_interval(0), PreconditionError);
}

TEST(Complexity, CertificateRaisesLowerBound) {
  // u = 2^1134 3^15120: D_3 = 15120 divides r and l = B_3.
  Natural u;
  mpz_ui_pow_ui(u.get_mpz_t(), 3, 15120);
  u <<= 1134;
  const auto ci = complexity_interval(u, {}, 0);
  EXPECT_EQ(ci.lower, 3);
  EXPECT_EQ(ci.lower_method, "certificate");
  ASSERT_TRUE(ci.upper);
  EXPECT_GE(*ci.upper, 3);
}

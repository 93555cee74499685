#include <gtest/gtest.h>

#include "oracles.hpp"
#include "powg/error.hpp"
#include "powg/game.hpp"

using namespace powg;
using oracle::Gen;

namespace {

Natural N(std::uint64_t x) { return Natural(static_cast<unsigned long>(x)); }

Position pos_of(const std::vector<std::uint64_t>& s) {
  std::vector<Natural> v;
  for (auto x : s) v.push_back(N(x));
  return Position(v);
}

}  // namespace

TEST(Position, SortedAndDeduplicated) {
  const Position p{N(9), N(3), N(9), N(1)};
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.responses()[0], 1);
  EXPECT_EQ(p.max(), 9);
  EXPECT_TRUE(p.contains(3));
  EXPECT_FALSE(p.contains(4));
  EXPECT_EQ(p.to_string(), "{1, 3, 9}");
  EXPECT_THROW(Position({N(0)}), PreconditionError);
  EXPECT_THROW(Position().max(), PreconditionError);
  EXPECT_EQ(apply(p, N(4)), (Position{N(1), N(3), N(4), N(9)}));
}

TEST(Position, WordFit) {
  EXPECT_TRUE((Position{N(1) << 61}).fits_word());
  EXPECT_FALSE((Position{Natural(1) << 62}).fits_word());
  EXPECT_THROW((Position{Natural(1) << 70}).to_words(), PreconditionError);
}

TEST(Rules, ResponseInterval) {
  const auto iv = response_interval(7);
  EXPECT_EQ(iv.lo, 4);
  EXPECT_EQ(iv.hi, 7);
  EXPECT_EQ(iv.count(), 4);
  EXPECT_TRUE(is_legal_response(7, 4));
  EXPECT_FALSE(is_legal_response(7, 9));
  EXPECT_FALSE(is_legal_response(7, 3));
  EXPECT_EQ(response_interval(1).lo, 1);
  EXPECT_EQ(response_interval(1).hi, 1);
  EXPECT_THROW(response_interval(0), PreconditionError);
  for (std::uint64_t x = 1; x < 3000; ++x) {
    const auto r = response_interval(N(x));
    for (std::uint64_t u = r.lo.get_ui(); u <= r.hi.get_ui(); ++u) EXPECT_TRUE(u <= x && x < 2 * u);
    EXPECT_FALSE(r.lo - 1 <= N(x) && N(x) < 2 * (r.lo - 1));
  }
}

TEST(Rules, LostMatchesBruteForce) {
  Gen g(11);
  for (int t = 0; t < 20000; ++t) {
    const auto s = g.subset(t % 2 ? 60 : 5000, 4);
    const Position p = pos_of(s);
    const bool want = oracle::lost(s);
    EXPECT_EQ(is_lost(p), want) << p.to_string();
    const auto tr = find_loss_triple(p);
    EXPECT_EQ(tr.has_value(), want);
    if (tr) {
      EXPECT_TRUE(p.contains(tr->h) && p.contains(tr->i) && p.contains(tr->j));
      EXPECT_LT(tr->i * tr->j, tr->h);
      EXPECT_LT(tr->h, 2 * tr->i * tr->j);
    }
  }
  EXPECT_FALSE(is_lost(Position{}));
  EXPECT_TRUE(is_lost(Position{N(5), N(2)}));  // 2*2 < 5 < 8
  EXPECT_FALSE(is_lost(Position{N(1), N(2), N(4), N(8)}));
}

TEST(Rules, LostOnBigNumbers) {
  const Natural a = Natural(1) << 100;
  EXPECT_TRUE(is_lost(Position{a, a * a + 1}));
  EXPECT_FALSE(is_lost(Position{a, a * a}));
  EXPECT_FALSE(is_lost(Position{a, 2 * a * a}));
}

TEST(Rules, ForcingChallengeForcesTheTarget) {
  for (std::uint64_t t = 1; t < 2000; ++t) {
    const auto iv = response_interval(forcing_challenge(N(t)));
    EXPECT_EQ(iv.lo, t);
    EXPECT_LT(iv.hi, 2 * N(t));
  }
}

TEST(Rules, NondivisorPunishLosesEveryAnswer) {
  Gen g(12);
  int checked = 0;
  while (checked < 500) {
    const std::uint64_t a = g.uniform(2, 300), b = g.uniform(2, 100000);
    if (a > b || b % a == 0) continue;
    ++checked;
    const Natural x = nondivisor_punish(N(a), N(b));
    const auto iv = response_interval(x);
    for (std::uint64_t h = iv.lo.get_ui(); h <= iv.hi.get_ui(); ++h) {
      EXPECT_TRUE(oracle::lost({a, b, h})) << a << " " << b << " " << h;
    }
  }
  EXPECT_THROW(nondivisor_punish(3, 9), PreconditionError);
  EXPECT_THROW(nondivisor_punish(1, 9), PreconditionError);
  EXPECT_THROW(nondivisor_punish(9, 5), PreconditionError);
}

TEST(Transcript, FinalPosition) {
  Transcript t;
  t.start = Position{N(3)};
  t.rounds = {{N(7), N(4)}, {N(10), N(9)}};
  EXPECT_EQ(final_position(t), (Position{N(3), N(4), N(9)}));
  EXPECT_EQ(to_string(Outcome::ChallengerWins), "ChallengerWins");
}

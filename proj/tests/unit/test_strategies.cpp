#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "powg/error.hpp"
#include "powg/strategies.hpp"

using namespace powg;
using namespace powg::strategies;
using oracle::Gen;

namespace {

Natural N(std::uint64_t x) { return Natural(static_cast<unsigned long>(x)); }

// Independent fan-out: every legal answer at every node, own lost test.
struct FanOut {
  const ChallengerStrategy& c;
  Position start;
  int bound;
  bool ok = true;
  int deepest = 0;

  void run(const std::vector<std::uint64_t>& s, std::vector<Round>& hist) {
    if (!ok) return;
    if (oracle::lost(s)) {
      deepest = std::max(deepest, static_cast<int>(hist.size()));
      return;
    }
    if (static_cast<int>(hist.size()) >= bound) {
      ok = false;
      return;
    }
    const auto x = c.next(start, hist);
    if (!x || *x < 1 || !x->fits_ulong_p()) {
      ok = false;
      return;
    }
    const std::uint64_t xv = x->get_ui();
    for (std::uint64_t w = xv / 2 + 1; w <= xv && ok; ++w) {
      auto s2 = s;
      s2.push_back(w);
      hist.push_back({*x, N(w)});
      run(s2, hist);
      hist.pop_back();
    }
  }
};

bool fan_out(const ChallengerStrategy& c, const std::vector<std::uint64_t>& start, int bound) {
  std::vector<Natural> v;
  for (auto x : start) v.push_back(N(x));
  FanOut f{c, Position(v), bound};
  std::vector<Round> hist;
  f.run(start, hist);
  return f.ok;
}

}  // namespace

TEST(Powerator, Pow2AnswersThePowerOfTwo) {
  Gen g(31);
  for (int t = 0; t < 5000; ++t) {
    const std::uint64_t x = g.log_uniform(62);
    const Natural w = powerator_pow2(N(x));
    EXPECT_TRUE(is_legal_response(N(x), w));
    EXPECT_TRUE(nt::is_oddless(w));
  }
  EXPECT_THROW(powerator_pow2(0), PreconditionError);
}

TEST(Powerator, Survivor2304MatchesCandidateSet) {
  // Candidates 2304^n 2^l (|l| <= 4) and 48 * 2304^n 2^l (|l| <= 1), integral only.
  std::set<std::uint64_t> cand;
  std::uint64_t b = 1;
  for (int n = 0; n < 3; ++n, b *= 2304) {
    for (int l = -4; l <= 4; ++l) {
      if (l >= 0) cand.insert(b << l);
      else if (b % (std::uint64_t{1} << -l) == 0) cand.insert(b >> -l);
    }
    for (int l = -1; l <= 1; ++l) cand.insert(l >= 0 ? (48 * b) << l : 48 * b / 2);
  }
  for (std::uint64_t x = 1; x <= 20000; ++x) {
    std::uint64_t want = 0;
    for (auto c : cand) {
      if (c <= x && x < 2 * c) want = std::max(want, c);
    }
    if (want == 0) want = std::uint64_t{1} << oracle::floor_log2(x);
    EXPECT_EQ(survivor_2304(N(x)), N(want)) << x;
  }
  EXPECT_EQ(survivor_2304(100), 96);
}

TEST(Powerator, RandomIsSeededAndLegal) {
  auto a = random_powerator(7), b = random_powerator(7), c = random_powerator(8);
  bool differs = false;
  for (std::uint64_t x = 10; x < 400; ++x) {
    const Natural wa = a.respond(N(x), {}), wb = b.respond(N(x), {}), wc = c.respond(N(x), {});
    EXPECT_EQ(wa, wb);
    EXPECT_TRUE(is_legal_response(N(x), wa));
    differs = differs || wa != wc;
  }
  EXPECT_TRUE(differs);
}

TEST(Powerator, BadSetAvoidingPrefersSafeAnswers) {
  const auto p = bad_set_avoiding_powerator();
  // From {3} the bad answers are 10..17, so challenge 17 leaves only 9.
  EXPECT_EQ(p.respond(17, Position{N(3)}), 9);
  EXPECT_EQ(p.respond(40, Position{N(3)}), 32);
}

TEST(Bounds, BinarySearchAndRootProbe) {
  EXPECT_EQ(binary_search_bound(2), 1);
  EXPECT_EQ(binary_search_bound(3), 1);
  EXPECT_EQ(binary_search_bound(4), 2);
  EXPECT_EQ(binary_search_bound(8), 3);
  EXPECT_EQ(binary_search_bound(16), 3);
  EXPECT_EQ(binary_search_bound(32), 4);
  EXPECT_EQ(root_probe_bound(2), 4);
  EXPECT_EQ(root_probe_bound(17), 6);
}

TEST(BinarySearch, WinsWithinBoundFromEveryStart) {
  for (std::uint64_t n = 2; n <= 6; ++n) {
    const auto c = challenger_binary_search(2 + n % 2, N(n));  // u = 2 or 3
    const std::uint64_t u = 2 + n % 2;
    std::uint64_t un = 1;
    for (std::uint64_t i = 0; i < n; ++i) un *= u;
    for (std::uint64_t v = un + 1; v < 2 * un; ++v) {
      EXPECT_TRUE(fan_out(c, {u, v}, static_cast<int>(*c.claimed_bound))) << u << "^" << n << " v=" << v;
    }
  }
}

TEST(BinarySearch, RequiresThePattern) {
  const auto c = challenger_binary_search(3, 4);
  EXPECT_THROW(c.next(Position{N(3), N(81)}, {}), PreconditionError);
  EXPECT_THROW(c.next(Position{N(5), N(100)}, {}), PreconditionError);
  EXPECT_THROW(challenger_binary_search(1, 4), PreconditionError);
}

TEST(RootProbe, WinsWithinBound) {
  for (std::uint64_t u : {3u, 5u, 12u, 36u, 48u, 75u, 100u, 144u, 225u, 729u, 1000u, 1458u}) {
    const auto c = challenger_root_probe(N(u));
    ASSERT_TRUE(c.claimed_bound);
    const auto r = verify_round_bound(c, Position{N(u)}, *c.claimed_bound);
    EXPECT_TRUE(r.ok()) << u << ": " << (r.violations.empty() ? "" : r.violations[0].reason);
    EXPECT_TRUE(fan_out(c, {u}, static_cast<int>(*c.claimed_bound))) << u;
  }
  EXPECT_THROW(challenger_root_probe(64), PreconditionError);
}

TEST(Halving, WinsWithinTwoAdicBound) {
  for (std::uint64_t u : {3u, 6u, 12u, 20u, 24u, 96u, 320u}) {
    const auto c = challenger_halving_strategy(N(u));
    ASSERT_TRUE(c.claimed_bound);
    EXPECT_EQ(*c.claimed_bound, static_cast<std::int64_t>(nt::nu_p(2, N(u))) + 2);
    EXPECT_TRUE(fan_out(c, {u}, static_cast<int>(*c.claimed_bound))) << u;
  }
  EXPECT_EQ(challenger_halving(10), 9);
  EXPECT_THROW(challenger_halving(1), PreconditionError);
}

TEST(Boost, StopsOnlyOnTheForcedPower) {
  const auto c = challenger_boost(3, 4);
  const auto r = verify_round_bound(c, Position{N(3)}, 4);
  ASSERT_FALSE(r.ok());
  for (const auto& v : r.violations) {
    ASSERT_EQ(v.rounds.size(), 1u);
    EXPECT_EQ(v.rounds[0].response, 81);
  }
}

TEST(C2, CasesAndTwoRoundWins) {
  EXPECT_TRUE(c2_cases(16).empty());
  EXPECT_EQ(c2_cases(75).front(), C2Case::Small);
  EXPECT_NE(std::find(c2_cases(75).begin(), c2_cases(75).end(), C2Case::OddNonSquare), c2_cases(75).end());
  EXPECT_THROW(challenger_c2(64), PreconditionError);
  Gen g(32);
  for (int t = 0; t < 150; ++t) {
    const std::uint64_t u = g.uniform(3, 2303);
    if (oracle::is_pow2(u)) continue;
    EXPECT_TRUE(fan_out(challenger_c2(N(u)), {u}, 2)) << u;
  }
  // Every applicable case on a few larger values.
  for (std::uint64_t u : {75u, 2305u, 4607u, 10001u, 65537u, 3u * 3u * 1024u}) {
    for (auto c : c2_cases(N(u))) {
      const auto r = verify_round_bound(challenger_c2(N(u), c), Position{N(u)}, 2);
      EXPECT_TRUE(r.ok()) << u << " " << to_string(c);
    }
  }
}

TEST(Solver, ChallengerFromSolver) {
  auto solver = std::make_shared<exact::Solver>();
  const auto c = solver_challenger(solver, 2);
  EXPECT_TRUE(fan_out(c, {9}, 2));
  EXPECT_EQ(c.next(Position{N(5)}, {}), N(2));
}

TEST(Match, IllegalMovesNameTheSide) {
  const PoweratorStrategy cheat{"cheat", [](const Natural& x, const Position&) { return Natural(x + 1); }};
  const ChallengerStrategy c{"one", std::nullopt, [](Script& s) { s.ask(7); }};
  try {
    play_match(c, cheat, 3, Position{N(3)});
    FAIL();
  } catch (const IllegalMove& e) {
    EXPECT_EQ(e.side(), "powerator");
  }
  const ChallengerStrategy zero{"zero", std::nullopt, [](Script& s) { s.ask(0); }};
  try {
    play_match(zero, pow2_powerator(), 3, Position{N(3)});
    FAIL();
  } catch (const IllegalMove& e) {
    EXPECT_EQ(e.side(), "challenger");
  }
}

TEST(Match, Pow2PoweratorSurvivesRandomChallenges) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const ChallengerStrategy c{"rnd", std::nullopt, [seed](Script& s) {
                                 Gen g(seed);
                                 for (int i = 0; i < 15; ++i) s.ask(N(g.log_uniform(40)));
                               }};
    const auto t = play_match(c, pow2_powerator(), 15, Position{N(1), N(64)});
    EXPECT_EQ(t.outcome, Outcome::PoweratorSurvives);
    EXPECT_EQ(t.rounds_used, 15u);
  }
}

TEST(Verify, ModesReport) {
  const auto c = challenger_root_probe(75);
  VerifyOptions o;
  o.mode = AdversaryMode::Random;
  o.trials = 200;
  o.jobs = 2;
  const auto r = verify_round_bound(c, Position{N(75)}, *c.claimed_bound, o);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.branches_checked, 200u);
  o.mode = AdversaryMode::BadSetAvoiding;
  EXPECT_TRUE(verify_round_bound(c, Position{N(75)}, *c.claimed_bound, o).ok());
  o.mode = AdversaryMode::Exhaustive;
  o.node_budget = 3;
  EXPECT_THROW(verify_round_bound(c, Position{N(75)}, *c.claimed_bound, o), BudgetExceeded);
  // A bound that is too small is reported, not thrown.
  o.node_budget = 1'000'000;
  const auto tight = verify_round_bound(challenger_c2(3), Position{N(3)}, 1, o);
  EXPECT_FALSE(tight.ok());
  EXPECT_EQ(to_string(AdversaryMode::Exhaustive), "exhaustive");
}

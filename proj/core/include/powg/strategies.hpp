#pragma once

// Challenger and Powerator strategies. A Challenger strategy is a pure
// function of the start position and the rounds played so far: its body is
// re-run from the start on every call, reading recorded answers until it
// reaches a challenge that has not been answered yet.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powg/exactsolve.hpp"
#include "powg/game.hpp"

namespace powg::strategies {

/// Execution context of a strategy body.
class Script {
 public:
  Script(const Position& start, std::span<const Round> history);

  /// Answer to challenge x: taken from the history, or suspends the body with
  /// x as the next move.
  Natural ask(const Natural& x);

  const Position& position() const { return pos_; }
  bool lost() const;
  std::size_t rounds_played() const { return next_; }

 private:
  std::span<const Round> history_;
  std::size_t next_ = 0;
  Position pos_;
};

using Body = std::function<void(Script&)>;

struct ChallengerStrategy {
  std::string name;
  /// Claimed maximum number of rounds; unset when not claimed.
  std::optional<std::int64_t> claimed_bound;
  Body body;

  /// Next challenge, or nullopt when the body has nothing more to play.
  std::optional<Natural> next(const Position& start, std::span<const Round> history) const;
};

struct PoweratorStrategy {
  std::string name;
  std::function<Natural(const Natural& x, const Position& pos)> respond;
};

// ---------------------------------------------------------------------------
// Powerator

/// 2^floor(log2 x), the power of two in [floor(x/2)+1, x].
Natural powerator_pow2(const Natural& x);

PoweratorStrategy pow2_powerator();
/// Prefers the power of two, then the largest answer that does not lose at once.
PoweratorStrategy bad_set_avoiding_powerator();
/// Uniform legal answers from a generator seeded with `seed`.
PoweratorStrategy random_powerator(std::uint64_t seed);

/// Largest legal answer to x in {2304^n 2^l : |l| <= 4} u {48 * 2304^n 2^l : |l| <= 1},
/// falling back to the power of two.
Natural survivor_2304(const Natural& x);
PoweratorStrategy survivor_2304_powerator();

// ---------------------------------------------------------------------------
// Challenger

/// ceil(log floor(log n)) + 1.
std::int64_t binary_search_bound(const Natural& n);
/// ceil(log floor(log d)) + 4.
std::int64_t root_probe_bound(const Natural& d);

/// Needs u >= 2, n >= 2 and, in the position, u and some v with u^n < v < 2u^n.
/// Throws PreconditionError when the pattern is missing.
ChallengerStrategy challenger_binary_search(const Natural& u, const Natural& n);
Body binary_search_body(const Natural& u, const Natural& n);

/// Forces u^n; on the answer u^n runs `continuation`, otherwise the binary
/// search. Without a continuation the strategy stops there. The claimed bound
/// is max(continuation_bound + 1, ceil(log floor(log n)) + 2) when the
/// continuation's bound is given.
ChallengerStrategy challenger_boost(const Natural& u, const Natural& n, Body continuation = {},
                                    std::optional<std::int64_t> continuation_bound = std::nullopt);

/// Root probe with d the least nondivisor of r in u = 2^l v^r.
ChallengerStrategy challenger_root_probe(const Natural& u);

/// u - 1, the first move of the halving strategy.
Natural challenger_halving(const Natural& u);
/// Plays u - 1; punishes any answer other than u/2, and on u/2 runs
/// `continuation` (default: halving again from u/2).
ChallengerStrategy challenger_halving_strategy(const Natural& u, Body continuation = {});

enum class C2Case { Large16, OddNonSquare, Small, Gap };
std::string to_string(C2Case c);

/// The cases whose hypothesis u satisfies, in dispatch order.
std::vector<C2Case> c2_cases(const Natural& u);

/// Two-round strategy of the chosen case (default: first applicable).
/// Throws PreconditionError when the case does not apply.
ChallengerStrategy challenger_c2(const Natural& u, std::optional<C2Case> which = std::nullopt);

/// Plays whatever the solver finds, within `rounds` rounds from each position.
ChallengerStrategy solver_challenger(std::shared_ptr<exact::Solver> solver, int rounds);

// ---------------------------------------------------------------------------
// Matches and verification

/// Alternates moves until the position is lost, the Challenger has no move,
/// or max_rounds is reached. Throws IllegalMove naming the offending side.
Transcript play_match(const ChallengerStrategy& c, const PoweratorStrategy& p, int max_rounds,
                      const Position& start);

enum class AdversaryMode { Exhaustive, BadSetAvoiding, Random };
std::string to_string(AdversaryMode m);

struct VerifyOptions {
  AdversaryMode mode = AdversaryMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  /// Nodes allowed in exhaustive mode; beyond it BudgetExceeded is thrown.
  std::uint64_t node_budget = 50'000'000;
  unsigned jobs = 1;
};

struct Violation {
  std::vector<Round> rounds;
  std::string reason;
};

struct VerifyReport {
  std::string strategy;
  Position start;
  std::int64_t bound = 0;
  AdversaryMode mode = AdversaryMode::Exhaustive;
  std::uint64_t branches_checked = 0;
  std::uint64_t nodes = 0;
  int max_rounds_seen = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

VerifyReport verify_round_bound(const ChallengerStrategy& c, const Position& start, std::int64_t bound,
                                const VerifyOptions& opts = {});

}  // namespace powg::strategies

#pragma once

// One-round decision (complete), bounded-depth search (sound for upper
// bounds) and assembly of c(u) intervals.

#include <cstdint>
#include <list>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "powg/bounds.hpp"
#include "powg/game.hpp"

namespace powg::exact {

struct NaturalRun {
  Natural lo;
  Natural hi;
  friend bool operator==(const NaturalRun&, const NaturalRun&) = default;
};

/// Answers w for which pos plus {w} is lost, as sorted, disjoint, maximal runs.
struct BadSet {
  std::vector<NaturalRun> runs;
  bool contains(const Natural& w) const;
};

/// Throws PreconditionError when pos is already lost.
BadSet bad_set(const Position& pos);

/// A challenge after which every legal answer loses, iff one exists. Returns 1
/// when some u_i < u_h < 2 u_i, otherwise the least even such challenge.
std::optional<Natural> wins_in_one(const Position& pos);

struct SolverConfig {
  /// Largest challenge explored at depth >= 2 (structural moves may exceed
  /// it). Unset means 2 * max(position)^2 of the root.
  std::optional<Natural> challenge_bound;
  bool even_only = true;
  bool structural_moves = true;
  /// Positions kept in the LRU memo table.
  std::size_t memo_limit = std::size_t{1} << 20;
  /// One-round evaluations allowed per solve before giving up.
  std::uint64_t node_budget = 400'000'000;
  /// Non-losing answers examined per candidate challenge before the
  /// candidate is skipped.
  std::uint64_t response_cap = std::uint64_t{1} << 16;
};

struct SolveVerdict {
  enum class Kind { ChallengerWins, PoweratorSurvivesProven, Unknown, BudgetExhausted };

  Kind kind = Kind::Unknown;
  /// Win depth for ChallengerWins, otherwise the depth searched.
  int rounds = 0;
  /// First challenge of the winning strategy; unset when already lost.
  std::optional<Natural> opening;
  Natural bound_used;
  std::uint64_t nodes = 0;

  bool challenger_wins() const { return kind == Kind::ChallengerWins; }
};

std::string to_string(SolveVerdict::Kind k);

/// Iterative-deepening minimax with a memo table that persists across calls.
/// Challenger candidates are structural moves followed by every even number up
/// to the challenge bound; Powerator answers are enumerated exhaustively.
class Solver {
 public:
  explicit Solver(SolverConfig cfg = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  SolveVerdict solve(const Position& pos, int max_rounds);

  /// Opening of a win within `rounds` from pos, if the search finds one.
  /// Engaged-but-empty inner optional means pos is already lost.
  std::optional<std::optional<Natural>> winning_move(const Position& pos, int rounds);

  const SolverConfig& config() const;
  std::uint64_t nodes() const;
  std::size_t memo_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SolveVerdict bounded_value(const Position& pos, int max_rounds, const SolverConfig& cfg = {});

struct ReplayReport {
  bool ok = true;
  std::uint64_t nodes = 0;
  int max_rounds_seen = 0;
  std::string failure;
};

/// Plays the solver's strategy against every legal answer at every node and
/// checks each leaf with is_lost.
ReplayReport replay_exhaustive(Solver& solver, const Position& start, int rounds,
                               std::uint64_t node_budget = 10'000'000);

/// Best known lower and upper bounds on c(u). Unset bounds are infinite.
struct ComplexityInterval {
  Natural u;
  std::optional<std::int64_t> lower;
  std::string lower_method;
  std::optional<std::int64_t> upper;
  std::string upper_method;
  bool exact = false;
  std::optional<Natural> witness_opening;
  /// Every closed-form and solver upper bound that was considered.
  bounds::BoundReport upper_bounds;
};

ComplexityInterval complexity_interval(const Natural& u, const SolverConfig& cfg = {},
                                       int max_rounds = 2);

}  // namespace powg::exact

#pragma once

// Rules of the power-of-two game: Challenger names x > 0, Powerator answers u
// with u <= x < 2u, and Challenger wins once three answers (indices free to
// coincide) satisfy u_i * u_j < u_h < 2 * u_i * u_j.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "powg/numtheory.hpp"

namespace powg {

/// Powerator's answers so far, kept sorted and deduplicated. Repeated answers
/// add no winning triples, so this is also the memoization key.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<Natural> responses);
  explicit Position(std::vector<Natural> responses);

  const std::vector<Natural>& responses() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Natural& max() const;
  bool contains(const Natural& u) const;

  /// True iff every element is below 2^62, so the machine-word kernel applies.
  bool fits_word() const;
  std::vector<std::uint64_t> to_words() const;

  std::string to_string() const;

  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<Natural> elems_;
};

struct ResponseInterval {
  Natural lo;
  Natural hi;
  bool contains(const Natural& u) const { return lo <= u && u <= hi; }
  Natural count() const { return hi - lo + 1; }
};

/// Legal answers to challenge x: [floor(x/2) + 1, x].
ResponseInterval response_interval(const Natural& x);
bool is_legal_response(const Natural& x, const Natural& u);

/// A witness u_i * u_j < u_h < 2 * u_i * u_j.
struct LossTriple {
  Natural h;
  Natural i;
  Natural j;
};

bool is_lost(const Position& pos);
std::optional<LossTriple> find_loss_triple(const Position& pos);

Position apply(const Position& pos, const Natural& u);

/// 2*target - 1: every legal answer u satisfies target <= u < 2*target.
Natural forcing_challenge(const Natural& target);

/// floor(u_j / u_i) for 2 <= u_i <= u_j, u_i not dividing u_j; every answer
/// u_h then gives u_h * u_i < u_j < 2 * u_h * u_i.
Natural nondivisor_punish(const Natural& u_i, const Natural& u_j);

struct Round {
  Natural challenge;
  Natural response;
};

enum class Outcome { ChallengerWins, PoweratorSurvives };

std::string to_string(Outcome o);

struct Transcript {
  Position start;
  std::vector<Round> rounds;
  Outcome outcome = Outcome::PoweratorSurvives;
  std::size_t rounds_used = 0;
};

/// Start position with every response of the transcript adjoined.
Position final_position(const Transcript& t);

}  // namespace powg

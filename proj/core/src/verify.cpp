#include <algorithm>
#include <future>

#include "powg/error.hpp"
#include "powg/strategies.hpp"

namespace powg::strategies {
namespace {

constexpr std::size_t kMaxViolationsKept = 64;

struct Explorer {
  const ChallengerStrategy& c;
  const Position& start;
  std::int64_t bound;
  std::uint64_t budget;
  VerifyReport& rep;
  std::vector<Round> history;

  void violation(std::string why) {
    if (rep.violations.size() < kMaxViolationsKept) rep.violations.push_back({history, std::move(why)});
  }

  void run(const Position& pos) {
    if (++rep.nodes > budget) throw BudgetExceeded("exhaustive verification exceeded its node budget; use a sampling mode");
    const int used = static_cast<int>(history.size());
    if (is_lost(pos)) {
      ++rep.branches_checked;
      rep.max_rounds_seen = std::max(rep.max_rounds_seen, used);
      return;
    }
    if (used >= bound) {
      ++rep.branches_checked;
      violation("position not lost after " + std::to_string(used) + " rounds");
      return;
    }
    const auto x = c.next(start, history);
    if (!x) {
      ++rep.branches_checked;
      violation("strategy stopped on a position that is not lost");
      return;
    }
    if (*x < 1) {
      ++rep.branches_checked;
      violation("illegal challenge " + x->get_str());
      return;
    }
    const ResponseInterval iv = response_interval(*x);
    if (iv.count() > Natural(static_cast<unsigned long>(budget))) {
      throw BudgetExceeded("challenge " + x->get_str() + " has too many answers for exhaustive verification");
    }
    for (Natural u = iv.lo; u <= iv.hi; ++u) {
      history.push_back({*x, u});
      run(apply(pos, u));
      history.pop_back();
    }
  }
};

void record_play(VerifyReport& rep, const Transcript& t, std::int64_t bound) {
  ++rep.branches_checked;
  rep.nodes += t.rounds.size();
  if (t.outcome == Outcome::ChallengerWins) {
    rep.max_rounds_seen = std::max(rep.max_rounds_seen, static_cast<int>(t.rounds_used));
    if (static_cast<std::int64_t>(t.rounds_used) > bound && rep.violations.size() < kMaxViolationsKept) {
      rep.violations.push_back({t.rounds, "won only after the bound"});
    }
  } else if (rep.violations.size() < kMaxViolationsKept) {
    rep.violations.push_back({t.rounds, "Powerator survived"});
  }
}

}  // namespace

Transcript play_match(const ChallengerStrategy& c, const PoweratorStrategy& p, int max_rounds,
                      const Position& start) {
  Transcript t;
  t.start = start;
  Position pos = start;
  while (!is_lost(pos) && static_cast<int>(t.rounds.size()) < max_rounds) {
    const auto x = c.next(start, t.rounds);
    if (!x) break;
    if (*x < 1) throw IllegalMove("challenger", c.name + " played " + x->get_str());
    const Natural u = p.respond(*x, pos);
    if (!is_legal_response(*x, u)) {
      throw IllegalMove("powerator", p.name + " answered " + u.get_str() + " to " + x->get_str());
    }
    t.rounds.push_back({*x, u});
    pos = apply(pos, u);
  }
  t.outcome = is_lost(pos) ? Outcome::ChallengerWins : Outcome::PoweratorSurvives;
  t.rounds_used = t.rounds.size();
  return t;
}

std::string to_string(AdversaryMode m) {
  switch (m) {
    case AdversaryMode::Exhaustive: return "exhaustive";
    case AdversaryMode::BadSetAvoiding: return "bad_set_avoiding";
    case AdversaryMode::Random: return "random";
  }
  return "?";
}

VerifyReport verify_round_bound(const ChallengerStrategy& c, const Position& start, std::int64_t bound,
                                const VerifyOptions& opts) {
  VerifyReport rep;
  rep.strategy = c.name;
  rep.start = start;
  rep.bound = bound;
  rep.mode = opts.mode;
  const int max_rounds = static_cast<int>(std::max<std::int64_t>(bound, 0));
  switch (opts.mode) {
    case AdversaryMode::Exhaustive: {
      Explorer ex{c, start, bound, opts.node_budget, rep, {}};
      ex.run(start);
      break;
    }
    case AdversaryMode::BadSetAvoiding:
      record_play(rep, play_match(c, bad_set_avoiding_powerator(), max_rounds, start), bound);
      break;
    case AdversaryMode::Random: {
      const unsigned jobs = std::max(1u, opts.jobs);
      auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Transcript> out;
        for (std::uint64_t t = lo; t < hi; ++t) {
          out.push_back(play_match(c, random_powerator(opts.seed + t), max_rounds, start));
        }
        return out;
      };
      std::vector<std::future<std::vector<Transcript>>> parts;
      const std::uint64_t step = (opts.trials + jobs - 1) / jobs;
      for (std::uint64_t lo = 0; lo < opts.trials; lo += step) {
        const std::uint64_t hi = std::min(opts.trials, lo + step);
        parts.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, chunk, lo, hi));
      }
      for (auto& f : parts) {
        for (const auto& t : f.get()) record_play(rep, t, bound);
      }
      break;
    }
  }
  return rep;
}

}  // namespace powg::strategies

#include "powg/exactsolve.hpp"

#include <algorithm>
#include <bit>

#include "powg/bounds.hpp"
#include "powg/certify.hpp"
#include "powg/detail/kernel.hpp"
#include "powg/error.hpp"
#include "powg/symbolic.hpp"

namespace powg::exact {

using detail::BigTraits;
using detail::kWordLimit;
using detail::WordTraits;
using Word = std::uint64_t;
using Wide = unsigned __int128;
using WordRuns = detail::RunsOf<WordTraits>;

namespace {

Natural to_natural(Wide w) { return detail::wide_to_natural(w); }

bool all_powers_of_two(const Position& pos) {
  return std::all_of(pos.responses().begin(), pos.responses().end(),
                     [](const Natural& u) { return nt::is_oddless(u); });
}

Wide pow2_floor(Wide x) {
  Wide p = 1;
  while (p <= x / 2) p *= 2;
  return p;
}

struct OutOfNodes {};

struct KeyHash {
  std::size_t operator()(const std::pair<std::vector<Word>, int>& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(k.second);
    for (Word w : k.first) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

}  // namespace

bool BadSet::contains(const Natural& w) const {
  auto it = std::upper_bound(runs.begin(), runs.end(), w,
                             [](const Natural& v, const NaturalRun& r) { return v < r.lo; });
  if (it == runs.begin()) return false;
  --it;
  return w <= it->hi;
}

BadSet bad_set(const Position& pos) {
  if (is_lost(pos)) throw PreconditionError("bad_set: position " + pos.to_string() + " is already lost");
  BadSet out;
  if (pos.fits_word()) {
    const auto words = pos.to_words();
    for (const auto& r : detail::bad_runs<WordTraits>(words)) out.runs.push_back({to_natural(r.lo), to_natural(r.hi)});
  } else {
    for (auto& r : detail::bad_runs<BigTraits>(pos.responses())) out.runs.push_back({std::move(r.lo), std::move(r.hi)});
  }
  return out;
}

std::optional<Natural> wins_in_one(const Position& pos) {
  if (pos.fits_word()) {
    const auto words = pos.to_words();
    const auto w = detail::wins_in_one<WordTraits>(words);
    if (!w) return std::nullopt;
    return to_natural(*w);
  }
  return detail::wins_in_one<BigTraits>(pos.responses());
}

std::string to_string(SolveVerdict::Kind k) {
  switch (k) {
    case SolveVerdict::Kind::ChallengerWins: return "ChallengerWins";
    case SolveVerdict::Kind::PoweratorSurvivesProven: return "PoweratorSurvivesProven";
    case SolveVerdict::Kind::Unknown: return "Unknown";
    case SolveVerdict::Kind::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Search

struct Solver::Impl {
  using Key = std::pair<std::vector<Word>, int>;
  struct Entry {
    Key key;
    Wide opening;  // 0: no win found within the bound
  };

  SolverConfig cfg;
  Wide bound = 0;
  std::uint64_t total_nodes = 0;
  std::uint64_t call_nodes = 0;
  std::list<Entry> lru;
  std::unordered_map<Key, std::list<Entry>::iterator, KeyHash> memo;

  explicit Impl(SolverConfig c) : cfg(std::move(c)) {
    if (cfg.challenge_bound && *cfg.challenge_bound < 2) {
      throw PreconditionError("challenge_bound must be >= 2");
    }
  }

  Natural bound_for(const Position& pos) const {
    if (cfg.challenge_bound) return *cfg.challenge_bound;
    if (pos.empty()) return 2;
    return 2 * pos.max() * pos.max();
  }

  void set_bound(const Natural& b) {
    const Natural capped = b >= Natural(static_cast<unsigned long>(kWordLimit)) ? Natural(static_cast<unsigned long>(kWordLimit - 1)) : b;
    const Wide w = capped.get_ui();
    if (w != bound) {
      lru.clear();
      memo.clear();
      bound = w;
    }
  }

  void tick() {
    ++total_nodes;
    if (++call_nodes > cfg.node_budget) throw OutOfNodes{};
  }

  Wide one(std::span<const Word> s) {
    tick();
    const auto w = detail::wins_in_one<WordTraits>(s);
    return w ? *w : 0;
  }

  std::optional<Wide> memo_get(const Key& k) {
    auto it = memo.find(k);
    if (it == memo.end()) return std::nullopt;
    lru.splice(lru.begin(), lru, it->second);
    return it->second->opening;
  }

  void memo_put(Key k, Wide opening) {
    if (cfg.memo_limit == 0) return;
    if (auto it = memo.find(k); it != memo.end()) {
      it->second->opening = opening;
      lru.splice(lru.begin(), lru, it->second);
      return;
    }
    lru.push_front({k, opening});
    memo.emplace(std::move(k), lru.begin());
    while (memo.size() > cfg.memo_limit) {
      memo.erase(lru.back().key);
      lru.pop_back();
    }
  }

  std::vector<Wide> structural(std::span<const Word> s) const {
    std::vector<Wide> out;
    const std::size_t n = s.size();
    auto forcing = [&](Wide t) {
      if (t >= 1) out.push_back(2 * t - 1);
    };
    for (int k = 0; k <= 5; ++k) forcing(Wide(1) << k);
    for (std::size_t i = 0; i < n; ++i) {
      const Wide ui = s[i];
      forcing(ui);
      for (std::size_t j = i; j < n; ++j) forcing(ui * s[j]);
      for (int k = 1; k <= 4; ++k) {
        forcing(ui << k);
        if (ui % (Wide(1) << k) == 0) forcing(ui >> k);
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (ui >= 2 && s[j] % ui != 0) out.push_back(s[j] / ui);
        if (ui >= 1) out.push_back((s[j] + ui - 1) / ui - 1);
      }
      const auto bits = nt::bit_length(Natural(static_cast<unsigned long>(s[i])));
      for (std::uint64_t d = 2; d <= std::min<std::uint64_t>(bits, 8); ++d) {
        out.push_back(nt::integer_root(Natural(static_cast<unsigned long>(s[i])), d).get_ui());
      }
      if (ui >= 2) out.push_back(ui - 1);
      out.push_back(Wide(2) << std::countr_zero(s[i]));
    }
    std::erase_if(out, [](Wide x) { return x < 1 || x >= kWordLimit; });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  enum class Check { Ok, Fail, Capped };

  /// Whether every answer in [lo, hi] loses at once or wins within `depth`.
  Check answers_covered(std::span<const Word> s, const WordRuns& bad, Wide lo, Wide hi, int depth,
                        Wide& failing) {
    auto good = [&](Wide w) {
      if (detail::runs_contain(bad, w)) return true;
      const auto next = detail::adjoin<Word>(s, static_cast<Word>(w));
      return win(next, depth) != 0;
    };
    const Wide p = pow2_floor(hi);
    const bool has_p = p >= lo;
    if (has_p && !good(p)) {
      failing = p;
      return Check::Fail;
    }
    // Count answers outside the bad runs before committing to the sweep.
    Wide open = hi - lo + 1;
    for (const auto& r : bad) {
      if (r.hi < lo || r.lo > hi) continue;
      open -= std::min(r.hi, hi) - std::max(r.lo, lo) + 1;
    }
    if (open > cfg.response_cap) return Check::Capped;
    auto it = std::lower_bound(bad.begin(), bad.end(), lo,
                               [](const detail::Run<Wide>& r, Wide v) { return r.hi < v; });
    for (Wide w = lo; w <= hi; ++w) {
      while (it != bad.end() && it->hi < w) ++it;
      if (it != bad.end() && it->lo <= w) {
        w = it->hi;
        continue;
      }
      if (has_p && w == p) continue;
      const auto next = detail::adjoin<Word>(s, static_cast<Word>(w));
      if (win(next, depth) == 0) {
        failing = w;
        return Check::Fail;
      }
    }
    return Check::Ok;
  }

  /// Opening of a win within `depth` rounds from the (not lost) position s, or 0.
  Wide win(const std::vector<Word>& s, int depth) {
    if (depth <= 0) return 0;
    if (depth == 1) return one(s);
    Key key{s, depth};
    if (auto hit = memo_get(key)) return *hit;
    Wide found = one(s);
    if (found == 0) found = search(s, depth);
    memo_put(std::move(key), found);
    return found;
  }

  Wide search(const std::vector<Word>& s, int depth) {
    const WordRuns bad = detail::bad_runs<WordTraits>(s);
    Wide failing = 0;
    std::vector<Wide> tried;
    if (cfg.structural_moves) {
      tried = structural(s);
      for (Wide x : tried) {
        tick();
        if (answers_covered(s, bad, x / 2 + 1, x, depth - 1, failing) == Check::Ok) return x;
      }
    }
    if (!cfg.even_only) {
      tick();
      if (answers_covered(s, bad, 1, 1, depth - 1, failing) == Check::Ok) return 1;
    }
    Wide m = 1;
    while (2 * m <= bound) {
      const Wide x = 2 * m;
      if (std::binary_search(tried.begin(), tried.end(), x)) {
        ++m;
        continue;
      }
      tick();
      switch (answers_covered(s, bad, m + 1, x, depth - 1, failing)) {
        case Check::Ok: return x;
        // Every even challenge whose answers include `failing` fails too.
        case Check::Fail: m = std::max(m + 1, failing); break;
        case Check::Capped: ++m; break;
      }
    }
    return 0;
  }
};

Solver::Solver(SolverConfig cfg) : impl_(std::make_unique<Impl>(std::move(cfg))) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

const SolverConfig& Solver::config() const { return impl_->cfg; }
std::uint64_t Solver::nodes() const { return impl_->total_nodes; }
std::size_t Solver::memo_size() const { return impl_->memo.size(); }

SolveVerdict Solver::solve(const Position& pos, int max_rounds) {
  if (max_rounds < 0) throw PreconditionError("max_rounds must be >= 0");
  Impl& im = *impl_;
  SolveVerdict v;
  v.bound_used = im.bound_for(pos);
  im.call_nodes = 0;
  const std::uint64_t before = im.total_nodes;
  auto finish = [&](SolveVerdict::Kind k, int rounds, std::optional<Natural> opening = std::nullopt) {
    v.kind = k;
    v.rounds = rounds;
    v.opening = std::move(opening);
    v.nodes = im.total_nodes - before;
    return v;
  };

  if (is_lost(pos)) return finish(SolveVerdict::Kind::ChallengerWins, 0);
  if (max_rounds == 0) return finish(SolveVerdict::Kind::PoweratorSurvivesProven, 0);
  ++im.total_nodes;
  if (auto w = wins_in_one(pos)) return finish(SolveVerdict::Kind::ChallengerWins, 1, std::move(w));
  if (max_rounds == 1) return finish(SolveVerdict::Kind::PoweratorSurvivesProven, 1);
  if (all_powers_of_two(pos) || !pos.fits_word()) return finish(SolveVerdict::Kind::Unknown, max_rounds);

  im.set_bound(v.bound_used);
  const auto words = pos.to_words();
  try {
    for (int d = 2; d <= max_rounds; ++d) {
      if (const Wide x = im.win(words, d)) return finish(SolveVerdict::Kind::ChallengerWins, d, to_natural(x));
    }
  } catch (const OutOfNodes&) {
    return finish(SolveVerdict::Kind::BudgetExhausted, max_rounds);
  }
  return finish(SolveVerdict::Kind::Unknown, max_rounds);
}

std::optional<std::optional<Natural>> Solver::winning_move(const Position& pos, int rounds) {
  if (is_lost(pos)) return std::optional<Natural>{};
  if (rounds <= 0) return std::nullopt;
  Impl& im = *impl_;
  im.call_nodes = 0;
  ++im.total_nodes;
  if (auto w = wins_in_one(pos)) return std::optional<Natural>(std::move(*w));
  if (rounds == 1 || all_powers_of_two(pos) || !pos.fits_word()) return std::nullopt;
  // A child position keeps the bound chosen for the root of the current solve.
  if (im.bound == 0) im.set_bound(im.bound_for(pos));
  try {
    if (const Wide x = im.win(pos.to_words(), rounds)) return std::optional<Natural>(to_natural(x));
  } catch (const OutOfNodes&) {
    throw BudgetExceeded("winning_move: node budget exhausted at " + pos.to_string());
  }
  return std::nullopt;
}

SolveVerdict bounded_value(const Position& pos, int max_rounds, const SolverConfig& cfg) {
  Solver solver(cfg);
  return solver.solve(pos, max_rounds);
}

// ---------------------------------------------------------------------------
// Replay

namespace {

struct Replayer {
  Solver& solver;
  std::uint64_t budget;
  ReplayReport rep;

  bool fail(std::string why) {
    rep.ok = false;
    rep.failure = std::move(why);
    return false;
  }

  bool run(const Position& pos, int left, int used) {
    if (++rep.nodes > budget) return fail("replay node budget exhausted");
    if (is_lost(pos)) {
      rep.max_rounds_seen = std::max(rep.max_rounds_seen, used);
      return true;
    }
    if (left == 0) return fail("position " + pos.to_string() + " not lost after the claimed rounds");
    std::optional<std::optional<Natural>> mv;
    try {
      mv = solver.winning_move(pos, left);
    } catch (const BudgetExceeded& e) {
      return fail(e.what());
    }
    if (!mv || !*mv) return fail("no winning move found at " + pos.to_string());
    const ResponseInterval iv = response_interval(**mv);
    for (Natural u = iv.lo; u <= iv.hi; ++u) {
      if (!run(apply(pos, u), left - 1, used + 1)) return false;
    }
    return true;
  }
};

}  // namespace

ReplayReport replay_exhaustive(Solver& solver, const Position& start, int rounds, std::uint64_t node_budget) {
  Replayer r{solver, node_budget, {}};
  r.run(start, rounds, 0);
  return r.rep;
}

// ---------------------------------------------------------------------------
// Intervals

ComplexityInterval complexity_interval(const Natural& u, const SolverConfig& cfg, int max_rounds) {
  if (u < 1) throw PreconditionError("complexity_interval: u must be >= 1");
  ComplexityInterval ci;
  ci.u = u;
  if (nt::is_oddless(u)) {
    ci.lower_method = "strategy";
    ci.upper_method = "strategy";
    ci.exact = true;
    ci.upper_bounds = bounds::combine_upper(u);
    return ci;
  }
  const Position pos{u};
  if (auto w = wins_in_one(pos)) {
    ci.lower = 1;
    ci.lower_method = "exact_depth1";
    ci.upper = 1;
    ci.upper_method = "solver";
    ci.exact = true;
    ci.witness_opening = std::move(w);
    const std::int64_t one[] = {1};
    ci.upper_bounds = bounds::combine_upper(u, one);
    return ci;
  }
  ci.lower = 2;
  ci.lower_method = "exact_depth1";
  const SymbolicPow s = SymbolicPow::from_natural(u);
  const int cert = certify::best_single_certificate(s, certify::dnb_table(s.v, 4));
  if (cert > 2) {
    ci.lower = cert;
    ci.lower_method = "certificate";
  }

  std::vector<std::int64_t> hits;
  if (max_rounds >= 2) {
    const SolveVerdict v = bounded_value(pos, max_rounds, cfg);
    if (v.challenger_wins()) {
      hits.push_back(v.rounds);
      ci.witness_opening = v.opening;
    }
  }
  ci.upper_bounds = bounds::combine_upper(s, hits);
  ci.upper = ci.upper_bounds.best;
  ci.upper_method = ci.upper_bounds.best_source;
  ci.exact = ci.upper && ci.lower && *ci.upper == *ci.lower;
  return ci;
}

}  // namespace powg::exact

#include "powg/strategies.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <mutex>

#include "powg/error.hpp"

namespace powg::strategies {
namespace {

struct Suspend {
  Natural challenge;
};

Natural pow_nat(const Natural& b, const Natural& e) {
  if (!mpz_fits_ulong_p(e.get_mpz_t())) throw PreconditionError("exponent too large: " + e.get_str());
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e.get_ui());
  return out;
}

Natural pow2(std::uint64_t k) {
  Natural out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), k);
  return out;
}

Natural ceil_div(const Natural& a, const Natural& b) {
  Natural q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void require_member(const Script& s, const Natural& u, const std::string& who) {
  if (!s.position().contains(u)) {
    throw PreconditionError(who + ": start position " + s.position().to_string() + " does not contain " + u.get_str());
  }
}

/// Forces 8 (challenge 8) or 4 (challenge 6); other answers in 5..7 lose to 2.
bool force_small(Script& s, int target) {
  const Natural v = s.ask(target == 8 ? 8 : 6);
  if (s.lost()) return false;
  if (v != target) {
    s.ask(2);
    return false;
  }
  return true;
}

void large16_body(Script& s, const Natural& u) {
  if (!force_small(s, 8)) return;
  s.ask(ceil_div(u, 8) - 1);
}

void odd_non_square_body(Script& s, const Natural& u) {
  Natural root;
  mpz_sqrt(root.get_mpz_t(), u.get_mpz_t());
  const Natural v = s.ask(root);
  if (s.lost()) return;
  s.ask(ceil_div(u, v) - 1);
}

bool large16_applies(const Natural& u) { return u > 8 && !mpz_divisible_ui_p(u.get_mpz_t(), 16); }

bool odd_non_square_applies(const Natural& u) {
  Natural odd = u;
  mpz_remove(odd.get_mpz_t(), odd.get_mpz_t(), Natural(2).get_mpz_t());
  return mpz_perfect_square_p(odd.get_mpz_t()) == 0;
}

/// The prefix product x = prod_{j<i} p_j^e_j for the least i with p_i > 2x.
std::optional<Natural> gap_prefix(const Natural& u) {
  Natural x = 1;
  for (const auto& pp : nt::factorize(u)) {
    if (pp.prime > 2 * x) return x;
    Natural pe;
    mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    x *= pe;
  }
  return std::nullopt;
}

void small_body(Script& s, const Natural& u) {
  if (u == 3) {
    s.ask(1);
    if (!s.lost()) s.ask(2);
  } else if (u > 4 && u < 8) {
    s.ask(2);
  } else if (u > 8 && u < 64) {
    if (u == 48) {
      odd_non_square_body(s, u);
    } else {
      large16_body(s, u);
    }
  } else if (u > 64 && u < 128) {
    force_small(s, 8);
  } else if (u > 128 && u < 256) {
    if (force_small(s, 4)) s.ask(32);
  } else if (u > 256 && u < 512) {
    if (force_small(s, 4)) s.ask(31);
  } else if (u > 512 && u < 1024) {
    if (force_small(s, 8)) s.ask(127);
  } else if (u > 1024 && u < 2048) {
    if (force_small(s, 4)) s.ask(32);
  } else if (u > 2048 && u < 2304) {
    if (large16_applies(u)) {
      large16_body(s, u);
    } else {
      odd_non_square_body(s, u);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Script

Script::Script(const Position& start, std::span<const Round> history) : history_(history), pos_(start) {}

Natural Script::ask(const Natural& x) {
  if (next_ < history_.size()) {
    const Round& r = history_[next_];
    if (r.challenge != x) {
      throw PreconditionError("history diverges from strategy: recorded challenge " + r.challenge.get_str() +
                              ", strategy plays " + x.get_str());
    }
    ++next_;
    pos_ = apply(pos_, r.response);
    return r.response;
  }
  throw Suspend{x};
}

bool Script::lost() const { return is_lost(pos_); }

std::optional<Natural> ChallengerStrategy::next(const Position& start, std::span<const Round> history) const {
  Script s(start, history);
  try {
    body(s);
  } catch (Suspend& m) {
    return std::move(m.challenge);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Powerator

Natural powerator_pow2(const Natural& x) {
  if (x < 1) throw PreconditionError("challenge must be >= 1");
  return pow2(nt::floor_log2(x));
}

PoweratorStrategy pow2_powerator() {
  return {"pow2", [](const Natural& x, const Position&) { return powerator_pow2(x); }};
}

PoweratorStrategy bad_set_avoiding_powerator() {
  return {"bad_set_avoiding", [](const Natural& x, const Position& pos) {
            const Natural p = powerator_pow2(x);
            if (is_lost(pos)) return p;
            const exact::BadSet bad = exact::bad_set(pos);
            if (!bad.contains(p)) return p;
            const ResponseInterval iv = response_interval(x);
            Natural w = iv.hi;
            auto it = bad.runs.end();
            while (w >= iv.lo) {
              it = std::upper_bound(bad.runs.begin(), bad.runs.end(), w,
                                    [](const Natural& v, const exact::NaturalRun& r) { return v < r.lo; });
              if (it == bad.runs.begin() || std::prev(it)->hi < w) return w;
              w = std::prev(it)->lo - 1;
            }
            return p;
          }};
}

PoweratorStrategy random_powerator(std::uint64_t seed) {
  auto state = std::make_shared<gmp_randclass>(gmp_randinit_mt);
  state->seed(Natural(static_cast<unsigned long>(seed)));
  return {"random(" + std::to_string(seed) + ")", [state](const Natural& x, const Position&) {
            const ResponseInterval iv = response_interval(x);
            return Natural(iv.lo + state->get_z_range(iv.count()));
          }};
}

Natural survivor_2304(const Natural& x) {
  const ResponseInterval iv = response_interval(x);
  std::optional<Natural> best;
  auto offer = [&](const Natural& c) {
    if (iv.contains(c) && (!best || c > *best)) best = c;
  };
  for (Natural base = 1; base <= 16 * x; base *= 2304) {
    for (int l = -4; l <= 4; ++l) {
      if (l >= 0) {
        offer(base * pow2(static_cast<std::uint64_t>(l)));
      } else if (mpz_divisible_2exp_p(base.get_mpz_t(), static_cast<unsigned long>(-l))) {
        offer(base / pow2(static_cast<std::uint64_t>(-l)));
      }
    }
    const Natural half = 48 * base;
    offer(half);
    offer(2 * half);
    offer(half / 2);
  }
  return best ? *best : powerator_pow2(x);
}

PoweratorStrategy survivor_2304_powerator() {
  return {"survivor_2304", [](const Natural& x, const Position&) { return survivor_2304(x); }};
}

// ---------------------------------------------------------------------------
// Challenger

std::int64_t binary_search_bound(const Natural& n) {
  return static_cast<std::int64_t>(nt::ceil_log2(Natural(static_cast<unsigned long>(nt::floor_log2(n))))) + 1;
}

std::int64_t root_probe_bound(const Natural& d) { return binary_search_bound(d) + 3; }

Body binary_search_body(const Natural& u, const Natural& n) {
  if (u < 2 || n < 2) throw PreconditionError("binary search needs u >= 2 and n >= 2");
  return [u, n](Script& s) {
    require_member(s, u, "binary_search");
    const Natural un = pow_nat(u, n);
    const auto& elems = s.position().responses();
    const auto v = std::find_if(elems.begin(), elems.end(), [&](const Natural& x) { return un < x && x < 2 * un; });
    if (v == elems.end()) {
      throw PreconditionError("binary_search: no v with " + u.get_str() + "^" + n.get_str() + " < v < 2*" +
                              u.get_str() + "^" + n.get_str() + " in " + s.position().to_string());
    }
    if (s.lost()) return;
    const std::uint64_t k = nt::floor_log2(n);
    auto e = [&](std::uint64_t m) { return Natural(n >> static_cast<mp_bitcnt_t>(m)); };
    std::uint64_t i = 0;
    std::uint64_t j = k;
    while (j - i > 1) {
      const std::uint64_t mid = (i + j) / 2;
      const Natural t = pow_nat(u, e(mid));
      const Natural w = s.ask(forcing_challenge(t));
      if (s.lost()) return;
      if (w == t) {
        j = mid;
      } else {
        i = mid;
      }
    }
    // Now u^e(i) < v' < 2u^e(i) and u' = u^e(j) is present, e(i) = 2e(j) or 2e(j) + 1.
    if (e(i) == 2 * e(j)) return;
    // Forcing u * u' yields u'' with u u' < u'' < 2 u u', or u'' = u u' and u' u'' = u^e(i).
    s.ask(forcing_challenge(u * pow_nat(u, e(j))));
  };
}

ChallengerStrategy challenger_binary_search(const Natural& u, const Natural& n) {
  return {"binary_search(" + u.get_str() + "," + n.get_str() + ")", binary_search_bound(n), binary_search_body(u, n)};
}

ChallengerStrategy challenger_boost(const Natural& u, const Natural& n, Body continuation,
                                    std::optional<std::int64_t> continuation_bound) {
  if (u < 2 || n < 2) throw PreconditionError("boost needs u >= 2 and n >= 2");
  std::optional<std::int64_t> claimed;
  if (continuation_bound) claimed = std::max(*continuation_bound + 1, binary_search_bound(n) + 1);
  Body body = [u, n, continuation](Script& s) {
    require_member(s, u, "boost");
    const Natural t = pow_nat(u, n);
    const Natural w = s.ask(forcing_challenge(t));
    if (s.lost()) return;
    if (w == t) {
      if (continuation) continuation(s);
      return;
    }
    binary_search_body(u, n)(s);
  };
  return {"boost(" + u.get_str() + "," + n.get_str() + ")", claimed, std::move(body)};
}

ChallengerStrategy challenger_root_probe(const Natural& u) {
  if (u < 1 || nt::is_oddless(u)) throw PreconditionError("root_probe: " + u.get_str() + " is a power of two");
  const auto dec = std::get<nt::OddPowerForm>(nt::power_decompose(u));
  const Natural d = nt::least_nondivisor(Natural(static_cast<unsigned long>(dec.exponent)));
  Body body = [u, d](Script& s) {
    require_member(s, u, "root_probe");
    const Natural w = s.ask(nt::integer_root(u, d.get_ui()));
    if (s.lost()) return;
    // 2^i w^d < u < 2^(i+1) w^d, since the odd part of u is not a d-th power.
    const Natural wd = pow_nat(w, d);
    const std::uint64_t i = nt::floor_log2(Natural(u / wd));
    const Natural low = pow2(i);
    const Natural z = s.ask(2 * low - 1);
    if (s.lost()) return;
    if (z == low) {
      const Natural w2 = s.ask(forcing_challenge(wd));
      if (s.lost() || w2 == wd) return;
      binary_search_body(w, d)(s);
      return;
    }
    s.ask(2);
    if (s.lost()) return;
    if (i == 1) {
      s.ask(1);
    } else {
      binary_search_body(2, Natural(static_cast<unsigned long>(i)))(s);
    }
  };
  return {"root_probe(" + u.get_str() + ")", root_probe_bound(d), std::move(body)};
}

Natural challenger_halving(const Natural& u) {
  if (u < 2) throw PreconditionError("halving needs u >= 2");
  return u - 1;
}

namespace {

void halving_body(Script& s, const Natural& u, const Body& continuation) {
  require_member(s, u, "halving");
  const Natural v = s.ask(challenger_halving(u));
  if (s.lost()) return;
  if (2 * v != u) {
    s.ask(nondivisor_punish(v, u));
    return;
  }
  if (continuation) {
    continuation(s);
  } else if (!nt::is_oddless(v)) {
    halving_body(s, v, {});
  }
}

}  // namespace

ChallengerStrategy challenger_halving_strategy(const Natural& u, Body continuation) {
  if (u < 2) throw PreconditionError("halving needs u >= 2");
  std::optional<std::int64_t> claimed;
  if (!continuation && !nt::is_oddless(u)) claimed = static_cast<std::int64_t>(nt::nu_p(2, u)) + 2;
  Body body = [u, continuation](Script& s) { halving_body(s, u, continuation); };
  return {"halving(" + u.get_str() + ")", claimed, std::move(body)};
}

std::string to_string(C2Case c) {
  switch (c) {
    case C2Case::Large16: return "large16";
    case C2Case::OddNonSquare: return "odd_non_square";
    case C2Case::Small: return "small";
    case C2Case::Gap: return "gap";
  }
  return "?";
}

std::vector<C2Case> c2_cases(const Natural& u) {
  std::vector<C2Case> out;
  if (u < 1 || nt::is_oddless(u)) return out;
  if (u < 2304) out.push_back(C2Case::Small);
  if (large16_applies(u)) out.push_back(C2Case::Large16);
  if (odd_non_square_applies(u)) out.push_back(C2Case::OddNonSquare);
  if (gap_prefix(u)) out.push_back(C2Case::Gap);
  return out;
}

ChallengerStrategy challenger_c2(const Natural& u, std::optional<C2Case> which) {
  const auto cases = c2_cases(u);
  if (cases.empty()) throw PreconditionError("challenger_c2: no case applies to " + u.get_str());
  const C2Case c = which.value_or(cases.front());
  if (std::find(cases.begin(), cases.end(), c) == cases.end()) {
    throw PreconditionError("challenger_c2: case " + to_string(c) + " does not apply to " + u.get_str());
  }
  Body body;
  switch (c) {
    case C2Case::Small: body = [u](Script& s) { require_member(s, u, "c2"); small_body(s, u); }; break;
    case C2Case::Large16: body = [u](Script& s) { require_member(s, u, "c2"); large16_body(s, u); }; break;
    case C2Case::OddNonSquare:
      body = [u](Script& s) { require_member(s, u, "c2"); odd_non_square_body(s, u); };
      break;
    case C2Case::Gap: {
      const Natural x = *gap_prefix(u);
      body = [u, x](Script& s) {
        require_member(s, u, "c2");
        const Natural w = s.ask(2 * x);
        if (s.lost()) return;
        s.ask(nondivisor_punish(w, u));
      };
      break;
    }
  }
  return {"c2_" + to_string(c) + "(" + u.get_str() + ")", 2, std::move(body)};
}

ChallengerStrategy solver_challenger(std::shared_ptr<exact::Solver> solver, int rounds) {
  auto lock = std::make_shared<std::mutex>();
  Body body = [solver, rounds, lock](Script& s) {
    while (!s.lost()) {
      const int left = rounds - static_cast<int>(s.rounds_played());
      if (left <= 0) return;
      std::optional<std::optional<Natural>> mv;
      {
        const std::lock_guard<std::mutex> guard(*lock);
        mv = solver->winning_move(s.position(), left);
      }
      if (!mv || !*mv) return;
      s.ask(**mv);
    }
  };
  return {"solver(" + std::to_string(rounds) + ")", rounds, std::move(body)};
}

}  // namespace powg::strategies

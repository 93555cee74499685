#include "powg/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "powg/axioms.hpp"
#include "powg/certify.hpp"
#include "powg/directed_log.hpp"
#include "powg/error.hpp"
#include "powg/exactsolve.hpp"
#include "powg/psi.hpp"
#include "powg/strategies.hpp"

namespace powg::reproduce {
namespace {

using Clock = std::chrono::steady_clock;

Natural nat(std::uint64_t x) { return Natural(static_cast<unsigned long>(x)); }

bool is_pow2(std::uint64_t u) { return u != 0 && (u & (u - 1)) == 0; }

// Runs f(i) for every i in [lo, hi), interleaved over `jobs` threads, and
// returns the indices where f was false, in increasing order.
std::vector<std::uint64_t> failing(std::uint64_t lo, std::uint64_t hi, unsigned jobs,
                                   const std::function<bool(std::uint64_t)>& f) {
  jobs = std::max(1u, jobs);
  auto part = [&](unsigned j) {
    std::vector<std::uint64_t> bad;
    for (std::uint64_t i = lo + j; i < hi; i += jobs) {
      if (!f(i)) bad.push_back(i);
    }
    return bad;
  };
  std::vector<std::future<std::vector<std::uint64_t>>> fs;
  for (unsigned j = 0; j < jobs; ++j) fs.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, part, j));
  std::vector<std::uint64_t> out;
  for (auto& f2 : fs) {
    auto b = f2.get();
    out.insert(out.end(), b.begin(), b.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string list(const std::vector<std::uint64_t>& xs, std::size_t max = 10) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size() && i < max; ++i) os << (i ? ", " : "") << xs[i];
  if (xs.size() > max) os << ", ... (" << xs.size() << " total)";
  os << "}";
  return os.str();
}

Check none_failing(std::string name, const std::vector<std::uint64_t>& bad, std::string ok_detail) {
  return {std::move(name), bad.empty(), bad.empty() ? std::move(ok_detail) : "failed at " + list(bad)};
}

// Independent lost test on machine words: all triples, indices may coincide.
bool lost_words(const std::vector<std::uint64_t>& s) {
  for (auto h : s) {
    for (auto i : s) {
      for (auto j : s) {
        const std::uint64_t p = i * j;
        if (p < h && h < 2 * p) return true;
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

SuiteResult c1(const Options& o) {
  SuiteResult r{"c1", "one-round wins from a single response"};
  constexpr std::uint64_t kLimit = 50'000;
  std::set<std::uint64_t> found;
  const auto bad = failing(1, kLimit + 1, o.jobs, [](std::uint64_t u) {
    return !exact::wins_in_one(Position{nat(u)});
  });
  found.insert(bad.begin(), bad.end());
  const std::set<std::uint64_t> expected{5, 6, 7, 17};
  r.checks.push_back({"c(u) = 1 iff u in {5, 6, 7, 17} for u <= 50000", found == expected,
                      "found " + list({found.begin(), found.end()})});
  for (std::uint64_t u : expected) {
    exact::Solver s;
    const auto rep = exact::replay_exhaustive(s, Position{nat(u)}, 1);
    r.checks.push_back({"one-round win from " + std::to_string(u) + " replays", rep.ok, rep.failure});
  }
  return r;
}

SuiteResult c2(const Options& o) {
  SuiteResult r{"c2", "two-round wins below 2304"};
  constexpr std::uint64_t kLimit = 2304;
  const auto solver_bad = failing(2, kLimit, o.jobs, [](std::uint64_t u) {
    if (is_pow2(u)) return true;
    exact::Solver s;
    const Position p{nat(u)};
    const auto v = s.solve(p, 2);
    return v.challenger_wins() && v.rounds <= 2 && exact::replay_exhaustive(s, p, v.rounds).ok;
  });
  const auto strategy_bad = failing(2, kLimit, o.jobs, [](std::uint64_t u) {
    if (is_pow2(u)) return true;
    const auto rep = strategies::verify_round_bound(strategies::challenger_c2(nat(u)), Position{nat(u)}, 2);
    return rep.ok();
  });
  std::vector<std::uint64_t> neither;
  std::set_intersection(solver_bad.begin(), solver_bad.end(), strategy_bad.begin(), strategy_bad.end(),
                        std::back_inserter(neither));
  r.checks.push_back(none_failing("c(u) <= 2 for non-powers u < 2304 (solver or two-round strategy)", neither,
                                  "solver misses " + std::to_string(solver_bad.size()) + ", strategy misses " +
                                      std::to_string(strategy_bad.size())));
  r.checks.push_back(none_failing("solver proof with exhaustive replay", solver_bad, "all non-powers"));
  r.checks.push_back(none_failing("two-round strategy, exhaustive Powerator", strategy_bad, "all non-powers"));
  const auto not_one = failing(2, kLimit, o.jobs, [](std::uint64_t u) {
    if (is_pow2(u) || u == 5 || u == 6 || u == 7 || u == 17) return true;
    return !exact::wins_in_one(Position{nat(u)});
  });
  r.checks.push_back(none_failing("no one-round win outside {5, 6, 7, 17}, so c(u) = 2", not_one, "c(u) = 2"));
  return r;
}

SuiteResult c2304(const Options&) {
  SuiteResult r{"c2304", "c(2304) = 3"};
  const Position p{Natural(2304)};
  exact::Solver s;
  const auto v = s.solve(p, 3);
  r.checks.push_back({"solver wins from 2304 within 3 rounds", v.challenger_wins() && v.rounds <= 3,
                      exact::to_string(v.kind) + " in " + std::to_string(v.rounds) + ", opening " +
                          (v.opening ? v.opening->get_str() : "-")});
  if (v.challenger_wins()) {
    const auto rep = exact::replay_exhaustive(s, p, v.rounds);
    r.checks.push_back({"exhaustive replay of the 3-round win", rep.ok,
                        rep.ok ? std::to_string(rep.nodes) + " nodes" : rep.failure});
  }
  r.checks.push_back({"no one-round win from 2304", !exact::wins_in_one(p), ""});
  constexpr std::uint64_t kOpenings = 100'000;
  std::vector<std::uint64_t> bad;
  for (std::uint64_t x = 1; x <= kOpenings; ++x) {
    const Natural w = strategies::survivor_2304(nat(x));
    if (!is_legal_response(nat(x), w) || exact::wins_in_one(Position{Natural(2304), w})) bad.push_back(x);
  }
  r.checks.push_back(none_failing("survivor answer leaves no one-round win, openings <= 100000", bad,
                                  "bounded evidence for c(2304) >= 3"));
  return r;
}

SuiteResult bprime(const Options& o) {
  SuiteResult r{"bprime", "recurrence constants"};
  const auto t = certify::dnb_table(3, o.extended ? 6 : 5);
  const Natural b4 = t.row(4).Bprime;
  r.checks.push_back({"B'_4 = 99353223", b4 == 99'353'223, b4.get_str()});
  const Natural b5 = t.row(5).Bprime;
  // |B'_5 / 6.333e46 - 1| < 1e-3  <=>  |1000 B'_5 - 1000 T| < T
  Natural target;
  mpz_ui_pow_ui(target.get_mpz_t(), 10, 43);
  target *= 6333;
  const Natural diff = abs(Natural(1000 * b5 - 1000 * target));
  r.checks.push_back({"B'_5 within 0.1% of 6.333e46", diff < target, b5.get_str()});
  const unsigned bases[] = {4, 3, 2};
  const int cmp = dlog::compare_nested_log(b5, bases, mpq_class(19865, 10000));
  r.checks.push_back({"log log_3 log_4 B'_5 < 1.9865", cmp < 0, "sign " + std::to_string(cmp)});
  const mpq_class a3 = certify::alpha(3);
  r.checks.push_back({"alpha_3 = 2218/2187", a3 == mpq_class(2218, 2187), a3.get_str()});
  if (o.extended) {
    r.checks.push_back({"D_6 computed", t.kmax() == 6,
                        std::to_string(mpz_sizeinbase(t.row(6).D.get_mpz_t(), 10)) + " digits"});
  }
  return r;
}

SuiteResult factorial(const Options& o) {
  SuiteResult r{"factorial", "k+1 <= c(6^(m!)) <= k+4 for m = 2^(2^k)"};
  const int kmax = o.extended ? 4 : 3;
  for (int k = 0; k <= kmax; ++k) {
    const auto rep = certify::factorial_sandwich(k);
    const bool legendre = std::all_of(rep.primes.begin(), rep.primes.end(),
                                      [](const certify::PrimeCheck& p) { return Natural(static_cast<unsigned long>(p.nu_d)) <= p.nu_r; });
    const bool ok = rep.divisibility && legendre && rep.exponent && rep.certified_lower == k + 1 &&
                    rep.upper == k + 4 && rep.d == nt::next_prime_after(nat(rep.m));
    std::ostringstream os;
    os << "m=" << rep.m << " lower=" << rep.certified_lower << " upper=" << rep.upper << " d=" << rep.d
       << " primes=" << rep.primes.size();
    r.checks.push_back({"k=" + std::to_string(k), ok, os.str()});
  }
  return r;
}

SuiteResult strategies_suite(const Options& o) {
  SuiteResult r{"strategies", "strategy round bounds against every Powerator answer"};
  const auto probe_bad = failing(3, 301, o.jobs, [](std::uint64_t u) {
    if (is_pow2(u)) return true;
    const auto c = strategies::challenger_root_probe(nat(u));
    const Natural d = nt::least_nondivisor(Natural(static_cast<unsigned long>(
        std::get<nt::OddPowerForm>(nt::power_decompose(nat(u))).exponent)));
    const std::int64_t bound = strategies::root_probe_bound(d);
    return c.claimed_bound && *c.claimed_bound <= bound &&
           strategies::verify_round_bound(c, Position{nat(u)}, bound).ok();
  });
  r.checks.push_back(none_failing("root probe within ceil(log floor(log d)) + 4, non-powers u <= 300", probe_bad,
                                  "zero violations"));
  for (std::uint64_t n = 2; n <= 8; ++n) {
    Natural un;
    mpz_ui_pow_ui(un.get_mpz_t(), 3, n);
    const auto c = strategies::challenger_binary_search(3, nat(n));
    const std::int64_t bound = strategies::binary_search_bound(nat(n));
    const std::uint64_t lo = un.get_ui() + 1, hi = 2 * un.get_ui();
    const auto bad = failing(lo, hi, o.jobs, [&](std::uint64_t v) {
      return strategies::verify_round_bound(c, Position{Natural(3), nat(v)}, bound).ok();
    });
    r.checks.push_back(none_failing("binary search u=3 n=" + std::to_string(n) + " within " + std::to_string(bound),
                                    bad, std::to_string(hi - lo) + " starting positions"));
  }
  return r;
}

SuiteResult powerator(const Options& o) {
  SuiteResult r{"powerator", "powers-of-two Powerator never loses"};
  constexpr std::uint64_t kGames = 10'000;
  constexpr int kRounds = 20;
  const auto p = strategies::pow2_powerator();
  const auto bad = failing(0, kGames, o.jobs, [&](std::uint64_t g) {
    std::mt19937_64 rng(o.seed + g);
    std::vector<Natural> start;
    const int size = static_cast<int>(rng() % 4);
    for (int i = 0; i < size; ++i) start.push_back(Natural(1) << static_cast<mp_bitcnt_t>(rng() % 24));
    const std::uint64_t game_seed = rng();
    strategies::ChallengerStrategy c{"random", std::nullopt, [game_seed](strategies::Script& s) {
                                       std::mt19937_64 g2(game_seed);
                                       for (int i = 0; i < kRounds; ++i) {
                                         const unsigned bits = 1 + static_cast<unsigned>(g2() % 48);
                                         s.ask(nat(1 + (g2() & ((std::uint64_t{1} << bits) - 1))));
                                       }
                                     }};
    const auto t = strategies::play_match(c, p, kRounds, Position(start));
    return t.outcome == Outcome::PoweratorSurvives && t.rounds_used == static_cast<std::size_t>(kRounds);
  });
  r.checks.push_back(none_failing("10000 seeded random 20-round games, zero losses", bad,
                                  "seed " + std::to_string(o.seed)));
  return r;
}

SuiteResult oracles(const Options& o) {
  SuiteResult r{"oracles", "library against brute force"};
  // Bad sets of positions inside {1..40} with at most three elements. Every
  // bad answer is below 2 * 40^2.
  constexpr std::uint64_t kTop = 40, kScan = 2 * kTop * kTop;
  std::vector<std::vector<std::uint64_t>> positions;
  for (std::uint64_t a = 1; a <= kTop; ++a) {
    positions.push_back({a});
    for (std::uint64_t b = a + 1; b <= kTop; ++b) {
      positions.push_back({a, b});
      for (std::uint64_t c = b + 1; c <= kTop; ++c) positions.push_back({a, b, c});
    }
  }
  const auto bs_bad = failing(0, positions.size(), o.jobs, [&](std::uint64_t i) {
    auto s = positions[i];
    if (lost_words(s)) return true;
    std::vector<Natural> ns;
    for (auto x : s) ns.push_back(nat(x));
    const auto bs = exact::bad_set(Position(ns));
    if (!bs.runs.empty() && bs.runs.back().hi >= kScan) return false;
    s.push_back(0);
    for (std::uint64_t w = 1; w < kScan; ++w) {
      s.back() = w;
      if (lost_words(s) != bs.contains(nat(w))) return false;
    }
    return true;
  });
  r.checks.push_back(none_failing("bad_set, positions in {1..40} of size <= 3", bs_bad,
                                  std::to_string(positions.size()) + " positions"));

  // wins_in_one({u}) against every challenge up to 4u + 64.
  const auto w1_bad = failing(1, 2001, o.jobs, [](std::uint64_t u) {
    const std::uint64_t top = 4 * u + 64;
    std::vector<std::uint32_t> bad_prefix(top + 1, 0);
    for (std::uint64_t w = 1; w <= top; ++w) bad_prefix[w] = bad_prefix[w - 1] + (lost_words({u, w}) ? 1 : 0);
    std::optional<std::uint64_t> least;
    if (lost_words({u})) {
      least = 1;
    } else {
      for (std::uint64_t x = 1; x <= top && !least; ++x) {
        const std::uint64_t lo = x / 2 + 1;
        if (bad_prefix[x] - bad_prefix[lo - 1] == x - lo + 1) least = x;
      }
    }
    const auto got = exact::wins_in_one(Position{nat(u)});
    if (least) return got && *got == nat(*least);
    return !got || *got > nat(top);
  });
  r.checks.push_back(none_failing("wins_in_one({u}) for u <= 2000", w1_bad, "least winning challenge agrees"));

  std::vector<std::uint64_t> nu_bad;
  const auto primes = nt::primes_up_to(100);
  Natural fact = 1;
  for (std::uint64_t m = 1; m <= 500; ++m) {
    fact *= static_cast<unsigned long>(m);
    for (auto p : primes) {
      Natural rest;
      const auto e = mpz_remove(rest.get_mpz_t(), fact.get_mpz_t(), nat(p).get_mpz_t());
      if (nt::nu_p_factorial(nat(p), nat(m)) != nat(e)) nu_bad.push_back(m * 1000 + p);
    }
  }
  r.checks.push_back(none_failing("nu_p(m!) for p <= 100, m <= 500", nu_bad, "Legendre matches"));

  std::vector<std::uint64_t> lcm_bad;
  Natural acc = 1;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), n);
    if (nt::lcm_range(n) != acc) lcm_bad.push_back(n);
  }
  r.checks.push_back(none_failing("lcm{1..n} for n <= 1000", lcm_bad, "iterated lcm matches"));
  return r;
}

SuiteResult psi(const Options& o) {
  SuiteResult r{"psi", "0.916 n - 2.318 < psi(n) < 1.086 n"};
  std::vector<std::uint64_t> bad;
  nt::LcmSweep sweep(10'000);
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    sweep.advance_to(n);
    if (!nt::psi_within_nagura_bounds(nt::PsiValue(n, sweep.value()))) bad.push_back(n);
  }
  r.checks.push_back(none_failing("every n in [2, 10000]", bad, "inside the bounds"));

  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint64_t> dist(2, 1'000'000);
  std::vector<std::uint64_t> samples(1000);
  for (auto& s : samples) s = dist(rng);
  std::sort(samples.begin(), samples.end());
  std::vector<std::uint64_t> sbad;
  nt::LcmSweep big(1'000'000);
  for (auto n : samples) {
    big.advance_to(n);
    if (!nt::psi_within_nagura_bounds(nt::PsiValue(n, big.value()))) sbad.push_back(n);
  }
  r.checks.push_back(none_failing("1000 seeded samples up to 10^6", sbad, "seed " + std::to_string(o.seed)));
  return r;
}

SuiteResult axioms_suite(const Options& o) {
  SuiteResult r{"axioms", "powers of two satisfy the axioms on initial segments"};
  auto failed = [](const axioms::AxiomsReport& rep) {
    std::string names;
    for (const auto& c : rep.checks) {
      if (!c.passed) names += (names.empty() ? "" : ", ") + c.name;
    }
    return names.empty() ? std::string("all pass") : "failed: " + names;
  };
  const Natural n(1'000'000);
  const auto p2 = axioms::check_p2_axioms(n);
  r.checks.push_back({"P2 axioms on [0, 10^6)", p2.ok(), failed(p2)});
  const auto eq = axioms::check_pow2_equiv(Natural(100'000));
  r.checks.push_back({"oddless iff power of two on [0, 10^5)", eq.ok(), failed(eq)});
  const auto dw = axioms::check_divisor_windows(Natural(10'000));
  r.checks.push_back({"divisor windows for x <= 10^4", dw.ok(), failed(dw)});

  const auto base = axioms::SegmentModel::standard(n);
  const auto add_missed = failing(0, 101, o.jobs, [&](std::uint64_t x) {
    if (is_pow2(x)) return true;
    auto m = base;
    m.add(x);
    return !axioms::check_p2_axioms(m).ok();
  });
  r.checks.push_back(none_failing("adding any non-power <= 100 is detected", add_missed, "all detected"));
  const auto remove_missed = failing(0, 11, o.jobs, [&](std::uint64_t k) {
    auto m = base;
    m.remove(std::uint64_t{1} << k);
    return !axioms::check_p2_axioms(m).ok();
  });
  r.checks.push_back(none_failing("removing any power <= 2^10 is detected", remove_missed, "all detected"));
  return r;
}

using SuiteFn = SuiteResult (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& table() {
  static const std::vector<std::pair<std::string, SuiteFn>> t = {
      {"c1", c1},           {"c2", c2},
      {"c2304", c2304},     {"bprime", bprime},
      {"factorial", factorial}, {"strategies", strategies_suite},
      {"powerator", powerator}, {"oracles", oracles},
      {"psi", psi},         {"axioms", axioms_suite},
  };
  return t;
}

SuiteResult timed(const std::string& name, SuiteFn f, const Options& o) {
  const auto t0 = Clock::now();
  SuiteResult r;
  try {
    r = f(o);
  } catch (const std::exception& e) {
    r.suite = name;
    r.checks.push_back({"suite completed", false, e.what()});
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace

bool SuiteResult::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, _] : table()) n.push_back(k);
    return n;
  }();
  return names;
}

std::vector<SuiteResult> run(const std::string& suite, const Options& opts) {
  std::vector<SuiteResult> out;
  for (const auto& [name, f] : table()) {
    if (suite == "all" || suite == name) out.push_back(timed(name, f, opts));
  }
  if (out.empty()) throw PreconditionError("unknown suite '" + suite + "'");
  return out;
}

}  // namespace powg::reproduce

#include "powg/bounds.hpp"

#include <cmath>

#include "powg/error.hpp"

namespace powg::bounds {
namespace {

std::int64_t as_int(std::uint64_t x) { return static_cast<std::int64_t>(x); }

BoundEntry nondivisor_entry(const SymbolicPow& s) {
  const Natural d = s.least_nondivisor_of_r();
  BoundEntry e{"nondivisor", true, as_int(nt::ceil_log2(Natural(static_cast<unsigned long>(nt::floor_log2(d))))) + 4,
               "d=" + d.get_str(), ""};
  return e;
}

void collect(BoundReport& rep, std::span<const std::int64_t> solver_hits) {
  // Solver entries go first so that they win ties.
  std::vector<BoundEntry> all;
  for (auto h : solver_hits) all.push_back({"solver", true, h, "", ""});
  all.insert(all.end(), rep.entries.begin(), rep.entries.end());
  rep.entries = std::move(all);
  for (const auto& e : rep.entries) {
    if (!e.applicable) continue;
    if (!rep.best || e.value < *rep.best) {
      rep.best = e.value;
      rep.best_source = e.name;
    }
  }
}

}  // namespace

std::int64_t upper_nondivisor(const SymbolicPow& s) { return nondivisor_entry(s).value; }

std::int64_t upper_nondivisor(const Natural& u) { return upper_nondivisor(SymbolicPow::from_natural(u)); }

LogBounds upper_log_bounds(const SymbolicPow& s) {
  LogBounds out;
  const Natural c1 = s.ceil_log2_u();
  out.log_u = {"log_u", true, as_int(nt::iterated_ceil_log2(Natural(c1), 3)) + 4,
              "ceil_log2_u=" + c1.get_str(), ""};
  out.log_r = {"log_r", true, as_int(nt::iterated_ceil_log2(s.r, 3)) + 4, "r=" + s.r.get_str(), ""};
  // 2^(l+1) < 2^l v^r holds as soon as v^r > 2, which v >= 3 guarantees.
  const bool gap = s.v > 2;
  out.log_nu2 = {"log_nu2", gap, as_int(nt::iterated_ceil_log2(s.l, 3)) + 5, "nu2=" + s.l.get_str(),
              gap ? "" : "2^(nu2+1) >= u"};
  return out;
}

LogBounds upper_log_bounds(const Natural& u) { return upper_log_bounds(SymbolicPow::from_natural(u)); }

NuNuReport upper_nu_nu(const Natural& u) {
  if (nt::is_oddless(u)) throw PreconditionError("upper_nu_nu: " + u.get_str() + " is a power of two");
  Natural odd = u;
  mpz_remove(odd.get_mpz_t(), odd.get_mpz_t(), Natural(2).get_mpz_t());
  NuNuReport rep;
  bool have = false;
  for (const auto& pp : nt::factorize(odd)) {
    const Natural e = static_cast<unsigned long>(pp.exponent);
    std::vector<Natural> qs;
    for (const auto& qq : nt::factorize(e)) qs.push_back(qq.prime);
    Natural q = 2;
    while (mpz_divisible_p(e.get_mpz_t(), q.get_mpz_t())) q = nt::next_prime_after(q);
    qs.push_back(q);
    for (const auto& qv : qs) {
      NuNuTerm t;
      t.p = pp.prime;
      t.q = qv;
      t.nu = nt::nu_p(qv, e);
      mpz_pow_ui(t.key.get_mpz_t(), qv.get_mpz_t(), std::max<std::uint64_t>(1, t.nu));
      const double ll = std::log2(std::max(1.0, std::log2(t.key.get_d())));
      t.value = std::max(0.0, ll);
      if (!have || t.key < rep.best.key) {
        rep.best = t;
        have = true;
      }
      rep.terms.push_back(std::move(t));
    }
  }
  return rep;
}

BoundReport combine_upper(const SymbolicPow& s, std::span<const std::int64_t> solver_hits) {
  BoundReport rep;
  rep.entries.push_back(nondivisor_entry(s));
  const auto c = upper_log_bounds(s);
  rep.entries.push_back(c.log_u);
  rep.entries.push_back(c.log_r);
  rep.entries.push_back(c.log_nu2);
  collect(rep, solver_hits);
  return rep;
}

BoundReport combine_upper(const Natural& u, std::span<const std::int64_t> solver_hits) {
  if (u < 1) throw PreconditionError("combine_upper: u must be >= 1");
  if (nt::is_oddless(u)) {
    BoundReport rep;
    rep.power_of_two = true;
    rep.best_source = "strategy";
    return rep;
  }
  return combine_upper(SymbolicPow::from_natural(u), solver_hits);
}

}  // namespace powg::bounds

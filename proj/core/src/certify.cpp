#include "powg/certify.hpp"

#include <functional>

#include "powg/bounds.hpp"
#include "powg/directed_log.hpp"
#include "powg/error.hpp"

namespace powg::certify {
namespace {

Natural pow_ui(const Natural& b, unsigned long e) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

/// Number of n in Z^t with |n|_1 <= N, saturating at `cap`.
std::uint64_t ball_size(std::size_t t, const Natural& N, std::uint64_t cap) {
  // |{n in Z^t : |n|_1 <= N}| = sum_i 2^i C(t, i) C(N, i).
  Natural total = 0;
  Natural binom_t = 1;
  Natural binom_n = 1;
  Natural two = 1;
  for (std::size_t i = 0; i <= t; ++i) {
    if (i > 0) {
      binom_t = binom_t * Natural(static_cast<unsigned long>(t - i + 1)) / Natural(static_cast<unsigned long>(i));
      binom_n = binom_n * (N - Natural(static_cast<unsigned long>(i - 1))) / Natural(static_cast<unsigned long>(i));
      two *= 2;
    }
    if (binom_n <= 0) break;
    total += two * binom_t * binom_n;
  }
  if (total > Natural(static_cast<unsigned long>(cap))) return cap + 1;
  return total.get_ui();
}

}  // namespace

const DnbRow& DnbTable::row(int k) const {
  if (k < 1 || k > kmax()) throw PreconditionError("dnb row " + std::to_string(k) + " not in table");
  return rows[static_cast<std::size_t>(k - 1)];
}

DnbTable dnb_table(const Natural& v, int kmax) {
  if (kmax < 1 || kmax > kMaxDnbRows) {
    throw PreconditionError("dnb_table: kmax must be in 1.." + std::to_string(kMaxDnbRows));
  }
  if (v < 2) throw PreconditionError("dnb_table: v must be >= 2");
  DnbTable t;
  t.v = v;
  t.rows.push_back({1, 1, 3, 0, 0});
  for (int k = 1; k < kmax; ++k) {
    const DnbRow& cur = t.rows.back();
    DnbRow next;
    next.k = k + 1;
    next.D = cur.D * nt::lcm_range(cur.N.get_ui());
    next.N = cur.N * cur.N;
    next.B = 2 * cur.N * cur.B + cur.N * cur.N * dlog::ceil_mul_log2(cur.D, v);
    t.rows.push_back(std::move(next));
  }
  for (auto& row : t.rows) {
    Natural sum = 0;
    for (int i = 1; i < row.k; ++i) {
      Natural term = t.rows[static_cast<std::size_t>(i - 1)].D + 1;
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(row.k - 1 - i));
      sum += term;
    }
    row.Bprime = row.N * sum;
  }
  return t;
}

CertificateResult check_certificate(const CertificateQuery& q, std::uint64_t tuple_budget) {
  const std::size_t t = q.l.size();
  if (t == 0 || t != q.r.size()) throw PreconditionError("certificate: l and r must be nonempty and equal length");
  if (t > kMaxCertificateArity) {
    throw PreconditionError("certificate: at most " + std::to_string(kMaxCertificateArity) + " exponent pairs");
  }
  if (q.k < 1 || q.k > kMaxDnbRows) throw PreconditionError("certificate: k must be in 1..6");
  for (std::size_t i = 0; i < t; ++i) {
    if (q.l[i] < 0 || q.r[i] < 0) throw PreconditionError("certificate: exponents must be >= 0");
  }
  const DnbTable table = dnb_table(q.v, q.k);
  const DnbRow& row = table.row(q.k);

  CertificateResult res;
  res.divisibility = true;
  for (const auto& r : q.r) {
    if (!mpz_divisible_p(r.get_mpz_t(), row.D.get_mpz_t())) res.divisibility = false;
  }

  if (t == 1) {
    res.exponent_gap = q.r[0] == 0 || q.l[0] >= row.B;
    res.tuples_checked = 1;
    if (!res.exponent_gap) res.counterexample = std::vector<std::int64_t>{1};
  } else {
    if (ball_size(t, row.N, tuple_budget) > tuple_budget) {
      throw BudgetExceeded("certificate: enumeration over |n|_1 <= " + row.N.get_str() + " exceeds budget");
    }
    const auto N = static_cast<std::int64_t>(row.N.get_ui());
    std::vector<std::int64_t> n(t, 0);
    res.exponent_gap = true;
    std::function<bool(std::size_t, std::int64_t, const Natural&, const Natural&)> rec =
        [&](std::size_t i, std::int64_t left, const Natural& sr, const Natural& sl) -> bool {
      if (i == t) {
        ++res.tuples_checked;
        if (sr > 0 && sl < row.B) {
          res.counterexample = n;
          return false;
        }
        return true;
      }
      for (std::int64_t x = -left; x <= left; ++x) {
        n[i] = x;
        const Natural xv = x;
        if (!rec(i + 1, left - (x < 0 ? -x : x), sr + xv * q.r[i], sl + xv * q.l[i])) return false;
      }
      return true;
    };
    res.exponent_gap = rec(0, N, Natural(0), Natural(0));
  }
  res.certified = res.divisibility && res.exponent_gap;
  return res;
}

int best_single_certificate(const SymbolicPow& s, const DnbTable& table) {
  for (int k = table.kmax(); k >= 1; --k) {
    const DnbRow& row = table.row(k);
    if (s.l >= row.B && s.r_divisible_by(row.D)) return k;
  }
  return 1;
}

LowerBoundFormula lower_bound_formula(const SymbolicPow& s) {
  LowerBoundFormula f;
  f.d = s.least_nondivisor_of_r();
  f.d_term = static_cast<std::int64_t>(nt::floor_log2(Natural(static_cast<unsigned long>(nt::ceil_log(3, f.d))))) + 1;
  {
    std::int64_t m = 0;
    Natural bound = 3;
    while (f.d > bound) {
      bound *= bound;
      ++m;
    }
    f.simple_loglog3 = m;
  }
  f.simple_floorlog = static_cast<std::int64_t>(nt::floor_log2(Natural(static_cast<unsigned long>(nt::ceil_log2(f.d)))));

  if (dlog::compare_with_mul_log2(s.l, Natural(100'000'000), s.v) < 0) {
    f.reason = "l / log2 v < 10^8";
    return f;
  }
  f.applicable = true;
  // floor(log log_3 log_4 X) >= m  iff  X >= 4^(3^(2^m)).
  const std::uint64_t lbits = nt::bit_length(s.l);
  std::int64_t m = 0;
  Natural three_pow = 3;  // 3^(2^m)
  for (;;) {
    const Natural next = three_pow * three_pow;
    if (2 * next > Natural(static_cast<unsigned long>(lbits + 1))) break;
    Natural threshold = 1;
    mpz_mul_2exp(threshold.get_mpz_t(), threshold.get_mpz_t(), 2 * next.get_ui());
    if (dlog::compare_with_mul_log2(s.l, threshold, s.v) < 0) break;
    three_pow = next;
    ++m;
  }
  f.l_term = m + 3;
  f.value = std::min(f.d_term, f.l_term);
  return f;
}

FactorialSandwichReport factorial_sandwich(int k) {
  if (k < 0 || k > 4) throw PreconditionError("factorial_sandwich: k must be in 0..4");
  FactorialSandwichReport rep;
  rep.k = k;
  rep.m = std::uint64_t{1} << (std::uint64_t{1} << k);
  Natural fact;
  mpz_fac_ui(fact.get_mpz_t(), rep.m);
  const Natural m = static_cast<unsigned long>(rep.m);

  const DnbTable table = dnb_table(3, k + 1);
  const DnbRow& target = table.row(k + 1);
  rep.d_digits = target.D.get_str().size();

  bool per_prime = true;
  if (k >= 1) {
    const std::uint64_t pmax = table.row(k).N.get_ui();
    for (auto p : nt::primes_up_to(pmax)) {
      PrimeCheck pc;
      pc.p = p;
      for (int i = 1; i <= k; ++i) pc.nu_d += nt::floor_log(p, table.row(i).N);
      pc.nu_r = nt::nu_p_factorial(Natural(static_cast<unsigned long>(p)), m);
      if (Natural(static_cast<unsigned long>(pc.nu_d)) > pc.nu_r) per_prime = false;
      if (pc.nu_d != nt::nu_p(Natural(static_cast<unsigned long>(p)), target.D)) per_prime = false;
      rep.primes.push_back(std::move(pc));
    }
  }
  rep.divisibility = per_prime && mpz_divisible_p(fact.get_mpz_t(), target.D.get_mpz_t()) != 0;
  rep.exponent = fact >= target.B;

  SymbolicPow s = SymbolicPow::make(3, fact, fact);
  s.l_factorial_of = rep.m;
  s.r_factorial_of = rep.m;
  rep.certified_lower = rep.divisibility && rep.exponent ? k + 1 : best_single_certificate(s, table);
  rep.d = s.least_nondivisor_of_r();
  rep.upper = bounds::upper_nondivisor(s);
  return rep;
}

mpq_class alpha(int j) {
  if (j < 1 || j > 8) throw PreconditionError("alpha: j must be in 1..8");
  const unsigned long top = 1ul << j;
  mpq_class sum = 0;
  for (int i = 0; i <= j; ++i) {
    mpq_class term(1, pow_ui(3, top - (1ul << i)));
    term.canonicalize();
    sum += term;
  }
  return sum;
}

}  // namespace powg::certify

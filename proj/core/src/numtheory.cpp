#include "powg/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "powg/error.hpp"

namespace powg {

Natural parse_natural(const std::string& decimal) {
  if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(),
                                      [](unsigned char c) { return c >= '0' && c <= '9'; })) {
    throw PreconditionError("not a decimal natural number: '" + decimal + "'");
  }
  return Natural(decimal, 10);
}

std::string to_string(const Natural& n) { return n.get_str(10); }

namespace nt {
namespace {

Natural product_tree(std::vector<Natural>& xs, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return 1;
  if (hi - lo == 1) return xs[lo];
  if (hi - lo == 2) return xs[lo] * xs[lo + 1];
  const std::size_t mid = lo + (hi - lo) / 2;
  return product_tree(xs, lo, mid) * product_tree(xs, mid, hi);
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's cycle-finding variant of Pollard rho; returns a nontrivial factor of
// the odd composite n.
Natural pollard_brent(const Natural& n, unsigned long seed) {
  for (unsigned long c = seed;; ++c) {
    Natural y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    constexpr unsigned long kBatch = 128;
    auto f = [&](const Natural& v) {
      Natural out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          Natural diff = x - y;
          mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += kBatch;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Natural diff = x - ys;
        mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
        g = gcd(diff, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Natural& n, std::vector<Natural>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Natural s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    factor_into(s, out);
    factor_into(s, out);
    return;
  }
  const Natural d = pollard_brent(n, 1);
  factor_into(d, out);
  factor_into(Natural(n / d), out);
}

}  // namespace

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Natural next_prime_after(const Natural& n) {
  Natural p;
  mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
  while (!is_prime(p)) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return p;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i <= n / i) {
      for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
  }
  return primes;
}

Factorization factorize(const Natural& n) {
  if (n < 1) throw PreconditionError("factorize: n must be >= 1");
  Factorization result;
  Natural rest = n;
  for (unsigned long p = 2; p < (1UL << 16) && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    result.push_back({Natural(p), e});
  }
  if (rest > 1) {
    std::vector<Natural> big;
    factor_into(rest, big);
    std::sort(big.begin(), big.end());
    for (const auto& p : big) {
      if (!result.empty() && result.back().prime == p) {
        ++result.back().exponent;
      } else {
        result.push_back({p, 1});
      }
    }
  }
  return result;
}

Natural reconstruct(const Factorization& f) {
  Natural out = 1;
  for (const auto& [p, e] : f) {
    Natural pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    out *= pe;
  }
  return out;
}

std::uint64_t nu_p(const Natural& p, const Natural& n) {
  if (p < 2) throw PreconditionError("nu_p: p must be prime");
  if (n == 0) throw InfiniteValuation();
  if (n < 0) throw PreconditionError("nu_p: n must be positive");
  Natural rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Natural nu_p_factorial(const Natural& p, const Natural& m) {
  if (p < 2) throw PreconditionError("nu_p_factorial: p must be prime");
  Natural total = 0;
  Natural q = m / p;
  while (q > 0) {
    total += q;
    q /= p;
  }
  return total;
}

Natural lcm_range(std::uint64_t n) {
  if (n < 2) return 1;
  const auto primes = primes_up_to(n);
  std::vector<Natural> factors;
  factors.reserve(primes.size());
  // Primes above sqrt(n) appear to the first power; batch them into machine
  // words before they enter the product tree.
  std::uint64_t word = 1;
  for (const auto p : primes) {
    std::uint64_t pe = p;
    while (pe <= n / p) pe *= p;
    if (pe == p && word <= UINT64_MAX / p) {
      word *= p;
      continue;
    }
    if (pe == p) {
      factors.emplace_back(static_cast<unsigned long>(word));
      word = p;
      continue;
    }
    factors.emplace_back(static_cast<unsigned long>(pe));
  }
  if (word > 1) factors.emplace_back(static_cast<unsigned long>(word));
  return product_tree(factors, 0, factors.size());
}

LcmSweep::LcmSweep(std::uint64_t limit) : limit_(limit), smallest_factor_(limit + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (smallest_factor_[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (smallest_factor_[j] == 0) smallest_factor_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

void LcmSweep::advance() {
  if (n_ >= limit_) throw PreconditionError("LcmSweep: advanced past limit");
  ++n_;
  const std::uint64_t p = smallest_factor_[n_];
  std::uint64_t m = n_;
  while (m % p == 0) m /= p;
  if (m == 1) value_ *= static_cast<unsigned long>(p);
}

void LcmSweep::advance_to(std::uint64_t target) {
  while (n_ < target) advance();
}

Natural integer_root(const Natural& u, std::uint64_t d) {
  if (u < 1) throw PreconditionError("integer_root: u must be >= 1");
  if (d < 1) throw PreconditionError("integer_root: d must be >= 1");
  Natural r;
  mpz_root(r.get_mpz_t(), u.get_mpz_t(), d);
  return r;
}

bool is_oddless(const Natural& u) {
  if (u < 1) throw PreconditionError("is_oddless: u must be >= 1");
  return mpz_scan1(u.get_mpz_t(), 0) + 1 == mpz_sizeinbase(u.get_mpz_t(), 2);
}

PowerDecomposition power_decompose(const Natural& u) {
  if (u < 1) throw PreconditionError("power_decompose: u must be >= 1");
  const std::uint64_t l = mpz_scan1(u.get_mpz_t(), 0);
  Natural odd;
  mpz_tdiv_q_2exp(odd.get_mpz_t(), u.get_mpz_t(), l);
  if (odd == 1) return PowerOfTwo{l};
  // odd = v^r with v not a perfect power: odd is a q-th power iff q | r, so
  // peeling prime roots greedily recovers r and v.
  std::uint64_t r = 1;
  for (unsigned long q = 2; q < mpz_sizeinbase(odd.get_mpz_t(), 2);) {
    Natural root;
    if (mpz_root(root.get_mpz_t(), odd.get_mpz_t(), q) != 0) {
      odd = root;
      r *= q;
      continue;
    }
    do {
      ++q;
    } while (!mpz_probab_prime_p(Natural(q).get_mpz_t(), 25));
  }
  return OddPowerForm{l, odd, r};
}

Natural materialize(const PowerDecomposition& d) {
  Natural out = 1;
  if (const auto* p2 = std::get_if<PowerOfTwo>(&d)) {
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), p2->exponent);
    return out;
  }
  const auto& f = std::get<OddPowerForm>(d);
  mpz_pow_ui(out.get_mpz_t(), f.base.get_mpz_t(), f.exponent);
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), f.two_adic);
  return out;
}

bool is_perfect_power(const Natural& n) {
  return n > 1 && mpz_perfect_power_p(n.get_mpz_t()) != 0;
}

Natural least_nondivisor(const Natural& r) {
  if (r < 1) throw PreconditionError("least_nondivisor: r must be >= 1");
  for (unsigned long d = 2;; ++d) {
    if (!mpz_divisible_ui_p(r.get_mpz_t(), d)) return Natural(d);
  }
}

std::uint64_t bit_length(const Natural& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::uint64_t floor_log2(const Natural& x) {
  if (x <= 1) return 0;
  return bit_length(x) - 1;
}

std::uint64_t ceil_log2(const Natural& x) {
  if (x <= 1) return 0;
  return bit_length(Natural(x - 1));
}

std::uint64_t ceil_log(std::uint64_t base, const Natural& x) {
  if (base < 2) throw PreconditionError("ceil_log: base must be >= 2");
  std::uint64_t c = 0;
  Natural power = 1;
  while (power < x) {
    power *= static_cast<unsigned long>(base);
    ++c;
  }
  return c;
}

std::uint64_t floor_log(std::uint64_t base, const Natural& x) {
  if (base < 2) throw PreconditionError("floor_log: base must be >= 2");
  if (x <= 1) return 0;
  std::uint64_t c = 0;
  Natural power = base;
  while (power <= x) {
    power *= static_cast<unsigned long>(base);
    ++c;
  }
  return c;
}

std::uint64_t iterated_ceil_log2(const Natural& x, int times) {
  Natural v = x;
  for (int i = 0; i < times; ++i) v = static_cast<unsigned long>(ceil_log2(v));
  return v.get_ui();
}

}  // namespace nt
}  // namespace powg

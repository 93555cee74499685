#pragma once

// Exact number-theoretic kernel: valuations, lcm ranges, perfect-power
// decomposition, integer roots and the integer logarithm conventions used by
// every discrete bound in the library.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace powg {

/// Nonnegative arbitrary-precision integer.
using Natural = mpz_class;

Natural parse_natural(const std::string& decimal);
std::string to_string(const Natural& n);

namespace nt {

struct PrimePower {
  Natural prime;
  std::uint64_t exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
using Factorization = std::vector<PrimePower>;

// ---------------------------------------------------------------------------
// Primes

bool is_prime(const Natural& n);
Natural next_prime_after(const Natural& n);

/// All primes p <= n (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Trial division for small factors, Brent's variant of Pollard rho for the rest.
Factorization factorize(const Natural& n);
Natural reconstruct(const Factorization& f);

// ---------------------------------------------------------------------------
// Valuations and lcm

/// Exponent of p in n. Throws InfiniteValuation for n == 0.
std::uint64_t nu_p(const Natural& p, const Natural& n);

/// nu_p(m!) by Legendre's formula; m! is never materialized.
Natural nu_p_factorial(const Natural& p, const Natural& m);

/// lcm{1, ..., n} as the product of p^floor(log_p n) over primes p <= n.
Natural lcm_range(std::uint64_t n);

/// Incremental lcm{1..n}: each advance() multiplies in p when n is a power of p.
class LcmSweep {
 public:
  explicit LcmSweep(std::uint64_t limit);

  std::uint64_t n() const { return n_; }
  const Natural& value() const { return value_; }
  void advance();
  void advance_to(std::uint64_t target);

 private:
  std::uint64_t limit_;
  std::uint64_t n_ = 1;
  Natural value_ = 1;
  std::vector<std::uint32_t> smallest_factor_;
};

// ---------------------------------------------------------------------------
// Powers and roots

/// floor(u^(1/d)).
Natural integer_root(const Natural& u, std::uint64_t d);

/// True iff u is a power of two (no odd divisor above 1).
bool is_oddless(const Natural& u);

struct PowerOfTwo {
  std::uint64_t exponent = 0;
  friend bool operator==(const PowerOfTwo&, const PowerOfTwo&) = default;
};

/// u = 2^two_adic * base^exponent with base odd, > 1 and not a perfect power.
struct OddPowerForm {
  std::uint64_t two_adic = 0;
  Natural base;
  std::uint64_t exponent = 1;
  friend bool operator==(const OddPowerForm&, const OddPowerForm&) = default;
};

using PowerDecomposition = std::variant<PowerOfTwo, OddPowerForm>;

PowerDecomposition power_decompose(const Natural& u);
Natural materialize(const PowerDecomposition& d);

/// True iff n = b^k for some k >= 2.
bool is_perfect_power(const Natural& n);

/// Smallest d >= 2 with d not dividing r.
Natural least_nondivisor(const Natural& r);

// ---------------------------------------------------------------------------
// Logarithm conventions
//
// log x means max(0, log2 x). Every discrete quantity built from logarithms is
// computed from bit lengths and exact integer comparisons.

std::uint64_t bit_length(const Natural& x);

/// floor(log x), 0 for x <= 1.
std::uint64_t floor_log2(const Natural& x);

/// ceil(log x), 0 for x <= 1. Equals the least c >= 0 with 2^c >= x.
std::uint64_t ceil_log2(const Natural& x);

/// Least c >= 0 with base^c >= x.
std::uint64_t ceil_log(std::uint64_t base, const Natural& x);

/// Greatest c >= 0 with base^c <= x; 0 for x <= 1.
std::uint64_t floor_log(std::uint64_t base, const Natural& x);

/// ceil(log log ... log x) with `times` nested logs. Since ceil(log y) <= m iff
/// y <= 2^m for integer m, this equals ceil_log2 applied `times` times.
std::uint64_t iterated_ceil_log2(const Natural& x, int times);

}  // namespace nt
}  // namespace powg
